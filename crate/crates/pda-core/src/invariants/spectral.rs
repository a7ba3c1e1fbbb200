use std::collections::BTreeMap;

use super::LinearComplex;
use crate::diagram::GradingRing;
use crate::gf2::{span_dim, BitVec, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Homology,
    Cohomology,
}

/// Dimension tables of the word-length spectral sequence. `pages[r]` maps
/// `(p, n)` to `dim E^r`, where `p = word length - 1` and `n` is the total
/// degree (so `q = n - p`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralPages {
    pub direction: Direction,
    pub pages: Vec<BTreeMap<(i64, i64), usize>>,
}

impl SpectralPages {
    /// First page index after which nothing changes, if reached.
    pub fn stable_from(&self) -> Option<usize> {
        (0..self.pages.len().saturating_sub(1)).find(|&r| self.pages[r..].iter().all(|p| *p == self.pages[r]))
    }
}

/// `{ v in C_n : supp v in F_s, D v in F_{s-r} }`, or `F_s` for `r < 0`.
fn cycles(c: &LinearComplex, filt: &[i64], r: i64, s: i64, n: i64) -> Vec<BitVec> {
    let dim = c.basis.len();
    let cols: Vec<usize> = (0..dim).filter(|&i| c.degrees[i] == n && filt[i] <= s).collect();
    if r < 0 {
        return cols.iter().map(|&i| BitVec::unit(dim, i)).collect();
    }
    let rows: Vec<usize> = (0..dim).filter(|&j| filt[j] > s - r).collect();
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (a, &j) in rows.iter().enumerate() {
        for (b, &i) in cols.iter().enumerate() {
            if c.matrix.get(j, i) {
                m.set(a, b, true);
            }
        }
    }
    m.kernel()
        .into_iter()
        .map(|k| {
            let mut v = BitVec::zeros(dim);
            for b in k.ones() {
                v.set(cols[b], true);
            }
            v
        })
        .collect()
}

/// Pages `E^0 .. E^{last}` of the spectral sequence of the word-length
/// filtration (ascending for homology, descending for cohomology).
pub fn spectral_sequence(c: &LinearComplex, ring: GradingRing, direction: Direction, last: usize) -> SpectralPages {
    let p: Vec<i64> = c.levels.iter().map(|&l| l as i64 - 1).collect();
    let filt: Vec<i64> = match direction {
        Direction::Homology => p.clone(),
        Direction::Cohomology => p.iter().map(|x| -x).collect(),
    };
    let mut degrees = c.degrees.clone();
    degrees.sort_unstable();
    degrees.dedup();
    let mut svals = filt.clone();
    svals.sort_unstable();
    svals.dedup();
    let mut pages = Vec::new();
    for r in 0..=last as i64 {
        let mut page = BTreeMap::new();
        for &s in &svals {
            for &n in &degrees {
                let z = cycles(c, &filt, r, s, n);
                if z.is_empty() {
                    continue;
                }
                let mut b = cycles(c, &filt, r - 1, s - 1, n);
                let src = ring.norm(n - c.step);
                for v in cycles(c, &filt, r - 1, s + r - 1, src) {
                    b.push(c.matrix.apply(&v));
                }
                let dim = z.len() - span_dim(&b);
                if dim > 0 {
                    let pp = match direction {
                        Direction::Homology => s,
                        Direction::Cohomology => -s,
                    };
                    page.insert((pp, n), dim);
                }
            }
        }
        pages.push(page);
    }
    SpectralPages { direction, pages }
}

/// `P(t) = sum dim H_n t^n`.
pub fn poincare_polynomial(c: &LinearComplex, ring: GradingRing) -> BTreeMap<i64, usize> {
    c.betti(ring)
}

/// Three-variable polynomial: `(t, x, y)` exponents to coefficient.
pub type Poly3 = BTreeMap<(i64, i64, i64), usize>;

/// `sum_{r = 1..=last} dim E^r_{p,q} t^{q-p} x^{r-1} y^p`.
pub fn spectral_poincare(pages: &SpectralPages, last: usize) -> Poly3 {
    let mut out = Poly3::new();
    for r in 1..=last.min(pages.pages.len().saturating_sub(1)) {
        for (&(p, n), &dim) in &pages.pages[r] {
            let q = n - p;
            *out.entry((q - p, r as i64 - 1, p)).or_insert(0) += dim;
        }
    }
    out
}
