use super::{level_generators, Augmentation};
use crate::algebra::FreeMfDGA;
use crate::error::AlgebraError;
use crate::gf2::{BitVec, Matrix};

/// A finite filtered complex over GF(2) with one basis vector per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearComplex {
    /// Generator indices of the basis.
    pub basis: Vec<usize>,
    pub degrees: Vec<i64>,
    /// Word length of each basis generator.
    pub levels: Vec<usize>,
    /// `matrix.get(i, j)`: coefficient of basis `i` in the image of basis `j`.
    pub matrix: Matrix,
    /// +1 for a cochain complex, -1 for a chain complex.
    pub step: i64,
}

impl LinearComplex {
    pub fn is_square_zero(&self) -> bool {
        self.matrix.mul(&self.matrix).is_zero()
    }

    fn degree_set(&self) -> Vec<i64> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d.dedup();
        d
    }

    fn block(&self, from: i64, to: i64) -> Matrix {
        let cols: Vec<usize> = (0..self.basis.len()).filter(|&i| self.degrees[i] == from).collect();
        let rows: Vec<usize> = (0..self.basis.len()).filter(|&i| self.degrees[i] == to).collect();
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (r, &i) in rows.iter().enumerate() {
            for (c, &j) in cols.iter().enumerate() {
                if self.matrix.get(i, j) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Betti numbers by degree. Degrees are taken literally, so in a
    /// periodic grading the map into a degree class is the one of `step`.
    pub fn betti(&self, ring: crate::diagram::GradingRing) -> std::collections::BTreeMap<i64, usize> {
        let mut out = std::collections::BTreeMap::new();
        for q in self.degree_set() {
            let n = self.degrees.iter().filter(|&&d| d == q).count();
            let outgoing = self.block(q, ring.norm(q + self.step)).rank();
            let incoming = self.block(ring.norm(q - self.step), q).rank();
            let dim = n - outgoing - incoming;
            if dim > 0 {
                out.insert(q, dim);
            }
        }
        out
    }
}

/// The complex `d^{el,er}` on generators of `F^level`.
pub fn bilinearized_complex(
    dga: &FreeMfDGA,
    el: &Augmentation,
    er: &Augmentation,
    level: usize,
) -> Result<LinearComplex, AlgebraError> {
    if el.level < level || er.level < level {
        return Err(AlgebraError::Unsupported(format!(
            "augmentations of level {} and {} do not cover level {level}",
            el.level, er.level
        )));
    }
    let basis = level_generators(dga, level);
    let index: std::collections::BTreeMap<usize, usize> =
        basis.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let n = basis.len();
    let mut matrix = Matrix::zeros(n, n);
    for (j, &g) in basis.iter().enumerate() {
        for t in dga.differential[g].terms() {
            let w = &t.word;
            for i in 0..w.len() {
                if el.eval_word(&w[..i]) && er.eval_word(&w[i + 1..]) {
                    matrix.flip(index[&w[i]], j);
                }
            }
        }
    }
    Ok(LinearComplex {
        degrees: basis.iter().map(|&g| dga.ring.norm(dga.generators[g].degree)).collect(),
        levels: basis.iter().map(|&g| dga.generators[g].level).collect(),
        basis,
        matrix,
        step: -1,
    })
}

/// The dual cochain complex, `<d v, w> = <v, d^{el,er} w>`.
pub fn cochain_complex(
    dga: &FreeMfDGA,
    el: &Augmentation,
    er: &Augmentation,
    level: usize,
) -> Result<LinearComplex, AlgebraError> {
    let mut c = bilinearized_complex(dga, el, er, level)?;
    c.matrix = c.matrix.transpose();
    c.step = 1;
    Ok(c)
}

/// Whether `el` and `er` are homotopic: `el + er` vanishes on the degree-0
/// cycles of `d^{el,er}`.
pub fn fundamental_class_zero(dga: &FreeMfDGA, el: &Augmentation, er: &Augmentation) -> Result<bool, AlgebraError> {
    let level = el.level.min(er.level);
    let c = bilinearized_complex(dga, el, er, level)?;
    let zero: Vec<usize> = (0..c.basis.len()).filter(|&i| c.degrees[i] == 0).collect();
    let target: Vec<usize> = (0..c.basis.len())
        .filter(|&i| c.degrees[i] == dga.ring.norm(-1))
        .collect();
    let mut m = Matrix::zeros(target.len(), zero.len());
    for (r, &i) in target.iter().enumerate() {
        for (col, &j) in zero.iter().enumerate() {
            if c.matrix.get(i, j) {
                m.set(r, col, true);
            }
        }
    }
    let mut f = BitVec::zeros(zero.len());
    for (col, &j) in zero.iter().enumerate() {
        let g = c.basis[j];
        if el.value(g) != er.value(g) {
            f.set(col, true);
        }
    }
    Ok(m.kernel().iter().all(|v| !v.dot(&f)))
}
