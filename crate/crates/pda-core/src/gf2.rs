//! Dense linear algebra over GF(2).
//!
//! Vectors are packed into `u64` words. Everything here is small (a few
//! hundred columns at most), so no attempt is made at blocking tricks.

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones() & 1;
        }
        acc == 1
    }
}

/// Row-major matrix; `rows[i]` has length `ncols`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<BitVec>,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            ncols,
            rows: (0..nrows).map(|_| BitVec::zeros(ncols)).collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.rows[r].set(c, v)
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.rows[r].flip(c)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.ncols, self.nrows);
        for r in 0..self.nrows {
            for c in self.rows[r].ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Matrix-vector product `M v` with `v` of length `ncols`.
    pub fn apply(&self, v: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.nrows);
        for r in 0..self.nrows {
            if self.rows[r].dot(v) {
                out.set(r, true);
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let ot = other.transpose();
        let mut out = Matrix::zeros(self.nrows, other.ncols);
        for r in 0..self.nrows {
            for c in 0..other.ncols {
                if self.rows[r].dot(&ot.rows[c]) {
                    out.set(r, c, true);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    pub fn rank(&self) -> usize {
        rank_of(self.rows.clone())
    }

    /// Basis of `{ v : M v = 0 }`.
    pub fn kernel(&self) -> Vec<BitVec> {
        let (red, pivots) = rref(self.rows.clone(), self.ncols);
        let pivot_cols: Vec<usize> = pivots.clone();
        let mut is_pivot = vec![false; self.ncols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::unit(self.ncols, free);
            for (row, &pc) in red.iter().zip(&pivot_cols) {
                if row.get(free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `M x = b`, if one exists.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        // Augment with b as an extra column.
        let n = self.ncols;
        let rows: Vec<BitVec> = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut v = BitVec::zeros(n + 1);
                for c in row.ones() {
                    v.set(c, true);
                }
                if b.get(r) {
                    v.set(n, true);
                }
                v
            })
            .collect();
        let (red, pivots) = rref(rows, n + 1);
        if pivots.iter().any(|&c| c == n) {
            return None;
        }
        let mut x = BitVec::zeros(n);
        for (row, &pc) in red.iter().zip(&pivots) {
            if row.get(n) {
                x.set(pc, true);
            }
        }
        Some(x)
    }
}

/// Reduced row echelon form of the given rows. Returns the non-zero reduced
/// rows and their pivot columns (in increasing order).
pub fn rref(mut rows: Vec<BitVec>, ncols: usize) -> (Vec<BitVec>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank_of(rows: Vec<BitVec>) -> usize {
    let mut basis: Vec<BitVec> = Vec::new();
    let mut leads: Vec<usize> = Vec::new();
    for mut v in rows {
        for (b, &l) in basis.iter().zip(&leads) {
            if v.get(l) {
                v.xor_assign(b);
            }
        }
        if let Some(l) = v.first_one() {
            // keep basis reduced on the new lead
            for b in basis.iter_mut() {
                if b.get(l) {
                    b.xor_assign(&v);
                }
            }
            basis.push(v);
            leads.push(l);
        }
    }
    basis.len()
}

/// Dimension of the span of a family of vectors.
pub fn span_dim(vectors: &[BitVec]) -> usize {
    rank_of(vectors.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> Matrix {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut out = Matrix::zeros(rows.len(), ncols);
        for (i, r) in rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                out.set(i, j, x == 1);
            }
        }
        out
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).is_zero());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, 1]]);
        let mut b = BitVec::zeros(2);
        b.set(0, true);
        assert!(a.solve(&b).is_none());
        b.set(1, true);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b);
    }
}
