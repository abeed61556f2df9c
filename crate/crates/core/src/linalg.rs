//! Dense linear algebra over a finite field, on raw element codes.
//!
//! Used for minimal polynomials in large extensions, Gram-matrix and null-space
//! cross-checks, and the parity-check rank certificate in the distance engine.

use crate::gf::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u128>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<u128>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> u128 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u128) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u128] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: &FieldSpec) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let v = f.add_raw(out.get(i, j), f.mul_raw(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, f: &FieldSpec) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv_raw(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul_raw(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                let factor = self.get(i, c);
                if i == r || factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub_raw(self.get(i, j), f.mul_raw(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &FieldSpec) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn null_space(&self, f: &FieldSpec) -> Vec<Vec<u128>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u128; self.cols];
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg_raw(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Solves `self * x = rhs` when the columns are independent; `None` if inconsistent
    /// or underdetermined.
    pub fn solve(&self, rhs: &[u128], f: &FieldSpec) -> Option<Vec<u128>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, rhs[r]);
        }
        let pivots = aug.rref(f);
        if pivots.len() != self.cols || pivots.contains(&self.cols) {
            return None;
        }
        Some((0..self.cols).map(|r| aug.get(r, self.cols)).collect())
    }
}

/// Incremental echelon basis: push vectors one at a time and learn whether each is
/// independent of those already kept.
#[derive(Debug, Clone)]
pub(crate) struct EchelonBasis {
    rows: Vec<(usize, Vec<u128>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis { rows: Vec::new() }
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Returns false (and leaves the basis unchanged) when `v` is dependent.
    pub fn push(&mut self, mut v: Vec<u128>, f: &FieldSpec) -> bool {
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = f.sub_raw(*x, f.mul_raw(c, r));
                    }
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv_raw(v[pivot]).expect("nonzero");
        for x in v.iter_mut() {
            *x = f.mul_raw(*x, inv);
        }
        self.rows.push((pivot, v));
        true
    }

    pub fn pop(&mut self) {
        self.rows.pop();
    }
}
