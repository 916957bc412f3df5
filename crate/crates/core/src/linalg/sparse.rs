use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::Zero;

use super::{CScalar, Conjugate, Matrix};

/// Sparse square matrix over [`CScalar`], keyed by `(row, col)`.
///
/// Truncated Fock-space operators have a handful of nonzeros per column, so
/// products stay cheap even when the dense form would not.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseMatrix {
    dim: usize,
    entries: BTreeMap<(usize, usize), CScalar>,
}

impl SparseMatrix {
    pub fn zeros(dim: usize) -> Self {
        SparseMatrix {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = SparseMatrix::zeros(dim);
        for k in 0..dim {
            m.add_at(k, k, CScalar::from_int(1));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_at(&mut self, row: usize, col: usize, value: CScalar) {
        assert!(row < self.dim && col < self.dim, "entry ({row}, {col}) out of range");
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry((row, col)).or_default();
        *slot = &*slot + &value;
        if slot.is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn get(&self, row: usize, col: usize) -> CScalar {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &CScalar)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, s: &CScalar) -> Self {
        let mut out = SparseMatrix::zeros(self.dim);
        for (r, c, v) in self.iter() {
            out.add_at(r, c, v * s);
        }
        out
    }

    pub fn add(&self, other: &SparseMatrix) -> Self {
        assert_eq!(self.dim, other.dim, "sparse dimension mismatch");
        let mut out = self.clone();
        for (r, c, v) in other.iter() {
            out.add_at(r, c, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> Self {
        self.add(&other.scale(&CScalar::from_int(-1)))
    }

    pub fn mul(&self, other: &SparseMatrix) -> Self {
        assert_eq!(self.dim, other.dim, "sparse dimension mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, &CScalar)>> = BTreeMap::new();
        for (r, c, v) in other.iter() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = SparseMatrix::zeros(self.dim);
        for (r, k, a) in self.iter() {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    out.add_at(r, c, a * b);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &SparseMatrix) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn dagger(&self) -> Self {
        let mut out = SparseMatrix::zeros(self.dim);
        for (r, c, v) in self.iter() {
            out.add_at(c, r, v.conj());
        }
        out
    }

    /// Keeps entries whose row and column both satisfy `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Self {
        SparseMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .filter(|((r, c), _)| keep(*r) && keep(*c))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Matrix<CScalar> {
        Matrix::from_entries(self.dim, self.iter().map(|(r, c, v)| (r, c, v.clone())))
    }

    pub fn to_float(&self) -> Vec<(usize, usize, Complex64)> {
        self.iter().map(|(r, c, v)| (r, c, v.to_complex())).collect()
    }
}

impl From<&Matrix<CScalar>> for SparseMatrix {
    fn from(m: &Matrix<CScalar>) -> Self {
        let mut out = SparseMatrix::zeros(m.dim());
        for (r, c, v) in m.nonzero() {
            out.add_at(r, c, v.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::commutator;

    #[test]
    fn sparse_matches_dense_products() {
        let a = Matrix::from_entries(3, [(0, 1, CScalar::sqrt(2)), (1, 2, CScalar::i()), (2, 0, CScalar::from_int(3))]);
        let b = Matrix::from_entries(3, [(1, 0, CScalar::sqrt(6)), (2, 2, CScalar::from_frac(1, 2)), (0, 2, -CScalar::i())]);
        let (sa, sb) = (SparseMatrix::from(&a), SparseMatrix::from(&b));
        assert_eq!(sa.mul(&sb).to_dense(), &a * &b);
        assert_eq!(sa.commutator(&sb).to_dense(), commutator(&a, &b).unwrap());
        assert_eq!(sa.dagger().to_dense(), a.dagger());
    }

    #[test]
    fn restrict_drops_outside_entries() {
        let a = SparseMatrix::from(&Matrix::from_entries(3, [(0, 0, CScalar::from_int(1)), (0, 2, CScalar::from_int(1))]));
        let r = a.restrict(|k| k < 2);
        assert_eq!(r.nnz(), 1);
        assert_eq!(r.get(0, 0), CScalar::from_int(1));
    }
}
