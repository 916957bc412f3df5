//! Exact span membership by Gauss–Jordan elimination over [`CScalar`].

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::{CScalar, Field};

/// Sparse vector over matrix positions `(row, col)`.
pub type EntryVector = BTreeMap<(usize, usize), CScalar>;

pub(crate) fn axpy(target: &mut EntryVector, factor: &CScalar, source: &EntryVector) {
    for (pos, v) in source {
        let slot = target.entry(*pos).or_default();
        *slot = &*slot + &(factor * v);
        if slot.is_zero() {
            target.remove(pos);
        }
    }
}

struct EchelonRow {
    pivot: (usize, usize),
    vector: EntryVector,
    // coefficients expressing `vector` in the original generators
    combo: Vec<CScalar>,
}

/// Reduced row-echelon form of a list of linearly independent vectors.
pub struct SpanSolver {
    rows: Vec<EchelonRow>,
    len: usize,
}

impl SpanSolver {
    /// Returns the index of the first vector that depends on its
    /// predecessors if the input is not linearly independent.
    pub fn new(vectors: &[EntryVector]) -> Result<Self, usize> {
        let len = vectors.len();
        let mut rows: Vec<EchelonRow> = Vec::with_capacity(len);
        for (idx, v) in vectors.iter().enumerate() {
            let mut vector = v.clone();
            let mut combo = vec![CScalar::zero(); len];
            combo[idx] = CScalar::one();
            for row in &rows {
                if let Some(f) = vector.get(&row.pivot).cloned() {
                    let neg = -f;
                    axpy(&mut vector, &neg, &row.vector);
                    for (c, r) in combo.iter_mut().zip(&row.combo) {
                        *c = &*c + &(&neg * r);
                    }
                }
            }
            let Some((&pivot, lead)) = vector.iter().next() else {
                return Err(idx);
            };
            let inv = lead.inverse().expect("nonzero pivot");
            for value in vector.values_mut() {
                *value = &*value * &inv;
            }
            for c in combo.iter_mut() {
                *c = &*c * &inv;
            }
            for row in rows.iter_mut() {
                if let Some(f) = row.vector.get(&pivot).cloned() {
                    let neg = -f;
                    axpy(&mut row.vector, &neg, &vector);
                    for (c, r) in row.combo.iter_mut().zip(&combo) {
                        *c = &*c + &(&neg * r);
                    }
                }
            }
            rows.push(EchelonRow { pivot, vector, combo });
        }
        Ok(SpanSolver { rows, len })
    }

    /// Coefficients `c` with `Σ c_k v_k = target`, or the nonzero residual
    /// left after projecting out the span.
    pub fn decompose(&self, target: &EntryVector) -> Result<Vec<CScalar>, EntryVector> {
        let mut residual = target.clone();
        let mut coeffs = vec![CScalar::zero(); self.len];
        for row in &self.rows {
            if let Some(f) = residual.get(&row.pivot).cloned() {
                axpy(&mut residual, &-f.clone(), &row.vector);
                for (c, r) in coeffs.iter_mut().zip(&row.combo) {
                    *c = &*c + &(&f * r);
                }
            }
        }
        if residual.is_empty() {
            Ok(coeffs)
        } else {
            Err(residual)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Surd;

    fn vec_of(entries: &[((usize, usize), CScalar)]) -> EntryVector {
        entries.iter().cloned().collect()
    }

    #[test]
    fn decomposes_with_surd_pivots() {
        let v1 = vec_of(&[((0, 0), CScalar::sqrt(2)), ((0, 1), CScalar::i())]);
        let v2 = vec_of(&[((0, 1), CScalar::sqrt(3)), ((1, 1), CScalar::from_int(1))]);
        let solver = SpanSolver::new(&[v1.clone(), v2.clone()]).unwrap();
        let a = CScalar::new(Surd::from_frac(1, 3), Surd::sqrt(6));
        let b = CScalar::from_int(-2);
        let mut target = EntryVector::new();
        axpy(&mut target, &a, &v1);
        axpy(&mut target, &b, &v2);
        assert_eq!(solver.decompose(&target).unwrap(), vec![a, b]);
    }

    #[test]
    fn reports_residual_outside_span() {
        let v1 = vec_of(&[((0, 0), CScalar::from_int(1))]);
        let solver = SpanSolver::new(&[v1]).unwrap();
        let target = vec_of(&[((0, 0), CScalar::from_int(2)), ((1, 0), CScalar::i())]);
        let residual = solver.decompose(&target).unwrap_err();
        assert_eq!(residual, vec_of(&[((1, 0), CScalar::i())]));
    }

    #[test]
    fn detects_dependence() {
        let v1 = vec_of(&[((0, 0), CScalar::from_int(1)), ((0, 1), CScalar::sqrt(2))]);
        let v2 = vec_of(&[((0, 0), CScalar::sqrt(2)), ((0, 1), CScalar::from_int(2))]);
        assert_eq!(SpanSolver::new(&[v1, v2]).err(), Some(1));
    }
}
