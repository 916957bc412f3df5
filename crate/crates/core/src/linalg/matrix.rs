use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{CScalar, Conjugate, Rational, Ring};
use crate::error::Error;

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        Matrix {
            dim,
            entries: vec![T::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Matrix::from_fn(dim, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let entries = (0..dim * dim).map(|idx| f(idx / dim, idx % dim)).collect();
        Matrix { dim, entries }
    }

    /// Builds from rows; panics unless the rows form a square array.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "rows must form a square array");
        Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Sparse construction from `(row, col, value)` triples; repeated
    /// positions accumulate.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut m = Matrix::zeros(dim);
        for (r, c, v) in entries {
            let slot: &mut T = &mut m.entries[r * dim + c];
            *slot = slot.clone() + &v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let dim = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / dim, idx % dim, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|v| v.clone() * s)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.dim, |r, c| self.get(c, r).clone())
    }

    pub fn trace(&self) -> T {
        (0..self.dim).fold(T::zero(), |acc, k| acc + self.get(k, k))
    }

    fn check_dims(&self, other: &Self) -> Result<(), Error> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_dims(other)?;
        Ok(Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_dims(other)?;
        Ok(Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_dims(other)?;
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let slot: &mut T = &mut out.entries[r * n + c];
                    *slot = slot.clone() + &(a.clone() * b);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exponent: u32) -> Self {
        (0..exponent).fold(Matrix::identity(self.dim), |acc, _| &acc * self)
    }

    /// Smallest `k ≤ dim` with `selfᵏ = 0`, if any.
    pub fn nilpotency_index(&self) -> Option<u32> {
        let mut power = Matrix::identity(self.dim);
        for k in 1..=self.dim as u32 {
            power = &power * self;
            if power.is_zero() {
                return Some(k);
            }
        }
        None
    }

    /// Row-major flattening.
    pub fn vectorize(&self) -> &[T] {
        &self.entries
    }
}

impl<T: Ring + Conjugate> Matrix<T> {
    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Matrix::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.dagger() == *self
    }
}

impl Matrix<CScalar> {
    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map(|v| v.scale(q))
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(CScalar::is_real)
    }

    /// Block matrix `pattern ⊗ inner`: each entry `p` of `pattern` is
    /// replaced by the block `p·inner`.
    pub fn kron(pattern: &Matrix<CScalar>, inner: &Matrix<CScalar>) -> Self {
        let (n, m) = (pattern.dim, inner.dim);
        Matrix::from_fn(n * m, |r, c| pattern.get(r / m, c / m).clone() * inner.get(r % m, c % m))
    }
}

/// `ab − ba`.
pub fn commutator<T: Ring>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>, Error> {
    a.try_mul(b)?.try_sub(&b.try_mul(a)?)
}

/// Terminating exponential series `Σ mᵏ/k!` of a nilpotent matrix.
pub fn exp_nilpotent(m: &Matrix<CScalar>) -> Result<Matrix<CScalar>, Error> {
    let index = m.nilpotency_index().ok_or(Error::NotNilpotent { dim: m.dim() })?;
    let mut sum = Matrix::identity(m.dim());
    let mut term = Matrix::identity(m.dim());
    for k in 1..index {
        term = (&term * m).scale_rational(&Rational::new(1.into(), (k as i64).into()));
        sum = &sum + &term;
    }
    Ok(sum)
}

impl<'a, T: Ring> Add<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_add(rhs).expect("matrix dimensions must agree")
    }
}

impl<'a, T: Ring> Sub<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_sub(rhs).expect("matrix dimensions must agree")
    }
}

impl<'a, T: Ring> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|v| -v.clone())
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let cells: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("dim", &self.dim)
            .field("nonzero", &self.nonzero().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(n: i64) -> CScalar {
        CScalar::from_int(n)
    }

    #[test]
    fn identity_commutes_with_everything() {
        let m = Matrix::from_rows(vec![
            vec![c(1), CScalar::i(), c(0), c(2)],
            vec![c(0), c(3), c(-1), c(0)],
            vec![CScalar::sqrt(2), c(0), c(0), c(1)],
            vec![c(0), c(0), c(5), CScalar::i()],
        ]);
        assert!(commutator(&Matrix::identity(4), &m).unwrap().is_zero());
    }

    #[test]
    fn commutator_dimension_mismatch() {
        let a = Matrix::<CScalar>::identity(2);
        let b = Matrix::<CScalar>::identity(3);
        assert!(matches!(
            commutator(&a, &b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn dagger_of_diagonal_phase() {
        let d = Matrix::from_rows(vec![vec![CScalar::i(), c(0)], vec![c(0), -CScalar::i()]]);
        let expected = Matrix::from_rows(vec![vec![-CScalar::i(), c(0)], vec![c(0), CScalar::i()]]);
        assert_eq!(d.dagger(), expected);
        assert_eq!(Matrix::<CScalar>::zeros(3).dagger(), Matrix::zeros(3));
    }

    #[test]
    fn exp_nilpotent_small_cases() {
        assert_eq!(exp_nilpotent(&Matrix::zeros(3)).unwrap(), Matrix::identity(3));
        let a = CScalar::from_frac(7, 3);
        let upper = Matrix::from_entries(2, [(0, 1, a.clone())]);
        assert_eq!(exp_nilpotent(&upper).unwrap(), &Matrix::identity(2) + &upper);
        // the 3x3 Jordan block picks up the k=2 term
        let jordan = Matrix::from_entries(3, [(0, 1, c(1)), (1, 2, c(1))]);
        let e = exp_nilpotent(&jordan).unwrap();
        assert_eq!(e.get(0, 2), &CScalar::from_frac(1, 2));
        assert!(matches!(
            exp_nilpotent(&Matrix::identity(2)),
            Err(Error::NotNilpotent { dim: 2 })
        ));
    }

    #[test]
    fn kron_block_layout() {
        let pattern = Matrix::from_rows(vec![vec![c(0), c(1)], vec![c(-1), c(0)]]);
        let inner = Matrix::from_rows(vec![vec![c(1), c(2)], vec![c(3), c(4)]]);
        let k = Matrix::kron(&pattern, &inner);
        assert_eq!(k.dim(), 4);
        assert_eq!(k.get(0, 2), &c(1));
        assert_eq!(k.get(1, 3), &c(4));
        assert_eq!(k.get(3, 0), &c(-3));
        assert_eq!(k.get(0, 0), &c(0));
    }

    fn entry() -> impl Strategy<Value = CScalar> {
        (-3i64..=3, -3i64..=3, prop::bool::ANY).prop_map(|(a, b, root)| {
            let re = if root { CScalar::sqrt(2).scale(&Rational::from_integer(a.into())) } else { c(a) };
            re + CScalar::imag(b.into())
        })
    }

    fn matrix3() -> impl Strategy<Value = Matrix<CScalar>> {
        prop::collection::vec(entry(), 9).prop_map(|v| {
            let mut it = v.into_iter();
            Matrix::from_fn(3, |_, _| it.next().unwrap())
        })
    }

    fn strictly_upper4() -> impl Strategy<Value = Matrix<CScalar>> {
        prop::collection::vec(entry(), 6).prop_map(|v| {
            let mut it = v.into_iter();
            Matrix::from_fn(4, |r, c| if c > r { it.next().unwrap() } else { CScalar::zero() })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn commutator_antisymmetric(a in matrix3(), b in matrix3()) {
            prop_assert_eq!(commutator(&a, &b).unwrap(), -&commutator(&b, &a).unwrap());
        }

        #[test]
        fn jacobi_identity(a in matrix3(), b in matrix3(), c in matrix3()) {
            let t1 = commutator(&a, &commutator(&b, &c).unwrap()).unwrap();
            let t2 = commutator(&b, &commutator(&c, &a).unwrap()).unwrap();
            let t3 = commutator(&c, &commutator(&a, &b).unwrap()).unwrap();
            prop_assert!((&(&t1 + &t2) + &t3).is_zero());
        }

        #[test]
        fn dagger_involution(a in matrix3()) {
            prop_assert_eq!(a.dagger().dagger(), a);
        }

        #[test]
        fn exp_nilpotent_inverse(n in strictly_upper4()) {
            let forward = exp_nilpotent(&n).unwrap();
            let backward = exp_nilpotent(&-&n).unwrap();
            prop_assert_eq!(&forward * &backward, Matrix::identity(4));
        }
    }
}
