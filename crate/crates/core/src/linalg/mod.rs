//! Exact scalar arithmetic and dense/sparse matrix algebra.
//!
//! The algebra layer never touches floating point: entries are complex
//! numbers over `Q(√2, √3, …)` ([`CScalar`]) or Laurent polynomials in the
//! contraction parameter ([`LaurentScalar`]). Floats appear only in
//! [`exp_float`] and in the numeric helpers of [`float`].

pub mod cscalar;
pub mod float;
pub mod laurent;
pub mod matrix;
pub mod sparse;
pub mod surd;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use cscalar::CScalar;
pub use float::{exp_float, to_complex_matrix};
pub use laurent::LaurentScalar;
pub use matrix::{commutator, exp_nilpotent, Matrix};
pub use sparse::SparseMatrix;
pub use surd::Surd;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Commutative ring with exact equality; the entry type of [`Matrix`].
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + for<'a> Add<&'a T, Output = T>
        + for<'a> Sub<&'a T, Output = T>
        + for<'a> Mul<&'a T, Output = T>
        + Send
        + Sync
{
}

pub trait Conjugate {
    fn conj(&self) -> Self;
}

pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;
}

/// Derives the owned-operand operator impls from the `&T op &T` impls.
macro_rules! forward_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl<'a> std::ops::Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                &self + rhs
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                &self - rhs
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                &self * rhs
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl std::iter::Sum for $t {
            fn sum<I: Iterator<Item = $t>>(iter: I) -> $t {
                iter.fold(<$t as num_traits::Zero>::zero(), |acc, x| &acc + &x)
            }
        }
    };
}
pub(crate) use forward_ops;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_surd() -> impl Strategy<Value = Surd> {
        prop::collection::vec((-4i64..=4, 1i64..=3, prop::sample::select(vec![1u64, 2, 3, 5, 6])), 0..3)
            .prop_map(|terms| {
                terms
                    .into_iter()
                    .map(|(n, d, r)| Surd::term(Rational::new(n.into(), d.into()), r))
                    .sum()
            })
    }

    fn small_cscalar() -> impl Strategy<Value = CScalar> {
        (small_surd(), small_surd()).prop_map(|(re, im)| CScalar::new(re, im))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn cscalar_field_axioms(a in small_cscalar(), b in small_cscalar(), c in small_cscalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), CScalar::one());
            }
        }

        #[test]
        fn surd_text_roundtrip(s in small_surd()) {
            prop_assert_eq!(s.to_string().parse::<Surd>().unwrap(), s);
        }

        #[test]
        fn surd_value_matches_float(a in small_surd(), b in small_surd()) {
            let exact = (&a * &b).to_f64();
            let approx = a.to_f64() * b.to_f64();
            prop_assert!((exact - approx).abs() <= 1e-12 * (1.0 + approx.abs()));
        }
    }
}
