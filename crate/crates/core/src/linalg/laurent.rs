//! Laurent polynomials `Σ c_k ε^k` over [`CScalar`], used to carry the
//! contraction parameter symbolically.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{CScalar, Conjugate, Rational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentScalar {
    coefficients: BTreeMap<i32, CScalar>,
}

impl LaurentScalar {
    pub fn constant(c: CScalar) -> Self {
        LaurentScalar::monomial(c, 0)
    }

    pub fn monomial(c: CScalar, degree: i32) -> Self {
        let mut out = LaurentScalar::default();
        out.add_term(degree, c);
        out
    }

    /// `ε^degree`
    pub fn eps_pow(degree: i32) -> Self {
        LaurentScalar::monomial(CScalar::one(), degree)
    }

    fn add_term(&mut self, degree: i32, c: CScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coefficients.entry(degree).or_default();
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coefficients.remove(&degree);
        }
    }

    pub fn coeff(&self, degree: i32) -> CScalar {
        self.coefficients.get(&degree).cloned().unwrap_or_default()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.coefficients.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.coefficients.keys().next().copied()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.coefficients.keys().copied()
    }

    /// Multiplies by `ε^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        LaurentScalar {
            coefficients: self
                .coefficients
                .iter()
                .map(|(k, c)| (k + shift, c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, eps: f64) -> Complex64 {
        self.coefficients
            .iter()
            .map(|(k, c)| c.to_complex() * eps.powi(*k))
            .sum()
    }

    pub fn evaluate_exact(&self, eps: &Rational) -> CScalar {
        assert!(!eps.is_zero() || self.min_degree().is_none_or(|d| d >= 0));
        self.coefficients
            .iter()
            .fold(CScalar::zero(), |acc, (k, c)| {
                let power = eps.pow(*k);
                acc + c.scale(&power)
            })
    }
}

impl Zero for LaurentScalar {
    fn zero() -> Self {
        LaurentScalar::default()
    }
    fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }
}

impl One for LaurentScalar {
    fn one() -> Self {
        LaurentScalar::constant(CScalar::one())
    }
}

impl<'a> Add<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (k, c) in &rhs.coefficients {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (k, c) in &rhs.coefficients {
            out.add_term(*k, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (k1, c1) in &self.coefficients {
            for (k2, c2) in &rhs.coefficients {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            coefficients: self.coefficients.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

super::forward_ops!(LaurentScalar);

impl Conjugate for LaurentScalar {
    // ε is real
    fn conj(&self) -> Self {
        LaurentScalar {
            coefficients: self.coefficients.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }
}

impl From<CScalar> for LaurentScalar {
    fn from(c: CScalar) -> Self {
        LaurentScalar::constant(c)
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .rev()
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*eps"),
                _ => format!("({c})*eps^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
