use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{Conjugate, Field, Rational, Surd};

/// Exact complex number `re + i·im` with surd components.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CScalar {
    pub re: Surd,
    pub im: Surd,
}

impl CScalar {
    pub fn new(re: Surd, im: Surd) -> Self {
        CScalar { re, im }
    }

    pub fn real(re: Surd) -> Self {
        CScalar { re, im: Surd::zero() }
    }

    pub fn imag(im: Surd) -> Self {
        CScalar { re: Surd::zero(), im }
    }

    pub fn i() -> Self {
        CScalar::imag(Surd::one())
    }

    pub fn from_int(n: i64) -> Self {
        CScalar::real(Surd::from_int(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        CScalar::real(Surd::from_frac(num, den))
    }

    pub fn from_rational(q: Rational) -> Self {
        CScalar::real(Surd::rational(q))
    }

    /// `num/den · i`
    pub fn imag_frac(num: i64, den: i64) -> Self {
        CScalar::imag(Surd::from_frac(num, den))
    }

    pub fn sqrt(n: u64) -> Self {
        CScalar::real(Surd::sqrt(n))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CScalar::new(self.re.scale(q), self.im.scale(q))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// `|z|²` as an exact real surd.
    pub fn norm_sqr(&self) -> Surd {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }
}

impl Zero for CScalar {
    fn zero() -> Self {
        CScalar::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for CScalar {
    fn one() -> Self {
        CScalar::real(Surd::one())
    }
}

impl<'a> Add<&'a CScalar> for &'a CScalar {
    type Output = CScalar;
    fn add(self, rhs: &CScalar) -> CScalar {
        CScalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a CScalar> for &'a CScalar {
    type Output = CScalar;
    fn sub(self, rhs: &CScalar) -> CScalar {
        CScalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a CScalar> for &'a CScalar {
    type Output = CScalar;
    fn mul(self, rhs: &CScalar) -> CScalar {
        if self.is_zero() || rhs.is_zero() {
            return CScalar::zero();
        }
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        CScalar::new(re, im)
    }
}

impl Neg for &CScalar {
    type Output = CScalar;
    fn neg(self) -> CScalar {
        CScalar::new(-&self.re, -&self.im)
    }
}

super::forward_ops!(CScalar);

impl Conjugate for CScalar {
    fn conj(&self) -> Self {
        CScalar::new(self.re.clone(), -&self.im)
    }
}

impl Field for CScalar {
    fn inverse(&self) -> Option<Self> {
        let denom = self.norm_sqr().inverse()?;
        let c = self.conj();
        Some(CScalar::new(&c.re * &denom, &c.im * &denom))
    }
}

impl From<Surd> for CScalar {
    fn from(s: Surd) -> Self {
        CScalar::real(s)
    }
}

impl From<i64> for CScalar {
    fn from(n: i64) -> Self {
        CScalar::from_int(n)
    }
}

fn multi_term(s: &Surd) -> bool {
    s.terms().count() > 1
}

impl fmt::Display for CScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = || {
            if self.im == Surd::one() {
                "i".to_string()
            } else if self.im == -Surd::one() {
                "-i".to_string()
            } else if multi_term(&self.im) {
                format!("({})*i", self.im)
            } else {
                format!("{}*i", self.im)
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", im_part()),
            (false, false) => {
                let im = im_part();
                match im.strip_prefix('-') {
                    Some(rest) => write!(f, "{} - {}", self.re, rest),
                    None => write!(f, "{} + {}", self.re, im),
                }
            }
        }
    }
}

impl fmt::Debug for CScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
