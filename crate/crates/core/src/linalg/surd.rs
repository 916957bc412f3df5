//! Real numbers of the form `Σ q·√d` with rational `q` and square-free `d`.
//!
//! Every matrix element of a truncated ladder operator, and every product of
//! two of them, lives in this ring. Division is supported: the inverse of a
//! nonzero surd is found by multiplying through by conjugates, one prime at a
//! time, until the denominator is rational.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::Error;

/// Splits `n` into `(outer, radicand)` with `n = outer² · radicand` and
/// `radicand` square-free. Trial division; inputs here are small.
pub fn square_free_split(n: u64) -> (u64, u64) {
    assert!(n > 0, "square_free_split of zero");
    let mut outer = 1u64;
    let mut rest = n;
    let mut radicand = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        let mut count = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            count += 1;
        }
        for _ in 0..count / 2 {
            outer *= p;
        }
        if count % 2 == 1 {
            radicand *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    radicand *= rest;
    (outer, radicand)
}

fn largest_prime_factor(mut n: u64) -> u64 {
    let mut largest = 1;
    let mut p = 2u64;
    while p * p <= n {
        while n.is_multiple_of(p) {
            largest = p;
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        largest = n;
    }
    largest
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Surd {
    // radicand -> coefficient; radicand 1 is the rational part
    terms: BTreeMap<u64, Rational>,
}

impl Surd {
    pub fn rational(q: Rational) -> Self {
        let mut s = Surd::default();
        s.add_term(1, q);
        s
    }

    pub fn from_int(n: i64) -> Self {
        Surd::rational(Rational::from_integer(n.into()))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Surd::rational(Rational::new(num.into(), den.into()))
    }

    /// `√n`, reduced to `outer·√radicand`.
    pub fn sqrt(n: u64) -> Self {
        if n == 0 {
            return Surd::zero();
        }
        let (outer, radicand) = square_free_split(n);
        let mut s = Surd::default();
        s.add_term(radicand, Rational::from_integer(outer.into()));
        s
    }

    /// `q·√n`.
    pub fn term(q: Rational, n: u64) -> Self {
        Surd::sqrt(n) * Surd::rational(q)
    }

    fn add_term(&mut self, radicand: u64, q: Rational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(radicand).or_insert_with(Rational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    /// Iterates `(radicand, coefficient)` in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(d, q)| (*d, q))
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&d| d == 1)
    }

    pub fn rational_part(&self) -> Rational {
        self.terms.get(&1).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Surd::zero();
        }
        Surd {
            terms: self.terms.iter().map(|(d, c)| (*d, c * q)).collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(d, q)| q.to_f64().unwrap_or(f64::NAN) * (*d as f64).sqrt())
            .sum()
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inverse(&self) -> Option<Surd> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Surd::rational(self.rational_part().recip()));
        }
        let p = self
            .terms
            .keys()
            .map(|&d| largest_prime_factor(d))
            .max()
            .expect("non-rational surd has a radicand");
        // self = a + b·√p where a, b carry no √p
        let mut a = Surd::zero();
        let mut b = Surd::zero();
        for (&d, q) in &self.terms {
            if d % p == 0 {
                b.add_term(d / p, q.clone());
            } else {
                a.add_term(d, q.clone());
            }
        }
        let p_surd = Surd::from_int(p as i64);
        let norm = &a * &a - &(&p_surd * &(&b * &b));
        let conj = &a - &(&b * &Surd::sqrt(p));
        let norm_inv = norm.inverse()?;
        Some(&conj * &norm_inv)
    }
}

impl Zero for Surd {
    fn zero() -> Self {
        Surd::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Surd {
    fn one() -> Self {
        Surd::from_int(1)
    }
}

impl<'a> Add<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        let mut out = self.clone();
        for (&d, q) in &rhs.terms {
            out.add_term(d, q.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        let mut out = self.clone();
        for (&d, q) in &rhs.terms {
            out.add_term(d, -q.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        let mut out = Surd::zero();
        for (&d1, q1) in &self.terms {
            for (&d2, q2) in &rhs.terms {
                // both square-free: d1·d2 = g²·(d1/g)(d2/g), the latter square-free
                let g = d1.gcd(&d2);
                let radicand = (d1 / g) * (d2 / g);
                out.add_term(radicand, q1 * q2 * Rational::from_integer(g.into()));
            }
        }
        out
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            terms: self.terms.iter().map(|(d, q)| (*d, -q.clone())).collect(),
        }
    }
}

super::forward_ops!(Surd);

impl From<Rational> for Surd {
    fn from(q: Rational) -> Self {
        Surd::rational(q)
    }
}

impl From<i64> for Surd {
    fn from(n: i64) -> Self {
        Surd::from_int(n)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&d, q)) in self.terms.iter().enumerate() {
            let magnitude = q.abs();
            if idx == 0 {
                if q.is_negative() {
                    write!(f, "-")?;
                }
            } else if q.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match (d, magnitude.is_one()) {
                (1, _) => write!(f, "{magnitude}")?,
                (_, true) => write!(f, "sqrt({d})")?,
                (_, false) => write!(f, "{magnitude}*sqrt({d})")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({self})")
    }
}

fn parse_term(token: &str, original: &str) -> Result<Surd, Error> {
    let bad = || Error::Parse(format!("malformed surd term {token:?} in {original:?}"));
    let (negative, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token.strip_prefix('+').unwrap_or(token)),
    };
    let body = body.trim();
    let (coeff, radicand) = if let Some(idx) = body.find("sqrt(") {
        let coeff_part = body[..idx].trim().trim_end_matches('*').trim();
        let rad_part = body[idx + 5..].strip_suffix(')').ok_or_else(bad)?;
        let radicand: u64 = rad_part.trim().parse().map_err(|_| bad())?;
        let coeff = if coeff_part.is_empty() {
            Rational::one()
        } else {
            Rational::from_str(coeff_part).map_err(|_| bad())?
        };
        (coeff, radicand)
    } else {
        (Rational::from_str(body).map_err(|_| bad())?, 1)
    };
    let value = Surd::term(coeff, radicand);
    Ok(if negative { -value } else { value })
}

impl FromStr for Surd {
    type Err = Error;

    /// Parses the `Display` form, e.g. `1/2*sqrt(6)-3+sqrt(2)`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty surd".into()));
        }
        let mut total = Surd::zero();
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut depth = 0usize;
        for (idx, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth = depth.saturating_sub(1),
                b'+' | b'-' if depth == 0 && idx > start => {
                    total = total + parse_term(&s[start..idx], s)?;
                    start = idx;
                }
                _ => {}
            }
        }
        total = total + parse_term(&s[start..], s)?;
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_free_split_small_values() {
        assert_eq!(square_free_split(1), (1, 1));
        assert_eq!(square_free_split(8), (2, 2));
        assert_eq!(square_free_split(12), (2, 3));
        assert_eq!(square_free_split(72), (6, 2));
        assert_eq!(square_free_split(49), (7, 1));
        assert_eq!(square_free_split(30), (1, 30));
    }

    #[test]
    fn sqrt2_times_sqrt8_is_four() {
        assert_eq!(Surd::sqrt(2) * Surd::sqrt(8), Surd::from_int(4));
        assert_eq!(Surd::sqrt(6) * Surd::sqrt(10), Surd::term(Rational::from_integer(2.into()), 15));
    }

    #[test]
    fn inverse_of_multi_prime_surd() {
        let x = Surd::from_int(1) + Surd::sqrt(2) + Surd::sqrt(3) + Surd::sqrt(6);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, Surd::one());
        assert!(Surd::zero().inverse().is_none());
    }

    #[test]
    fn display_and_parse() {
        let x = Surd::from_frac(-1, 2) + Surd::term(Rational::new(3.into(), 4.into()), 6) - Surd::sqrt(2);
        let text = x.to_string();
        assert_eq!(text, "-1/2-sqrt(2)+3/4*sqrt(6)");
        assert_eq!(text.parse::<Surd>().unwrap(), x);
        assert_eq!("0".parse::<Surd>().unwrap(), Surd::zero());
        assert_eq!("sqrt(8)".parse::<Surd>().unwrap(), Surd::term(Rational::from_integer(2.into()), 2));
        assert!("sqrt(x)".parse::<Surd>().is_err());
    }
}
