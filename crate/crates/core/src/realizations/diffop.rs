//! First-order differential operators `−i·x_a A_{ab} ∂_b` on the phase
//! plane `(x₀, x₁) = (x, p)`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::{commutator, CScalar, Matrix};

/// Polynomial in `(x, p)`: exponent pair → coefficient.
pub type Polynomial = BTreeMap<(u32, u32), CScalar>;

pub fn monomial(x_power: u32, p_power: u32) -> Polynomial {
    Polynomial::from([((x_power, p_power), CScalar::from_int(1))])
}

fn add_term(poly: &mut Polynomial, key: (u32, u32), value: CScalar) {
    let slot = poly.entry(key).or_default();
    *slot = &*slot + &value;
    if slot.is_zero() {
        poly.remove(&key);
    }
}

pub fn poly_sub(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut out = a.clone();
    for (k, v) in b {
        add_term(&mut out, *k, -v);
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiffOpGenerator {
    pub label: String,
    /// 2×2 coefficient matrix `A`.
    pub coeff: Matrix<CScalar>,
}

impl DiffOpGenerator {
    pub fn new(label: impl Into<String>, coeff: Matrix<CScalar>) -> Self {
        assert_eq!(coeff.dim(), 2, "coefficient matrix must be 2x2");
        DiffOpGenerator {
            label: label.into(),
            coeff,
        }
    }

    /// Applies the operator to a polynomial by direct differentiation.
    pub fn apply(&self, poly: &Polynomial) -> Polynomial {
        let mut out = Polynomial::new();
        let minus_i = -CScalar::i();
        for (&(ex, ep), c) in poly {
            let exps = [ex, ep];
            for b in 0..2 {
                if exps[b] == 0 {
                    continue;
                }
                // ∂_b lowers exponent b and multiplies by it
                let mut lowered = exps;
                lowered[b] -= 1;
                let d = c * &CScalar::from_int(exps[b] as i64);
                for a in 0..2 {
                    let a_ab = self.coeff.get(a, b);
                    if a_ab.is_zero() {
                        continue;
                    }
                    let mut raised = lowered;
                    raised[a] += 1;
                    add_term(&mut out, (raised[0], raised[1]), &(&minus_i * a_ab) * &d);
                }
            }
        }
        out
    }

    /// Matrix of the action on the linear monomials `{x, p}`: column `c`
    /// holds the image of `x_c`. Equals `−i·A`, and composition of
    /// operators maps to the matrix product.
    pub fn action_matrix(&self) -> Matrix<CScalar> {
        Matrix::from_fn(2, |a, c| {
            let image = self.apply(&monomial(u32::from(c == 0), u32::from(c == 1)));
            image
                .get(&(u32::from(a == 0), u32::from(a == 1)))
                .cloned()
                .unwrap_or_default()
        })
    }

    /// Operator commutator, via `[V_A, V_B] = V_{−i[A,B]}`.
    pub fn bracket(&self, other: &DiffOpGenerator) -> DiffOpGenerator {
        let ab = commutator(&self.coeff, &other.coeff).expect("2x2");
        DiffOpGenerator::new(
            format!("[{},{}]", self.label, other.label),
            ab.scale(&-CScalar::i()),
        )
    }

    /// `[self, other]` applied to `poly` by composing the two actions.
    pub fn commutator_on(&self, other: &DiffOpGenerator, poly: &Polynomial) -> Polynomial {
        poly_sub(&self.apply(&other.apply(poly)), &other.apply(&self.apply(poly)))
    }
}

/// All monomials of total degree `1..=max_degree`.
pub fn test_monomials(max_degree: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        for ex in 0..=d {
            out.push(monomial(ex, d - ex));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn coeff(entries: [i64; 4]) -> Matrix<CScalar> {
        Matrix::from_rows(vec![
            vec![entries[0].into(), entries[1].into()],
            vec![entries[2].into(), entries[3].into()],
        ])
    }

    #[test]
    fn rotation_generator_on_linear_monomials() {
        let j2 = DiffOpGenerator::new("J2", coeff([0, 1, -1, 0]));
        assert_eq!(j2.apply(&monomial(1, 0)), Polynomial::from([((0, 1), CScalar::i())]));
        assert_eq!(j2.apply(&monomial(0, 1)), Polynomial::from([((1, 0), -CScalar::i())]));
    }

    #[test]
    fn action_matrix_is_minus_i_a() {
        let k3 = DiffOpGenerator::new("K3", coeff([0, 1, 1, 0]));
        assert_eq!(k3.action_matrix(), k3.coeff.scale(&-CScalar::i()));
    }

    #[test]
    fn self_bracket_vanishes() {
        let j2 = DiffOpGenerator::new("J2", coeff([0, 1, -1, 0]));
        assert!(j2.bracket(&j2).coeff.is_zero());
    }

    proptest! {
        #[test]
        fn bracket_lemma_matches_polynomial_action(
            a in proptest::array::uniform4(-3i64..=3),
            b in proptest::array::uniform4(-3i64..=3),
        ) {
            let (ga, gb) = (DiffOpGenerator::new("A", coeff(a)), DiffOpGenerator::new("B", coeff(b)));
            let reduced = ga.bracket(&gb);
            for poly in test_monomials(3) {
                prop_assert_eq!(ga.commutator_on(&gb, &poly), reduced.apply(&poly));
            }
            let action = commutator(&ga.action_matrix(), &gb.action_matrix()).unwrap();
            prop_assert_eq!(action, reduced.action_matrix());
        }
    }
}
