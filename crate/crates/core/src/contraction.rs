//! Contraction of the 5×5 so(3,2) generators by `C(ε) = diag(1,1,1,1,ε)`.
//!
//! A generator `G` is replaced by `ε^(−k)·C⁻¹GC`, computed in the Laurent
//! ring. The `ε → ∞` limit exists exactly when no positive power of `ε`
//! survives, and is then the `ε⁰` coefficient.

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{extract_structure_constants, LieBasis, StructureConstants};
use crate::linalg::{exp_nilpotent, CScalar, LaurentScalar, Matrix};
use crate::realizations::build_so32_5d;

pub const DIM: usize = 5;
/// Index of the contracted coordinate `s`.
pub const S: usize = 4;

pub struct ContractionMatrix {
    pub c: Matrix<LaurentScalar>,
    pub c_inv: Matrix<LaurentScalar>,
}

impl ContractionMatrix {
    pub fn new() -> Self {
        let diag = |power: i32| {
            Matrix::from_fn(DIM, |r, c| {
                if r != c {
                    LaurentScalar::zero()
                } else if r == S {
                    LaurentScalar::eps_pow(power)
                } else {
                    LaurentScalar::one()
                }
            })
        };
        ContractionMatrix {
            c: diag(1),
            c_inv: diag(-1),
        }
    }

    /// `ε^(−k)·C⁻¹·G·C`
    pub fn conjugate(&self, g: &Matrix<CScalar>, k: i32) -> Matrix<LaurentScalar> {
        let lifted = g.map(|v| LaurentScalar::constant(v.clone()));
        (&(&self.c_inv * &lifted) * &self.c).scale(&LaurentScalar::eps_pow(-k))
    }
}

impl Default for ContractionMatrix {
    fn default() -> Self {
        ContractionMatrix::new()
    }
}

#[derive(Clone, Debug)]
pub struct ContractedGenerator {
    pub label: String,
    pub k: i32,
    /// `ε^(−k)·C⁻¹GC` before the limit.
    pub expression: Matrix<LaurentScalar>,
    pub limit: Matrix<CScalar>,
    /// Negative powers of ε that vanish in the limit.
    pub residual_degrees: Vec<i32>,
}

impl ContractedGenerator {
    /// Largest entry-wise deviation between the expression at a concrete
    /// `ε` and the exact limit.
    pub fn numeric_deviation(&self, eps: f64) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..DIM {
            for c in 0..DIM {
                let value: Complex64 = self.expression.get(r, c).evaluate(eps);
                worst = worst.max((value - self.limit.get(r, c).to_complex()).norm());
            }
        }
        worst
    }
}

fn positive_entries(m: &Matrix<LaurentScalar>) -> Vec<(usize, usize, i32)> {
    m.nonzero()
        .filter_map(|(r, c, v)| v.max_degree().filter(|&d| d > 0).map(|d| (r, c, d)))
        .collect()
}

/// Fails with the offending entries if any positive power of `ε` survives.
pub fn contract(label: &str, g: &Matrix<CScalar>, k: i32) -> Result<ContractedGenerator> {
    if g.dim() != DIM {
        return Err(Error::DimensionMismatch { left: g.dim(), right: DIM });
    }
    let expression = ContractionMatrix::new().conjugate(g, k);
    let divergent = positive_entries(&expression);
    if !divergent.is_empty() {
        return Err(Error::DivergentContraction { entries: divergent });
    }
    let limit = expression.map(|v| v.coeff(0));
    let mut residual_degrees: Vec<i32> = expression
        .nonzero()
        .flat_map(|(_, _, v)| v.degrees().filter(|&d| d < 0).collect::<Vec<_>>())
        .collect();
    residual_degrees.sort_unstable();
    residual_degrees.dedup();
    Ok(ContractedGenerator {
        label: label.to_string(),
        k,
        expression,
        limit,
        residual_degrees,
    })
}

/// Contracts with the smallest `k ≥ 0` for which the limit exists.
pub fn contract_auto(label: &str, g: &Matrix<CScalar>) -> Result<ContractedGenerator> {
    let unscaled = ContractionMatrix::new().conjugate(g, 0);
    let k = positive_entries(&unscaled).iter().map(|&(_, _, d)| d).max().unwrap_or(0);
    contract(label, g, k)
}

/// Name of the contracted form of an s-boost, e.g. `Bx → Bcx`.
pub fn contracted_label(label: &str) -> String {
    match label.strip_prefix('B') {
        Some(rest) => format!("Bc{rest}"),
        None => label.to_string(),
    }
}

/// Every generator of the 5×5 family, contracted with auto-selected `k`.
pub fn contract_family() -> Result<Vec<ContractedGenerator>> {
    build_so32_5d()
        .basis
        .iter()
        .map(|(label, g)| contract_auto(label, g))
        .collect()
}

/// `{Jx, Jy, Jz, Ax, Ay, Az}` unchanged plus the four contracted s-boosts.
pub fn build_poincare_basis() -> Result<LieBasis> {
    let generators = contract_family()?
        .into_iter()
        .map(|g| {
            let label = if g.k > 0 { contracted_label(&g.label) } else { g.label.clone() };
            (label, g.limit)
        })
        .collect();
    LieBasis::new("iso31-poincare", generators)
}

pub const LORENTZ_LABELS: [&str; 6] = ["Jx", "Jy", "Jz", "Ax", "Ay", "Az"];
pub const TRANSLATION_LABELS: [&str; 4] = ["Bcx", "Bcy", "Bcz", "Bct"];

/// Lorentz sub-tensors of the contracted and uncontracted families.
pub fn lorentz_subtensors() -> Result<(StructureConstants, StructureConstants)> {
    let contracted = extract_structure_constants(&build_poincare_basis()?)?;
    let original = extract_structure_constants(&build_so32_5d().basis)?;
    Ok((contracted.restricted(&LORENTZ_LABELS)?, original.restricted(&LORENTZ_LABELS)?))
}

/// `exp(−i(a·Bcx + b·Bcy + c·Bcz + d·Bct))`, exactly.
pub fn translation_matrix(a: &CScalar, b: &CScalar, c: &CScalar, d: &CScalar) -> Result<Matrix<CScalar>> {
    let basis = build_poincare_basis()?;
    let mut generator = Matrix::zeros(DIM);
    for (label, amount) in TRANSLATION_LABELS.iter().zip([a, b, c, d]) {
        let g = basis.get(label).expect("translation generators present");
        generator = &generator + &g.scale(amount);
    }
    exp_nilpotent(&generator.scale(&-CScalar::i()))
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceItem {
    pub id: String,
    pub holds: bool,
}

/// Structural checks: translations leave the `(x, y, z, t)` block alone,
/// Lorentz generators stay free of `s`, and no contracted generator has a
/// nonzero `s` row.
pub fn invariance_check(sample: [&CScalar; 4]) -> Result<Vec<InvarianceItem>> {
    let mut out = Vec::new();
    let t = translation_matrix(sample[0], sample[1], sample[2], sample[3])?;
    let block_identity = (0..S).all(|r| (0..S).all(|c| *t.get(r, c) == if r == c { CScalar::one() } else { CScalar::zero() }));
    out.push(InvarianceItem {
        id: "translation-block-identity".into(),
        holds: block_identity,
    });
    let s_row = (0..S).all(|c| t.get(S, c).is_zero()) && t.get(S, S).is_one();
    out.push(InvarianceItem {
        id: "translation-s-row".into(),
        holds: s_row,
    });
    for g in contract_family()? {
        let s_free_row = (0..DIM).all(|c| g.limit.get(S, c).is_zero());
        let s_free_col = (0..DIM).all(|r| g.limit.get(r, S).is_zero());
        let label = if g.k > 0 { contracted_label(&g.label) } else { g.label.clone() };
        out.push(InvarianceItem {
            holds: s_free_row && (g.k > 0 || s_free_col),
            id: format!("{label}-s-structure"),
        });
    }
    Ok(out)
}

#[derive(Serialize)]
pub struct ContractionRecord {
    pub label: String,
    pub k: i32,
    pub converged: bool,
    pub limit: Vec<(usize, usize, String)>,
    pub residual_degrees: Vec<i32>,
}

impl From<&ContractedGenerator> for ContractionRecord {
    fn from(g: &ContractedGenerator) -> Self {
        ContractionRecord {
            label: g.label.clone(),
            k: g.k,
            converged: true,
            limit: g.limit.nonzero().map(|(r, c, v)| (r, c, v.to_string())).collect(),
            residual_degrees: g.residual_degrees.clone(),
        }
    }
}
