//! Structure constants, closure verification and signed-permutation
//! isomorphism search.

pub mod isomorphism;
pub mod span;
pub mod table;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{commutator, CScalar, Matrix};
use span::{axpy, EntryVector, SpanSolver};

pub use isomorphism::{find_basis_map, BasisMap};
pub use table::TableRecord;

/// A list of labelled generators whose commutators can be computed and
/// compared entry by entry.
///
/// Dense matrix bases implement this directly; the truncated Fock
/// realization implements it with every vector projected onto its safe
/// subspace.
pub trait Realization {
    fn name(&self) -> &str;
    fn labels(&self) -> &[String];
    /// Matrix dimension, used to render residual positions.
    fn dim(&self) -> usize;
    fn generator_vector(&self, index: usize) -> EntryVector;
    fn commutator_vector(&self, left: usize, right: usize) -> EntryVector;
}

/// Named, ordered list of equal-dimension generator matrices.
#[derive(Clone, Debug)]
pub struct LieBasis {
    name: String,
    labels: Vec<String>,
    matrices: Vec<Matrix<CScalar>>,
}

impl LieBasis {
    pub fn new(name: impl Into<String>, generators: Vec<(String, Matrix<CScalar>)>) -> Result<Self> {
        let name = name.into();
        if generators.is_empty() {
            return Err(Error::InvalidBasis(format!("{name}: empty generator list")));
        }
        let dim = generators[0].1.dim();
        let mut seen = BTreeSet::new();
        for (label, m) in &generators {
            if !seen.insert(label.clone()) {
                return Err(Error::InvalidBasis(format!("{name}: duplicate label {label}")));
            }
            if m.dim() != dim {
                return Err(Error::InvalidBasis(format!(
                    "{name}: {label} has dimension {} but {} expected",
                    m.dim(),
                    dim
                )));
            }
        }
        let (labels, matrices) = generators.into_iter().unzip();
        Ok(LieBasis { name, labels, matrices })
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn matrix(&self, index: usize) -> &Matrix<CScalar> {
        &self.matrices[index]
    }

    pub fn get(&self, label: &str) -> Option<&Matrix<CScalar>> {
        self.index_of(label).map(|idx| &self.matrices[idx])
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Matrix<CScalar>)> {
        self.labels.iter().map(String::as_str).zip(&self.matrices)
    }

    /// Same generators with some replaced; used to build deliberately
    /// broken bases in tests and reports.
    pub fn with_replaced(&self, label: &str, matrix: Matrix<CScalar>) -> Result<Self> {
        let idx = self
            .index_of(label)
            .ok_or_else(|| Error::Unknown { kind: "generator", name: label.into() })?;
        let mut out = self.clone();
        out.matrices[idx] = matrix;
        Ok(out)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

fn dense_vector(m: &Matrix<CScalar>) -> EntryVector {
    m.nonzero().map(|(r, c, v)| ((r, c), v.clone())).collect()
}

impl Realization for LieBasis {
    fn name(&self) -> &str {
        &self.name
    }
    fn labels(&self) -> &[String] {
        &self.labels
    }
    fn dim(&self) -> usize {
        self.matrices[0].dim()
    }
    fn generator_vector(&self, index: usize) -> EntryVector {
        dense_vector(&self.matrices[index])
    }
    fn commutator_vector(&self, left: usize, right: usize) -> EntryVector {
        let c = commutator(&self.matrices[left], &self.matrices[right]).expect("equal dimensions by construction");
        dense_vector(&c)
    }
}

/// `[Gᵢ, Gⱼ] = Σₖ c_{ij}^k Gₖ`, stored for both orders of every nonzero pair.
#[derive(Clone, PartialEq, Eq)]
pub struct StructureConstants {
    labels: Vec<String>,
    tensor: BTreeMap<(usize, usize, usize), CScalar>,
}

impl StructureConstants {
    pub fn empty(labels: Vec<String>) -> Self {
        StructureConstants {
            labels,
            tensor: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> CScalar {
        self.tensor.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    /// The expansion of `[Gᵢ, Gⱼ]` as `(k, c_{ij}^k)` pairs.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<(usize, CScalar)> {
        self.tensor
            .range((i, j, 0)..=(i, j, usize::MAX))
            .map(|(&(_, _, k), v)| (k, v.clone()))
            .collect()
    }

    /// Sets `[Gᵢ, Gⱼ]` (and `[Gⱼ, Gᵢ]` by antisymmetry).
    pub fn set_bracket(&mut self, i: usize, j: usize, expansion: &[(usize, CScalar)]) {
        let n = self.len();
        for k in 0..n {
            self.tensor.remove(&(i, j, k));
            self.tensor.remove(&(j, i, k));
        }
        if i == j {
            return;
        }
        for (k, v) in expansion {
            if v.is_zero() {
                continue;
            }
            self.tensor.insert((i, j, *k), v.clone());
            self.tensor.insert((j, i, *k), -v);
        }
    }

    /// Nonzero entries `(i, j, k, c)` with `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &CScalar)> {
        self.tensor
            .iter()
            .filter(|(&(i, j, _), _)| i < j)
            .map(|(&(i, j, k), v)| (i, j, k, v))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.tensor
            .iter()
            .all(|(&(i, j, k), v)| self.coeff(j, i, k) == -v)
    }

    /// Triples `(a, b, c)` with `[a,[b,c]] + [b,[c,a]] + [c,[a,b]] ≠ 0`.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.len();
        let mut bad = Vec::new();
        let nested = |a: usize, b: usize, c: usize, out: &mut BTreeMap<usize, CScalar>| {
            // [a, [b, c]] = Σ_k c_bc^k [a, k] = Σ_k Σ_m c_bc^k c_ak^m G_m
            for (k, bc) in self.bracket(b, c) {
                for (m, ak) in self.bracket(a, k) {
                    let slot = out.entry(m).or_default();
                    *slot = &*slot + &(&bc * &ak);
                }
            }
        };
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let mut total = BTreeMap::new();
                    nested(a, b, c, &mut total);
                    nested(b, c, a, &mut total);
                    nested(c, a, b, &mut total);
                    if total.values().any(|v| !v.is_zero()) {
                        bad.push((a, b, c));
                    }
                }
            }
        }
        bad
    }

    /// Reorders to `order`, which must be a permutation of the labels.
    pub fn relabeled(&self, order: &[String]) -> Result<Self> {
        let mut position = Vec::with_capacity(self.len());
        if order.len() != self.len() {
            return Err(Error::InvalidBasis(format!(
                "label count mismatch: table has {:?}, basis has {:?}",
                self.labels, order
            )));
        }
        for label in &self.labels {
            let idx = order.iter().position(|l| l == label).ok_or_else(|| {
                Error::InvalidBasis(format!("label {label} missing from {order:?}"))
            })?;
            position.push(idx);
        }
        Ok(StructureConstants {
            labels: order.to_vec(),
            tensor: self
                .tensor
                .iter()
                .map(|(&(i, j, k), v)| ((position[i], position[j], position[k]), v.clone()))
                .collect(),
        })
    }

    /// Sub-tensor on `subset`; fails unless the subset closes.
    pub fn restricted(&self, subset: &[&str]) -> Result<Self> {
        let idx: Vec<usize> = subset
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| Error::Unknown { kind: "generator", name: l.to_string() })
            })
            .collect::<Result<_>>()?;
        let mut out = StructureConstants::empty(subset.iter().map(|s| s.to_string()).collect());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                for (k, v) in self.bracket(i, j) {
                    let c = idx.iter().position(|&x| x == k).ok_or_else(|| Error::NotClosed {
                        left: self.labels[i].clone(),
                        right: self.labels[j].clone(),
                        residual: format!("component along {}", self.labels[k]),
                    })?;
                    out.tensor.insert((a, b, c), v);
                }
            }
        }
        Ok(out)
    }

    /// Killing form diagonal `K(i,i) = Σ_{j,k} c_{ij}^k c_{ik}^j`.
    pub fn killing_diagonal(&self, i: usize) -> CScalar {
        let mut total = CScalar::zero();
        for j in 0..self.len() {
            for (k, v) in self.bracket(i, j) {
                total = total + &(&v * &self.coeff(i, k, j));
            }
        }
        total
    }

    /// Renders `[a, b] = expansion` for pair `(i, j)`.
    pub fn describe_bracket(&self, i: usize, j: usize) -> String {
        format!(
            "[{}, {}] = {}",
            self.labels[i],
            self.labels[j],
            format_expansion(&self.labels, &self.bracket(i, j))
        )
    }
}

pub(crate) fn format_expansion(labels: &[String], expansion: &[(usize, CScalar)]) -> String {
    if expansion.is_empty() {
        return "0".into();
    }
    expansion
        .iter()
        .map(|(k, v)| format!("({v})*{}", labels[*k]))
        .collect::<Vec<_>>()
        .join(" + ")
}

impl fmt::Debug for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "StructureConstants {:?}", self.labels)?;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if !self.bracket(i, j).is_empty() {
                    writeln!(f, "  {}", self.describe_bracket(i, j))?;
                }
            }
        }
        Ok(())
    }
}

fn format_residual(residual: &EntryVector) -> String {
    const SHOWN: usize = 8;
    let mut parts: Vec<String> = residual
        .iter()
        .take(SHOWN)
        .map(|((r, c), v)| format!("({r},{c})={v}"))
        .collect();
    if residual.len() > SHOWN {
        parts.push(format!("... {} more", residual.len() - SHOWN));
    }
    parts.join("; ")
}

/// Exact structure constants of a realization.
///
/// Every commutator must lie in the exact span of the generators;
/// otherwise the error names the first offending pair and its residual.
pub fn extract_structure_constants<R: Realization + ?Sized>(basis: &R) -> Result<StructureConstants> {
    let labels = basis.labels().to_vec();
    let n = labels.len();
    let vectors: Vec<EntryVector> = (0..n).map(|k| basis.generator_vector(k)).collect();
    let solver = SpanSolver::new(&vectors).map_err(|idx| Error::LinearlyDependent(labels[idx].clone()))?;
    let mut out = StructureConstants::empty(labels.clone());
    for i in 0..n {
        for j in i + 1..n {
            let target = basis.commutator_vector(i, j);
            let coeffs = solver.decompose(&target).map_err(|residual| Error::NotClosed {
                left: labels[i].clone(),
                right: labels[j].clone(),
                residual: format_residual(&residual),
            })?;
            let expansion: Vec<(usize, CScalar)> = coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            out.set_bracket(i, j, &expansion);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PairStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub left: String,
    pub right: String,
    pub expected: String,
    pub status: PairStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

/// Pair-by-pair comparison of a realization against a table.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub family: String,
    pub pairs: Vec<PairCheck>,
    /// Problems that prevented a comparison, e.g. label mismatches.
    pub errors: Vec<String>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.pairs.iter().all(|p| p.status == PairStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairCheck> {
        self.pairs.iter().filter(|p| p.status == PairStatus::Fail)
    }
}

/// Checks every pair `i < j` against `expected`, computing the exact
/// residual `[Gᵢ, Gⱼ] − Σₖ c_{ij}^k Gₖ` for each failure.
pub fn verify_closure<R: Realization + ?Sized>(basis: &R, expected: &StructureConstants) -> ClosureReport {
    let labels = basis.labels().to_vec();
    let mut report = ClosureReport {
        family: basis.name().to_string(),
        pairs: Vec::new(),
        errors: Vec::new(),
    };
    let expected = match expected.relabeled(&labels) {
        Ok(t) => t,
        Err(e) => {
            report.errors.push(e.to_string());
            return report;
        }
    };
    let vectors: Vec<EntryVector> = (0..labels.len()).map(|k| basis.generator_vector(k)).collect();
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            let expansion = expected.bracket(i, j);
            let mut residual = basis.commutator_vector(i, j);
            for (k, v) in &expansion {
                axpy(&mut residual, &-v.clone(), &vectors[*k]);
            }
            let pass = residual.is_empty();
            report.pairs.push(PairCheck {
                left: labels[i].clone(),
                right: labels[j].clone(),
                expected: format_expansion(&labels, &expansion),
                status: if pass { PairStatus::Pass } else { PairStatus::Fail },
                residual: (!pass).then(|| format_residual(&residual)),
            });
        }
    }
    report
}
