//! Truncated two-mode Fock space.
//!
//! States `|n1, n2⟩` with `0 ≤ n1, n2 ≤ N` are ordered lexicographically.
//! Truncation corrupts matrix elements of products near the cutoff, so
//! commutators are compared only on the safe subspace `n1, n2 ≤ N − m`.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::span::EntryVector;
use crate::lie::{PairStatus, Realization};
use crate::linalg::{CScalar, SparseMatrix};

/// Smallest cutoff for which the margin-2 safe subspace holds quadratic
/// excitations on both modes.
pub const MIN_CUTOFF: usize = 4;
pub const DEFAULT_MARGIN: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FockBasis {
    cutoff: usize,
}

impl FockBasis {
    pub fn new(cutoff: usize) -> Self {
        FockBasis { cutoff }
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        (self.cutoff + 1) * (self.cutoff + 1)
    }

    pub fn index(&self, n1: usize, n2: usize) -> usize {
        assert!(n1 <= self.cutoff && n2 <= self.cutoff, "state ({n1}, {n2}) beyond cutoff");
        n1 * (self.cutoff + 1) + n2
    }

    pub fn state(&self, index: usize) -> (usize, usize) {
        (index / (self.cutoff + 1), index % (self.cutoff + 1))
    }

    pub fn states(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.dim()).map(|k| self.state(k))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    One,
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ladder {
    Lower,
    Raise,
}

/// Sparse operator on a [`FockBasis`] together with the quanta shifts
/// `(Δn1, Δn2)` it can produce.
#[derive(Clone, Debug, PartialEq)]
pub struct FockOperator {
    pub label: String,
    basis: FockBasis,
    matrix: SparseMatrix,
    shifts: BTreeSet<(i32, i32)>,
}

impl FockOperator {
    pub fn basis(&self) -> FockBasis {
        self.basis
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn shifts(&self) -> &BTreeSet<(i32, i32)> {
        &self.shifts
    }

    /// Largest number of quanta added or removed on either mode.
    pub fn max_shift(&self) -> usize {
        self.shifts
            .iter()
            .map(|&(a, b)| a.unsigned_abs().max(b.unsigned_abs()) as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn named(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn mul(&self, other: &FockOperator) -> FockOperator {
        let shifts = self
            .shifts
            .iter()
            .flat_map(|a| other.shifts.iter().map(move |b| (a.0 + b.0, a.1 + b.1)))
            .collect();
        FockOperator {
            label: format!("{}{}", self.label, other.label),
            basis: self.basis,
            matrix: self.matrix.mul(&other.matrix),
            shifts,
        }
    }

    pub fn add(&self, other: &FockOperator) -> FockOperator {
        FockOperator {
            label: format!("{}+{}", self.label, other.label),
            basis: self.basis,
            matrix: self.matrix.add(&other.matrix),
            shifts: self.shifts.union(&other.shifts).copied().collect(),
        }
    }

    pub fn sub(&self, other: &FockOperator) -> FockOperator {
        self.add(&other.scale(&CScalar::from_int(-1)))
            .named(format!("{}-{}", self.label, other.label))
    }

    pub fn scale(&self, s: &CScalar) -> FockOperator {
        FockOperator {
            label: self.label.clone(),
            basis: self.basis,
            matrix: self.matrix.scale(s),
            shifts: self.shifts.clone(),
        }
    }

    pub fn commutator(&self, other: &FockOperator) -> FockOperator {
        self.mul(other)
            .sub(&other.mul(self))
            .named(format!("[{},{}]", self.label, other.label))
    }

    pub fn dagger(&self) -> FockOperator {
        FockOperator {
            label: format!("{}^dag", self.label),
            basis: self.basis,
            matrix: self.matrix.dagger(),
            shifts: self.shifts.iter().map(|&(a, b)| (-a, -b)).collect(),
        }
    }

    pub fn is_hermitian(&self) -> bool {
        self.matrix.dagger() == self.matrix
    }

    pub fn element(&self, bra: (usize, usize), ket: (usize, usize)) -> CScalar {
        self.matrix.get(self.basis.index(bra.0, bra.1), self.basis.index(ket.0, ket.1))
    }

    /// Image of a basis state as `(state, amplitude)` pairs.
    pub fn apply_to_state(&self, ket: (usize, usize)) -> Vec<((usize, usize), CScalar)> {
        let col = self.basis.index(ket.0, ket.1);
        self.matrix
            .iter()
            .filter(|&(_, c, _)| c == col)
            .map(|(r, _, v)| (self.basis.state(r), v.clone()))
            .collect()
    }
}

/// `a` lowers with `√n` on `|n−1⟩⟨n|`; `a†` is its transpose.
pub fn ladder(mode: Mode, kind: Ladder, basis: FockBasis) -> FockOperator {
    let mut matrix = SparseMatrix::zeros(basis.dim());
    for (n1, n2) in basis.states() {
        let n = match mode {
            Mode::One => n1,
            Mode::Two => n2,
        };
        let target = match kind {
            Ladder::Lower if n > 0 => n - 1,
            Ladder::Raise if n < basis.cutoff() => n + 1,
            _ => continue,
        };
        let amplitude = CScalar::sqrt(n.max(target) as u64);
        let (t1, t2) = match mode {
            Mode::One => (target, n2),
            Mode::Two => (n1, target),
        };
        matrix.add_at(basis.index(t1, t2), basis.index(n1, n2), amplitude);
    }
    let step = if kind == Ladder::Lower { -1 } else { 1 };
    let shift = match mode {
        Mode::One => (step, 0),
        Mode::Two => (0, step),
    };
    let mode_label = if mode == Mode::One { 1 } else { 2 };
    FockOperator {
        label: format!("a{mode_label}{}", if kind == Ladder::Raise { "^dag" } else { "" }),
        basis,
        matrix,
        shifts: BTreeSet::from([shift]),
    }
}

/// `x = (a + a†)/√2`, `p = i(a† − a)/√2`.
pub fn position_momentum(mode: Mode, basis: FockBasis) -> (FockOperator, FockOperator) {
    let a = ladder(mode, Ladder::Lower, basis);
    let ad = ladder(mode, Ladder::Raise, basis);
    let inv_sqrt2 = CScalar::real(crate::linalg::Surd::sqrt(2)).scale(&crate::linalg::Rational::new(1.into(), 2.into()));
    let label = if mode == Mode::One { 1 } else { 2 };
    let x = a.add(&ad).scale(&inv_sqrt2).named(format!("x{label}"));
    let p = ad.sub(&a).scale(&(&CScalar::i() * &inv_sqrt2)).named(format!("p{label}"));
    (x, p)
}

/// The ten quadratic generators, in the order
/// `Q3, S3, K3, L1, L2, L3, K1, K2, Q1, Q2`.
pub fn build_ten_generators(basis: FockBasis) -> Result<Vec<FockOperator>> {
    if basis.cutoff() < MIN_CUTOFF {
        return Err(Error::CutoffTooSmall {
            cutoff: basis.cutoff(),
            minimum: MIN_CUTOFF,
        });
    }
    let a1 = ladder(Mode::One, Ladder::Lower, basis);
    let a1d = ladder(Mode::One, Ladder::Raise, basis);
    let a2 = ladder(Mode::Two, Ladder::Lower, basis);
    let a2d = ladder(Mode::Two, Ladder::Raise, basis);
    let half = CScalar::from_frac(1, 2);
    let quarter = CScalar::from_frac(1, 4);
    let i = CScalar::i();

    let q3 = a1d.mul(&a2d).sub(&a1.mul(&a2)).scale(&(&i * &half));
    // printed with a2 a2†, not normal-ordered
    let s3 = a1d.mul(&a1).add(&a2.mul(&a2d)).scale(&half);
    let k3 = a1d.mul(&a2d).add(&a1.mul(&a2)).scale(&half);
    let l1 = a1d.mul(&a2).add(&a2d.mul(&a1)).scale(&half);
    // 1/(2i) = −i/2
    let l2 = a1d.mul(&a2).sub(&a2d.mul(&a1)).scale(&(-(&i * &half)));
    let l3 = a1d.mul(&a1).sub(&a2d.mul(&a2)).scale(&half);

    let (a1d2, a12, a2d2, a22) = (a1d.mul(&a1d), a1.mul(&a1), a2d.mul(&a2d), a2.mul(&a2));
    let k1 = a1d2.add(&a12).sub(&a2d2).sub(&a22).scale(&-quarter.clone());
    let k2 = a1d2.sub(&a12).add(&a2d2).sub(&a22).scale(&(&i * &quarter));
    let q1 = a1d2.sub(&a12).sub(&a2d2).add(&a22).scale(&-(&i * &quarter));
    let q2 = a1d2.add(&a12).add(&a2d2).add(&a22).scale(&-quarter);

    Ok([
        ("Q3", q3),
        ("S3", s3),
        ("K3", k3),
        ("L1", l1),
        ("L2", l2),
        ("L3", l3),
        ("K1", k1),
        ("K2", k2),
        ("Q1", q1),
        ("Q2", q2),
    ]
    .into_iter()
    .map(|(name, op)| op.named(name))
    .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SafeSubspace {
    pub cutoff: usize,
    pub margin: usize,
}

impl SafeSubspace {
    pub fn new(basis: FockBasis, margin: usize) -> Self {
        SafeSubspace {
            cutoff: basis.cutoff(),
            margin,
        }
    }

    pub fn contains(&self, state: (usize, usize)) -> bool {
        state.0 + self.margin <= self.cutoff && state.1 + self.margin <= self.cutoff
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.contains(FockBasis::new(self.cutoff).state(index))
    }

    /// `P·M·P`, kept at the original indices.
    pub fn project(&self, m: &SparseMatrix) -> SparseMatrix {
        m.restrict(|k| self.contains_index(k))
    }
}

/// The ten generators as a [`Realization`] whose vectors are projected
/// onto the safe subspace.
#[derive(Clone, Debug)]
pub struct FockFamily {
    name: String,
    labels: Vec<String>,
    basis: FockBasis,
    safe: SafeSubspace,
    operators: Vec<FockOperator>,
}

impl FockFamily {
    pub fn new(cutoff: usize, margin: usize) -> Result<Self> {
        let basis = FockBasis::new(cutoff);
        let operators = build_ten_generators(basis)?;
        Ok(FockFamily {
            name: format!("so32-fock(N={cutoff})"),
            labels: operators.iter().map(|o| o.label.clone()).collect(),
            basis,
            safe: SafeSubspace::new(basis, margin),
            operators,
        })
    }

    pub fn basis(&self) -> FockBasis {
        self.basis
    }

    pub fn safe_subspace(&self) -> SafeSubspace {
        self.safe
    }

    pub fn operators(&self) -> &[FockOperator] {
        &self.operators
    }

    pub fn get(&self, label: &str) -> Option<&FockOperator> {
        self.operators.iter().find(|o| o.label == label)
    }

    /// Same operators restricted to a subset of labels, e.g. one triple.
    pub fn subset(&self, labels: &[&str]) -> Result<FockFamily> {
        let operators = labels
            .iter()
            .map(|l| {
                self.get(l)
                    .cloned()
                    .ok_or_else(|| Error::Unknown { kind: "generator", name: l.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FockFamily {
            name: format!("{}[{}]", self.name, labels.join(",")),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            basis: self.basis,
            safe: self.safe,
            operators,
        })
    }
}

fn entry_vector(m: &SparseMatrix) -> EntryVector {
    m.iter().map(|(r, c, v)| ((r, c), v.clone())).collect()
}

impl Realization for FockFamily {
    fn name(&self) -> &str {
        &self.name
    }
    fn labels(&self) -> &[String] {
        &self.labels
    }
    fn dim(&self) -> usize {
        self.basis.dim()
    }
    fn generator_vector(&self, index: usize) -> EntryVector {
        entry_vector(&self.safe.project(self.operators[index].matrix()))
    }
    fn commutator_vector(&self, left: usize, right: usize) -> EntryVector {
        let c = self.operators[left].matrix().commutator(self.operators[right].matrix());
        entry_vector(&self.safe.project(&c))
    }
}

/// A mismatched matrix element: `(bra, ket, value)`.
pub type ResidualEntry = ((usize, usize), (usize, usize), String);

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorCheck {
    pub left: String,
    pub right: String,
    pub margin: usize,
    pub status: PairStatus,
    pub residual: Vec<ResidualEntry>,
}

/// Compares `P[A,B]P` with `P(Σ cₖGₖ)P` without checking that the
/// margin covers the operators' shifts.
pub fn projected_commutator_check(
    a: &FockOperator,
    b: &FockOperator,
    expected: &[(CScalar, &FockOperator)],
    margin: usize,
) -> CommutatorCheck {
    let basis = a.basis();
    let safe = SafeSubspace::new(basis, margin);
    let mut rhs = SparseMatrix::zeros(basis.dim());
    for (c, g) in expected {
        rhs = rhs.add(&g.matrix().scale(c));
    }
    let diff = safe.project(&a.matrix().commutator(b.matrix()).sub(&rhs));
    let residual: Vec<_> = diff
        .iter()
        .map(|(r, c, v)| (basis.state(r), basis.state(c), v.to_string()))
        .collect();
    CommutatorCheck {
        left: a.label.clone(),
        right: b.label.clone(),
        margin,
        status: if residual.is_empty() { PairStatus::Pass } else { PairStatus::Fail },
        residual,
    }
}

/// [`projected_commutator_check`] that first requires the margin to be at
/// least the largest shift of `A`, `B` and every expected term.
pub fn safe_commutator_check(
    a: &FockOperator,
    b: &FockOperator,
    expected: &[(CScalar, &FockOperator)],
    margin: usize,
) -> Result<CommutatorCheck> {
    let required = expected
        .iter()
        .map(|(_, g)| g.max_shift())
        .chain([a.max_shift(), b.max_shift()])
        .max()
        .unwrap_or(0);
    if margin < required {
        return Err(Error::MarginTooSmall { margin, required });
    }
    Ok(projected_commutator_check(a, b, expected, margin))
}

/// Complex amplitudes indexed like the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FockState {
    basis: FockBasis,
    pub amplitudes: Vec<Complex64>,
}

impl FockState {
    pub fn vacuum(basis: FockBasis) -> Self {
        FockState::basis_state(basis, (0, 0))
    }

    pub fn basis_state(basis: FockBasis, state: (usize, usize)) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); basis.dim()];
        amplitudes[basis.index(state.0, state.1)] = Complex64::new(1.0, 0.0);
        FockState { basis, amplitudes }
    }

    pub fn basis(&self) -> FockBasis {
        self.basis
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn amplitude(&self, state: (usize, usize)) -> Complex64 {
        self.amplitudes[self.basis.index(state.0, state.1)]
    }

    /// Total probability on states within `quanta` of the cutoff on either mode.
    pub fn edge_population(&self, quanta: usize) -> f64 {
        let n = self.basis.cutoff();
        self.basis
            .states()
            .zip(&self.amplitudes)
            .filter(|((n1, n2), _)| n1 + quanta >= n || n2 + quanta >= n)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// `[[n1, n2, re, im], ...]`, zero amplitudes omitted.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<StateEntry> = self
            .basis
            .states()
            .zip(&self.amplitudes)
            .filter(|(_, a)| a.norm_sqr() > 0.0)
            .map(|((n1, n2), a)| StateEntry(n1, n2, a.re, a.im))
            .collect();
        serde_json::to_value(rows).expect("plain numbers serialize")
    }

    pub fn from_json(basis: FockBasis, value: &serde_json::Value) -> Result<Self> {
        let rows: Vec<StateEntry> = serde_json::from_value(value.clone())?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); basis.dim()];
        for StateEntry(n1, n2, re, im) in rows {
            if n1 > basis.cutoff() || n2 > basis.cutoff() {
                return Err(Error::InvalidState(format!("({n1}, {n2}) beyond cutoff {}", basis.cutoff())));
            }
            amplitudes[basis.index(n1, n2)] = Complex64::new(re, im);
        }
        Ok(FockState { basis, amplitudes })
    }
}

#[derive(Serialize, Deserialize)]
struct StateEntry(usize, usize, f64, f64);

type FloatSparse = BTreeMap<usize, Vec<(usize, Complex64)>>;

fn float_rows(m: &SparseMatrix) -> FloatSparse {
    let mut rows = FloatSparse::new();
    for (r, c, v) in m.to_float() {
        rows.entry(r).or_default().push((c, v));
    }
    rows
}

fn apply_rows(rows: &FloatSparse, v: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
    for (&r, row) in rows {
        out[r] = row.iter().map(|&(c, a)| a * v[c]).sum();
    }
    out
}

/// `exp(−i·t·G)·state` by a Taylor series, split into steps short
/// enough that each series converges quickly.
pub fn evolve(state: &FockState, generator: &FockOperator, t: f64) -> FockState {
    let rows = float_rows(generator.matrix());
    // max absolute row sum bounds the operator norm
    let bound = rows
        .values()
        .map(|row| row.iter().map(|(_, a)| a.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let steps = ((bound * t.abs()) / 0.5).ceil().max(1.0) as usize;
    let h = t / steps as f64;
    let factor = Complex64::new(0.0, -h);
    let mut current = state.amplitudes.clone();
    for _ in 0..steps {
        let mut term = current.clone();
        let mut sum = current.clone();
        for k in 1..60 {
            let scale = factor / k as f64;
            term = apply_rows(&rows, &term).into_iter().map(|x| x * scale).collect();
            let size: f64 = term.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            for (s, x) in sum.iter_mut().zip(&term) {
                *s += x;
            }
            if size < 1e-18 {
                break;
            }
        }
        current = sum;
    }
    FockState {
        basis: state.basis,
        amplitudes: current,
    }
}
