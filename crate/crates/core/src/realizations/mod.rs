//! Concrete generator families, built exactly.

pub mod diffop;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{FockFamily, DEFAULT_MARGIN};
use crate::lie::{LieBasis, Realization};
use crate::linalg::{CScalar, Matrix};
pub use diffop::DiffOpGenerator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Diffop,
    Matrix4Minkowski,
    Sp4PhaseSpace,
    So325d,
    Fock,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Diffop => "diffop",
            FamilyKind::Matrix4Minkowski => "matrix4-minkowski",
            FamilyKind::Sp4PhaseSpace => "sp4-phase-space",
            FamilyKind::So325d => "so32-5d",
            FamilyKind::Fock => "fock",
        }
    }
}

/// A named basis of matrices realizing some Lie algebra.
#[derive(Clone, Debug)]
pub struct GeneratorFamily {
    pub name: String,
    pub kind: FamilyKind,
    pub basis: LieBasis,
}

/// The Sp(2) differential operators together with their matrix family.
///
/// `basis` holds the action matrices on `{x, p}`, which compose like the
/// operators themselves.
#[derive(Clone, Debug)]
pub struct DiffOpFamily {
    pub operators: Vec<DiffOpGenerator>,
    pub family: GeneratorFamily,
}

fn m(dim: usize, entries: &[(usize, usize, CScalar)]) -> Matrix<CScalar> {
    Matrix::from_entries(dim, entries.iter().cloned())
}

fn i() -> CScalar {
    CScalar::i()
}

fn one(v: i64) -> CScalar {
    CScalar::from_int(v)
}

/// `J2 = −i(x∂p − p∂x)`, `K1 = −i(x∂x − p∂p)`, `K3 = −i(x∂p + p∂x)`.
pub fn build_sp2_diffop() -> DiffOpFamily {
    let operators = vec![
        DiffOpGenerator::new("J2", m(2, &[(0, 1, one(1)), (1, 0, one(-1))])),
        DiffOpGenerator::new("K1", m(2, &[(0, 0, one(1)), (1, 1, one(-1))])),
        DiffOpGenerator::new("K3", m(2, &[(0, 1, one(1)), (1, 0, one(1))])),
    ];
    let basis = LieBasis::new(
        "sp2-diffop",
        operators.iter().map(|g| (g.label.clone(), g.action_matrix())).collect(),
    )
    .expect("three distinct 2x2 generators");
    DiffOpFamily {
        family: GeneratorFamily {
            name: "sp2-diffop".into(),
            kind: FamilyKind::Diffop,
            basis,
        },
        operators,
    }
}

// coordinates (x, y, z, t)
const X: usize = 0;
const Z: usize = 2;
const T: usize = 3;

/// The three 4×4 matrices exactly as printed; `J2` here is symmetric and
/// the triple does not close.
pub fn so21_minkowski_as_printed() -> GeneratorFamily {
    let j2 = m(4, &[(X, Z, i()), (Z, X, i())]);
    so21_with_j2(j2, "so21-minkowski-as-printed")
}

/// The 4×4 triple with `J2` the antisymmetric rotation generator of the
/// `(x, z)` plane, `(x,z) = i`, `(z,x) = −i`.
pub fn build_so21_minkowski() -> GeneratorFamily {
    let j2 = m(4, &[(X, Z, i()), (Z, X, -i())]);
    so21_with_j2(j2, "so21-minkowski")
}

fn so21_with_j2(j2: Matrix<CScalar>, name: &str) -> GeneratorFamily {
    let k1 = m(4, &[(X, T, i()), (T, X, i())]);
    let k3 = m(4, &[(Z, T, i()), (T, Z, i())]);
    GeneratorFamily {
        name: name.into(),
        kind: FamilyKind::Matrix4Minkowski,
        basis: LieBasis::new(name, vec![("J2".into(), j2), ("K1".into(), k1), ("K3".into(), k3)]).expect("valid"),
    }
}

pub fn pauli(k: usize) -> Matrix<CScalar> {
    match k {
        0 => Matrix::identity(2),
        1 => m(2, &[(0, 1, one(1)), (1, 0, one(1))]),
        2 => m(2, &[(0, 1, -i()), (1, 0, i())]),
        3 => m(2, &[(0, 0, one(1)), (1, 1, one(-1))]),
        _ => panic!("Pauli index {k} out of range"),
    }
}

fn pattern(rows: [[i64; 2]; 2]) -> Matrix<CScalar> {
    Matrix::from_fn(2, |r, c| one(rows[r][c]))
}

/// Symplectic form on `(x1, p1, x2, p2)`.
pub fn symplectic_j4() -> Matrix<CScalar> {
    m(4, &[(0, 1, one(1)), (1, 0, one(-1)), (2, 3, one(1)), (3, 2, one(-1))])
}

/// Ten 4×4 generators on `(x1, p1, x2, p2)`, each `c·(pattern ⊗ inner)`.
pub fn build_sp4_phase_space() -> GeneratorFamily {
    let half = CScalar::from_frac(1, 2);
    let ihalf = &i() * &half;
    let offdiag = pattern([[0, 1], [1, 0]]);
    let ident = pattern([[1, 0], [0, 1]]);
    let split = pattern([[1, 0], [0, -1]]);
    let gen = |c: CScalar, p: &Matrix<CScalar>, inner: usize| Matrix::kron(p, &pauli(inner)).scale(&c);
    let generators = vec![
        ("L1", gen(-half.clone(), &offdiag, 2)),
        ("L2", gen(ihalf.clone(), &pattern([[0, -1], [1, 0]]), 0)),
        ("L3", gen(half.clone(), &pattern([[-1, 0], [0, 1]]), 2)),
        ("S3", gen(half.clone(), &ident, 2)),
        ("K1", gen(ihalf.clone(), &split, 1)),
        ("K2", gen(ihalf.clone(), &ident, 3)),
        ("K3", gen(-ihalf.clone(), &offdiag, 1)),
        ("Q1", gen(-ihalf.clone(), &split, 3)),
        ("Q2", gen(ihalf.clone(), &ident, 1)),
        ("Q3", gen(ihalf, &offdiag, 3)),
    ];
    GeneratorFamily {
        name: "sp4-phase-space".into(),
        kind: FamilyKind::Sp4PhaseSpace,
        basis: LieBasis::new(
            "sp4-phase-space",
            generators.into_iter().map(|(l, g)| (l.to_string(), g)).collect(),
        )
        .expect("valid"),
    }
}

/// Generators that do not mix the two oscillators.
pub fn block_diagonal_labels(family: &GeneratorFamily) -> Vec<String> {
    family
        .basis
        .iter()
        .filter(|(_, g)| g.nonzero().all(|(r, c, _)| r / 2 == c / 2))
        .map(|(l, _)| l.to_string())
        .collect()
}

/// Metric `(+,+,+,−,−)` on `(x, y, z, t, s)`.
pub const METRIC_5D: [i64; 5] = [1, 1, 1, -1, -1];

/// `(L_{ab})_{cd} = −i(δ_{ca} g_{bd} − δ_{cb} g_{ad})`.
pub fn so32_generator(a: usize, b: usize) -> Matrix<CScalar> {
    let g = METRIC_5D;
    m(5, &[(a, b, &-i() * &one(g[b])), (b, a, &i() * &one(g[a]))])
}

pub const SO32_LABELS: [&str; 10] = ["Jx", "Jy", "Jz", "Ax", "Ay", "Az", "Bx", "By", "Bz", "Bt"];

pub fn build_so32_5d() -> GeneratorFamily {
    let (x, y, z, t, s) = (0, 1, 2, 3, 4);
    let pairs = [(y, z), (z, x), (x, y), (x, t), (y, t), (z, t), (x, s), (y, s), (z, s), (t, s)];
    let generators = SO32_LABELS
        .iter()
        .zip(pairs)
        .map(|(l, (a, b))| (l.to_string(), so32_generator(a, b)))
        .collect();
    GeneratorFamily {
        name: "so32-5d".into(),
        kind: FamilyKind::So325d,
        basis: LieBasis::new("so32-5d", generators).expect("valid"),
    }
}

pub fn build_fock_family(cutoff: usize) -> Result<FockFamily> {
    FockFamily::new(cutoff, DEFAULT_MARGIN)
}

/// Any family addressable by name from the command line.
pub enum AnyFamily {
    Dense(GeneratorFamily),
    Fock(FockFamily),
}

impl AnyFamily {
    pub fn realization(&self) -> &dyn Realization {
        match self {
            AnyFamily::Dense(f) => &f.basis,
            AnyFamily::Fock(f) => f,
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            AnyFamily::Dense(f) => f.kind,
            AnyFamily::Fock(_) => FamilyKind::Fock,
        }
    }
}

pub const FAMILY_NAMES: [&str; 6] = [
    "sp2-diffop",
    "so21-minkowski",
    "so21-minkowski-as-printed",
    "sp4-phase-space",
    "so32-5d",
    "so32-fock",
];

pub fn family_by_name(name: &str, cutoff: usize) -> Result<AnyFamily> {
    Ok(match name {
        "sp2-diffop" => AnyFamily::Dense(build_sp2_diffop().family),
        "so21-minkowski" => AnyFamily::Dense(build_so21_minkowski()),
        "so21-minkowski-as-printed" => AnyFamily::Dense(so21_minkowski_as_printed()),
        "sp4-phase-space" | "sp4" => AnyFamily::Dense(build_sp4_phase_space()),
        "so32-5d" => AnyFamily::Dense(build_so32_5d()),
        "so32-fock" | "fock" => AnyFamily::Fock(build_fock_family(cutoff)?),
        _ => {
            return Err(Error::Unknown {
                kind: "family",
                name: name.into(),
            })
        }
    })
}

#[derive(Serialize)]
struct EntryJson {
    row: usize,
    col: usize,
    re: String,
    im: String,
}

#[derive(Serialize)]
struct MatrixJson {
    name: String,
    dim: usize,
    entries: Vec<EntryJson>,
}

#[derive(Serialize)]
struct FamilyJson {
    family: String,
    kind: &'static str,
    matrices: Vec<MatrixJson>,
}

/// `{family, kind, matrices: [{name, dim, entries: [{row, col, re, im}]}]}`
/// with exact scalar strings; only nonzero entries are listed.
pub fn export_json(family: &AnyFamily) -> serde_json::Value {
    let r = family.realization();
    let matrices = (0..r.labels().len())
        .map(|k| MatrixJson {
            name: r.labels()[k].clone(),
            dim: r.dim(),
            entries: match family {
                AnyFamily::Dense(f) => f
                    .basis
                    .matrix(k)
                    .nonzero()
                    .map(|(row, col, v)| EntryJson { row, col, re: v.re.to_string(), im: v.im.to_string() })
                    .collect(),
                AnyFamily::Fock(f) => f.operators()[k]
                    .matrix()
                    .iter()
                    .map(|(row, col, v)| EntryJson { row, col, re: v.re.to_string(), im: v.im.to_string() })
                    .collect(),
            },
        })
        .collect();
    serde_json::to_value(FamilyJson {
        family: r.name().to_string(),
        kind: family.kind().as_str(),
        matrices,
    })
    .expect("strings and integers serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::table::{bundled, Table};
    use crate::lie::{extract_structure_constants, find_basis_map, verify_closure};
    use num_traits::Zero;

    #[test]
    fn diffop_constants_are_minus_two_times_table() {
        let fam = build_sp2_diffop();
        let c = extract_structure_constants(&fam.family.basis).unwrap();
        let table = bundled(Table::Sp2).unwrap();
        for (a, b, k, v) in table.entries() {
            assert_eq!(c.coeff(a, b, k), v * &one(-2));
        }
        assert!(!verify_closure(&fam.family.basis, &table).passed());
    }

    #[test]
    fn diffop_rotation_on_linear_monomials() {
        let fam = build_sp2_diffop();
        let j2 = &fam.operators[0];
        let on_x = j2.apply(&diffop::monomial(1, 0));
        assert_eq!(on_x, diffop::Polynomial::from([((0, 1), i())]));
    }

    #[test]
    fn so21_closes_and_has_null_y() {
        let fam = build_so21_minkowski();
        assert!(verify_closure(&fam.basis, &bundled(Table::Sp2).unwrap()).passed());
        for (_, g) in fam.basis.iter() {
            for k in 0..4 {
                assert!(g.get(1, k).is_zero() && g.get(k, 1).is_zero());
            }
        }
    }

    #[test]
    fn printed_j2_does_not_close() {
        let fam = so21_minkowski_as_printed();
        assert!(extract_structure_constants(&fam.basis).is_err());
        assert!(!verify_closure(&fam.basis, &bundled(Table::Sp2).unwrap()).passed());
    }

    #[test]
    fn corrected_j2_is_the_only_single_entry_fix() {
        // flip the sign of one nonzero entry of one printed matrix at a time
        let printed = so21_minkowski_as_printed();
        let table = bundled(Table::Sp2).unwrap();
        let mut fixes = Vec::new();
        for (label, g) in printed.basis.iter() {
            for (r, c, v) in g.nonzero() {
                let mut flipped = g.clone();
                flipped.set(r, c, -v);
                let candidate = printed.basis.with_replaced(label, flipped).unwrap();
                if verify_closure(&candidate, &table).passed() {
                    fixes.push((label.to_string(), r, c));
                }
            }
        }
        assert_eq!(fixes, vec![("J2".to_string(), Z, X)]);
    }

    #[test]
    fn sp4_closes_against_table_and_is_symplectic() {
        let fam = build_sp4_phase_space();
        let report = verify_closure(&fam.basis, &bundled(Table::So32).unwrap());
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        let j = symplectic_j4();
        for (label, g) in fam.basis.iter() {
            let real = g.scale(&-i());
            assert!(real.is_real(), "{label}");
            assert!((&(&real.transpose() * &j) + &(&j * &real)).is_zero(), "{label}");
        }
    }

    #[test]
    fn sp4_diagonal_generators() {
        let mut diag = block_diagonal_labels(&build_sp4_phase_space());
        diag.sort();
        assert_eq!(diag, ["K1", "K2", "L3", "Q1", "Q2", "S3"]);
    }

    #[test]
    fn so32_5d_printed_entries() {
        let fam = build_so32_5d();
        let ax = fam.basis.get("Ax").unwrap();
        assert_eq!(ax, &m(5, &[(0, 3, i()), (3, 0, i())]));
        assert_eq!(fam.basis.get("Bx").unwrap(), &m(5, &[(0, 4, i()), (4, 0, i())]));
        assert_eq!(fam.basis.get("Bt").unwrap(), &m(5, &[(3, 4, i()), (4, 3, -i())]));
    }

    #[test]
    fn so32_5d_isomorphic_to_sp4() {
        let five = extract_structure_constants(&build_so32_5d().basis).unwrap();
        let four = extract_structure_constants(&build_sp4_phase_space().basis).unwrap();
        let map = find_basis_map(&four, &five).unwrap().expect("signed-permutation match");
        assert!(crate::lie::isomorphism::verify_map(&map, &four, &five));
    }

    #[test]
    fn export_lists_nonzero_entries() {
        let json = export_json(&family_by_name("so32-5d", 4).unwrap());
        assert_eq!(json["kind"], "so32-5d");
        let bt = &json["matrices"][9];
        assert_eq!(bt["name"], "Bt");
        assert_eq!(bt["entries"].as_array().unwrap().len(), 2);
        assert!(family_by_name("nope", 4).is_err());
        let fock = export_json(&family_by_name("so32-fock", 4).unwrap());
        assert_eq!(fock["matrices"][0]["dim"], 25);
    }
}
