//! Structure-constant tables on disk.
//!
//! A table is a JSON array of records `{i, j, k, re, im}` meaning that
//! `[i, j]` has coefficient `re + i·im` along `k`; `re` and `im` are
//! rational strings such as `"-1/2"`. Pairs that do not appear commute.
//! Only one ordering of each pair needs to be listed; the other follows by
//! antisymmetry, and listing both with inconsistent values is an error.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::StructureConstants;
use crate::error::{Error, Result};
use crate::linalg::{CScalar, Surd};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub i: String,
    pub j: String,
    pub k: String,
    pub re: String,
    pub im: String,
}

/// The reference tables shipped with the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    /// `[J2,K1] = −iK3, [J2,K3] = iK1, [K1,K3] = iJ2`
    Sp2,
    /// `[K3,Q3] = −iS3, [Q3,S3] = iK3, [S3,K3] = iQ3`
    YurkeTriple,
    /// `[Lᵢ, Lⱼ] = iε_{ijk} Lₖ`
    Su2,
    /// The ten-generator so(3,2) relations among L, K, Q and S3.
    So32,
}

impl Table {
    pub const ALL: [Table; 4] = [Table::Sp2, Table::YurkeTriple, Table::Su2, Table::So32];

    pub fn file_name(self) -> &'static str {
        match self {
            Table::Sp2 => "sp2.json",
            Table::YurkeTriple => "yurke_triple.json",
            Table::Su2 => "su2.json",
            Table::So32 => "so32.json",
        }
    }

    /// Canonical label order.
    pub fn labels(self) -> &'static [&'static str] {
        match self {
            Table::Sp2 => &["J2", "K1", "K3"],
            Table::YurkeTriple => &["K3", "Q3", "S3"],
            Table::Su2 => &["L1", "L2", "L3"],
            Table::So32 => &["L1", "L2", "L3", "S3", "K1", "K2", "K3", "Q1", "Q2", "Q3"],
        }
    }

    fn bundled_text(self) -> &'static str {
        match self {
            Table::Sp2 => include_str!("../../tables/sp2.json"),
            Table::YurkeTriple => include_str!("../../tables/yurke_triple.json"),
            Table::Su2 => include_str!("../../tables/su2.json"),
            Table::So32 => include_str!("../../tables/so32.json"),
        }
    }
}

fn parse_component(text: &str) -> Result<Surd> {
    text.parse::<Surd>()
}

/// Builds a tensor from records over the given label order.
pub fn from_records(records: &[TableRecord], labels: &[&str]) -> Result<StructureConstants> {
    let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let index = |name: &str| {
        labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::Parse(format!("table label {name:?} not in {labels:?}")))
    };
    // (i, j) with i < j -> k -> coefficient
    let mut pairs: BTreeMap<(usize, usize), BTreeMap<usize, CScalar>> = BTreeMap::new();
    let mut seen: BTreeMap<(usize, usize, usize), CScalar> = BTreeMap::new();
    for rec in records {
        let (i, j, k) = (index(&rec.i)?, index(&rec.j)?, index(&rec.k)?);
        if i == j {
            return Err(Error::Parse(format!("record [{}, {}] has equal labels", rec.i, rec.j)));
        }
        let value = CScalar::new(parse_component(&rec.re)?, parse_component(&rec.im)?);
        let (key, value) = if i < j { ((i, j), value) } else { ((j, i), -value) };
        if let Some(previous) = seen.insert((key.0, key.1, k), value.clone()) {
            if previous != value {
                return Err(Error::Parse(format!(
                    "inconsistent records for [{}, {}] along {}",
                    rec.i, rec.j, rec.k
                )));
            }
            continue;
        }
        let slot = pairs.entry(key).or_default().entry(k).or_default();
        *slot = &*slot + &value;
    }
    let mut out = StructureConstants::empty(labels);
    for ((i, j), expansion) in pairs {
        let expansion: Vec<(usize, CScalar)> = expansion.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.set_bracket(i, j, &expansion);
    }
    Ok(out)
}

/// Records for every nonzero `c_{ij}^k` with `i < j`.
pub fn to_records(constants: &StructureConstants) -> Vec<TableRecord> {
    let labels = constants.labels();
    constants
        .entries()
        .map(|(i, j, k, v)| TableRecord {
            i: labels[i].clone(),
            j: labels[j].clone(),
            k: labels[k].clone(),
            re: v.re.to_string(),
            im: v.im.to_string(),
        })
        .collect()
}

pub fn parse(text: &str, labels: &[&str]) -> Result<StructureConstants> {
    let records: Vec<TableRecord> = serde_json::from_str(text)?;
    from_records(&records, labels)
}

pub fn bundled(table: Table) -> Result<StructureConstants> {
    parse(table.bundled_text(), table.labels())
}

/// Loads `table` from `dir` when given, else the bundled copy.
pub fn load(table: Table, dir: Option<&Path>) -> Result<StructureConstants> {
    match dir {
        Some(dir) => {
            let text = std::fs::read_to_string(dir.join(table.file_name()))?;
            parse(&text, table.labels())
        }
        None => bundled(table),
    }
}

pub fn write(constants: &StructureConstants, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&to_records(constants))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
        // sign of the permutation (i, j, k) of (0, 1, 2); zero on repeats
        if i == j || j == k || i == k {
            0
        } else if (i, j, k) == (0, 1, 2) || (i, j, k) == (1, 2, 0) || (i, j, k) == (2, 0, 1) {
            1
        } else {
            -1
        }
    }

    #[test]
    fn bundled_tables_are_lie_algebras() {
        for table in Table::ALL {
            let c = bundled(table).unwrap();
            assert!(c.is_antisymmetric(), "{table:?}");
            assert!(c.jacobi_violations().is_empty(), "{table:?}");
        }
    }

    #[test]
    fn su2_table_is_levi_civita() {
        let c = bundled(Table::Su2).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(c.coeff(i, j, k), CScalar::imag(Surd::from_int(levi_civita(i, j, k))));
                }
            }
        }
    }

    #[test]
    fn so32_table_matches_relation_list() {
        // independent rebuild of the ten-generator relations from the index formulas
        let c = bundled(Table::So32).unwrap();
        let idx = |name: String| c.index_of(&name).unwrap();
        let i = CScalar::i();
        let mut expected = StructureConstants::empty(c.labels().to_vec());
        let add = |a: usize, b: usize, k: usize, v: CScalar, t: &mut StructureConstants| {
            let mut current = t.bracket(a, b);
            current.push((k, v));
            t.set_bracket(a, b, &current);
        };
        for a in 1..=3 {
            for b in 1..=3 {
                for k in 1..=3 {
                    let e = levi_civita(a - 1, b - 1, k - 1);
                    if e == 0 || a > b {
                        continue;
                    }
                    let s = &i * &CScalar::from_int(e);
                    add(idx(format!("L{a}")), idx(format!("L{b}")), idx(format!("L{k}")), s.clone(), &mut expected);
                    add(idx(format!("K{a}")), idx(format!("K{b}")), idx(format!("L{k}")), -s.clone(), &mut expected);
                    add(idx(format!("Q{a}")), idx(format!("Q{b}")), idx(format!("L{k}")), -s, &mut expected);
                }
            }
        }
        for a in 1..=3 {
            for b in 1..=3 {
                for k in 1..=3 {
                    let e = levi_civita(a - 1, b - 1, k - 1);
                    if e == 0 {
                        continue;
                    }
                    let s = &i * &CScalar::from_int(e);
                    add(idx(format!("L{a}")), idx(format!("K{b}")), idx(format!("K{k}")), s.clone(), &mut expected);
                    add(idx(format!("L{a}")), idx(format!("Q{b}")), idx(format!("Q{k}")), s, &mut expected);
                }
            }
            let s3 = idx("S3".into());
            add(idx(format!("K{a}")), idx(format!("Q{a}")), s3, -i.clone(), &mut expected);
            add(idx(format!("K{a}")), s3, idx(format!("Q{a}")), -i.clone(), &mut expected);
            add(idx(format!("Q{a}")), s3, idx(format!("K{a}")), i.clone(), &mut expected);
        }
        assert_eq!(c, expected);
    }

    #[test]
    fn records_roundtrip() {
        let c = bundled(Table::So32).unwrap();
        let back = from_records(&to_records(&c), Table::So32.labels()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn both_orders_must_agree() {
        let rec = |i: &str, j: &str, im: &str| TableRecord {
            i: i.into(),
            j: j.into(),
            k: "L3".into(),
            re: "0".into(),
            im: im.into(),
        };
        let labels = Table::Su2.labels();
        assert!(from_records(&[rec("L1", "L2", "1"), rec("L2", "L1", "-1")], labels).is_ok());
        assert!(from_records(&[rec("L1", "L2", "1"), rec("L2", "L1", "1")], labels).is_err());
        assert!(from_records(&[rec("L1", "X", "1")], labels).is_err());
    }
}
