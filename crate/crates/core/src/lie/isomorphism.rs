//! Signed-permutation isomorphisms between structure-constant tensors.
//!
//! A map sends source generator `Gᵢ` to `sᵢ·G'_{p(i)}`, so it is valid
//! exactly when `d_{p(i)p(j)}^{p(k)} = sᵢsⱼsₖ·c_{ij}^k` for every triple.
//! Among all valid maps the one with the lexicographically smallest sign
//! vector (`+` before `−`) wins, ties broken by the smallest permutation.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::StructureConstants;
use crate::error::{Error, Result};
use crate::linalg::CScalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapEntry {
    pub src: String,
    pub dst: String,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisMap {
    pub entries: Vec<MapEntry>,
}

impl BasisMap {
    pub fn permutation(&self, dst_labels: &[String]) -> Vec<usize> {
        self.entries
            .iter()
            .map(|e| dst_labels.iter().position(|l| *l == e.dst).expect("label of target"))
            .collect()
    }

    pub fn signs(&self) -> Vec<i8> {
        self.entries.iter().map(|e| e.sign).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|e| e.src == e.dst && e.sign == 1)
    }

    /// Transports `src` through the map, producing a tensor over the
    /// target labels in the order they are listed in `dst_labels`.
    pub fn apply(&self, src: &StructureConstants, dst_labels: &[String]) -> Result<StructureConstants> {
        if src.labels().len() != self.entries.len() || dst_labels.len() != self.entries.len() {
            return Err(Error::DimensionMismatch {
                left: src.len(),
                right: dst_labels.len(),
            });
        }
        let src = src.relabeled(&self.entries.iter().map(|e| e.src.clone()).collect::<Vec<_>>())?;
        let perm = self.permutation(dst_labels);
        let signs = self.signs();
        let mut out = StructureConstants::empty(dst_labels.to_vec());
        for i in 0..src.len() {
            for j in i + 1..src.len() {
                let expansion: Vec<(usize, CScalar)> = src
                    .bracket(i, j)
                    .into_iter()
                    .map(|(k, v)| (perm[k], signed(&v, signs[i] * signs[j] * signs[k])))
                    .collect();
                out.set_bracket(perm[i], perm[j], &expansion);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for BasisMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("{} -> {}{}", e.src, if e.sign < 0 { "-" } else { "" }, e.dst))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

fn signed(v: &CScalar, sign: i8) -> CScalar {
    if sign < 0 {
        -v
    } else {
        v.clone()
    }
}

/// Data preserved by any signed permutation: the Killing diagonal, the
/// number of nonzero brackets, and the sorted squared coefficients.
#[derive(PartialEq, Eq)]
struct Fingerprint {
    killing: CScalar,
    degree: usize,
    squares: Vec<String>,
}

fn fingerprint(c: &StructureConstants, i: usize) -> Fingerprint {
    let mut degree = 0;
    let mut squares = Vec::new();
    for j in 0..c.len() {
        let bracket = c.bracket(i, j);
        if !bracket.is_empty() {
            degree += 1;
        }
        squares.extend(bracket.iter().map(|(_, v)| (v * v).to_string()));
    }
    squares.sort();
    Fingerprint {
        killing: c.killing_diagonal(i),
        degree,
        squares,
    }
}

struct Search<'a> {
    src: &'a StructureConstants,
    dst: &'a StructureConstants,
    candidates: Vec<Vec<usize>>,
    perm: Vec<usize>,
    signs: Vec<i8>,
    used: Vec<bool>,
    best: Option<(Vec<i8>, Vec<usize>)>,
}

// `+` sorts before `−`
fn sign_key(signs: &[i8]) -> Vec<u8> {
    signs.iter().map(|&s| u8::from(s < 0)).collect()
}

impl Search<'_> {
    // all triples whose indices are ≤ m, with at least one equal to m
    fn consistent(&self, m: usize) -> bool {
        let (c, d, p, s) = (self.src, self.dst, &self.perm, &self.signs);
        for i in 0..=m {
            for j in 0..=m {
                for k in 0..=m {
                    if i != m && j != m && k != m {
                        continue;
                    }
                    let expected = signed(&c.coeff(i, j, k), s[i] * s[j] * s[k]);
                    if d.coeff(p[i], p[j], p[k]) != expected {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dominated(&self, m: usize) -> bool {
        match &self.best {
            Some((best, _)) => sign_key(&self.signs[..=m]) > sign_key(&best[..=m]),
            None => false,
        }
    }

    fn run(&mut self, m: usize) {
        let n = self.src.len();
        if m == n {
            let candidate = (self.signs.clone(), self.perm.clone());
            let better = match &self.best {
                None => true,
                Some((s, p)) => (sign_key(&candidate.0), &candidate.1) < (sign_key(s), p),
            };
            if better {
                self.best = Some(candidate);
            }
            return;
        }
        for sign in [1i8, -1] {
            for ci in 0..self.candidates[m].len() {
                let q = self.candidates[m][ci];
                if self.used[q] {
                    continue;
                }
                self.perm[m] = q;
                self.signs[m] = sign;
                if self.dominated(m) {
                    continue;
                }
                if !self.consistent(m) {
                    continue;
                }
                self.used[q] = true;
                self.run(m + 1);
                self.used[q] = false;
            }
        }
    }
}

/// Exhaustive signed-permutation search with fingerprint pruning.
///
/// `Ok(None)` means no signed permutation relates the two tensors; an
/// error is returned only for tensors of different sizes.
pub fn find_basis_map(src: &StructureConstants, dst: &StructureConstants) -> Result<Option<BasisMap>> {
    let n = src.len();
    if dst.len() != n {
        return Err(Error::DimensionMismatch { left: n, right: dst.len() });
    }
    let dst_prints: Vec<Fingerprint> = (0..n).map(|q| fingerprint(dst, q)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let print = fingerprint(src, i);
            (0..n).filter(|&q| dst_prints[q] == print).collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let mut search = Search {
        src,
        dst,
        candidates,
        perm: vec![0; n],
        signs: vec![1; n],
        used: vec![false; n],
        best: None,
    };
    search.run(0);
    Ok(search.best.map(|(signs, perm)| BasisMap {
        entries: (0..n)
            .map(|i| MapEntry {
                src: src.labels()[i].clone(),
                dst: dst.labels()[perm[i]].clone(),
                sign: signs[i],
            })
            .collect(),
    }))
}

/// Independent re-check of a map: every transported coefficient must
/// match, and every nonzero target coefficient must be hit.
pub fn verify_map(map: &BasisMap, src: &StructureConstants, dst: &StructureConstants) -> bool {
    match map.apply(src, dst.labels()) {
        Ok(image) => {
            let a: BTreeMap<_, _> = image.entries().map(|(i, j, k, v)| ((i, j, k), v.clone())).collect();
            let b: BTreeMap<_, _> = dst.entries().map(|(i, j, k, v)| ((i, j, k), v.clone())).collect();
            a == b && a.values().all(|v| !v.is_zero())
        }
        Err(_) => false,
    }
}
