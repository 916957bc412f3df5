//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::process::ExitCode;

use symcheck::contraction::{contract, S};
use symcheck::linalg::{CScalar, Matrix};
use symcheck::report::SuiteReport;
use symcheck::suites::{run_suite, SuiteOptions};
use symcheck::Error;

fn suite(name: &str, cutoff: usize) -> SuiteReport {
    run_suite(name, &SuiteOptions { cutoff, ..Default::default() }).expect("suite runs")
}

/// Passes when every record whose id starts with one of `prefixes` passes.
fn records_pass(report: &SuiteReport, prefixes: &[&str]) -> (bool, String) {
    let selected: Vec<_> = report
        .records
        .iter()
        .filter(|r| prefixes.iter().any(|p| r.id.starts_with(p)))
        .collect();
    let failed: Vec<&str> = selected.iter().filter(|r| !r.passed()).map(|r| r.id.as_str()).collect();
    let ok = !selected.is_empty() && failed.is_empty();
    let why = if ok {
        format!("{} checks", selected.len())
    } else {
        let mut why = format!("{} of {} checks failed: {}", failed.len(), selected.len(), failed.join(" "));
        if let Some(note) = report.notes.iter().find(|n| n.contains("observed")) {
            why.push_str(&format!("; {note}"));
        }
        why
    };
    (ok, why)
}

fn criterion_3() -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [4, 6, 8] {
        let (pass, why) = records_pass(&suite("so32-fock", n), &["so32-fock/["]);
        ok &= pass;
        parts.push(format!("N={n}: {why}"));
    }
    (ok, parts.join(" | "))
}

fn criterion_6() -> (bool, String) {
    let i = CScalar::i();
    let five = symcheck::realizations::build_so32_5d();
    let mut ok = true;
    for (label, row) in [("Bx", 0), ("By", 1), ("Bz", 2), ("Bt", 3)] {
        let expected = Matrix::from_entries(5, [(row, S, i.clone())]);
        let got = contract(label, five.basis.get(label).unwrap(), 1).map(|c| c.limit);
        ok &= got.as_ref().ok() == Some(&expected);
    }
    let diverges = matches!(
        contract("Bx", five.basis.get("Bx").unwrap(), 0),
        Err(Error::DivergentContraction { .. })
    );
    (ok && diverges, format!("limits exact: {ok}, k = 0 diverges: {diverges}"))
}

fn main() -> ExitCode {
    let sp4 = suite("sp4", 6);
    let criteria: Vec<(&str, (bool, String))> = vec![
        ("Sp(2) closure of the differential operators", records_pass(&suite("sp2-diffop", 6), &["sp2-diffop/["])),
        ("SO(2,1) matrices close with a null y row and column", records_pass(&suite("so21-matrix", 6), &["so21-matrix/"])),
        ("Fock realization matches the ten-generator table for N in {4, 6, 8}", criterion_3()),
        ("Sp(4) closure and the six block-diagonal generators", records_pass(&sp4, &["sp4/[", "sp4/block-diagonal"])),
        ("Sp(4) infinitesimal and finite symplecticity", records_pass(&sp4, &["sp4/infinitesimal", "sp4/finite"])),
        ("contraction limits of the B generators", criterion_6()),
        ("Poincare assembly", records_pass(&suite("poincare", 6), &["poincare/"])),
        ("signed-permutation isomorphisms", records_pass(&suite("isomorphism", 6), &["isomorphism/"])),
        ("phase-space area invariance", records_pass(&suite("phase-space", 6), &["phase-space/seed-area", "phase-space/area"])),
        ("numeric and exact contraction agree at eps = 1e6", records_pass(&suite("contraction", 6), &["contraction/"])),
    ];
    let mut all = true;
    for (k, (name, (ok, why))) in criteria.iter().enumerate() {
        all &= ok;
        println!("criterion {:>2}: {} {name} ({why})", k + 1, if *ok { "PASS" } else { "FAIL" });
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
