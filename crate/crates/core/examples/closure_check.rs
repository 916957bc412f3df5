//! Compare a matrix family against a reference structure-constant table.
use symcheck::lie::table::{bundled, Table};
use symcheck::lie::verify_closure;
use symcheck::realizations::{build_so21_minkowski, build_sp4_phase_space};

fn main() -> symcheck::Result<()> {
    let so21 = build_so21_minkowski();
    let report = verify_closure(&so21.basis, &bundled(Table::Sp2)?);
    for p in &report.pairs {
        println!("[{},{}] = {:<14} {:?}", p.left, p.right, p.expected, p.status);
    }
    let sp4 = build_sp4_phase_space();
    let report = verify_closure(&sp4.basis, &bundled(Table::So32)?);
    println!("sp4: {} pairs, all pass: {}", report.pairs.len(), report.passed());
    Ok(())
}
