//! First-order operators on polynomials in (x, p) and their commutators.
use symcheck::lie::{extract_structure_constants, Realization};
use symcheck::realizations::build_sp2_diffop;
use symcheck::realizations::diffop::monomial;

fn main() -> symcheck::Result<()> {
    let fam = build_sp2_diffop();
    let x = monomial(1, 0);
    for op in &fam.operators {
        println!("{} x = {:?}", op.label, op.apply(&x));
    }
    let c = extract_structure_constants(&fam.family.basis)?;
    for a in 0..c.len() {
        for b in a + 1..c.len() {
            println!("{}", c.describe_bracket(a, b));
        }
    }
    println!("basis labels: {:?}", fam.family.basis.labels());
    Ok(())
}
