//! Contract the 5x5 so(3,2) family to the Poincare algebra.
use symcheck::contraction::{build_poincare_basis, contract_family, translation_matrix};
use symcheck::lie::extract_structure_constants;
use symcheck::linalg::CScalar;

fn main() -> symcheck::Result<()> {
    for c in contract_family()? {
        println!("{:<4} k = {}  limit nonzero at {:?}", c.label, c.k, c.limit.nonzero().map(|(r, k, _)| (r, k)).collect::<Vec<_>>());
    }
    let poincare = extract_structure_constants(&build_poincare_basis()?)?;
    let idx = |l: &str| poincare.index_of(l).unwrap();
    println!("{}", poincare.describe_bracket(idx("Ax"), idx("Bct")));
    println!("{}", poincare.describe_bracket(idx("Bcx"), idx("Bct")));
    let t = translation_matrix(&CScalar::from_int(1), &CScalar::from_int(0), &CScalar::sqrt(2), &CScalar::from_frac(1, 2))?;
    println!("last column of the translation: {:?}", (0..5).map(|r| t.get(r, 4).to_string()).collect::<Vec<_>>());
    Ok(())
}
