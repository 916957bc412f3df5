//! Two-mode Fock space: commutators on the safe subspace and time evolution.
use symcheck::fock::{evolve, safe_commutator_check, FockFamily, FockState};
use symcheck::linalg::CScalar;

fn main() -> symcheck::Result<()> {
    let fam = FockFamily::new(8, 2)?;
    let (k1, q1, s3) = (fam.get("K1").unwrap(), fam.get("Q1").unwrap(), fam.get("S3").unwrap());
    for (sign, text) in [(1, "+i"), (-1, "-i")] {
        let check = safe_commutator_check(k1, q1, &[(CScalar::imag_frac(sign, 1), s3)], 2)?;
        println!("[K1, Q1] = {text} S3 on n <= 6: {:?}", check.status);
    }
    let big = FockFamily::new(40, 2)?;
    let q3 = big.get("Q3").unwrap();
    let vacuum = FockState::vacuum(big.basis());
    for t in [0.25, 0.5, 1.0] {
        let s = evolve(&vacuum, q3, t);
        println!(
            "t = {t}: norm {:.12}, P(1,1) = {:.6}, population within 5 of the cutoff {:.2e}",
            s.norm(),
            s.amplitude((1, 1)).norm_sqr(),
            s.edge_population(5)
        );
    }
    Ok(())
}
