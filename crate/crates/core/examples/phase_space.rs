//! Gaussian Wigner functions under rotations and squeezes.
use symcheck::phase_space::{rotation, squeeze, transform_gaussian, uncertainty_area, GaussianState, DEFAULT_TOL};

fn main() -> symcheck::Result<()> {
    let seed = GaussianState::seed(2)?;
    println!("seed W(0,0) = {:.6}, area = {:.12}", seed.wigner(&[0.0, 0.0])?, uncertainty_area(&seed)?);
    for eta in [0.3, 1.2] {
        let s = transform_gaussian(&seed, &squeeze(eta), DEFAULT_TOL)?;
        let r = transform_gaussian(&s, &rotation(0.7), DEFAULT_TOL)?;
        println!("eta = {eta}: covariance diag {:.4?}, area after rotation {:.12}", s.covariance().diagonal().as_slice(), uncertainty_area(&r)?);
    }
    let bad = nalgebra::DMatrix::identity(2, 2) * 2.0;
    println!("doubling map: {}", transform_gaussian(&seed, &bad, DEFAULT_TOL).unwrap_err());
    Ok(())
}
