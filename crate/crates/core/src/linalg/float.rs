//! Floating-point views of exact matrices and the numeric exponential.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{CScalar, Matrix};

pub fn to_complex_matrix(m: &Matrix<CScalar>) -> DMatrix<Complex64> {
    let n = m.dim();
    DMatrix::from_fn(n, n, |r, c| m.get(r, c).to_complex())
}

/// `exp(−i·t·m)` in double precision (scaling and squaring with a Padé
/// approximant, via nalgebra).
pub fn exp_float(m: &Matrix<CScalar>, t: f64) -> DMatrix<Complex64> {
    let scaled = to_complex_matrix(m) * Complex64::new(0.0, -t);
    scaled.exp()
}

/// Real part of a complex matrix, or `None` if any imaginary part exceeds `tol`.
pub fn real_part(m: &DMatrix<Complex64>, tol: f64) -> Option<DMatrix<f64>> {
    if m.iter().any(|z| z.im.abs() > tol) {
        return None;
    }
    Some(m.map(|z| z.re))
}

/// Largest entry-wise modulus of `a − b`.
pub fn max_abs_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Surd;

    #[test]
    fn rotation_generator_exponentiates_to_rotation() {
        // σ₂ generates the phase-space rotation
        let sigma2 = Matrix::from_entries(2, [(0, 1, -CScalar::i()), (1, 0, CScalar::i())]);
        let theta = 0.7_f64;
        let r = exp_float(&sigma2, theta);
        let expected = DMatrix::from_row_slice(
            2,
            2,
            &[theta.cos(), -theta.sin(), theta.sin(), theta.cos()],
        )
        .map(|x| Complex64::new(x, 0.0));
        assert!(max_abs_diff(&r, &expected) <= 1e-12);
    }

    #[test]
    fn squeeze_generator_exponentiates_to_diagonal() {
        let generator = Matrix::from_entries(2, [(0, 0, CScalar::i()), (1, 1, CScalar::imag(Surd::from_int(-1)))]);
        let eta = 1.3_f64;
        let s = exp_float(&generator, eta);
        assert!((s[(0, 0)].re - eta.exp()).abs() <= 1e-12 * eta.exp());
        assert!((s[(1, 1)].re - (-eta).exp()).abs() <= 1e-12);
        assert!(s[(0, 1)].norm() <= 1e-15);
    }

    #[test]
    fn zero_time_is_identity() {
        let m = Matrix::from_entries(3, [(0, 1, CScalar::from_int(5)), (2, 0, CScalar::i())]);
        let e = exp_float(&m, 0.0);
        assert!(max_abs_diff(&e, &DMatrix::identity(3, 3)) == 0.0);
    }
}
