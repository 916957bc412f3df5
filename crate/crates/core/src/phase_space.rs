//! Centered Gaussian Wigner functions and linear canonical maps.
//!
//! A state with covariance `Σ` has Wigner function
//! `W(q) = exp(−qᵀΣ⁻¹q) / (π^{d/2}·√det Σ)`; the seed state `Σ = I` is
//! the minimum-uncertainty Gaussian `exp(−(x² + p²))/π`.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{exp_float, float::real_part, CScalar, Matrix};

pub const DEFAULT_TOL: f64 = 1e-12;

/// `J` on `(x1, p1, x2, p2)`, or its upper-left block in two dimensions.
pub fn symplectic_form(dim: usize) -> Result<DMatrix<f64>> {
    check_dim(dim)?;
    let mut j = DMatrix::zeros(dim, dim);
    for block in 0..dim / 2 {
        j[(2 * block, 2 * block + 1)] = 1.0;
        j[(2 * block + 1, 2 * block)] = -1.0;
    }
    Ok(j)
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 2 || dim == 4 {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: dim, right: 4 })
    }
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

/// `max |MJMᵀ − J|`.
pub fn canonical_deviation(m: &DMatrix<f64>) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { left: m.nrows(), right: m.ncols() });
    }
    let j = symplectic_form(m.nrows())?;
    Ok(max_abs(&(m * &j * m.transpose() - &j)))
}

pub fn is_canonical(m: &DMatrix<f64>, tol: f64) -> Result<bool> {
    Ok(canonical_deviation(m)? <= tol)
}

pub fn rotation(theta: f64) -> DMatrix<f64> {
    let (s, c) = theta.sin_cos();
    DMatrix::from_row_slice(2, 2, &[c, -s, s, c])
}

pub fn squeeze(eta: f64) -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[eta.exp(), 0.0, 0.0, (-eta).exp()])
}

/// The real group element `exp(−i·t·G)` of a generator whose `−iG` is real.
pub fn group_element(g: &Matrix<CScalar>, t: f64) -> Option<DMatrix<f64>> {
    real_part(&exp_float(g, t), 1e-12)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaussianState {
    covariance: DMatrix<f64>,
}

impl GaussianState {
    pub fn new(covariance: DMatrix<f64>) -> Result<Self> {
        check_dim(covariance.nrows())?;
        if !covariance.is_square() {
            return Err(Error::InvalidState("covariance must be square".into()));
        }
        if max_abs(&(&covariance - covariance.transpose())) > DEFAULT_TOL * max_abs(&covariance).max(1.0) {
            return Err(Error::InvalidState("covariance must be symmetric".into()));
        }
        if covariance.clone().cholesky().is_none() {
            return Err(Error::InvalidState("covariance must be positive definite".into()));
        }
        Ok(GaussianState { covariance })
    }

    pub fn seed(dim: usize) -> Result<Self> {
        GaussianState::new(DMatrix::identity(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.covariance.nrows()
    }

    pub fn covariance(&self) -> &DMatrix<f64> {
        &self.covariance
    }

    pub fn wigner(&self, q: &[f64]) -> Result<f64> {
        if q.len() != self.dim() {
            return Err(Error::DimensionMismatch { left: q.len(), right: self.dim() });
        }
        let v = nalgebra::DVector::from_column_slice(q);
        let inv = self.covariance.clone().try_inverse().expect("positive definite");
        let exponent = (v.transpose() * inv * &v)[(0, 0)];
        let norm = std::f64::consts::PI.powf(self.dim() as f64 / 2.0) * self.covariance.determinant().sqrt();
        Ok((-exponent).exp() / norm)
    }
}

/// `Σ ↦ MΣMᵀ`; `M` must be canonical within `tol`.
pub fn transform_gaussian(state: &GaussianState, m: &DMatrix<f64>, tol: f64) -> Result<GaussianState> {
    if m.nrows() != state.dim() {
        return Err(Error::DimensionMismatch { left: m.nrows(), right: state.dim() });
    }
    let deviation = canonical_deviation(m)?;
    if deviation > tol {
        return Err(Error::NotCanonical { deviation });
    }
    let cov = m * state.covariance() * m.transpose();
    // restore exact symmetry lost to rounding
    let cov = (&cov + cov.transpose()) * 0.5;
    GaussianState::new(cov)
}

/// Area `π·√det Σ` of the one-sigma ellipse of a two-dimensional state.
pub fn uncertainty_area(state: &GaussianState) -> Result<f64> {
    if state.dim() != 2 {
        return Err(Error::InvalidState(format!("area needs a 2D state, got dimension {}", state.dim())));
    }
    Ok(std::f64::consts::PI * state.covariance().determinant().sqrt())
}
