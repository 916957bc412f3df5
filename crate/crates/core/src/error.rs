use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix of dimension {dim} is not nilpotent; use exp_float")]
    NotNilpotent { dim: usize },

    #[error("not closed: [{left}, {right}] leaves the span; residual {residual}")]
    NotClosed {
        left: String,
        right: String,
        residual: String,
    },

    #[error("generators are linearly dependent: {0} lies in the span of the preceding ones")]
    LinearlyDependent(String),

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("divergent contraction: {}", format_degrees(.entries))]
    DivergentContraction { entries: Vec<(usize, usize, i32)> },

    #[error("cutoff {cutoff} too small (need at least {minimum})")]
    CutoffTooSmall { cutoff: usize, minimum: usize },

    #[error("margin {margin} too small for operators shifting up to {required} quanta per mode")]
    MarginTooSmall { margin: usize, required: usize },

    #[error("matrix is not canonical: |MJM^T - J|max = {deviation:e}")]
    NotCanonical { deviation: f64 },

    #[error("invalid Gaussian state: {0}")]
    InvalidState(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn format_degrees(entries: &[(usize, usize, i32)]) -> String {
    entries
        .iter()
        .map(|(r, c, d)| format!("({r},{c}) has eps^{d}"))
        .collect::<Vec<_>>()
        .join(", ")
}
