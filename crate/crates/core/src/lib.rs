pub mod contraction;
pub mod error;
pub mod fock;
pub mod lie;
pub mod linalg;
pub mod phase_space;
pub mod realizations;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
