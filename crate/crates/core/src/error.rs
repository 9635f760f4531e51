//! Crate-wide error type. Checker verdicts are not errors: a failed identity
//! is a report entry, while these variants signal violated preconditions or
//! malformed inputs.

use thiserror::Error;

use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("singular matrix: determinant is identically zero")]
    SingularMatrix,

    #[error("rank-deficient spanning set")]
    RankDeficient,

    #[error("sections are hosted on different algebroids")]
    HostMismatch,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("hypothesis failure: {0}")]
    HypothesisFailure(String),

    #[error("subbundle is not isotropic for the symmetric pairing")]
    NotIsotropic,

    #[error("subbundle is not closed under the Courant bracket")]
    NotIntegrable,

    #[error("subbundles are not transverse")]
    NotTransverse,

    #[error("bivector is not hamiltonian: induced bracket table fails the Lie algebroid checks")]
    NotHamiltonian(Box<CheckReport>),

    #[error("subbundle pair is not a null Dirac structure")]
    NotNullDirac(Box<CheckReport>),

    #[error("bivector is not a Poisson tensor: its Schouten square is nonzero")]
    NotPoisson,
}

pub type Result<T> = std::result::Result<T, Error>;
