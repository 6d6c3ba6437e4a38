use std::path::PathBuf;

use sgsf_algebra::AlgebraError;
use sgsf_basis::BasisError;
use sgsf_rhs::RhsError;
use sgsf_transforms::TransformError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("unknown format '{0}'")]
    UnknownFormat(String),
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("malformed input: {0}")]
    Input(String),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rhs(#[from] RhsError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

impl VerifyError {
    pub(crate) fn io(path: impl Into<PathBuf>, err: impl std::fmt::Display) -> Self {
        VerifyError::Io {
            path: path.into(),
            message: err.to_string(),
        }
    }
}
