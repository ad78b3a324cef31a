//! Command implementations behind the `hochschild` binary.

pub mod algebra_file;
pub mod commands;
pub mod parallel;
pub mod report;

use hochschild_core::hhalgebra::Violation;

pub use report::{Check, RunReport, Status};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] hochschild_core::Error),
}

impl CliError {
    /// 1 for arithmetic inconsistencies, 2 for bad input or exceeded budgets.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(hochschild_core::Error::RankMismatch { .. }) => 1,
            _ => 2,
        }
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            CliError::Core(hochschild_core::Error::InvalidPresentation(v)) => v,
            _ => &[],
        }
    }
}
