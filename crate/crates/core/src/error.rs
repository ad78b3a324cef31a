use alloc::string::String;
use alloc::vec::Vec;

use crate::hhalgebra::Violation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An enumeration or cochain space would exceed its configured cap.
    #[error("resource limit exceeded: {what} needs {required}, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    #[error("interpolation is not integral: coefficient of q^{degree} is {value}")]
    InterpolationNotIntegral { degree: usize, value: String },

    #[error("invalid algebra presentation ({} violation(s))", .0.len())]
    InvalidPresentation(Vec<Violation>),

    /// Exact rank and modular rank disagree.
    #[error("rank mismatch: {exact} over the rationals, {modular} modulo {prime}")]
    RankMismatch {
        exact: usize,
        modular: usize,
        prime: u64,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}
