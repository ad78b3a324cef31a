//! Hochschild cohomology of finite-dimensional algebras presented by
//! structure constants.
//!
//! The main computation uses the normalized cochain complex relative to the
//! separable subalgebra `E` spanned by a complete set of orthogonal
//! idempotents, whose cochains are indexed by composable words in the
//! vertex-graded basis of the radical-like ideal `J`. The full bar complex
//! over the ground ring is kept as a low-degree cross-check.

mod bar;
mod complex;
mod linalg;
mod presentation;

pub use bar::{bar_differential, hh_dimensions_bar, DEFAULT_BAR_CAP};
pub use complex::{
    center_dimension, cochain_dimension, differential_matrix, hh_dimensions,
    hh_dimensions_with_cap, HHReport, RelativeComplex, DEFAULT_COCHAIN_CAP,
};
pub use linalg::{rank, rank_exact, rank_mod_prime, IntMatrix, CHECK_PRIME};
pub use presentation::{
    builtin, AlgebraPresentation, BasisKind, Combination, Side, Violation, BUILTIN_NAMES,
};

/// Checks a presentation; see [`AlgebraPresentation::validate`].
pub fn validate(algebra: &AlgebraPresentation) -> Result<(), alloc::vec::Vec<Violation>> {
    algebra.validate()
}
