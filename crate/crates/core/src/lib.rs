//! Exact counting machinery for the Hochschild cohomology of the principal
//! block of category O in type A.
//!
//! The crate is `no_std` (it needs `alloc`) and purely computational:
//!
//! * [`weyl`]: permutations of `S_n`, lengths, reduced words.
//! * [`polynomial`]: integer polynomials in `q` and exact interpolation.
//! * [`hecke`]: the Iwahori–Hecke algebra in the `T` basis.
//! * [`flagfq`]: brute-force enumeration of flags over prime fields.
//! * [`hochspace`]: point counts of the Hochschild space and its strata.
//! * [`hhalgebra`]: Hochschild cohomology of algebras given by structure constants.
//!
//! IO, parallel drivers and the command line live in `hochschild-cli`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod flagfq;
pub mod hecke;
pub mod hhalgebra;
pub mod hochspace;
pub mod polynomial;
pub mod weyl;

pub use error::{Error, Result};
pub use hecke::HeckeElement;
pub use polynomial::IntPolynomial;
pub use weyl::Permutation;
