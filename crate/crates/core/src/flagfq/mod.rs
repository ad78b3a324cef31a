//! Brute-force ground truth over prime fields.
//!
//! Flags of `F_p^n` are enumerated exhaustively (one column echelon
//! representative each), relative positions are computed from rank tables,
//! and the configuration spaces are counted point by point. Nothing here
//! uses the Hecke algebra; it is the independent side of every comparison.

mod count;
mod field;
mod flag;
mod matrix;

pub use count::{
    count_hoch_stratum_bruteforce, count_middle_flags, relative_position, stratum_work, CountLevel,
    HochStratumCounter, MiddleFlagCounter, PositionProbe, DEFAULT_HOCH_BUDGET,
};
pub use field::{is_prime, PrimeField, PrimeFieldScalar};
pub use flag::{
    canonical_cell_point, enumerate_cell, enumerate_flags, enumerate_unipotent, flag_count,
    unipotent_count, Flag, UnipotentMatrix, DEFAULT_ENUMERATION_CAP,
};
pub use matrix::FpMatrix;
