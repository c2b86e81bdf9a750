//! Exact-arithmetic toolkit for classifying 2-dimensional braided Hopf algebras
//! over group-type quasi-Hopf algebras and for building and verifying the
//! rank-2 biproduct quasi-Hopf algebras they induce.
//!
//! Everything is computed over exact domains: arbitrary-precision integers
//! for lattice work, root-of-unity exponents for cocycle tables, and the
//! cyclotomic field `Q(zeta_N)` for structure constants. There is no floating
//! point anywhere in the crate.

pub mod classify;
pub mod cocycles;
pub mod cyclo;
pub mod groups;
pub mod qha;
pub mod zlattice;

use thiserror::Error;

/// Crate-wide error type. CLI maps every variant to a one-line diagnostic.
#[derive(Debug, Error)]
pub enum Error {
    #[error("exhaustive cap exceeded: needed {needed}, cap {cap}")]
    CapExceeded { needed: u64, cap: u64 },
    #[error("invalid group spec: {0}")]
    InvalidGroup(String),
    #[error("invalid cocycle datum: {0}")]
    InvalidDatum(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular element: {0}")]
    Singular(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
