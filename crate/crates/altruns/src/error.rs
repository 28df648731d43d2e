//! Error types shared across the crate.
//!
//! The exactness errors ([`Error::NonDivisible`], [`Error::InexactDivision`],
//! [`Error::NonInteger`]) are tripwires: every division performed by the
//! identity-level formulas in this crate is provably exact, so hitting one of
//! them means an implementation bug, never a data condition. They are
//! surfaced as hard errors instead of being rounded away.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coefficient was not divisible by the required power of two.
    #[error("coefficient at index {index} is not divisible by 2^{exponent}")]
    NonDivisible { index: usize, exponent: usize },

    /// The zero polynomial has no root multiplicity.
    #[error("zero polynomial has no root multiplicity")]
    ZeroPolynomial,

    /// Two series with different truncation orders were combined.
    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// An integer-valued formula produced a non-integer intermediate.
    #[error("inexact division in {context}")]
    InexactDivision { context: String },

    /// A rational-valued computation that must end integral did not.
    #[error("non-integer result in {context}: {value}")]
    NonInteger { context: String, value: String },

    /// An argument was outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force enumeration request exceeded the configured cap.
    #[error("enumeration of S_{n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

impl Error {
    /// True for the exactness-tripwire variants.
    pub fn is_tripwire(&self) -> bool {
        matches!(
            self,
            Error::NonDivisible { .. } | Error::InexactDivision { .. } | Error::NonInteger { .. }
        )
    }
}
