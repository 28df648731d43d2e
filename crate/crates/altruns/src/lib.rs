//! Alternating runs in permutations, computed exactly.
//!
//! A permutation changes direction at each interior position where it stops
//! rising and starts falling or the other way around; the maximal monotone
//! stretches between those positions are its *alternating runs*. This crate
//! computes the triangle `R(n,k)` — the number of permutations of `[n]` with
//! exactly `k` runs — by five independent methods:
//!
//! - the integer recurrence ([`runs::r_table_recurrence`]),
//! - the polynomial recurrence for `R_n(x)` ([`runs::r_poly_recurrence`]),
//! - an expansion over the basis `(x+1)^{n−k−1}(x−1)^k` whose coefficients
//!   come from derivative polynomials of the tangent
//!   ([`runs::r_poly_theorem`]),
//! - the fully explicit coefficient formula derived from that expansion
//!   ([`runs::r_explicit`]),
//! - Stanley's double sum ([`runs::r_stanley`]),
//!
//! plus a sixth opinion with no formula in it at all: exhaustive enumeration
//! of permutations ([`oracle`]). The supporting cast — derivative
//! polynomials ([`derivpoly`]), Eulerian polynomials, Stirling numbers, and
//! higher-order tangent numbers ([`sequences`]) — is built the same way,
//! with at least two independent routes to every object.
//!
//! Everything is exact. Coefficients are [`num_bigint::BigInt`]; the one
//! formula that passes through fractions ([`runs::r_stanley`]) works in
//! [`num_rational::BigRational`] and asserts integrality at the end; and
//! every power-of-two or factorial division is checked rather than assumed.
//! A division that fails to come out exact does not round — it surfaces as
//! an [`Error`] naming the site, because an inexact division here means a
//! formula (or this crate) is wrong.
//!
//! ```
//! use altruns::runs::{r_explicit, r_stanley, r_table_recurrence};
//! use num_bigint::BigInt;
//!
//! let triangle = r_table_recurrence(5);
//! assert_eq!(triangle.row(5).unwrap(), [2, 28, 58, 32].map(BigInt::from));
//! assert_eq!(r_explicit(5, 3).unwrap(), BigInt::from(58));
//! assert_eq!(r_stanley(5, 3).unwrap(), BigInt::from(58));
//! ```
//!
//! The [`verify`] module packages the full cross-validation suite — every
//! method against every other, the identities, the asymptotic leading terms,
//! and the enumeration oracles — into named checks with a machine-readable
//! [`VerificationReport`]. The `altruns` command-line tool exposes all of it
//! as `table`, `poly`, and `verify` subcommands.

pub mod derivpoly;
pub mod egf;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod runs;
pub mod sequences;
pub mod table;
pub mod verify;

#[cfg(doctest)]
mod guide;

pub use error::{Error, Result};
pub use poly::IntPolynomial;
pub use report::{Check, Status, VerificationReport};
pub use runs::{RunsPoly, RunsTriangle};
pub use table::TriangularTable;
pub use verify::{check_names, verify_all, Fault, VerifyConfig};
