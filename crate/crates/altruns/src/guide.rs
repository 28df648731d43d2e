//! Compiles every `rust` code block in the book (`book/src/`) as a doctest,
//! so `cargo test` fails whenever a chapter drifts from the library. Only
//! built under `cfg(doctest)`; nothing here exists in a normal build.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/triangles.md")]
pub mod triangles {}

#[doc = include_str!("../../../book/src/derivative-polynomials.md")]
pub mod derivative_polynomials {}

#[doc = include_str!("../../../book/src/runs.md")]
pub mod runs {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
