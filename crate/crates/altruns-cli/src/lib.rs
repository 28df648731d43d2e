//! Rendering and parsing support for the `altruns` binary.
//!
//! The binary's argument handling lives in `main.rs`; everything that turns
//! tables, polynomials, and verification reports into bytes (and back, for
//! b-files) is here so the end-to-end tests can call it directly.

pub mod format;
