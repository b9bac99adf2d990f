//! Exact computer algebra for q-Lidstone polynomial sequences.
//!
//! The crate computes, over arbitrary-precision rationals with a rational
//! base q in (0, 1]:
//!
//! * q-integers, q-factorials, Gaussian binomials ([`qcore`])
//! * dense univariate polynomials with Jackson q-derivatives ([`qpoly`])
//! * truncated formal power series with polynomial coefficients, q-exponential
//!   and q-trigonometric kernels ([`qseries`])
//! * the four q-Lidstone families (odd/even crossed with first/second kind),
//!   their conjugate seeds, matrix and determinant and production-matrix
//!   representations, recurrences, q-difference equations, and generating
//!   function checks ([`lidstone`])
//! * q-Bernoulli, q-Euler, and q-tangent number and polynomial families with
//!   their interconnection identities ([`families`])
//!
//! Everything is exact: equality assertions in this crate mean identical
//! rationals, never approximate comparison.

pub mod error;
pub mod families;
pub mod lidstone;
pub mod qcore;
pub mod qpoly;
pub mod qseries;
pub mod report;

pub use error::{Error, Result};
pub use qcore::{fmt_rat, parse_rat, rat, rat_int, QContext, Rat};
