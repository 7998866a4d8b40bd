//! Exact computation of Hilbert-Kunz functions and multiplicities for
//! quotient rings over prime fields, with the inequality checks that
//! bound them.
//!
//! The layers, bottom up:
//!
//! - [`field`], [`monomial`], [`poly`], [`parse`]: exact arithmetic for
//!   sparse multivariate polynomials over F_p and a text parser.
//! - [`ideal`], [`groebner`]: Buchberger's algorithm, normal forms, and
//!   the combinatorics of initial ideals (colengths, Krull dimension).
//! - [`staircase`]: closed-form Hilbert-Kunz multiplicities for m-primary
//!   monomial ideals, plus the brute-force lattice oracle.
//! - [`hk`]: Frobenius powers, Hilbert-Kunz sampling and extrapolation,
//!   Hilbert-Samuel multiplicities, the regularity test.
//! - [`bounds`]: the inequality predicates and the epsilon-table
//!   aggregation.
//!
//! Everything is exact rational arithmetic; no floating point anywhere.

pub mod bounds;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hk;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod staircase;

pub use num::BigRational;
