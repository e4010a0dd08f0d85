//! Exact verification of symmetric q-congruences modulo powers of cyclotomic
//! polynomials.
//!
//! The crate is layered bottom-up:
//!
//! - [`poly`]: rational coefficients, sparse Laurent polynomials in `q`,
//!   polynomials in an auxiliary `x`, rational expressions, text form.
//! - [`cyclotomic`]: `Phi_n(q)` and its powers.
//! - [`qcalc`]: q-integers, q-Pochhammer symbols, q-binomial coefficients.
//! - [`transforms`]: the signed q-binomial transforms of sequences.
//! - [`congruence`]: residues modulo `Phi_n(q)^m` and congruence decisions.
//! - [`family`]: named, reproducible test sequences `f_0, ..., f_{n-1}`.
//! - [`theorems`]: both sides of every symmetric congruence, assembled and
//!   checked.

pub mod congruence;
pub mod cyclotomic;
pub mod error;
pub mod family;
pub mod poly;
pub mod qcalc;
pub mod theorems;
pub mod transforms;

pub use error::{Error, Result};
pub use poly::{BiPoly, Coeff, LaurentPoly, QPoly, RatExpr};
