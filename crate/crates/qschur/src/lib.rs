//! Exact-arithmetic q-Schur algebras from finite-field flag geometry.
//!
//! The crate builds the algebras S_v(n,r) from orbit counting on pairs of
//! n-step flags over finite fields, realizes the quantum Frobenius map and
//! its splitting at a root of unity, and verifies that both descend to
//! generalized q-Schur quotients, recovering the Fayers-Martin embedding in
//! the n = 2 case.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod cartan;
pub mod cli;
pub mod error;
pub mod flaggeom;
pub mod frob;
pub mod gschur;
pub mod laurent;
pub mod ring;
pub mod schur;

pub use error::{Error, Result};

/// Elements of the generic algebra carry coefficients in Z[v,v^-1].
pub type GenericCoeff = laurent::LaurentPoly;
/// Coefficients in the root-of-unity ring A_l.
pub type CycloCoeff = laurent::CycloInt;
/// Coefficients in the field Q[v]/(Phi_l), used for row reduction at a root
/// of unity.
pub type CycloFieldCoeff = laurent::CycloRat;
/// Coefficients in the field Q(v), used for generic row reduction.
pub type GenericFieldCoeff = laurent::RatFunc;
/// Prime-field coefficients.
pub type PrimeCoeff = ring::Fp;
