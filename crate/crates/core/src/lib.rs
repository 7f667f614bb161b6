//! Tetrahedral curves in projective 3-space.
//!
//! A tetrahedral curve is the scheme defined by
//! `(a,b)^a1 ∩ (a,c)^a2 ∩ (a,d)^a3 ∩ (b,c)^a4 ∩ (b,d)^a5 ∩ (c,d)^a6`
//! in `k[a,b,c,d]`.  This crate reduces such curves along basic double links
//! to S-minimal representatives, builds the cellular minimal free resolution
//! of S-minimal curves, classifies curves (ACM, arithmetically Buchsbaum,
//! Hartshorne-Rao diameter) and computes degree, genus and counts.
//!
//! The [`oracle`] module is an independent brute-force monomial-ideal engine
//! used to check every closed formula.

pub mod betti;
pub mod cell;
pub mod classify;
pub mod curve;
pub mod error;
pub mod invariants;
pub mod monomial;
pub mod oracle;

pub use betti::BettiTable;
pub use curve::{Facet, ReductionStep, ReductionTrace, Symmetry, WeightVector};
pub use error::{Error, Result};
pub use monomial::{Monomial, Variable};
