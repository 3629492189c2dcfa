//! Exact enumerative tools for the basic Eulerian polynomials
//! `Aₙ(t, r, q) = ∑ t^exc r^fix q^(maj − exc)` and their γ-expansions.
//!
//! The crate provides permutation statistics, the valley-hopping group
//! actions, the rix-factorization with the bijections built on it, exact
//! multivariate polynomials with q-analogues, and a verification engine that
//! checks every identity by exhaustive enumeration at small `n`.

pub mod actions;
pub mod bijections;
pub mod engine;
mod error;
pub mod perm;
pub mod qpoly;
pub mod rixfact;

pub use actions::Action;
pub use engine::VerificationReport;
pub use error::{Error, Result};
pub use perm::{Permutation, StatisticBundle, Word};
pub use qpoly::{GammaExpansion, MPoly, Var};
pub use rixfact::RixFactorization;
