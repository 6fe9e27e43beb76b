//! Exact combinatorics of smooth lattice polytopes built by vertex chiseling.
//!
//! Everything in this crate is computed over arbitrary-precision rationals;
//! no operation ever rounds. The layers are:
//!
//! * [`poly`] — dense univariate polynomials over exact rationals, with
//!   Newton interpolation and the Ehrhart-series numerator transform.
//! * [`polytope`] — explicit vertex/edge/halfspace data for smooth lattice
//!   polytopes: boxes, hexagon prisms, products, dilation, vertex chiseling,
//!   and vertex enumeration from an inequality description.
//! * [`ehrhart`] — closed-form Ehrhart polynomials of the chiseled families,
//!   coefficient formulas for the iterated chisel tower and its cube
//!   products, and a search for instances with negative coefficients.
//! * [`counting`] — parallel brute-force lattice-point counting in dilates;
//!   the independent oracle for the symbolic layer.
//! * [`bvalpha`] — closed-form Berline-Vergne α-values for faces of cubes,
//!   simplices and corner-chiseled cubes, and the reconstruction of Ehrhart
//!   coefficients from weighted face volumes.

pub mod bvalpha;
#[cfg(test)]
pub(crate) mod testutil;
pub mod counting;
pub mod ehrhart;
pub mod poly;
pub mod polytope;
pub mod rational;

pub use poly::Polynomial;
pub use rational::{Int, Rational};

use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("duplicate interpolation abscissa t = {0}")]
    DuplicateAbscissa(Int),
    #[error("chisel depth {depth} needs integer edge length >= {needed}, but edge ({}, {}) has length {length}", edge.0, edge.1)]
    ChiselDepth {
        depth: Int,
        needed: Int,
        edge: (usize, usize),
        length: Int,
    },
    #[error("chisel stage {stage} failed: {source}")]
    ChiselStage {
        stage: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("halfspace system is unbounded (recession direction {direction})")]
    Unbounded { direction: String },
    #[error("vertex {0} of the halfspace system is not a lattice point")]
    NonIntegralVertex(String),
    #[error("inconsistent polytope data: {0}")]
    Inconsistent(String),
    #[error("polytope is not smooth: {0}")]
    NotSmooth(String),
    #[error(
        "candidate point budget exceeded (~{estimate} candidates > budget {budget}); \
         try the symbolic engine for large instances"
    )]
    BudgetExceeded { estimate: String, budget: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
