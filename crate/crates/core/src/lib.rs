//! Rational common zeros of two quadratic forms.
//!
//! Given symmetric rational matrices `Q0`, `Q1` of size `n ≥ 13` whose
//! intersection `q0 = q1 = 0` is smooth, the crate decides whether a nonzero
//! real common zero exists and, if so, computes a nonzero rational one and
//! certifies it by exact evaluation.
//!
//! The main entry point is [`rational_solution::solve_pair`].

pub mod ball;
pub mod cli;
pub mod error;
pub mod exact;
pub mod lattice;
pub mod oracle;
pub mod pencil;
pub mod rational_solution;
pub mod real_solution;
pub mod reduction;
pub mod scalar;

pub use error::{Error, Result};
pub use exact::{Rat, RatVec, SymMatrix};
