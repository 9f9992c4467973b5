//! Certified real and complex arithmetic on midpoint–radius balls with
//! adaptive precision.

mod complex;
mod dyadic;
mod kernel;
mod policy;
mod real;
mod roots;

pub use complex::ComplexBall;
pub use dyadic::{Dyadic, Round};
pub use kernel::ball_kernel;
pub use policy::{ball_sign, PrecisionPolicy};
pub use real::RealBall;
pub use roots::{complex_roots, eval_complex, refine_root};

use crate::exact::{Matrix, Rat, SymMatrix};

pub type BallVec = Vec<RealBall>;
pub type BallMatrix = Matrix<RealBall>;

/// Enclose an exact matrix at the given precision.
pub fn to_balls(q: &SymMatrix, prec: u32) -> BallMatrix {
    q.map(|x| RealBall::from_rat_prec(x, prec))
}

pub fn vec_to_balls(v: &[Rat], prec: u32) -> BallVec {
    v.iter().map(|x| RealBall::from_rat_prec(x, prec)).collect()
}

/// Largest radius of the entries, as `log2`.
pub fn max_rad_log2(m: &BallMatrix) -> f64 {
    m.entries().iter().map(|x| x.rad_log2()).fold(f64::NEG_INFINITY, f64::max)
}
