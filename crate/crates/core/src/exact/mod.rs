//! Exact rational linear algebra: symmetric matrices, congruence, determinants,
//! inertia, the pencil polynomial and real root isolation.

mod linalg;
mod matrix;
mod poly;

pub use linalg::{
    det, identity, inertia, inverse, kernel_vector, left_kernel, pencil_det_poly, rank, Signature,
};
pub use matrix::{bilinear, congruence, evaluate_form, Matrix, Transform};
pub use poly::{cauchy_bound, isolate_real_roots, IsolatingInterval, Poly, SturmSequence};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type RatVec = Vec<Rat>;
pub type SymMatrix = Matrix<Rat>;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn int_vec(v: &[i64]) -> RatVec {
    v.iter().map(|&x| int(x)).collect()
}

/// Scale a rational vector by a positive rational so that it becomes a
/// primitive integer vector (denominators cleared, content 1). The zero
/// vector is returned unchanged.
pub fn primitive(v: &[Rat]) -> RatVec {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect()
}

/// Same as [`primitive`] but returns the integer entries.
pub fn primitive_ints(v: &[Rat]) -> Vec<BigInt> {
    primitive(v).into_iter().map(|x| x.to_integer()).collect()
}

/// Least common multiple of all denominators of a matrix.
pub fn common_denominator(m: &Matrix<Rat>) -> BigInt {
    m.entries().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Positive multiple of `m` with integer entries.
pub fn integral_multiple(m: &SymMatrix) -> Matrix<BigInt> {
    let l = Rat::from_integer(common_denominator(m));
    m.map(|x| (x * &l).to_integer())
}

pub fn max_abs(v: &[Rat]) -> Rat {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Rat::zero)
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}
