use std::fmt;

use super::real::RealBall;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::scalar::Scalar;

/// Complex enclosure as a pair of real balls.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexBall {
    pub re: RealBall,
    pub im: RealBall,
}

impl ComplexBall {
    pub fn new(re: RealBall, im: RealBall) -> Self {
        ComplexBall { re, im }
    }

    pub fn real(re: RealBall) -> Self {
        let p = re.prec();
        ComplexBall { re, im: RealBall::exact_zero(p) }
    }

    pub fn from_rat(r: &Rat, prec: u32) -> Self {
        ComplexBall::real(RealBall::from_rat(r, prec))
    }

    pub fn zero(prec: u32) -> Self {
        ComplexBall::real(RealBall::exact_zero(prec))
    }

    pub fn one(prec: u32) -> Self {
        ComplexBall::real(RealBall::from_i64(1, prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_exact_zero(&self) -> bool {
        self.re.is_exact_zero() && self.im.is_exact_zero()
    }

    /// Imaginary part is an exact zero.
    pub fn is_real(&self) -> bool {
        self.im.is_exact_zero()
    }

    pub fn is_certified_nonzero(&self) -> bool {
        self.re.is_certified_nonzero() || self.im.is_certified_nonzero()
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBall { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexBall { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> Self {
        ComplexBall { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> Self {
        ComplexBall { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        ComplexBall { re, im }
    }

    pub fn scale(&self, r: &RealBall) -> Self {
        ComplexBall { re: self.re.mul(r), im: self.im.mul(r) }
    }

    /// `|z|²`.
    pub fn norm_sqr(&self) -> RealBall {
        self.re.square().add(&self.im.square())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_real() {
            return Ok(ComplexBall { re: self.re.div(&o.re)?, im: self.im.div(&o.re)? });
        }
        let d = o.norm_sqr();
        if !d.is_certified_nonzero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.mul(&o.conj());
        Ok(ComplexBall { re: n.re.div(&d)?, im: n.im.div(&d)? })
    }

    /// Rough `|z|` from the midpoints, for pivot choice only.
    pub fn approx_abs(&self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }

    /// Largest radius of the two parts, as `log2`.
    pub fn rad_log2(&self) -> f64 {
        self.re.rad_log2().max(self.im.rad_log2())
    }

    /// Drop the radii, keeping the midpoints as exact values.
    pub fn midpoint(&self) -> Self {
        let p = self.prec();
        ComplexBall {
            re: RealBall::exact(self.re.mid().clone(), p),
            im: RealBall::exact(self.im.mid().clone(), p),
        }
    }
}

impl fmt::Debug for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + {:?}i", self.re, self.im)
    }
}
