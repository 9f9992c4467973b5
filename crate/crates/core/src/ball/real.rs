use std::cmp::Ordering;
use std::fmt;

use super::dyadic::{Dyadic, Round};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::scalar::Scalar;

/// Significant bits kept in radii.
const RAD_BITS: u32 = 30;

/// Midpoint–radius enclosure `[mid − rad, mid + rad]` of a real number.
///
/// A ball with zero midpoint and zero radius is an exact zero; the pipeline
/// uses it for quantities known to vanish identically.
#[derive(Clone, PartialEq, Eq)]
pub struct RealBall {
    mid: Dyadic,
    rad: Dyadic,
    prec: u32,
}

impl RealBall {
    /// Ball around an exact midpoint; the midpoint is rounded to `prec` bits
    /// and the rounding error is absorbed in the radius.
    pub fn new(mid: Dyadic, rad: Dyadic, prec: u32) -> Self {
        let (m, err) = mid.round_err(prec);
        let r = if err.is_zero() { rad } else { rad.add(&err.abs()) };
        RealBall { mid: m, rad: r.round(RAD_BITS, Round::Ceil), prec }
    }

    pub fn exact(mid: Dyadic, prec: u32) -> Self {
        RealBall::new(mid, Dyadic::zero(), prec)
    }

    pub fn exact_zero(prec: u32) -> Self {
        RealBall { mid: Dyadic::zero(), rad: Dyadic::zero(), prec }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        RealBall::exact(Dyadic::from_int(v), prec)
    }

    /// Enclosure of the closed interval `[lo, hi]`.
    pub fn from_interval(lo: &Rat, hi: &Rat, prec: u32) -> Self {
        let l = Dyadic::from_rat(lo, prec + 8, Round::Floor);
        let h = Dyadic::from_rat(hi, prec + 8, Round::Ceil);
        let mid = l.add(&h).mul_pow2(-1);
        let rad = h.sub(&l).mul_pow2(-1);
        RealBall::new(mid, rad, prec)
    }

    pub fn mid(&self) -> &Dyadic {
        &self.mid
    }

    pub fn rad(&self) -> &Dyadic {
        &self.rad
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        RealBall::new(self.mid.clone(), self.rad.clone(), prec)
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn lower(&self) -> Dyadic {
        self.mid.sub(&self.rad)
    }

    pub fn upper(&self) -> Dyadic {
        self.mid.add(&self.rad)
    }

    /// Upper bound on `|x|`.
    pub fn abs_upper(&self) -> Dyadic {
        self.mid.abs().add(&self.rad)
    }

    /// Lower bound on `|x|` (zero when the ball touches zero).
    pub fn abs_lower(&self) -> Dyadic {
        let d = self.mid.abs().sub(&self.rad);
        if d.is_negative() {
            Dyadic::zero()
        } else {
            d
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.mid.abs() <= self.rad
    }

    pub fn contains_rat(&self, x: &Rat) -> bool {
        let lo = self.lower().to_rat();
        let hi = self.upper().to_rat();
        &lo <= x && x <= &hi
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.mid.sub(&o.mid).abs() <= self.rad.add(&o.rad)
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    /// `log2` of the radius (−∞ for exact balls).
    pub fn rad_log2(&self) -> f64 {
        if self.rad.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.rad.ilog2() as f64 + 1.0
        }
    }

    pub fn abs(&self) -> Self {
        if self.mid.is_negative() {
            self.neg_ball()
        } else {
            self.clone()
        }
    }

    fn neg_ball(&self) -> Self {
        RealBall { mid: self.mid.neg(), rad: self.rad.clone(), prec: self.prec }
    }

    fn prec_of(&self, o: &Self) -> u32 {
        self.prec.max(o.prec)
    }

    pub fn add_ball(&self, o: &Self) -> Self {
        RealBall::new(self.mid.add(&o.mid), self.rad.add(&o.rad), self.prec_of(o))
    }

    pub fn sub_ball(&self, o: &Self) -> Self {
        if std::ptr::eq(self, o) {
            return RealBall::exact_zero(self.prec);
        }
        RealBall::new(self.mid.sub(&o.mid), self.rad.add(&o.rad), self.prec_of(o))
    }

    pub fn mul_ball(&self, o: &Self) -> Self {
        let prec = self.prec_of(o);
        if self.is_exact_zero() || o.is_exact_zero() {
            return RealBall::exact_zero(prec);
        }
        let mid = self.mid.mul(&o.mid);
        let rad = self
            .mid
            .abs()
            .mul(&o.rad)
            .add(&o.mid.abs().mul(&self.rad))
            .add(&self.rad.mul(&o.rad));
        RealBall::new(mid, rad, prec)
    }

    pub fn div_ball(&self, o: &Self) -> Result<Self> {
        let prec = self.prec_of(o);
        if o.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_exact_zero() {
            return Ok(RealBall::exact_zero(prec));
        }
        let q = self.mid.div(&o.mid, prec, Round::Floor);
        let ulp = if q.is_zero() { Dyadic::zero() } else { Dyadic::pow2(q.ilog2() - prec as i64 + 1) };
        let rad = if self.rad.is_zero() && o.rad.is_zero() {
            ulp
        } else {
            let num = self.rad.add(&q.abs().add(&ulp).mul(&o.rad));
            let den = o.mid.abs().sub(&o.rad);
            num.div(&den, RAD_BITS, Round::Ceil).add(&ulp)
        };
        Ok(RealBall::new(q, rad, prec))
    }

    pub fn sqrt(&self) -> Result<Self> {
        let hi = self.upper();
        if hi.is_negative() {
            return Err(Error::NegativeSqrt);
        }
        if self.is_exact_zero() {
            return Ok(self.clone());
        }
        let lo = self.lower();
        let p = self.prec + 4;
        let sl = if lo.is_negative() { Dyadic::zero() } else { lo.sqrt(p, Round::Floor) };
        let sh = hi.sqrt(p, Round::Ceil);
        let mid = sl.add(&sh).mul_pow2(-1);
        let rad = sh.sub(&sl).mul_pow2(-1);
        Ok(RealBall::new(mid, rad, self.prec))
    }

    pub fn square(&self) -> Self {
        self.mul_ball(self)
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        self.mul_ball(&RealBall::from_rat_prec(r, self.prec))
    }

    pub fn from_rat_prec(r: &Rat, prec: u32) -> Self {
        let lo = Dyadic::from_rat(r, prec + 2, Round::Floor);
        if lo.to_rat() == *r {
            return RealBall::exact(lo, prec);
        }
        let hi = Dyadic::from_rat(r, prec + 2, Round::Ceil);
        let mid = lo.add(&hi).mul_pow2(-1);
        let rad = hi.sub(&lo).mul_pow2(-1);
        RealBall::new(mid, rad, prec)
    }

    /// Midpoint as a rational.
    pub fn mid_rat(&self) -> Rat {
        self.mid.to_rat()
    }

    pub fn rad_rat(&self) -> Rat {
        self.rad.to_rat()
    }
}

impl Scalar for RealBall {
    type Ctx = u32;

    fn ctx(&self) -> u32 {
        self.prec
    }

    fn from_rat(r: &Rat, prec: u32) -> Self {
        RealBall::from_rat_prec(r, prec)
    }

    fn add(&self, o: &Self) -> Self {
        self.add_ball(o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.sub_ball(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_ball(o)
    }
    fn neg(&self) -> Self {
        self.neg_ball()
    }
    fn div(&self, o: &Self) -> Result<Self> {
        self.div_ball(o)
    }

    fn sign(&self) -> Option<Ordering> {
        if self.is_exact_zero() {
            return Some(Ordering::Equal);
        }
        if self.mid.abs() > self.rad {
            Some(self.mid.signum())
        } else {
            None
        }
    }

    fn is_exact_zero(&self) -> bool {
        self.mid.is_zero() && self.rad.is_zero()
    }

    fn log2_abs(&self) -> f64 {
        if self.mid.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.mid.ilog2() as f64
        }
    }

    fn settle(&mut self, v: &Self) -> bool {
        if !self.overlaps(v) {
            return false;
        }
        *self = v.clone();
        true
    }

    fn sign_or_err(&self) -> Result<Ordering> {
        self.sign().ok_or(Error::Uncertain(self.prec))
    }
}

impl fmt::Debug for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact_zero() {
            write!(f, "0")
        } else {
            write!(f, "[{:e} ± {:.1e}]", self.mid.to_f64(), self.rad.to_f64())
        }
    }
}

impl fmt::Display for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn exact_add() {
        let a = RealBall::from_i64(1, 64);
        let b = RealBall::from_i64(2, 64);
        let c = a.add(&b);
        assert!(c.is_exact());
        assert!(c.contains_rat(&int(3)));
    }

    #[test]
    fn zero_absorbs() {
        let z = RealBall::exact_zero(64);
        let x = RealBall::from_rat(&rat(1, 3), 64);
        assert!(z.mul(&x).is_exact_zero());
        assert!(x.sub(&x).is_exact_zero());
    }

    #[test]
    fn division_by_ball_around_zero() {
        let one = RealBall::from_i64(1, 64);
        let z = RealBall::new(Dyadic::zero(), Dyadic::one(), 64);
        assert_eq!(one.div(&z), Err(Error::DivisionByZero));
    }

    #[test]
    fn sqrt_cases() {
        let s = RealBall::from_i64(4, 64).sqrt().unwrap();
        assert!(s.contains_rat(&int(2)));
        assert!(s.rad_log2() <= -50.0);
        let r = RealBall::from_i64(2, 64).sqrt().unwrap();
        let sq = r.mul(&r);
        assert!(sq.contains_rat(&int(2)));
        assert_eq!(RealBall::from_i64(-1, 64).sqrt(), Err(Error::NegativeSqrt));
    }

    #[test]
    fn third_times_three() {
        let t = RealBall::from_rat(&rat(1, 3), 128);
        let p = t.mul(&RealBall::from_i64(3, 128));
        assert!(p.contains_rat(&int(1)));
        let q = RealBall::from_i64(1, 128).div(&RealBall::from_i64(3, 128)).unwrap();
        assert!(q.contains_rat(&rat(1, 3)));
    }
}
