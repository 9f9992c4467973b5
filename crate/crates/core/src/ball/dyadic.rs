use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::Rat;

/// Exact binary fraction `man · 2^exp`, normalized so that `man` is odd
/// (or zero with `exp = 0`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Floor,
    Ceil,
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { man, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.man.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.man.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.man >>= tz;
            self.exp += tz as i64;
        }
    }

    pub fn zero() -> Self {
        Dyadic::default()
    }

    pub fn one() -> Self {
        Dyadic::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn pow2(e: i64) -> Self {
        Dyadic { man: BigInt::one(), exp: e }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        match self.man.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    /// Number of significant bits of the mantissa.
    pub fn bits(&self) -> u64 {
        self.man.bits()
    }

    /// `floor(log2 |x|)` for nonzero `x`.
    pub fn ilog2(&self) -> i64 {
        self.man.bits() as i64 - 1 + self.exp
    }

    pub fn neg(&self) -> Self {
        Dyadic { man: -&self.man, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { man: self.man.abs(), exp: self.exp }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.man << (self.exp - e) as u64;
        let b = &o.man << (o.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { man: &self.man * &o.man, exp: self.exp + o.exp }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { man: self.man.clone(), exp: self.exp + k }
    }

    pub fn max(self, o: Self) -> Self {
        if self >= o {
            self
        } else {
            o
        }
    }

    pub fn min(self, o: Self) -> Self {
        if self <= o {
            self
        } else {
            o
        }
    }

    /// Round to at most `prec` significant bits in the given direction.
    pub fn round(&self, prec: u32, mode: Round) -> Self {
        let b = self.bits();
        if b <= prec as u64 {
            return self.clone();
        }
        let shift = b - prec as u64;
        let d = pow2(shift);
        let q = match mode {
            Round::Floor => self.man.div_floor(&d),
            Round::Ceil => -((-&self.man).div_floor(&d)),
        };
        Dyadic::new(q, self.exp + shift as i64)
    }

    /// Round toward `−∞` and return the rounded value with the (nonnegative)
    /// rounding error bound.
    pub fn round_err(&self, prec: u32) -> (Self, Self) {
        let r = self.round(prec, Round::Floor);
        let err = self.sub(&r);
        (r, err)
    }

    pub fn from_rat(r: &Rat, prec: u32, mode: Round) -> Self {
        if r.is_zero() {
            return Dyadic::zero();
        }
        let d = r.denom();
        if d.is_one() || d.magnitude().count_ones() == 1 {
            let e = -(d.trailing_zeros().unwrap_or(0) as i64);
            return Dyadic::new(r.numer().clone(), e).round(prec, mode);
        }
        let k = prec as i64 + d.bits() as i64 - r.numer().bits() as i64 + 2;
        let (num, den) = if k >= 0 {
            (r.numer() << k as u64, d.clone())
        } else {
            (r.numer().clone(), d << (-k) as u64)
        };
        let q = match mode {
            Round::Floor => num.div_floor(&den),
            Round::Ceil => -((-num).div_floor(&den)),
        };
        Dyadic::new(q, -k)
    }

    pub fn to_rat(&self) -> Rat {
        if self.exp >= 0 {
            Rat::from_integer(&self.man << self.exp as u64)
        } else {
            Rat::new(self.man.clone(), pow2((-self.exp) as u64))
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let b = self.bits() as i64;
        let shift = (b - 60).max(0);
        let m = (&self.man >> shift as u64).to_f64().unwrap_or(0.0);
        let mut e = self.exp + shift;
        let mut v = m;
        while e != 0 && v != 0.0 && v.is_finite() {
            let step = e.clamp(-500, 500);
            v *= 2f64.powi(step as i32);
            e -= step;
        }
        v
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 || !x.is_finite() {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, exp) = if e == 0 { (frac, -1074) } else { (frac | (1u64 << 52), e - 1075) };
        Dyadic::new(BigInt::from(m) * sign, exp)
    }

    /// `floor(a/b)` or `ceil(a/b)` with at least `prec` significant bits.
    pub fn div(&self, o: &Self, prec: u32, mode: Round) -> Self {
        assert!(!o.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let s = (prec as i64 + o.bits() as i64 - self.bits() as i64 + 2).max(0);
        let num = &self.man << s as u64;
        let q = match mode {
            Round::Floor => num.div_floor(&o.man),
            Round::Ceil => -((-num).div_floor(&o.man)),
        };
        Dyadic::new(q, self.exp - o.exp - s)
    }

    /// `√x` for `x ≥ 0`, rounded in the given direction, `prec` bits.
    pub fn sqrt(&self, prec: u32, mode: Round) -> Self {
        assert!(!self.is_negative(), "dyadic sqrt of negative");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // sqrt(m 2^e) 2^k = sqrt(m 2^(e+2k))
        let half_mag = (self.bits() as i64 + self.exp) / 2;
        let mut k = prec as i64 - half_mag + 2;
        if self.exp + 2 * k < 0 {
            k = (-self.exp + 1) / 2;
        }
        let n = &self.man << (self.exp + 2 * k) as u64;
        let mut s = n.sqrt();
        if mode == Round::Ceil && &s * &s < n {
            s += 1;
        }
        Dyadic::new(s, -k)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, o: &Self) -> Ordering {
        self.sub(o).signum()
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn normalizes_mantissa() {
        let d = Dyadic::new(BigInt::from(12), 0);
        assert_eq!(d.mantissa(), &BigInt::from(3));
        assert_eq!(d.exponent(), 2);
    }

    #[test]
    fn rounding_brackets_rationals() {
        let r = rat(1, 3);
        let lo = Dyadic::from_rat(&r, 40, Round::Floor);
        let hi = Dyadic::from_rat(&r, 40, Round::Ceil);
        assert!(lo.to_rat() < r && r < hi.to_rat());
        assert!(hi.sub(&lo) <= Dyadic::pow2(-40));
    }

    #[test]
    fn sqrt_brackets() {
        let two = Dyadic::from_int(2);
        let lo = two.sqrt(64, Round::Floor);
        let hi = two.sqrt(64, Round::Ceil);
        assert!(lo.mul(&lo) <= two && hi.mul(&hi) >= two);
        assert_eq!(Dyadic::from_int(4).sqrt(64, Round::Floor), Dyadic::from_int(2));
    }

    #[test]
    fn f64_round_trip() {
        for x in [1.5, -0.1, 3e-300, 7e200] {
            assert_eq!(Dyadic::from_f64(x).to_f64(), x);
        }
    }
}
