use std::cmp::Ordering;

use super::real::RealBall;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Working precisions tried by adaptive computations: `initial_bits`, then
/// repeated multiplication by `growth` up to `max_bits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub initial_bits: u32,
    pub max_bits: u32,
    pub growth: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { initial_bits: 64, max_bits: 16384, growth: 2 }
    }
}

impl PrecisionPolicy {
    pub fn new(initial_bits: u32, max_bits: u32, growth: u32) -> Result<Self> {
        if initial_bits == 0 || initial_bits > max_bits || growth < 2 {
            return Err(Error::Precondition(format!(
                "invalid precision policy {initial_bits}/{max_bits}/x{growth}"
            )));
        }
        Ok(PrecisionPolicy { initial_bits, max_bits, growth })
    }

    /// The precision ladder.
    pub fn levels(&self) -> Vec<u32> {
        let mut v = Vec::new();
        let mut b = self.initial_bits;
        loop {
            v.push(b);
            if b >= self.max_bits {
                break;
            }
            b = b.saturating_mul(self.growth).min(self.max_bits);
        }
        v
    }

    /// Run `f` at increasing precision until it stops reporting that a
    /// decision was out of reach.
    pub fn run<T>(&self, mut f: impl FnMut(u32) -> Result<T>) -> Result<T> {
        for bits in self.levels() {
            match f(bits) {
                Err(Error::Uncertain(_)) | Err(Error::DivisionByZero) => continue,
                r => return r,
            }
        }
        Err(Error::PrecisionExhausted(self.max_bits))
    }
}

/// Sign of a quantity known to be either an exact zero or nonzero, refining
/// the enclosure through `refine(bits)` as long as zero is not excluded.
pub fn ball_sign(
    a: &RealBall,
    policy: &PrecisionPolicy,
    mut refine: impl FnMut(u32) -> Result<RealBall>,
) -> Result<Ordering> {
    if let Some(s) = a.sign() {
        return Ok(s);
    }
    for bits in policy.levels().into_iter().filter(|&b| b > a.prec()) {
        let b = refine(bits)?;
        if let Some(s) = b.sign() {
            return Ok(s);
        }
    }
    Err(Error::PrecisionExhausted(policy.max_bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::Dyadic;

    #[test]
    fn ladder() {
        assert_eq!(PrecisionPolicy::default().levels().len(), 9);
        assert!(PrecisionPolicy::new(128, 64, 2).is_err());
    }

    #[test]
    fn signs() {
        let p = PrecisionPolicy::default();
        let a = RealBall::new(Dyadic::one(), Dyadic::pow2(-4), 64);
        assert_eq!(ball_sign(&a, &p, |_| unreachable!()).unwrap(), Ordering::Greater);
        let z = RealBall::exact_zero(64);
        assert_eq!(ball_sign(&z, &p, |_| unreachable!()).unwrap(), Ordering::Equal);
    }

    #[test]
    fn refines_tiny_positive() {
        let p = PrecisionPolicy::default();
        let wide = RealBall::new(Dyadic::pow2(-100), Dyadic::one(), 64);
        let s = ball_sign(&wide, &p, |bits| {
            Ok(RealBall::new(Dyadic::pow2(-100), Dyadic::pow2(-(bits as i64)), bits))
        });
        assert_eq!(s.unwrap(), Ordering::Greater);
    }

    #[test]
    fn exhausts() {
        let p = PrecisionPolicy::new(64, 256, 2).unwrap();
        let wide = RealBall::new(Dyadic::zero(), Dyadic::one(), 64);
        let s = ball_sign(&wide, &p, |bits| Ok(RealBall::new(Dyadic::zero(), Dyadic::one(), bits)));
        assert_eq!(s, Err(Error::PrecisionExhausted(256)));
    }
}
