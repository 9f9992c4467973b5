//! Field-like scalars shared by the exact and the certified-real code paths.
//!
//! The reduction algorithms are written once against [`Scalar`] and run both
//! over exact rationals and over real balls. The only difference the
//! algorithms observe is that a ball may refuse to decide a sign.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::Rat;

pub trait Scalar: Clone + Debug {
    /// Construction context: `()` for rationals, working precision for balls.
    type Ctx: Copy + Debug;

    fn ctx(&self) -> Self::Ctx;
    fn from_rat(r: &Rat, ctx: Self::Ctx) -> Self;

    fn zero_in(ctx: Self::Ctx) -> Self {
        Self::from_rat(&Rat::zero(), ctx)
    }
    fn one_in(ctx: Self::Ctx) -> Self {
        Self::from_rat(&Rat::from_integer(1.into()), ctx)
    }

    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Fails when the divisor is not certified nonzero.
    fn div(&self, o: &Self) -> Result<Self>;

    /// `None` when the sign cannot be decided.
    fn sign(&self) -> Option<Ordering>;

    /// True when the value is certified to be exactly zero.
    fn is_exact_zero(&self) -> bool;

    /// Rough `log2 |x|`, used only for pivot selection heuristics.
    fn log2_abs(&self) -> f64;

    /// Replace `self` by the value `v` that the caller knows mathematically.
    /// Returns false when the current value is inconsistent with `v`.
    fn settle(&mut self, v: &Self) -> bool;

    fn is_certified_nonzero(&self) -> bool {
        matches!(self.sign(), Some(Ordering::Less) | Some(Ordering::Greater))
    }

    /// Sign, or [`Error::Uncertain`].
    fn sign_or_err(&self) -> Result<Ordering>;
}

impl Scalar for Rat {
    type Ctx = ();

    fn ctx(&self) {}

    fn from_rat(r: &Rat, _: ()) -> Self {
        r.clone()
    }

    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / o)
        }
    }

    fn sign(&self) -> Option<Ordering> {
        Some(self.cmp(&Rat::zero()))
    }

    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }

    fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        if let Some(f) = self.to_f64().filter(|f| f.is_normal()) {
            return f.abs().log2();
        }
        self.numer().abs().bits() as f64 - self.denom().bits() as f64
    }

    fn settle(&mut self, v: &Self) -> bool {
        self == v
    }

    fn sign_or_err(&self) -> Result<Ordering> {
        Ok(self.cmp(&Rat::zero()))
    }
}
