use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Univariate polynomial over Q, coefficients from the constant term up.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(x)`.
    pub fn sign_at(&self, x: &Rat) -> Ordering {
        self.eval(x).cmp(&Rat::zero())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rat::one())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&(Rat::one() / l)),
            None => Poly::zero(),
        }
    }

    /// Positive multiple with coprime integer coefficients.
    pub fn primitive_positive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.coeffs.iter().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |a, c| a.gcd(c));
        Poly::new(ints.into_iter().map(|c| Rat::from_integer(c / &g)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
                        - o.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
                })
                .collect(),
        )
    }

    /// Euclidean division `self = q·d + r`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().unwrap() / &lead;
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k + i] -= &f * c;
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.primitive_positive(), o.primitive_positive());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor").primitive_positive();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Interpolating polynomial through distinct nodes (Newton form).
    pub fn interpolate(pts: &[(Rat, Rat)]) -> Poly {
        let n = pts.len();
        let xs: Vec<Rat> = pts.iter().map(|p| p.0.clone()).collect();
        let mut dd: Vec<Rat> = pts.iter().map(|p| p.1.clone()).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        // Horner on the Newton basis
        let mut acc = Poly::zero();
        for i in (0..n).rev() {
            let lin = Poly::new(vec![-xs[i].clone(), Rat::one()]);
            acc = acc.mul(&lin);
            acc = acc.sub(&Poly::new(vec![-dd[i].clone()]));
        }
        acc
    }

    pub fn sturm(&self) -> Result<SturmSequence> {
        SturmSequence::new(self)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if !first {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Cauchy's root bound `1 + max |aᵢ|` of the monic normalization.
pub fn cauchy_bound(p: &Poly) -> Result<Rat> {
    let m = p.monic();
    let d = m.degree().ok_or(Error::ZeroPolynomial)?;
    let max = m.coeffs[..d].iter().map(|c| c.abs()).max().unwrap_or_else(Rat::zero);
    Ok(Rat::one() + max)
}

/// Sturm chain `p, p', −rem(p, p'), …` with every member scaled by a
/// positive constant to a primitive integer polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Poly>,
}

impl SturmSequence {
    pub fn new(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.primitive_positive()];
        let dp = p.derivative();
        if !dp.is_zero() {
            chain.push(dp.primitive_positive());
        }
        while chain.len() >= 2 {
            let k = chain.len();
            let r = chain[k - 2].rem(&chain[k - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive_positive());
        }
        Ok(SturmSequence { chain })
    }

    pub fn chain(&self) -> &[Poly] {
        &self.chain
    }

    /// The chain ends in a constant iff the polynomial is squarefree.
    pub fn is_squarefree(&self) -> bool {
        self.chain.last().and_then(|p| p.degree()) == Some(0)
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.leading().unwrap().cmp(&Rat::zero())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let s = p.leading().unwrap().cmp(&Rat::zero());
            if p.degree().unwrap() % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }

    /// Distinct real roots in `(a, b)`; requires `p(a), p(b) ≠ 0`.
    pub fn count_in(&self, a: &Rat, b: &Rat) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Open interval `(lo, hi)` holding exactly one real root of `poly`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rat,
    pub hi: Rat,
    pub poly: Arc<Poly>,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Sign of the polynomial just right of the root.
    fn sign_lo(&self) -> Ordering {
        self.poly.sign_at(&self.lo)
    }

    /// Halve the interval. Returns `Some(root)` when the midpoint is the root.
    pub fn bisect(&mut self) -> Option<Rat> {
        let mid = (&self.lo + &self.hi) / Rat::from_integer(2.into());
        match self.poly.sign_at(&mid) {
            Ordering::Equal => Some(mid),
            s if s == self.sign_lo() => {
                self.lo = mid;
                None
            }
            _ => {
                self.hi = mid;
                None
            }
        }
    }

    /// Whether `x` lies strictly inside.
    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Exact rational root inside the interval, if the polynomial has one.
    pub fn rational_root(&self) -> Option<Rat> {
        rational_roots(&self.poly).into_iter().find(|r| self.contains(r))
    }
}

/// Isolate every real root of a squarefree polynomial by Sturm bisection on
/// `[−a−1, a+1]`, `a` the Cauchy bound.
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<IsolatingInterval>> {
    let sturm = SturmSequence::new(p)?;
    if !sturm.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let shared = Arc::new(p.clone());
    let b = cauchy_bound(p)? + Rat::one();
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let c = sturm.count_in(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 {
            out.push(IsolatingInterval { lo, hi, poly: shared.clone() });
            continue;
        }
        let mid = split_point(p, &lo, &hi);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// A point of `(lo, hi)` near the middle where `p` does not vanish.
fn split_point(p: &Poly, lo: &Rat, hi: &Rat) -> Rat {
    let two = Rat::from_integer(2.into());
    let mid = (lo + hi) / &two;
    if !p.eval(&mid).is_zero() {
        return mid;
    }
    let w = hi - lo;
    let mut step = &w / Rat::from_integer(8.into());
    loop {
        let c = &mid + &step;
        if !p.eval(&c).is_zero() {
            return c;
        }
        step /= &two;
    }
}

/// All rational roots via the rational root test on the primitive integer
/// form. Only cheap for small leading and constant coefficients, so it
/// falls back to an empty list when the candidate set is large.
pub fn rational_roots(p: &Poly) -> Vec<Rat> {
    let q = p.primitive_positive();
    let Some(d) = q.degree() else { return Vec::new() };
    if d == 0 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut coeffs: Vec<BigInt> = q.coeffs().iter().map(|c| c.to_integer()).collect();
    // strip x factors
    while coeffs.first().is_some_and(|c| c.is_zero()) {
        coeffs.remove(0);
        if !roots.contains(&Rat::zero()) {
            roots.push(Rat::zero());
        }
    }
    if coeffs.len() <= 1 {
        return roots;
    }
    let c0 = coeffs[0].abs();
    let cn = coeffs.last().unwrap().abs();
    let (Some(dc0), Some(dcn)) = (small_divisors(&c0), small_divisors(&cn)) else {
        return roots;
    };
    let reduced = Poly::new(coeffs.into_iter().map(Rat::from_integer).collect());
    for num in &dc0 {
        for den in &dcn {
            for s in [1i64, -1] {
                let r = Rat::new(num * BigInt::from(s), den.clone());
                if reduced.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let limit = BigInt::from(1_000_000u64);
    if n > &(&limit * &limit) {
        return None;
    }
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            out.push(i.clone());
            let j = n / &i;
            if j != i {
                out.push(j);
            }
        }
        i += 1;
        if i > limit {
            return None;
        }
    }
    Some(out)
}
