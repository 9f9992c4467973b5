use std::cmp::Ordering;

use num_traits::{Signed, ToPrimitive, Zero};

use super::complex::ComplexBall;
use super::dyadic::{Dyadic, Round};
use super::real::RealBall;
use crate::error::{Error, Result};
use crate::exact::{IsolatingInterval, Poly, Rat};
use crate::scalar::Scalar;

/// Ball of radius at most `2^-bits` around the unique root of `iv`.
///
/// Bisection down to a coarse width, then Newton steps on dyadic points,
/// each result certified by an exact sign change of the polynomial.
pub fn refine_root(iv: &IsolatingInterval, bits: u32) -> RealBall {
    let p = &*iv.poly;
    let mag = iv.hi.abs().max(iv.lo.abs());
    let mag_bits = mag.to_integer().bits() as u32 + 1;
    let prec = bits + 16 + mag_bits;
    if p.degree() == Some(1) {
        let c = p.coeffs();
        let r = -(&c[0] / &c[1]);
        return RealBall::from_rat_prec(&r, prec);
    }
    let mut iv = iv.clone();
    let target = Rat::new(1.into(), num_bigint::BigInt::from(1) << bits as u64);
    let coarse = Rat::new(1.into(), num_bigint::BigInt::from(1) << 40u32.min(bits) as u64);
    while iv.width() > coarse {
        if let Some(r) = iv.bisect() {
            return RealBall::from_rat_prec(&r, prec);
        }
    }
    if iv.width() <= target {
        return RealBall::from_interval(&iv.lo, &iv.hi, prec);
    }
    if let Some(b) = newton_certified(&iv, bits, prec) {
        return b;
    }
    while iv.width() > target {
        if let Some(r) = iv.bisect() {
            return RealBall::from_rat_prec(&r, prec);
        }
    }
    RealBall::from_interval(&iv.lo, &iv.hi, prec)
}

fn newton_certified(iv: &IsolatingInterval, bits: u32, prec: u32) -> Option<RealBall> {
    let p = &*iv.poly;
    let dp = p.derivative();
    let mid = (&iv.lo + &iv.hi) / Rat::from_integer(2.into());
    let mut x = Dyadic::from_rat(&mid, 64, Round::Floor);
    let mut work = 64u32;
    for _ in 0..80 {
        work = (work * 2).min(prec + 8);
        let xr = x.to_rat();
        let fx = p.eval(&xr);
        let dfx = dp.eval(&xr);
        if dfx.is_zero() {
            return None;
        }
        if fx.is_zero() {
            return Some(RealBall::exact(x, prec));
        }
        let step = &fx / &dfx;
        let s = Dyadic::from_rat(&step, work, Round::Floor);
        x = x.sub(&s).round(work + 8, Round::Floor);
        if !iv.contains(&x.to_rat()) {
            return None;
        }
        let small = s.is_zero() || s.ilog2() < -(bits as i64) - 4;
        if small && work >= prec {
            break;
        }
    }
    // certify the root lies within 2^-(bits+1) of x
    let eps = Dyadic::pow2(-(bits as i64) - 1);
    let lo = x.sub(&eps).to_rat();
    let hi = x.add(&eps).to_rat();
    if lo < iv.lo || hi > iv.hi {
        return None;
    }
    let (sl, sh) = (p.sign_at(&lo), p.sign_at(&hi));
    if sl == Ordering::Equal {
        return Some(RealBall::from_rat_prec(&lo, prec));
    }
    if sh == Ordering::Equal {
        return Some(RealBall::from_rat_prec(&hi, prec));
    }
    if sl == sh {
        return None;
    }
    Some(RealBall::new(x, eps, prec))
}

/// Horner evaluation over complex balls.
pub fn eval_complex(coeffs: &[ComplexBall], z: &ComplexBall) -> ComplexBall {
    let mut acc = ComplexBall::zero(z.prec());
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(c);
    }
    acc
}

fn coeff_balls(p: &Poly, prec: u32) -> Vec<ComplexBall> {
    p.coeffs().iter().map(|c| ComplexBall::from_rat(c, prec)).collect()
}

/// Approximate roots by the Aberth–Ehrlich iteration in double precision.
fn aberth(p: &Poly) -> Vec<(f64, f64)> {
    let m = p.monic();
    let d = m.degree().unwrap_or(0);
    if d == 0 {
        return Vec::new();
    }
    let c: Vec<f64> = m.coeffs().iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    let bound = 1.0 + c[..d].iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let r0 = bound.min(1e6).max(1.0) / 2.0;
    let mut z: Vec<(f64, f64)> = (0..d)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / d as f64 + 0.4;
            (r0 * t.cos(), r0 * t.sin())
        })
        .collect();
    let mul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let div = |a: (f64, f64), b: (f64, f64)| {
        let n = b.0 * b.0 + b.1 * b.1;
        ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
    };
    for _ in 0..1000 {
        let mut moved = 0.0f64;
        for k in 0..d {
            let zk = z[k];
            let (mut f, mut df) = ((0.0, 0.0), (0.0, 0.0));
            for ci in c.iter().rev() {
                df = (mul(df, zk).0 + f.0, mul(df, zk).1 + f.1);
                f = (mul(f, zk).0 + ci, mul(f, zk).1);
            }
            if df == (0.0, 0.0) {
                continue;
            }
            let w = div(f, df);
            let mut s = (0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    let t = div((1.0, 0.0), (zk.0 - zj.0, zk.1 - zj.1));
                    s = (s.0 + t.0, s.1 + t.1);
                }
            }
            let ws = mul(w, s);
            let corr = div(w, (1.0 - ws.0, -ws.1));
            if corr.0.is_finite() && corr.1.is_finite() {
                z[k] = (zk.0 - corr.0, zk.1 - corr.1);
                moved = moved.max(corr.0.hypot(corr.1) / (1.0 + zk.0.hypot(zk.1)));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Certified enclosures of the nonreal roots of a squarefree `p`, one per
/// conjugate pair (the member with positive imaginary part), ordered by
/// real part. `m` is the number of real roots.
pub fn complex_roots(p: &Poly, m: usize, prec: u32) -> Result<Vec<ComplexBall>> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    let pairs = (d - m) / 2;
    if pairs == 0 {
        return Ok(Vec::new());
    }
    let mut approx = aberth(p);
    approx.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap_or(Ordering::Equal));
    approx.truncate(pairs);
    approx.sort_by(|a, b| (a.0, a.1).partial_cmp(&(b.0, b.1)).unwrap_or(Ordering::Equal));
    let cs = coeff_balls(p, prec);
    let dcs = coeff_balls(&p.derivative(), prec);
    let mut out: Vec<(ComplexBall, Dyadic)> = Vec::with_capacity(pairs);
    for (re, im) in approx {
        if im <= 0.0 {
            return Err(Error::Uncertain(prec));
        }
        let mut z = ComplexBall::new(
            RealBall::exact(Dyadic::from_f64(re), prec),
            RealBall::exact(Dyadic::from_f64(im), prec),
        );
        for _ in 0..(prec.ilog2() + 40) {
            let f = eval_complex(&cs, &z);
            let df = eval_complex(&dcs, &z);
            let step = f.midpoint().div(&df.midpoint())?.midpoint();
            z = z.sub(&step).midpoint();
            let tiny = step.is_exact_zero()
                || step.approx_abs() == 0.0
                || (step.re.log2_abs().max(step.im.log2_abs()) < -(prec as f64) + 8.0);
            if tiny {
                break;
            }
        }
        // inclusion radius d·|p(z)|/|p'(z)|
        let f = eval_complex(&cs, &z);
        let df = eval_complex(&dcs, &z);
        let fu = f.re.abs_upper().mul(&f.re.abs_upper()).add(&f.im.abs_upper().mul(&f.im.abs_upper()));
        let dl = df.re.abs_lower().mul(&df.re.abs_lower()).add(&df.im.abs_lower().mul(&df.im.abs_lower()));
        if dl.is_zero() {
            return Err(Error::Uncertain(prec));
        }
        let ratio = fu.div(&dl, 32, Round::Ceil);
        let r = ratio.sqrt(32, Round::Ceil).mul(&Dyadic::from_int(d as i64)).add(&Dyadic::pow2(-(prec as i64) - 8));
        out.push((z, r));
    }
    // separation checks
    for (i, (z, r)) in out.iter().enumerate() {
        if z.im.mid().sub(r) <= Dyadic::zero() {
            return Err(Error::Uncertain(prec));
        }
        for (w, s) in out.iter().skip(i + 1) {
            let dx = z.re.mid().sub(w.re.mid());
            let dy = z.im.mid().sub(w.im.mid());
            let dist2 = dx.mul(&dx).add(&dy.mul(&dy));
            let rs = r.add(s);
            if dist2 <= rs.mul(&rs) {
                return Err(Error::Uncertain(prec));
            }
        }
    }
    Ok(out
        .into_iter()
        .map(|(z, r)| {
            ComplexBall::new(RealBall::new(z.re.mid().clone(), r.clone(), prec), RealBall::new(z.im.mid().clone(), r, prec))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, isolate_real_roots};

    #[test]
    fn sqrt2_to_30_bits() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let iv = IsolatingInterval { lo: int(1), hi: int(2), poly: std::sync::Arc::new(p) };
        let b = refine_root(&iv, 30);
        assert!(b.rad_log2() <= -30.0);
        let sq = b.mul(&b);
        assert!(sq.contains_rat(&int(2)));
    }

    #[test]
    fn rational_root_is_exact() {
        let p = Poly::from_ints(&[-1, 1]);
        let iv = IsolatingInterval { lo: int(0), hi: int(2), poly: std::sync::Arc::new(p) };
        let b = refine_root(&iv, 50);
        assert!(b.is_exact() && b.contains_rat(&int(1)));
        let q = Poly::from_ints(&[-1, 0, 1]);
        let iv = IsolatingInterval { lo: int(0), hi: int(2), poly: std::sync::Arc::new(q) };
        assert!(refine_root(&iv, 10).contains_rat(&int(1)));
    }

    #[test]
    fn high_precision_newton() {
        let p = Poly::from_ints(&[-3, 0, 0, 1]);
        let ivs = isolate_real_roots(&p).unwrap();
        let b = refine_root(&ivs[0], 2000);
        assert!(b.rad_log2() <= -2000.0);
        let c = b.mul(&b).mul(&b);
        assert!(c.contains_rat(&int(3)));
    }

    #[test]
    fn complex_pair_of_quadratic() {
        // λ² + 1
        let p = Poly::from_ints(&[1, 0, 1]);
        let r = complex_roots(&p, 0, 128).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].im.contains_rat(&int(1)) && r[0].re.contains_rat(&int(0)));
        assert!(r[0].rad_log2() < -100.0);
    }

    #[test]
    fn mixed_roots() {
        // (λ−1)(λ−2)(λ²+2λ+5): complex pair −1 ± 2i
        let p = Poly::from_ints(&[-1, 1]).mul(&Poly::from_ints(&[-2, 1])).mul(&Poly::from_ints(&[5, 2, 1]));
        let r = complex_roots(&p, 2, 96).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].re.contains_rat(&int(-1)) && r[0].im.contains_rat(&int(2)));
    }
}
