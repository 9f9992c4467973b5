//! Rational common zeros: sign adjustment of a real zero, rational
//! approximation on the cone `q0 = 0`, and the full solver [`solve_pair`].

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::ball::{to_balls, BallVec, PrecisionPolicy, RealBall};
use crate::error::{Error, Result};
use crate::exact::{
    bilinear, congruence, det, evaluate_form, inertia, inverse, primitive, Matrix, Rat, RatVec,
    SymMatrix,
};
use crate::lattice::{integer_left_kernel, saturate, to_rat};
use crate::oracle::{normalize, Oracle};
use crate::pencil::{check_hypothesis_h, find_balanced_lambda, is_real_solvable};
use crate::real_solution::real_point_at;
use crate::reduction::{double_witt, hyperbolic_chain, reduce_qf};
use crate::scalar::Scalar;

/// Smallest dimension handled by [`solve_pair`].
pub const MIN_DIM: usize = 13;

/// Coordinates of the two totally isotropic 5-dimensional subspaces used in
/// the last step.
const PATTERN_POS: [usize; 5] = [1, 2, 4, 6, 8];
const PATTERN_NEG: [usize; 5] = [0, 2, 4, 6, 8];

/// From a real common zero `z`, a real `z⁻` with `q0(z⁻) = 0`, `q1(z⁻) < 0`.
pub fn pos_neg(q0: &SymMatrix, q1: &SymMatrix, z: &BallVec) -> Result<BallVec> {
    let n = q0.nrows();
    if n < 5 {
        return Err(Error::Precondition(format!("sign adjustment needs n ≥ 5, got {n}")));
    }
    if z.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: z.len() });
    }
    let prec = z.iter().map(|x| x.prec()).max().unwrap_or(64);
    let b0 = to_balls(q0, prec);
    let b1 = to_balls(q1, prec);
    if evaluate_form(&b0, z)?.is_certified_nonzero() || evaluate_form(&b1, z)?.is_certified_nonzero() {
        return Err(Error::Precondition("vector is not a common zero".into()));
    }
    let dw = double_witt(&b0, &b1, z)?;
    let f = dw.q0.trailing(1);
    let g = dw.q1.trailing(1);
    let zero = RealBall::exact_zero(prec);
    let one = RealBall::from_i64(1, prec);
    let two = RealBall::from_i64(2, prec);
    let f22 = &dw.q0[(2, 2)];
    let mut w = vec![zero.clone(); n];
    if f22.is_exact_zero() {
        w[0] = one.neg().sub(&dw.q1[(2, 2)]).div(&two)?;
        w[2] = one;
    } else {
        let eps = if f22.sign_or_err()? == Ordering::Less { one.neg() } else { one.clone() };
        let mut y = vec![zero; n - 1];
        y[0] = one;
        y[1] = eps;
        let cap = 64 + max_bits(q0).max(max_bits(q1)) as usize;
        let mut done = false;
        for _ in 0..cap {
            let v = evaluate_form(&g, &y)?.sub(&y[1].mul(&evaluate_form(&f, &y)?));
            if v.sign() == Some(Ordering::Less) {
                done = true;
                break;
            }
            y[1] = y[1].mul(&two);
        }
        if !done {
            return Err(Error::Uncertain(prec));
        }
        w[0] = evaluate_form(&f, &y)?.neg().div(&two)?;
        w[1..].clone_from_slice(&y);
    }
    let out = dw.p.left_mul_vec(&w)?;
    if evaluate_form(&b1, &out)?.sign() != Some(Ordering::Less) {
        return Err(Error::Uncertain(prec));
    }
    Ok(out)
}

fn max_bits(q: &SymMatrix) -> u64 {
    q.entries().iter().map(|x| x.numer().bits() + x.denom().bits()).max().unwrap_or(0)
}

/// Rational point within `eps` of every entry of `y`, or `None` when the
/// enclosures are too wide for that.
fn rational_near(y: &[RealBall], eps: &Rat) -> Option<RatVec> {
    let half = eps / Rat::from_integer(2.into());
    if y.iter().any(|x| x.rad_rat() >= half) {
        return None;
    }
    // 2^-k ≤ eps/4
    let mut k = 0u64;
    let mut step = Rat::one();
    while step > &half / Rat::from_integer(2.into()) {
        step /= Rat::from_integer(2.into());
        k += 1;
    }
    let scale = Rat::from_integer(BigInt::one() << k);
    Some(y.iter().map(|x| (x.mid_rat() * &scale).floor() / &scale).collect())
}

/// Rational `z` with `q0(z) = 0` and `q1(z) < 0` exactly, close to the real
/// point `y` (`q0(y) = 0`, `q1(y) < 0`).
pub fn rational_isotropic_near(q0: &SymMatrix, q1: &SymMatrix, y: &BallVec, oracle: &Oracle) -> Result<RatVec> {
    let w = oracle.find(q0)?;
    rational_isotropic_near_with(q0, q1, y, &w)
}

/// As [`rational_isotropic_near`], with a known rational isotropic vector
/// `w` of `q0`.
pub fn rational_isotropic_near_with(q0: &SymMatrix, q1: &SymMatrix, y: &BallVec, w: &[Rat]) -> Result<RatVec> {
    let n = q0.nrows();
    if n < 5 {
        return Err(Error::Precondition(format!("approximation needs n ≥ 5, got {n}")));
    }
    let prec = y.iter().map(|x| x.prec()).max().unwrap_or(64);
    if evaluate_form(&to_balls(q1, prec), y)?.sign() != Some(Ordering::Less) {
        return Err(Error::Uncertain(prec));
    }
    let red = reduce_qf(q0, w)?;
    let mut p = red.p;
    let mut g0 = red.q;
    let mut g1 = congruence(&p, q1)?;
    let pinv = to_balls(&inverse(&p)?, prec);
    let mut yp = pinv.left_mul_vec(y)?;

    let accept = |v: &[Rat], p: &Matrix<Rat>| -> Result<Option<RatVec>> {
        let x = p.left_mul_vec(v)?;
        if evaluate_form(q0, &x)?.is_zero() && evaluate_form(q1, &x)?.is_negative() {
            return Ok(Some(primitive(&x)));
        }
        Ok(None)
    };

    if yp[1..].iter().all(|x| x.contains_zero()) {
        let mut e1 = vec![Rat::zero(); n];
        e1[0] = Rat::one();
        if let Some(x) = accept(&e1, &p)? {
            return Ok(x);
        }
        return Err(Error::Uncertain(prec));
    }
    // the division below needs the second coordinate away from zero; the two
    // coordinates of the hyperbolic plane may be exchanged without
    // disturbing H ⊕ F
    if !yp[1].is_certified_nonzero() {
        if !yp[0].is_certified_nonzero() {
            return Err(Error::Uncertain(prec));
        }
        p.swap_rows(0, 1);
        g0.swap_sym(0, 1);
        g1.swap_sym(0, 1);
        yp.swap(0, 1);
    }
    let f = g0.trailing(2);
    let two = Rat::from_integer(2.into());
    let mut eps = yp[1].abs().lower().to_rat() / &two;
    loop {
        let Some(z) = rational_near(&yp, &eps) else {
            return Err(Error::Uncertain(prec));
        };
        if evaluate_form(&g1, &z)?.is_negative() && !z[1].is_zero() {
            let fz = evaluate_form(&f, &z[2..])?;
            let mut u = z.clone();
            u[0] = -fz / (&two * &z[1]);
            if evaluate_form(&g1, &u)?.is_negative() {
                if let Some(x) = accept(&u, &p)? {
                    return Ok(x);
                }
                return Err(Error::Precondition("approximation left the cone".into()));
            }
        }
        eps /= &two;
    }
}

/// One recorded step of [`solve_pair`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vectors: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transform: Option<Vec<Vec<String>>>,
}

impl Stage {
    fn new(name: &str, detail: impl Into<String>) -> Self {
        Stage { name: name.into(), detail: detail.into(), vectors: Vec::new(), transform: None }
    }

    fn with_vector(mut self, v: &[Rat]) -> Self {
        self.vectors.push(strings(v));
        self
    }

    fn with_transform(mut self, p: &Matrix<Rat>) -> Self {
        self.transform = Some(p.to_rows().iter().map(|r| strings(r)).collect());
        self
    }
}

fn strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn parse_vec(v: &[String]) -> Result<RatVec> {
    v.iter()
        .map(|s| s.parse::<Rat>().map_err(|_| Error::Parse { line: 0, col: 0, msg: format!("bad rational {s:?}") }))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolutionCertificate {
    /// Primitive integer vector, first nonzero entry positive.
    pub x: RatVec,
    pub residue0: Rat,
    pub residue1: Rat,
    pub seed: u64,
    pub transcript: Vec<Stage>,
}

impl SolutionCertificate {
    /// Hex SHA-256 of the JSON transcript.
    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(&self.transcript).unwrap_or_default();
        hex::encode(Sha256::digest(&bytes))
    }

    /// Recompute `x` from the transcript.
    pub fn replay(&self) -> Result<RatVec> {
        let find = |name: &str| self.transcript.iter().find(|s| s.name == name);
        if let Some(s) = find("direct") {
            let v = s.vectors.first().ok_or_else(|| Error::Precondition("empty direct stage".into()))?;
            return Ok(normalize(&parse_vec(v)?));
        }
        let restricted = find("restricted");
        let basis = restricted.and_then(|s| s.transform.clone()).or_else(|| find("basis").and_then(|s| s.transform.clone()));
        let local = restricted.and_then(|s| s.vectors.first().cloned());
        let (Some(basis), Some(local)) = (basis, local) else {
            return Err(Error::Precondition("transcript lacks the final basis".into()));
        };
        let p = Matrix::from_rows(basis.iter().map(|r| parse_vec(r)).collect::<Result<_>>()?)?;
        Ok(normalize(&p.left_mul_vec(&parse_vec(&local)?)?))
    }

    /// Exact check against a pair of forms.
    pub fn verify(&self, q0: &SymMatrix, q1: &SymMatrix) -> Result<bool> {
        if self.x.len() != q0.nrows() {
            return Err(Error::DimensionMismatch { expected: q0.nrows(), found: self.x.len() });
        }
        Ok(!self.x.iter().all(|c| c.is_zero())
            && evaluate_form(q0, &self.x)?.is_zero()
            && evaluate_form(q1, &self.x)?.is_zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    pub seed: u64,
    pub policy: PrecisionPolicy,
    /// Cap on the iterations of the repair loop.
    pub max_repairs: usize,
    /// Random projections tried before the real zero is approximated; 0
    /// always takes the approximation route.
    pub small_draws: usize,
    /// Attempts with fresh random choices when the oracle runs out of budget.
    pub attempts: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig { seed: 0, policy: PrecisionPolicy::default(), max_repairs: 10_000, small_draws: 2_000, attempts: 12 }
    }
}

/// Nonzero rational common zero of `q0` and `q1` (`n ≥ 13`, Hypothesis H),
/// certified by exact evaluation on the input forms.
pub fn solve_pair(q0: &SymMatrix, q1: &SymMatrix, oracle: &Oracle, seed: u64) -> Result<SolutionCertificate> {
    solve_pair_with(q0, q1, oracle, &SolveConfig { seed, ..SolveConfig::default() })
}

/// Random small `u` projected from the isotropic `y` onto the cone of `a0`:
/// `w = u − a0(u)/(2·b0(y,u))·y`. `Ok(w)` is a common zero, `Err(w)` has
/// `a1(w) < 0`. `None` after `draws` attempts.
fn small_negative_point(
    a0: &SymMatrix,
    a1: &SymMatrix,
    y: &[Rat],
    rng: &mut ChaCha8Rng,
    draws: usize,
) -> Result<Option<std::result::Result<RatVec, RatVec>>> {
    let n = y.len();
    for _ in 0..draws {
        let u: RatVec = (0..n).map(|_| Rat::from_integer(rng.gen_range(-2i64..=2).into())).collect();
        let c = bilinear(a0, y, &u)?;
        if c.is_zero() {
            continue;
        }
        let k = evaluate_form(a0, &u)? / (Rat::from_integer(2.into()) * c);
        let w = primitive(&u.iter().zip(y).map(|(a, b)| a - &k * b).collect::<Vec<_>>());
        let t = evaluate_form(a1, &w)?;
        if t.is_zero() {
            return Ok(Some(Ok(w)));
        }
        if t.is_negative() {
            return Ok(Some(Err(w)));
        }
    }
    Ok(None)
}

pub fn solve_pair_with(q0: &SymMatrix, q1: &SymMatrix, oracle: &Oracle, cfg: &SolveConfig) -> Result<SolutionCertificate> {
    let n = q0.nrows();
    if q1.nrows() != n {
        return Err(Error::DimensionMismatch { expected: n, found: q1.nrows() });
    }
    if n < MIN_DIM {
        return Err(Error::Precondition(format!("solver needs n ≥ {MIN_DIM}, got {n}")));
    }
    let h = check_hypothesis_h(q0, q1)?;
    if let Some(f) = h.failure {
        return Err(Error::Hypothesis(f));
    }
    if let Some(w) = is_real_solvable(q0, q1)?.definite_lambda {
        return Err(Error::RealInsolvable { witness: w });
    }
    let mut log = Vec::new();
    let finish = |x: RatVec, log: Vec<Stage>| -> Result<SolutionCertificate> {
        let x = normalize(&x);
        let residue0 = evaluate_form(q0, &x)?;
        let residue1 = evaluate_form(q1, &x)?;
        if x.iter().all(|c| c.is_zero()) || !residue0.is_zero() || !residue1.is_zero() {
            return Err(Error::Precondition("final vector failed exact verification".into()));
        }
        Ok(SolutionCertificate { x, residue0, residue1, seed: cfg.seed, transcript: log })
    };

    // balanced shift Q0 ← Q0 + λ0·Q1
    let bal = find_balanced_lambda(q1, q0)?;
    let lam0 = bal.lambda.clone();
    let a0 = q0.add(&q1.scale(&lam0))?;
    log.push(Stage::new("balanced-shift", format!("lambda0={lam0} signature={}", bal.signature)));

    let y = oracle.find(&a0)?;
    log.push(Stage::new("isotropic-q0", "").with_vector(&y));
    let s = evaluate_form(q1, &y)?;
    if s.is_zero() {
        log.push(Stage::new("direct", "q1(y)=0").with_vector(&y));
        return finish(y, log);
    }
    let a1 = if s.is_negative() { q1.neg() } else { q1.clone() };
    log.push(Stage::new("q1-sign", if s.is_negative() { "negated" } else { "kept" }));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut attempt = 0;
    loop {
        attempt += 1;
        let mut tries = Vec::new();
        match attempt_solution(&a0, &a1, &y, oracle, cfg, &mut rng, &mut tries) {
            Ok(x) => {
                if attempt > 1 {
                    log.push(Stage::new("attempt", format!("{attempt}")));
                }
                log.extend(tries);
                return finish(x, log);
            }
            Err(Error::Oracle(e)) if e.is_budget() && attempt < cfg.attempts => continue,
            Err(e) => return Err(e),
        }
    }
}

/// Steps from the negative point to the final vector. Oracle budget failures
/// are retried by the caller with the random stream advanced.
fn attempt_solution(
    a0: &SymMatrix,
    a1: &SymMatrix,
    y: &[Rat],
    oracle: &Oracle,
    cfg: &SolveConfig,
    rng: &mut ChaCha8Rng,
    log: &mut Vec<Stage>,
) -> Result<RatVec> {
    let n = y.len();
    let mut y = y.to_vec();
    // small isotropic points by projection from y; the certified route through
    // a real zero is the fallback
    let mut z = match small_negative_point(a0, a1, &y, rng, cfg.small_draws)? {
        Some(Ok(w)) => {
            log.push(Stage::new("direct", "projection hit").with_vector(&w));
            return Ok(w);
        }
        Some(Err(z)) => {
            log.push(Stage::new("negative-point", "projection").with_vector(&z));
            z
        }
        None => {
            let z = cfg.policy.run(|prec| {
                let u = real_point_at(a0, a1, prec)?;
                let v = pos_neg(a0, a1, &u)?;
                rational_isotropic_near_with(a0, a1, &v, &y)
            })?;
            log.push(Stage::new("negative-point", "approximation").with_vector(&z));
            z
        }
    };

    // make y and z non-orthogonal for q0
    let mut bound: i64 = 2;
    let mut repairs = 0;
    while bilinear(a0, &y, &z)?.is_zero() {
        if repairs >= cfg.max_repairs {
            return Err(Error::Precondition("repair loop did not terminate".into()));
        }
        repairs += 1;
        let yp: RatVec = (0..n).map(|_| Rat::from_integer(rng.gen_range(-bound..=bound).into())).collect();
        let c = bilinear(a0, &y, &yp)?;
        if c.is_zero() {
            bound = bound.saturating_mul(2).min(1 << 40);
            continue;
        }
        let k = evaluate_form(a0, &yp)? / (Rat::from_integer(2.into()) * c);
        let w: RatVec = yp.iter().zip(&y).map(|(a, b)| a - &k * b).collect();
        let w = primitive(&w);
        let t = evaluate_form(a1, &w)?;
        if t.is_zero() {
            log.push(Stage::new("direct", format!("repair hit after {repairs} draws")).with_vector(&w));
            return Ok(w);
        }
        if t.is_positive() {
            y = w;
        } else {
            z = w;
        }
    }
    log.push(Stage::new("repair", format!("{repairs} draws")).with_vector(&y).with_vector(&z));

    // basis: q0-orthogonal complement of <y, z>, then y and z, moved to the front
    let m = Matrix::from_fn(n, 2, |i, j| {
        let v = if j == 0 { &y } else { &z };
        (0..n).fold(Rat::zero(), |acc, k| acc + &a0[(i, k)] * &v[k])
    });
    let mut rows: Vec<RatVec> = integer_left_kernel(&m).iter().map(|v| to_rat(v)).collect();
    if rows.len() != n - 2 {
        return Err(Error::Precondition(format!("complement of dimension {}", rows.len())));
    }
    rows.push(y.clone());
    rows.push(z.clone());
    let mut p = Matrix::from_rows(rows)?;
    if det(&p).is_zero() {
        return Err(Error::Precondition("basis matrix is singular".into()));
    }
    p.swap_rows(0, n - 2);
    p.swap_rows(1, n - 1);
    let g0 = congruence(&p, a0)?;
    let split = hyperbolic_chain(&g0.trailing(2), oracle)?;
    p = split.p.embed_lower(n).mul(&p)?;
    let g0 = congruence(&p, a0)?;
    let g1 = congruence(&p, a1)?;
    log.push(Stage::new("hyperbolic", format!("planes={} remainder={}", split.planes, split.remainder)));
    log.push(Stage::new("basis", "").with_transform(&p));

    let c = &g1[(2, 2)];
    let x = if c.is_zero() {
        let mut local = vec![Rat::zero(); n];
        local[2] = Rat::one();
        log.push(Stage::new("restricted", "e3").with_vector(&local));
        p.left_mul_vec(&local)?
    } else {
        let idx = if c.is_positive() { PATTERN_POS } else { PATTERN_NEG };
        if !g0.principal(&idx).entries().iter().all(|x| x.is_zero()) {
            return Err(Error::Precondition("restricted subspace is not totally isotropic".into()));
        }
        if !inertia(&g1.principal(&idx)).is_indefinite() {
            return Err(Error::Precondition("restricted form is not indefinite".into()));
        }
        // one isotropic vector from each of the five planes spans a totally
        // isotropic subspace too; take the one whose integral restriction of
        // q1 has the smallest discriminant, the pattern above on ties
        let mut best: Option<(BigInt, [usize; 5], SymMatrix)> = None;
        let first = (0..5).fold(0usize, |m, k| m | ((idx[k] - 2 * k) << k));
        for mask in std::iter::once(first).chain((0..32).filter(|&m| m != first)) {
            let cand: [usize; 5] = std::array::from_fn(|k| 2 * k + ((mask >> k) & 1));
            if !inertia(&g1.principal(&cand)).is_indefinite() {
                continue;
            }
            let rows: Vec<RatVec> = cand.iter().map(|&i| p.row(i).to_vec()).collect();
            let b = Matrix::from_rows(saturate(&rows).iter().map(|v| to_rat(v)).collect())?;
            let d = det(&congruence(&b, a1)?).abs().to_integer();
            if best.as_ref().is_none_or(|(bd, _, _)| &d < bd) {
                best = Some((d, cand, b));
            }
        }
        let (_, idx, b) = best.expect("the pattern itself qualifies");
        let r = congruence(&b, a1)?;
        let x5 = oracle.find(&r)?;
        log.push(
            Stage::new("restricted", format!("pattern={:?}", idx.map(|i| i + 1)))
                .with_vector(&x5)
                .with_transform(&b),
        );
        b.left_mul_vec(&x5)?
    };
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, int_vec};
    use crate::real_solution::real_point;

    fn diag(v: &[i64]) -> SymMatrix {
        Matrix::diagonal(&int_vec(v))
    }

    #[test]
    fn pos_neg_shortcut() {
        // q0 = 2x1x2 + x3² − x4² + x5², F22 = 0 needs the coefficient of
        // x3² after the double Witt step to vanish; build it directly
        let mut q0 = diag(&[0, 0, 0, 1, -1]);
        q0[(0, 1)] = int(1);
        q0[(1, 0)] = int(1);
        let mut q1 = diag(&[0, 0, 3, 1, 2]);
        q1[(0, 2)] = int(1);
        q1[(2, 0)] = int(1);
        let z: BallVec = crate::ball::vec_to_balls(&int_vec(&[1, 0, 0, 0, 0]), 128);
        let v = pos_neg(&q0, &q1, &z).unwrap();
        let e0 = evaluate_form(&to_balls(&q0, 128), &v).unwrap();
        let e1 = evaluate_form(&to_balls(&q1, 128), &v).unwrap();
        assert!(e0.contains_zero());
        assert_eq!(e1.sign(), Some(Ordering::Less));
        assert!(e1.contains_rat(&int(-1)));
    }

    #[test]
    fn pos_neg_doubling() {
        let q0 = diag(&[1, 1, -1, -1, 1]);
        let q1 = diag(&[1, 2, -5, -3, 4]);
        let u = real_point(&q0, &q1).unwrap();
        let v = pos_neg(&q0, &q1, &u).unwrap();
        let prec = v[0].prec();
        assert!(evaluate_form(&to_balls(&q0, prec), &v).unwrap().contains_zero());
        assert_eq!(evaluate_form(&to_balls(&q1, prec), &v).unwrap().sign(), Some(Ordering::Less));
    }

    #[test]
    fn pos_neg_rejects_non_zero() {
        let q0 = diag(&[1, 1, -1, -1, 1]);
        let q1 = diag(&[1, 2, -5, -3, 4]);
        let z = crate::ball::vec_to_balls(&int_vec(&[1, 0, 0, 0, 0]), 64);
        assert!(matches!(pos_neg(&q0, &q1, &z), Err(Error::Precondition(_))));
    }

    #[test]
    fn approximation_of_rational_point() {
        let q0 = diag(&[1, -1, 1, -1, 1]);
        let q1 = diag(&[1, -3, 2, 5, 1]);
        // q0(1,1,0,0,0) = 0, q1 = −2
        let y = crate::ball::vec_to_balls(&int_vec(&[1, 1, 0, 0, 0]), 64);
        let z = rational_isotropic_near(&q0, &q1, &y, &Oracle::default()).unwrap();
        assert!(evaluate_form(&q0, &z).unwrap().is_zero());
        assert!(evaluate_form(&q1, &z).unwrap().is_negative());
    }

    #[test]
    fn approximation_of_real_point() {
        let q0 = diag(&[1, 1, -1, -1, 1]);
        let q1 = diag(&[1, 2, -5, -3, 4]);
        let u = real_point(&q0, &q1).unwrap();
        let v = pos_neg(&q0, &q1, &u).unwrap();
        let z = rational_isotropic_near(&q0, &q1, &v, &Oracle::default()).unwrap();
        assert!(evaluate_form(&q0, &z).unwrap().is_zero());
        assert!(evaluate_form(&q1, &z).unwrap().is_negative());
    }

    fn desk13() -> (SymMatrix, SymMatrix) {
        (diag(&[1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1]), diag(&[1, 2, 3, 4, 5, 6, 7, -8, 9, -10, 11, -12, 13]))
    }

    #[test]
    fn solve_desk_instance() {
        let (q0, q1) = desk13();
        let cert = solve_pair(&q0, &q1, &Oracle::default(), 0).unwrap();
        assert!(cert.verify(&q0, &q1).unwrap());
        assert!(cert.residue0.is_zero() && cert.residue1.is_zero());
        assert_eq!(cert.replay().unwrap(), cert.x);
        let again = solve_pair(&q0, &q1, &Oracle::default(), 0).unwrap();
        assert_eq!(again, cert);
        assert_eq!(again.digest(), cert.digest());
    }

    #[test]
    fn solve_rejects_insolvable() {
        let q0 = Matrix::identity(13, ());
        let q1 = diag(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13]);
        match solve_pair(&q0, &q1, &Oracle::default(), 0) {
            Err(Error::RealInsolvable { witness }) => {
                let m = q1.add(&q0.scale(&witness)).unwrap();
                assert!(inertia(&m).is_definite());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn solve_small_dimension_rejected() {
        let (q0, q1) = (diag(&[1, -1, 1, -1, 1]), diag(&[1, 2, 3, 4, 5]));
        assert!(matches!(solve_pair(&q0, &q1, &Oracle::default(), 0), Err(Error::Precondition(_))));
    }
}
