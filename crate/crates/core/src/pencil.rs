//! The pencil `λ·Q0 + Q1`: smoothness check, signature profile along the real
//! line, detection of definite members and search for a balanced member.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    cauchy_bound, det, inertia, isolate_real_roots, pencil_det_poly, IsolatingInterval, Poly, Rat, Signature,
    SymMatrix,
};

/// Outcome of the Hypothesis H test.
#[derive(Clone, Debug, PartialEq)]
pub struct HypothesisReport {
    pub holds: bool,
    pub det_q0: Rat,
    pub det_q1: Rat,
    pub delta: Poly,
    /// First failing clause, if any.
    pub failure: Option<String>,
}

fn check_dims(q0: &SymMatrix, q1: &SymMatrix) -> Result<usize> {
    let n = q0.nrows();
    if q1.nrows() != n || !q0.is_square() || !q1.is_square() {
        return Err(Error::DimensionMismatch { expected: n, found: q1.nrows() });
    }
    Ok(n)
}

/// `det Q0 ≠ 0`, `det Q1 ≠ 0` and `Δ(λ) = det(λQ0 + Q1)` squarefree.
pub fn check_hypothesis_h(q0: &SymMatrix, q1: &SymMatrix) -> Result<HypothesisReport> {
    check_dims(q0, q1)?;
    let det_q0 = det(q0);
    let det_q1 = det(q1);
    let delta = pencil_det_poly(q0, q1)?;
    let failure = if det_q0.is_zero() {
        Some("det(Q0)=0".to_string())
    } else if det_q1.is_zero() {
        Some("det(Q1)=0".to_string())
    } else if !delta.is_squarefree() {
        Some("Δ not squarefree".to_string())
    } else {
        None
    };
    Ok(HypothesisReport { holds: failure.is_none(), det_q0, det_q1, delta, failure })
}

fn require_h(q0: &SymMatrix, q1: &SymMatrix) -> Result<HypothesisReport> {
    let rep = check_hypothesis_h(q0, q1)?;
    match &rep.failure {
        Some(f) => Err(Error::Hypothesis(f.clone())),
        None => Ok(rep),
    }
}

/// Record of the substitutions `Q0 ← Q0 + c0·Q1`, then `Q1 ← Q1 + c1·Q0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasepointShift {
    pub c0: Option<Rat>,
    pub c1: Option<Rat>,
}

fn small_candidates(n: usize) -> impl Iterator<Item = Rat> {
    (1..=(n as i64 + 2)).flat_map(|k| [Rat::from_integer(k.into()), Rat::from_integer((-k).into())])
}

/// Replace degenerate members of the pair by nondegenerate combinations.
/// Every common zero of the new pair is a common zero of the old one.
pub fn pencil_basepoint_shift(q0: &SymMatrix, q1: &SymMatrix) -> Result<(SymMatrix, SymMatrix, BasepointShift)> {
    let n = check_dims(q0, q1)?;
    if pencil_det_poly(q0, q1)?.is_zero() {
        return Err(Error::Hypothesis("Δ identically zero".into()));
    }
    let mut shift = BasepointShift::default();
    let mut a = q0.clone();
    let mut b = q1.clone();
    if det(&a).is_zero() {
        let c = small_candidates(n)
            .find(|c| !det(&a.add(&b.scale(c)).unwrap()).is_zero())
            .ok_or_else(|| Error::Hypothesis("no nondegenerate member found".into()))?;
        a = a.add(&b.scale(&c))?;
        shift.c0 = Some(c);
    }
    if det(&b).is_zero() {
        let c = small_candidates(n)
            .find(|c| !det(&b.add(&a.scale(c)).unwrap()).is_zero())
            .ok_or_else(|| Error::Hypothesis("no nondegenerate member found".into()))?;
        b = b.add(&a.scale(&c))?;
        shift.c1 = Some(c);
    }
    Ok((a, b, shift))
}

/// `λ·Q0 + Q1`.
pub fn member(q0: &SymMatrix, q1: &SymMatrix, lam: &Rat) -> SymMatrix {
    q0.scale(lam).add(q1).expect("same shape")
}

/// `d(λ) = r − s` for the signature of `λ·Q0 + Q1`.
pub fn d_at(q0: &SymMatrix, q1: &SymMatrix, lam: &Rat) -> i64 {
    inertia(&member(q0, q1, lam)).d()
}

/// Open interval between consecutive real roots (indices into the root list;
/// `None` stands for ∓∞) with its constant signature.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub left_root: Option<usize>,
    pub right_root: Option<usize>,
    pub sample: Rat,
    pub signature: Signature,
}

#[derive(Clone, Debug)]
pub struct PencilProfile {
    pub delta: Poly,
    pub cauchy: Rat,
    pub roots: Vec<IsolatingInterval>,
    pub m: usize,
    pub segments: Vec<Segment>,
    pub at_roots: Vec<Signature>,
    /// Signatures of `−Q0` and `Q0`, the members at `λ = ∓∞`.
    pub at_neg_inf: Signature,
    pub at_pos_inf: Signature,
}

fn mediant(a: &Rat, b: &Rat) -> Rat {
    Rat::new(a.numer() + b.numer(), a.denom() + b.denom())
}

/// Rational points inside every segment: `−a−1`, mediants of neighbouring
/// isolating endpoints, `a+1`. Without real roots the single sample is `0`.
pub fn segment_samples(roots: &[IsolatingInterval], cauchy: &Rat) -> Vec<Rat> {
    if roots.is_empty() {
        return vec![Rat::zero()];
    }
    let end = cauchy + Rat::one();
    let mut v = Vec::with_capacity(roots.len() + 1);
    v.push(-end.clone());
    for w in roots.windows(2) {
        v.push(mediant(&w[0].hi, &w[1].lo));
    }
    v.push(end);
    v
}

impl PencilProfile {
    pub fn d_values(&self) -> Vec<i64> {
        self.segments.iter().map(|s| s.signature.d()).collect()
    }
}

pub fn signature_profile(q0: &SymMatrix, q1: &SymMatrix) -> Result<PencilProfile> {
    let n = check_dims(q0, q1)?;
    let rep = require_h(q0, q1)?;
    let delta = rep.delta;
    let cauchy = cauchy_bound(&delta)?;
    let roots = isolate_real_roots(&delta)?;
    let m = roots.len();
    let samples = segment_samples(&roots, &cauchy);
    let segments: Vec<Segment> = samples
        .into_iter()
        .enumerate()
        .map(|(i, sample)| Segment {
            left_root: i.checked_sub(1),
            right_root: if i < m { Some(i) } else { None },
            signature: inertia(&member(q0, q1, &sample)),
            sample,
        })
        .collect();
    // at a simple root the rank drops by one and d is the average of its
    // one-sided limits
    let mut at_roots = Vec::with_capacity(m);
    for i in 0..m {
        let dl = segments[i].signature.d();
        let dr = segments[i + 1].signature.d();
        let d = (dl + dr) / 2;
        let rank = n as i64 - 1;
        if (dl + dr) % 2 != 0 || (rank + d) % 2 != 0 {
            return Err(Error::Hypothesis("inconsistent signature jump".into()));
        }
        at_roots.push(Signature { r: ((rank + d) / 2) as usize, s: ((rank - d) / 2) as usize, n });
    }
    Ok(PencilProfile {
        delta,
        cauchy,
        roots,
        m,
        segments,
        at_roots,
        at_neg_inf: inertia(&q0.neg()),
        at_pos_inf: inertia(q0),
    })
}

/// A rational `λ` with `λ·Q0 + Q1` definite, if one exists.
///
/// Only the two candidate segments singled out by the signature of
/// `−a·Q0 + Q1` (`a` the Cauchy bound of `Δ`) are examined.
pub fn find_definite_lambda(q0: &SymMatrix, q1: &SymMatrix) -> Result<Option<Rat>> {
    let n = check_dims(q0, q1)?;
    let rep = require_h(q0, q1)?;
    let a = cauchy_bound(&rep.delta)?;
    let roots = isolate_real_roots(&rep.delta)?;
    if roots.len() != n {
        return Ok(None);
    }
    let sig = inertia(&member(q0, q1, &-a.clone()));
    let samples = segment_samples(&roots, &a);
    // the segment indexed by s carries the positive definite members
    for j in [sig.s, sig.r] {
        let lam = &samples[j];
        if inertia(&member(q0, q1, lam)).is_definite() {
            return Ok(Some(lam.clone()));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolvabilityReport {
    pub solvable_over_r: bool,
    pub definite_lambda: Option<Rat>,
    pub hypothesis_h: bool,
    pub hypothesis_failure: Option<String>,
}

/// Real solvability of `q0 = q1 = 0` (nonzero real common zero) for `n ≥ 3`:
/// solvable iff no member of the pencil is definite.
pub fn is_real_solvable(q0: &SymMatrix, q1: &SymMatrix) -> Result<SolvabilityReport> {
    let n = check_dims(q0, q1)?;
    let rep = check_hypothesis_h(q0, q1)?;
    if let Some(f) = rep.failure {
        return Ok(SolvabilityReport {
            solvable_over_r: false,
            definite_lambda: None,
            hypothesis_h: false,
            hypothesis_failure: Some(f),
        });
    }
    let w = find_definite_lambda(q0, q1)?;
    // the definite-member test is only complete for n ≥ 3
    let solvable = if n >= 3 { w.is_none() } else { small_common_zero(q0, q1) };
    Ok(SolvabilityReport {
        solvable_over_r: solvable,
        definite_lambda: w,
        hypothesis_h: true,
        hypothesis_failure: None,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BalancedLambda {
    pub lambda: Rat,
    pub signature: Signature,
    pub steps: usize,
}

fn bit_size(r: &Rat) -> u64 {
    r.numer().bits() + r.denom().bits()
}

/// A rational `λ` with `λ·Q0 + Q1` balanced (`|r − s| ≤ 1`) and nonsingular,
/// by dichotomy on `d` over `[−a−1, a+1]` starting from `λ = 0`.
pub fn find_balanced_lambda(q0: &SymMatrix, q1: &SymMatrix) -> Result<BalancedLambda> {
    check_dims(q0, q1)?;
    let rep = require_h(q0, q1)?;
    let a = cauchy_bound(&rep.delta)?;
    let mut hi = &a + Rat::one();
    let mut lo = -hi.clone();
    let mut d_lo = d_at(q0, q1, &lo);
    let mut lb = Rat::zero();
    let cap = 64 + bit_size(&a) as usize;
    for step in 0..=cap {
        // a root of Δ carries no balanced signature; step off it toward λmax
        while rep.delta.eval(&lb).is_zero() {
            lb = mediant(&lb, &hi);
        }
        let sig = inertia(&member(q0, q1, &lb));
        let d = sig.d();
        if d.abs() <= 1 {
            let lambda = simplest_equivalent(&rep.delta, &lb)?;
            return Ok(BalancedLambda { lambda, signature: sig, steps: step });
        }
        if d.signum() * d_lo.signum() < 0 {
            hi = lb.clone();
        } else {
            lo = lb.clone();
            d_lo = d;
        }
        lb = (&lo + &hi) / Rat::from_integer(2.into());
    }
    // dichotomy cap reached (roots closer than the cap resolves): scan the
    // profile, which always contains a balanced segment
    let prof = signature_profile(q0, q1)?;
    let seg = prof
        .segments
        .iter()
        .find(|s| s.signature.is_balanced())
        .ok_or_else(|| Error::Hypothesis("no balanced member".into()))?;
    Ok(BalancedLambda { lambda: seg.sample.clone(), signature: seg.signature, steps: cap + 1 })
}

/// Nonzero real common zero for `n ≤ 2`: in two variables the binary forms
/// must share a real linear factor.
fn small_common_zero(q0: &SymMatrix, q1: &SymMatrix) -> bool {
    let is_zero = |q: &SymMatrix| q.entries().iter().all(|x| x.is_zero());
    // a binary form has a real zero unless it is definite
    let has_zero = |q: &SymMatrix| is_zero(q) || !det(q).is_positive();
    match (q0.nrows(), is_zero(q0), is_zero(q1)) {
        (0, _, _) => return false,
        (1, z0, z1) => return z0 && z1,
        (_, true, _) => return has_zero(q1),
        (_, _, true) => return has_zero(q0),
        _ => {}
    }
    let (a1, b1, c1) = (&q0[(0, 0)], &q0[(0, 1)], &q0[(1, 1)]);
    let (a2, b2, c2) = (&q1[(0, 0)], &q1[(0, 1)], &q1[(1, 1)]);
    let four = Rat::from_integer(4.into());
    let res = (a1 * c2 - a2 * c1).pow(2) - four * (a1 * b2 - a2 * b1) * (b1 * c2 - b2 * c1);
    if !res.is_zero() {
        return false;
    }
    let proportional = (a1 * b2 - a2 * b1).is_zero() && (a1 * c2 - a2 * c1).is_zero() && (b1 * c2 - b2 * c1).is_zero();
    // one shared root of two real quadratics is real; two shared roots are
    // real exactly when the discriminant is nonnegative
    !proportional || !det(q0).is_positive()
}

/// The first continued fraction convergent of `lam` not separated from it
/// by a root of `delta`, so `λ·Q0 + Q1` keeps its signature with a small
/// height. `lam` itself when no earlier convergent qualifies.
pub fn simplest_equivalent(delta: &Poly, lam: &Rat) -> Result<Rat> {
    if delta.eval(lam).is_zero() {
        return Err(Error::Precondition(format!("{lam} is a root of Δ")));
    }
    let sturm = delta.sturm()?;
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut x = lam.clone();
    loop {
        let a = x.floor().to_integer();
        let h = &a * &h1 + &h0;
        let k = &a * &k1 + &k0;
        let c = Rat::new(h.clone(), k.clone());
        if &c == lam {
            return Ok(c);
        }
        let (lo, hi) = if &c < lam { (&c, lam) } else { (lam, &c) };
        if !delta.eval(&c).is_zero() && sturm.count_in(lo, hi) == 0 {
            return Ok(c);
        }
        (h0, h1) = (h1, h);
        (k0, k1) = (k1, k);
        x = (x - Rat::from_integer(a)).recip();
    }
}

/// Signature sequence as text, e.g. `(-inf,λ1):[1,1] (λ1,+inf):[2,0]`.
pub fn format_profile(p: &PencilProfile) -> String {
    let mut out = Vec::new();
    for s in &p.segments {
        let l = s.left_root.map_or("-inf".to_string(), |i| format!("λ{}", i + 1));
        let r = s.right_root.map_or("+inf".to_string(), |i| format!("λ{}", i + 1));
        out.push(format!("({l},{r}):{}", s.signature));
    }
    out.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Matrix};

    fn diag(v: &[i64]) -> SymMatrix {
        Matrix::diagonal(&v.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    fn h() -> SymMatrix {
        Matrix::symmetric(vec![vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap()
    }

    #[test]
    fn hypothesis_examples() {
        assert!(check_hypothesis_h(&diag(&[1, 1]), &diag(&[1, 2])).unwrap().holds);
        let r = check_hypothesis_h(&diag(&[1, 1]), &diag(&[1, 1])).unwrap();
        assert_eq!(r.failure.as_deref(), Some("Δ not squarefree"));
        let r = check_hypothesis_h(&diag(&[0, 1]), &diag(&[1, 2])).unwrap();
        assert_eq!(r.failure.as_deref(), Some("det(Q0)=0"));
    }

    #[test]
    fn basepoint_shift() {
        let (a, b, s) = pencil_basepoint_shift(&diag(&[0, 1]), &diag(&[1, 1])).unwrap();
        assert_eq!(s.c0, Some(int(1)));
        assert_eq!(a, diag(&[1, 2]));
        assert_eq!(b, diag(&[1, 1]));
        let zero = diag(&[0, 0]);
        assert!(pencil_basepoint_shift(&zero, &zero).is_err());
    }

    #[test]
    fn profile_of_split_pencil() {
        let p = signature_profile(&diag(&[1, -1]), &diag(&[1, 1])).unwrap();
        assert_eq!(p.m, 2);
        assert_eq!(p.d_values(), vec![0, 2, 0]);
        assert_eq!(p.at_roots, vec![Signature { r: 1, s: 0, n: 2 }; 2]);
        let p = signature_profile(&diag(&[1, -1]), &h()).unwrap();
        assert_eq!(p.m, 0);
        assert_eq!(p.d_values(), vec![0]);
    }

    #[test]
    fn definite_members() {
        let l = find_definite_lambda(&diag(&[1, -1]), &diag(&[1, 1])).unwrap().unwrap();
        assert!(inertia(&member(&diag(&[1, -1]), &diag(&[1, 1]), &l)).is_positive_definite());
        assert_eq!(find_definite_lambda(&diag(&[1, -1]), &h()).unwrap(), None);
        let l = find_definite_lambda(&diag(&[1, 1]), &diag(&[1, 2])).unwrap().unwrap();
        assert!(l > int(-1));
    }

    #[test]
    fn solvability_guard() {
        // no definite member, yet x² − y² and 2xy have no common real zero
        let r = is_real_solvable(&diag(&[1, -1]), &h()).unwrap();
        assert!(r.definite_lambda.is_none() && !r.solvable_over_r);
        // x² − y² and x² + 2xy − 3y² share the factor x − y
        let q1 = Matrix::symmetric(vec![vec![int(1), int(1)], vec![int(1), int(-3)]]).unwrap();
        assert!(small_common_zero(&diag(&[1, -1]), &q1));
        assert!(small_common_zero(&diag(&[1, -1]), &diag(&[2, -2])));
        assert!(!small_common_zero(&diag(&[1, 1]), &diag(&[2, 2])));
        assert!(small_common_zero(&diag(&[0, 0]), &diag(&[2, 0])));
        assert!(!small_common_zero(&diag(&[3]), &diag(&[0])));
        let r = is_real_solvable(&diag(&[1, 1, 1]), &diag(&[1, 2, 3])).unwrap();
        assert!(!r.solvable_over_r && r.definite_lambda.is_some());
        let r = is_real_solvable(&diag(&[1, -1, 1, -1]), &diag(&[1, -2, 3, -4])).unwrap();
        assert!(r.solvable_over_r);
    }

    #[test]
    fn balanced() {
        let b = find_balanced_lambda(&diag(&[1, -1]), &diag(&[1, 1])).unwrap();
        assert_eq!(b.signature.d(), 0);
        assert!(!det(&member(&diag(&[1, -1]), &diag(&[1, 1]), &b.lambda)).is_zero());
        let b = find_balanced_lambda(&diag(&[1, 1, -1]), &diag(&[2, -1, -3])).unwrap();
        assert!(b.signature.d().abs() <= 1);
        let b = find_balanced_lambda(&diag(&[1, 1, 1]), &diag(&[1, -1, 2])).unwrap();
        assert_eq!(b.lambda, int(0));
    }

    #[test]
    fn simplest_convergent() {
        // Δ = (λ − 1/3)(λ − 5/2): 1 is the first convergent of 71/50 past 1/3
        let delta = Poly::from_ints(&[-5, 17, -6]).neg();
        assert_eq!(simplest_equivalent(&delta, &rat(71, 50)).unwrap(), int(1));
        assert_eq!(simplest_equivalent(&delta, &rat(1, 7)).unwrap(), int(0));
        // 3/8 = [0; 2, 1, 2]: 0 lies past 1/3, 1/2 does not
        assert_eq!(simplest_equivalent(&delta, &rat(3, 8)).unwrap(), rat(1, 2));
        let narrow = Poly::from_ints(&[2, -11, 15]);
        assert_eq!(simplest_equivalent(&narrow, &rat(7, 20)).unwrap(), rat(7, 20));
        assert!(simplest_equivalent(&delta, &rat(1, 3)).is_err());
    }
}
