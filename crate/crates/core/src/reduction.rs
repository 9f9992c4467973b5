//! Congruence transforms splitting hyperbolic planes off quadratic forms.
//!
//! Every step returns the transform `P` together with `P·Q·Pᵗ`. Entries that
//! vanish (or equal one) by construction are set to exact values after each
//! congruence, so the shape postconditions hold exactly also over balls. An
//! entry whose enclosure is inconsistent with its known value is reported as
//! a precondition failure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    common_denominator, congruence, evaluate_form, inertia, is_zero_vec, primitive_ints, Matrix, Rat, RatVec, Signature,
    SymMatrix, Transform,
};
use crate::lattice::{integer_left_kernel, reduce_form, to_rat};
use crate::oracle::Oracle;
use crate::scalar::Scalar;

/// A transform and the Gram matrix it produces, `q = p·Q·pᵗ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Congruent<T> {
    pub p: Transform<T>,
    pub q: Matrix<T>,
}

impl<T: Scalar> Congruent<T> {
    /// Apply a further transform `r`: the result is `(r·p, r·q·rᵗ)`.
    fn then(self, r: Congruent<T>) -> Result<Congruent<T>> {
        Ok(Congruent { p: r.p.mul(&self.p)?, q: r.q })
    }
}

fn force<T: Scalar>(q: &mut Matrix<T>, i: usize, j: usize, v: &T) -> Result<()> {
    let mut x = q[(i, j)].clone();
    if !x.settle(v) {
        return Err(Error::Precondition(format!("entry ({}, {}) is {x:?}, expected {v:?}", i + 1, j + 1)));
    }
    q[(i, j)] = x.clone();
    q[(j, i)] = x;
    Ok(())
}

fn force_zero<T: Scalar>(q: &mut Matrix<T>, i: usize, j: usize) -> Result<()> {
    let z = T::zero_in(q.ctx());
    force(q, i, j, &z)
}

/// Force row `i` of `q` to the unit vector `e_k` (both triangles).
fn force_unit_row<T: Scalar>(q: &mut Matrix<T>, i: usize, k: usize) -> Result<()> {
    let one = T::one_in(q.ctx());
    for j in 0..q.ncols() {
        if j == k {
            force(q, i, j, &one)?;
        } else {
            force_zero(q, i, j)?;
        }
    }
    Ok(())
}

/// Smallest index `j ≥ from` with a certified nonzero entry. `Ok(None)` when
/// all candidates are certified zero; [`Error::Uncertain`] when none is
/// certified nonzero but some are undecided.
fn smallest_nonzero<T: Scalar>(v: &[T], from: usize) -> Result<Option<usize>> {
    let mut undecided = None;
    for (j, x) in v.iter().enumerate().skip(from) {
        if x.is_certified_nonzero() {
            return Ok(Some(j));
        }
        if undecided.is_none() && x.sign().is_none() {
            undecided = Some(j);
        }
    }
    match undecided {
        Some(j) => Err(v[j].sign_or_err().unwrap_err()),
        None => Ok(None),
    }
}

fn row_of<T: Scalar>(q: &Matrix<T>, i: usize) -> Vec<T> {
    q.row(i).to_vec()
}

/// Complete the isotropic vector `y` to a basis `P` (first row `y`) so that
/// `(PQPᵗ)₁₁ = 0` and `(PQPᵗ)₁₂ ≠ 0`.
pub fn base_witt<T: Scalar>(q: &Matrix<T>, y: &[T]) -> Result<Congruent<T>> {
    let n = q.nrows();
    if y.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: y.len() });
    }
    if y.iter().all(|x| x.is_exact_zero()) {
        return Err(Error::Precondition("isotropic vector is zero".into()));
    }
    if evaluate_form(q, y)?.is_certified_nonzero() {
        return Err(Error::Precondition("vector is not isotropic".into()));
    }
    let Some(k) = smallest_nonzero(y, 0)? else {
        return Err(Error::Precondition("isotropic vector is zero".into()));
    };
    let ctx = q.ctx();
    let mut rows = vec![y.to_vec()];
    for j in (0..n).filter(|&j| j != k) {
        rows.push((0..n).map(|i| if i == j { T::one_in(ctx) } else { T::zero_in(ctx) }).collect());
    }
    let mut p = Matrix::from_rows(rows)?;
    let mut qp = congruence(&p, q)?;
    force_zero(&mut qp, 0, 0)?;
    let Some(i) = smallest_nonzero(&row_of(&qp, 0), 1)? else {
        return Err(Error::Precondition("isotropic vector lies in the kernel".into()));
    };
    p.swap_rows(1, i);
    qp.swap_sym(1, i);
    Ok(Congruent { p, q: qp })
}

/// Mordell's first step: from `a₁₁ = 0`, `a₁₂ ≠ 0` reach first row
/// `(0, 1, 0, …, 0)`.
pub fn clear_first_row<T: Scalar>(q: &Matrix<T>) -> Result<Congruent<T>> {
    let n = q.nrows();
    if n < 2 {
        return Err(Error::Precondition("need n ≥ 2".into()));
    }
    let mut q = q.clone();
    force_zero(&mut q, 0, 0)?;
    let a12 = q[(0, 1)].clone();
    if !a12.is_certified_nonzero() {
        return Err(match a12.sign() {
            None => a12.sign_or_err().unwrap_err(),
            Some(_) => Error::Precondition("a₁₂ = 0".into()),
        });
    }
    let ctx = q.ctx();
    let mut p = Matrix::identity(n, ctx);
    p[(0, 0)] = T::one_in(ctx).div(&a12)?;
    let mut q1 = congruence(&p, &q)?;
    force_zero(&mut q1, 0, 0)?;
    force(&mut q1, 0, 1, &T::one_in(ctx))?;
    let mut p2 = Matrix::identity(n, ctx);
    for i in 2..n {
        p2[(i, 1)] = q1[(i, 0)].neg();
    }
    let mut q2 = congruence(&p2, &q1)?;
    force_unit_row(&mut q2, 0, 1)?;
    Ok(Congruent { p: p2.mul(&p)?, q: q2 })
}

/// Mordell's second step: from first row `(0, 1, 0, …, 0)` reach `H ⊕ Q₂`.
pub fn split_h<T: Scalar>(q: &Matrix<T>) -> Result<Congruent<T>> {
    let n = q.nrows();
    if n < 2 {
        return Err(Error::Precondition("need n ≥ 2".into()));
    }
    let mut q = q.clone();
    force_unit_row(&mut q, 0, 1)?;
    let ctx = q.ctx();
    let mut p = Matrix::identity(n, ctx);
    for i in 1..n {
        p[(i, 0)] = q[(i, 1)].neg();
    }
    let mut q3 = congruence(&p, &q)?;
    force_unit_row(&mut q3, 0, 1)?;
    for j in 2..n {
        force_zero(&mut q3, 1, j)?;
    }
    // row 2 of S first, then S₁₁ = 1/2
    let mut s = Matrix::identity(n, ctx);
    let c = q3[(1, 1)].clone();
    let two = T::from_rat(&Rat::from_integer(2.into()), ctx);
    for i in 0..n {
        s[(1, i)] = two.mul(&s[(1, i)]).sub(&c.mul(&s[(0, i)]));
    }
    s[(0, 0)] = T::one_in(ctx).div(&two)?;
    let mut out = congruence(&s, &q3)?;
    force_unit_row(&mut out, 0, 1)?;
    force_unit_row(&mut out, 1, 0)?;
    Ok(Congruent { p: s.mul(&p)?, q: out })
}

/// `P` with `P·Q·Pᵗ = H ⊕ Q₂`, built from an isotropic vector `y`.
pub fn reduce_qf<T: Scalar>(q: &Matrix<T>, y: &[T]) -> Result<Congruent<T>> {
    let a = base_witt(q, y)?;
    let b = clear_first_row(&a.q)?;
    let a = a.then(b)?;
    let c = split_h(&a.q)?;
    a.then(c)
}

/// From `a₁₁ = 0`, `a₁₃ ≠ 0` reach first row `(0, 0, 1, 0, …, 0)` while
/// keeping the first two columns of `P` equal to those of the identity.
pub fn mordell3<T: Scalar>(q: &Matrix<T>) -> Result<Congruent<T>> {
    let n = q.nrows();
    if n < 3 {
        return Err(Error::Precondition("need n ≥ 3".into()));
    }
    let mut q = q.clone();
    force_zero(&mut q, 0, 0)?;
    let a13 = q[(0, 2)].clone();
    if !a13.is_certified_nonzero() {
        return Err(match a13.sign() {
            None => a13.sign_or_err().unwrap_err(),
            Some(_) => Error::Precondition("a₁₃ = 0".into()),
        });
    }
    let ctx = q.ctx();
    let mut p = Matrix::identity(n, ctx);
    p[(2, 2)] = T::one_in(ctx).div(&a13)?;
    let mut q1 = congruence(&p, &q)?;
    force_zero(&mut q1, 0, 0)?;
    force(&mut q1, 0, 2, &T::one_in(ctx))?;
    let mut p2 = Matrix::identity(n, ctx);
    p2[(1, 2)] = q1[(0, 1)].neg();
    for i in 3..n {
        p2[(i, 2)] = q1[(i, 0)].neg();
    }
    let mut q2 = congruence(&p2, &q1)?;
    force_unit_row(&mut q2, 0, 2)?;
    Ok(Congruent { p: p2.mul(&p)?, q: q2 })
}

/// Result of [`double_witt`]: `q0 = p·Q0·pᵗ`, `q1 = p·Q1·pᵗ`.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleWitt<T> {
    pub p: Transform<T>,
    pub q0: Matrix<T>,
    pub q1: Matrix<T>,
}

/// Transform with first rows `(0, 1, 0, …)` for `Q0` and `(0, 0, 1, 0, …)`
/// for `Q1`, given a common zero `z`.
pub fn double_witt<T: Scalar>(q0: &Matrix<T>, q1: &Matrix<T>, z: &[T]) -> Result<DoubleWitt<T>> {
    let n = q0.nrows();
    if n < 3 {
        return Err(Error::Precondition("need n ≥ 3".into()));
    }
    if evaluate_form(q1, z)?.is_certified_nonzero() {
        return Err(Error::Precondition("vector is not a zero of q1".into()));
    }
    let a = base_witt(q0, z)?;
    let mut g1 = congruence(&a.p, q1)?;
    force_zero(&mut g1, 0, 0)?;
    let b = clear_first_row(&a.q)?;
    let mut g2 = congruence(&b.p, &g1)?;
    force_zero(&mut g2, 0, 0)?;
    let mut p = b.p.mul(&a.p)?;
    let mut f = b.q;
    let Some(i) = smallest_nonzero(&row_of(&g2, 0), 2)? else {
        return Err(Error::Hypothesis("the common zero is a singular point of the intersection".into()));
    };
    p.swap_rows(2, i);
    f.swap_sym(2, i);
    g2.swap_sym(2, i);
    let r = mordell3(&g2)?;
    let mut f2 = congruence(&r.p, &f)?;
    force_unit_row(&mut f2, 0, 1)?;
    Ok(DoubleWitt { p: r.p.mul(&p)?, q0: f2, q1: r.q })
}

/// True when `q` starts with `k` exact hyperbolic planes on coordinate pairs
/// `(1,2), (3,4), …` orthogonal to everything else.
pub fn has_hyperbolic_prefix(q: &SymMatrix, k: usize) -> bool {
    let n = q.nrows();
    if 2 * k > n {
        return false;
    }
    (0..2 * k).all(|i| {
        let partner = i ^ 1;
        (0..n).all(|j| {
            let want = if j == partner { Rat::one() } else { Rat::zero() };
            q[(i, j)] == want
        })
    })
}

/// Output of [`hyperbolic_chain`].
#[derive(Clone, Debug, PartialEq)]
pub struct HyperbolicSplit {
    pub p: Transform<Rat>,
    /// `p·Q·pᵗ = H ⊕ … ⊕ H ⊕ Q₂`.
    pub q: SymMatrix,
    pub planes: usize,
    pub remainder: Signature,
}

/// Split one hyperbolic plane off a nondegenerate rational form, given an
/// isotropic `z`, staying inside the lattice `Zⁿ` of the current coordinates:
/// the remainder is spanned by a saturated, LLL-reduced basis of the integer
/// vectors orthogonal to the plane. Its discriminant grows at most by the
/// square of the content of `Q·z`, where the field-level split of
/// [`reduce_qf`] can grow it without bound.
pub fn split_plane_lattice(q: &SymMatrix, z: &[Rat]) -> Result<Congruent<Rat>> {
    let n = q.nrows();
    if z.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: z.len() });
    }
    if n < 2 || is_zero_vec(z) || !evaluate_form(q, z)?.is_zero() {
        return Err(Error::Precondition("need a nonzero isotropic vector and n ≥ 2".into()));
    }
    let l = Rat::from_integer(common_denominator(q));
    let zi = primitive_ints(z);
    let c: Vec<BigInt> =
        (0..n).map(|i| (0..n).map(|j| (&q[(i, j)] * &l).to_integer() * &zi[j]).sum()).collect();
    // w with c·w = gcd(c)
    let mut w = vec![BigInt::zero(); n];
    let mut g = BigInt::zero();
    for (j, cj) in c.iter().enumerate() {
        if cj.is_zero() {
            continue;
        }
        let e = g.extended_gcd(cj);
        for x in w.iter_mut() {
            *x *= &e.x;
        }
        w[j] = e.y;
        g = e.gcd;
    }
    if g.is_zero() {
        return Err(Error::Precondition("isotropic vector lies in the radical".into()));
    }
    let z = to_rat(&zi);
    let w = to_rat(&w);
    let qw: RatVec = (0..n).map(|i| (0..n).map(|j| &q[(i, j)] * &w[j]).sum()).collect();
    let cols = Matrix::from_fn(n, 2, |i, k| if k == 0 { Rat::from_integer(c[i].clone()) } else { qw[i].clone() });
    let kernel: Vec<RatVec> = integer_left_kernel(&cols).iter().map(|v| to_rat(v)).collect();
    if kernel.len() != n - 2 {
        return Err(Error::Precondition("form is degenerate on the plane".into()));
    }
    let mut rows = Vec::with_capacity(n);
    let beta = Rat::from_integer(g) / &l;
    let alpha = evaluate_form(q, &w)?;
    let shift = &alpha / (Rat::from_integer(2.into()) * &beta);
    rows.push(z.clone());
    rows.push(w.iter().zip(&z).map(|(a, b)| (a - &shift * b) / &beta).collect());
    if n > 2 {
        let k = Matrix::from_rows(kernel)?;
        let u = reduce_form(&congruence(&k, q)?).map(|x: &BigInt| Rat::from_integer(x.clone()));
        rows.extend(u.mul(&k)?.to_rows());
    }
    let p = Matrix::from_rows(rows)?;
    let out = congruence(&p, q)?;
    if !has_hyperbolic_prefix(&out, 1) {
        return Err(Error::Precondition("plane split did not produce H".into()));
    }
    Ok(Congruent { p, q: out })
}

/// Split hyperbolic planes off a balanced nondegenerate rational form until
/// the remainder has size 3 (odd `n`) or 4 (even `n`), each plane through an
/// oracle vector of the current remainder.
pub fn hyperbolic_chain(q: &SymMatrix, oracle: &Oracle) -> Result<HyperbolicSplit> {
    let n = q.nrows();
    if n < 5 {
        return Err(Error::Precondition(format!("hyperbolic chain needs n ≥ 5, got {n}")));
    }
    let sig = inertia(q);
    if !sig.is_nondegenerate() {
        return Err(Error::Precondition("form is degenerate".into()));
    }
    if !sig.is_balanced() {
        return Err(Error::Precondition(format!("form with signature {sig} is not balanced")));
    }
    let mut p = Matrix::identity(n, ());
    let mut cur = q.clone();
    let mut i = 0;
    let mut k = 0;
    while n - i >= 5 {
        let block = cur.trailing(i);
        let z = oracle.find(&block)?;
        let red = split_plane_lattice(&block, &z)?;
        let c = red.p.embed_lower(n);
        let next = congruence(&c, &cur)?;
        p = c.mul(&p)?;
        i += 2;
        k += 1;
        let rem = inertia(&next.trailing(i));
        if rem.r + k != sig.r || rem.s + k != sig.s {
            return Err(Error::Precondition(format!("signature bookkeeping failed: remainder {rem} after {k} planes")));
        }
        cur = next;
    }
    if !has_hyperbolic_prefix(&cur, k) {
        return Err(Error::Precondition("hyperbolic shape not reached".into()));
    }
    let remainder = inertia(&cur.trailing(i));
    Ok(HyperbolicSplit { p, q: cur, planes: k, remainder })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::RealBall;
    use crate::exact::{det, int, int_vec, rat};

    fn sym(rows: &[&[i64]]) -> SymMatrix {
        Matrix::symmetric(rows.iter().map(|r| int_vec(r)).collect()).unwrap()
    }

    fn h() -> SymMatrix {
        sym(&[&[0, 1], &[1, 0]])
    }

    #[test]
    fn base_witt_examples() {
        let r = base_witt(&h(), &int_vec(&[1, 0])).unwrap();
        assert_eq!(r.p, Matrix::identity(2, ()));
        assert_eq!(r.q, h());
        let r = base_witt(&Matrix::diagonal(&int_vec(&[1, -1])), &int_vec(&[1, 1])).unwrap();
        assert_eq!(r.p, Matrix::from_rows(vec![int_vec(&[1, 1]), int_vec(&[0, 1])]).unwrap());
        assert_eq!(r.q, sym(&[&[0, -1], &[-1, -1]]));
        assert!(matches!(
            base_witt(&Matrix::identity(2, ()), &int_vec(&[1, 0])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn clear_first_row_examples() {
        let r = clear_first_row(&sym(&[&[0, 2], &[2, 7]])).unwrap();
        assert_eq!(r.q.row(0), &int_vec(&[0, 1])[..]);
        assert_eq!(r.p[(0, 0)], rat(1, 2));
        let r = clear_first_row(&sym(&[&[0, 1, 3], &[1, 0, 0], &[3, 0, 5]])).unwrap();
        assert_eq!(r.p[(2, 1)], int(-3));
        assert_eq!(r.q.row(0), &int_vec(&[0, 1, 0])[..]);
        let q = sym(&[&[0, 1, 0], &[1, 4, 2], &[0, 2, 1]]);
        assert_eq!(clear_first_row(&q).unwrap().p, Matrix::identity(3, ()));
    }

    #[test]
    fn split_h_examples() {
        assert_eq!(split_h(&h()).unwrap().q, h());
        assert_eq!(split_h(&sym(&[&[0, 1], &[1, 3]])).unwrap().q, h());
        let q = sym(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]);
        assert_eq!(split_h(&q).unwrap().q, q);
        let q = sym(&[&[0, 1, 0, 0], &[1, 3, 2, -1], &[0, 2, 1, 0], &[0, -1, 0, 2]]);
        let r = split_h(&q).unwrap();
        assert!(has_hyperbolic_prefix(&r.q, 1));
        assert_eq!(congruence(&r.p, &q).unwrap(), r.q);
    }

    #[test]
    fn reduce_qf_examples() {
        let q = Matrix::diagonal(&int_vec(&[1, -1, 5]));
        let r = reduce_qf(&q, &int_vec(&[1, 1, 0])).unwrap();
        assert!(has_hyperbolic_prefix(&r.q, 1));
        let ratio = &r.q[(2, 2)] / int(5);
        let s = ratio.numer() * ratio.denom();
        assert_eq!(num_integer::Roots::sqrt(&s).pow(2), s);
        assert_eq!(det(&r.q), det(&r.p).pow(2) * det(&q));
        let q = h().direct_sum(&Matrix::identity(2, ()));
        assert_eq!(reduce_qf(&q, &int_vec(&[1, 0, 0, 0])).unwrap().q, q);
        assert!(reduce_qf(&q, &int_vec(&[0, 0, 1, 0])).is_err());
    }

    #[test]
    fn mordell3_examples() {
        let r = mordell3(&sym(&[&[0, 0, 2], &[0, 1, 0], &[2, 0, 1]])).unwrap();
        assert_eq!(r.q.row(0), &int_vec(&[0, 0, 1])[..]);
        assert_eq!(r.p[(2, 2)], rat(1, 2));
        let r = mordell3(&sym(&[&[0, 3, 1], &[3, 0, 0], &[1, 0, 0]])).unwrap();
        assert_eq!(r.p[(1, 2)], int(-3));
        assert_eq!(r.q.row(0), &int_vec(&[0, 0, 1])[..]);
        for i in 0..3 {
            for j in 0..2 {
                assert_eq!(r.p[(i, j)], if i == j { int(1) } else { int(0) });
            }
        }
        let q = sym(&[&[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 2, 0], &[0, 0, 0, 1]]);
        assert_eq!(mordell3(&q).unwrap().p, Matrix::identity(4, ()));
    }

    #[test]
    fn double_witt_examples() {
        let q0 = h().direct_sum(&Matrix::identity(1, ()));
        let q1 = sym(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let z = int_vec(&[1, 0, 0]);
        let r = double_witt(&q0, &q1, &z).unwrap();
        assert_eq!(r.p, Matrix::identity(3, ()));
        // permuting coordinates 2 and 3 of Q1 makes it equal to Q0: the pencil
        // is not smooth and z is singular
        let mut q1p = q1.clone();
        q1p.swap_sym(1, 2);
        assert!(matches!(double_witt(&q0, &q1p, &z), Err(Error::Hypothesis(_))));
        // first row of Q1 supported on coordinate 4: the transposition fires
        let q0 = h().direct_sum(&Matrix::diagonal(&int_vec(&[1, -1])));
        let q1 = sym(&[&[0, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 1]]);
        let r = double_witt(&q0, &q1, &int_vec(&[1, 0, 0, 0])).unwrap();
        assert_eq!(r.p.row(2), &int_vec(&[0, 0, 0, 1])[..]);
        assert_eq!(r.q0.row(0), &int_vec(&[0, 1, 0, 0])[..]);
        assert_eq!(r.q1.row(0), &int_vec(&[0, 0, 1, 0])[..]);
    }

    #[test]
    fn double_witt_four_variables() {
        // q0 = 2x₁x₂ + x₃² − x₄², q1 = 2x₁x₃ + x₂² + 2x₂x₄ − x₄², z = e₁
        let q0 = sym(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]);
        let q1 = sym(&[&[0, 0, 1, 0], &[0, 1, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, -1]]);
        let z = int_vec(&[2, 0, 0, 0]);
        let r = double_witt(&q0, &q1, &z).unwrap();
        assert_eq!(r.q0.row(0), &int_vec(&[0, 1, 0, 0])[..]);
        assert_eq!(r.q1.row(0), &int_vec(&[0, 0, 1, 0])[..]);
        assert_eq!(congruence(&r.p, &q0).unwrap(), r.q0);
        assert_eq!(congruence(&r.p, &q1).unwrap(), r.q1);
    }

    #[test]
    fn ball_reduction_keeps_structural_zeros() {
        let q = Matrix::diagonal(&int_vec(&[1, -2, 3, 1]));
        let s2 = RealBall::from_i64(2, 128).sqrt().unwrap();
        let one = RealBall::from_i64(1, 128);
        let zero = RealBall::exact_zero(128);
        // (√2, 1, 0, 0) is isotropic for x² − 2y² + …
        let y = vec![s2, one, zero.clone(), zero];
        let qb = q.map(|x| RealBall::from_rat_prec(x, 128));
        let r = reduce_qf(&qb, &y).unwrap();
        for (i, j) in [(0, 0), (1, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
            assert!(r.q[(i, j)].is_exact_zero(), "({i},{j}) {:?}", r.q[(i, j)]);
        }
        assert!(r.q[(0, 1)].contains_rat(&int(1)) && r.q[(0, 1)].is_exact());
    }

    #[test]
    fn chain_shapes() {
        let oracle = Oracle::default();
        let q = Matrix::diagonal(&int_vec(&[1, 1, 1, -1, -1]));
        let s = hyperbolic_chain(&q, &oracle).unwrap();
        assert_eq!(s.planes, 1);
        assert_eq!(s.remainder, Signature { r: 2, s: 1, n: 3 });
        assert_eq!(congruence(&s.p, &q).unwrap(), s.q);
        let q = Matrix::diagonal(&int_vec(&[1, 2, 3, -1, -5, -7]));
        let s = hyperbolic_chain(&q, &oracle).unwrap();
        assert_eq!((s.planes, s.remainder), (1, Signature { r: 2, s: 2, n: 4 }));
        let d: Vec<i64> = (1..=13).map(|i| if i <= 7 { i } else { -(i - 5) }).collect();
        let q = Matrix::diagonal(&int_vec(&d));
        let s = hyperbolic_chain(&q, &oracle).unwrap();
        assert_eq!((s.planes, s.remainder), (5, Signature { r: 2, s: 1, n: 3 }));
        assert!(has_hyperbolic_prefix(&s.q, 5));
        assert_eq!(congruence(&s.p, &q).unwrap(), s.q);
        assert!(hyperbolic_chain(&Matrix::diagonal(&int_vec(&[1, 1, 1, 1, -1])), &oracle).is_err());
    }

    #[test]
    fn lattice_plane_split() {
        // x1² − x2² + 6·x3² − x4²: (1, 1, 0, 0) is isotropic, Q·z = (1, −1, 0, 0)
        let q = Matrix::diagonal(&int_vec(&[1, -1, 6, -1]));
        let r = split_plane_lattice(&q, &int_vec(&[1, 1, 0, 0])).unwrap();
        assert!(has_hyperbolic_prefix(&r.q, 1));
        assert_eq!(congruence(&r.p, &q).unwrap(), r.q);
        // the unimodular plane leaves the integral complement with det 6
        assert_eq!(num_traits::Signed::abs(&det(&r.q.trailing(2))), int(6));
        assert!(r.p.trailing(2).entries().iter().all(|x| x.is_integer()));
        assert!(split_plane_lattice(&q, &int_vec(&[1, 0, 0, 0])).is_err());
    }
}
