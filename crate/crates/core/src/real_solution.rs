//! Nonzero real common zeros of two real quadratic forms.
//!
//! The pair is first brought to the simultaneous block shape (diagonal `Q0`
//! with `±1` entries, `Q1` with one `1×1` block per real root of `Δ` and one
//! trace-zero `2×2` block per conjugate pair), then solved in closed form on
//! at most four coordinates, depending on how many roots of `Δ` are real.
//!
//! All arithmetic is done with certified balls. Entries known to vanish or to
//! be `±1` by construction are set to exact values, so the block shape holds
//! exactly.

use std::cmp::Ordering;


use crate::ball::{ball_kernel, complex_roots, refine_root, to_balls, BallMatrix, BallVec, ComplexBall, PrecisionPolicy, RealBall};
use crate::error::{Error, Result};
use crate::exact::{congruence, evaluate_form, isolate_real_roots, Matrix, Rat, SymMatrix};
use crate::pencil::{check_hypothesis_h, is_real_solvable};
use crate::scalar::Scalar;

/// Bound on the enclosure radius of `q0(y)` and `q1(y)` accepted by
/// [`real_point`] and of the residuals accepted by [`simultaneous_block_diag`].
pub const RESIDUAL_LOG2: f64 = -40.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub start: usize,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct BlockDiagPair {
    pub p: BallMatrix,
    /// `P·Q0·Pᵗ`, diagonal with exact `±1` entries.
    pub d0: BallMatrix,
    /// `P·Q1·Pᵗ`, block diagonal.
    pub d1: BallMatrix,
    /// Number of real roots of `Δ`.
    pub m: usize,
    pub blocks: Vec<Block>,
    /// `log2` of the largest enclosure radius among the computed entries.
    pub residual_log2: f64,
}

impl BlockDiagPair {
    pub fn n(&self) -> usize {
        self.p.nrows()
    }

    /// Sign of the `i`-th diagonal entry of `D0`.
    pub fn d0_sign(&self, i: usize) -> i8 {
        if self.d0[(i, i)].sign() == Some(Ordering::Less) {
            -1
        } else {
            1
        }
    }
}

fn settle_entry(q: &mut BallMatrix, i: usize, j: usize, v: &RealBall) -> Result<()> {
    let mut x = q[(i, j)].clone();
    if !x.settle(v) {
        return Err(Error::Precondition(format!("entry ({}, {}) is {x:?}, expected {v:?}", i + 1, j + 1)));
    }
    q[(i, j)] = x.clone();
    q[(j, i)] = x;
    Ok(())
}

fn block_of(blocks: &[Block], i: usize) -> usize {
    blocks.iter().position(|b| i >= b.start && i < b.start + b.size).unwrap_or(usize::MAX)
}

/// Rows of a conformal rotation diagonalizing `[[a, b], [b, −a]]` to
/// `diag(+r, −r)·|u|²`: the first row spans the positive eigenspace.
fn conformal_rotation(a: &RealBall, b: &RealBall) -> Result<[[RealBall; 2]; 2]> {
    let r = a.square().add(&b.square()).sqrt()?;
    let u = if a.mid().is_negative() {
        [b.clone(), r.sub(a)]
    } else {
        [a.add(&r), b.clone()]
    };
    Ok([[u[0].clone(), u[1].clone()], [u[1].neg(), u[0].clone()]])
}

fn max_rad(m: &BallMatrix) -> f64 {
    crate::ball::max_rad_log2(m)
}

/// One attempt at working precision `prec`.
pub fn simultaneous_block_diag_at(q0: &SymMatrix, q1: &SymMatrix, prec: u32) -> Result<BlockDiagPair> {
    let rep = check_hypothesis_h(q0, q1)?;
    if let Some(f) = rep.failure {
        return Err(Error::Hypothesis(f));
    }
    let n = q0.nrows();
    let real = isolate_real_roots(&rep.delta)?;
    let m = real.len();
    let mut rows: Vec<Vec<RealBall>> = Vec::with_capacity(n);
    let mut blocks = Vec::with_capacity(n);
    for iv in &real {
        let lam = ComplexBall::real(refine_root(iv, prec).with_prec(prec));
        let v = ball_kernel(&lam, q0, q1)?;
        blocks.push(Block { start: rows.len(), size: 1 });
        rows.push(v.into_iter().map(|z| z.re).collect());
    }
    for lam in complex_roots(&rep.delta, m, prec)? {
        let v = ball_kernel(&lam, q0, q1)?;
        blocks.push(Block { start: rows.len(), size: 2 });
        rows.push(v.iter().map(|z| z.re.clone()).collect());
        rows.push(v.into_iter().map(|z| z.im).collect());
    }
    if rows.len() != n {
        return Err(Error::Uncertain(prec));
    }
    let b0 = to_balls(q0, prec);
    let b1 = to_balls(q1, prec);
    let mut p = Matrix::from_rows(rows)?;

    // Jacobi step on each 2×2 block of P·Q0·Pᵗ
    let q0p = congruence(&p, &b0)?;
    for blk in blocks.iter().filter(|b| b.size == 2) {
        let j = blk.start;
        let rot = conformal_rotation(&q0p[(j, j)], &q0p[(j, j + 1)])?;
        let (r0, r1) = (p.row(j).to_vec(), p.row(j + 1).to_vec());
        for (k, rr) in rot.iter().enumerate() {
            let row: Vec<RealBall> = r0.iter().zip(&r1).map(|(x, y)| rr[0].mul(x).add(&rr[1].mul(y))).collect();
            p.set_row(j + k, &row);
        }
    }

    // scale rows so that the diagonal of P·Q0·Pᵗ is ±1
    let q0pp = congruence(&p, &b0)?;
    for blk in &blocks {
        let d = &q0pp[(blk.start, blk.start)];
        d.sign_or_err()?;
        let s = d.abs().sqrt()?;
        for i in blk.start..blk.start + blk.size {
            let row: Vec<RealBall> = p.row(i).iter().map(|x| x.div(&s)).collect::<Result<_>>()?;
            p.set_row(i, &row);
        }
    }

    let mut d0 = congruence(&p, &b0)?;
    let mut d1 = congruence(&p, &b1)?;
    let residual_log2 = max_rad(&d0).max(max_rad(&d1));
    let zero = RealBall::exact_zero(prec);
    let one = RealBall::from_i64(1, prec);
    for i in 0..n {
        for j in i + 1..n {
            settle_entry(&mut d0, i, j, &zero)?;
            if block_of(&blocks, i) != block_of(&blocks, j) {
                settle_entry(&mut d1, i, j, &zero)?;
            }
        }
        let s = d0[(i, i)].sign_or_err()?;
        let target = if s == Ordering::Less { one.neg() } else { one.clone() };
        settle_entry(&mut d0, i, i, &target)?;
    }
    for blk in blocks.iter().filter(|b| b.size == 2) {
        let j = blk.start;
        if d0[(j, j)].sign() != Some(Ordering::Greater) || d0[(j + 1, j + 1)].sign() != Some(Ordering::Less) {
            return Err(Error::Precondition(format!("block at {} does not face diag(1, -1)", j + 1)));
        }
        let t = d1[(j, j)].neg();
        settle_entry(&mut d1, j + 1, j + 1, &t)?;
    }
    Ok(BlockDiagPair { p, d0, d1, m, blocks, residual_log2 })
}

/// Simultaneous block diagonalization, raising the precision until every
/// sign is decided and the residual radius is at most `2^-40`.
pub fn simultaneous_block_diag(q0: &SymMatrix, q1: &SymMatrix) -> Result<BlockDiagPair> {
    simultaneous_block_diag_with(q0, q1, &PrecisionPolicy::default())
}

pub fn simultaneous_block_diag_with(q0: &SymMatrix, q1: &SymMatrix, policy: &PrecisionPolicy) -> Result<BlockDiagPair> {
    policy.run(|prec| {
        let bd = simultaneous_block_diag_at(q0, q1, prec)?;
        if bd.residual_log2 > RESIDUAL_LOG2 {
            return Err(Error::Uncertain(prec));
        }
        Ok(bd)
    })
}

/// Common zero of `x² − y² + z² − w²` and
/// `a·x² − 2b·xy − a·y² + c·z² − 2d·zw − c·w²`.
pub fn solve_two_complex_blocks(a: &RealBall, b: &RealBall, c: &RealBall, d: &RealBall) -> Result<BallVec> {
    let _ = (a, c);
    let prec = b.prec().max(d.prec());
    let eb = b.sign_or_err()?;
    let ed = d.sign_or_err()?;
    if eb == Ordering::Equal || ed == Ordering::Equal {
        return Err(Error::Precondition("off-diagonal block entry is zero".into()));
    }
    let x1 = d.abs().div(&b.abs())?.sqrt()?;
    let one = RealBall::from_i64(1, prec);
    let z = if eb == ed { one.neg() } else { one.clone() };
    Ok(vec![x1.clone(), x1, z, one])
}

/// Common zero of `x² + y² − z²` and `λ₁·x² + a·y² − 2b·yz − a·z²`.
pub fn solve_mixed(lam1: &RealBall, a: &RealBall, b: &RealBall) -> Result<BallVec> {
    let prec = lam1.prec().max(a.prec()).max(b.prec());
    let one = RealBall::from_i64(1, prec);
    let t = a.sub(lam1);
    if t.is_exact_zero() {
        return Ok(vec![one.clone(), RealBall::exact_zero(prec), one]);
    }
    // roots of t·y² − 2b·y − t multiply to −1; take the one of modulus ≤ 1
    let s = b.square().add(&t.square()).sqrt()?;
    let y = if b.is_exact_zero() {
        t.neg().div(&s)?
    } else {
        let den = if b.mid().is_negative() { b.sub(&s) } else { b.add(&s) };
        t.neg().div(&den)?
    };
    let x = one.sub(&y.square()).sqrt()?;
    Ok(vec![x, y, one])
}

/// Coefficients of two diagonal forms `Σ aᵢxᵢ²` (`aᵢ = ±1`) and `Σ bᵢxᵢ²`.
#[derive(Clone, Debug)]
pub struct DiagonalPairView {
    pub a: Vec<i8>,
    pub b: Vec<RealBall>,
    /// Exact coefficients, used for comparisons when present.
    pub exact: Option<Vec<Rat>>,
}

/// Extremes of `b` over one sign class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Extremes {
    pub min: usize,
    pub max: usize,
}

impl DiagonalPairView {
    pub fn from_balls(a: Vec<i8>, b: Vec<RealBall>) -> Result<Self> {
        let v = DiagonalPairView { a, b, exact: None };
        v.check()?;
        Ok(v)
    }

    pub fn from_rationals(a: Vec<i8>, b: &[Rat], prec: u32) -> Result<Self> {
        let balls = b.iter().map(|x| RealBall::from_rat_prec(x, prec)).collect();
        let v = DiagonalPairView { a, b: balls, exact: Some(b.to_vec()) };
        v.check()?;
        Ok(v)
    }

    /// View of the diagonal blocks of a fully real [`BlockDiagPair`].
    pub fn from_block_diag(bd: &BlockDiagPair) -> Result<Self> {
        if bd.m != bd.n() {
            return Err(Error::Precondition("not every root of the pencil is real".into()));
        }
        let a = (0..bd.n()).map(|i| bd.d0_sign(i)).collect();
        let b = (0..bd.n()).map(|i| bd.d1[(i, i)].clone()).collect();
        DiagonalPairView::from_balls(a, b)
    }

    fn check(&self) -> Result<()> {
        if self.a.len() != self.b.len() {
            return Err(Error::DimensionMismatch { expected: self.a.len(), found: self.b.len() });
        }
        if self.a.iter().any(|&x| x != 1 && x != -1) {
            return Err(Error::Precondition("q0 coefficients must be ±1".into()));
        }
        Ok(())
    }

    fn flipped(&self) -> Self {
        DiagonalPairView { a: self.a.iter().map(|x| -x).collect(), ..self.clone() }
    }

    fn prec(&self) -> u32 {
        self.b.iter().map(|x| x.prec()).max().unwrap_or(64)
    }

    /// Sign of `bᵢ + bⱼ`.
    fn sum_sign(&self, i: usize, j: usize) -> Result<Ordering> {
        match &self.exact {
            Some(e) => Ok((&e[i] + &e[j]).cmp(&Rat::from_integer(0.into()))),
            None => self.b[i].add(&self.b[j]).sign_or_err(),
        }
    }

    /// Sign of `bᵢ − bⱼ`.
    fn diff_sign(&self, i: usize, j: usize) -> Result<Ordering> {
        match &self.exact {
            Some(e) => Ok(e[i].cmp(&e[j])),
            None => self.b[i].sub(&self.b[j]).sign_or_err(),
        }
    }

    fn class(&self, sign: i8) -> Vec<usize> {
        (0..self.a.len()).filter(|&i| self.a[i] == sign).collect()
    }

    fn extremes(&self, sign: i8) -> Result<Option<Extremes>> {
        let idx = self.class(sign);
        let Some(&first) = idx.first() else { return Ok(None) };
        let (mut lo, mut hi) = (first, first);
        for &i in &idx[1..] {
            if self.diff_sign(i, lo)? == Ordering::Less {
                lo = i;
            }
            if self.diff_sign(i, hi)? == Ordering::Greater {
                hi = i;
            }
        }
        Ok(Some(Extremes { min: lo, max: hi }))
    }

    /// `(m₊, M₊)` as indices into `b`, over `{i : aᵢ = +1}`.
    pub fn positive_extremes(&self) -> Result<Option<Extremes>> {
        self.extremes(1)
    }

    /// `(m₋, M₋)` over `{i : aᵢ = −1}`.
    pub fn negative_extremes(&self) -> Result<Option<Extremes>> {
        self.extremes(-1)
    }

    /// Some member `λ·q0 + q1` is positive definite: `−m₋ < m₊`.
    pub fn has_positive_definite_member(&self) -> Result<bool> {
        match (self.positive_extremes()?, self.negative_extremes()?) {
            (Some(p), Some(n)) => Ok(self.sum_sign(p.min, n.min)? == Ordering::Greater),
            // q0 itself is definite
            _ => Ok(true),
        }
    }

    /// Nonzero real common zero exists: `−m₋ ≥ m₊` and `−M₋ ≤ M₊`.
    pub fn is_real_solvable(&self) -> Result<bool> {
        match (self.positive_extremes()?, self.negative_extremes()?) {
            (Some(p), Some(n)) => {
                Ok(self.sum_sign(p.min, n.min)? != Ordering::Greater && self.sum_sign(p.max, n.max)? != Ordering::Less)
            }
            _ => Ok(false),
        }
    }
}

/// Common zero of two diagonal forms.
pub fn solve_all_real(view: &DiagonalPairView) -> Result<BallVec> {
    view.check()?;
    if !view.is_real_solvable()? {
        return Err(Error::Precondition("diagonal pair has no real common zero".into()));
    }
    let prec = view.prec();
    let mut v = view.clone();
    for _ in 0..2 {
        let (Some(pos), Some(_)) = (v.positive_extremes()?, v.negative_extremes()?) else { unreachable!() };
        let mut found = None;
        for k in v.class(-1) {
            if v.sum_sign(pos.min, k)? != Ordering::Greater && v.sum_sign(pos.max, k)? != Ordering::Less {
                found = Some(k);
                break;
            }
        }
        let Some(k) = found else {
            v = v.flipped();
            continue;
        };
        let mut w = vec![RealBall::exact_zero(prec); v.a.len()];
        let one = RealBall::from_i64(1, prec);
        if v.sum_sign(pos.min, k)? == Ordering::Equal {
            w[pos.min] = one.clone();
            w[k] = one;
        } else {
            let num = v.b[pos.max].add(&v.b[k]).neg();
            let den = v.b[pos.min].add(&v.b[k]);
            let xm = num.div(&den)?.sqrt()?;
            let xk = xm.square().add(&one).sqrt()?;
            w[pos.max] = one;
            w[pos.min] = xm;
            w[k] = xk;
        }
        return Ok(w);
    }
    Err(Error::Precondition("no admissible index after flipping q0".into()))
}

/// Solve on the block shape and pull back through `P`.
fn block_point(bd: &BlockDiagPair) -> Result<BallVec> {
    let n = bd.n();
    let m = bd.m;
    let prec = bd.p.ctx();
    let mut z = vec![RealBall::exact_zero(prec); n];
    if m == n {
        let w = solve_all_real(&DiagonalPairView::from_block_diag(bd)?)?;
        z = w;
    } else if m == 0 {
        if n < 4 {
            return Err(Error::Precondition(format!("all-complex case needs n ≥ 4, got {n}")));
        }
        let d1 = &bd.d1;
        let v = solve_two_complex_blocks(&d1[(0, 0)], &d1[(0, 1)].neg(), &d1[(2, 2)], &d1[(2, 3)].neg())?;
        z[..4].clone_from_slice(&v);
    } else {
        if n < 3 {
            return Err(Error::Precondition(format!("mixed case needs n ≥ 3, got {n}")));
        }
        let (i, j) = (m - 1, m);
        let d1 = &bd.d1;
        let lam = &d1[(i, i)];
        if bd.d0_sign(i) > 0 {
            let v = solve_mixed(lam, &d1[(j, j)], &d1[(j, j + 1)].neg())?;
            z[i] = v[0].clone();
            z[j] = v[1].clone();
            z[j + 1] = v[2].clone();
        } else {
            // −q0 = x² − y² + z²: exchange the roles of y and z
            let v = solve_mixed(lam, &d1[(j, j)].neg(), &d1[(j, j + 1)].neg())?;
            z[i] = v[0].clone();
            z[j + 1] = v[1].clone();
            z[j] = v[2].clone();
        }
    }
    bd.p.left_mul_vec(&z)
}

/// One attempt at working precision `prec`. The caller guarantees that a
/// real common zero exists.
pub fn real_point_at(q0: &SymMatrix, q1: &SymMatrix, prec: u32) -> Result<BallVec> {
    let bd = simultaneous_block_diag_at(q0, q1, prec)?;
    let y = block_point(&bd)?;
    for q in [q0, q1] {
        let v = evaluate_form(&to_balls(q, prec), &y)?;
        if !v.contains_zero() {
            return Err(Error::Precondition(format!("real point check failed: {v:?}")));
        }
    }
    Ok(y)
}

/// Nonzero real common zero of `q0` and `q1`, with both values enclosed in
/// balls of radius at most `2^-40`. Fails with [`Error::RealInsolvable`]
/// when some member of the pencil is definite.
pub fn real_point(q0: &SymMatrix, q1: &SymMatrix) -> Result<BallVec> {
    real_point_with(q0, q1, &PrecisionPolicy::default())
}

pub fn real_point_with(q0: &SymMatrix, q1: &SymMatrix, policy: &PrecisionPolicy) -> Result<BallVec> {
    let rep = is_real_solvable(q0, q1)?;
    if let Some(f) = rep.hypothesis_failure {
        return Err(Error::Hypothesis(f));
    }
    if let Some(w) = rep.definite_lambda {
        return Err(Error::RealInsolvable { witness: w });
    }
    policy.run(|prec| {
        let y = real_point_at(q0, q1, prec)?;
        for q in [q0, q1] {
            if evaluate_form(&to_balls(q, prec), &y)?.rad_log2() > RESIDUAL_LOG2 {
                return Err(Error::Uncertain(prec));
            }
        }
        Ok(y)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, int_vec, rat};

    const PREC: u32 = 128;

    fn b(x: i64) -> RealBall {
        RealBall::from_i64(x, PREC)
    }

    fn check_zero(q0: &SymMatrix, q1: &SymMatrix, y: &BallVec) {
        assert!(y.iter().any(|x| x.is_certified_nonzero()));
        for q in [q0, q1] {
            let v = evaluate_form(&to_balls(q, PREC.max(y[0].prec())), y).unwrap();
            assert!(v.contains_zero(), "{v:?}");
        }
    }

    fn diag_forms(a: &[i64], bb: &[i64]) -> (SymMatrix, SymMatrix) {
        (Matrix::diagonal(&int_vec(a)), Matrix::diagonal(&int_vec(bb)))
    }

    fn assert_shape(bd: &BlockDiagPair) {
        let n = bd.n();
        for i in 0..n {
            assert!(bd.d0[(i, i)].contains_rat(&int(bd.d0_sign(i) as i64)));
            assert!(bd.d0[(i, i)].is_exact());
            for j in 0..n {
                if i != j {
                    assert!(bd.d0[(i, j)].is_exact_zero());
                }
                if block_of(&bd.blocks, i) != block_of(&bd.blocks, j) {
                    assert!(bd.d1[(i, j)].is_exact_zero());
                }
            }
        }
        for blk in bd.blocks.iter().filter(|b| b.size == 2) {
            let j = blk.start;
            assert_eq!(bd.d1[(j + 1, j + 1)], bd.d1[(j, j)].neg());
            assert_eq!((bd.d0_sign(j), bd.d0_sign(j + 1)), (1, -1));
        }
        assert!(bd.residual_log2 <= RESIDUAL_LOG2);
    }

    #[test]
    fn block_diag_all_real() {
        let (q0, q1) = diag_forms(&[1, 1], &[1, 2]);
        let bd = simultaneous_block_diag(&q0, &q1).unwrap();
        assert_eq!(bd.m, 2);
        assert_shape(&bd);
        // roots −2 < −1, so the coordinate of b = 2 comes first
        assert!(bd.d1[(0, 0)].contains_rat(&int(2)));
        assert!(bd.d1[(1, 1)].contains_rat(&int(1)));
    }

    #[test]
    fn block_diag_complex_pair() {
        let q0 = Matrix::diagonal(&int_vec(&[1, -1]));
        let q1 = Matrix::symmetric(vec![int_vec(&[0, 1]), int_vec(&[1, 0])]).unwrap();
        let bd = simultaneous_block_diag(&q0, &q1).unwrap();
        assert_eq!(bd.m, 0);
        assert_eq!(bd.blocks, vec![Block { start: 0, size: 2 }]);
        assert_shape(&bd);
    }

    #[test]
    fn block_diag_mixed() {
        let q0 = Matrix::diagonal(&int_vec(&[1, 1, 1, -1]));
        let mut q1 = Matrix::diagonal(&int_vec(&[1, 2, 0, 0]));
        q1[(2, 3)] = int(1);
        q1[(3, 2)] = int(1);
        let bd = simultaneous_block_diag(&q0, &q1).unwrap();
        assert_eq!(bd.m, 2);
        assert_eq!(bd.blocks.iter().map(|b| b.size).collect::<Vec<_>>(), vec![1, 1, 2]);
        assert_shape(&bd);
    }

    #[test]
    fn block_diag_dense() {
        let q0 = Matrix::symmetric(vec![
            int_vec(&[2, 1, 0, 1, 0]),
            int_vec(&[1, -1, 2, 0, 0]),
            int_vec(&[0, 2, 1, 1, -1]),
            int_vec(&[1, 0, 1, -3, 2]),
            int_vec(&[0, 0, -1, 2, 1]),
        ])
        .unwrap();
        let q1 = Matrix::symmetric(vec![
            int_vec(&[1, 0, 2, 0, 1]),
            int_vec(&[0, 3, 1, -1, 0]),
            int_vec(&[2, 1, -2, 0, 1]),
            int_vec(&[0, -1, 0, 1, 2]),
            int_vec(&[1, 0, 1, 2, -1]),
        ])
        .unwrap();
        let bd = simultaneous_block_diag(&q0, &q1).unwrap();
        assert_shape(&bd);
        let c0 = congruence(&bd.p, &to_balls(&q0, bd.p.ctx())).unwrap();
        for (x, y) in c0.entries().iter().zip(bd.d0.entries()) {
            assert!(x.overlaps(y));
        }
    }

    #[test]
    fn hypothesis_violation() {
        let (q0, q1) = diag_forms(&[1, 1, -1], &[1, 1, 2]);
        assert!(matches!(simultaneous_block_diag(&q0, &q1), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn two_complex_blocks() {
        let q0 = Matrix::diagonal(&int_vec(&[1, -1, 1, -1]));
        let cases = [((3, 1, -2, 1), [1, 1, -1, 1]), ((0, 1, 5, 4), [2, 2, -1, 1]), ((1, -1, 1, 1), [1, 1, 1, 1])];
        for ((a, bb, c, d), want) in cases {
            let v = solve_two_complex_blocks(&b(a), &b(bb), &b(c), &b(d)).unwrap();
            for (x, w) in v.iter().zip(want) {
                assert!(x.contains_rat(&int(w)));
            }
            let mut q1 = Matrix::diagonal(&int_vec(&[a, -a, c, -c]));
            q1[(0, 1)] = int(-bb);
            q1[(1, 0)] = int(-bb);
            q1[(2, 3)] = int(-d);
            q1[(3, 2)] = int(-d);
            check_zero(&q0, &q1, &v);
        }
        assert!(solve_two_complex_blocks(&b(1), &b(0), &b(1), &b(1)).is_err());
    }

    #[test]
    fn mixed() {
        let v = solve_mixed(&b(2), &b(2), &b(7)).unwrap();
        assert!(v.iter().zip([1, 0, 1]).all(|(x, w)| x.contains_rat(&int(w)) && x.is_exact()));
        let v = solve_mixed(&b(0), &b(3), &b(4)).unwrap();
        assert!(v[1].contains_rat(&rat(-1, 3)));
        assert!(v[0].square().contains_rat(&rat(8, 9)));
        assert!(v[2].contains_rat(&int(1)));
        let v = solve_mixed(&b(0), &b(0), &b(1)).unwrap();
        assert!(v[0].contains_rat(&int(1)) && v[1].is_exact_zero());
        // b = 0 gives y = ±1
        let v = solve_mixed(&b(1), &b(3), &b(0)).unwrap();
        assert!(v[1].contains_rat(&int(-1)) && v[0].contains_zero());
    }

    #[test]
    fn all_real_examples() {
        let v = DiagonalPairView::from_rationals(vec![1, 1, -1], &int_vec(&[1, 2, -1]), PREC).unwrap();
        let w = solve_all_real(&v).unwrap();
        assert!(w.iter().zip([1, 0, 1]).all(|(x, e)| x.contains_rat(&int(e)) && x.is_exact()));

        let v = DiagonalPairView::from_rationals(vec![1, 1, -1], &int_vec(&[1, 3, -2]), PREC).unwrap();
        let w = solve_all_real(&v).unwrap();
        assert!(w[0].contains_rat(&int(1)) && w[1].contains_rat(&int(1)));
        assert!(w[2].square().contains_rat(&int(2)));
        let (q0, q1) = diag_forms(&[1, 1, -1], &[1, 3, -2]);
        check_zero(&q0, &q1, &w);
    }

    #[test]
    fn all_real_flip() {
        // a = (1, −1, −1), b = (0, 1, −3): with q0 the only candidate fails,
        // with −q0 the classes swap and k exists
        let a = vec![1, -1, -1];
        let bb = int_vec(&[0, 1, -3]);
        let v = DiagonalPairView::from_rationals(a.clone(), &bb, PREC).unwrap();
        assert!(v.is_real_solvable().unwrap());
        let w = solve_all_real(&v).unwrap();
        let q0 = Matrix::diagonal(&a.iter().map(|&x| int(x as i64)).collect::<Vec<_>>());
        let q1 = Matrix::diagonal(&bb);
        check_zero(&q0, &q1, &w);
    }

    #[test]
    fn all_real_refuses_insolvable() {
        let v = DiagonalPairView::from_rationals(vec![1, 1, -1], &int_vec(&[1, 2, 5]), PREC).unwrap();
        assert!(!v.is_real_solvable().unwrap());
        assert!(v.has_positive_definite_member().unwrap());
        assert!(matches!(solve_all_real(&v), Err(Error::Precondition(_))));
    }

    #[test]
    fn real_point_three_cases() {
        // all real
        let (q0, q1) = diag_forms(&[1, 1, 1, -1, -1], &[1, 2, 3, -4, 5]);
        let y = real_point(&q0, &q1).unwrap();
        check_zero(&q0, &q1, &y);
        // all complex: two hyperbolic-rotation blocks
        let q0 = Matrix::diagonal(&int_vec(&[1, -1, 1, -1]));
        let mut q1 = Matrix::diagonal(&int_vec(&[1, -1, 2, -2]));
        for (i, j, x) in [(0, 1, 1), (2, 3, 3)] {
            q1[(i, j)] = int(x);
            q1[(j, i)] = int(x);
        }
        let y = real_point(&q0, &q1).unwrap();
        check_zero(&q0, &q1, &y);
        // mixed, with both orientations of the real coordinate
        for s in [1, -1] {
            let q0 = Matrix::diagonal(&int_vec(&[1, s, 1, -1]));
            let mut q1 = Matrix::diagonal(&int_vec(&[3, -1, 1, -1]));
            q1[(2, 3)] = int(2);
            q1[(3, 2)] = int(2);
            let y = real_point(&q0, &q1).unwrap();
            check_zero(&q0, &q1, &y);
        }
    }

    #[test]
    fn real_point_insolvable() {
        let (q0, q1) = diag_forms(&[1, 1, -1], &[1, 2, 5]);
        assert!(matches!(real_point(&q0, &q1), Err(Error::RealInsolvable { .. })));
    }
}
