use super::complex::ComplexBall;
use crate::error::{Error, Result};
use crate::exact::SymMatrix;

fn pencil_at(lam: &ComplexBall, q0: &SymMatrix, q1: &SymMatrix) -> Vec<Vec<ComplexBall>> {
    let n = q0.nrows();
    let p = lam.prec();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| lam.mul(&ComplexBall::from_rat(&q0[(i, j)], p)).add(&ComplexBall::from_rat(&q1[(i, j)], p)))
                .collect()
        })
        .collect()
}

/// Approximate null vector by complete pivoting on midpoints.
fn approx_null(a: &[Vec<ComplexBall>]) -> Vec<f64> {
    let n = a.len();
    let mut m: Vec<Vec<ComplexBall>> = a.iter().map(|r| r.iter().map(|x| x.midpoint()).collect()).collect();
    let mut colp: Vec<usize> = (0..n).collect();
    for k in 0..n.saturating_sub(1) {
        let mut best = (k, k, -1.0);
        for (i, row) in m.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                let v = x.approx_abs();
                if v > best.2 {
                    best = (i, j, v);
                }
            }
        }
        let (pi, pj, pv) = best;
        if pv <= 0.0 {
            break;
        }
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        colp.swap(k, pj);
        for i in k + 1..n {
            let Ok(f) = m[i][k].div(&m[k][k]) else { continue };
            let f = f.midpoint();
            for j in k..n {
                let v = m[i][j].sub(&f.mul(&m[k][j])).midpoint();
                m[i][j] = v;
            }
        }
    }
    // back substitution with the last permuted unknown set to 1
    let p = a.first().map_or(64, |r| r[0].prec());
    let mut x = vec![ComplexBall::zero(p); n];
    x[n - 1] = ComplexBall::one(p);
    for k in (0..n.saturating_sub(1)).rev() {
        let mut s = ComplexBall::zero(p);
        for j in k + 1..n {
            s = s.add(&m[k][j].mul(&x[j])).midpoint();
        }
        x[k] = match s.neg().div(&m[k][k]) {
            Ok(v) => v.midpoint(),
            Err(_) => ComplexBall::zero(p),
        };
    }
    let mut out = vec![0.0; n];
    for (k, &c) in colp.iter().enumerate() {
        out[c] = x[k].approx_abs();
    }
    out
}

/// Generator of the left kernel of `lam·Q0 + Q1` for `lam` enclosing a simple
/// root of the pencil determinant. The entry of largest modulus is exactly 1;
/// the others are certified by elimination with certified nonzero pivots.
///
/// For a real `lam` (exact zero imaginary part) the result has exact zero
/// imaginary parts.
pub fn ball_kernel(lam: &ComplexBall, q0: &SymMatrix, q1: &SymMatrix) -> Result<Vec<ComplexBall>> {
    let n = q0.nrows();
    let prec = lam.prec();
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    let a = pencil_at(lam, q0, q1);
    if n == 1 {
        return Ok(vec![ComplexBall::one(prec)]);
    }
    let approx = approx_null(&a);
    let k = (0..n)
        .max_by(|&x, &y| approx[x].partial_cmp(&approx[y]).unwrap_or(std::cmp::Ordering::Equal))
        .unwrap_or(0);
    // M symmetric: v·M = 0 iff M·vᵗ = 0. Unknowns v_i (i ≠ k), equations j ≠ k.
    let idx: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    let mut sys: Vec<Vec<ComplexBall>> = idx
        .iter()
        .map(|&j| {
            let mut row: Vec<ComplexBall> = idx.iter().map(|&i| a[j][i].clone()).collect();
            row.push(a[j][k].neg());
            row
        })
        .collect();
    let m = idx.len();
    for c in 0..m {
        let piv = (c..m)
            .filter(|&r| sys[r][c].is_certified_nonzero())
            .max_by(|&x, &y| {
                sys[x][c].approx_abs().partial_cmp(&sys[y][c].approx_abs()).unwrap_or(std::cmp::Ordering::Equal)
            })
            .ok_or(Error::Uncertain(prec))?;
        sys.swap(c, piv);
        for r in c + 1..m {
            if sys[r][c].is_exact_zero() {
                continue;
            }
            let f = sys[r][c].div(&sys[c][c])?;
            for j in c..=m {
                let v = sys[r][j].sub(&f.mul(&sys[c][j]));
                sys[r][j] = v;
            }
        }
    }
    let mut sol = vec![ComplexBall::zero(prec); m];
    for c in (0..m).rev() {
        let mut s = sys[c][m].clone();
        for j in c + 1..m {
            s = s.sub(&sys[c][j].mul(&sol[j]));
        }
        sol[c] = s.div(&sys[c][c])?;
    }
    let mut v = vec![ComplexBall::zero(prec); n];
    v[k] = ComplexBall::one(prec);
    for (t, &i) in idx.iter().enumerate() {
        v[i] = sol[t].clone();
    }
    Ok(v)
}
