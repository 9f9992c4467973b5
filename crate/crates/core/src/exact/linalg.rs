use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::poly::Poly;
use super::{integral_multiple, primitive, Rat, RatVec, SymMatrix};
use crate::error::{Error, Result};

/// Inertia `[r, s]` of a real symmetric matrix of side `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub r: usize,
    pub s: usize,
    pub n: usize,
}

impl Signature {
    pub fn rank(&self) -> usize {
        self.r + self.s
    }
    pub fn is_nondegenerate(&self) -> bool {
        self.r + self.s == self.n
    }
    /// `r − s`.
    pub fn d(&self) -> i64 {
        self.r as i64 - self.s as i64
    }
    pub fn is_balanced(&self) -> bool {
        self.d().abs() <= 1
    }
    pub fn is_positive_definite(&self) -> bool {
        self.r == self.n
    }
    pub fn is_negative_definite(&self) -> bool {
        self.s == self.n
    }
    pub fn is_definite(&self) -> bool {
        self.n > 0 && (self.is_positive_definite() || self.is_negative_definite())
    }
    pub fn is_indefinite(&self) -> bool {
        self.r > 0 && self.s > 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.r, self.s)
    }
}

pub fn identity(n: usize) -> SymMatrix {
    Matrix::identity(n, ())
}

/// Determinant by fraction-free (Bareiss) elimination on an integer multiple.
pub fn det(m: &Matrix<Rat>) -> Rat {
    let n = m.nrows();
    if n == 0 {
        return Rat::one();
    }
    // scale each row to integers
    let mut scale = Rat::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let l = row.iter().fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
        scale *= Rat::from_integer(l.clone());
        a.push(row.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect());
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Rat::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = Rat::from_integer(a[n - 1][n - 1].clone()) / scale;
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Exact inertia by symmetric elimination: diagonal pivots when one is
/// available, a 2×2 hyperbolic pivot when the remaining diagonal vanishes.
pub fn inertia(q: &SymMatrix) -> Signature {
    let n = q.nrows();
    let mut a: Vec<Vec<Rat>> = integral_multiple(q)
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(Rat::from_integer).collect())
        .collect();
    let (mut r, mut s) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // diagonal pivot, smallest magnitude numerator first keeps entries small
        let diag = active
            .iter()
            .copied()
            .filter(|&i| !a[i][i].is_zero())
            .min_by(|&x, &y| a[x][x].abs().cmp(&a[y][y].abs()));
        if let Some(p) = diag {
            let piv = a[p][p].clone();
            if piv.is_positive() {
                r += 1;
            } else {
                s += 1;
            }
            active.retain(|&i| i != p);
            let col: Vec<Rat> = active.iter().map(|&i| a[i][p].clone()).collect();
            for (ii, &i) in active.iter().enumerate() {
                if col[ii].is_zero() {
                    continue;
                }
                let f = &col[ii] / &piv;
                for (jj, &j) in active.iter().enumerate() {
                    if col[jj].is_zero() {
                        continue;
                    }
                    let v = &a[i][j] - &f * &col[jj];
                    a[i][j] = v;
                }
            }
            continue;
        }
        // all remaining diagonal entries vanish
        let off = active.iter().enumerate().find_map(|(ii, &i)| {
            active[ii + 1..].iter().copied().find(|&j| !a[i][j].is_zero()).map(|j| (i, j))
        });
        let Some((p, q2)) = off else {
            break; // remaining block is zero
        };
        // block [[0,b],[b,0]] has signature [1,1]
        r += 1;
        s += 1;
        let b = a[p][q2].clone();
        active.retain(|&i| i != p && i != q2);
        // Schur complement: A - [c_p c_q] B^{-1} [c_p c_q]^t with B^{-1} = [[0,1/b],[1/b,0]]
        let cp: Vec<Rat> = active.iter().map(|&i| a[i][p].clone()).collect();
        let cq: Vec<Rat> = active.iter().map(|&i| a[i][q2].clone()).collect();
        for (ii, &i) in active.iter().enumerate() {
            for (jj, &j) in active.iter().enumerate() {
                let corr = (&cp[ii] * &cq[jj] + &cq[ii] * &cp[jj]) / &b;
                if !corr.is_zero() {
                    let v = &a[i][j] - corr;
                    a[i][j] = v;
                }
            }
        }
    }
    Signature { r, s, n }
}

/// Row-reduced echelon form in place; returns pivot columns.
fn rref(a: &mut [Vec<Rat>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rat::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..a[i].len() {
                    let v = &a[i][j] - &f * &a[r][j];
                    a[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix<Rat>) -> usize {
    let mut a = m.to_rows();
    rref(&mut a, m.ncols()).len()
}

/// Basis of `{v : v·M = 0}`, each vector primitive integral.
pub fn left_kernel(m: &Matrix<Rat>) -> Vec<RatVec> {
    // v·M = 0  <=>  Mᵗ·vᵗ = 0
    let mt = m.transpose();
    let cols = mt.ncols();
    let mut a = mt.to_rows();
    let pivots = rref(&mut a, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            primitive(&v)
        })
        .collect()
}

/// Generator of the one-dimensional left kernel of `M`.
pub fn kernel_vector(m: &Matrix<Rat>) -> Result<RatVec> {
    let k = left_kernel(m);
    match k.len() {
        0 => Err(Error::Invertible),
        1 => Ok(k.into_iter().next().unwrap()),
        d => Err(Error::KernelTooLarge(d)),
    }
}

pub fn inverse(m: &Matrix<Rat>) -> Result<Matrix<Rat>> {
    let n = m.nrows();
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut a, n);
    if pivots.len() < n {
        return Err(Error::Precondition("singular matrix".into()));
    }
    Matrix::from_rows(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `Δ(λ) = det(λ·Q0 + Q1)` by exact interpolation at `λ = 0, 1, …, n`.
pub fn pencil_det_poly(q0: &SymMatrix, q1: &SymMatrix) -> Result<Poly> {
    let n = q0.nrows();
    if q1.nrows() != n {
        return Err(Error::DimensionMismatch { expected: n, found: q1.nrows() });
    }
    let pts: Vec<(Rat, Rat)> = (0..=n as i64)
        .map(|t| {
            let l = Rat::from_integer(t.into());
            let m = q0.scale(&l).add(q1).expect("same shape");
            (l, det(&m))
        })
        .collect();
    Ok(Poly::interpolate(&pts))
}
