//! Integer lattice utilities: LLL reduction of a positive definite Gram
//! matrix, saturated integer kernels, and small bases of rational subspaces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{common_denominator, Matrix, Rat, RatVec};

pub type IntVec = Vec<BigInt>;

fn round(x: &Rat) -> BigInt {
    // nearest integer, ties toward +inf
    let two = BigInt::from(2);
    (x.numer() * &two + x.denom()).div_floor(&(x.denom() * two))
}

/// LLL reduction (δ = 3/4) of the lattice with positive definite Gram matrix
/// `g`. Returns a unimodular `U` such that `U·G·Uᵗ` is reduced.
pub fn lll_gram(g: &Matrix<Rat>) -> Matrix<BigInt> {
    let n = g.nrows();
    let mut h: Vec<IntVec> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    if n <= 1 {
        return Matrix::from_rows(h).unwrap_or_else(|_| Matrix::from_fn(0, 0, |_, _| BigInt::zero()));
    }
    let mut b: Vec<Vec<Rat>> = g.to_rows();
    let mut mu: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n]; n];
    let mut bb: Vec<Rat> = vec![Rat::zero(); n];
    let delta = Rat::new(3.into(), 4.into());
    let half = Rat::new(1.into(), 2.into());
    bb[0] = b[0][0].clone();
    let (mut k, mut kmax) = (1usize, 0usize);

    let red = |k: usize, l: usize, b: &mut Vec<Vec<Rat>>, mu: &mut Vec<Vec<Rat>>, h: &mut Vec<IntVec>| {
        if mu[k][l].abs() <= half {
            return;
        }
        let q = round(&mu[k][l]);
        let qr = Rat::from_integer(q.clone());
        for j in 0..n {
            let v = &h[k][j] - &q * &h[l][j];
            h[k][j] = v;
        }
        let bkk = &b[k][k] - &qr * &b[k][l] * Rat::from_integer(2.into()) + &qr * &qr * &b[l][l];
        for i in 0..n {
            if i != k {
                let v = &b[k][i] - &qr * &b[l][i];
                b[k][i] = v.clone();
                b[i][k] = v;
            }
        }
        b[k][k] = bkk;
        mu[k][l] = &mu[k][l] - &qr;
        for i in 0..l {
            let v = &mu[k][i] - &qr * &mu[l][i];
            mu[k][i] = v;
        }
    };

    let mut guard = 0u64;
    while k < n {
        guard += 1;
        if guard > 1_000_000 {
            break;
        }
        if k > kmax {
            kmax = k;
            for j in 0..k {
                let mut s = b[k][j].clone();
                for i in 0..j {
                    s -= &mu[j][i] * &mu[k][i] * &bb[i];
                }
                mu[k][j] = if bb[j].is_zero() { Rat::zero() } else { s / &bb[j] };
            }
            let mut s = b[k][k].clone();
            for j in 0..k {
                s -= &mu[k][j] * &mu[k][j] * &bb[j];
            }
            bb[k] = s;
        }
        red(k, k - 1, &mut b, &mut mu, &mut h);
        if bb[k] < (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &bb[k - 1] {
            // swap k and k-1
            h.swap(k, k - 1);
            b.swap(k, k - 1);
            for row in b.iter_mut() {
                row.swap(k, k - 1);
            }
            for j in 0..k - 1 {
                let t = mu[k][j].clone();
                mu[k][j] = mu[k - 1][j].clone();
                mu[k - 1][j] = t;
            }
            let m = mu[k][k - 1].clone();
            let big = &bb[k] + &m * &m * &bb[k - 1];
            if big.is_zero() {
                // degenerate input; stop rather than divide by zero
                break;
            }
            mu[k][k - 1] = &m * &bb[k - 1] / &big;
            bb[k] = &bb[k - 1] * &bb[k] / &big;
            bb[k - 1] = big;
            for i in k + 1..=kmax {
                let t = mu[i][k].clone();
                mu[i][k] = &mu[i][k - 1] - &m * &t;
                mu[i][k - 1] = t + &mu[k][k - 1] * &mu[i][k];
            }
            k = (k - 1).max(1);
        } else {
            for l in (0..k.saturating_sub(1)).rev() {
                red(k, l, &mut b, &mut mu, &mut h);
            }
            k += 1;
        }
    }
    Matrix::from_rows(h).expect("square")
}

/// LLL-reduce a list of linearly independent integer vectors for the
/// Euclidean inner product.
pub fn lll_rows(rows: &[IntVec]) -> Vec<IntVec> {
    if rows.len() <= 1 {
        return rows.to_vec();
    }
    let g = Matrix::from_fn(rows.len(), rows.len(), |i, j| {
        Rat::from_integer(rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b).sum())
    });
    let u = lll_gram(&g);
    (0..rows.len())
        .map(|i| {
            let mut v = vec![BigInt::zero(); rows[0].len()];
            for (k, c) in u.row(i).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(&rows[k]) {
                    *x += c * y;
                }
            }
            v
        })
        .collect()
}

/// Saturated basis of the integer solutions of `x·C = 0`, LLL-reduced.
pub fn integer_left_kernel(c: &Matrix<Rat>) -> Vec<IntVec> {
    let m = c.nrows();
    let k = c.ncols();
    // clear denominators column-wise
    let mut a: Vec<IntVec> = (0..m).map(|_| Vec::with_capacity(k + m)).collect();
    for j in 0..k {
        let col = c.col(j);
        let l = col.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for (i, x) in col.iter().enumerate() {
            a[i].push((x * Rat::from_integer(l.clone())).to_integer());
        }
    }
    for (i, row) in a.iter_mut().enumerate() {
        row.extend((0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
    }
    let mut piv = 0;
    for col in 0..k {
        loop {
            let nz: Vec<usize> = (piv..m).filter(|&r| !a[r][col].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz.iter().min_by(|&&x, &&y| a[x][col].abs().cmp(&a[y][col].abs())).unwrap();
            a.swap(piv, best);
            let mut done = true;
            for r in piv + 1..m {
                if a[r][col].is_zero() {
                    continue;
                }
                let q = a[r][col].div_floor(&a[piv][col]);
                let (head, tail) = a.split_at_mut(r);
                for (x, y) in tail[0].iter_mut().zip(&head[piv]) {
                    *x -= &q * y;
                }
                if !a[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                piv += 1;
                break;
            }
        }
        if piv == m {
            break;
        }
    }
    let basis: Vec<IntVec> = a[piv..].iter().map(|r| r[k..].to_vec()).collect();
    lll_rows(&basis)
}

/// Saturated, LLL-reduced integer basis of `span_Q(rows) ∩ Zⁿ`.
pub fn saturate(rows: &[RatVec]) -> Vec<IntVec> {
    if rows.is_empty() {
        return Vec::new();
    }
    let n = rows[0].len();
    let m = Matrix::from_rows(rows.to_vec()).expect("rows of equal length");
    // columns spanning the orthogonal complement of the row space
    let comp = crate::exact::left_kernel(&m.transpose());
    if comp.is_empty() {
        return (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
    }
    let c = Matrix::from_fn(n, comp.len(), |i, j| comp[j][i].clone());
    integer_left_kernel(&c)
}

/// Outcome of [`symmetric_elimination`].
#[derive(Clone, Debug, PartialEq)]
pub enum Elimination {
    /// Combination of basis vectors on which the form vanishes, found as a
    /// zero diagonal entry of a Schur complement.
    ZeroPivot(RatVec),
    /// `P·Q·Pᵗ = diag(d)`.
    Diagonal { p: Matrix<Rat>, d: RatVec },
}

/// Symmetric Gaussian elimination with the smallest nonzero diagonal pivot.
pub fn symmetric_elimination(q: &Matrix<Rat>) -> Elimination {
    let n = q.nrows();
    let mut a = q.to_rows();
    let mut p: Vec<RatVec> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        if let Some(&z) = active.iter().find(|&&i| a[i][i].is_zero()) {
            return Elimination::ZeroPivot(p[z].clone());
        }
        let piv = *active.iter().min_by(|&&x, &&y| a[x][x].abs().cmp(&a[y][y].abs())).expect("nonempty");
        active.retain(|&i| i != piv);
        for &i in &active {
            if a[i][piv].is_zero() {
                continue;
            }
            let f = &a[i][piv] / &a[piv][piv];
            for &j in &active {
                let v = &a[i][j] - &f * &a[piv][j];
                a[i][j] = v;
            }
            a[i][piv] = Rat::zero();
            let prow = p[piv].clone();
            for (x, y) in p[i].iter_mut().zip(&prow) {
                *x -= &f * y;
            }
        }
    }
    let d = (0..n).map(|i| a[i][i].clone()).collect();
    Elimination::Diagonal { p: Matrix::from_rows(p).expect("square"), d }
}

/// Positive definite majorant `P⁻¹·|D|·P⁻ᵗ` of the form `P⁻¹·D·P⁻ᵗ`.
pub fn majorant(p: &Matrix<Rat>, d: &[Rat]) -> Matrix<Rat> {
    let pinv = crate::exact::inverse(p).expect("elimination transform is invertible");
    let absd = Matrix::diagonal(&d.iter().map(|x| x.abs()).collect::<Vec<_>>());
    crate::exact::congruence(&pinv, &absd).expect("square")
}

/// Unimodular `U` such that `U·Q·Uᵗ` has small entries: LLL with respect to
/// a majorant of `Q`. Identity when elimination meets a zero pivot.
pub fn reduce_form(q: &Matrix<Rat>) -> Matrix<BigInt> {
    let n = q.nrows();
    match symmetric_elimination(q) {
        Elimination::Diagonal { p, d } => lll_gram(&majorant(&p, &d)),
        Elimination::ZeroPivot(_) => {
            Matrix::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
        }
    }
}

pub fn to_rat(v: &[BigInt]) -> RatVec {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Integral matrix with the same rows as `m` scaled by a common positive factor.
pub fn scale_to_integer(m: &Matrix<Rat>) -> Matrix<BigInt> {
    let l = Rat::from_integer(common_denominator(m));
    m.map(|x| (x * &l).to_integer())
}
