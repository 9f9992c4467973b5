//! Independent exact references for the integration and acceptance tests.
//! Nothing here calls into the library's linear algebra.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn rows_of(m: &quadpair::SymMatrix) -> Vec<Vec<Q>> {
    m.to_rows()
}

pub fn from_rows(rows: Vec<Vec<Q>>) -> quadpair::SymMatrix {
    quadpair::exact::Matrix::symmetric(rows).expect("symmetric")
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<Vec<Q>> {
    let mut m = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let v = q(rng.gen_range(-bound..=bound));
            m[i][j] = v.clone();
            m[j][i] = v;
        }
    }
    m
}

/// Determinant by fraction-based Gaussian elimination with row swaps.
pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let v = &a[c][k] * &f;
                a[r][k] -= v;
            }
        }
    }
    d
}

/// Characteristic polynomial coefficients of `det(xI − A)`, highest degree
/// first, by Faddeev–LeVerrier on an integer matrix (every division by `k`
/// is exact).
pub fn char_poly_int(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mul = |x: &[Vec<BigInt>], y: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &x[i][k] * &y[k][j]).sum()).collect()).collect()
    };
    let mut c = vec![BigInt::one()];
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{k−1}·I
        let mut mk = mul(a, &m);
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &c[k - 1];
        }
        let am = mul(a, &mk);
        let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        c.push(-tr / BigInt::from(k));
        m = mk;
    }
    c
}

/// Positive integer multiple of a rational matrix.
pub fn clear_denominators(a: &[Vec<Q>]) -> Vec<Vec<BigInt>> {
    let mut l = BigInt::one();
    for x in a.iter().flatten() {
        l = num_integer::Integer::lcm(&l, x.denom());
    }
    a.iter().map(|r| r.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect()).collect()
}

fn sign_changes(c: &[BigInt]) -> usize {
    let s: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    s.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(positive, negative)` eigenvalue counts of a real symmetric matrix: the
/// characteristic polynomial has only real roots, so Descartes' rule of
/// signs is exact.
pub fn inertia(a: &[Vec<Q>]) -> (usize, usize) {
    let c = char_poly_int(&clear_denominators(a));
    let n = a.len();
    let pos = sign_changes(&c);
    // p(−x): coefficient of x^(n−i) picks up (−1)^(n−i)
    let neg_coeffs: Vec<BigInt> =
        c.iter().enumerate().map(|(i, x)| if (n - i) % 2 == 1 { -x.clone() } else { x.clone() }).collect();
    (pos, sign_changes(&neg_coeffs))
}

pub fn member(l: &Q, q0: &[Vec<Q>], q1: &[Vec<Q>]) -> Vec<Vec<Q>> {
    q0.iter().zip(q1).map(|(r0, r1)| r0.iter().zip(r1).map(|(a, b)| l * a + b).collect()).collect()
}

pub fn form(m: &[Vec<Q>], x: &[Q]) -> Q {
    let mut s = Q::zero();
    for i in 0..x.len() {
        for j in 0..x.len() {
            s += &m[i][j] * &x[i] * &x[j];
        }
    }
    s
}

pub fn is_definite(a: &[Vec<Q>]) -> bool {
    let (r, s) = inertia(a);
    r == a.len() || s == a.len()
}

pub fn mediant(a: &Q, b: &Q) -> Q {
    Q::new(a.numer() + b.numer(), a.denom() + b.denom())
}

/// Sylvester resultant of two binary quadratic forms `a x² + 2b xy + c y²`.
pub fn binary_resultant(f: &[Vec<Q>], g: &[Vec<Q>]) -> Q {
    let two = q(2);
    let (a1, b1, c1) = (f[0][0].clone(), &two * &f[0][1], f[1][1].clone());
    let (a2, b2, c2) = (g[0][0].clone(), &two * &g[0][1], g[1][1].clone());
    let z = Q::zero();
    let s = vec![
        vec![a1.clone(), b1.clone(), c1.clone(), z.clone()],
        vec![z.clone(), a1, b1, c1],
        vec![a2.clone(), b2.clone(), c2.clone(), z.clone()],
        vec![z, a2, b2, c2],
    ];
    det(&s)
}

/// Reference real solvability of `q0 = q1 = 0` from exact inertia sampled
/// in every segment cut out by the isolated roots of `Δ`, plus `±(a+1)`
/// with `a` the Cauchy bound. For `n = 2` the binary forms must share a
/// real linear factor instead.
pub fn brute_force_real_solvable(q0: &[Vec<Q>], q1: &[Vec<Q>], roots: &[(Q, Q)], cauchy: &Q) -> bool {
    let n = q0.len();
    if n == 2 {
        if !binary_resultant(q0, q1).is_zero() {
            return false;
        }
        // a common root; it is real unless both forms are multiples of one
        // definite form
        let f = [&q0[0][0], &q0[0][1], &q0[1][1]];
        let g = [&q1[0][0], &q1[0][1], &q1[1][1]];
        let proportional =
            [(0, 1), (0, 2), (1, 2)].iter().all(|&(i, j)| (f[i] * g[j] - f[j] * g[i]).is_zero());
        return !proportional || !det(q0).is_positive();
    }
    let mut samples = vec![-(cauchy + Q::one()), cauchy + Q::one()];
    for w in roots.windows(2) {
        samples.push(mediant(&w[0].1, &w[1].0));
    }
    !samples.iter().any(|l| is_definite(&member(l, q0, q1)))
}

pub fn parse_q(s: &str) -> Q {
    s.parse().expect("rational")
}
