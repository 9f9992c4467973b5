//! Built-in isotropic vector search.
//!
//! Stages, each returning as soon as a vector is found:
//! zero diagonal entries and binary subforms with square discriminant,
//! symmetric elimination (a vanishing pivot is an isotropic vector),
//! LLL reduction of a positive definite majorant, restriction to an
//! indefinite subspace of dimension 5, and finally enumeration of max-norm
//! shells in which the last coordinate is solved for exactly.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{normalize, verify_isotropic, OracleError};
use crate::exact::{inertia, integral_multiple, primitive_ints, Matrix, Rat, RatVec, SymMatrix};
use crate::lattice::{lll_gram, majorant, symmetric_elimination, Elimination, IntVec};

/// Default number of lattice points the enumeration may evaluate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Dimension of the subspace searched when the form is larger.
const SUBSPACE_DIM: usize = 5;

/// Prefix searches get `budget / PREFIX_SHARE` points each.
const PREFIX_SHARE: u64 = 20;

/// Lattice with integral Gram matrix, given by its basis in the coordinates
/// of the input form.
#[derive(Clone, Debug)]
struct Lat {
    gram: Vec<IntVec>,
    basis: Vec<IntVec>,
}

impl Lat {
    fn dim(&self) -> usize {
        self.gram.len()
    }

    fn combine(&self, c: &[BigInt]) -> IntVec {
        let n = self.basis.first().map_or(0, |b| b.len());
        let mut v = vec![BigInt::zero(); n];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                *x += ci * y;
            }
        }
        v
    }

    /// Lattice spanned by the rows of `u·basis`.
    fn transform(&self, u: &[IntVec]) -> Lat {
        let basis: Vec<IntVec> = u.iter().map(|r| self.combine(r)).collect();
        let d = u.len();
        let mut gram = vec![vec![BigInt::zero(); d]; d];
        let gu: Vec<IntVec> = u
            .iter()
            .map(|r| {
                (0..self.dim())
                    .map(|j| r.iter().zip(&self.gram).map(|(a, row)| a * &row[j]).sum())
                    .collect()
            })
            .collect();
        for i in 0..d {
            for j in i..d {
                let v: BigInt = gu[i].iter().zip(&u[j]).map(|(a, b)| a * b).sum();
                gram[i][j] = v.clone();
                gram[j][i] = v;
            }
        }
        Lat { gram, basis }
    }

    fn sub(&self, idx: &[usize]) -> Lat {
        Lat {
            gram: idx.iter().map(|&i| idx.iter().map(|&j| self.gram[i][j].clone()).collect()).collect(),
            basis: idx.iter().map(|&i| self.basis[i].clone()).collect(),
        }
    }

    fn rat_gram(&self) -> SymMatrix {
        let d = self.dim();
        Matrix::from_fn(d, d, |i, j| Rat::from_integer(self.gram[i][j].clone()))
    }
}

fn unit(n: usize, i: usize) -> IntVec {
    (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()
}

/// Isotropic vector of `a + 2bt + ct²` in the plane of basis vectors `u`, `w`,
/// as coefficients `(α, β)` of `α·u + β·w`.
fn binary_root(a: &BigInt, b: &BigInt, c: &BigInt) -> Option<(BigInt, BigInt)> {
    if a.is_zero() {
        return Some((BigInt::one(), BigInt::zero()));
    }
    if c.is_zero() {
        return Some((BigInt::zero(), BigInt::one()));
    }
    let disc = b * b - a * c;
    if disc.is_negative() {
        return None;
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return None;
    }
    // t = (−b − s)/c, then (−b + s)/c
    Some((c.clone(), -b - s))
}

/// Zero diagonal entries, then pairs `(i, j)` in lexicographic order.
fn pair_search(lat: &Lat) -> Option<IntVec> {
    let d = lat.dim();
    for i in 0..d {
        if lat.gram[i][i].is_zero() {
            return Some(lat.basis[i].clone());
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            if let Some((al, be)) = binary_root(&lat.gram[i][i], &lat.gram[i][j], &lat.gram[j][j]) {
                let mut c = vec![BigInt::zero(); d];
                c[i] = al;
                c[j] = be;
                return Some(lat.combine(&c));
            }
        }
    }
    None
}

/// LLL-reduced basis of `lat` with respect to a positive definite majorant
/// of its form. Returns an isotropic vector if elimination meets a zero pivot.
fn reduce(lat: &Lat) -> Result<Result<Lat, IntVec>, OracleError> {
    let (p, dv) = match symmetric_elimination(&lat.rat_gram()) {
        Elimination::ZeroPivot(v) => return Ok(Err(lat.combine(&primitive_ints(&v)))),
        Elimination::Diagonal { p, d } => (p, d),
    };
    if dv.iter().all(|x| x.is_positive()) || dv.iter().all(|x| x.is_negative()) {
        return Err(OracleError::Definite);
    }
    let u = lll_gram(&majorant(&p, &dv)).to_rows();
    Ok(Ok(lat.transform(&u)))
}

/// First `k`-subset (lexicographic) spanning a nondegenerate indefinite form.
fn indefinite_subspace(lat: &Lat, k: usize) -> Option<Vec<usize>> {
    let d = lat.dim();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let s = inertia(&lat.sub(&idx).rat_gram());
        if s.is_nondegenerate() && s.is_indefinite() {
            return Some(idx);
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < d - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

trait Int: Clone + Integer + Roots + Signed + From<i64> {}
impl<T: Clone + Integer + Roots + Signed + From<i64>> Int for T {}

/// Visit every `x ∈ Z^k` of max-norm `r` whose first nonzero entry is
/// positive, in lexicographic order. Stops when `f` returns true.
fn shell(k: usize, r: i64, x: &mut Vec<i64>, hit: bool, f: &mut dyn FnMut(&[i64]) -> bool) -> bool {
    let pos = x.len();
    if pos == k {
        return hit && f(x);
    }
    let signed = x.iter().any(|&v| v != 0);
    let lo = if signed { -r } else { 0 };
    let last = pos + 1 == k;
    let mut v = lo;
    while v <= r {
        if last && !hit && v.abs() != r {
            v = if v < r { r } else { r + 1 };
            continue;
        }
        x.push(v);
        let stop = shell(k, r, x, hit || v.abs() == r, f);
        x.pop();
        if stop {
            return true;
        }
        v += 1;
    }
    false
}

/// Enumerate `x' ∈ Z^(d−1)` by increasing max-norm and solve
/// `q(x', t) = a + 2bt + ct² = 0` for rational `t`.
fn shell_search<T: Int>(g: &[Vec<T>], budget: u64) -> Result<Vec<T>, OracleError> {
    let d = g.len();
    let k = d - 1;
    let c = g[k][k].clone();
    let mut count: u64 = 0;
    let mut r: i64 = 1;
    loop {
        let mut found: Option<Vec<T>> = None;
        let mut exhausted = false;
        let mut x = Vec::with_capacity(k);
        shell(k, r, &mut x, false, &mut |x: &[i64]| {
            if count >= budget {
                exhausted = true;
                return true;
            }
            count += 1;
            let xt: Vec<T> = x.iter().map(|&v| T::from(v)).collect();
            let mut a = T::zero();
            let mut b = T::zero();
            for i in 0..k {
                if xt[i].is_zero() {
                    continue;
                }
                let mut s = T::zero();
                for j in 0..k {
                    if !xt[j].is_zero() {
                        s = s + g[i][j].clone() * xt[j].clone();
                    }
                }
                a = a + s * xt[i].clone();
                b = b + g[i][k].clone() * xt[i].clone();
            }
            let (scale, t) = if c.is_zero() {
                if b.is_zero() {
                    if !a.is_zero() {
                        return false;
                    }
                    (T::one(), T::zero())
                } else {
                    (T::from(2) * b.clone(), -a)
                }
            } else {
                let disc = b.clone() * b.clone() - a * c.clone();
                if disc.is_negative() {
                    return false;
                }
                let s = disc.sqrt();
                if s.clone() * s.clone() != disc {
                    return false;
                }
                (c.clone(), -b - s)
            };
            let mut v: Vec<T> = xt.into_iter().map(|e| e * scale.clone()).collect();
            v.push(t);
            found = Some(v);
            true
        });
        if let Some(v) = found {
            return Ok(v);
        }
        if exhausted || k <= 1 {
            if k <= 1 && !exhausted {
                return Err(OracleError::Anisotropic(d));
            }
            return Err(OracleError::BudgetExhausted { budget, radius: r as u64 });
        }
        r += 1;
    }
}

fn enumerate_full(lat: &Lat, budget: u64) -> Result<IntVec, OracleError> {
    let d = lat.dim();
    if d <= 1 {
        return Err(OracleError::Anisotropic(d));
    }
    let small = lat.gram.iter().flatten().all(|x| x.bits() < 31);
    let coeffs: IntVec = if small {
        let g: Vec<Vec<i128>> =
            lat.gram.iter().map(|r| r.iter().map(|x| x.to_i128().expect("small")).collect()).collect();
        shell_search(&g, budget)?.into_iter().map(BigInt::from).collect()
    } else {
        shell_search(&lat.gram, budget)?
    };
    Ok(lat.combine(&coeffs))
}

/// Shell enumeration, first on indefinite prefixes of the reduced basis with
/// a share of the budget each (their discriminants are far smaller when the
/// basis lengths are very uneven), then on the whole lattice.
fn enumerate(lat: &Lat, budget: u64) -> Result<IntVec, OracleError> {
    let d = lat.dim();
    let share = budget / PREFIX_SHARE;
    let mut used = 0;
    for k in 3..d {
        let idx: Vec<usize> = (0..k).collect();
        let sub = lat.sub(&idx);
        let s = inertia(&sub.rat_gram());
        if !(s.is_nondegenerate() && s.is_indefinite()) {
            continue;
        }
        used += share;
        if let Ok(v) = enumerate_full(&sub, share) {
            return Ok(v);
        }
    }
    match enumerate_full(lat, budget.saturating_sub(used).max(1)) {
        Err(OracleError::BudgetExhausted { radius, .. }) => Err(OracleError::BudgetExhausted { budget, radius }),
        r => r,
    }
}

fn search(q: &SymMatrix, budget: u64) -> Result<IntVec, OracleError> {
    let n = q.nrows();
    if n == 0 {
        return Err(OracleError::Anisotropic(0));
    }
    let g = integral_multiple(q).to_rows();
    let lat = Lat { gram: g, basis: (0..n).map(|i| unit(n, i)).collect() };
    if let Some(v) = pair_search(&lat) {
        return Ok(v);
    }
    let lat = match reduce(&lat)? {
        Ok(l) => l,
        Err(v) => return Ok(v),
    };
    if let Some(v) = pair_search(&lat) {
        return Ok(v);
    }
    let lat = if n > SUBSPACE_DIM {
        match indefinite_subspace(&lat, SUBSPACE_DIM) {
            Some(idx) => {
                let sub = lat.sub(&idx);
                match reduce(&sub)? {
                    Ok(l) => l,
                    Err(v) => return Ok(v),
                }
            }
            None => lat,
        }
    } else {
        lat
    };
    if let Some(v) = pair_search(&lat) {
        return Ok(v);
    }
    enumerate(&lat, budget)
}

/// Nonzero primitive integer vector `y` with `y·Q·yᵗ = 0`, first nonzero
/// entry positive. Deterministic. A degenerate `Q` yields a kernel vector or
/// another isotropic vector.
pub fn baseline_isotropic(q: &SymMatrix, budget: u64) -> Result<RatVec, OracleError> {
    let v = search(q, budget)?;
    let y = normalize(&v.into_iter().map(Rat::from_integer).collect::<Vec<_>>());
    verify_isotropic(q, &y)?;
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{evaluate_form, int_vec};

    fn diag(v: &[i64]) -> SymMatrix {
        Matrix::diagonal(&int_vec(v))
    }

    #[test]
    fn matched_pair() {
        let y = baseline_isotropic(&diag(&[1, -1, 2, -2, 3]), DEFAULT_BUDGET).unwrap();
        assert_eq!(y, int_vec(&[1, 1, 0, 0, 0]));
    }

    #[test]
    fn hyperbolic_basis_vector() {
        let h5 = Matrix::symmetric(vec![int_vec(&[0, 1, 0]), int_vec(&[1, 0, 0]), int_vec(&[0, 0, 5])]).unwrap();
        assert_eq!(baseline_isotropic(&h5, DEFAULT_BUDGET).unwrap(), int_vec(&[1, 0, 0]));
    }

    #[test]
    fn definite_rejected() {
        assert_eq!(baseline_isotropic(&diag(&[1, 2, 3]), 100), Err(OracleError::Definite));
    }

    #[test]
    fn anisotropic_binary() {
        assert_eq!(baseline_isotropic(&diag(&[1, -2]), 100), Err(OracleError::Anisotropic(2)));
        assert_eq!(baseline_isotropic(&diag(&[1, -4]), 100).unwrap(), int_vec(&[2, 1]));
    }

    #[test]
    fn ternary_and_quaternary() {
        // x² + y² − 2z²: pair search fails (1·(−2) not minus a square), the
        // majorant stage or enumeration finds (1, 1, 1)
        let q = diag(&[1, 1, -2]);
        let y = baseline_isotropic(&q, 10_000).unwrap();
        assert!(evaluate_form(&q, &y).unwrap().is_zero());
        // x₁² + x₂² + x₃² − 7x₄² is anisotropic over Q₂: the budget runs out
        let q = diag(&[1, 1, 1, -7]);
        assert!(matches!(baseline_isotropic(&q, 20_000), Err(OracleError::BudgetExhausted { .. })));
    }

    #[test]
    fn dimension_five_diagonal() {
        let q = diag(&[3, 5, -7, 11, -13]);
        let y = baseline_isotropic(&q, DEFAULT_BUDGET).unwrap();
        assert!(evaluate_form(&q, &y).unwrap().is_zero());
        assert_eq!(y, baseline_isotropic(&q, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn degenerate_gives_kernel() {
        let q = Matrix::symmetric(vec![int_vec(&[1, 1]), int_vec(&[1, 1])]).unwrap();
        let y = baseline_isotropic(&q, 100).unwrap();
        assert_eq!(y, int_vec(&[1, -1]));
    }
}
