use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix.
///
/// Vectors are rows and forms act as `x·Q·xᵗ`; a transform `P` acts on a Gram
/// matrix by congruence `P·Q·Pᵗ`, so the rows of `P` are the new basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// An invertible change of basis.
pub type Transform<T> = Matrix<T>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }
    pub fn ncols(&self) -> usize {
        self.cols
    }
    /// Side length; only meaningful for square matrices.
    pub fn dim(&self) -> usize {
        self.rows
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn set_row(&mut self, i: usize, v: &[T]) {
        self.row_mut(i).clone_from_slice(v);
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `T·Q·Tᵗ` for the transposition `T` exchanging `a` and `b`.
    pub fn swap_sym(&mut self, a: usize, b: usize) {
        self.swap_rows(a, b);
        self.swap_cols(a, b);
    }

    /// Copy `block` into `self` with its top-left corner at `(r, c)`.
    pub fn set_block(&mut self, r: usize, c: usize, block: &Matrix<T>) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r + i, c + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Principal submatrix on `idx`.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])].clone())
    }

    /// Trailing principal block starting at `start`.
    pub fn trailing(&self, start: usize) -> Self {
        let idx: Vec<usize> = (start..self.rows).collect();
        self.principal(&idx)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize, ctx: T::Ctx) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero_in(ctx))
    }

    pub fn identity(n: usize, ctx: T::Ctx) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one_in(ctx) } else { T::zero_in(ctx) })
    }

    /// Symmetric matrix from rows; fails if the input is not symmetric
    /// (exactly, for rationals).
    pub fn symmetric(rows: Vec<Vec<T>>) -> Result<Self>
    where
        T: PartialEq,
    {
        let m = Matrix::from_rows(rows)?;
        if !m.is_square() {
            return Err(Error::DimensionMismatch { expected: m.rows, found: m.cols });
        }
        for i in 0..m.rows {
            for j in 0..i {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(m)
    }

    pub fn diagonal(d: &[T]) -> Self {
        let ctx = d[0].ctx();
        Matrix::from_fn(d.len(), d.len(), |i, j| if i == j { d[i].clone() } else { T::zero_in(ctx) })
    }

    pub fn ctx(&self) -> T::Ctx {
        self.data[0].ctx()
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: o.rows });
        }
        let ctx = self.ctx();
        Ok(Matrix::from_fn(self.rows, o.cols, |i, j| {
            let mut acc = T::zero_in(ctx);
            for k in 0..self.cols {
                let a = &self[(i, k)];
                let b = &o[(k, j)];
                if a.is_exact_zero() || b.is_exact_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
            acc
        }))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: o.rows });
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].add(&o[(i, j)])))
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    /// `x·M` for a row vector `x`.
    pub fn left_mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: x.len() });
        }
        let ctx = self.ctx();
        Ok((0..self.cols)
            .map(|j| {
                let mut acc = T::zero_in(ctx);
                for (i, xi) in x.iter().enumerate() {
                    if xi.is_exact_zero() || self[(i, j)].is_exact_zero() {
                        continue;
                    }
                    acc = acc.add(&xi.mul(&self[(i, j)]));
                }
                acc
            })
            .collect())
    }

    /// `A ⊕ B`.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let ctx = if self.data.is_empty() { o.ctx() } else { self.ctx() };
        let n = self.rows + o.rows;
        let m = self.cols + o.cols;
        Matrix::from_fn(n, m, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                o[(i - self.rows, j - self.cols)].clone()
            } else {
                T::zero_in(ctx)
            }
        })
    }

    /// Transposition matrix exchanging rows `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize, ctx: T::Ctx) -> Self {
        let mut p = Matrix::identity(n, ctx);
        p.swap_rows(a, b);
        p
    }

    /// Embed `self` in the lower-right corner of an identity of size `n`.
    pub fn embed_lower(&self, n: usize) -> Self {
        let k = n - self.rows;
        Matrix::identity(k, self.ctx()).direct_sum(self)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.cols.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// `P·Q·Pᵗ`. The result is symmetrized from its upper triangle so that it is
/// exactly symmetric even over balls.
pub fn congruence<T: Scalar>(p: &Matrix<T>, q: &Matrix<T>) -> Result<Matrix<T>> {
    if p.ncols() != q.nrows() || !q.is_square() {
        return Err(Error::DimensionMismatch { expected: q.nrows(), found: p.ncols() });
    }
    let pq = p.mul(q)?;
    let n = p.nrows();
    let ctx = q.ctx();
    let mut out = Matrix::zeros(n, n, ctx);
    for i in 0..n {
        for j in i..n {
            let mut acc = T::zero_in(ctx);
            for k in 0..p.ncols() {
                let a = &pq[(i, k)];
                let b = &p[(j, k)];
                if a.is_exact_zero() || b.is_exact_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
            out[(i, j)] = acc.clone();
            out[(j, i)] = acc;
        }
    }
    Ok(out)
}

/// `x·Q·yᵗ`.
pub fn bilinear<T: Scalar>(q: &Matrix<T>, x: &[T], y: &[T]) -> Result<T> {
    if y.len() != q.ncols() {
        return Err(Error::DimensionMismatch { expected: q.ncols(), found: y.len() });
    }
    let xq = q.left_mul_vec(x)?;
    let mut acc = T::zero_in(q.ctx());
    for (a, b) in xq.iter().zip(y) {
        if a.is_exact_zero() || b.is_exact_zero() {
            continue;
        }
        acc = acc.add(&a.mul(b));
    }
    Ok(acc)
}

/// `x·Q·xᵗ`.
pub fn evaluate_form<T: Scalar>(q: &Matrix<T>, x: &[T]) -> Result<T> {
    bilinear(q, x, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, int_vec, Rat};

    #[test]
    fn congruence_and_forms() {
        let q: Matrix<Rat> = Matrix::diagonal(&int_vec(&[1, -1]));
        let p = Matrix::from_rows(vec![int_vec(&[1, 1]), int_vec(&[0, 1])]).unwrap();
        let c = congruence(&p, &q).unwrap();
        assert_eq!(c, Matrix::symmetric(vec![int_vec(&[0, -1]), int_vec(&[-1, -1])]).unwrap());
        assert_eq!(evaluate_form(&q, &int_vec(&[2, 1])).unwrap(), int(3));
        assert_eq!(bilinear(&q, &int_vec(&[1, 0]), &int_vec(&[3, 5])).unwrap(), int(3));
        assert!(Matrix::symmetric(vec![int_vec(&[1, 2]), int_vec(&[3, 1])]).is_err());
    }

    #[test]
    fn swaps_and_blocks() {
        let mut q: Matrix<Rat> = Matrix::diagonal(&int_vec(&[1, 2, 3]));
        q.swap_sym(0, 2);
        assert_eq!(q, Matrix::diagonal(&int_vec(&[3, 2, 1])));
        let e = Matrix::diagonal(&int_vec(&[5])).embed_lower(3);
        assert_eq!(e, Matrix::diagonal(&int_vec(&[1, 1, 5])));
        let mut z: Matrix<Rat> = Matrix::zeros(3, 3, ());
        z.set_block(1, 1, &Matrix::identity(2, ()));
        assert_eq!(z, Matrix::diagonal(&int_vec(&[0, 1, 1])));
    }
}
