//! Dense complex matrices and vectors, LU with partial pivoting, norms.
//!
//! Every reduction runs left to right over its index so results are
//! bit-for-bit reproducible across runs and platforms with the same libm.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::{Complex64, Scalar};

/// Default relative pivot tolerance for [`lu_solve`].
pub const DEFAULT_PIVOT_TOLERANCE: f64 = 1e-14;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Dense vector with at least one entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<T>(Vec<T>);

pub type CMatrix = Matrix<Complex64>;
pub type CVector = Vector<Complex64>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "row-major data length",
                left: data.len(),
                right: rows * cols,
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    context: "ragged rows",
                    left: row.len(),
                    right: ncols,
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols: ncols,
            data,
        })
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Builds an `n × n` matrix entry by entry, row by row.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn scale(&self, c: T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "matrix sum", |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "matrix difference", |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, context: &'static str, f: impl Fn(T, T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context,
                left: self.rows * self.cols,
                right: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.modulus()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|x| x.modulus()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    /// Integer power `self^n`, computed as `n - 1` successive left products.
    pub fn pow(&self, n: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                context: "matrix power of non-square matrix",
                left: self.rows,
                right: self.cols,
            });
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..n {
            acc = mat_mul(self, &acc)?;
        }
        Ok(acc)
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

impl<T: Scalar> Vector<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("vector must have at least one entry".into()));
        }
        Ok(Vector(entries))
    }

    pub fn filled(len: usize, value: T) -> Result<Self> {
        Self::new(vec![value; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.0.iter()
    }

    pub fn scale(&self, c: T) -> Self {
        Vector(self.0.iter().map(|&x| x * c).collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                context: "vector difference",
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Vector(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect()))
    }

    /// Hermitian inner product `self* · other`.
    pub fn dot_conj(&self, other: &Self) -> T {
        let mut acc = T::zero();
        for (&a, &b) in self.0.iter().zip(&other.0) {
            acc += a.conj() * b;
        }
        acc
    }

    /// Index of the first entry of largest modulus.
    pub fn argmax_modulus(&self) -> usize {
        let mut best = 0;
        let mut best_mod = -1.0;
        for (i, x) in self.0.iter().enumerate() {
            let m = x.modulus();
            if m > best_mod {
                best = i;
                best_mod = m;
            }
        }
        best
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T> IndexMut<usize> for Vector<T> {
    fn index_mut(&mut self, i: usize) -> &mut T {
        &mut self.0[i]
    }
}

pub fn mat_mul<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            context: "mat_mul inner dimension",
            left: a.cols,
            right: b.rows,
        });
    }
    let mut out = Matrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = T::zero();
            for k in 0..a.cols {
                acc += a[(i, k)] * b[(k, j)];
            }
            out[(i, j)] = acc;
        }
    }
    if !out.is_finite() {
        return Err(Error::NonFinite("mat_mul"));
    }
    Ok(out)
}

pub fn mat_vec<T: Scalar>(a: &Matrix<T>, v: &Vector<T>) -> Result<Vector<T>> {
    if a.cols != v.len() {
        return Err(Error::DimensionMismatch {
            context: "mat_vec",
            left: a.cols,
            right: v.len(),
        });
    }
    let out: Vec<T> = (0..a.rows)
        .map(|i| {
            let mut acc = T::zero();
            for (&aij, &vj) in a.row(i).iter().zip(v.iter()) {
                acc += aij * vj;
            }
            acc
        })
        .collect();
    let out = Vector(out);
    if !out.is_finite() {
        return Err(Error::NonFinite("mat_vec"));
    }
    Ok(out)
}

pub fn max_norm<T: Scalar>(v: &Vector<T>) -> f64 {
    v.iter().map(|x| x.modulus()).fold(0.0, f64::max)
}

/// LU factors `P A = L U` packed in one matrix (unit lower triangle implied).
#[derive(Debug, Clone)]
pub struct LuFactors<T> {
    lu: Matrix<T>,
    perm: Vec<usize>,
    min_pivot: f64,
}

impl<T: Scalar> LuFactors<T> {
    /// Factors `a` with partial pivoting by largest modulus.
    ///
    /// Fails with [`Error::SingularMatrix`] once a pivot modulus drops below
    /// `rel_tol` times the largest entry modulus of the original matrix.
    pub fn new(a: &Matrix<T>, rel_tol: f64) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::DimensionMismatch {
                context: "LU of non-square matrix",
                left: a.rows,
                right: a.cols,
            });
        }
        if !a.is_finite() {
            return Err(Error::NonFinite("LU input"));
        }
        let n = a.rows;
        let tolerance = rel_tol * a.max_abs_entry();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut min_pivot = f64::INFINITY;

        for col in 0..n {
            let mut p = col;
            let mut best = lu[(col, col)].modulus();
            for r in col + 1..n {
                let m = lu[(r, col)].modulus();
                if m > best {
                    best = m;
                    p = r;
                }
            }
            if best <= tolerance || best == 0.0 {
                return Err(Error::SingularMatrix {
                    column: col,
                    pivot: best,
                    tolerance,
                });
            }
            min_pivot = min_pivot.min(best);
            if p != col {
                for j in 0..n {
                    lu.data.swap(col * n + j, p * n + j);
                }
                perm.swap(col, p);
            }
            let pivot = lu[(col, col)];
            for r in col + 1..n {
                let factor = lu[(r, col)] / pivot;
                lu[(r, col)] = factor;
                for j in col + 1..n {
                    let u = lu[(col, j)];
                    lu[(r, j)] -= factor * u;
                }
            }
        }
        Ok(LuFactors { lu, perm, min_pivot })
    }

    pub fn dim(&self) -> usize {
        self.lu.rows
    }

    /// Smallest pivot modulus met during factorization.
    pub fn min_pivot(&self) -> f64 {
        self.min_pivot
    }

    pub fn solve(&self, b: &Vector<T>) -> Result<Vector<T>> {
        let n = self.dim();
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                context: "lu_solve right-hand side",
                left: n,
                right: b.len(),
            });
        }
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let mut acc = x[i];
            for j in 0..i {
                acc -= self.lu[(i, j)] * x[j];
            }
            x[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = x[i];
            for j in i + 1..n {
                acc -= self.lu[(i, j)] * x[j];
            }
            x[i] = acc / self.lu[(i, i)];
        }
        let x = Vector(x);
        if !x.is_finite() {
            return Err(Error::NonFinite("lu_solve"));
        }
        Ok(x)
    }
}

/// Solves `a x = b` with the default relative pivot tolerance.
pub fn lu_solve<T: Scalar>(a: &Matrix<T>, b: &Vector<T>) -> Result<Vector<T>> {
    lu_solve_with_tol(a, b, DEFAULT_PIVOT_TOLERANCE)
}

pub fn lu_solve_with_tol<T: Scalar>(a: &Matrix<T>, b: &Vector<T>, rel_tol: f64) -> Result<Vector<T>> {
    if a.rows != b.len() {
        return Err(Error::DimensionMismatch {
            context: "lu_solve",
            left: a.rows,
            right: b.len(),
        });
    }
    LuFactors::new(a, rel_tol)?.solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cv(xs: &[Complex64]) -> CVector {
        Vector::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn identity_times_a_is_a() {
        let a = CMatrix::from_rows(&[vec![c(1.0, 2.0), c(3.0, 0.0)], vec![c(0.0, -1.0), c(5.0, 5.0)]]).unwrap();
        assert_eq!(mat_mul(&CMatrix::identity(2), &a).unwrap(), a);
    }

    #[test]
    fn permutation_swaps_rows() {
        let p = CMatrix::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]]).unwrap();
        let (a, b, cc, d) = (c(1.0, 1.0), c(2.0, 0.0), c(3.0, -1.0), c(0.0, 4.0));
        let m = CMatrix::from_rows(&[vec![a, b], vec![cc, d]]).unwrap();
        let out = mat_mul(&p, &m).unwrap();
        assert_eq!(out, CMatrix::from_rows(&[vec![cc, d], vec![a, b]]).unwrap());
    }

    #[test]
    fn two_node_algebraic_matrix_squares_to_zero() {
        // D for nodes (0, 1), worked out by hand.
        let d = CMatrix::from_rows(&[vec![c(-1.0, 0.0), c(1.0, 0.0)], vec![c(-1.0, 0.0), c(1.0, 0.0)]]).unwrap();
        let d2 = mat_mul(&d, &d).unwrap();
        assert!(d2.as_slice().iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn mat_mul_dimension_mismatch() {
        let a = CMatrix::zeros(2, 3);
        let b = CMatrix::zeros(2, 3);
        assert!(matches!(mat_mul(&a, &b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn mat_vec_basics() {
        let v = cv(&[c(1.0, 2.0), c(-3.0, 0.5)]);
        assert_eq!(mat_vec(&CMatrix::identity(2), &v).unwrap(), v);
        let z = mat_vec(&CMatrix::zeros(2, 2), &v).unwrap();
        assert!(z.iter().all(|x| x.norm() == 0.0));
        let d = CMatrix::from_rows(&[vec![c(-1.0, 0.0), c(1.0, 0.0)], vec![c(-1.0, 0.0), c(1.0, 0.0)]]).unwrap();
        let y = mat_vec(&d, &cv(&[c(0.0, 0.0), c(1.0, 0.0)])).unwrap();
        assert_eq!(y.as_slice(), &[c(1.0, 0.0), c(1.0, 0.0)]);
        assert!(mat_vec(&CMatrix::zeros(3, 3), &v).is_err());
    }

    #[test]
    fn mat_mul_overflow_is_reported() {
        let big = CMatrix::from_rows(&[vec![c(1e300, 0.0)]]).unwrap();
        assert_eq!(mat_mul(&big, &big), Err(Error::NonFinite("mat_mul")));
    }

    #[test]
    fn lu_solve_simple_systems() {
        let b = cv(&[c(1.0, -1.0), c(2.0, 3.0)]);
        assert_eq!(lu_solve(&CMatrix::identity(2), &b).unwrap(), b);

        let a = CMatrix::from_diagonal(&[c(2.0, 0.0), c(0.0, 4.0)]);
        let x = lu_solve(&a, &cv(&[c(2.0, 0.0), c(0.0, 4.0)])).unwrap();
        assert_eq!(x.as_slice(), &[c(1.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn lu_solve_recovers_known_solution() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let n = 5;
        let a = CMatrix::from_fn(n, |i, j| {
            let base = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            if i == j {
                base + c(4.0, 0.0)
            } else {
                base
            }
        });
        let xs = cv(&(0..n).map(|k| c(k as f64 - 2.0, 0.5 * k as f64)).collect::<Vec<_>>());
        let b = mat_vec(&a, &xs).unwrap();
        let x = lu_solve(&a, &b).unwrap();
        let resid = mat_vec(&a, &x).unwrap().sub(&b).unwrap();
        assert!(max_norm(&resid) <= 1e-12 * max_norm(&b));
        assert!(max_norm(&x.sub(&xs).unwrap()) <= 1e-12 * max_norm(&xs));
    }

    #[test]
    fn lu_detects_singular_matrix() {
        let a = CMatrix::from_rows(&[vec![c(1.0, 0.0), c(2.0, 0.0)], vec![c(2.0, 0.0), c(4.0, 0.0)]]).unwrap();
        let err = lu_solve(&a, &cv(&[c(1.0, 0.0), c(1.0, 0.0)])).unwrap_err();
        assert!(matches!(err, Error::SingularMatrix { column: 1, .. }));
    }

    #[test]
    fn pivot_tolerance_is_relative() {
        // Tiny but perfectly conditioned.
        let a = CMatrix::from_diagonal(&[c(1e-20, 0.0), c(2e-20, 0.0)]);
        let x = lu_solve(&a, &cv(&[c(1e-20, 0.0), c(2e-20, 0.0)])).unwrap();
        assert!((x[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((x[1] - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn max_norm_examples() {
        assert_eq!(max_norm(&cv(&[c(0.0, 0.0); 3])), 0.0);
        assert_eq!(max_norm(&cv(&[c(3.0, 4.0), c(1.0, 0.0)])), 5.0);
        assert_eq!(max_norm(&cv(&[c(1.0, 0.0), c(-2.0, 0.0), c(0.0, 2.0)])), 2.0);
    }

    #[test]
    fn empty_vector_rejected() {
        assert!(CVector::new(vec![]).is_err());
    }
}
