//! Discretized Kummer operator and its smallest-modulus eigenpair.

use crate::diffmat::DiffMatrix;
use crate::error::{Error, Result};
use crate::linalg::{mat_mul, mat_vec, max_norm, LuFactors, Matrix, Vector, DEFAULT_PIVOT_TOLERANCE};
use crate::nodes::NodeSet;
use crate::scalar::{Complex64, Scalar};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenOptions {
    /// Stop once successive eigenvalue estimates differ by less than
    /// `tol·max(1, ‖A‖∞)` and the residual is below `10·tol·‖A‖∞`.
    pub tol: f64,
    pub max_iter: usize,
    /// Relative pivot tolerance for the single LU factorization.
    pub pivot_tol: f64,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions {
            tol: 1e-12,
            max_iter: 500,
            pivot_tol: DEFAULT_PIVOT_TOLERANCE,
        }
    }
}

/// Eigenvalue of smallest modulus and its eigenvector, gauged so the
/// largest-modulus entry is exactly `1 + 0i`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair<T> {
    pub lambda: T,
    pub vector: Vector<T>,
    pub iterations: usize,
    /// `‖A v − λ v‖∞ / ‖v‖∞`.
    pub residual: f64,
}

/// `L = Z D² + (b I − Z) D` with `Z = diag(z)`.
pub fn kummer_operator<T: Scalar>(z: &[T], b: T, d: &Matrix<T>) -> Result<Matrix<T>> {
    if !d.is_square() || d.rows() != z.len() {
        return Err(Error::DimensionMismatch {
            context: "Kummer operator: nodes vs matrix",
            left: z.len(),
            right: d.rows(),
        });
    }
    let d2 = mat_mul(d, d)?;
    let n = z.len();
    let l = Matrix::from_fn(n, |i, j| z[i] * d2[(i, j)] + (b - z[i]) * d[(i, j)]);
    if !l.is_finite() {
        return Err(Error::NonFinite("Kummer operator"));
    }
    Ok(l)
}

pub fn build_kummer_operator(nodes: &NodeSet, b: Complex64, d: &DiffMatrix) -> Result<Matrix<Complex64>> {
    kummer_operator(nodes.points(), b, d.matrix())
}

/// Scales `v` so its first largest-modulus entry is `1 + 0i`.
pub fn gauge_max_entry<T: Scalar>(v: &Vector<T>) -> Vector<T> {
    let pivot = v[v.argmax_modulus()];
    if pivot.modulus() == 0.0 {
        return v.clone();
    }
    v.scale(T::one() / pivot)
}

fn rayleigh<T: Scalar>(a: &Matrix<T>, v: &Vector<T>) -> Result<T> {
    let av = mat_vec(a, v)?;
    Ok(v.dot_conj(&av) / v.dot_conj(v))
}

fn residual<T: Scalar>(a: &Matrix<T>, v: &Vector<T>, lambda: T) -> Result<f64> {
    let r = mat_vec(a, v)?.sub(&v.scale(lambda))?;
    Ok(max_norm(&r) / max_norm(v))
}

/// Inverse power iteration from the all-ones vector.
///
/// `a` is factored once. Convergence requires both a settled Rayleigh
/// quotient and a small residual; both tests scale with `‖A‖∞`, since an
/// eigenvalue cannot be resolved more finely than `ε‖A‖`.
pub fn smallest_eigenpair<T: Scalar>(a: &Matrix<T>, opts: &EigenOptions) -> Result<EigenPair<T>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            context: "eigenproblem of non-square matrix",
            left: a.rows(),
            right: a.cols(),
        });
    }
    let lu = LuFactors::new(a, opts.pivot_tol).map_err(|e| match e {
        Error::SingularMatrix { pivot, .. } => Error::SingularOperator { pivot },
        other => other,
    })?;
    let norm = a.inf_norm();
    let residual_tol = 10.0 * opts.tol * norm;
    let change_tol = opts.tol * norm.max(1.0);
    let mut v = Vector::filled(a.rows(), T::one())?;
    let mut lambda_prev = rayleigh(a, &v)?;
    let mut last_change = f64::INFINITY;
    for it in 1..=opts.max_iter {
        v = gauge_max_entry(&lu.solve(&v)?);
        let lambda = rayleigh(a, &v)?;
        last_change = (lambda - lambda_prev).modulus();
        if last_change < change_tol {
            let res = residual(a, &v, lambda)?;
            if res <= residual_tol {
                return Ok(EigenPair {
                    lambda,
                    vector: v,
                    iterations: it,
                    residual: res,
                });
            }
        }
        lambda_prev = lambda;
    }
    Err(Error::NoConvergence {
        iterations: opts.max_iter,
        last_change,
    })
}
