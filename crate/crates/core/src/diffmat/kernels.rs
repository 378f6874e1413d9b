//! Entry formulas for every matrix family, generic over [`Scalar`].
//!
//! Off-diagonal node products are evaluated as a single running ratio,
//! multiplying one numerator factor and dividing by one denominator factor
//! per step, so the raw products `ω′(z_i)` never have to be formed.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A pole location and its (possibly zero) order.
pub type PoleSpec<T> = (T, u32);

/// `ω′(z_i) = ∏_{k≠i} (z_i − z_k)`.
pub fn omega_prime<T: Scalar>(z: &[T], i: usize) -> T {
    let mut acc = T::one();
    for (k, &zk) in z.iter().enumerate() {
        if k != i {
            acc *= z[i] - zk;
        }
    }
    acc
}

/// `ω′(z_i) / ω′(z_j)` for `i ≠ j`, as `−∏_{k≠i,j} (z_i − z_k)/(z_j − z_k)`.
pub fn omega_prime_ratio<T: Scalar>(z: &[T], i: usize, j: usize) -> T {
    let mut acc = -T::one();
    for (k, &zk) in z.iter().enumerate() {
        if k != i && k != j {
            acc *= (z[i] - zk) / (z[j] - zk);
        }
    }
    acc
}

/// `∏_{k≠i} s_ik / ∏_{k≠j} s_jk` with `s_ab = sin((z_a − z_b)/2)`, for `i ≠ j`.
fn half_sine_ratio<T: Scalar>(s: &Matrix<T>, i: usize, j: usize) -> T {
    let n = s.rows();
    let mut acc = -T::one();
    for k in 0..n {
        if k != i && k != j {
            acc *= s[(i, k)] / s[(j, k)];
        }
    }
    acc
}

/// `∏_k ((z_j − α_k)/(z_i − α_k))^{μ_k}` by integer powers of each ratio.
fn pole_ratio<T: Scalar>(zi: T, zj: T, poles: &[PoleSpec<T>]) -> T {
    let mut acc = T::one();
    for &(alpha, mu) in poles {
        if mu > 0 {
            acc *= ((zj - alpha) / (zi - alpha)).powu(mu);
        }
    }
    acc
}

/// `Σ_k μ_k / (z_i − α_k)`.
fn pole_shift<T: Scalar>(zi: T, poles: &[PoleSpec<T>]) -> T {
    let mut acc = T::zero();
    for &(alpha, mu) in poles {
        if mu > 0 {
            acc += T::from_real(mu as f64) / (zi - alpha);
        }
    }
    acc
}

fn finite<T: Scalar>(m: Matrix<T>, what: &'static str) -> Result<Matrix<T>> {
    if m.is_finite() {
        Ok(m)
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Derivative matrix of the interpolant `q(z)/∏(z − α_k)^{μ_k}`, `deg q ≤ N − 1`.
///
/// With no poles (or all orders zero) this is the plain polynomial matrix.
pub fn rational_entries<T: Scalar>(z: &[T], poles: &[PoleSpec<T>]) -> Result<Matrix<T>> {
    let n = z.len();
    let m = Matrix::from_fn(n, |i, j| {
        if i == j {
            let mut acc = T::zero();
            for (k, &zk) in z.iter().enumerate() {
                if k != i {
                    acc += T::one() / (z[i] - zk);
                }
            }
            acc - pole_shift(z[i], poles)
        } else {
            omega_prime_ratio(z, i, j) / (z[i] - z[j]) * pole_ratio(z[i], z[j], poles)
        }
    });
    finite(m, "rational matrix")
}

/// Table of `sin((z_i − z_k)/2)`; fails if two nodes coincide modulo 2π.
fn half_sines<T: Scalar>(z: &[T]) -> Result<Matrix<T>> {
    let n = z.len();
    if n.is_multiple_of(2) {
        return Err(Error::EvenNodeCount(n));
    }
    let half = T::from_real(0.5);
    let s = Matrix::from_fn(n, |i, k| {
        if i == k {
            T::zero()
        } else {
            ((z[i] - z[k]) * half).sin()
        }
    });
    for i in 0..n {
        for k in i + 1..n {
            if s[(i, k)].modulus() <= 1e-12 {
                return Err(Error::NodesCongruentMod2Pi(i, k));
            }
        }
    }
    Ok(s)
}

/// Derivative matrix of the trigonometric interpolant divided by the pole
/// factors `∏(z − α_k)^{μ_k}`. No poles gives the trigonometric matrix.
pub fn periodic_entries<T: Scalar>(z: &[T], poles: &[PoleSpec<T>]) -> Result<Matrix<T>> {
    let s = half_sines(z)?;
    let n = z.len();
    let half = T::from_real(0.5);
    let m = Matrix::from_fn(n, |i, j| {
        if i == j {
            let mut acc = T::zero();
            for (k, &zk) in z.iter().enumerate() {
                if k != i {
                    let x = (z[i] - zk) * half;
                    acc += x.cos() / s[(i, k)];
                }
            }
            acc * half - pole_shift(z[i], poles)
        } else {
            half / s[(i, j)] * half_sine_ratio(&s, i, j) * pole_ratio(z[i], z[j], poles)
        }
    });
    finite(m, "trigonometric matrix")
}

/// Left product `F(n−1) ⋯ F(1) F(0)` where `F(k)` is built with every pole
/// order raised by `k`.
pub fn shifted_product<T: Scalar>(
    poles: &[PoleSpec<T>],
    n: u32,
    mut factor: impl FnMut(&[PoleSpec<T>]) -> Result<Matrix<T>>,
) -> Result<Matrix<T>> {
    if n == 0 {
        return Err(Error::InvalidInput("derivative order must be at least 1".into()));
    }
    let mut acc = factor(poles)?;
    for k in 1..n {
        let shifted: Vec<PoleSpec<T>> = poles.iter().map(|&(a, mu)| (a, mu + k)).collect();
        acc = crate::linalg::mat_mul(&factor(&shifted)?, &acc)?;
    }
    Ok(acc)
}
