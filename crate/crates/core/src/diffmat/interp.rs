//! Direct evaluation of the interpolants behind each matrix family.

use crate::error::{Error, Result};
use crate::linalg::CVector;
use crate::nodes::{NodeSet, PoleSet};
use crate::scalar::Complex64;

fn check_len(nodes: &NodeSet, samples: &CVector) -> Result<()> {
    if nodes.len() != samples.len() {
        return Err(Error::DimensionMismatch {
            context: "samples vs nodes",
            left: samples.len(),
            right: nodes.len(),
        });
    }
    Ok(())
}

/// Sum of `f_j · weight_j(z) · ∏_{k≠j} basis(z, z_k)/basis(z_j, z_k)`.
fn cardinal_sum(
    nodes: &NodeSet,
    samples: &CVector,
    z: Complex64,
    basis: impl Fn(Complex64, Complex64) -> Complex64,
    weight: impl Fn(Complex64) -> Complex64,
) -> Complex64 {
    let pts = nodes.points();
    let mut acc = Complex64::new(0.0, 0.0);
    for (j, &zj) in pts.iter().enumerate() {
        let mut term = samples[j] * weight(zj);
        for (k, &zk) in pts.iter().enumerate() {
            if k != j {
                term *= basis(z, zk) / basis(zj, zk);
            }
        }
        acc += term;
    }
    acc
}

/// Lagrange interpolating polynomial through `(z_j, f_j)` evaluated at `z`.
pub fn lagrange_eval(nodes: &NodeSet, samples: &CVector, z: Complex64) -> Result<Complex64> {
    check_len(nodes, samples)?;
    Ok(cardinal_sum(nodes, samples, z, |a, b| a - b, |_| Complex64::new(1.0, 0.0)))
}

/// Gauss trigonometric interpolant (odd node count) evaluated at `z`.
pub fn gauss_trig_eval(nodes: &NodeSet, samples: &CVector, z: Complex64) -> Result<Complex64> {
    check_len(nodes, samples)?;
    if nodes.len().is_multiple_of(2) {
        return Err(Error::EvenNodeCount(nodes.len()));
    }
    Ok(cardinal_sum(
        nodes,
        samples,
        z,
        |a, b| ((a - b) * 0.5).sin(),
        |_| Complex64::new(1.0, 0.0),
    ))
}

/// Interpolant `q(z)/(z − α)^m` with `deg q ≤ N − 1`, single pole only.
pub fn rational_interp_eval(
    nodes: &NodeSet,
    poles: &PoleSet,
    samples: &CVector,
    z: Complex64,
) -> Result<Complex64> {
    check_len(nodes, samples)?;
    let [pole] = poles.poles() else {
        return Err(Error::InvalidInput(format!(
            "rational interpolation takes exactly one pole, got {}",
            poles.len()
        )));
    };
    let alpha = pole.location();
    let zs = z - alpha;
    if zs.norm() <= f64::EPSILON * alpha.norm().max(1.0) {
        return Err(Error::PoleProximity(format!("{z}")));
    }
    let m = pole.order as i32;
    Ok(cardinal_sum(nodes, samples, z, |a, b| a - b, |zj| ((zj - alpha) / zs).powi(m)))
}
