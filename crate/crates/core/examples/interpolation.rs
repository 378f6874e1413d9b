//! Evaluate the interpolants behind each matrix family off the nodes.

use merodiff::diffmat::{gauss_trig_eval, lagrange_eval, rational_interp_eval};
use merodiff::nodes::{equispaced_periodic_nodes, segment_nodes};
use merodiff::{CVector, Complex64, NodeSet, PoleSet, Result};

fn samples(nodes: &NodeSet, f: impl Fn(Complex64) -> Complex64) -> Result<CVector> {
    CVector::new(nodes.points().iter().map(|&z| f(z)).collect())
}

fn main() -> Result<()> {
    let z = Complex64::new(0.37, 0.21);

    let nodes = segment_nodes(Complex64::new(1.0, 0.0), -1.0, 1.0, 6)?;
    let cubic = |z: Complex64| z * z * z - 2.0 * z;
    let p = lagrange_eval(&nodes, &samples(&nodes, cubic)?, z)?;
    println!("polynomial     p(z) − f(z) = {:.3e}", (p - cubic(z)).norm());

    let nodes = equispaced_periodic_nodes(7)?;
    let trig = |z: Complex64| (2.0 * z).cos() + 0.5 * z.sin();
    let t = gauss_trig_eval(&nodes, &samples(&nodes, trig)?, z)?;
    println!("trigonometric  t(z) − f(z) = {:.3e}", (t - trig(z)).norm());

    let alpha = Complex64::new(0.0, 1.5);
    let poles = PoleSet::single(alpha, 2);
    let nodes = segment_nodes(Complex64::new(1.0, 0.0), -1.0, 1.0, 4)?;
    let rational = |z: Complex64| (z * z + 1.0) / ((z - alpha) * (z - alpha));
    let r = rational_interp_eval(&nodes, &poles, &samples(&nodes, rational)?, z)?;
    println!("rational       r(z) − f(z) = {:.3e}", (r - rational(z)).norm());
    Ok(())
}
