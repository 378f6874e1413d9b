//! Differentiate sampled functions with the algebraic and trigonometric
//! matrices and compare against the exact derivative.

use merodiff::diffmat::{algebraic_matrix, trigonometric_matrix};
use merodiff::linalg::max_norm;
use merodiff::nodes::segment_nodes;
use merodiff::{CVector, Complex64, Result};

fn samples(points: &[Complex64], f: impl Fn(Complex64) -> Complex64) -> Result<CVector> {
    CVector::new(points.iter().map(|&z| f(z)).collect())
}

fn main() -> Result<()> {
    let i = Complex64::new(0.0, 1.0);
    println!("{:>3}  {:>22}  {:>22}", "N", "algebraic, exp(z)", "trigonometric, exp(iz)");
    for n in [5, 9, 13, 17, 21] {
        let nodes = segment_nodes(Complex64::new(1.0, 0.5), -1.0, 1.0, n)?;
        let z = nodes.points();

        let d = algebraic_matrix(&nodes)?;
        let err_alg = max_norm(&d.apply(&samples(z, |z| z.exp())?)?.sub(&samples(z, |z| z.exp())?)?);

        let t = trigonometric_matrix(&nodes)?;
        let f = |z: Complex64| (i * z).exp() + (2.0 * z).sin();
        let df = |z: Complex64| i * (i * z).exp() + 2.0 * (2.0 * z).cos();
        let err_trig = max_norm(&t.apply(&samples(z, f)?)?.sub(&samples(z, df)?)?);

        println!("{n:>3}  {err_alg:>22.3e}  {err_trig:>22.3e}");
    }

    // Second derivatives by powers of the first-derivative matrix.
    let nodes = segment_nodes(Complex64::new(1.0, 1.0), 0.0, 1.0, 7)?;
    let d2 = algebraic_matrix(&nodes)?.power(2)?;
    let cubic = samples(nodes.points(), |z| z * z * z)?;
    let exact = samples(nodes.points(), |z| 6.0 * z)?;
    println!("\nz³ on 7 nodes, second derivative error: {:.3e}", max_norm(&d2.apply(&cubic)?.sub(&exact)?));
    Ok(())
}
