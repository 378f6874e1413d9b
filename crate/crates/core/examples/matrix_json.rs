//! Build a rational second-derivative matrix, round-trip it through JSON and
//! apply both copies to the same samples.

use merodiff::diffmat::rational_power;
use merodiff::nodes::segment_nodes;
use merodiff::{CVector, Complex64, DiffMatrix, PoleSet, Result};

fn main() -> Result<()> {
    let nodes = segment_nodes(Complex64::new(1.0, 1.0), 0.5, 1.0, 6)?;
    let poles = PoleSet::single(Complex64::new(0.0, 0.0), 3);
    let d = rational_power(&nodes, &poles, 2)?;

    let json = d.to_json()?;
    println!("{} bytes of JSON, basis {}, order {}", json.len(), d.basis(), d.order());
    let back = DiffMatrix::from_json(&json)?;
    assert_eq!(back, d);

    // (z² + 1)/z³ and its second derivative 2/z³ + 12/z⁵.
    let f = CVector::new(nodes.points().iter().map(|&z| (z * z + 1.0) / (z * z * z)).collect())?;
    let a = d.apply(&f)?;
    let b = back.apply(&f)?;
    for ((z, x), y) in nodes.points().iter().zip(a.iter()).zip(b.iter()) {
        let exact = 2.0 / z.powi(3) + 12.0 / z.powi(5);
        println!("z = {z:.3}  D²f = {x:.12}  identical: {}  error: {:.1e}", x == y, (x - exact).norm());
    }
    Ok(())
}
