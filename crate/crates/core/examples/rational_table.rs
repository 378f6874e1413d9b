//! Third derivative of z⁻³ + z⁻⁹ + z⁻¹⁰ with a tenth-order pole built into
//! the matrix: the error drops to rounding level once N reaches the
//! exactness bound.

use merodiff::diffmat::min_nodes_exact;
use merodiff::experiments::{table1, TABLE1_DERIVATIVE, TABLE1_POLE_ORDER};
use merodiff::{Complex64, PoleSet, Result};

fn main() -> Result<()> {
    let poles = PoleSet::single(Complex64::new(0.0, 0.0), TABLE1_POLE_ORDER);
    // z⁻³ + z⁻⁹ + z⁻¹⁰ = (z⁷ + z + 1)/z¹⁰.
    let bound = min_nodes_exact(7, &poles, TABLE1_DERIVATIVE);
    println!(
        "exact from N = {} (conservative count {})\n",
        bound.tight, bound.conservative
    );
    println!("{:>3}  {:>12}", "N", "rel. error");
    for row in table1(4, 11)? {
        println!("{:>3}  {:>12.3e}", row.n, row.error);
    }
    Ok(())
}
