//! Periodic-meromorphic differentiation of sn(z|1/2) and ℘(z), with and
//! without the pole correction.

use merodiff::experiments::{elliptic_sweep, EllipticConfig};
use merodiff::Result;

fn main() -> Result<()> {
    let ns: Vec<usize> = (5..=21).step_by(2).collect();
    let jacobi = EllipticConfig::jacobi();
    let uncorrected = EllipticConfig {
        pole_order: Some(0),
        ..EllipticConfig::jacobi()
    };
    let weierstrass = EllipticConfig::weierstrass();

    let a = elliptic_sweep(&jacobi, &ns)?;
    let b = elliptic_sweep(&uncorrected, &ns)?;
    let c = elliptic_sweep(&weierstrass, &ns)?;
    println!("{:>3}  {:>12}  {:>14}  {:>12}", "N", "sn", "sn, no poles", "℘");
    for ((a, b), c) in a.iter().zip(&b).zip(&c) {
        println!("{:>3}  {:>12.3e}  {:>14.3e}  {:>12.3e}", a.n, a.error, b.error, c.error);
    }
    Ok(())
}
