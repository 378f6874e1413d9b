//! The reference functions used as oracles: elliptic integrals, Jacobi and
//! Weierstrass elliptic functions and Kummer's function.

use merodiff::specfun::{elliptic_k, jacobi_sn_cn_dn, kummer_m, weierstrass_p, WeierstrassParams};
use merodiff::{Complex64, Result};

fn main() -> Result<()> {
    let k = elliptic_k(0.5)?;
    println!("K(1/2) = {k:.16}");

    let z = Complex64::new(0.7, 0.3);
    let (sn, cn, dn) = jacobi_sn_cn_dn(z, 0.5)?;
    println!("sn, cn, dn at {z}: {sn:.12}, {cn:.12}, {dn:.12}");
    println!("  sn² + cn² − 1 = {:.1e}", (sn * sn + cn * cn - 1.0).norm());

    let p = WeierstrassParams::from_periods(Complex64::new(2.0, 0.0), Complex64::new(0.0, 2.0))?;
    let (w, dw) = (weierstrass_p(z, &p, 0)?, weierstrass_p(z, &p, 1)?);
    println!("g2 = {:.12}, g3 = {:.1e}", p.g2.re, p.g3.norm());
    println!("℘, ℘′ at {z}: {w:.12}, {dw:.12}");
    println!("  ℘′² − 4℘³ + g2℘ + g3 = {:.1e}", (dw * dw - 4.0 * w * w * w + p.g2 * w + p.g3).norm());

    let b = Complex64::new(2.5, 0.0);
    println!("M(1/2, 5/2, {z}) = {:.12}", kummer_m(Complex64::new(0.5, 0.0), b, z)?);
    Ok(())
}
