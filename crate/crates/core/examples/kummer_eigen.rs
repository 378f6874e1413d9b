//! Smallest-modulus eigenpair of L = Z D² + (bI − Z) D on 21 nodes, compared
//! with the confluent hypergeometric function M(λ, b, z).

use merodiff::experiments::{kummer, KummerConfig};
use merodiff::{Basis, Complex64};

fn main() {
    for b in [Complex64::new(2.5, 0.0), Complex64::new(3.0, 2.0)] {
        for basis in [Basis::Algebraic, Basis::Trigonometric] {
            let cfg = KummerConfig {
                basis,
                ..KummerConfig::new(b)
            };
            match kummer(&cfg) {
                Ok(r) => println!(
                    "b = {b:<6} {basis:<13} λ = {:.6e}  error = {:.3e}  iterations = {}{}",
                    r.lambda_m,
                    r.error,
                    r.iterations,
                    if r.near_singular { "  (operator singular to pivot tolerance)" } else { "" }
                ),
                Err(e) => println!("b = {b:<6} {basis:<13} {e}"),
            }
        }
    }
}
