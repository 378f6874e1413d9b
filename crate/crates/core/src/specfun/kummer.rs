use crate::error::{Error, Result};
use crate::scalar::Complex64;

const MAX_TERMS: usize = 10_000;
const QUIET_RUN: usize = 50;

/// Kummer's function `M(a, b, z) = Σ (a)_n / ((b)_n n!) zⁿ`.
///
/// For `Re z < 0` the series is summed for `e^z M(b − a, b, −z)` instead,
/// which has no cancellation between terms of alternating sign.
pub fn kummer_m(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    if b.im == 0.0 && b.re <= 0.0 && b.re.fract() == 0.0 {
        return Err(Error::Domain(format!("b = {} is a non-positive integer", b.re)));
    }
    if z.re < 0.0 {
        Ok(z.exp() * series(b - a, b, -z)?)
    } else {
        series(a, b, z)
    }
}

fn series(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut quiet = 0;
    for n in 0..MAX_TERMS {
        let k = n as f64;
        term *= (a + k) / ((b + k) * (k + 1.0)) * z;
        sum += term;
        if !sum.is_finite() {
            return Err(Error::NonFinite("kummer_m series"));
        }
        if term.norm() <= 1e-16 * sum.norm() {
            quiet += 1;
            if quiet == QUIET_RUN {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::SeriesNotConverged(MAX_TERMS))
}
