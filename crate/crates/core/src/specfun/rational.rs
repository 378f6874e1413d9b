use crate::error::{Error, Result};
use crate::scalar::Complex64;

/// `(z^7 + z + 1)/z^10 = z^-3 + z^-9 + z^-10` as (coefficient, exponent).
const TERMS: [(f64, i32); 3] = [(1.0, -3), (1.0, -9), (1.0, -10)];

/// `order`-th derivative of `(z^7 + z + 1)/z^10`, by the power rule term by term.
pub fn rational_test(z: Complex64, order: u32) -> Result<Complex64> {
    if z.norm() == 0.0 {
        return Err(Error::PoleProximity("rational test function at z = 0".into()));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (coeff, exp) in TERMS {
        let mut c = coeff;
        let mut e = exp;
        for _ in 0..order {
            c *= e as f64;
            e -= 1;
        }
        acc += c * z.powi(e);
    }
    Ok(acc)
}
