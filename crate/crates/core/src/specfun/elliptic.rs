//! Complete elliptic integral K(m) and Jacobi sn, cn, dn for complex argument.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::scalar::Complex64;

/// Below this parameter the circular-function limit (with its first-order
/// correction) is accurate to double precision.
const SMALL_M: f64 = 1e-9;

/// Complete elliptic integral of the first kind via the arithmetic-geometric mean.
pub fn elliptic_k(m: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&m) {
        return Err(Error::Domain(format!("elliptic K needs 0 ≤ m < 1, got {m}")));
    }
    let mut a = 1.0f64;
    let mut b = (1.0 - m).sqrt();
    for _ in 0..64 {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    Ok(PI / (2.0 * a))
}

/// Parameter `m` with its quarter periods `K = K(m)` and `K′ = K(1 − m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub m: f64,
    pub k: f64,
    /// Infinite for `m = 0`, where the pole lattice recedes to infinity.
    pub k_prime: f64,
}

impl JacobiParams {
    pub fn new(m: f64) -> Result<Self> {
        let k = elliptic_k(m)?;
        let k_prime = if m > 0.0 { elliptic_k(1.0 - m)? } else { f64::INFINITY };
        Ok(JacobiParams { m, k, k_prime })
    }

    /// The two poles of `sn` in the period cell `0 ≤ Re z < 4K`,
    /// `0 ≤ Im z < 2K′`: `iK′` and `2K + iK′`.
    pub fn cell_poles(&self) -> [Complex64; 2] {
        [
            Complex64::new(0.0, self.k_prime),
            Complex64::new(2.0 * self.k, self.k_prime),
        ]
    }

    /// Distance from `z` to the nearest pole `2jK + (2l + 1)iK′`.
    pub fn pole_distance(&self, z: Complex64) -> f64 {
        if !self.k_prime.is_finite() {
            return f64::INFINITY;
        }
        let j = (z.re / (2.0 * self.k)).round();
        let l = ((z.im - self.k_prime) / (2.0 * self.k_prime)).round();
        let pole = Complex64::new(2.0 * j * self.k, (2.0 * l + 1.0) * self.k_prime);
        (z - pole).norm()
    }
}

/// `(sn, cn, dn)(z | m)` by descending Landen transformations down to the
/// circular functions.
pub fn jacobi_sn_cn_dn(z: Complex64, m: f64) -> Result<(Complex64, Complex64, Complex64)> {
    let params = JacobiParams::new(m)?;
    if params.pole_distance(z) <= 1e-8 {
        return Err(Error::PoleProximity(format!("sn({z} | {m})")));
    }
    let out = landen(z, m);
    if !(out.0.is_finite() && out.1.is_finite() && out.2.is_finite()) {
        return Err(Error::NonFinite("jacobi_sn_cn_dn"));
    }
    Ok(out)
}

fn landen(u: Complex64, m: f64) -> (Complex64, Complex64, Complex64) {
    if m < SMALL_M {
        let (s, c) = (u.sin(), u.cos());
        let w = 0.25 * m * (u - s * c);
        return (s - w * c, c + w * s, 1.0 - 0.5 * m * s * s);
    }
    // √μ = (1 − √(1−m))/(1 + √(1−m)) = m/(1 + √(1−m))², free of cancellation.
    let root = (1.0 - m).sqrt();
    let sqrt_mu = m / ((1.0 + root) * (1.0 + root));
    let (sn, cn, dn) = landen(u / (1.0 + sqrt_mu), sqrt_mu * sqrt_mu);
    let sn2 = sn * sn;
    let den = 1.0 + sqrt_mu * sn2;
    (
        (1.0 + sqrt_mu) * sn / den,
        cn * dn / den,
        (1.0 - sqrt_mu * sn2) / den,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn k_special_values() {
        assert!((elliptic_k(0.0).unwrap() - PI / 2.0).abs() < 1e-15);
        let k = elliptic_k(0.5).unwrap();
        assert!((k - 1.854_074_677_301_371_9).abs() < 1e-14);
        assert_eq!(format!("{k:.3}"), "1.854");
        assert!(elliptic_k(1.0).is_err());
        assert!(elliptic_k(-0.1).is_err());
    }

    #[test]
    fn k_matches_trapezoid_quadrature() {
        // The integrand is smooth and π-periodic, so the trapezoid rule
        // converges geometrically.
        for m in [0.1, 0.5, 0.9] {
            let n = 400;
            let h = PI / 2.0 / n as f64;
            let f = |t: f64| 1.0 / (1.0 - m * t.sin().powi(2)).sqrt();
            let mut s = 0.5 * (f(0.0) + f(PI / 2.0));
            for i in 1..n {
                s += f(i as f64 * h);
            }
            assert!((s * h - elliptic_k(m).unwrap()).abs() < 1e-13, "m={m}");
        }
    }

    #[test]
    fn standard_values() {
        let (s, cn, d) = jacobi_sn_cn_dn(c(0.0, 0.0), 0.5).unwrap();
        assert_eq!((s, cn, d), (c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)));
        let k = elliptic_k(0.5).unwrap();
        let (s, _, _) = jacobi_sn_cn_dn(c(k, 0.0), 0.5).unwrap();
        assert!((s - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn matches_reference_values() {
        // Reference values from a 30-digit arbitrary-precision evaluation.
        let cases = [
            (
                c(0.7, 0.3),
                [
                    c(0.656_239_983_287_209_75, 0.211_245_270_838_480_21),
                    c(0.802_385_734_816_606_34, -0.172_769_264_194_647_15),
                    c(0.901_608_033_934_558_36, -0.076_877_971_239_666_434),
                ],
            ),
            (
                c(1.5, 1.2),
                [
                    c(1.296_529_855_238_745_9, 0.128_258_801_807_924_50),
                    c(0.198_214_891_630_926_91, -0.838_944_866_214_973_06),
                    c(0.449_400_446_867_589_90, -0.185_014_686_678_893_07),
                ],
            ),
            (
                c(-2.3, 0.8),
                [
                    c(-1.122_675_813_394_421_6, -0.158_139_481_105_911_55),
                    c(-0.308_726_735_303_972_38, 0.575_069_633_686_067_83),
                    c(0.633_963_780_149_850_25, -0.140_023_275_886_822_73),
                ],
            ),
        ];
        for (z, want) in cases {
            let (s, cn, d) = jacobi_sn_cn_dn(z, 0.5).unwrap();
            for (got, w) in [s, cn, d].into_iter().zip(want) {
                assert!((got - w).norm() <= 1e-13 * w.norm(), "z={z}: {got} vs {w}");
            }
        }
    }

    #[test]
    fn small_m_is_circular() {
        let z = c(0.4, -0.2);
        let (s, cn, d) = jacobi_sn_cn_dn(z, 0.0).unwrap();
        assert!((s - z.sin()).norm() < 1e-16);
        assert!((cn - z.cos()).norm() < 1e-16);
        assert_eq!(d, c(1.0, 0.0));
    }

    #[test]
    fn rejects_pole() {
        let p = JacobiParams::new(0.5).unwrap();
        for pole in p.cell_poles() {
            assert!(matches!(jacobi_sn_cn_dn(pole, 0.5), Err(Error::PoleProximity(_))));
        }
        let far = c(4.0 * p.k, 3.0 * p.k_prime);
        assert!(jacobi_sn_cn_dn(far, 0.5).is_err());
    }
}
