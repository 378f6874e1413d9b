//! Weierstrass ℘ and ℘′ for a lattice given by two full periods.
//!
//! The invariants come from the Eisenstein q-series of a reduced basis. A
//! point is reduced into the period cell centred at the origin and ℘, ℘′ are
//! summed from their Fourier expansions in that basis.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::scalar::Complex64;

const MAX_FOURIER_TERMS: usize = 400;

#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassParams {
    /// Full periods with `Im(omega2/omega1) > 0`.
    pub omega1: Complex64,
    pub omega2: Complex64,
    pub g2: Complex64,
    pub g3: Complex64,
    /// Reduced basis: `|w1| ≤ |w2|`, `|Re(w2/w1)| ≤ 1/2`.
    reduced: (Complex64, Complex64),
    /// `n q^{2n} / (1 − q^{2n})` for `n = 1, 2, …`, `q = exp(iπ w2/w1)`.
    fourier: Vec<Complex64>,
    /// `η1/ω1` with `ω1 = w1/2`.
    eta_ratio: Complex64,
}

impl WeierstrassParams {
    pub fn from_periods(omega1: Complex64, omega2: Complex64) -> Result<Self> {
        if !(omega1.is_finite() && omega2.is_finite()) || omega1.norm() == 0.0 {
            return Err(Error::Domain("periods must be finite and non-zero".into()));
        }
        if (omega2 / omega1).im <= 0.0 {
            return Err(Error::Domain(format!(
                "need Im(omega2/omega1) > 0, got periods {omega1}, {omega2}"
            )));
        }
        let (w1, w2) = reduce_basis(omega1, omega2);
        let (g2, g3) = invariants(w1, w2);
        let tau = w2 / w1;
        let q2 = (Complex64::new(0.0, 2.0 * PI) * tau).exp();
        // Terms are bounded by |q|^{2n} e^{nπ Im τ} inside the reduced cell.
        let decay = (-PI * tau.im).exp();
        let mut fourier = Vec::new();
        let mut q2n = q2;
        let mut bound = decay;
        for n in 1..=MAX_FOURIER_TERMS {
            fourier.push(n as f64 * q2n / (1.0 - q2n));
            if (n * n) as f64 * bound < 1e-18 {
                break;
            }
            q2n *= q2;
            bound *= decay;
        }
        let half = w1 / 2.0;
        let sum: Complex64 = fourier.iter().sum();
        let eta_ratio = (PI / half).powi(2) / 12.0 * (1.0 - 24.0 * sum);
        Ok(WeierstrassParams {
            omega1,
            omega2,
            g2,
            g3,
            reduced: (w1, w2),
            fourier,
            eta_ratio,
        })
    }

    /// Lattice point nearest to `z` (within the reduced-basis rounding).
    fn nearest_lattice_point(&self, z: Complex64) -> Complex64 {
        let (w1, w2) = self.reduced;
        // Solve z = a·w1 + b·w2 for real a, b.
        let det = w1.re * w2.im - w1.im * w2.re;
        let a = (z.re * w2.im - z.im * w2.re) / det;
        let b = (w1.re * z.im - w1.im * z.re) / det;
        let base = a.floor() * w1 + b.floor() * w2;
        let mut best = base;
        let mut best_d = f64::INFINITY;
        for i in 0..=1 {
            for j in 0..=1 {
                let p = base + i as f64 * w1 + j as f64 * w2;
                let d = (z - p).norm();
                if d < best_d {
                    best = p;
                    best_d = d;
                }
            }
        }
        best
    }

    fn eval(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        if !z.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite argument {z}")));
        }
        let r = z - self.nearest_lattice_point(z);
        if r.norm() <= 1e-8 {
            return Err(Error::PoleProximity(format!("℘ at {z}")));
        }
        // ℘(z) = −η1/ω1 + c² csc²(cz) − 2(π/ω1)² Σ a_n cos(2ncz), c = π/(2ω1).
        let c = PI / self.reduced.0;
        let u = c * r;
        let (s, co) = (u.sin(), u.cos());
        let k = 2.0 * c;
        let mut sum = Complex64::new(0.0, 0.0);
        let mut dsum = Complex64::new(0.0, 0.0);
        for (idx, &a) in self.fourier.iter().enumerate() {
            let n = (idx + 1) as f64;
            let arg = 2.0 * n * u;
            sum += a * arg.cos();
            dsum += n * a * arg.sin();
        }
        let p = -self.eta_ratio + c * c / (s * s) - 2.0 * k * k * sum;
        let dp = -2.0 * c * c * c * co / (s * s * s) + 2.0 * k * k * k * dsum;
        if !(p.is_finite() && dp.is_finite()) {
            return Err(Error::NonFinite("weierstrass_p"));
        }
        Ok((p, dp))
    }
}

/// Gauss–Lagrange reduction keeping `Im(w2/w1) > 0`.
fn reduce_basis(mut w1: Complex64, mut w2: Complex64) -> (Complex64, Complex64) {
    for _ in 0..100 {
        if w2.norm() < w1.norm() {
            let t = w1;
            w1 = w2;
            w2 = -t;
        }
        let shift = (w2 / w1).re.round();
        if shift == 0.0 {
            break;
        }
        w2 -= shift * w1;
    }
    (w1, w2)
}

/// `g2 = 60 Σ' w⁻⁴`, `g3 = 140 Σ' w⁻⁶` from the q-expansions of E4 and E6.
fn invariants(w1: Complex64, w2: Complex64) -> (Complex64, Complex64) {
    let tau = w2 / w1;
    let q = (Complex64::new(0.0, 2.0 * PI) * tau).exp();
    let mut e4 = Complex64::new(1.0, 0.0);
    let mut e6 = Complex64::new(1.0, 0.0);
    let mut qn = q;
    for n in 1..200u32 {
        let (s3, s5) = divisor_sums(n);
        let d4 = 240.0 * s3 * qn;
        let d6 = -504.0 * s5 * qn;
        e4 += d4;
        e6 += d6;
        if d4.norm() < 1e-18 && d6.norm() < 1e-18 {
            break;
        }
        qn *= q;
    }
    let g4 = PI.powi(4) / 45.0 * e4 / w1.powi(4);
    let g6 = 2.0 * PI.powi(6) / 945.0 * e6 / w1.powi(6);
    (60.0 * g4, 140.0 * g6)
}

fn divisor_sums(n: u32) -> (f64, f64) {
    let mut s3 = 0.0;
    let mut s5 = 0.0;
    for d in 1..=n {
        if n.is_multiple_of(d) {
            let d = d as f64;
            s3 += d.powi(3);
            s5 += d.powi(5);
        }
    }
    (s3, s5)
}

/// `℘(z)` (`derivative = 0`) or `℘′(z)` (`derivative = 1`).
pub fn weierstrass_p(z: Complex64, params: &WeierstrassParams, derivative: u8) -> Result<Complex64> {
    let (p, dp) = params.eval(z)?;
    match derivative {
        0 => Ok(p),
        1 => Ok(dp),
        d => Err(Error::InvalidInput(format!("derivative must be 0 or 1, got {d}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn square() -> WeierstrassParams {
        WeierstrassParams::from_periods(c(2.0, 0.0), c(0.0, 2.0)).unwrap()
    }

    #[test]
    fn square_lattice_invariants() {
        let p = square();
        // Σ' (m + ni)⁻⁴ = Γ(1/4)⁸/(960π²); scaled by 2⁻⁴ for periods 2, 2i.
        assert!((p.g2 - c(11.817_045_008_077_116, 0.0)).norm() < 1e-12);
        assert!(p.g3.norm() < 1e-12);
    }

    #[test]
    fn matches_tail_corrected_lattice_sum() {
        // Reference from a direct lattice sum over |m|,|n| ≤ 150 with the
        // analytic w⁻⁴ tail added back.
        let p = square();
        let cases = [
            (c(0.7, 0.3), c(1.407_805_470_919_306, -0.986_075_559_005_977_8), c(-0.837_566_884_668_963_4, 4.754_311_752_292_104)),
            (c(1.2, 0.9), c(-0.088_832_048_319_350_8, 0.118_093_432_393_034_5), c(-1.185_679_365_733_055, 0.586_550_000_883_620_1)),
        ];
        for (z, wp, dwp) in cases {
            assert!((weierstrass_p(z, &p, 0).unwrap() - wp).norm() < 1e-12 * wp.norm().max(1.0));
            assert!((weierstrass_p(z, &p, 1).unwrap() - dwp).norm() < 1e-12 * dwp.norm().max(1.0));
        }
    }

    #[test]
    fn hexagonal_lattice_has_vanishing_g2() {
        let rho = Complex64::from_polar(1.0, PI / 3.0);
        let p = WeierstrassParams::from_periods(c(1.0, 0.0), rho).unwrap();
        assert!(p.g2.norm() < 1e-10 * p.g3.norm());
        // Differential equation ℘′² = 4℘³ − g3 holds away from the lattice.
        let z = c(0.31, 0.17);
        let (w, dw) = (weierstrass_p(z, &p, 0).unwrap(), weierstrass_p(z, &p, 1).unwrap());
        assert!((dw * dw - (4.0 * w * w * w - p.g3)).norm() < 1e-10 * (dw * dw).norm());
    }

    #[test]
    fn principal_part() {
        let p = square();
        let z = c(1e-3, 0.0) * Complex64::from_polar(1.0, 0.4);
        let v = weierstrass_p(z, &p, 0).unwrap() * z * z;
        assert!((v - 1.0).norm() < 1e-4);
    }

    #[test]
    fn rejects_bad_lattices_and_poles() {
        assert!(WeierstrassParams::from_periods(c(2.0, 0.0), c(4.0, 0.0)).is_err());
        assert!(WeierstrassParams::from_periods(c(0.0, 2.0), c(2.0, 0.0)).is_err());
        let p = square();
        assert!(matches!(weierstrass_p(c(2.0, 2.0), &p, 0), Err(Error::PoleProximity(_))));
        assert!(weierstrass_p(c(0.5, 0.5), &p, 2).is_err());
    }

    #[test]
    fn unreduced_basis_gives_same_function() {
        let a = square();
        let b = WeierstrassParams::from_periods(c(2.0, 0.0), c(6.0, 2.0)).unwrap();
        assert!((a.g2 - b.g2).norm() < 1e-12);
        let z = c(0.3, 0.55);
        assert!((weierstrass_p(z, &a, 0).unwrap() - weierstrass_p(z, &b, 0).unwrap()).norm() < 1e-12);
    }
}
