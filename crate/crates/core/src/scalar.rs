//! The numeric contract every matrix routine is written against.
//!
//! All linear algebra and matrix construction is generic over [`Scalar`], so
//! an extended-precision complex type can be dropped in without touching the
//! algorithms. The only implementation shipped here is [`Complex64`].

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub use num_complex::Complex64;

pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_parts(re: f64, im: f64) -> Self;
    fn from_complex(z: Complex64) -> Self;
    /// Nearest double-precision complex value.
    fn to_complex(self) -> Complex64;
    fn conj(self) -> Self;
    fn modulus(self) -> f64;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn is_finite(self) -> bool;

    fn from_real(x: f64) -> Self {
        Self::from_parts(x, 0.0)
    }

    /// Integer power by repeated squaring; never goes through a logarithm.
    fn powu(self, mut exp: u32) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            exp >>= 1;
            if exp > 0 {
                base *= base;
            }
        }
        acc
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_parts(re: f64, im: f64) -> Self {
        Complex64::new(re, im)
    }
    fn from_complex(z: Complex64) -> Self {
        z
    }
    fn to_complex(self) -> Complex64 {
        self
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn sin(self) -> Self {
        Complex64::sin(self)
    }
    fn cos(self) -> Self {
        Complex64::cos(self)
    }
    fn is_finite(self) -> bool {
        Complex64::is_finite(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powu_matches_repeated_multiplication() {
        let z = Complex64::new(0.3, -1.1);
        let mut expect = Complex64::one();
        for e in 0..14u32 {
            let got = Scalar::powu(z, e);
            assert!((got - expect).norm() <= 1e-14 * expect.norm().max(1.0), "e={e}");
            expect *= z;
        }
    }

    #[test]
    fn powu_zero_exponent_is_one() {
        assert_eq!(Scalar::powu(Complex64::new(0.0, 0.0), 0), Complex64::one());
    }
}
