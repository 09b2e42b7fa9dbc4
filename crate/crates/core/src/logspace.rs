//! Complex numbers stored as `(log|v|, arg v)`.

use num_complex::Complex;

use crate::scalar::{overflow_log_threshold, Real};

/// A complex value in polar log form. Zero is `ln_abs = -inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogComplex<T> {
    pub ln_abs: T,
    pub arg: T,
}

impl<T: Real> LogComplex<T> {
    pub fn new(ln_abs: T, arg: T) -> Self {
        Self { ln_abs, arg }
    }

    pub fn zero() -> Self {
        Self {
            ln_abs: T::neg_infinity(),
            arg: T::zero(),
        }
    }

    pub fn from_complex(z: Complex<T>) -> Self {
        if z.re.is_zero() && z.im.is_zero() {
            return Self::zero();
        }
        // hypot avoids squaring overflow
        Self {
            ln_abs: z.re.hypot(z.im).ln(),
            arg: z.im.atan2(z.re),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.ln_abs == T::neg_infinity()
    }

    pub fn mul(self, other: Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::new(self.ln_abs + other.ln_abs, self.arg + other.arg)
    }

    /// Multiplies by `exp(-shift)`, i.e. divides the magnitude by `e^shift`.
    pub fn rescale(self, shift: T) -> Self {
        if self.is_zero() {
            return self;
        }
        Self::new(self.ln_abs - shift, self.arg)
    }

    /// Linear value; `None` when `|v|` would exceed the overflow threshold.
    pub fn to_complex(self) -> Option<Complex<T>> {
        if self.is_zero() {
            return Some(Complex::new(T::zero(), T::zero()));
        }
        if self.ln_abs > overflow_log_threshold::<T>() || self.ln_abs.is_nan() {
            return None;
        }
        Some(Complex::from_polar(self.ln_abs.exp(), self.arg))
    }
}

/// `ln(sinh(a))` for `a > 0`, stable for large `a`.
pub fn ln_sinh<T: Real>(a: T) -> T {
    if a <= T::zero() {
        return T::nan();
    }
    // sinh(a) = e^a (1 - e^{-2a}) / 2
    let two = T::one() + T::one();
    a + (-(-two * a).exp()).ln_1p() - two.ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_zero() {
        let z = Complex::new(-3.0_f64, 4.0);
        let l = LogComplex::from_complex(z);
        assert!((l.ln_abs - 5.0_f64.ln()).abs() < 1e-15);
        let back = l.to_complex().unwrap();
        assert!((back - z).norm() < 1e-14);
        assert!(LogComplex::<f64>::from_complex(Complex::new(0.0, 0.0)).is_zero());
        assert_eq!(LogComplex::<f64>::zero().to_complex(), Some(Complex::new(0.0, 0.0)));
    }

    #[test]
    fn overflow_is_reported() {
        let huge = LogComplex::new(800.0_f64, 0.0);
        assert!(huge.to_complex().is_none());
        assert!(huge.rescale(790.0).to_complex().is_some());
    }

    #[test]
    fn ln_sinh_matches_direct_and_extends() {
        for a in [0.01_f64, 0.5, 1.0, 10.0, 300.0] {
            assert!((ln_sinh(a) - a.sinh().ln()).abs() < 1e-12 * a.max(1.0));
        }
        let big = ln_sinh(2000.0_f64);
        assert!((big - (2000.0 - 2.0_f64.ln())).abs() < 1e-12);
        assert!(ln_sinh(2000.0_f32).is_finite());
    }
}
