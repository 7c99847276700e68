//! Coefficient scalars.
//!
//! All symbolic layers are generic over [`Scalar`]. The default instantiation
//! is `Complex<BigRational>` (Gaussian rationals), which keeps every span
//! dimension and membership answer exact. `Complex<f64>` and `Complex<f32>`
//! are provided for numeric experiments; they satisfy the same interface but
//! give no exactness guarantees.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::Neg;

/// Ring of coefficients for polynomials, matrices and spans.
///
/// Requires exact equality semantics from the implementor's point of view:
/// the echelonization and normal-form code treats `==` as reliable.
pub trait Scalar:
    Clone + PartialEq + Debug + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// Complex conjugate.
    fn conjugate(&self) -> Self;

    /// Build a scalar from exact rational real and imaginary parts.
    fn from_rational_parts(re: BigRational, im: BigRational) -> Self;

    /// Lossy view as a double-precision complex number.
    fn to_complex64(&self) -> Complex<f64>;

    /// Whether the scalar is a nonnegative real (exactly for rational
    /// scalars, within a small tolerance for floating-point ones).
    fn is_nonneg_real(&self) -> bool;

    /// Canonical text form used by the polynomial printer. Must be
    /// re-readable by the polynomial parser.
    fn coeff_string(&self) -> String;

    fn from_int(v: i64) -> Self {
        Self::from_rational_parts(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational_parts(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    fn imaginary_unit() -> Self {
        Self::from_rational_parts(BigRational::zero(), BigRational::one())
    }
}

fn rat_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `3`, `-3/2`, `i`, `-2i`, `(3/2+1/2i)`, `(1-i)`, ...
fn gaussian_string(re: &BigRational, im: &BigRational) -> String {
    let imag_body = |im: &BigRational| -> String {
        let a = im.abs();
        if a.is_one() {
            "i".to_string()
        } else {
            format!("{}i", rat_string(&a))
        }
    };
    if im.is_zero() {
        rat_string(re)
    } else if re.is_zero() {
        if im.is_negative() {
            format!("-{}", imag_body(im))
        } else {
            imag_body(im)
        }
    } else {
        let sign = if im.is_negative() { '-' } else { '+' };
        format!("({}{}{})", rat_string(re), sign, imag_body(im))
    }
}

impl Scalar for Complex<BigRational> {
    fn conjugate(&self) -> Self {
        self.conj()
    }

    fn from_rational_parts(re: BigRational, im: BigRational) -> Self {
        Complex::new(re, im)
    }

    fn to_complex64(&self) -> Complex<f64> {
        Complex::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn is_nonneg_real(&self) -> bool {
        self.im.is_zero() && !self.re.is_negative()
    }

    fn coeff_string(&self) -> String {
        gaussian_string(&self.re, &self.im)
    }
}

macro_rules! float_scalar_impl {
    ($f:ty) => {
        impl Scalar for Complex<$f> {
            fn conjugate(&self) -> Self {
                self.conj()
            }

            fn from_rational_parts(re: BigRational, im: BigRational) -> Self {
                Complex::new(
                    re.to_f64().unwrap_or(f64::NAN) as $f,
                    im.to_f64().unwrap_or(f64::NAN) as $f,
                )
            }

            fn to_complex64(&self) -> Complex<f64> {
                Complex::new(self.re as f64, self.im as f64)
            }

            fn is_nonneg_real(&self) -> bool {
                self.im.abs() <= 1e-12 as $f && self.re >= -(1e-12 as $f)
            }

            fn coeff_string(&self) -> String {
                if self.im == 0.0 {
                    format!("{}", self.re)
                } else if self.re == 0.0 {
                    format!("{}i", self.im)
                } else if self.im < 0.0 {
                    format!("({}-{}i)", self.re, -self.im)
                } else {
                    format!("({}+{}i)", self.re, self.im)
                }
            }
        }
    };
}

float_scalar_impl!(f64);
float_scalar_impl!(f32);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coeff;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn coeff_strings_are_canonical() {
        let cases: Vec<(Coeff, &str)> = vec![
            (Coeff::from_int(3), "3"),
            (Coeff::from_int(-3), "-3"),
            (Coeff::from_ratio(3, 2), "3/2"),
            (Coeff::imaginary_unit(), "i"),
            (-Coeff::imaginary_unit(), "-i"),
            (Coeff::from_rational_parts(q(0, 1), q(1, 2)), "1/2i"),
            (Coeff::from_rational_parts(q(3, 2), q(1, 2)), "(3/2+1/2i)"),
            (Coeff::from_rational_parts(q(1, 1), q(-1, 1)), "(1-i)"),
        ];
        for (c, s) in cases {
            assert_eq!(c.coeff_string(), s);
        }
    }

    #[test]
    fn nonneg_real_is_exact() {
        assert!(Coeff::from_ratio(1, 3).is_nonneg_real());
        assert!(Coeff::zero().is_nonneg_real());
        assert!(!Coeff::from_int(-1).is_nonneg_real());
        assert!(!Coeff::imaginary_unit().is_nonneg_real());
    }
}
