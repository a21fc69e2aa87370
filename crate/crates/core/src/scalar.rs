//! Floating-point abstraction shared by every numeric routine.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar type the numeric code is generic over (`f32` or `f64`).
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static
{
    /// Absolute tolerance used for "equal" comparisons between complex quantities.
    fn tolerance() -> Self;

    /// Convergence tolerance for iterative eigenvalue estimates.
    fn iteration_tolerance() -> Self;

    fn from_f64_lossy(value: f64) -> Self {
        Self::from_f64(value).expect("finite f64 converts to every Scalar")
    }
}

impl Scalar for f64 {
    fn tolerance() -> Self {
        1e-10
    }

    fn iteration_tolerance() -> Self {
        1e-13
    }
}

impl Scalar for f32 {
    fn tolerance() -> Self {
        1e-4
    }

    fn iteration_tolerance() -> Self {
        1e-6
    }
}

pub(crate) fn c<T: Scalar>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

pub(crate) fn one<T: Scalar>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}

pub(crate) fn zero<T: Scalar>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

/// `i^k` computed exactly.
pub(crate) fn i_pow<T: Scalar>(k: u8) -> Complex<T> {
    match k % 4 {
        0 => c(T::one(), T::zero()),
        1 => c(T::zero(), T::one()),
        2 => c(-T::one(), T::zero()),
        _ => c(T::zero(), -T::one()),
    }
}

/// Angle of `z` in `(-pi, pi]`; values within rounding of `-pi` report as `+pi`.
pub fn principal_angle<T: Scalar>(sin_part: T, cos_part: T) -> T {
    let angle = sin_part.atan2(cos_part);
    let eps = T::from_f64_lossy(1e-12).max(T::epsilon() * T::from_f64_lossy(8.0));
    if angle <= -T::PI() + eps {
        angle + T::PI() + T::PI()
    } else {
        angle
    }
}
