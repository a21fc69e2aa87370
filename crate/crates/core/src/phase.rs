//! Exact roots of unity.

use std::fmt;
use std::ops::{Div, Mul};

use num_complex::Complex;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::{c, Scalar};

/// A unit complex number `exp(2 pi i t)` with rational `t` (the angle in turns),
/// kept reduced to `0 <= t < 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "(i64, i64)", try_from = "(i64, i64)")]
pub struct Phase {
    turns: Ratio<i64>,
}

impl Phase {
    pub const ONE: Phase = Phase {
        turns: Ratio::new_raw(0, 1),
    };

    /// `exp(2 pi i num/den)`. Panics if `den == 0`.
    pub fn from_turns(num: i64, den: i64) -> Self {
        assert!(den != 0, "phase denominator must be non-zero");
        Self::normalized(Ratio::new(num, den))
    }

    /// `omega^k` with `omega = exp(2 pi i / n)`.
    pub fn root_of_unity(k: i64, n: u32) -> Self {
        Self::from_turns(k, i64::from(n))
    }

    pub fn minus_one() -> Self {
        Self::from_turns(1, 2)
    }

    fn normalized(turns: Ratio<i64>) -> Self {
        let numer = turns.numer().mod_floor(turns.denom());
        Phase {
            turns: Ratio::new(numer, *turns.denom()),
        }
    }

    pub fn turns(&self) -> Ratio<i64> {
        self.turns
    }

    pub fn is_one(&self) -> bool {
        self.turns.is_zero()
    }

    pub fn conj(self) -> Self {
        Self::normalized(-self.turns)
    }

    pub fn pow(self, k: i64) -> Self {
        Self::normalized(self.turns * Ratio::from_integer(k))
    }

    /// Angle in `(-pi, pi]`.
    pub fn angle<T: Scalar>(&self) -> T {
        let half = Ratio::new(1, 2);
        let t = if self.turns > half {
            self.turns - Ratio::one()
        } else {
            self.turns
        };
        let two_pi = T::PI() + T::PI();
        two_pi * T::from_f64_lossy(*t.numer() as f64) / T::from_f64_lossy(*t.denom() as f64)
    }

    /// Complex value; quarter turns are produced exactly.
    pub fn to_complex<T: Scalar>(&self) -> Complex<T> {
        let (n, d) = (*self.turns.numer(), *self.turns.denom());
        match (n, d) {
            (0, 1) => c(T::one(), T::zero()),
            (1, 2) => c(-T::one(), T::zero()),
            (1, 4) => c(T::zero(), T::one()),
            (3, 4) => c(T::zero(), -T::one()),
            _ => {
                let theta = self.angle::<T>();
                c(theta.cos(), theta.sin())
            }
        }
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::ONE
    }
}

// multiplying unit phases adds their angles
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase::normalized(self.turns + rhs.turns)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for Phase {
    type Output = Phase;

    fn div(self, rhs: Phase) -> Phase {
        Phase::normalized(self.turns - rhs.turns)
    }
}

impl std::iter::Product for Phase {
    fn product<I: Iterator<Item = Phase>>(iter: I) -> Phase {
        iter.fold(Phase::ONE, |acc, p| acc * p)
    }
}

impl From<Phase> for (i64, i64) {
    fn from(p: Phase) -> Self {
        (*p.turns.numer(), *p.turns.denom())
    }
}

impl TryFrom<(i64, i64)> for Phase {
    type Error = String;

    fn try_from((num, den): (i64, i64)) -> Result<Self, Self::Error> {
        if den == 0 {
            return Err("phase denominator must be non-zero".into());
        }
        Ok(Phase::from_turns(num, den))
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phase({}/{})", self.turns.numer(), self.turns.denom())
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (*self.turns.numer(), *self.turns.denom()) {
            (0, 1) => write!(f, "1"),
            (1, 2) => write!(f, "-1"),
            (1, 4) => write!(f, "i"),
            (3, 4) => write!(f, "-i"),
            (n, d) => write!(f, "exp(2πi·{n}/{d})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_into_unit_interval() {
        assert_eq!(Phase::from_turns(4, 3), Phase::from_turns(1, 3));
        assert_eq!(Phase::from_turns(-1, 3), Phase::from_turns(2, 3));
        assert_eq!(Phase::from_turns(2, 4), Phase::minus_one());
        assert!(Phase::from_turns(3, 3).is_one());
    }

    #[test]
    fn multiplication_adds_turns() {
        let w = Phase::root_of_unity(1, 3);
        assert_eq!(w * w, w.conj());
        assert!((w * w * w).is_one());
        assert_eq!(Phase::minus_one() * Phase::minus_one(), Phase::ONE);
        assert_eq!(w.pow(-1), w.conj());
    }

    #[test]
    fn quarter_turns_are_exact() {
        assert_eq!(Phase::minus_one().to_complex::<f64>(), Complex::new(-1.0, 0.0));
        assert_eq!(Phase::from_turns(1, 4).to_complex::<f64>(), Complex::new(0.0, 1.0));
        assert_eq!(Phase::ONE.to_complex::<f32>(), Complex::new(1.0, 0.0));
    }

    #[test]
    fn angle_branch() {
        assert_eq!(Phase::minus_one().angle::<f64>(), std::f64::consts::PI);
        let w = Phase::root_of_unity(2, 3).angle::<f64>();
        assert!((w + 2.0 * std::f64::consts::PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn omega_value() {
        let w = Phase::root_of_unity(1, 3).to_complex::<f64>();
        assert!((w.re + 0.5).abs() < 1e-15);
        assert!((w.im - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn serde_as_pair() {
        let w = Phase::root_of_unity(2, 3);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, "[2,3]");
        let back: Phase = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }
}
