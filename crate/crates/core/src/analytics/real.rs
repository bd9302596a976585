//! A 256-bit arbitrary-precision real for bound evaluation.
//!
//! The bound and audit formulas mix scales like `2^{2n}` with `e^{-52}` at
//! `n` up to a few thousand; double precision overflows or loses the margin
//! long before the comparisons become meaningful. [`Real`] wraps a fixed
//! 256-bit-mantissa big float with the handful of operations the formulas
//! need, and converts to `f64` only at the reporting edge (as a value or as
//! a base-2 logarithm, whichever stays finite).

use astro_float::{BigFloat, Consts, RoundingMode};
use num_bigint::BigUint;
use std::cell::RefCell;
use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Mantissa precision (bits) for all computations.
pub const PRECISION: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(
        Consts::new().expect("constants cache allocates"),
    );
}

/// A 256-bit-precision real number.
#[derive(Clone, Debug)]
pub struct Real(BigFloat);

impl Real {
    pub fn zero() -> Self {
        Real(BigFloat::from_u64(0, PRECISION))
    }

    pub fn one() -> Self {
        Real(BigFloat::from_u64(1, PRECISION))
    }

    pub fn from_u64(v: u64) -> Self {
        Real(BigFloat::from_u64(v, PRECISION))
    }

    pub fn from_i64(v: i64) -> Self {
        Real(BigFloat::from_i64(v, PRECISION))
    }

    pub fn from_f64(v: f64) -> Self {
        Real(BigFloat::from_f64(v, PRECISION))
    }

    /// Exact ratio of two integers, rounded once at the division.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Real::from_i64(num) / Real::from_i64(den)
    }

    /// Converts an arbitrary-size non-negative integer (exact up to the
    /// mantissa width, correctly rounded beyond it).
    pub fn from_biguint(v: &BigUint) -> Self {
        let mut acc = Real::zero();
        let shift = Real::from_u64(1u64 << 32) * Real::from_u64(1u64 << 32);
        for digit in v.iter_u64_digits().rev() {
            acc = acc * shift.clone() + Real::from_u64(digit);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Real(self.0.abs())
    }

    /// Integer power by the underlying exponentiation-by-squaring.
    pub fn powi(&self, exponent: usize) -> Self {
        Real(self.0.powi(exponent, PRECISION, RM))
    }

    /// `2^exponent` for possibly negative exponents.
    pub fn pow2(exponent: i64) -> Self {
        let base = Real::from_u64(2).powi(exponent.unsigned_abs() as usize);
        if exponent >= 0 {
            base
        } else {
            base.recip()
        }
    }

    pub fn recip(&self) -> Self {
        Real(self.0.reciprocal(PRECISION, RM))
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.sqrt(PRECISION, RM))
    }

    pub fn exp(&self) -> Self {
        CONSTS.with(|c| Real(self.0.exp(PRECISION, RM, &mut c.borrow_mut())))
    }

    pub fn ln(&self) -> Self {
        CONSTS.with(|c| Real(self.0.ln(PRECISION, RM, &mut c.borrow_mut())))
    }

    pub fn log2(&self) -> Self {
        CONSTS.with(|c| Real(self.0.log2(PRECISION, RM, &mut c.borrow_mut())))
    }

    pub fn floor(&self) -> Self {
        Real(self.0.floor())
    }

    /// Nearest `f64` (overflowing to infinity, underflowing to zero).
    pub fn to_f64(&self) -> f64 {
        let x = &self.0;
        if x.is_nan() {
            return f64::NAN;
        }
        if x.is_inf_pos() {
            return f64::INFINITY;
        }
        if x.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        if x.is_zero() {
            return 0.0;
        }
        let (words, _, sign, exp, _) = x.as_raw_parts().expect("finite value has parts");
        let top = words.last().copied().unwrap_or(0) as f64;
        let mut mantissa = top;
        if words.len() >= 2 {
            mantissa += words[words.len() - 2] as f64 / 18_446_744_073_709_551_616.0;
        }
        let value = mantissa * 2f64.powi(exp - 64);
        if sign.is_negative() {
            -value
        } else {
            value
        }
    }

    /// `log2` of a positive value as `f64`; `-inf` at zero, NaN if negative.
    pub fn log2_f64(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        if self.is_negative() {
            return f64::NAN;
        }
        self.log2().to_f64()
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min(&self, other: &Real) -> Real {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `self ≤ rhs` up to a relative slack of `2^slack_log2` on the right
    /// side — the comparison used by the audits, where float rounding at the
    /// last bits must not flip a genuine inequality.
    pub fn le_with_slack(&self, rhs: &Real, slack_log2: i64) -> bool {
        let slack = rhs.abs() * Real::pow2(slack_log2);
        *self <= rhs.clone() + slack
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        matches!(self.partial_cmp(other), Some(Ordering::Equal))
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.0.sub(&other.0, PRECISION, RM);
        if diff.is_nan() {
            None
        } else if diff.is_zero() {
            Some(Ordering::Equal)
        } else if diff.is_negative() {
            Some(Ordering::Less)
        } else {
            Some(Ordering::Greater)
        }
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident, $raw:ident) => {
        impl $trait for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                Real(self.0.$raw(&rhs.0, PRECISION, RM))
            }
        }
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real(self.0.$raw(&rhs.0, PRECISION, RM))
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real(self.0.$raw(&rhs.0, PRECISION, RM))
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                Real(self.0.$raw(&rhs.0, PRECISION, RM))
            }
        }
    };
}

real_binop!(Add, add, add);
real_binop!(Sub, sub, sub);
real_binop!(Mul, mul, mul);
real_binop!(Div, div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.neg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use num_traits::One;

    #[test]
    fn arithmetic_and_conversion_round_trip() {
        let a = Real::from_u64(3);
        let b = Real::from_u64(4);
        assert_eq!((a.clone() * a + b.clone() * b).sqrt().to_f64(), 5.0);
        assert_eq!(Real::from_ratio(1, 8).to_f64(), 0.125);
        assert_eq!(Real::pow2(-3).to_f64(), 0.125);
        assert_eq!(Real::pow2(100).log2_f64(), 100.0);
    }

    #[test]
    fn exp_and_ln_are_inverse_at_precision_far_beyond_f64() {
        let x = Real::from_f64(13.0);
        let roundtrip = x.exp().ln();
        let err = (roundtrip - x).abs();
        assert!(err < Real::pow2(-200));
    }

    #[test]
    fn huge_and_tiny_scales_report_through_log2() {
        let huge = Real::pow2(4000) * Real::from_u64(3);
        assert_eq!(huge.to_f64(), f64::INFINITY);
        assert!((huge.log2_f64() - (4000.0 + 3f64.log2())).abs() < 1e-12);
        let tiny = Real::pow2(-4000);
        assert_eq!(tiny.to_f64(), 0.0);
        assert_eq!(tiny.log2_f64(), -4000.0);
    }

    #[test]
    fn biguint_conversion_is_exact_below_the_mantissa_width() {
        let v = (BigUint::one() << 200u32) + BigUint::from(12345u64);
        let r = Real::from_biguint(&v);
        let back = r - Real::pow2(200);
        assert_eq!(back.to_f64(), 12345.0);
    }

    #[test]
    fn comparisons_and_slack() {
        let a = Real::from_u64(1);
        let b = a.clone() + Real::pow2(-100);
        assert!(a < b);
        assert!(b.le_with_slack(&a, -90));
        assert!(!b.le_with_slack(&a, -110));
        assert!((-Real::from_u64(2)).is_negative());
    }

    #[test]
    fn floor_truncates_toward_negative_infinity() {
        assert_eq!(Real::from_f64(2.999).floor().to_f64(), 2.0);
        assert_eq!(Real::from_f64(-0.5).floor().to_f64(), -1.0);
    }
}
