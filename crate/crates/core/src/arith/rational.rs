use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::ArithError;

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator. Displays as `p/q`, or `p` when `q = 1`.
pub type Rational = BigRational;

/// `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Division that reports a zero divisor instead of panicking.
pub fn try_div(a: &Rational, b: &Rational) -> Result<Rational, ArithError> {
    if b.is_zero() {
        Err(ArithError::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// Small conveniences on top of [`Rational`].
pub trait RationalExt {
    fn is_nonneg(&self) -> bool;
    /// The integer value, if the denominator is one.
    fn as_integer(&self) -> Option<&BigInt>;
}

impl RationalExt for Rational {
    fn is_nonneg(&self) -> bool {
        !self.is_negative()
    }

    fn as_integer(&self) -> Option<&BigInt> {
        self.is_integer().then(|| self.numer())
    }
}
