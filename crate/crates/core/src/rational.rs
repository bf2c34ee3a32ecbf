//! Exact rational arithmetic.
//!
//! All fractional intermediates in the action-counting formulas are carried
//! as arbitrary-precision rationals; nothing is ever rounded. Integrality of
//! a final result is asserted by the caller, never assumed.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// Arbitrary-precision rational, always reduced, denominator always positive.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn integer(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The reduced fraction `num/den`. Panics if `den` is zero.
pub fn ratio(num: i64, den: u64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Extracts `r` as a `u64` if it is a nonnegative integer that fits.
pub fn to_exact_u64(r: &Rational) -> Option<u64> {
    if r.is_integer() && !r.is_negative() {
        r.to_integer().to_u64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_reduces() {
        let r = ratio(4, 6);
        assert_eq!(r, ratio(2, 3));
        assert_eq!(r.numer(), &BigInt::from(2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(to_exact_u64(&(ratio(1, 6) + ratio(5, 6))), Some(1));
        assert_eq!(to_exact_u64(&ratio(1, 2)), None);
        assert_eq!(to_exact_u64(&ratio(-3, 1)), None);
    }
}
