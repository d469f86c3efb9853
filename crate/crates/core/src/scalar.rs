//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The base field: arbitrary-precision rationals, always in lowest terms.
pub type Scalar = BigRational;

/// `n/d` as an exact scalar. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Canonical text form: `p` or `p/q`.
pub fn render(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form() {
        assert_eq!(q(2, 6), q(1, 3));
        assert_eq!(render(&q(-4, 6)), "-2/3");
        assert_eq!(render(&q(6, 3)), "2");
    }

    #[test]
    fn no_rounding() {
        let third = q(1, 3);
        assert_eq!(&third + &third + &third, one());
        let tiny = q(1, i64::MAX);
        assert_ne!(&tiny * &tiny, zero());
    }
}
