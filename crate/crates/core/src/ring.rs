//! The minimal algebraic interface shared by every coefficient type in the
//! crate: rationals, Grassmann elements, polynomials over either.
//!
//! Every implementor is an associative algebra over the rationals. Multiplication
//! is not assumed to be commutative; routines that need commutativity (the
//! determinant family) check [`Ring::is_central`] on their inputs.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. Always normalized: positive denominator,
/// coprime parts, zero stored as `0/1`.
pub type Rational = BigRational;

pub trait Ring: Clone + Debug + PartialEq {
    /// Additive identity living in the same ambient space as `self`.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity living in the same ambient space as `self`.
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;

    /// Whether this element commutes with every other element of its ring.
    fn is_central(&self) -> bool {
        true
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"`, `"-n"` or `"n/d"` (no decimals, no whitespace inside).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::Invalid(format!("rational {s:?}: {msg}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let check = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !check(num) {
        return Err(bad("malformed numerator"));
    }
    let n: BigInt = num.parse().map_err(|_| bad("malformed numerator"))?;
    let d: BigInt = match den {
        Some(d) => {
            if d.starts_with('-') || !check(d) {
                return Err(bad("malformed denominator"));
            }
            d.parse().map_err(|_| bad("malformed denominator"))?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Canonical string form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub(crate) fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["0", "3", "-7", "1/2", "-5/6"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("2/4").unwrap(), ratio(1, 2));
        assert_eq!(format_rational(&parse_rational("0/9").unwrap()), "0");
    }

    #[test]
    fn rational_rejects_garbage() {
        for s in ["", "1.5", "1/0", "a", "1/", "/2", "--1", "1/-2x"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn canonical_denominator_positive() {
        let r = parse_rational("3/-6");
        assert!(r.is_err());
        let r = Rational::new(BigInt::from(3), BigInt::from(-6));
        assert_eq!(r, ratio(-1, 2));
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&ratio(2, 1)), None);
        assert_eq!(rational_sqrt(&ratio(-1, 1)), None);
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(Ring::pow(&ratio(2, 3), 5), ratio(32, 243));
        assert_eq!(Ring::pow(&ratio(2, 3), 0), rat(1));
    }
}
