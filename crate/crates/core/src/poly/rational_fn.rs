use std::fmt;

use num_traits::One;

use super::SPoly;
use crate::error::{Error, Result};
use crate::ring::{Rational, Ring};

/// Quotient of two [`SPoly`] values. Not reduced to lowest terms; equality is
/// decided by cross-multiplication.
#[derive(Clone)]
pub struct SRational {
    num: SPoly,
    den: SPoly,
}

impl SRational {
    pub fn new(num: SPoly, den: SPoly) -> Result<Self> {
        if den.is_empty() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        if num.symbols() != den.symbols() {
            return Err(Error::SymbolMismatch(num.symbols(), den.symbols()));
        }
        Ok(SRational { num, den })
    }

    pub fn from_poly(p: SPoly) -> Self {
        let den = SPoly::one(p.symbols());
        SRational { num: p, den }
    }

    pub fn numerator(&self) -> &SPoly {
        &self.num
    }

    pub fn denominator(&self) -> &SPoly {
        &self.den
    }

    fn den_is_one(&self) -> bool {
        self.den.len() == 1 && self.den.constant_term().is_one()
    }

    /// `factor · self` as a polynomial; fails unless the denominator divides
    /// `factor · numerator` exactly.
    pub fn clear_with(&self, factor: &SPoly) -> Result<SPoly> {
        if &self.den == factor {
            return Ok(self.num.clone());
        }
        self.num.try_mul(factor)?.divide_exact(&self.den)
    }

    /// Brings two fractions over a shared denominator, reusing one of the two
    /// when it is an exact multiple of the other.
    fn common(&self, other: &Self) -> (SPoly, SPoly, SPoly) {
        if self.den == other.den {
            return (self.num.clone(), other.num.clone(), self.den.clone());
        }
        if self.den_is_one() {
            return (
                self.num.mul(&other.den),
                other.num.clone(),
                other.den.clone(),
            );
        }
        if other.den_is_one() {
            return (self.num.clone(), other.num.mul(&self.den), self.den.clone());
        }
        if let Ok(k) = other.den.divide_exact(&self.den) {
            return (self.num.mul(&k), other.num.clone(), other.den.clone());
        }
        if let Ok(k) = self.den.divide_exact(&other.den) {
            return (self.num.clone(), other.num.mul(&k), self.den.clone());
        }
        (
            self.num.mul(&other.den),
            other.num.mul(&self.den),
            self.den.mul(&other.den),
        )
    }
}

impl PartialEq for SRational {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Ring for SRational {
    fn zero_like(&self) -> Self {
        SRational::from_poly(SPoly::zero(self.num.symbols()))
    }
    fn one_like(&self) -> Self {
        SRational::from_poly(SPoly::one(self.num.symbols()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, den) = self.common(other);
        SRational {
            num: a.add(&b),
            den,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.zero_like();
        }
        let den = if self.den_is_one() {
            other.den.clone()
        } else if other.den_is_one() {
            self.den.clone()
        } else {
            self.den.mul(&other.den)
        };
        SRational {
            num: self.num.mul(&other.num),
            den,
        }
    }
    fn neg(&self) -> Self {
        SRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        SRational {
            num: self.num.scale_by(c),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for SRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for SRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SRational({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_spoly;

    fn q(n: &str, d: &str) -> SRational {
        SRational::new(parse_spoly(n, 3).unwrap(), parse_spoly(d, 3).unwrap()).unwrap()
    }

    #[test]
    fn cross_multiplied_equality() {
        assert_eq!(q("S1^2 - S2", "2*S1"), q("1/2*S1^3 - 1/2*S2*S1", "S1^2"));
        assert_ne!(q("S1", "S2"), q("S2", "S1"));
    }

    #[test]
    fn sums_reuse_denominators() {
        let a = q("S2", "S1");
        let b = q("S3", "S1^2");
        let s = a.add(&b);
        assert_eq!(s.denominator(), &parse_spoly("S1^2", 3).unwrap());
        assert_eq!(s, q("S1*S2 + S3", "S1^2"));
        let one = a.one_like();
        assert_eq!(one.sub(&a).denominator(), a.denominator());
    }

    #[test]
    fn clearing_denominators() {
        let a = q("S2^2 - S1^2*S2", "S1^2");
        let d = parse_spoly("S1", 3).unwrap();
        assert_eq!(
            a.clear_with(&d.mul(&d)),
            Ok(parse_spoly("S2^2 - S1^2*S2", 3).unwrap())
        );
        assert_eq!(a.clear_with(&d), Err(Error::NotDivisible));
        assert!(SRational::new(SPoly::one(3), SPoly::zero(3)).is_err());
    }
}
