//! Grassmann (exterior) algebra on `N` anticommuting generators with exact
//! rational coefficients.
//!
//! A [`Blade`] is a product of distinct generators θᵢ in increasing index order,
//! stored as a bitmask (bit `i-1` set means θᵢ is present). A [`Multivector`] is a
//! sparse rational combination of blades; zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{format_rational, parse_rational, Rational, Ring};

/// Largest supported generator count (blades are `u64` masks).
pub const MAX_GENERATORS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Blade(u64);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Builds a blade from 1-based generator indices, which must be strictly
    /// increasing.
    pub fn from_indices(indices: &[usize], generators: usize) -> Result<Blade> {
        let mut mask = 0u64;
        let mut prev = 0usize;
        for &i in indices {
            if i == 0 || i > generators || i > MAX_GENERATORS {
                return Err(Error::BladeIndex {
                    index: i,
                    generators,
                });
            }
            if i <= prev {
                return Err(Error::Invalid(format!(
                    "blade indices must be strictly increasing: {indices:?}"
                )));
            }
            prev = i;
            mask |= 1 << (i - 1);
        }
        Ok(Blade(mask))
    }

    pub fn from_mask(mask: u64) -> Blade {
        Blade(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    /// Highest generator index present (0 for the scalar blade).
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// 1-based generator indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.grade() as usize);
        let mut m = self.0;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out.push(i + 1);
            m &= m - 1;
        }
        out
    }
}

/// Product of two blades: `(sign, blade)` with sign in {-1, 0, +1}.
///
/// The sign counts the transpositions needed to merge the two index lists
/// into increasing order; it is 0 when a generator repeats.
pub fn blade_mul(a: Blade, b: Blade) -> (i8, Blade) {
    if a.0 & b.0 != 0 {
        return (0, Blade::SCALAR);
    }
    // Each generator of `b` must move left past every generator of `a` with a
    // larger index.
    let mut swaps = 0u32;
    let mut m = b.0;
    while m != 0 {
        let j = m.trailing_zeros();
        let above = if j == 63 { 0 } else { a.0 >> (j + 1) };
        swaps += above.count_ones();
        m &= m - 1;
    }
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    (sign, Blade(a.0 | b.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    generators: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero(generators: usize) -> Self {
        assert!(
            generators <= MAX_GENERATORS,
            "at most {MAX_GENERATORS} generators"
        );
        Multivector {
            generators,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(generators: usize, c: Rational) -> Self {
        let mut m = Self::zero(generators);
        if !c.is_zero() {
            m.terms.insert(Blade::SCALAR, c);
        }
        m
    }

    pub fn one(generators: usize) -> Self {
        Self::scalar(generators, Rational::one())
    }

    /// The single generator θᵢ (1-based).
    pub fn generator(generators: usize, i: usize) -> Result<Self> {
        Self::term(generators, &[i], Rational::one())
    }

    pub fn term(generators: usize, indices: &[usize], c: Rational) -> Result<Self> {
        let blade = Blade::from_indices(indices, generators)?;
        let mut m = Self::zero(generators);
        if !c.is_zero() {
            m.terms.insert(blade, c);
        }
        Ok(m)
    }

    /// Builds from `(indices, coefficient)` pairs; repeated blades are summed.
    pub fn from_terms<I>(generators: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Rational)>,
    {
        if generators > MAX_GENERATORS {
            return Err(Error::Invalid(format!(
                "at most {MAX_GENERATORS} generators"
            )));
        }
        let mut m = Self::zero(generators);
        for (idx, c) in terms {
            let b = Blade::from_indices(&idx, generators)?;
            m.accumulate(b, c);
        }
        Ok(m)
    }

    fn accumulate(&mut self, blade: Blade, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> Rational {
        self.terms
            .get(&blade)
            .cloned()
            .unwrap_or_else(|| Rational::from_integer(0.into()))
    }

    pub fn body(&self) -> Rational {
        self.coeff(Blade::SCALAR)
    }

    pub fn soul(&self) -> Multivector {
        let mut s = self.clone();
        s.terms.remove(&Blade::SCALAR);
        s
    }

    /// Strips the soul, keeping the scalar part as a multivector.
    pub fn body_part(&self) -> Multivector {
        Multivector::scalar(self.generators, self.body())
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| b.is_scalar())
    }

    /// `None` for mixed parity; zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut grades = self.terms.keys().map(|b| b.grade() % 2);
        match grades.next() {
            None => Some(Parity::Even),
            Some(g) => {
                if grades.all(|h| h == g) {
                    Some(if g == 0 { Parity::Even } else { Parity::Odd })
                } else {
                    None
                }
            }
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 1)
    }

    pub fn max_grade(&self) -> u32 {
        self.terms.keys().map(|b| b.grade()).max().unwrap_or(0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.generators != other.generators {
            return Err(Error::GeneratorMismatch(self.generators, other.generators));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.accumulate(*b, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.accumulate(*b, -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.generators);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                let (sign, blade) = blade_mul(*ba, *bb);
                match sign {
                    0 => {}
                    1 => out.accumulate(blade, ca * cb),
                    _ => out.accumulate(blade, -(ca * cb)),
                }
            }
        }
        Ok(out)
    }

    pub fn scale_by(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.generators);
        }
        Multivector {
            generators: self.generators,
            terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect(),
        }
    }

    /// Inverse of an even element with nonzero body, via the terminating
    /// geometric series body⁻¹·Σ(−soul/body)ᵏ.
    pub fn even_inverse(&self) -> Result<Self> {
        if !self.is_even() {
            return Err(Error::Parity("inverse requires an even element".into()));
        }
        let body = self.body();
        if body.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv_body = body.recip();
        let step = self.soul().scale_by(&-inv_body.clone());
        let mut term = Self::one(self.generators);
        let mut sum = term.clone();
        loop {
            term = &term * &step;
            if term.is_empty() {
                break;
            }
            sum = &sum + &term;
        }
        Ok(sum.scale_by(&inv_body))
    }

    /// Re-embeds into an algebra with at least as many generators.
    pub fn with_generators(&self, generators: usize) -> Result<Self> {
        let highest = self.terms.keys().map(|b| b.max_index()).max().unwrap_or(0);
        if highest > generators {
            return Err(Error::BladeIndex {
                index: highest,
                generators,
            });
        }
        Ok(Multivector {
            generators,
            terms: self.terms.clone(),
        })
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("multivector addition")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("multivector subtraction")
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.try_mul(rhs).expect("multivector product")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            generators: self.generators,
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl Ring for Multivector {
    fn zero_like(&self) -> Self {
        Multivector::zero(self.generators)
    }
    fn one_like(&self) -> Self {
        Multivector::one(self.generators)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        self.scale_by(c)
    }
    fn is_central(&self) -> bool {
        self.is_even()
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(b, _)| (b.grade(), b.indices()));
        for (i, (b, c)) in terms.into_iter().enumerate() {
            let neg = crate::ring::is_negative(c);
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let name: String = b.indices().iter().map(|i| format!("θ{i}")).collect();
            if b.is_scalar() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}{name}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector[N={}]({self})", self.generators)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    blade: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct MultivectorJson {
    #[serde(rename = "N")]
    n: usize,
    terms: Vec<TermJson>,
}

impl From<&Multivector> for MultivectorJson {
    fn from(m: &Multivector) -> Self {
        let mut terms: Vec<_> = m.terms.iter().collect();
        terms.sort_by_key(|(b, _)| (b.grade(), b.indices()));
        MultivectorJson {
            n: m.generators,
            terms: terms
                .into_iter()
                .map(|(b, c)| TermJson {
                    blade: b.indices(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<MultivectorJson> for Multivector {
    type Error = Error;
    fn try_from(j: MultivectorJson) -> Result<Self> {
        let terms = j
            .terms
            .into_iter()
            .map(|t| Ok((t.blade, parse_rational(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        Multivector::from_terms(j.n, terms)
    }
}

impl Serialize for Multivector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultivectorJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MultivectorJson::deserialize(d)?;
        Multivector::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl Multivector {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("multivector serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    fn th(n: usize, idx: &[usize]) -> Multivector {
        Multivector::term(n, idx, rat(1)).unwrap()
    }

    fn b(idx: &[usize]) -> Blade {
        Blade::from_indices(idx, 6).unwrap()
    }

    #[test]
    fn blade_products() {
        assert_eq!(blade_mul(b(&[1]), b(&[2])), (1, b(&[1, 2])));
        assert_eq!(blade_mul(b(&[2]), b(&[1])), (-1, b(&[1, 2])));
        assert_eq!(blade_mul(b(&[1]), b(&[1])).0, 0);
        assert_eq!(blade_mul(b(&[1, 3]), b(&[2])), (-1, b(&[1, 2, 3])));
        assert_eq!(blade_mul(b(&[]), b(&[4, 5])), (1, b(&[4, 5])));
    }

    #[test]
    fn blade_validation() {
        assert!(Blade::from_indices(&[2, 1], 4).is_err());
        assert!(Blade::from_indices(&[1, 1], 4).is_err());
        assert!(Blade::from_indices(&[5], 4).is_err());
        assert!(Blade::from_indices(&[0], 4).is_err());
        assert_eq!(b(&[1, 4, 6]).indices(), vec![1, 4, 6]);
        assert_eq!(b(&[1, 4, 6]).grade(), 3);
    }

    #[test]
    fn addition() {
        let n = 3;
        let a = &Multivector::scalar(n, rat(1)) + &th(n, &[1, 2]);
        assert_eq!(&a + &Multivector::zero(n), a);
        let t = th(n, &[1]);
        assert!((&t + &t.scale_by(&rat(-1))).is_empty());
        let c = &Multivector::scalar(n, rat(2)) - &th(n, &[1, 2]);
        assert_eq!(&a + &c, Multivector::scalar(n, rat(3)));
    }

    #[test]
    fn products() {
        let n = 3;
        let one = Multivector::one(n);
        let t1 = th(n, &[1]);
        assert_eq!(&(&one + &t1) * &(&one - &t1), one);
        assert_eq!(&t1 * &th(n, &[2, 3]), th(n, &[1, 2, 3]));
        assert!((&th(n, &[1, 2]) * &th(n, &[1, 3])).is_empty());
        assert_eq!(&th(n, &[2]) * &th(n, &[1]), -&th(n, &[1, 2]));
    }

    #[test]
    fn mismatched_generators() {
        let a = Multivector::one(2);
        let c = Multivector::one(3);
        assert_eq!(a.try_add(&c), Err(Error::GeneratorMismatch(2, 3)));
        assert_eq!(a.try_mul(&c), Err(Error::GeneratorMismatch(2, 3)));
    }

    #[test]
    fn body_and_soul() {
        let n = 2;
        let a = &Multivector::scalar(n, rat(3)) + &th(n, &[1, 2]).scale_by(&rat(2));
        assert_eq!(a.body(), rat(3));
        assert_eq!(a.soul(), th(n, &[1, 2]).scale_by(&rat(2)));
        assert_eq!(th(n, &[1]).body(), rat(0));
    }

    #[test]
    fn inverses() {
        let n = 2;
        let one = Multivector::one(n);
        let a = &one + &th(n, &[1, 2]);
        assert_eq!(a.even_inverse().unwrap(), &one - &th(n, &[1, 2]));
        assert_eq!(
            Multivector::scalar(n, rat(2)).even_inverse().unwrap(),
            Multivector::scalar(n, ratio(1, 2))
        );
        assert_eq!(th(n, &[1, 2]).even_inverse(), Err(Error::NotInvertible));
        assert!(matches!(
            (&one + &th(n, &[1])).even_inverse(),
            Err(Error::Parity(_))
        ));
    }

    #[test]
    fn parity_classification() {
        let n = 4;
        assert_eq!(th(n, &[1]).parity(), Some(Parity::Odd));
        assert_eq!(th(n, &[1, 2]).parity(), Some(Parity::Even));
        assert_eq!(Multivector::zero(n).parity(), Some(Parity::Even));
        assert_eq!((&th(n, &[1]) + &th(n, &[1, 2])).parity(), None);
    }

    #[test]
    fn display_and_json() {
        let n = 3;
        let a = &(&Multivector::scalar(n, rat(3)) + &th(n, &[1, 2]).scale_by(&ratio(-1, 2)))
            + &th(n, &[3]);
        assert_eq!(a.to_string(), "3 + θ3 - 1/2θ1θ2");
        let json = a.to_json();
        assert_eq!(
            json,
            r#"{"N":3,"terms":[{"blade":[],"coeff":"3"},{"blade":[3],"coeff":"1"},{"blade":[1,2],"coeff":"-1/2"}]}"#
        );
        assert_eq!(Multivector::from_json(&json).unwrap(), a);
        assert!(Multivector::from_json(r#"{"N":2,"terms":[{"blade":[3],"coeff":"1"}]}"#).is_err());
        assert!(
            Multivector::from_json(r#"{"N":2,"terms":[{"blade":[1],"coeff":"0.5"}]}"#).is_err()
        );
    }
}
