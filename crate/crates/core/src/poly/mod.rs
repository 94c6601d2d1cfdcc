//! Polynomials in the formal supertrace symbols `S1..Sn` over the rationals,
//! their quotients, and truncated power series in an auxiliary variable `t`.
//!
//! Symbol `Sj` carries weight `j`, so the *weighted* degree of a monomial
//! `S1^e1 ... Sn^en` is `Σ j·ej`. Monomials are ordered graded-lexicographically
//! on their plain exponent vectors (total degree first, then `S1` most
//! significant); that order drives division, square roots and rendering.

mod parse;
mod rational_fn;
mod series;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{format_rational, is_negative, parse_rational, rational_sqrt, Rational, Ring};

pub use parse::{parse_spoly, MAX_EXPONENT, MAX_TERMS};
pub use rational_fn::SRational;
pub use series::TruncSeries;

/// Exponent vector of a monomial, one entry per symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    total: u32,
    exps: Vec<u32>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total
            .cmp(&other.total)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let total = exps.iter().sum();
        Monomial { total, exps }
    }

    pub fn one(symbols: usize) -> Self {
        Monomial {
            total: 0,
            exps: vec![0; symbols],
        }
    }

    /// `Sj^e`, with `j` 1-based.
    pub fn power(symbols: usize, j: usize, e: u32) -> Self {
        let mut exps = vec![0; symbols];
        exps[j - 1] = e;
        Monomial { total: e, exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.total
    }

    pub fn weighted_degree(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .map(|(i, e)| (i as u32 + 1) * e)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.total == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            total: self.total + other.total,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Monomial {
            total: other.total - self.total,
            exps,
        }
    }

    fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    fn halve(&self) -> Option<Monomial> {
        if self.exps.iter().any(|e| e % 2 == 1) {
            return None;
        }
        Some(Monomial {
            total: self.total / 2,
            exps: self.exps.iter().map(|e| e / 2).collect(),
        })
    }
}

/// Sparse polynomial in `S1..Sn` with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SPoly {
    symbols: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl SPoly {
    pub fn zero(symbols: usize) -> Self {
        SPoly {
            symbols,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(symbols: usize, c: Rational) -> Self {
        let mut p = Self::zero(symbols);
        p.accumulate(Monomial::one(symbols), c);
        p
    }

    pub fn one(symbols: usize) -> Self {
        Self::constant(symbols, Rational::one())
    }

    /// The symbol `Sj` (1-based).
    pub fn symbol(symbols: usize, j: usize) -> Result<Self> {
        if j == 0 || j > symbols {
            return Err(Error::Invalid(format!(
                "symbol S{j} out of range 1..={symbols}"
            )));
        }
        Ok(Self::monomial(
            Monomial::power(symbols, j, 1),
            Rational::one(),
        ))
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.exps.len());
        p.accumulate(m, c);
        p
    }

    pub fn from_terms<I>(symbols: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(symbols);
        for (exps, c) in terms {
            if exps.len() != symbols {
                return Err(Error::SymbolMismatch(symbols, exps.len()));
            }
            p.accumulate(Monomial::new(exps), c);
        }
        Ok(p)
    }

    pub(crate) fn accumulate(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn symbols(&self) -> usize {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Rational::from_integer(0.into()))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.symbols))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.symbols != other.symbols {
            return Err(Error::SymbolMismatch(self.symbols, other.symbols));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                let slot = acc
                    .entry(ma.mul(mb))
                    .or_insert_with(|| Rational::from_integer(0.into()));
                *slot += c;
            }
        }
        Ok(SPoly {
            symbols: self.symbols,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale_by(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.symbols);
        }
        SPoly {
            symbols: self.symbols,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        SPoly {
            symbols: self.symbols,
            terms: self
                .terms
                .iter()
                .map(|(mm, x)| (mm.mul(m), x * c))
                .collect(),
        }
    }

    /// `(min, max)` weighted degree over all terms.
    pub fn weighted_degree(&self) -> Result<(u32, u32)> {
        let mut degs = self.terms.keys().map(Monomial::weighted_degree);
        let first = degs.next().ok_or(Error::ZeroPolynomial)?;
        Ok(degs.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    /// True iff nonzero and every term has weighted degree `k`.
    pub fn is_weighted_homogeneous(&self, k: u32) -> bool {
        matches!(self.weighted_degree(), Ok((lo, hi)) if lo == k && hi == k)
    }

    /// Exact quotient `self / divisor`, failing unless the remainder of
    /// multivariate division under the graded-lex order is zero.
    pub fn divide_exact(&self, divisor: &SPoly) -> Result<SPoly> {
        self.check(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(Error::NotDivisible)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = SPoly::zero(self.symbols);
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Err(Error::NotDivisible);
            }
            let qm = lm.quotient_of(m);
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                rem.accumulate(dm.mul(&qm), -(dc * &qc));
            }
            quot.accumulate(qm, qc);
        }
        Ok(quot)
    }

    /// Exact square root by leading-term peeling, normalized so the leading
    /// coefficient is positive.
    pub fn sqrt_exact(&self) -> Result<SPoly> {
        let (lm, lc) = match self.leading_term() {
            None => return Ok(self.clone()),
            Some(t) => t,
        };
        let min_total = self.terms.keys().next().map(|m| m.total).unwrap_or(0);
        let root_lm = lm.halve().ok_or(Error::NotSquare)?;
        let root_lc = rational_sqrt(lc).ok_or(Error::NotSquare)?;
        let twice_lead = &root_lc + &root_lc;
        let mut root = SPoly::monomial(root_lm.clone(), root_lc);
        let mut rem = self.try_sub(&root.try_mul(&root)?)?;
        let mut last = root_lm.clone();
        while let Some((m, c)) = rem.leading_term() {
            if !root_lm.divides(m) {
                return Err(Error::NotSquare);
            }
            let tm = root_lm.quotient_of(m);
            // Every term of the root is bounded below by half the trailing
            // degree of the square; past that the remainder can never cancel.
            if tm >= last || 2 * tm.total < min_total {
                return Err(Error::NotSquare);
            }
            let tc = c / &twice_lead;
            // (root + t)^2 - self = -rem + 2·root·t + t^2
            let t = SPoly::monomial(tm.clone(), tc.clone());
            let delta = root
                .scale_by(&Rational::from_integer(2.into()))
                .try_add(&t)?
                .mul_term(&tm, &tc);
            rem = rem.try_sub(&delta)?;
            root = root.try_add(&t)?;
            last = tm;
        }
        Ok(root)
    }

    /// Substitutes `Sj -> -Sj` for every symbol.
    pub fn flip_signs(&self) -> SPoly {
        SPoly {
            symbols: self.symbols,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), if m.total % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Sets the listed symbols (1-based) to zero.
    pub fn substitute_zero(&self, zeroed: &[usize]) -> SPoly {
        SPoly {
            symbols: self.symbols,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| zeroed.iter().all(|&j| m.exps[j - 1] == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Greatest monomial dividing every term (`1` for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.symbols),
            Some(first) => it.fold(first.clone(), |g, m| g.gcd(m)),
        }
    }

    pub fn divide_monomial(&self, m: &Monomial) -> Result<SPoly> {
        if !self.terms.keys().all(|t| m.divides(t)) {
            return Err(Error::NotDivisible);
        }
        Ok(SPoly {
            symbols: self.symbols,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (m.quotient_of(t), c.clone()))
                .collect(),
        })
    }

    /// Evaluates at `values[j-1]` for `Sj`, in any rational algebra.
    pub fn eval<R: Ring>(&self, values: &[R]) -> Result<R> {
        let mut ev = Evaluator::new(values.to_vec())?;
        ev.eval(self)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(SPolyJson::from(self)).expect("spoly serializes")
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let j: SPolyJson = serde_json::from_value(v)?;
        SPoly::try_from(j)
    }

    /// LaTeX with `\str_j` glyphs for the symbols.
    pub fn to_latex(&self) -> String {
        render_terms(self, LatexStyle)
    }
}

/// Memoizing evaluator: each distinct monomial costs one ring product.
pub struct Evaluator<R: Ring> {
    values: Vec<R>,
    memo: HashMap<Monomial, R>,
}

impl<R: Ring> Evaluator<R> {
    pub fn new(values: Vec<R>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid(
                "evaluation needs at least one symbol value".into(),
            ));
        }
        Ok(Evaluator {
            values,
            memo: HashMap::new(),
        })
    }

    fn monomial(&mut self, m: &Monomial) -> R {
        if let Some(v) = self.memo.get(m) {
            return v.clone();
        }
        let v = match m.exps.iter().rposition(|&e| e > 0) {
            None => self.values[0].one_like(),
            Some(k) => {
                let mut lower = m.exps.clone();
                lower[k] -= 1;
                let prev = self.monomial(&Monomial::new(lower));
                prev.mul(&self.values[k])
            }
        };
        self.memo.insert(m.clone(), v.clone());
        v
    }

    pub fn eval(&mut self, p: &SPoly) -> Result<R> {
        if p.symbols != self.values.len() {
            return Err(Error::SymbolMismatch(p.symbols, self.values.len()));
        }
        let mut acc = self.values[0].zero_like();
        for (m, c) in &p.terms {
            acc = acc.add(&self.monomial(m).scale(c));
        }
        Ok(acc)
    }
}

impl Ring for SPoly {
    fn zero_like(&self) -> Self {
        SPoly::zero(self.symbols)
    }
    fn one_like(&self) -> Self {
        SPoly::one(self.symbols)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("spoly addition")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("spoly subtraction")
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("spoly product")
    }
    fn neg(&self) -> Self {
        SPoly {
            symbols: self.symbols,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn scale(&self, c: &Rational) -> Self {
        self.scale_by(c)
    }
}

trait TermStyle {
    fn monomial(&self, m: &Monomial) -> String;
    /// Joins a non-unit coefficient magnitude with a non-trivial monomial.
    fn join(&self, coeff: &str, mono: &str) -> String;
    fn coeff(&self, c: &Rational) -> String;
}

struct TextStyle;
struct LatexStyle;

impl TermStyle for TextStyle {
    fn monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| {
                if *e == 1 {
                    format!("S{}", i + 1)
                } else {
                    format!("S{}^{e}", i + 1)
                }
            })
            .collect();
        parts.join("*")
    }
    fn join(&self, coeff: &str, mono: &str) -> String {
        format!("{coeff}*{mono}")
    }
    fn coeff(&self, c: &Rational) -> String {
        format_rational(c)
    }
}

impl TermStyle for LatexStyle {
    fn monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| {
                if *e == 1 {
                    format!("\\str_{{{}}}", i + 1)
                } else {
                    format!("{{\\str_{{{}}}}}^{{{e}}}", i + 1)
                }
            })
            .collect();
        parts.join("\\,")
    }
    fn join(&self, coeff: &str, mono: &str) -> String {
        format!("{coeff}\\,{mono}")
    }
    fn coeff(&self, c: &Rational) -> String {
        if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
        }
    }
}

fn render_terms(p: &SPoly, style: impl TermStyle) -> String {
    if p.terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms.iter().rev().enumerate() {
        let neg = is_negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&style.coeff(&mag));
        } else if mag.is_one() {
            out.push_str(&style.monomial(m));
        } else {
            out.push_str(&style.join(&style.coeff(&mag), &style.monomial(m)));
        }
    }
    out
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self, TextStyle))
    }
}

impl fmt::Debug for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SPoly[n={}]({self})", self.symbols)
    }
}

#[derive(Serialize, Deserialize)]
struct SPolyTermJson {
    exponents: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct SPolyJson {
    symbols: usize,
    terms: Vec<SPolyTermJson>,
}

impl From<&SPoly> for SPolyJson {
    fn from(p: &SPoly) -> Self {
        SPolyJson {
            symbols: p.symbols,
            terms: p
                .terms
                .iter()
                .rev()
                .map(|(m, c)| SPolyTermJson {
                    exponents: m.exps.clone(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<SPolyJson> for SPoly {
    type Error = Error;
    fn try_from(j: SPolyJson) -> Result<Self> {
        if j.symbols > 64 {
            return Err(Error::Invalid(format!("too many symbols: {}", j.symbols)));
        }
        let terms = j
            .terms
            .into_iter()
            .map(|t| {
                if t.exponents.iter().any(|&e| e > MAX_EXPONENT) {
                    return Err(Error::Invalid(format!("exponent above {MAX_EXPONENT}")));
                }
                Ok((t.exponents, parse_rational(&t.coeff)?))
            })
            .collect::<Result<Vec<_>>>()?;
        SPoly::from_terms(j.symbols, terms)
    }
}

impl Serialize for SPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SPolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SPoly::try_from(SPolyJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    fn p(s: &str) -> SPoly {
        parse_spoly(s, 4).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("S1").mul(&p("S1")), p("S1^2"));
        assert_eq!(p("S1^2 - S2").add(&p("S2")), p("S1^2"));
        assert_eq!(p("S1 - S2").mul(&p("S1 + S2")), p("S1^2 - S2^2"));
        assert_eq!(p("S1").scale(&ratio(1, 3)), p("1/3*S1"));
        assert_eq!(
            p("S1").try_add(&parse_spoly("S1", 3).unwrap()),
            Err(Error::SymbolMismatch(4, 3))
        );
    }

    #[test]
    fn weighted_degrees() {
        assert_eq!(p("S1^2").weighted_degree(), Ok((2, 2)));
        assert_eq!(p("S1*S2").weighted_degree(), Ok((3, 3)));
        assert_eq!(p("S2^2 - S1^4").weighted_degree(), Ok((4, 4)));
        assert_eq!(p("S1 + S4").weighted_degree(), Ok((1, 4)));
        assert_eq!(SPoly::zero(2).weighted_degree(), Err(Error::ZeroPolynomial));
        assert!(p("S2^2 - S1^4").is_weighted_homogeneous(4));
        assert!(!p("S1 + S4").is_weighted_homogeneous(4));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("S2^2*S4").divide_exact(&p("S2^2")), Ok(p("S4")));
        assert_eq!(
            p("S1^2 - S2^2").divide_exact(&p("S1 - S2")),
            Ok(p("S1 + S2"))
        );
        assert_eq!(p("S1").divide_exact(&p("S2")), Err(Error::NotDivisible));
        assert_eq!(
            p("S1^2 + 1").divide_exact(&p("S1 + 1")),
            Err(Error::NotDivisible)
        );
        assert_eq!(
            p("S1").divide_exact(&SPoly::zero(4)),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn square_roots() {
        let r = p("S1^3 - 3*S1*S2 + 2*S3");
        assert_eq!(r.mul(&r).sqrt_exact(), Ok(r.clone()));
        let r = p("1/2*S1^2 - S2 + 3");
        assert_eq!(r.mul(&r).sqrt_exact(), Ok(r));
        assert_eq!(p("S1^2 + S2").sqrt_exact(), Err(Error::NotSquare));
        assert_eq!(p("2*S1^2").sqrt_exact(), Err(Error::NotSquare));
        assert_eq!(p("S1^2 + 1").sqrt_exact(), Err(Error::NotSquare));
        assert_eq!(p("4").sqrt_exact(), Ok(p("2")));
    }

    #[test]
    fn sign_flip_and_substitution() {
        let a = p("S1^2 - S1*S2 + S3");
        assert_eq!(a.flip_signs(), p("S1^2 - S1*S2 - S3"));
        assert_eq!(a.flip_signs().flip_signs(), a);
        assert_eq!(a.substitute_zero(&[1, 3]), SPoly::zero(4));
        assert_eq!(
            p("S2^2 + S1*S2 - S4").substitute_zero(&[1, 3]),
            p("S2^2 - S4")
        );
    }

    #[test]
    fn monomial_content_and_division() {
        let a = p("S2^3*S4 - S2^2*S4^2");
        let g = a.monomial_content();
        assert_eq!(g, Monomial::new(vec![0, 2, 0, 1]));
        assert_eq!(a.divide_monomial(&g), Ok(p("S2 - S4")));
    }

    #[test]
    fn evaluation() {
        let a = p("S1^2 - 2*S2 + 1/2");
        let v = a.eval(&[rat(3), rat(1), rat(0), rat(0)]).unwrap();
        assert_eq!(v, ratio(15, 2));
    }

    #[test]
    fn ordering_is_graded_lex() {
        let a = Monomial::new(vec![2, 0, 0, 0]);
        let b = Monomial::new(vec![0, 0, 0, 1]);
        let c = Monomial::new(vec![1, 1, 0, 0]);
        assert!(a > b);
        assert!(a > c);
        assert!(c > b);
        assert_eq!(p("S4 + S1*S2 + S1^2").to_string(), "S1^2 + S1*S2 + S4");
    }

    #[test]
    fn latex_and_json() {
        let a = p("S1^2 - 1/4*S2");
        assert_eq!(a.to_latex(), "{\\str_{1}}^{2} - \\frac{1}{4}\\,\\str_{2}");
        let v = a.to_json_value();
        assert_eq!(
            v.to_string(),
            r#"{"symbols":4,"terms":[{"coeff":"1","exponents":[2,0,0,0]},{"coeff":"-1/4","exponents":[0,1,0,0]}]}"#
        );
        assert_eq!(SPoly::from_json_value(v).unwrap(), a);
    }
}
