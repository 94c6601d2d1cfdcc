//! The characteristic function `h(x) = sdet(xI − M)` as a ratio of
//! polynomials in a central variable `x`, in its two equivalent forms:
//!
//! ```text
//! via d:  det[d(x)(xI − A) − B·adj(xI − D)·C] / d(x)^(p+1)
//! via a:  a(x)^(q+1) / det[a(x)(xI − D) − C·adj(xI − A)·B]
//! ```
//!
//! with `a`, `d` the characteristic polynomials of the diagonal blocks.
//! Coefficients are even Grassmann elements, so the polynomial ring is
//! commutative even though it contains nilpotents; forms are compared only by
//! cross-multiplication.

use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::exterior::Multivector;
use crate::matrix::Matrix;
use crate::ring::{Rational, Ring};
use crate::supermatrix::{Block, SuperMatrix};

/// Polynomial in `x` with even Grassmann coefficients (index = power of `x`).
#[derive(Clone, PartialEq)]
pub struct UniPoly {
    generators: usize,
    coeffs: Vec<Multivector>,
}

impl UniPoly {
    pub fn new(generators: usize, coeffs: Vec<Multivector>) -> Result<Self> {
        for (k, c) in coeffs.iter().enumerate() {
            if c.generators() != generators {
                return Err(Error::GeneratorMismatch(generators, c.generators()));
            }
            if !c.is_even() {
                return Err(Error::Parity(format!("coefficient of x^{k} is not even")));
            }
        }
        Ok(Self::raw(generators, coeffs))
    }

    /// Skips the parity check; used for intermediates that are even by
    /// construction.
    fn raw(generators: usize, mut coeffs: Vec<Multivector>) -> Self {
        while coeffs.last().is_some_and(Multivector::is_empty) {
            coeffs.pop();
        }
        UniPoly { generators, coeffs }
    }

    pub fn zero(generators: usize) -> Self {
        UniPoly {
            generators,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Multivector) -> Self {
        Self::raw(c.generators(), vec![c])
    }

    pub fn x(generators: usize) -> Self {
        Self::raw(
            generators,
            vec![Multivector::zero(generators), Multivector::one(generators)],
        )
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn coeffs(&self) -> &[Multivector] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Multivector {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Multivector::zero(self.generators))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True iff the leading coefficient is exactly 1.
    pub fn is_monic(&self) -> bool {
        self.coeffs
            .last()
            .is_some_and(|c| *c == Multivector::one(self.generators))
    }

    /// Coefficient bodies, lowest power first.
    pub fn body_coeffs(&self) -> Vec<Rational> {
        self.coeffs.iter().map(Multivector::body).collect()
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.generators, other.generators,
            "unipoly generator mismatch"
        );
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        json!(self
            .coeffs
            .iter()
            .map(|c| serde_json::to_value(c).expect("serializes"))
            .collect::<Vec<_>>())
    }

    pub fn to_latex(&self) -> String {
        render(self, |c| c.to_string().replace('θ', "\\theta_"), "x")
    }
}

fn render(p: &UniPoly, coeff: impl Fn(&Multivector) -> String, var: &str) -> String {
    if p.coeffs.is_empty() {
        return "0".into();
    }
    let one = Multivector::one(p.generators);
    let mut parts = Vec::new();
    for (k, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_empty() {
            continue;
        }
        let pow = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let text = if k > 0 && *c == one {
            pow
        } else if k == 0 {
            format!("({})", coeff(c))
        } else {
            format!("({}){pow}", coeff(c))
        };
        parts.push(text);
    }
    parts.join(" + ")
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, Multivector::to_string, "x"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Ring for UniPoly {
    fn zero_like(&self) -> Self {
        UniPoly::zero(self.generators)
    }
    fn one_like(&self) -> Self {
        UniPoly::constant(Multivector::one(self.generators))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::raw(
            self.generators,
            (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect(),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::raw(
            self.generators,
            (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect(),
        )
    }
    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return self.zero_like();
        }
        let mut out =
            vec![Multivector::zero(self.generators); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_empty() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_empty() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Self::raw(self.generators, out)
    }
    fn neg(&self) -> Self {
        Self::raw(self.generators, self.coeffs.iter().map(|c| -c).collect())
    }
    fn scale(&self, c: &Rational) -> Self {
        Self::raw(
            self.generators,
            self.coeffs.iter().map(|x| x.scale_by(c)).collect(),
        )
    }
    fn is_central(&self) -> bool {
        self.coeffs.iter().all(Multivector::is_even)
    }
}

/// `xI − E` over polynomials.
fn shifted(e: &Matrix<Multivector>, generators: usize) -> Matrix<UniPoly> {
    let x = UniPoly::x(generators);
    let zero = UniPoly::zero(generators);
    Matrix::from_fn(e.rows(), e.cols(), &zero, |i, j| {
        let c = UniPoly::constant(e.get(i, j).clone());
        if i == j {
            x.sub(&c)
        } else {
            c.neg()
        }
    })
}

/// `det(xI − E)`: monic of degree `size`.
pub fn char_poly_block(e: &Matrix<Multivector>) -> Result<UniPoly> {
    let generators = e.zero_element().generators();
    if let Some(pos) = e.entries().position(|c| !c.is_even()) {
        return Err(Error::Parity(format!(
            "block entry ({}, {}) is not even",
            pos / e.cols().max(1) + 1,
            pos % e.cols().max(1) + 1
        )));
    }
    shifted(e, generators).det()
}

/// `left · adj · right` for odd `left`/`right`, keeping factor order inside
/// each coefficient; the result has even entries.
fn sandwich(
    left: &Matrix<Multivector>,
    mid: &Matrix<UniPoly>,
    right: &Matrix<Multivector>,
    generators: usize,
) -> Matrix<UniPoly> {
    let zero = UniPoly::zero(generators);
    Matrix::from_fn(left.rows(), right.cols(), &zero, |i, j| {
        let mut acc: Vec<Multivector> = Vec::new();
        for k in 0..left.cols() {
            let l = left.get(i, k);
            if l.is_empty() {
                continue;
            }
            for m in 0..right.rows() {
                let r = right.get(m, j);
                if r.is_empty() {
                    continue;
                }
                for (deg, c) in mid.get(k, m).coeffs().iter().enumerate() {
                    if c.is_empty() {
                        continue;
                    }
                    let term = &(l * c) * r;
                    if acc.len() <= deg {
                        acc.resize(deg + 1, Multivector::zero(generators));
                    }
                    acc[deg] = &acc[deg] + &term;
                }
            }
        }
        UniPoly::raw(generators, acc)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatioVariant {
    /// Denominator is a power of `d(x)`.
    ViaD,
    /// Numerator is a power of `a(x)`.
    ViaA,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioForm {
    pub numerator: UniPoly,
    pub denominator: UniPoly,
    pub variant: RatioVariant,
}

impl RatioForm {
    /// `self == other` as rational functions, decided by cross-multiplication.
    pub fn cross_equal(&self, other: &RatioForm) -> bool {
        self.numerator.mul(&other.denominator) == other.numerator.mul(&self.denominator)
    }

    pub fn to_text(&self) -> String {
        format!("[{}] / [{}]", self.numerator, self.denominator)
    }

    pub fn to_latex(&self) -> String {
        format!(
            "\\frac{{{}}}{{{}}}",
            self.numerator.to_latex(),
            self.denominator.to_latex()
        )
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "variant": match self.variant { RatioVariant::ViaD => "via_d", RatioVariant::ViaA => "via_a" },
            "numerator": self.numerator.to_json_value(),
            "denominator": self.denominator.to_json_value(),
        })
    }
}

struct Blocks {
    a: Matrix<Multivector>,
    b: Matrix<Multivector>,
    c: Matrix<Multivector>,
    d: Matrix<Multivector>,
    generators: usize,
}

fn blocks(m: &SuperMatrix) -> Blocks {
    Blocks {
        a: m.block(Block::A),
        b: m.block(Block::B),
        c: m.block(Block::C),
        d: m.block(Block::D),
        generators: m.generators(),
    }
}

/// `det[w(x)(xI − E) − L·adj(xI − F)·R]` where `w = det(xI − F)`.
fn corrected_det(
    e: &Matrix<Multivector>,
    f: &Matrix<Multivector>,
    left: &Matrix<Multivector>,
    right: &Matrix<Multivector>,
    generators: usize,
) -> Result<(UniPoly, UniPoly)> {
    let shifted_f = shifted(f, generators);
    let w = shifted_f.det()?;
    let adj = shifted_f.adjugate()?;
    let corr = sandwich(left, &adj, right, generators);
    let inner = shifted(e, generators).scale_left(&w).try_sub(&corr)?;
    Ok((inner.det()?, w))
}

pub fn h_via_d(m: &SuperMatrix) -> Result<RatioForm> {
    let bl = blocks(m);
    let (numerator, d) = corrected_det(&bl.a, &bl.d, &bl.b, &bl.c, bl.generators)?;
    Ok(RatioForm {
        numerator,
        denominator: d.pow(m.p() as u32 + 1),
        variant: RatioVariant::ViaD,
    })
}

pub fn h_via_a(m: &SuperMatrix) -> Result<RatioForm> {
    let bl = blocks(m);
    let (denominator, a) = corrected_det(&bl.d, &bl.a, &bl.c, &bl.b, bl.generators)?;
    Ok(RatioForm {
        numerator: a.pow(m.q() as u32 + 1),
        denominator,
        variant: RatioVariant::ViaA,
    })
}

/// Cross-multiplied equality of the two forms.
pub fn check_equivalence(m: &SuperMatrix) -> Result<bool> {
    Ok(h_via_d(m)?.cross_equal(&h_via_a(m)?))
}

/// `a(x)^(q+1)·d(x)^(p+1)`, monic of degree `2pq + p + q`.
pub fn full_char_poly(m: &SuperMatrix) -> Result<UniPoly> {
    let a = char_poly_block(&m.block(Block::A))?;
    let d = char_poly_block(&m.block(Block::D))?;
    Ok(a.pow(m.q() as u32 + 1).mul(&d.pow(m.p() as u32 + 1)))
}
