//! (p,q) supermatrices over the Grassmann algebra.
//!
//! Layout: rows/columns `0..p` index the even block, `p..p+q` the odd block.
//! The diagonal blocks `A` (p×p) and `D` (q×q) hold even elements, the
//! off-diagonal blocks `B` (p×q) and `C` (q×p) hold odd elements.

use std::fmt;

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{Multivector, MultivectorJson};
use crate::matrix::Matrix;
use crate::ring::Rational;
use crate::verifier::check_degenerate;

/// Bodies of random even entries are drawn from `-BODY_RANGE..=BODY_RANGE`.
pub const BODY_RANGE: i64 = 9;
/// Soul coefficients are drawn from `-SOUL_RANGE..=SOUL_RANGE` without zero.
pub const SOUL_RANGE: i64 = 3;
/// Resampling budget for nondegenerate samples.
pub const MAX_RETRIES: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    A,
    B,
    C,
    D,
}

#[derive(Clone, PartialEq)]
pub struct SuperMatrix {
    p: usize,
    q: usize,
    generators: usize,
    entries: Matrix<Multivector>,
}

impl SuperMatrix {
    /// Validates shape, generator count and the block parity pattern.
    pub fn new(p: usize, q: usize, entries: Matrix<Multivector>) -> Result<Self> {
        let n = p + q;
        if entries.rows() != n || entries.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "({p},{q}) supermatrix needs {n}x{n} entries, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        let generators = entries.zero_element().generators();
        for i in 0..n {
            for j in 0..n {
                let e = entries.get(i, j);
                if e.generators() != generators {
                    return Err(Error::GeneratorMismatch(generators, e.generators()));
                }
                let block = block_of(p, i, j);
                let ok = match block {
                    Block::A | Block::D => e.is_even(),
                    Block::B | Block::C => e.is_odd(),
                };
                if !ok {
                    let want = if matches!(block, Block::A | Block::D) {
                        "even"
                    } else {
                        "odd"
                    };
                    return Err(Error::Parity(format!(
                        "entry ({}, {}) in block {block:?} must be {want}, got {e}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(SuperMatrix {
            p,
            q,
            generators,
            entries,
        })
    }

    pub fn from_blocks(
        a: &Matrix<Multivector>,
        b: &Matrix<Multivector>,
        c: &Matrix<Multivector>,
        d: &Matrix<Multivector>,
    ) -> Result<Self> {
        let (p, q) = (a.rows(), d.rows());
        let shapes = [(a, p, p), (b, p, q), (c, q, p), (d, q, q)];
        if shapes
            .iter()
            .any(|(m, r, c)| m.rows() != *r || m.cols() != *c)
        {
            return Err(Error::DimensionMismatch("inconsistent block shapes".into()));
        }
        let zero = a.zero_element().clone();
        let entries = Matrix::from_fn(p + q, p + q, &zero, |i, j| match (i < p, j < p) {
            (true, true) => a.get(i, j).clone(),
            (true, false) => b.get(i, j - p).clone(),
            (false, true) => c.get(i - p, j).clone(),
            (false, false) => d.get(i - p, j - p).clone(),
        });
        SuperMatrix::new(p, q, entries)
    }

    pub fn identity(p: usize, q: usize, generators: usize) -> Self {
        let entries = Matrix::identity(p + q, &Multivector::zero(generators));
        SuperMatrix {
            p,
            q,
            generators,
            entries,
        }
    }

    /// Numeric block-diagonal matrix `diag(a_1..a_p | d_1..d_q)`.
    pub fn diagonal(a: &[Rational], d: &[Rational], generators: usize) -> Self {
        let vals: Vec<&Rational> = a.iter().chain(d).collect();
        let zero = Multivector::zero(generators);
        let entries = Matrix::from_fn(vals.len(), vals.len(), &zero, |i, j| {
            if i == j {
                Multivector::scalar(generators, vals[i].clone())
            } else {
                zero.clone()
            }
        });
        SuperMatrix {
            p: a.len(),
            q: d.len(),
            generators,
            entries,
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn entries(&self) -> &Matrix<Multivector> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Multivector {
        self.entries.get(i, j)
    }

    pub fn block(&self, which: Block) -> Matrix<Multivector> {
        let (p, n) = (self.p, self.dim());
        match which {
            Block::A => self.entries.block(0, p, 0, p),
            Block::B => self.entries.block(0, p, p, n),
            Block::C => self.entries.block(p, n, 0, p),
            Block::D => self.entries.block(p, n, p, n),
        }
    }

    /// `tr A − tr D`.
    pub fn supertrace(&self) -> Multivector {
        let mut acc = Multivector::zero(self.generators);
        for i in 0..self.dim() {
            let e = self.entries.get(i, i);
            acc = if i < self.p { &acc + e } else { &acc - e };
        }
        acc
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.q != other.q {
            return Err(Error::DimensionMismatch(format!(
                "({},{}) vs ({},{}) supermatrices",
                self.p, self.q, other.p, other.q
            )));
        }
        if self.generators != other.generators {
            return Err(Error::GeneratorMismatch(self.generators, other.generators));
        }
        Ok(())
    }

    /// Row-by-column product; Grassmann factors keep their left-to-right order.
    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let entries = self.entries.try_mul(&other.entries)?;
        Ok(SuperMatrix {
            p: self.p,
            q: self.q,
            generators: self.generators,
            entries,
        })
    }

    pub fn mat_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let entries = self.entries.try_add(&other.entries)?;
        Ok(SuperMatrix {
            p: self.p,
            q: self.q,
            generators: self.generators,
            entries,
        })
    }

    pub fn mat_pow(&self, k: u32) -> Self {
        let mut acc = SuperMatrix::identity(self.p, self.q, self.generators);
        for _ in 0..k {
            acc = acc.mat_mul(self).expect("same shape");
        }
        acc
    }

    /// `[M^0, M^1, ..., M^k]`.
    pub fn powers(&self, k: usize) -> Vec<SuperMatrix> {
        let mut out = vec![SuperMatrix::identity(self.p, self.q, self.generators)];
        for _ in 0..k {
            let next = out
                .last()
                .expect("nonempty")
                .mat_mul(self)
                .expect("same shape");
            out.push(next);
        }
        out
    }

    /// Multiplies every entry by an even (central) scalar.
    pub fn scale_even(&self, c: &Multivector) -> Result<Self> {
        if !c.is_even() {
            return Err(Error::Parity(
                "supermatrix scaling needs an even scalar".into(),
            ));
        }
        Ok(SuperMatrix {
            entries: self.entries.scale_left(c),
            ..self.clone()
        })
    }

    /// Block rule `[[A, B], [C, D]] -> [[Aᵗ, −Cᵗ], [−Bᵗ, −Dᵗ]]`.
    pub fn supertranspose(&self) -> Self {
        let (p, n) = (self.p, self.dim());
        let entries = Matrix::from_fn(n, n, self.entries.zero_element(), |i, j| {
            let t = self.entries.get(j, i);
            if i < p && j < p {
                t.clone()
            } else {
                -t
            }
        });
        SuperMatrix {
            entries,
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    pub fn is_block_diagonal(&self) -> bool {
        self.block(Block::B).is_zero() && self.block(Block::C).is_zero()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("supermatrix serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("supermatrix serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: SuperMatrixJson = serde_json::from_str(s)?;
        SuperMatrix::try_from(j)
    }
}

pub fn block_of(p: usize, i: usize, j: usize) -> Block {
    match (i < p, j < p) {
        (true, true) => Block::A,
        (true, false) => Block::B,
        (false, true) => Block::C,
        (false, false) => Block::D,
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries)
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SuperMatrix(p={}, q={}, N={})\n{}",
            self.p, self.q, self.generators, self.entries
        )
    }
}

#[derive(Serialize, Deserialize)]
struct SuperMatrixJson {
    p: usize,
    q: usize,
    #[serde(rename = "N")]
    n: usize,
    entries: Vec<Vec<MultivectorJson>>,
}

impl Serialize for SuperMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.dim();
        SuperMatrixJson {
            p: self.p,
            q: self.q,
            n: self.generators,
            entries: (0..n)
                .map(|i| {
                    self.entries
                        .row(i)
                        .iter()
                        .map(MultivectorJson::from)
                        .collect()
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl TryFrom<SuperMatrixJson> for SuperMatrix {
    type Error = Error;
    fn try_from(j: SuperMatrixJson) -> Result<Self> {
        if j.n > crate::exterior::MAX_GENERATORS {
            return Err(Error::Invalid(format!("too many generators: {}", j.n)));
        }
        let dim =
            j.p.checked_add(j.q)
                .ok_or_else(|| Error::Invalid("dimension overflow".into()))?;
        if j.entries.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {dim} rows, got {}",
                j.entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(dim);
        for (i, row) in j.entries.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {dim}",
                    i + 1,
                    row.len()
                )));
            }
            let mut out = Vec::with_capacity(dim);
            for (k, e) in row.into_iter().enumerate() {
                let mv = Multivector::try_from(e).map_err(|err| {
                    Error::Invalid(format!("entry ({}, {}): {err}", i + 1, k + 1))
                })?;
                if mv.generators() != j.n {
                    return Err(Error::Invalid(format!(
                        "entry ({}, {}) declares N={} but the matrix has N={}",
                        i + 1,
                        k + 1,
                        mv.generators(),
                        j.n
                    )));
                }
                out.push(mv);
            }
            rows.push(out);
        }
        let entries = Matrix::from_rows(rows, &Multivector::zero(j.n))?;
        SuperMatrix::new(j.p, j.q, entries)
    }
}

impl<'de> Deserialize<'de> for SuperMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SuperMatrix::try_from(SuperMatrixJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

fn small_rational(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn nonzero_soul_coeff(rng: &mut impl Rng) -> Rational {
    let v = rng.gen_range(1..=SOUL_RANGE);
    small_rational(if rng.gen_bool(0.5) { v } else { -v })
}

/// Sum of up to `max_terms` random blades whose grades have the given parity
/// and lie in `1..=max_grade`.
fn random_soul(
    rng: &mut impl Rng,
    generators: usize,
    max_grade: usize,
    odd: bool,
    min_terms: usize,
) -> Multivector {
    let grades: Vec<usize> = (1..=max_grade.min(generators))
        .filter(|g| (g % 2 == 1) == odd)
        .collect();
    let mut out = Multivector::zero(generators);
    if grades.is_empty() {
        return out;
    }
    let count = rng.gen_range(min_terms..=2);
    for _ in 0..count {
        let g = grades[rng.gen_range(0..grades.len())];
        let mut idx: Vec<usize> = sample(rng, generators, g)
            .into_iter()
            .map(|i| i + 1)
            .collect();
        idx.sort_unstable();
        let t = Multivector::term(generators, &idx, nonzero_soul_coeff(rng)).expect("valid blade");
        out = &out + &t;
    }
    out
}

fn random_even(rng: &mut impl Rng, generators: usize, max_grade: usize) -> Multivector {
    let body = Multivector::scalar(
        generators,
        small_rational(rng.gen_range(-BODY_RANGE..=BODY_RANGE)),
    );
    &body + &random_soul(rng, generators, max_grade, false, 0)
}

fn random_odd(rng: &mut impl Rng, generators: usize, max_grade: usize) -> Multivector {
    random_soul(rng, generators, max_grade, true, 1)
}

fn check_sampling_args(p: usize, q: usize, generators: usize, max_soul_grade: usize) -> Result<()> {
    if generators == 0 || generators > crate::exterior::MAX_GENERATORS {
        return Err(Error::Precondition(format!(
            "generator count {generators} out of range"
        )));
    }
    if max_soul_grade > generators {
        return Err(Error::Precondition(format!(
            "soul grade {max_soul_grade} exceeds generator count {generators}"
        )));
    }
    if p + q == 0 {
        return Err(Error::Precondition("empty supermatrix".into()));
    }
    Ok(())
}

/// Deterministic random supermatrix whose `A` and `D` body spectra are
/// disjoint (resampled until [`check_degenerate`] is false).
pub fn random_supermatrix(
    p: usize,
    q: usize,
    generators: usize,
    seed: u64,
    max_soul_grade: usize,
) -> Result<SuperMatrix> {
    check_sampling_args(p, q, generators, max_soul_grade)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = Multivector::zero(generators);
    for _ in 0..MAX_RETRIES {
        let n = p + q;
        let entries = Matrix::from_fn(n, n, &zero, |i, j| match block_of(p, i, j) {
            Block::A | Block::D => random_even(&mut rng, generators, max_soul_grade),
            Block::B | Block::C => random_odd(&mut rng, generators, max_soul_grade),
        });
        let m = SuperMatrix::new(p, q, entries)?;
        if !check_degenerate(&m) {
            return Ok(m);
        }
    }
    Err(Error::DegenerateSampling(MAX_RETRIES))
}

/// The pieces of an orthosymplectic sample: `m = omega · z`.
#[derive(Clone, Debug)]
pub struct OspSample {
    pub z: SuperMatrix,
    pub omega: SuperMatrix,
    pub m: SuperMatrix,
}

/// `diag(1_p, J)` with `J = [[0, 1], [-1, 0]]` in (q/2)-blocks.
pub fn osp_metric(p: usize, q: usize, generators: usize) -> Result<SuperMatrix> {
    if q % 2 == 1 {
        return Err(Error::NoSymplecticForm(q));
    }
    let h = q / 2;
    let zero = Multivector::zero(generators);
    let one = Multivector::one(generators);
    let entries = Matrix::from_fn(p + q, p + q, &zero, |i, j| {
        if i < p || j < p {
            return if i == j { one.clone() } else { zero.clone() };
        }
        let (r, c) = (i - p, j - p);
        if r < h && c == r + h {
            one.clone()
        } else if r >= h && c + h == r {
            -&one
        } else {
            zero.clone()
        }
    });
    SuperMatrix::new(p, q, entries)
}

/// Random graded-antisymmetric `Z` (`A = −Aᵗ`, `D = Dᵗ`, `B = Cᵗ`) and the
/// mixed-index matrix `M = Ω·Z`, resampled until nondegenerate.
pub fn osp_sample(
    p: usize,
    q: usize,
    generators: usize,
    seed: u64,
    max_soul_grade: usize,
) -> Result<OspSample> {
    check_sampling_args(p, q, generators, max_soul_grade)?;
    let omega = osp_metric(p, q, generators)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = Multivector::zero(generators);
    for _ in 0..MAX_RETRIES {
        let mut a = Matrix::zeros(p, p, &zero);
        for i in 0..p {
            for j in i + 1..p {
                let x = random_even(&mut rng, generators, max_soul_grade);
                a.set(j, i, -&x);
                a.set(i, j, x);
            }
        }
        let mut d = Matrix::zeros(q, q, &zero);
        for i in 0..q {
            for j in i..q {
                let x = random_even(&mut rng, generators, max_soul_grade);
                d.set(j, i, x.clone());
                d.set(i, j, x);
            }
        }
        let c = Matrix::from_fn(q, p, &zero, |_, _| {
            random_odd(&mut rng, generators, max_soul_grade)
        });
        let b = c.transpose();
        let z = SuperMatrix::from_blocks(&a, &b, &c, &d)?;
        let m = omega.mat_mul(&z)?;
        if !check_degenerate(&m) {
            return Ok(OspSample { z, omega, m });
        }
    }
    Err(Error::DegenerateSampling(MAX_RETRIES))
}

pub fn osp_random(p: usize, q: usize, generators: usize, seed: u64) -> Result<SuperMatrix> {
    osp_sample(p, q, generators, seed, generators.min(3)).map(|s| s.m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn th(n: usize, idx: &[usize]) -> Multivector {
        Multivector::term(n, idx, rat(1)).unwrap()
    }

    fn sample11() -> SuperMatrix {
        let n = 2;
        let s = |v| Multivector::scalar(n, rat(v));
        let m = Matrix::from_rows(
            vec![vec![s(2), th(n, &[1])], vec![th(n, &[2]), s(3)]],
            &s(0),
        )
        .unwrap();
        SuperMatrix::new(1, 1, m).unwrap()
    }

    #[test]
    fn supertrace_examples() {
        let d = SuperMatrix::diagonal(&[rat(2)], &[rat(3)], 2);
        assert_eq!(d.supertrace(), Multivector::scalar(2, rat(-1)));
        let m = sample11();
        let expected = &Multivector::scalar(2, rat(-5)) + &th(2, &[1, 2]).scale_by(&rat(2));
        assert_eq!(m.mat_pow(2).supertrace(), expected);
    }

    #[test]
    fn parity_validation() {
        let n = 2;
        let s = |v| Multivector::scalar(n, rat(v));
        let bad =
            Matrix::from_rows(vec![vec![th(n, &[1]), s(0)], vec![s(0), s(1)]], &s(0)).unwrap();
        let err = SuperMatrix::new(1, 1, bad).unwrap_err();
        assert!(
            err.to_string()
                .contains("entry (1, 1) in block A must be even"),
            "{err}"
        );
        let bad = Matrix::from_rows(vec![vec![s(1), s(1)], vec![s(0), s(1)]], &s(0)).unwrap();
        let err = SuperMatrix::new(1, 1, bad).unwrap_err();
        assert!(err.to_string().contains("block B must be odd"), "{err}");
    }

    #[test]
    fn products_and_powers() {
        let m = sample11();
        let id = SuperMatrix::identity(1, 1, 2);
        assert_eq!(m.mat_mul(&id).unwrap(), m);
        assert_eq!(m.mat_pow(0), id);
        let m2 = m.mat_mul(&m).unwrap();
        assert!(SuperMatrix::new(1, 1, m2.entries().clone()).is_ok());
        assert_eq!(m.mat_pow(3), m.mat_pow(1).mat_mul(&m.mat_pow(2)).unwrap());
        assert!(m.mat_mul(&SuperMatrix::identity(2, 1, 2)).is_err());
    }

    #[test]
    fn json_round_trip_and_errors() {
        let m = sample11();
        let s = m.to_json();
        assert_eq!(SuperMatrix::from_json(&s).unwrap(), m);
        let bad = s.replacen(r#""blade":[1]"#, r#""blade":[1,2]"#, 1);
        let err = SuperMatrix::from_json(&bad).unwrap_err();
        assert!(err.to_string().contains("entry (1, 2)"), "{err}");
        assert!(SuperMatrix::from_json(r#"{"p":1,"q":1,"N":2,"entries":[]}"#).is_err());
    }

    #[test]
    fn random_is_deterministic_and_valid() {
        let a = random_supermatrix(2, 1, 6, 42, 3).unwrap();
        let b = random_supermatrix(2, 1, 6, 42, 3).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_supermatrix(2, 1, 6, 43, 3).unwrap());
        assert!(SuperMatrix::new(2, 1, a.entries().clone()).is_ok());
        assert!(!check_degenerate(&a));
        assert!(random_supermatrix(1, 1, 2, 0, 3).is_err());
    }

    #[test]
    fn osp_structure() {
        assert_eq!(
            osp_random(2, 1, 4, 0).unwrap_err(),
            Error::NoSymplecticForm(1)
        );
        let s = osp_sample(2, 2, 6, 5, 3).unwrap();
        let a = s.z.block(Block::A);
        assert!(a.try_add(&a.transpose()).unwrap().is_zero());
        // Z is graded antisymmetric under the block supertranspose rule.
        let zt = s.z.supertranspose();
        assert!(zt.mat_add(&s.z).unwrap().is_zero());
        for k in [1u32, 3, 5] {
            assert!(s.m.mat_pow(k).supertrace().is_empty(), "str(M^{k})");
        }
        assert!(!s.m.mat_pow(2).supertrace().is_empty());
    }
}
