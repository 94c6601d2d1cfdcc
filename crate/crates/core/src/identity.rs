//! Synthesis of the super Cayley-Hamilton coefficients `a_k(S)`.
//!
//! For an ordinary n×n matrix the characteristic coefficients come from
//! `G(S,t) = exp(−Σ S_i t^i / i)`. For a (p,q) supermatrix with `q ≤ p` the
//! series is corrected to `F = (1 − Σ_{k≤q} μ_k t^k)² · G`, where the μ solve
//! the q×q Toeplitz system `B·μ = (b_{p+1}, …, b_{p+q})` built from the Newton
//! coefficients `b_j = [t^j]G` in `n = p+q` symbols. With `D = det B` the
//! coefficients `D²·[t^j]F` are polynomials; after fixing the `S1^(2pq)`
//! coefficient of the leading one to `+1` they are the identity
//! `Σ_j a_j(S)·M^(n−j) = 0`. The case `q > p` is the sign-flip dual.

use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::{Monomial, SPoly, SRational, TruncSeries};
use crate::ring::{Rational, Ring};

/// Coefficient list of a Cayley-Hamilton identity; `coeffs[j]` multiplies
/// `M^(n−j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CHIdentity {
    p: usize,
    q: usize,
    coeffs: Vec<SPoly>,
    osp: bool,
}

impl CHIdentity {
    /// Assembles an identity from explicit coefficients (e.g. loaded from a
    /// file), checking only the shape.
    pub fn from_parts(p: usize, q: usize, coeffs: Vec<SPoly>, osp: bool) -> Result<Self> {
        let n = p + q;
        if n == 0 {
            return Err(Error::Precondition("p + q must be positive".into()));
        }
        if coeffs.len() != n + 1 {
            return Err(Error::DimensionMismatch(format!(
                "({p},{q}) identity needs {} coefficients, got {}",
                n + 1,
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|c| c.symbols() != n) {
            return Err(Error::SymbolMismatch(n, c.symbols()));
        }
        Ok(CHIdentity { p, q, coeffs, osp })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn is_osp(&self) -> bool {
        self.osp
    }

    pub fn coeffs(&self) -> &[SPoly] {
        &self.coeffs
    }

    /// Weighted degree of `coeffs[0]` (`2pq` for the generic identity).
    pub fn leading_degree(&self) -> Result<u32> {
        Ok(self.coeffs[0].weighted_degree()?.1)
    }

    /// Scales so the leading graded-lex term of `coeffs[0]` is `+1`. For a
    /// generic identity that term is `S1^(2pq)`.
    fn normalized(mut self) -> Result<Self> {
        let lead = match self.coeffs[0].leading_term() {
            Some((_, c)) => c.clone(),
            None => {
                return Err(Error::ConjectureViolation(
                    "leading coefficient vanishes".into(),
                ))
            }
        };
        let inv = lead.recip();
        for c in &mut self.coeffs {
            *c = c.scale_by(&inv);
        }
        Ok(self)
    }

    /// `S_j -> −S_j` in every coefficient; the dual identity for `(q, p)`.
    pub fn flip_signs(&self) -> Result<CHIdentity> {
        CHIdentity {
            p: self.q,
            q: self.p,
            coeffs: self.coeffs.iter().map(SPoly::flip_signs).collect(),
            osp: self.osp,
        }
        .normalized()
    }
}

/// Newton coefficients `b_0..b_count` of `G(S,t)` in `n` symbols, from
/// `j·b_j = −Σ_{i=1..j} S_i·b_{j−i}`.
pub fn newton_coeffs(n: usize, count: usize) -> Result<Vec<SPoly>> {
    if n == 0 {
        return Err(Error::Precondition("need at least one symbol".into()));
    }
    if count > n {
        return Err(Error::Precondition(format!(
            "b_{count} involves S_{count}, beyond the {n} available symbols"
        )));
    }
    let mut b = vec![SPoly::one(n)];
    for j in 1..=count {
        let mut acc = SPoly::zero(n);
        for i in 1..=j {
            acc = acc.add(&SPoly::symbol(n, i)?.mul(&b[j - i]));
        }
        b.push(acc.scale_by(&-Rational::new(1.into(), (j as i64).into())));
    }
    Ok(b)
}

/// The q×q Toeplitz matrix with entry `(i, j) = b_{p+i−j}` (1-based), using
/// `b_0 = 1` and `b_k = 0` for `k < 0`, over `n = p + q` symbols.
#[derive(Clone, Debug, PartialEq)]
pub struct BMatrix {
    p: usize,
    q: usize,
    matrix: Matrix<SPoly>,
}

impl BMatrix {
    pub fn matrix(&self) -> &Matrix<SPoly> {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &SPoly {
        self.matrix.get(i, j)
    }

    pub fn is_toeplitz(&self) -> bool {
        (1..self.q)
            .all(|i| (1..self.q).all(|j| self.matrix.get(i, j) == self.matrix.get(i - 1, j - 1)))
    }

    pub fn det(&self) -> SPoly {
        self.matrix.det().expect("polynomial entries commute")
    }
}

pub fn build_b(p: usize, q: usize) -> Result<BMatrix> {
    if q > p {
        return Err(Error::UseSignFlipDual);
    }
    if p == 0 {
        return Err(Error::Precondition("p must be positive".into()));
    }
    let n = p + q;
    let b = newton_coeffs(n, n)?;
    let zero = SPoly::zero(n);
    let matrix = Matrix::from_fn(q, q, &zero, |i, j| {
        let k = p as isize + i as isize - j as isize;
        if k < 0 {
            zero.clone()
        } else {
            b[k as usize].clone()
        }
    });
    Ok(BMatrix { p, q, matrix })
}

/// Pieces of the corrected generating function: `D = det B` and
/// `ν = adj(B)·(b_{p+1}, …, b_{p+q})`, so that `μ_k = ν_k / D`.
struct Correction {
    newton: Vec<SPoly>,
    det: SPoly,
    nu: Vec<SPoly>,
}

fn correction(p: usize, q: usize) -> Result<Correction> {
    let bm = build_b(p, q)?;
    let n = p + q;
    let newton = newton_coeffs(n, n)?;
    let det = bm.det();
    if det.is_empty() {
        return Err(Error::ConjectureViolation(format!(
            "det B vanishes identically for ({p},{q})"
        )));
    }
    let adj = bm.matrix.adjugate()?;
    let nu = (0..q)
        .map(|i| {
            (0..q).fold(SPoly::zero(n), |acc, k| {
                acc.add(&adj.get(i, k).mul(&newton[p + 1 + k]))
            })
        })
        .collect();
    Ok(Correction { newton, det, nu })
}

/// `μ_1..μ_q` as unreduced fractions over `det B`.
pub fn solve_mu(p: usize, q: usize) -> Result<Vec<SRational>> {
    let c = correction(p, q)?;
    c.nu.into_iter()
        .map(|nu| SRational::new(nu, c.det.clone()))
        .collect()
}

/// `G(S,t)` truncated at `t^order`, over `n = order` symbols.
pub fn g_series(n: usize) -> Result<TruncSeries<SPoly>> {
    let b = newton_coeffs(n, n)?;
    Ok(TruncSeries::new(b, n, &SPoly::zero(n)))
}

/// `F(S,t) = (1 − Σ μ_k t^k)²·G(S,t)` truncated at `t^(p+q)`, for `q ≤ p`.
pub fn f_series(p: usize, q: usize) -> Result<(TruncSeries<SRational>, SPoly)> {
    let n = p + q;
    let zero = SRational::from_poly(SPoly::zero(n));
    let g = g_series(n)?.map(|b| SRational::from_poly(b.clone()));
    if q == 0 {
        return Ok((g, SPoly::one(n)));
    }
    let c = correction(p, q)?;
    let mut factor = vec![zero.one_like()];
    for nu in &c.nu {
        factor.push(SRational::new(nu.neg(), c.det.clone())?);
    }
    let factor = TruncSeries::new(factor, n, &zero);
    Ok((factor.square().mul(&g)?, c.det))
}

/// Derives the normalized identity for any `(p, q)` with `p + q ≥ 1`.
pub fn identity_coeffs(p: usize, q: usize) -> Result<CHIdentity> {
    if p + q == 0 {
        return Err(Error::Precondition("p + q must be positive".into()));
    }
    if q > p {
        return identity_coeffs(q, p)?.flip_signs();
    }
    let (f, det) = f_series(p, q)?;
    let scale = det.mul(&det);
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, fj)| {
            fj.clear_with(&scale).map_err(|_| {
                Error::ConjectureViolation(format!(
                    "(det B)^2 does not clear the t^{j} coefficient for ({p},{q})"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let lead = Monomial::power(p + q, 1, 2 * (p * q) as u32);
    if coeffs[0].coeff(&lead).is_zero() {
        return Err(Error::ConjectureViolation(
            "S1^(2pq) is missing from the leading coefficient".into(),
        ));
    }
    CHIdentity {
        p,
        q,
        coeffs,
        osp: false,
    }
    .normalized()
}

/// `det B` for the identity's shape, sign-flipped for `q > p`.
pub fn det_b(p: usize, q: usize) -> Result<SPoly> {
    if q > p {
        return Ok(det_b(q, p)?.flip_signs());
    }
    if q == 0 {
        return Ok(SPoly::one(p));
    }
    Ok(build_b(p, q)?.det())
}

/// Outcome of the structural self-checks on a generic identity.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureCheck {
    pub homogeneous: bool,
    pub leading_is_square: bool,
    pub second_divisible_by_det_b: bool,
    pub square_root: Option<SPoly>,
}

impl StructureCheck {
    pub fn all_hold(&self) -> bool {
        self.homogeneous && self.leading_is_square && self.second_divisible_by_det_b
    }
}

pub fn check_structure(id: &CHIdentity) -> Result<StructureCheck> {
    let base = 2 * (id.p * id.q) as u32;
    let homogeneous = id
        .coeffs
        .iter()
        .enumerate()
        .all(|(j, c)| c.is_weighted_homogeneous(base + j as u32));
    let square_root = id.coeffs[0].sqrt_exact().ok();
    let d = det_b(id.p, id.q)?;
    let second_divisible_by_det_b =
        id.coeffs[1].is_empty() || id.coeffs[1].divide_exact(&d).is_ok();
    Ok(StructureCheck {
        homogeneous,
        leading_is_square: square_root.is_some(),
        second_divisible_by_det_b,
        square_root,
    })
}

/// Odd-indexed symbols `S1, S3, …` up to `n`.
fn odd_symbols(n: usize) -> Vec<usize> {
    (1..=n).step_by(2).collect()
}

/// Scales a polynomial so its leading graded-lex coefficient is 1.
fn monic(p: &SPoly) -> SPoly {
    match p.leading_term() {
        Some((_, c)) => p.scale_by(&c.recip()),
        None => p.clone(),
    }
}

/// Specializes to orthosymplectic supermatrices (odd supertraces vanish) and
/// removes the common polynomial factor of the surviving coefficients.
///
/// Returns the reduced identity and the factor that was divided out.
pub fn osp_specialize_with_factor(id: &CHIdentity) -> Result<(CHIdentity, SPoly)> {
    let n = id.n();
    let zeroed = odd_symbols(n);
    let mut coeffs: Vec<SPoly> = id
        .coeffs
        .iter()
        .map(|c| c.substitute_zero(&zeroed))
        .collect();
    if coeffs.iter().all(SPoly::is_empty) {
        return Err(Error::VacuousOsp);
    }
    let content = coeffs
        .iter()
        .filter(|c| !c.is_empty())
        .map(SPoly::monomial_content)
        .reduce(|a, b| {
            let g: Vec<u32> = a
                .exponents()
                .iter()
                .zip(b.exponents())
                .map(|(x, y)| *x.min(y))
                .collect();
            Monomial::new(g)
        })
        .expect("some coefficient survives");
    let mut factor = SPoly::monomial(content.clone(), Rational::one());
    coeffs = coeffs
        .iter()
        .map(|c| {
            if c.is_empty() {
                Ok(c.clone())
            } else {
                c.divide_monomial(&content)
            }
        })
        .collect::<Result<_>>()?;

    // Candidate divisors: the chain of square roots of the lowest-degree
    // surviving coefficient, deepest root first, then that coefficient itself.
    let base = monic(
        coeffs
            .iter()
            .find(|c| !c.is_empty())
            .expect("some coefficient survives"),
    );
    let mut chain = vec![base.clone()];
    while let Ok(r) = monic(chain.last().expect("nonempty")).sqrt_exact() {
        if r.leading_term().is_none_or(|(m, _)| m.is_one()) {
            break;
        }
        chain.push(monic(&r));
    }
    for cand in chain.iter().rev() {
        if cand.leading_term().is_none_or(|(m, _)| m.is_one()) {
            continue;
        }
        loop {
            let divided: Result<Vec<SPoly>> = coeffs
                .iter()
                .map(|c| {
                    if c.is_empty() {
                        Ok(c.clone())
                    } else {
                        c.divide_exact(cand)
                    }
                })
                .collect();
            match divided {
                Ok(d) => {
                    coeffs = d;
                    factor = factor.mul(cand);
                }
                Err(_) => break,
            }
        }
    }
    let out = CHIdentity {
        p: id.p,
        q: id.q,
        coeffs,
        osp: true,
    };
    let scale = out
        .coeffs
        .iter()
        .find(|c| !c.is_empty())
        .and_then(|c| c.leading_term())
        .map(|(_, c)| c.clone());
    let out = if out.coeffs[0].is_empty() {
        // Leading coefficient killed by the specialization: normalize on the
        // first surviving one instead.
        let inv = scale.expect("some coefficient survives").recip();
        CHIdentity {
            coeffs: out.coeffs.iter().map(|c| c.scale_by(&inv)).collect(),
            ..out
        }
    } else {
        let lead = out.coeffs[0]
            .leading_term()
            .map(|(_, c)| c.clone())
            .expect("nonzero");
        factor = factor.scale_by(&lead);
        out.normalized()?
    };
    Ok((out, factor))
}

pub fn osp_specialize(id: &CHIdentity) -> Result<CHIdentity> {
    osp_specialize_with_factor(id).map(|(id, _)| id)
}

/// A split of an identity into matrix polynomials of degrees `p` and `q`
/// whose coefficient convolution reproduces it.
#[derive(Clone, Debug, PartialEq)]
pub enum Factorization {
    Factors { left: Vec<SPoly>, right: Vec<SPoly> },
    NotAttempted,
}

/// Coefficient-wise product of two matrix polynomials with central
/// coefficients (both lists are highest power first).
pub fn convolve(left: &[SPoly], right: &[SPoly]) -> Vec<SPoly> {
    if left.is_empty() || right.is_empty() {
        return Vec::new();
    }
    let n = left[0].symbols();
    let mut out = vec![SPoly::zero(n); left.len() + right.len() - 1];
    for (i, l) in left.iter().enumerate() {
        for (j, r) in right.iter().enumerate() {
            out[i + j] = out[i + j].add(&l.mul(r));
        }
    }
    out
}

/// Scales so the coefficient of `S1^(pq)` in the first entry is `+1`.
fn normalize_factor(f: Vec<SPoly>, pq: u32) -> Option<Vec<SPoly>> {
    let n = f[0].symbols();
    let c = f[0].coeff(&Monomial::power(n, 1, pq));
    if c.is_zero() {
        return None;
    }
    let inv = c.recip();
    Some(f.iter().map(|x| x.scale_by(&inv)).collect())
}

/// Factors the small identities `(1,1)`, `(2,1)`, `(1,2)`.
///
/// The degree-q factor is `D·(1 − Σ μ_k t^k)` and the degree-p factor is
/// `D·(1 − Σ μ_k t^k)·G` truncated at `t^p`; the linear system for μ is
/// exactly the statement that the latter has no `t^(p+1)..t^(p+q)` terms.
pub fn factorize_small(id: &CHIdentity) -> Result<Factorization> {
    let (p, q) = (id.p, id.q);
    if !matches!((p, q), (1, 1) | (2, 1) | (1, 2)) || id.osp {
        return Ok(Factorization::NotAttempted);
    }
    let (big, small, flip) = if q > p { (q, p, true) } else { (p, q, false) };
    let n = p + q;
    let c = correction(big, small)?;
    let mut right = vec![c.det.clone()];
    right.extend(c.nu.iter().map(SPoly::neg));
    let mut left = Vec::with_capacity(big + 1);
    for j in 0..=n {
        let v = (0..=j.min(small)).fold(SPoly::zero(n), |acc, k| {
            acc.add(&right[k].mul(&c.newton[j - k]))
        });
        if j <= big {
            left.push(v);
        } else if !v.is_empty() {
            return Ok(Factorization::NotAttempted);
        }
    }
    let (mut left, mut right) = (left, right);
    if flip {
        // Degrees swap roles: the big factor now has degree q.
        let l: Vec<SPoly> = right.iter().map(SPoly::flip_signs).collect();
        let r: Vec<SPoly> = left.iter().map(SPoly::flip_signs).collect();
        left = l;
        right = r;
    }
    let pq = (p * q) as u32;
    let (Some(left), Some(right)) = (normalize_factor(left, pq), normalize_factor(right, pq))
    else {
        return Ok(Factorization::NotAttempted);
    };
    if convolve(&left, &right) != id.coeffs {
        return Ok(Factorization::NotAttempted);
    }
    Ok(Factorization::Factors { left, right })
}
