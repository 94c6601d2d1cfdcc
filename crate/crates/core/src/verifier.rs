//! Exact checks of derived identities on concrete supermatrices.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::charfn::char_poly_block;
use crate::error::{Error, Result};
use crate::exterior::Multivector;
use crate::identity::{convolve, identity_coeffs, CHIdentity};
use crate::matrix::Matrix;
use crate::poly::{Evaluator, SPoly};
use crate::ring::{rat, Rational, Ring};
use crate::supermatrix::{osp_sample, random_supermatrix, Block, SuperMatrix};

/// Characteristic polynomial of the body of a diagonal block, over Q,
/// lowest degree first.
fn body_char_poly(m: &SuperMatrix, which: Block) -> Vec<Rational> {
    let g = m.generators();
    let block = m
        .block(which)
        .map(&Multivector::zero(g), |e| Multivector::scalar(g, e.body()));
    char_poly_block(&block)
        .expect("body entries are even")
        .body_coeffs()
}

/// Resultant of two polynomials (lowest degree first) via the Sylvester
/// determinant.
pub fn resultant(f: &[Rational], g: &[Rational]) -> Rational {
    let (m, n) = (f.len().saturating_sub(1), g.len().saturating_sub(1));
    let size = m + n;
    if size == 0 {
        return rat(1);
    }
    let zero = rat(0);
    let sylvester = Matrix::from_fn(size, size, &zero, |i, j| {
        // Rows 0..n hold shifted copies of f, rows n.. shifted copies of g;
        // column j multiplies x^(size-1-j).
        let (poly, shift) = if i < n { (f, i) } else { (g, i - n) };
        let deg = poly.len() - 1;
        match j.checked_sub(shift) {
            Some(k) if k <= deg => poly[deg - k].clone(),
            _ => zero.clone(),
        }
    });
    sylvester.det().expect("rational entries commute")
}

/// Whether some body eigenvalue of `A` equals one of `D`.
pub fn check_degenerate(m: &SuperMatrix) -> bool {
    if m.p() == 0 || m.q() == 0 {
        return false;
    }
    resultant(&body_char_poly(m, Block::A), &body_char_poly(m, Block::D)).is_zero()
}

/// Result of substituting a matrix into an identity.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub residual: SuperMatrix,
    /// The leading coefficient has zero body, so a zero residual says nothing.
    pub vacuous: bool,
    /// Values of the coefficients on the matrix, `coeffs[j]` first.
    pub coefficient_values: Vec<Multivector>,
}

/// `str(M^j)` for `j = 1..n` together with the powers `M^0..M^n`.
pub fn supertraces(m: &SuperMatrix, n: usize) -> (Vec<Multivector>, Vec<SuperMatrix>) {
    let powers = m.powers(n);
    let strs = powers[1..].iter().map(SuperMatrix::supertrace).collect();
    (strs, powers)
}

pub fn evaluate_identity(m: &SuperMatrix, id: &CHIdentity) -> Result<Evaluation> {
    if m.p() != id.p() || m.q() != id.q() {
        return Err(Error::DimensionMismatch(format!(
            "({},{}) identity applied to a ({},{}) supermatrix",
            id.p(),
            id.q(),
            m.p(),
            m.q()
        )));
    }
    let n = id.n();
    let (strs, powers) = supertraces(m, n);
    let mut ev = Evaluator::new(strs)?;
    let values = id
        .coeffs()
        .iter()
        .map(|c| ev.eval(c))
        .collect::<Result<Vec<_>>>()?;
    let mut residual = SuperMatrix::identity(m.p(), m.q(), m.generators())
        .scale_even(&Multivector::zero(m.generators()))?;
    for (j, v) in values.iter().enumerate() {
        if v.is_empty() {
            continue;
        }
        residual = residual.mat_add(&powers[n - j].scale_even(v)?)?;
    }
    let vacuous = values[0].body().is_zero();
    Ok(Evaluation {
        residual,
        vacuous,
        coefficient_values: values,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialStatus {
    Pass,
    /// Zero residual on a matrix whose leading coefficient has zero body.
    Vacuous,
    Fail,
    /// No nondegenerate sample found for this trial's seed.
    Skipped,
}

impl TrialStatus {
    fn as_str(self) -> &'static str {
        match self {
            TrialStatus::Pass => "pass",
            TrialStatus::Vacuous => "vacuous",
            TrialStatus::Fail => "fail",
            TrialStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TrialOutcome {
    pub trial: usize,
    pub seed: u64,
    pub status: TrialStatus,
    pub residual: Option<SuperMatrix>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub p: usize,
    pub q: usize,
    pub osp: bool,
    pub seed: u64,
    pub generators: usize,
    pub soul_grade: usize,
    pub trials: usize,
    pub passes: usize,
    pub failures: usize,
    /// Vacuous passes are counted among `passes` but never as evidence.
    pub vacuous: usize,
    pub skips: usize,
    pub outcomes: Vec<TrialOutcome>,
    pub wall_time: Duration,
}

impl VerificationReport {
    /// No failures and at least one non-vacuous pass.
    pub fn succeeded(&self) -> bool {
        self.failures == 0 && self.passes > self.vacuous
    }

    /// JSON form. Wall time is left out so reruns are byte-identical.
    pub fn to_json_value(&self) -> Value {
        let outcomes: Vec<Value> = self
            .outcomes
            .iter()
            .map(|o| {
                let mut v = json!({"trial": o.trial, "seed": o.seed, "status": o.status.as_str()});
                if let Some(r) = &o.residual {
                    v["residual"] = serde_json::to_value(r).expect("serializable");
                }
                v
            })
            .collect();
        json!({
            "p": self.p,
            "q": self.q,
            "osp": self.osp,
            "seed": self.seed,
            "generators": self.generators,
            "soul_grade": self.soul_grade,
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "vacuous": self.vacuous,
            "skips": self.skips,
            "outcomes": outcomes,
        })
    }

    pub fn summary(&self) -> String {
        format!(
            "({},{}){} seed={} N={} grade<={}: {} trials, {} passed ({} vacuous), {} failed, {} skipped in {:.2?}",
            self.p,
            self.q,
            if self.osp { " osp" } else { "" },
            self.seed,
            self.generators,
            self.soul_grade,
            self.trials,
            self.passes,
            self.vacuous,
            self.failures,
            self.skips,
            self.wall_time
        )
    }
}

/// Seed of trial `i` in a batch started from `seed`.
pub fn trial_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_add(i as u64)
}

fn run_trial(
    id: &CHIdentity,
    trial: usize,
    seed: u64,
    generators: usize,
    soul_grade: usize,
) -> Result<TrialOutcome> {
    let sample = if id.is_osp() {
        osp_sample(id.p(), id.q(), generators, seed, soul_grade).map(|s| s.m)
    } else {
        random_supermatrix(id.p(), id.q(), generators, seed, soul_grade)
    };
    let m = match sample {
        Ok(m) => m,
        Err(Error::DegenerateSampling(_)) => {
            return Ok(TrialOutcome {
                trial,
                seed,
                status: TrialStatus::Skipped,
                residual: None,
            })
        }
        Err(e) => return Err(e),
    };
    let ev = evaluate_identity(&m, id)?;
    let (status, residual) = match (ev.residual.is_zero(), ev.vacuous) {
        (true, false) => (TrialStatus::Pass, None),
        (true, true) => (TrialStatus::Vacuous, None),
        (false, _) => (TrialStatus::Fail, Some(ev.residual)),
    };
    Ok(TrialOutcome {
        trial,
        seed,
        status,
        residual,
    })
}

/// Evaluates `id` on `trials` seeded samples (orthosymplectic ones when the
/// identity is OSp-specialized). Trials run in parallel.
pub fn verify_identity_batch(
    id: &CHIdentity,
    trials: usize,
    seed: u64,
    generators: usize,
    soul_grade: usize,
) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    let start = Instant::now();
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|i| run_trial(id, i, trial_seed(seed, i), generators, soul_grade))
        .collect::<Result<Vec<_>>>()?;
    let count = |s: TrialStatus| outcomes.iter().filter(|o| o.status == s).count();
    let vacuous = count(TrialStatus::Vacuous);
    Ok(VerificationReport {
        p: id.p(),
        q: id.q(),
        osp: id.is_osp(),
        seed,
        generators,
        soul_grade,
        trials,
        passes: count(TrialStatus::Pass) + vacuous,
        failures: count(TrialStatus::Fail),
        vacuous,
        skips: count(TrialStatus::Skipped),
        outcomes,
        wall_time: start.elapsed(),
    })
}

/// Derives the generic `(p, q)` identity and verifies it on random samples.
pub fn verify_batch(
    p: usize,
    q: usize,
    trials: usize,
    seed: u64,
    generators: usize,
    soul_grade: usize,
) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    let id = identity_coeffs(p, q)?;
    verify_identity_batch(&id, trials, seed, generators, soul_grade)
}

pub const MAX_ORACLE_SIZE: usize = 5;

/// Leibniz sum over permutations; an oracle for [`Matrix::det`].
pub fn oracle_det_permutation<R: Ring>(e: &Matrix<R>) -> Result<R> {
    let n = e.rows();
    if !e.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} is not square",
            e.rows(),
            e.cols()
        )));
    }
    if n > MAX_ORACLE_SIZE {
        return Err(Error::SizeTooLarge(n));
    }
    let mut acc = e.zero_element().zero_like();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |sigma| {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if sigma[i] > sigma[j] {
                    inversions += 1;
                }
            }
        }
        let term = (0..n).fold(e.zero_element().one_like(), |t, i| {
            t.mul(e.get(i, sigma[i]))
        });
        acc = if inversions % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    });
    Ok(acc)
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Whether the matrix polynomials `left·right` (coefficients highest power
/// first, central) multiply out to the identity.
pub fn verify_factorization(id: &CHIdentity, left: &[SPoly], right: &[SPoly]) -> Result<bool> {
    if left.is_empty() || right.is_empty() || left.len() + right.len() != id.n() + 2 {
        return Err(Error::DimensionMismatch(format!(
            "factor degrees {} and {} do not sum to {}",
            left.len() as isize - 1,
            right.len() as isize - 1,
            id.n()
        )));
    }
    Ok(convolve(left, right) == id.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::{factorize_small, Factorization};
    use crate::poly::parse_spoly;
    use crate::ring::rat;

    fn diag(a: &[i64], d: &[i64]) -> SuperMatrix {
        let r = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
        SuperMatrix::diagonal(&r(a), &r(d), 2)
    }

    #[test]
    fn degeneracy() {
        assert!(!check_degenerate(&diag(&[2], &[3])));
        assert!(check_degenerate(&diag(&[2], &[2])));
        assert!(!check_degenerate(&diag(&[2, 5], &[])));
    }

    #[test]
    fn irrational_spectrum() {
        // A = [[0, 2], [1, 0]] has char poly x² − 2; D = [1].
        let x2 = [rat(-2), rat(0), rat(1)];
        let x1 = [rat(-1), rat(1)];
        assert_eq!(resultant(&x2, &x1), rat(-1));
        let g = 2;
        let s = |v| Multivector::scalar(g, rat(v));
        let z = Multivector::zero(g);
        let e = Matrix::from_rows(
            vec![
                vec![s(0), s(2), z.clone()],
                vec![s(1), s(0), z.clone()],
                vec![z.clone(), z.clone(), s(1)],
            ],
            &z,
        )
        .unwrap();
        assert!(!check_degenerate(&SuperMatrix::new(2, 1, e).unwrap()));
    }

    #[test]
    fn resultant_detects_common_roots() {
        // (x−1)(x−2) and (x−2)(x+5)
        let f = [rat(2), rat(-3), rat(1)];
        let g = [rat(-10), rat(3), rat(1)];
        assert_eq!(resultant(&f, &g), rat(0));
        // x − a and x − b: resultant b − a up to sign.
        let r = resultant(&[rat(-3), rat(1)], &[rat(-7), rat(1)]);
        assert!(r == rat(4) || r == rat(-4));
    }

    #[test]
    fn diagonal_annihilation() {
        let id = identity_coeffs(1, 1).unwrap();
        let ev = evaluate_identity(&diag(&[2], &[3]), &id).unwrap();
        assert!(ev.residual.is_zero());
        assert!(!ev.vacuous);
        let ev = evaluate_identity(&diag(&[4], &[4]), &id).unwrap();
        assert!(ev.residual.is_zero());
        assert!(ev.vacuous);
        assert!(ev.coefficient_values.iter().all(|v| v.body().is_zero()));
        assert!(evaluate_identity(&diag(&[1, 2], &[3]), &id).is_err());
    }

    #[test]
    fn batches() {
        let r = verify_batch(1, 1, 5, 3, 4, 3).unwrap();
        assert_eq!(r.passes, 5);
        assert_eq!(r.trials, r.passes + r.failures + r.skips);
        assert!(r.succeeded());
        assert!(verify_batch(1, 1, 0, 3, 4, 3).is_err());
        let again = verify_batch(1, 1, 5, 3, 4, 3).unwrap();
        assert_eq!(r.to_json_value(), again.to_json_value());
    }

    #[test]
    fn corrupted_identity_fails() {
        let id = identity_coeffs(2, 1).unwrap();
        let mut coeffs = id.coeffs().to_vec();
        coeffs[2] = coeffs[2].add(&parse_spoly("S1^4", 3).unwrap());
        let bad = CHIdentity::from_parts(2, 1, coeffs, false).unwrap();
        let r = verify_identity_batch(&bad, 3, 11, 4, 3).unwrap();
        assert_eq!(r.failures, 3);
        assert!(r.outcomes.iter().all(|o| o.residual.is_some()));
        assert!(!r.succeeded());
    }

    #[test]
    fn permutation_oracle() {
        let q = |rows: Vec<Vec<i64>>| {
            Matrix::from_rows(
                rows.into_iter()
                    .map(|r| r.into_iter().map(rat).collect())
                    .collect(),
                &rat(0),
            )
            .unwrap()
        };
        assert_eq!(
            oracle_det_permutation(&Matrix::identity(4, &rat(0))).unwrap(),
            rat(1)
        );
        assert_eq!(oracle_det_permutation(&q(vec![vec![-3]])).unwrap(), rat(-3));
        let e = q(vec![vec![2, -1, 3], vec![0, 4, 1], vec![5, 2, -2]]);
        assert_eq!(oracle_det_permutation(&e).unwrap(), e.det().unwrap());
        assert_eq!(
            oracle_det_permutation(&Matrix::identity(6, &rat(0))),
            Err(Error::SizeTooLarge(6))
        );
    }

    #[test]
    fn factorization_checks() {
        let id = identity_coeffs(1, 1).unwrap();
        let Factorization::Factors { left, right } = factorize_small(&id).unwrap() else {
            panic!()
        };
        assert!(verify_factorization(&id, &left, &right).unwrap());
        let mut bent = right.clone();
        bent[1] = bent[1].add(&parse_spoly("S2", 2).unwrap());
        assert!(!verify_factorization(&id, &left, &bent).unwrap());
        assert!(verify_factorization(&id, &left, &right[..1]).is_err());
    }
}
