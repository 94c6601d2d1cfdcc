//! Exact derivation and verification of Cayley-Hamilton identities for
//! (p,q) supermatrices.
//!
//! The pipeline: Newton coefficients of the exponential generating function
//! ([`identity::newton_coeffs`]) feed a small Toeplitz linear system whose
//! solution corrects the generating function for the odd block; clearing
//! denominators yields polynomial coefficients in the supertraces
//! `S_j = str(M^j)` ([`identity::identity_coeffs`]). The [`verifier`] then
//! evaluates those identities on random supermatrices over a Grassmann algebra
//! and checks for an exact zero matrix.

pub mod charfn;
pub mod error;
pub mod exterior;
pub mod identity;
pub mod matrix;
pub mod poly;
pub mod render;
pub mod ring;
pub mod supermatrix;
pub mod verifier;

pub use charfn::{RatioForm, RatioVariant, UniPoly};
pub use error::{Error, Result};
pub use exterior::{blade_mul, Blade, Multivector, Parity};
pub use identity::{CHIdentity, Factorization};
pub use matrix::Matrix;
pub use poly::{Monomial, SPoly, SRational, TruncSeries};
pub use ring::{Rational, Ring};
pub use supermatrix::SuperMatrix;
pub use verifier::{TrialOutcome, TrialStatus, VerificationReport};
