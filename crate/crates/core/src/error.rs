use thiserror::Error;

/// Errors produced anywhere in the derivation / verification pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator count mismatch: {0} vs {1}")]
    GeneratorMismatch(usize, usize),
    #[error("symbol count mismatch: {0} vs {1}")]
    SymbolMismatch(usize, usize),
    #[error("blade index {index} out of range for {generators} generators")]
    BladeIndex { index: usize, generators: usize },
    #[error("not invertible: element has zero body")]
    NotInvertible,
    #[error("parity error: {0}")]
    Parity(String),
    #[error("not divisible")]
    NotDivisible,
    #[error("undefined degree of the zero polynomial")]
    ZeroPolynomial,
    #[error("not a perfect square")]
    NotSquare,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("q > p: use the sign-flip dual")]
    UseSignFlipDual,
    #[error("no symplectic form for odd q = {0}")]
    NoSymplecticForm(usize),
    #[error("could not generate nondegenerate sample after {0} attempts")]
    DegenerateSampling(usize),
    #[error("conjecture violation: {0}")]
    ConjectureViolation(String),
    #[error("vacuous OSp identity: every coefficient vanishes")]
    VacuousOsp,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("matrix size {0} too large for this routine")]
    SizeTooLarge(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Invalid(format!("json: {e}"))
    }
}
