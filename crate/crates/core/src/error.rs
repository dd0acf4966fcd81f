use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not invertible: gcd with the modulus is {gcd}")]
    NotInvertible { gcd: String },
    /// Confinement met a vanishing pivot: the term has an integer residue
    /// obstructing the reduction.
    #[error("invalid input form: confinement pivot vanishes at loop index {index}")]
    InvalidInputForm { index: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("series not invertible: {0}")]
    NotInvertibleSeries(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("no generic instance found for k={k} after {attempts} draws")]
    ReportDegenerate { k: usize, attempts: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
