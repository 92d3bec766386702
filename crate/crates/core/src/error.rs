use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series must have zero constant term")]
    NonzeroConstantTerm,

    #[error("series constant term is not invertible")]
    NotInvertible,

    #[error("fewer samples ({got}) than unknowns ({needed})")]
    TooFewSamples { got: usize, needed: usize },

    #[error("duplicate sample point (d={d}, g={g})")]
    DuplicateSample { d: String, g: String },

    #[error("interpolation system is rank deficient (rank {rank} of {unknowns})")]
    RankDeficient { rank: usize, unknowns: usize },

    #[error("inconsistent sample #{index} at (d={d}, g={g}): degree bound {degree} too small or upstream bug")]
    Inconsistent {
        index: usize,
        d: String,
        g: String,
        degree: u32,
    },

    #[error("class vector cap {cap} too small, need {needed}")]
    InsufficientCap { cap: usize, needed: usize },

    #[error("class vector has kind {found}, expected {expected}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },

    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: i64, max: i64 },

    #[error("expression weight {found:?} does not match dimension {expected}")]
    WeightMismatch { expected: u32, found: Option<u32> },

    #[error("invalid model space: {0}")]
    InvalidSpace(String),

    #[error("cannot parse expression {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("held-out check failed for {expr} at degrees {degrees:?}: fitted {fitted}, direct {direct}")]
    HeldOutMismatch {
        expr: String,
        degrees: Vec<i64>,
        fitted: String,
        direct: String,
    },

    #[error("invalid secant problem: {0}")]
    InvalidProblem(String),

    #[error("routes disagree for {what}: {detail}")]
    RouteMismatch { what: String, detail: String },

    #[error("count {value} is not an integer")]
    NonIntegral { value: String },

    #[error("cache: {0}")]
    Cache(String),
}

impl Error {
    /// Errors that indicate the engine contradicted itself, as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Inconsistent { .. }
                | Error::RankDeficient { .. }
                | Error::HeldOutMismatch { .. }
                | Error::RouteMismatch { .. }
                | Error::NonIntegral { .. }
        )
    }
}
