use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    #[error("polynomial term {term} is not divisible by x{axis}")]
    NotDivisible { axis: usize, term: String },

    #[error("representation mismatch: operator is {operator}, state is {state}")]
    RepresentationMismatch {
        operator: &'static str,
        state: &'static str,
    },

    #[error("mismatched mu parameters between states")]
    MuMismatch,

    #[error("invalid quantum numbers {label}: {reason}")]
    InvalidQuantumNumbers { label: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("non-finite input: {0}")]
    NonFinite(String),

    #[error("quadrature did not converge: estimated error {estimate:e} exceeds {requested:e}")]
    QuadratureNonConvergence { estimate: f64, requested: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}
