use thiserror::Error;

/// Errors produced by graph parsing and polynomial computations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("order {k} out of range 0..={n}")]
    OrderOutOfRange { k: usize, n: usize },

    #[error("graph too large for {route}: n={n}, limit is {limit}")]
    TooLarge { route: &'static str, n: usize, limit: usize },

    #[error("{route} exceeded the work limit of {limit} live terms; {hint}")]
    WorkLimit {
        route: &'static str,
        limit: usize,
        hint: &'static str,
    },

    #[error("no exponent target given for variable {0}")]
    MissingTarget(String),

    #[error("factor contains negative exponent in {0}; shift the factors before pruned extraction")]
    NegativeExponent(String),

    #[error("extracted coefficient is not a polynomial in z with nonnegative integer coefficients")]
    NotACountingPolynomial,

    #[error("the zero polynomial has no expected value")]
    ZeroPolynomial,

    #[error("graph has no vertices")]
    EmptyVertexSet,
}

pub type Result<T> = std::result::Result<T, Error>;
