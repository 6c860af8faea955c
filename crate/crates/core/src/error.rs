use thiserror::Error;

/// Errors raised by the decision engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("coefficient of {term} has a denominator divisible by {p}")]
    BadReduction { p: u32, term: String },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("prime mismatch: {left} vs {right}")]
    PrimeMismatch { left: u32, right: u32 },
    #[error("term count {terms} exceeds the cap of {cap}")]
    ResourceExceeded { terms: usize, cap: usize },
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("the criterion requires a complete ambient (assert the `complete` flag)")]
    NotComplete,
    #[error("divisor coefficient {0} is outside [0, 1)")]
    CoefficientOutOfRange(String),
    #[error("points {0} and {1} coincide")]
    DegeneratePoints(String, String),
    #[error("cross-ratio {lambda} is degenerate modulo {p}")]
    LambdaDegenerateModP { lambda: String, p: u32 },
    #[error("the ordinarity test needs an odd prime")]
    EvenPrime,
    #[error("polynomial is not homogeneous: {0}")]
    HomogeneityViolation(String),
    #[error("cover order {n} is divisible by the characteristic {p}")]
    WildRamification { n: u32, p: u32 },
    #[error("subspace {0} does not occur in any filtration")]
    OrphanSubspace(usize),
    #[error("subspace {0} is not a hyperplane")]
    NotHyperplaneCase(usize),
    #[error("general position of the blowup centers was not asserted")]
    GeneralPositionNotAsserted,
    #[error("input outside the supported data model: {0}")]
    OutOfModel(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
