use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate cone: {0}")]
    DegenerateCone(String),
    #[error("feasible region is not full-dimensional")]
    NotFullDimensional,
    #[error("invalid weight {0}: must be strictly positive on both rays of the dual cone")]
    InvalidWeight(String),
    #[error("weight {0} lies outside the support cone")]
    WeightOutsideSigma(String),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("operands live in different semigroup rings")]
    ContextMismatch,
    #[error("invalid monomial ordering: {0}")]
    InvalidOrdering(String),
    #[error("quotient is not finite-dimensional (more than {0} standard monomials)")]
    QuotientNotFinite(usize),
    #[error("pair queue exhausted after {0} reductions")]
    PairQueueExhausted(usize),
    #[error("fan sweep stalled: {0}")]
    SweepStalled(String),
    #[error("dual cone has a Hilbert basis element with a negative coordinate: {0}")]
    DualNotNonnegative(String),
    #[error("invalid input: {0}")]
    Parse(String),
}
