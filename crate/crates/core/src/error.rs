use thiserror::Error;

use crate::matroid::ElementSet;

/// Errors raised by the matroid, linear algebra and realization routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a matroid needs at least one basis")]
    EmptyBases,

    #[error("bases have different cardinalities ({expected} and {found})")]
    UnequalBasisSizes { expected: usize, found: usize },

    #[error("element {element} out of range for ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("ground set of size {0} exceeds the 63 element limit")]
    GroundSetTooLarge(usize),

    #[error("basis exchange fails for B1={b1}, B2={b2}, x={x}")]
    ExchangeAxiomViolation {
        b1: ElementSet,
        b2: ElementSet,
        x: usize,
    },

    #[error("rank {rank} exceeds ground set size {n}")]
    RankTooLarge { rank: usize, n: usize },

    #[error("ground sets differ ({left} vs {right} elements)")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("not the lattice of flats of a matroid: {reason}")]
    NotAFlatLattice {
        reason: String,
        witness: Vec<ElementSet>,
    },

    #[error("invalid modular cut: {reason}")]
    InvalidModularCut {
        reason: String,
        witness: Vec<ElementSet>,
    },

    #[error("{0} is not a quotient of {1}")]
    NotAQuotient(String, String),

    #[error("flat and circuit quotient criteria disagree")]
    QuotientCriteriaDisagree,

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("quotient has nullity {0}, expected an elementary quotient")]
    NotElementary(usize),

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("invalid major: {0}")]
    InvalidMajor(String),

    #[error("invalid flag matroid: {0}")]
    InvalidFlag(String),

    #[error("input too large for exhaustive enumeration: {0}")]
    TooLarge(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },

    #[error("operation requires an infinite field")]
    FiniteFieldUnsupported,

    #[error("invalid inputs: {0}")]
    InvalidInputs(String),

    #[error("invalid realization: {0}")]
    InvalidRealization(String),

    #[error("the supplied matrices do not realize the quotient: {0}")]
    NotARealizationOfQ(String),

    #[error("empty support")]
    EmptySupport,

    #[error("point has {found} coordinates, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("not a chain of flats: {0}")]
    NotAChainOfFlats(String),

    #[error("matroid has loops, its tropical linear space is empty")]
    HasLoops,

    #[error("degree {d} is smaller than generator degree {needed}")]
    DegreeTooSmall { d: usize, needed: usize },

    #[error("{0} monomials exceed the 63 element limit")]
    TooManyMonomials(usize),

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
