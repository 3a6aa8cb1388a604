use thiserror::Error;

use crate::places::Place;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("d = {0} does not define a quadratic field (must be squarefree and not 0 or 1)")]
    InvalidQuadraticField(i64),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("prime {prime} divides the discriminant of a degree-{degree} polynomial")]
    RamifiedPrime { prime: u64, degree: usize },
    #[error("invalid Brauer class: {0}")]
    InvalidClass(String),
    #[error("classes live over different base fields")]
    BaseMismatch,
    #[error("search for {what} exhausted at bound {bound}")]
    SearchExhausted { what: &'static str, bound: u64 },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("form is degenerate (zero determinant)")]
    Degenerate,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("form entry {0} is not invertible in the extension")]
    NonInvertibleEntry(usize),
    #[error("extension degree {0} is even")]
    EvenDegree(usize),
    #[error("corestriction is nonzero at {}; no unitary involution exists", join_places(.0))]
    CoresNonzero(Vec<Place>),
    #[error("Schur index {0} is even")]
    EvenIndex(u64),
    #[error("index {0} is outside the supported range")]
    UnsupportedIndex(u64),
    #[error("integer too large to factor: {0}")]
    TooLarge(String),
    #[error("{0}")]
    InvalidInput(String),
}

fn join_places(places: &[Place]) -> String {
    places
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
