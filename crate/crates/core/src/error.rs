use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation degree must be at least 1")]
    ZeroDegree,
    #[error("permutation degree {0} exceeds the supported maximum")]
    DegreeTooLarge(usize),
    #[error("image sequence is not a bijection")]
    NotBijection,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("sequence of length {len} cannot be permuted by a degree-{degree} permutation")]
    LengthMismatch { degree: usize, len: usize },
    #[error("packed form is only defined up to degree 99, got {0}")]
    PackDegree(usize),
    #[error("packed value does not encode a permutation of the stated degree")]
    InvalidPacked,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("vector degree {found} does not match basis degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("cannot insert the zero vector")]
    ZeroVector,
    #[error("leading permutation {0} is already a pivot; vector was not sieved")]
    PivotCollision(crate::perm::Perm),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("{0} is not a tensor")]
    NotATensor(String),
    #[error("tensor {name} has {expected} indices, used with {found}")]
    ArityMismatch {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("tensor {0} used with no indices")]
    NoIndices(String),
    #[error("terms have different tensor factors: {left} vs {right}")]
    HeaderMismatch { left: String, right: String },
    #[error("terms have different free indices: {left} vs {right}")]
    FreeIndexMismatch { left: String, right: String },
    #[error("terms have different numbers of dummy pairs: {left} vs {right}")]
    DummyCountMismatch { left: usize, right: usize },
    #[error("symmetry relation must contain a single tensor factor")]
    RelationNotSingleFactor,
    #[error("symmetry relation for {0} contains dummy indices")]
    RelationHasDummies(String),
    #[error("expression degree {degree} exceeds the limit {limit}; relation bases need memory growing like {degree}!")]
    DegreeLimit { degree: usize, limit: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("dense oracle supports degree at most {max}, got {found}")]
    Oversize { max: usize, found: usize },
    #[error("relations of mixed degree: {expected} vs {found}")]
    DegreeMismatch { expected: usize, found: usize },
}
