use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tuple string {0:?}: expected letters from H, V, 0, 1")]
    InvalidTupleString(String),

    #[error("filling is not standard: {0}")]
    NotStandard(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("input is not symmetric: residual at {0}")]
    NotSymmetric(String),

    #[error("{0} is not contained in the staircase of size {1}")]
    OutsideStaircase(Partition, usize),

    #[error("{0} is not {1}-bounded")]
    NotBounded(Partition, usize),

    #[error("unsupported operator shape {0}")]
    UnsupportedShape(Partition),

    #[error("not in the span of the 2-Schur basis: residual at {0}")]
    NotInSpan(Partition),

    #[error("singular basis matrix in degree {0}")]
    SingularBasis(usize),

    #[error("inversion matrix violates condition (*) at ({0}, {1})")]
    ConditionStar(usize, usize),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("size {n} exceeds enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("unknown sweep {0:?}")]
    UnknownSweep(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
