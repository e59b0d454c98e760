use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse partition {0:?}")]
    ParsePartition(String),
    #[error("cannot parse cycle type {0:?}")]
    ParseCycleType(String),
    #[error("cannot parse hook {0:?}, expected \"a,b\"")]
    ParseHook(String),
    #[error("cannot parse permutation {0:?}")]
    ParsePermutation(String),
    #[error("cannot parse tableau entry {0:?}")]
    ParseEntry(String),
    #[error("parts {0:?} are not weakly decreasing")]
    NotPartition(Vec<i64>),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("shape {0} is not a partition")]
    NotPartitionShape(String),
    #[error("cell ({row},{col}) is outside the shape")]
    CellOutOfShape { row: usize, col: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0}")]
    Gate(String),
    #[error("expected an integer but got {0}")]
    NonIntegral(String),
    #[error("multiplicity {0} is negative")]
    NegativeMultiplicity(String),
    #[error("series shape mismatch: {0}")]
    SeriesShape(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
