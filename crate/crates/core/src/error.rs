use thiserror::Error;

/// Errors raised by the library. Messages are stable and surface verbatim in
/// CLI diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type IV factors are not supported")]
    TypeIV,
    #[error("unknown Albert type {0:?}")]
    UnknownType(String),
    #[error("invariant `{field}` must be positive")]
    ZeroInvariant { field: &'static str },
    #[error("invariant `{field}` = {value} exceeds the supported maximum {max}")]
    InvariantTooLarge { field: &'static str, value: u64, max: u64 },
    #[error("empty subset")]
    EmptySubset,
    #[error("a product needs at least one factor")]
    EmptyProduct,
    #[error("factor index {index} out of range for {len} factors")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("duplicate factor index {0}")]
    DuplicateIndex(usize),
    #[error("too many factors for exhaustive subset search ({count} > cap {cap})")]
    TooManyFactors { count: usize, cap: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("table entry out of domain: {0}")]
    OutOfTable(String),
    #[error("basis expected: the spanning vectors are linearly dependent")]
    DependentBasis,
    #[error("invalid form space: {0}")]
    InvalidSpace(String),
    #[error("invalid filtration profile: {0}")]
    InvalidProfile(String),
    #[error("rank {rank} exceeds 2h = {max}")]
    RankTooLarge { rank: u32, max: u64 },
    #[error("parameters outside the point-counting grid: {0}")]
    OutsideToyGrid(String),
    #[error("trivial subgroup: psi has a zero denominator")]
    TrivialSubgroup,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("prefix sum of the denominator weights is not positive at position {0}")]
    NonPositivePrefix(usize),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
