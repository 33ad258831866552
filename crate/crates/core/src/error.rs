use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspace dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("field mismatch: cannot mix real and complex subspaces")]
    FieldMismatch,
    #[error("subspaces intersect nontrivially (dim of sum {sum} < {expected})")]
    NontrivialIntersection { sum: usize, expected: usize },
    #[error("requested dimensions exceed the ambient space: need {needed}, have {ambient}")]
    DimensionOverflow { needed: usize, ambient: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported maximum of 65536")]
    FieldTooLarge(u64),
    #[error("division by zero in a finite field")]
    DivisionByZero,
    #[error("character sum requires a nontrivial character")]
    TrivialCharacter,
    #[error("character sum requires degree d >= 1 with gcd(d, q) = 1 (got d = {degree}, q = {order})")]
    DegreeConditionViolated { degree: usize, order: u64 },
    #[error("elements belong to different fields")]
    ForeignElement,

    #[error("code size {size} exceeds the cap of {cap}")]
    SizeOverflow { size: u128, cap: u128 },
    #[error("exhaustive search over {size} codewords exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("binary word {index} has length {found}, expected {expected}")]
    LengthMismatch { index: usize, found: usize, expected: usize },
    #[error("code has duplicate codewords {0} and {1}")]
    DuplicateCodewords(usize, usize),
    #[error("could not draw {wanted} distinct codewords within the retry budget")]
    DegenerateEnsemble { wanted: usize },
    #[error("code is empty")]
    EmptyCode,
    #[error("expected a code with at least two codewords")]
    TooFewCodewords,
    #[error("expected a constant-dimension code")]
    NotConstantDimension,

    #[error("matrix is rank deficient (rank {rank} < {rows} rows)")]
    RankDeficient { rank: usize, rows: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("argument outside the domain: {0}")]
    DomainError(String),

    #[error("malformed code file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
