use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("root of unity order must be at least 3, got {0}")]
    InvalidOrder(u32),
    #[error("operation requires odd l, got {0}")]
    EvenOrder(u32),
    #[error("operation requires root-of-unity mode")]
    NeedsRootOfUnity,
    #[error("operation requires generic mode")]
    NeedsGeneric,
    #[error("field mode mismatch")]
    ModeMismatch,
    #[error("negative argument {0}")]
    NegativeArgument(i64),
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("division by zero")]
    DivisionByZero,
    #[error("binomial index out of range: n={n}, j={j}")]
    BinomialRange { n: i64, j: i64 },
    #[error("not an l-th root of unity")]
    NotRootOfUnity,
    #[error("generator {generator} is not legal in algebra {algebra}")]
    IllegalGenerator { generator: String, algebra: String },
    #[error("algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(String, String),
    #[error("algebra {0} requires root-of-unity mode")]
    AlgebraNeedsRoot(String),
    #[error("unbounded enumeration of {0} requires a cap")]
    Unbounded(String),
    #[error("word length {len} exceeds the oracle bound {max}")]
    DegreeBound { len: usize, max: usize },
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
