use thiserror::Error;

/// Errors raised by the combinatorial and oracle layers.
///
/// Every variant names the violated constraint so that callers (in
/// particular the CLI) can surface a precise message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("diagram parts must be weakly decreasing: part {index} is {value} after {prev}")]
    NotWeaklyDecreasing { index: usize, value: u32, prev: u32 },

    #[error("invalid rectangle: require 1 <= k < n, got k={k}, n={n}")]
    InvalidRectangle { k: u32, n: u32 },

    #[error("diagram {diagram} does not fit the {k}x{width} rectangle")]
    DoesNotFit {
        diagram: String,
        k: u32,
        width: u32,
    },

    #[error("jumping numbers must be strictly increasing: index {index} is {value} after {prev}")]
    JumpsNotIncreasing { index: usize, value: u32, prev: u32 },

    #[error("jumping number {value} out of range 1..={n}")]
    JumpOutOfRange { value: u32, n: u32 },

    #[error("expected {expected} jumping numbers for k={expected}, got {got}")]
    JumpsWrongLength { expected: u32, got: usize },

    #[error("rank table must start at 0, got {got}")]
    RankTableStart { got: u32 },

    #[error("rank table steps must be 0 or 1: entry {index} is {value} after {prev}")]
    RankTableStep { index: usize, value: u32, prev: u32 },

    #[error("rank table is empty")]
    RankTableEmpty,

    #[error("rank table has {len} entries but ambient dimension {n} needs {expected}")]
    RankTableLength { len: usize, n: u32, expected: usize },

    #[error("rank table ends at {got} but the context requires k={k}")]
    RankTableFinal { got: u32, k: u32 },

    #[error("context mismatch: ({k1},{n1}) vs ({k2},{n2})")]
    ContextMismatch { k1: u32, n1: u32, k2: u32, n2: u32 },

    #[error("{what} = {value} out of range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("unsupported field modulus {q}: supported primes are 2, 3, 5")]
    UnsupportedModulus { q: u8 },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("enumeration budget exceeded: {what}: {detail} (raise via SCHUBERT_BUDGET at your own risk)")]
    BudgetExceeded { what: String, detail: String },

    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
