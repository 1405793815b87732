//! Error types, split by who is at fault.
//!
//! [`ParamError`] means the caller asked for something outside the domain
//! (exit code 2 at the CLI). [`InternalError`] means the engine contradicted
//! itself — a non-integer fixed-point sum, disagreeing specializations, or a
//! localization/Schubert mismatch (exit code 3). The distinction matters for
//! scripting: a bad question is not a bad answer.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Internal(#[from] InternalError),
}

/// The caller's inputs violate a precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("window violated: C(n-r+1,2) <= m fails for (m,n,r) = ({m},{n},{r}): C({},2) = {lower} > {m}", n - r + 1)]
    WindowLower { m: u64, n: u32, r: u32, lower: u64 },

    #[error("window violated: C(r+1,2) <= C(n+1,2) - m fails for (m,n,r) = ({m},{n},{r}): C({},2) = {lhs} > {rhs}", r + 1)]
    WindowUpper {
        m: u64,
        n: u32,
        r: u32,
        lhs: u64,
        rhs: u64,
    },

    #[error("rank r = {r} exceeds matrix size n = {n}")]
    RankExceedsSize { r: u32, n: u32 },

    #[error("matrix size n must be positive")]
    MatrixSizeZero,

    #[error("subset rank {rank} out of range: C({n},{r}) = {total}")]
    SubsetRankOutOfRange {
        rank: u128,
        n: u32,
        r: u32,
        total: u128,
    },

    #[error("invalid subset: members must be strictly increasing values in 1..={ambient}")]
    InvalidSubset { ambient: u32 },

    #[error("binomial C({n},{k}) exceeds the supported range")]
    BinomialOverflow { n: u64, k: u64 },

    #[error("specialization needs {expected} entries, got {got}")]
    SpecializationLength { expected: usize, got: usize },

    #[error("specialization entries must be pairwise distinct: {value} repeats")]
    SpecializationRepeated { value: BigInt },

    #[error("check count must be at least 1")]
    ZeroChecks,

    #[error("an explicit lambda list supports exactly one check, got {checks}")]
    ExplicitLambdaChecks { checks: usize },

    #[error("cannot draw {n} distinct integers from [-10000, 10000]")]
    RandomRangeExhausted { n: u32 },
}

/// The engine produced inconsistent results. Any of these is a bug, not a
/// property of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InternalError {
    #[error("fixed-point sum for (m,n,r) = ({m},{n},{r}) is not an integer: {sum}")]
    NonIntegerSum { m: u64, n: u32, r: u32, sum: String },

    #[error(
        "specializations disagree for (m,n,r) = ({m},{n},{r}): lambda {lambda_a:?} gives {value_a}, lambda {lambda_b:?} gives {value_b}"
    )]
    SpecializationDisagreement {
        m: u64,
        n: u32,
        r: u32,
        // Boxed slices keep the cold diagnostic payload from bloating every
        // `Result` that threads an `Error` through the hot path.
        lambda_a: Box<[BigInt]>,
        value_a: BigInt,
        lambda_b: Box<[BigInt]>,
        value_b: BigInt,
    },

    #[error("zero factor in the Euler class product: lambda values collide")]
    ZeroEulerFactor,

    #[error(
        "localization and Schubert evaluations disagree for (m,n,r) = ({m},{n},{r}): {localization} vs {schubert}"
    )]
    OracleMismatch {
        m: u64,
        n: u32,
        r: u32,
        localization: BigInt,
        schubert: BigInt,
    },

    #[error(
        "duality violated: delta({m},{n},{r}) = {value} but delta({dual_m},{n},{dual_r}) = {dual_value}"
    )]
    DualityMismatch {
        m: u64,
        n: u32,
        r: u32,
        value: BigInt,
        dual_m: u64,
        dual_r: u32,
        dual_value: BigInt,
    },
}

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Param(_) => 2,
            Error::Internal(_) => 3,
        }
    }
}
