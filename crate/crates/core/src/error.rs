use thiserror::Error;

/// Errors raised by the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid exponent triple ({a}, {b}, {c}): need 2 <= a <= b <= c")]
    InvalidTriple { a: i64, b: i64, c: i64 },

    #[error("invalid Hirzebruch-Jung input {alpha}/{beta}: need 0 <= beta < alpha, coprime")]
    InvalidFraction { alpha: i64, beta: i64 },

    #[error("continued fraction entries must be >= 2 and non-empty, got {0:?}")]
    InvalidExpansion(Vec<i64>),

    #[error("no beta with {lambda}*beta + 1 = 0 (mod {alpha})")]
    NoModularSolution { lambda: i64, alpha: i64 },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("ideal has an absent level, colength is infinite")]
    InfiniteColength,

    #[error("q({n}*m) = {value} is negative")]
    NegativeQ { n: usize, value: i64 },

    #[error("normal Hilbert function is not quadratic past stabilization")]
    HilbertFit,

    #[error("{0} is not integral")]
    NonIntegral(&'static str),

    #[error("intersection form on {0} vertices is not negative definite")]
    NotNegativeDefinite(u64),

    #[error("closed-form fundamental genus inapplicable: lambda_3 = {lambda3} > alpha = {alpha}")]
    FormulaInapplicable { lambda3: i64, alpha: i64 },

    #[error("classification paths disagree for ({a}, {b}, {c}): {detail}")]
    PathDisagreement {
        a: i64,
        b: i64,
        c: i64,
        detail: String,
    },

    #[error("({a}, {b}, {c}) is outside the certificate families (2,5,c>=10) and (3,4,c>=8)")]
    OutsideCertificateFamily { a: i64, b: i64, c: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
