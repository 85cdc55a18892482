use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length n = {0} must be an odd positive integer")]
    InvalidLength(usize),

    #[error("chain length k = {0} must be at least 2")]
    InvalidChainLength(usize),

    #[error("degree d = {0} must be at least 1")]
    InvalidDegree(usize),

    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error("divisor is not monic (leading coefficient must be a unit of Z4)")]
    NonMonicDivisor,

    #[error("polynomials are not coprime modulo 2")]
    NotCoprime,

    #[error("{0} is not a monic irreducible factor of x^{1} + 1 over F2")]
    NotAFactor(String, usize),

    #[error("Hensel lift of {0} does not divide x^n - 1 over Z4")]
    LiftFailed(String),

    #[error("order of 2 modulo {0} exceeds the supported extension degree")]
    Unsupported(usize),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("chain lengths differ: {0} vs {1}")]
    ChainLengthMismatch(usize, usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("element is zero")]
    ZeroElement,

    #[error("invalid ideal spec: {0}")]
    InvalidSpec(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("budget exceeded: need {needed} elements, budget is {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("the Gray map is defined only for k = 4 (got k = {0})")]
    GrayNeedsK4(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse { input: input.to_string(), reason: reason.into() }
    }

    /// Exit-code class used by the command-line front end:
    /// 2 bad input, 3 budget, 4 internal invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget { .. } => 3,
            Error::Internal(_) | Error::LiftFailed(_) => 4,
            _ => 2,
        }
    }
}

/// Fail with [`Error::Budget`] when `needed` exceeds `budget`.
pub(crate) fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::Budget { needed, budget })
    } else {
        Ok(())
    }
}
