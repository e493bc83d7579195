use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid diagonal index {index:?}: {reason}")]
    InvalidIndex { index: Vec<usize>, reason: String },

    #[error("revlex comparison needs equal degrees, got {left} and {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("generators are not pairwise coprime")]
    NotCoprime,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("oracle unavailable: {0}")]
    OracleUnavailable(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_) | Error::OracleUnavailable(_))
    }
}
