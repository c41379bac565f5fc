use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("{op} expects a polynomial in q only, got a term in w")]
    InvolvesW { op: &'static str },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("sequence is not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),

    #[error("parity mismatch: {0}")]
    Parity(String),

    #[error("table invariant violated at (i={i}, j={j}): {reason}")]
    Invariant { i: i64, j: i64, reason: String },

    #[error(
        "closed form and composed path disagree for n={n}, k={k} at q^{i} w^{j}: {closed} vs {composed}"
    )]
    PathMismatch {
        n: usize,
        k: usize,
        i: i64,
        j: i64,
        closed: i64,
        composed: i64,
    },
}

impl Error {
    pub(crate) fn range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            detail: detail.into(),
        }
    }
}
