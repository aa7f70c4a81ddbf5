use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation caps differ ({left} vs {right})")]
    CapMismatch { left: usize, right: usize },

    #[error("gcd of an empty list")]
    EmptyList,

    #[error("inexact division in {0}")]
    InexactDivision(&'static str),

    /// Parameters outside an operation's domain, e.g. `m >= n`.
    #[error("{0}")]
    InvalidParams(String),

    #[error("no printed sum for ch_{d}(x^{j}) (printed sums cover x, x^2, x^3 and the top power in odd degree)")]
    PaperSumUndefined { d: u32, j: u32 },

    #[error("{label}: entry {value} is not an integer")]
    NonIntegral { label: String, value: String },

    #[error("subgroup generator is zero; the quotient is not a finite cyclic group")]
    ZeroGenerator,
}

pub(crate) fn require_m_lt_n(m: u32, n: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParams("requires m >= 1".into()));
    }
    if m >= n {
        return Err(Error::InvalidParams(format!(
            "requires m < n (got m={m}, n={n})"
        )));
    }
    Ok(())
}
