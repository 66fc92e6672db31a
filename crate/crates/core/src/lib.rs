//! Exact multivariate Bernoulli and Euler numbers and polynomials of
//! symbolic order.
//!
//! Numbers B_v^(t), 𝔈_v^(t) and polynomials 𝓑_v^(t)(x), 𝓔_v^(t)(x) are
//! computed as moments of dot-product umbrae t.ι, t.η over ℚ[t], with a
//! second, partition-based route kept as an oracle. The [`verify`] module
//! checks the algebraic identities these objects satisfy.

pub mod multiindex;
pub mod poly;
pub mod polynomials;
pub mod ring;
pub mod series;
pub mod umbrae;
pub mod verify;

pub use multiindex::{MultiIndex, MultiIndexPartition};
pub use poly::{BiPolynomial, OrderPolynomial, UniPoly};
pub use polynomials::MvPolynomial;
pub use ring::{Rational, Ring};
pub use series::{TruncatedSeries, DEFAULT_ORDER};
pub use umbrae::{Family, Tables, TupleUmbra, Umbra};
pub use verify::{MonteCarloConfig, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degree {requested} exceeds truncation order {order}")]
    TruncationExceeded { requested: usize, order: usize },
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("partitions of the zero multi-index are not enumerated")]
    ZeroMultiIndex,
    #[error("leading coefficient is not invertible")]
    NotInvertible,
    #[error("series must have at least one coefficient")]
    EmptySeries,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
