use thiserror::Error;

/// Errors surfaced by evaluation and verification routines.
///
/// Exact-rational paths never fail; every variant here comes from the
/// floating-point paths or from parameter validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A floating-point evaluation produced an infinite or NaN component.
    #[error("non-finite result in floating-point evaluation")]
    NonFinite,
    /// An identity was requested at an excluded point of its domain,
    /// e.g. the geometric closed form at its pole.
    #[error("singular point {0}")]
    SingularPoint(&'static str),
    /// Arguments inconsistent with the requested operation or mode.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
