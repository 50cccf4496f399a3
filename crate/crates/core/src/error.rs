use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid dimension n = {0}; n must be at least 1")]
    InvalidDimension(i64),

    #[error("shape mismatch: expected {expected}, got {found}")]
    Shape { expected: String, found: String },

    #[error("not an element of su(n,1): {0}")]
    NotInAlgebra(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("degenerate plane: |X|^2|Y|^2 - <X,Y>^2 = {area:e} is below {threshold:e}")]
    DegeneratePlane { area: f64, threshold: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("no sign change of F found in (0, {limit}]")]
    NoRoot { limit: f64 },

    #[error("point is not in V-: <z,z> = {0:e} must be negative")]
    NotNegative(f64),

    #[error("numerical inconsistency: {0}")]
    Numerical(String),

    #[error("matrix does not preserve the Hermitian form: |AJA* - J| = {residual:e}")]
    InvalidIsometry { residual: f64 },

    #[error("closed-form and assembled log C({n}) disagree: {closed} vs {assembled}")]
    Inconsistent { n: usize, closed: f64, assembled: f64 },

    #[error("volume must be positive: {0}")]
    Sign(String),

    #[error("value not representable: {0}")]
    Unrepresentable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Validates the dimension parameter and converts it to `usize`.
pub(crate) fn check_dim(n: usize) -> Result<usize> {
    if n == 0 {
        Err(Error::InvalidDimension(0))
    } else {
        Ok(n)
    }
}
