use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VhError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("quadrature did not converge: best estimate {value:e} with error bound {error:e}")]
    NonConvergence { value: f64, error: f64 },
    #[error("perturbation theory invalid: L_AA + L_BB = {0} exceeds 1")]
    Perturbative(f64),
}

pub type Result<T> = std::result::Result<T, VhError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(VhError::Domain(msg.into()))
}
