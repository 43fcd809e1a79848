use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ShellError {
    #[error("arc coordinate s = {s} lies outside the meridian domain [{lo}, {hi}]")]
    OutOfDomain { s: f64, lo: f64, hi: f64 },

    #[error("arc coordinate s = {s} is at an apex (R = {radius:e})")]
    ApexSingularity { s: f64, radius: f64 },

    #[error("degenerate elastic moduli: {0}")]
    DegenerateModuli(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("characteristic polynomial is identically zero")]
    DegeneratePolynomial,

    #[error("harmonic system is singular at h = {thickness}")]
    SingularSystem { thickness: f64 },

    #[error("radial solver did not converge: refinement disagreement {disagreement:e}")]
    NoConvergence { disagreement: f64 },

    #[error("radial boundary-value problem is ill-posed (singular discrete system)")]
    IllPosed,
}

pub type Result<T> = std::result::Result<T, ShellError>;
