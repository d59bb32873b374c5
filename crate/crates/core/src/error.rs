//! Error types shared by all modules.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable list mismatch: {0:?} vs {1:?}")]
    VarMismatch(Vec<String>, Vec<String>),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unbound variable `{0}` in evaluation")]
    UnboundVariable(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("resultant requires positive degree in `{0}`")]
    DegreeZeroInVar(String),
    #[error("ell must be >= 1 (got {0})")]
    BadEll(i64),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("point is not on the surface (relative residual {residual:.3e})")]
    NotOnSurface { residual: f64 },
    #[error("ambiguous kernel: two pivot ratios below threshold ({0:.3e}, {1:.3e})")]
    AmbiguousKernel(f64, f64),
    #[error("degenerate univariate slice (identically zero)")]
    DegenerateSlice,
    #[error("root iteration failed to converge")]
    RootsDiverged,
    #[error("step size underflow at s = {last_s}")]
    StepUnderflow { last_s: Complex64 },
    #[error("integrator exceeded the step budget")]
    TooManySteps,
    #[error("pole of w(s) inside the residual window (|w| = {0:.3e})")]
    PoleInWindow(f64),
    #[error("quadrature did not converge (estimated error {0:.3e})")]
    QuadratureFailure(f64),
    #[error("bisection bracket failure: {0}")]
    BracketFailure(String),
    #[error("zero solution rejected")]
    ZeroSolution,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
