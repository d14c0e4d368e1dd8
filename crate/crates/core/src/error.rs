use thiserror::Error;

/// Errors surfaced by the numerical kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or iterative evaluation failed to reach its tolerance.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// The radial kernel was evaluated on (or too close to) the diagonal r = rho.
    #[error("radial kernel is singular at r = rho (|r - rho| = {gap:e} below floor {floor:e})")]
    DiagonalSingularity { gap: f64, floor: f64 },

    /// Adaptive quadrature could not certify the requested tolerance.
    #[error("quadrature failed: {0}")]
    Quadrature(String),

    /// Two profiles live on intervals of different measure.
    #[error("measure mismatch: |domain_f| = {left} vs |domain_g| = {right} differ beyond one cell width")]
    MeasureMismatch { left: f64, right: f64 },

    /// The descent solver hit its iteration cap.
    #[error("solver did not converge within {iters} iterations (relative gradient norm {grad_norm:.3e})")]
    SolverNonConvergence { iters: usize, grad_norm: f64 },

    /// Cholesky factorization of the stiffness matrix failed; the assembled
    /// matrix should always be symmetric positive definite.
    #[error("linear system factorization failed; this signals an assembly bug")]
    Factorization,

    /// Invalid problem or run configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// Malformed CSV input.
    #[error("csv parse error at line {line}: {msg}")]
    CsvParse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
