use thiserror::Error;

/// Crate-wide error type.
///
/// The CLI maps variants onto exit codes: configuration errors exit with 2,
/// physics-domain errors with 3, convergence/diagnostic failures with 4.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid physical input (non-positive frequency, n <= delta, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid configuration (bad basis bounds, unknown keys, bad grids, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// No grid field ionizes at least 10%.
    #[error("threshold above scan range (maximum yield {max_yield:.6e} at F = {f_max:.6e} au)")]
    ThresholdAboveRange { max_yield: f64, f_max: f64 },

    /// The lowest grid field already ionizes at least 10%.
    #[error("threshold below scan range (yield {yield_at_min:.6e} at F = {f_min:.6e} au)")]
    ThresholdBelowRange { yield_at_min: f64, f_min: f64 },

    /// Photon-block cutoff too small for the requested basis and frequency.
    #[error(
        "photon cutoff K = {k} is too small: transport from the launch state to the \
         basis edge takes {required} photons (+{guard} guard blocks); \
         refusing a silently under-converged ionization calculation"
    )]
    PhotonCutoff { k: usize, required: usize, guard: usize },

    /// Eigendecomposition failed its residual or conditioning checks.
    #[error("ill-conditioned eigendecomposition: worst residual {worst_residual:.3e} exceeds {bound:.3e}")]
    Diagnostic { worst_residual: f64, bound: f64 },

    /// A numerical convergence contract was violated.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// A hopping amplitude vanished; transport past that bond is impossible.
    #[error("chain severed at bond {bond}: hopping amplitude is zero")]
    ChainSevered { bond: usize },

    /// Bisection target could not be bracketed.
    #[error("range error: {0}")]
    Range(String),

    /// Threshold fits that lost one or more points.
    #[error("fit error: threshold extraction failed for t = {failed:?} periods: {first_cause}")]
    Fit { failed: Vec<f64>, first_cause: String },

    #[error("LAPACK {routine} failed with info = {info}")]
    Lapack { routine: &'static str, info: i32 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code the CLI uses for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Io(_) => 2,
            Error::Domain(_)
            | Error::ThresholdAboveRange { .. }
            | Error::ThresholdBelowRange { .. }
            | Error::ChainSevered { .. }
            | Error::Range(_)
            | Error::Fit { .. } => 3,
            Error::PhotonCutoff { .. }
            | Error::Diagnostic { .. }
            | Error::Convergence(_)
            | Error::Lapack { .. } => 4,
        }
    }

    /// Stable machine-readable tag for run records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Config(_) => "config",
            Error::ThresholdAboveRange { .. } => "threshold_above_range",
            Error::ThresholdBelowRange { .. } => "threshold_below_range",
            Error::PhotonCutoff { .. } => "photon_cutoff",
            Error::Diagnostic { .. } => "diagnostic",
            Error::Convergence(_) => "convergence",
            Error::ChainSevered { .. } => "chain_severed",
            Error::Range(_) => "range",
            Error::Fit { .. } => "fit",
            Error::Lapack { .. } => "lapack",
            Error::Io(_) => "io",
        }
    }
}
