use thiserror::Error;

/// Stable, machine-readable reason attached to every domain failure.
///
/// The string form ends up in the `status` column of sweep CSVs, so the
/// names must not change between releases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainCode {
    /// θη ≥ ħ², σ would be imaginary and Σ singular.
    NonInvertibleDeformation,
    NonPositiveParameter,
    NonPositiveCoefficient,
    NotPositiveDefinite,
    /// The α₁ radicand is negative or its denominator vanishes.
    FieldTooWeak,
    /// An isoenergetic leg would pass through the flux cancellation point.
    TrajectoryCrossesCancellation,
    ProbabilityOutOfRange,
    DegenerateGap,
    NonPositiveTemperature,
    TemperatureOrder,
}

impl DomainCode {
    pub fn as_str(self) -> &'static str {
        match self {
            DomainCode::NonInvertibleDeformation => "non_invertible_deformation",
            DomainCode::NonPositiveParameter => "non_positive_parameter",
            DomainCode::NonPositiveCoefficient => "non_positive_coefficient",
            DomainCode::NotPositiveDefinite => "not_positive_definite",
            DomainCode::FieldTooWeak => "field_too_weak",
            DomainCode::TrajectoryCrossesCancellation => "trajectory_crosses_cancellation",
            DomainCode::ProbabilityOutOfRange => "probability_out_of_range",
            DomainCode::DegenerateGap => "degenerate_gap",
            DomainCode::NonPositiveTemperature => "non_positive_temperature",
            DomainCode::TemperatureOrder => "temperature_order",
        }
    }
}

impl std::fmt::Display for DomainCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error ({code}): {detail}")]
    Domain { code: DomainCode, detail: String },

    #[error("no sign change on bracket [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("{what} did not converge after {iterations} iterations (last change {residual:e})")]
    Convergence {
        what: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid configuration: {0}")]
    Validation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(code: DomainCode, detail: impl Into<String>) -> Self {
        Error::Domain {
            code,
            detail: detail.into(),
        }
    }

    /// Short status code used for per-row error reporting.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain { code, .. } => code.as_str(),
            Error::Bracket { .. } => "bracket_error",
            Error::Convergence { .. } => "convergence_error",
            Error::Parse { .. } => "parse_error",
            Error::Validation(_) => "validation_error",
            Error::Io(_) => "io_error",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
