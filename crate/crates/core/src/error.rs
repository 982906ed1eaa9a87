use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the numerical kernel and the physics layers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Matrix shapes do not fit the operation.
    Dimension {
        op: &'static str,
        expected: String,
        found: String,
    },
    /// A matrix entry or scalar input was NaN or infinite.
    NonFinite { what: &'static str },
    /// Pivot fell below the singularity threshold during elimination.
    Singular { op: &'static str, pivot: f64 },
    /// An iterative routine did not converge.
    NoConvergence { op: &'static str, detail: String },
    /// A parameter lies outside its admissible domain.
    Domain { field: &'static str, detail: String },
    /// The drift matrix has an eigenvalue with non-negative real part.
    Unstable { max_real_part: f64 },
    /// The integrator step violates `‖M‖·dt ≤ 0.1`.
    StepSize { dt: f64, limit: f64 },
    /// A covariance matrix violates the uncertainty principle.
    Unphysical { what: &'static str, value: f64 },
    /// Homogeneous mean-value equations are degenerate.
    Degenerate { what: &'static str },
    /// Wraps an error with the parameter point at which it happened.
    AtPoint {
        context: String,
        source: alloc::boxed::Box<Error>,
    },
}

impl Error {
    pub(crate) fn dimension(op: &'static str, expected: impl Into<String>, found: impl Into<String>) -> Self {
        Error::Dimension {
            op,
            expected: expected.into(),
            found: found.into(),
        }
    }

    pub(crate) fn domain(field: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            field,
            detail: detail.into(),
        }
    }

    /// Innermost error with point context stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtPoint { source, .. } => source.root(),
            other => other,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension { op, expected, found } => {
                write!(f, "{op}: expected {expected}, found {found}")
            }
            Error::NonFinite { what } => write!(f, "{what} contains a non-finite value"),
            Error::Singular { op, pivot } => write!(f, "{op}: matrix is singular (pivot {pivot:e})"),
            Error::NoConvergence { op, detail } => write!(f, "{op} did not converge: {detail}"),
            Error::Domain { field, detail } => write!(f, "invalid {field}: {detail}"),
            Error::Unstable { max_real_part } => write!(
                f,
                "drift matrix is not Hurwitz stable (max real part {max_real_part:e})"
            ),
            Error::StepSize { dt, limit } => {
                write!(f, "integration step {dt:e} exceeds stability limit {limit:e}")
            }
            Error::Unphysical { what, value } => {
                write!(
                    f,
                    "{what} is not a physical covariance matrix (symplectic eigenvalue {value})"
                )
            }
            Error::Degenerate { what } => write!(f, "degenerate configuration: {what}"),
            Error::AtPoint { context, source } => write!(f, "{source} at {context}"),
        }
    }
}

impl core::error::Error for Error {}
