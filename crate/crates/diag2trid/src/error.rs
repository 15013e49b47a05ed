//! Crate-wide error type and the exit-code taxonomy used by the CLI.

use std::fmt;
use std::io;
use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate.
///
/// Variants fall into three classes, mirrored by the CLI exit codes:
/// invalid input (exit 2), numerical breakdown (exit 3), and I/O (exit 4).
/// Numerical breakdown is not a bug signal: the polynomial construction route
/// is expected to break down for large or clustered spectra, and the
/// benchmark counts those events instead of aborting.
#[derive(Debug)]
pub enum Error {
    /// The zero polynomial has no leading coefficient.
    ZeroPolynomial,
    /// Polynomial division by the zero polynomial.
    DivideByZeroPoly,
    /// An operation that needs at least one eigenvalue got an empty list.
    EmptySpectrum,
    /// Prescribed eigenvalues must satisfy λ₁ < λ₂ < … < λₙ.
    /// `index` is the 0-based position that is not greater than its predecessor.
    NotStrictlyIncreasing { index: usize },
    /// Two sequences or matrices that must agree in length/dimension do not.
    DimensionMismatch { expected: usize, actual: usize },
    /// A polynomial remainder in the division chain vanished or dropped
    /// degree at step `step` (1-based ν). Signals repeated/clustered roots
    /// or catastrophic cancellation.
    DegenerateRemainder { step: usize },
    /// A remainder leading coefficient γ_ν came out ≤ 0 (or non-finite) in
    /// floating point at step `step`; the off-diagonal entry √γ_ν does not
    /// exist over the reals.
    NonPositiveGamma { step: usize, value: f64 },
    /// The tridiagonal matrix has a zero off-diagonal entry at `index`
    /// (0-based), so it splits into independent blocks.
    ReducedMatrix { index: usize },
    /// Two computed eigenvalues are closer than the eigensolver can separate
    /// (`gap` between values `index` and `index + 1`); inverse iteration
    /// would be unreliable.
    ClusteredSpectrum { index: usize, gap: f64 },
    /// Spectrum sampling kept violating the minimum-gap constraint.
    ResampleLimitExceeded { attempts: usize },
    /// Malformed flag values, experiment configuration, or numeric tokens.
    InvalidInput { message: String },
    /// An I/O failure, annotated with the path involved.
    Io { path: PathBuf, source: io::Error },
}

impl Error {
    /// True for failure modes caused by finite-precision arithmetic rather
    /// than by the caller.
    pub fn is_numerical_breakdown(&self) -> bool {
        matches!(
            self,
            Error::DegenerateRemainder { .. }
                | Error::NonPositiveGamma { .. }
                | Error::ReducedMatrix { .. }
                | Error::ClusteredSpectrum { .. }
        )
    }

    /// CLI exit code class: 2 = invalid input, 3 = numerical breakdown, 4 = I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Io { .. } => 4,
            e if e.is_numerical_breakdown() => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => {
                write!(f, "the zero polynomial has no leading coefficient")
            }
            Error::DivideByZeroPoly => write!(f, "polynomial division by the zero polynomial"),
            Error::EmptySpectrum => write!(f, "at least one eigenvalue is required"),
            Error::NotStrictlyIncreasing { index } => write!(
                f,
                "eigenvalues must be strictly increasing; entry at index {index} \
                 is not greater than its predecessor"
            ),
            Error::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected}, got {actual}")
            }
            Error::DegenerateRemainder { step } => write!(
                f,
                "division chain broke down at step ν = {step}: remainder vanished or \
                 dropped degree (clustered roots or catastrophic cancellation)"
            ),
            Error::NonPositiveGamma { step, value } => write!(
                f,
                "division chain broke down at step ν = {step}: leading remainder \
                 coefficient γ = {value:e} is not positive"
            ),
            Error::ReducedMatrix { index } => write!(
                f,
                "matrix is reduced: off-diagonal entry at index {index} is zero"
            ),
            Error::ClusteredSpectrum { index, gap } => write!(
                f,
                "eigenvalues {index} and {} are only {gap:e} apart; too clustered \
                 for inverse iteration",
                index + 1
            ),
            Error::ResampleLimitExceeded { attempts } => write!(
                f,
                "gave up sampling a spectrum satisfying the minimum gap after \
                 {attempts} attempts"
            ),
            Error::InvalidInput { message } => write!(f, "{message}"),
            Error::Io { path, source } => {
                write!(f, "I/O error on {}: {source}", path.display())
            }
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}
