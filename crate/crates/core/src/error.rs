use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong while building signals, coarse-graining,
/// estimating entropy, or running the ensemble statistics.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A signal sample was NaN or infinite.
    NonFiniteSample { index: usize },
    /// Signals must contain at least one sample.
    EmptySignal,
    /// A relative tolerance on a constant signal would resolve to r = 0,
    /// making every comparison degenerate.
    ZeroVariance,
    /// The input is shorter than the operation requires.
    TooShort { needed: usize, actual: usize },
    /// Variance or standard-deviation coarse-graining at scale 1: the
    /// spread of a single sample is always 0.
    DegenerateScale,
    /// A parameter is outside its valid range.
    BadParam(&'static str),
    /// Chirp frequencies must satisfy 0 < start < end < Nyquist.
    BadFrequency { f_start: f64, f_end: f64, nyquist: f64 },
    /// Sliding-window geometry is unusable (window longer than the signal,
    /// or a hop of zero).
    BadWindow(&'static str),
    /// A state variable left the representable range during integration.
    NumericBlowup,
    /// Profiles passed to an ensemble summary disagree on their scale
    /// range or method.
    MixedConfigs,
    /// A statistical test received groups with no usable variation.
    Degenerate,
    /// p-values must lie in [0, 1].
    BadP(f64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFiniteSample { index } => {
                write!(f, "sample {index} is not a finite number")
            }
            Error::EmptySignal => write!(f, "signal has no samples"),
            Error::ZeroVariance => {
                write!(f, "signal is constant; relative tolerance resolves to 0")
            }
            Error::TooShort { needed, actual } => {
                write!(f, "signal too short: need at least {needed} samples, got {actual}")
            }
            Error::DegenerateScale => {
                write!(f, "spread-based coarse-graining is undefined at scale 1")
            }
            Error::BadParam(what) => write!(f, "invalid parameter: {what}"),
            Error::BadFrequency { f_start, f_end, nyquist } => write!(
                f,
                "bad frequency range: need 0 < {f_start} < {f_end} < Nyquist ({nyquist})"
            ),
            Error::BadWindow(what) => write!(f, "invalid window: {what}"),
            Error::NumericBlowup => write!(f, "numerical integration blew up"),
            Error::MixedConfigs => {
                write!(f, "profiles disagree on scale range or method")
            }
            Error::Degenerate => write!(f, "statistical test input is degenerate"),
            Error::BadP(p) => write!(f, "p-value {p} outside [0, 1]"),
        }
    }
}

impl core::error::Error for Error {}
