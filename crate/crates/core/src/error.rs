use crate::bits::BitVec;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate, one variant per failure mode
/// so callers can match on the exact condition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("field degree {m} outside supported range 1..={max}")]
    DegreeOutOfRange { m: u32, max: u32 },

    #[error(
        "polynomial {poly:#x} must have degree exactly {expected} and a nonzero constant term"
    )]
    DegreeMismatch { expected: u32, poly: u64 },

    #[error("polynomial is not primitive: the power sequence repeats at step {first_repeat}")]
    NotPrimitive { first_repeat: usize },

    #[error("GF(2^{s}) is not a subfield of GF(2^{m})")]
    NotASubfield { s: u32, m: u32 },

    #[error("{what} {value} out of range (limit {limit})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("line direction must be a nonzero field element")]
    ZeroDirection,

    #[error("two distinct points are needed for a line, got point {index} twice")]
    SamePoint { index: usize },

    #[error("line passes through the origin, which has no column index")]
    OriginOnLine,

    #[error("empty line has no incidence vector")]
    EmptyLine,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("polynomial division leaves a nonzero remainder")]
    NonzeroRemainder,

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("base line passes through the origin; choose base points off the origin")]
    BaseLineThroughOrigin,

    #[error("cyclic shift orbit does not reproduce the enumerated line set: {detail}")]
    ShiftOrbitMismatch { detail: String },

    #[error("operation requires a cyclic code, but none of the checks found cyclic structure")]
    NotCyclicInput,

    #[error("code dimension {k} exceeds the exhaustive-search cap {cap}")]
    DimensionTooLarge { k: usize, cap: usize },

    #[error("code has no nonzero codewords")]
    ZeroDimension,

    #[error("line is not a row of the code's parity-check matrix")]
    LineNotInCode,

    #[error("split factor {q} must be at least 2")]
    BadSplitFactor { q: usize },

    #[error("codes are not nested: found a C2 word outside C1 ({witness})")]
    NotNested { witness: BitVec },

    #[error("probability {value} outside [0, 1]")]
    InvalidProbability { value: f64 },

    #[error("simulation reports disagree on {what}; refusing to merge")]
    ReportMismatch { what: &'static str },

    #[error("unsupported bundle format {found}, this build reads format {expected}")]
    BundleFormat { found: u32, expected: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable category name, used by the command-line tool
    /// for its `error[...]` prefix on stderr.
    pub fn category(&self) -> &'static str {
        match self {
            Error::DegreeOutOfRange { .. } => "degree_out_of_range",
            Error::DegreeMismatch { .. } => "degree_mismatch",
            Error::NotPrimitive { .. } => "not_primitive",
            Error::NotASubfield { .. } => "not_a_subfield",
            Error::OutOfRange { .. } => "out_of_range",
            Error::ZeroDirection => "zero_direction",
            Error::SamePoint { .. } => "same_point",
            Error::OriginOnLine => "origin_on_line",
            Error::EmptyLine => "empty_line",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::NonzeroRemainder => "nonzero_remainder",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::BaseLineThroughOrigin => "base_line_through_origin",
            Error::ShiftOrbitMismatch { .. } => "shift_orbit_mismatch",
            Error::NotCyclicInput => "not_cyclic",
            Error::DimensionTooLarge { .. } => "dimension_too_large",
            Error::ZeroDimension => "zero_dimension",
            Error::LineNotInCode => "line_not_in_code",
            Error::BadSplitFactor { .. } => "bad_split_factor",
            Error::NotNested { .. } => "not_nested",
            Error::InvalidProbability { .. } => "invalid_probability",
            Error::ReportMismatch { .. } => "report_mismatch",
            Error::BundleFormat { .. } => "bundle_format",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
