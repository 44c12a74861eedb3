use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    DimensionTooLarge {
        dim: usize,
        max: usize,
    },
    OddDimension(usize),
    DegeneratePairing,
    InvalidPairing(&'static str),
    OutOfRange {
        what: &'static str,
        value: i64,
    },
    NotInvolution,
    NotPositiveDefinite,
    NotRootLattice(&'static str),
    SingularMatrix,
    CapExceeded {
        cap: usize,
    },
    TypeMismatch {
        expected: &'static str,
        found: String,
    },
    NotLineClass,
    NotPairingPreserving,
    UnsupportedType(String),
    NonzeroTrace,
    PointNotOnCurve,
    PointNotOnLine,
    BadPrime(u64),
    /// An exhaustive verification that must hold found a counterexample.
    VerificationFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::DimensionTooLarge { dim, max } => {
                write!(f, "dimension {dim} exceeds the supported maximum {max}")
            }
            Error::OddDimension(d) => write!(f, "odd dimension {d}"),
            Error::DegeneratePairing => f.write_str("pairing is degenerate"),
            Error::InvalidPairing(why) => write!(f, "invalid pairing: {why}"),
            Error::OutOfRange { what, value } => write!(f, "{what} out of range: {value}"),
            Error::NotInvolution => f.write_str("matrix is not an involution"),
            Error::NotPositiveDefinite => f.write_str("lattice is not positive definite"),
            Error::NotRootLattice(why) => write!(f, "not a root lattice: {why}"),
            Error::SingularMatrix => f.write_str("matrix is singular"),
            Error::CapExceeded { cap } => write!(f, "group closure exceeded cap {cap}"),
            Error::TypeMismatch { expected, found } => {
                write!(f, "root system type mismatch: expected {expected}, found {found}")
            }
            Error::NotLineClass => f.write_str("class is not a line (D² = −1, D·K = −1)"),
            Error::NotPairingPreserving => f.write_str("map does not preserve the pairing"),
            Error::UnsupportedType(t) => write!(f, "unsupported root system type {t}"),
            Error::NonzeroTrace => f.write_str("matrix has nonzero trace"),
            Error::PointNotOnCurve => f.write_str("point is not on the curve"),
            Error::PointNotOnLine => f.write_str("point is not on the line"),
            Error::BadPrime(p) => write!(f, "prime {p} divides the coefficient data"),
            Error::VerificationFailed(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
