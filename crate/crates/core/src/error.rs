use thiserror::Error;

use crate::rootsys::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system type {family}{rank}")]
    InvalidType { family: Family, rank: usize },

    #[error("unknown root system family '{0}'")]
    UnknownFamily(String),

    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("vector {0} is not a root")]
    NotARoot(String),

    #[error("pairing with the zero vector")]
    ZeroPairing,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("parabolic with simple roots {qr:?} is not maximal")]
    NotMaximal { qr: Vec<usize> },

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    #[error("cayley step along {root} requires a root fixed by the current involution")]
    NotFixed { root: String },

    #[error("cayley step along {root} is not strongly orthogonal to earlier chain root {earlier}")]
    NotStronglyOrthogonal { root: String, earlier: String },

    #[error("orbit is {0}; operation needs a CR orbit")]
    WrongOrbitType(String),

    #[error("cannot parse {what} from '{input}'")]
    Parse { what: &'static str, input: String },

    #[error("theorem check failed: {message} [{reproducer}]")]
    TheoremViolation { message: String, reproducer: String },

    #[error("{reproducer}: {source}")]
    CaseFailed {
        reproducer: String,
        #[source]
        source: Box<Error>,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.into(),
        }
    }
}
