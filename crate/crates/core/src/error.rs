use std::path::PathBuf;

use num_bigint::BigUint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("malformed cycle notation {text:?} at byte {pos}: {reason}")]
    MalformedCycles {
        text: String,
        pos: usize,
        reason: &'static str,
    },

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: u64, degree: usize },

    #[error("point {0} appears more than once")]
    DuplicatePoint(usize),

    #[error("image table is not a bijection of 1..={0}")]
    NotBijection(usize),

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    EnumerationCap { order: BigUint, cap: u64 },

    #[error("index {index} exceeds the coset cap {cap}")]
    CosetCap { index: BigUint, cap: u64 },

    #[error("group order {order} exceeds the lattice cap {cap}")]
    LatticeCap { order: BigUint, cap: u64 },

    #[error("generator {0} of the proposed subgroup is not in the group")]
    NotSubgroup(String),

    #[error("subgroup is not normal: conjugate {0} escapes it")]
    NotNormal(String),

    #[error("{prime} does not divide the group order {order}")]
    PrimeDoesNotDivide { prime: u64, order: BigUint },

    #[error("group of order {order} is not a {prime}-group")]
    NotPGroup { prime: u64, order: BigUint },

    #[error("group is not nilpotent")]
    NotNilpotent,

    #[error("trivial group has no smallest prime divisor")]
    TrivialGroup,

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("catalog {path}: {message}")]
    Catalog { path: PathBuf, message: String },

    #[error("entry {name:?}: {source}")]
    Entry {
        name: String,
        #[source]
        source: Box<Error>,
    },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Cap overruns are reported as skips rather than failures.
    pub fn is_cap(&self) -> bool {
        match self {
            Error::EnumerationCap { .. } | Error::CosetCap { .. } | Error::LatticeCap { .. } => {
                true
            }
            Error::Entry { source, .. } => source.is_cap(),
            _ => false,
        }
    }
}
