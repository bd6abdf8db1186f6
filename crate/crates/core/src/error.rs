use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system type {family}{rank}")]
    InvalidType { family: String, rank: usize },

    #[error("size bound exceeded: {what} has more than {bound} elements")]
    BoundExceeded { what: &'static str, bound: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {weight} is not regular for the parabolic {parabolic}")]
    NotRegular { weight: String, parabolic: String },

    #[error("parabolic {finer} is not contained in the stabilizer {coarser}")]
    ParabolicMismatch { finer: String, coarser: String },

    #[error("could not parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("not an L-S path: {0}")]
    InvalidPath(String),

    #[error("union of Richardson varieties is not pointed")]
    NotPointed,

    #[error("no defining chain exists for the path on this Richardson variety")]
    NoDefiningChain,

    #[error("indices {0} and {1} are comparable; no straightening relation")]
    ComparablePair(String, String),

    #[error("evaluation matrix is rank deficient ({rank} < {expected})")]
    RankDeficient { rank: usize, expected: usize },

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
