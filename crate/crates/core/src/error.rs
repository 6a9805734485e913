use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("subgroups have different ambient groups")]
    AmbientMismatch,

    #[error("not a subgroup of the ambient group: {0}")]
    NotASubgroup(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group order {order} exceeds the materialization cap {cap}")]
    CapExceeded { order: u64, cap: u64 },

    #[error("subgroup is not a sigma_i-subgroup for the given block")]
    NotSigmaSubgroup,

    #[error("subgroup not listed in the lattice")]
    NotInLattice,

    #[error("group has no complete Hall sigma-set")]
    NoCompleteHallSet,

    #[error("the trivial group has no minimal normal subgroups")]
    TrivialGroup,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
