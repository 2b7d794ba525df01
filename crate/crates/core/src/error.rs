use thiserror::Error;

/// Errors produced by the set, topology and hyperspace layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground size {0} is outside 1..=16")]
    GroundSize(usize),
    #[error("point {point} is outside a ground set of {ground} points")]
    PointOutOfRange { point: usize, ground: usize },
    #[error("ground sizes differ: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },
    #[error("closure of an empty family is undefined")]
    EmptyFamily,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("family is not a topology: {0}")]
    NotATopology(String),
    #[error("family is not a base: {0}")]
    InvalidBase(String),
    #[error("family is not a subbase for the given topology")]
    NotASubbase,
    #[error("space too large: {0}")]
    TooLarge(String),
    #[error("empty subset where a nonempty one is required")]
    EmptySubset,
    #[error("map is not injective")]
    NotInjective,
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("hyperspace family contains the empty set")]
    EmptyMember,
    #[error("family is not a subfamily of the hyperspace family")]
    NotASubfamily,
    #[error("hyperspaces are over different families or bases")]
    HyperMismatch,
    #[error("topology is not Vietoris-type")]
    NotVietorisType,
    #[error("Vietoris-type formulations disagree (subbase test {subbase}, join test {join})")]
    Inconsistent { subbase: bool, join: bool },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("witness verification failed: {0}")]
    WitnessFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
