use thiserror::Error;

/// Errors raised while building presentations, instantiating blocks,
/// evaluating recipes, or planning.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relator mentions unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown catalog block `{0}`")]
    UnknownBlock(String),
    #[error("invalid parameter for `{block}`: {reason}")]
    InvalidParameter { block: String, reason: String },
    #[error("({e}, {sigma}) violates e + sigma = 0 mod 4")]
    ParityViolation { e: i64, sigma: i64 },
    #[error("no unconsumed marker named `{0}`")]
    MarkerNotFound(String),
    #[error("genus mismatch in symplectic sum: {0} vs {1}")]
    GenusMismatch(u32, u32),
    #[error("self-intersections {0} and {1} do not cancel")]
    SquareMismatch(i64, i64),
    #[error("torus `{0}` is not Lagrangian")]
    NotLagrangian(String),
    #[error("torus `{0}` carries no word data")]
    TorusLacksWordData(String),
    #[error("gluing references curve `{curve}` which `{marker}` does not carry")]
    BadGluing { marker: String, curve: String },
    #[error("resolution of {count} components with {intersections} intersections is disconnected")]
    DisconnectedResolution { count: usize, intersections: u32 },
    #[error("component `{0}` repeated but has nonzero square")]
    NonParallelCopies(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no construction available for (c, chi) = ({c}, {chi})")]
    Unplannable { c: i64, chi: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
