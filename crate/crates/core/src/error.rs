use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group closure exceeded the size cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("generators mix incompatible payloads: {0}")]
    IncompatiblePayloads(String),

    #[error("empty generator list")]
    NoGenerators,

    #[error("no consistent dihedral action on (Z/{n})^2")]
    NoConsistentAction { n: u32 },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("degree {0} is outside 1..=8")]
    InvalidDegree(i32),

    #[error("no blow-up target {index} on a cycle of length {len}")]
    NoSuchTarget { index: usize, len: usize },

    #[error("representation is not a homomorphism: {0}")]
    HomomorphismFailure(String),

    #[error("fixed-space dimension {kernel} disagrees with projector trace {trace}")]
    ProjectorMismatch { kernel: usize, trace: String },

    #[error("invalid fiber model: {0}")]
    InvalidModel(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid group definition: {0}")]
    GroupDefinition(String),
}
