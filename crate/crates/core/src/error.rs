use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCountMismatch { expected: usize, found: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("objects live over different base rings")]
    RingMismatch,
    #[error("target module is not free")]
    TargetNotFree,
    #[error("map is not well defined: {0}")]
    IllDefinedMap(String),
    #[error("generator lists differ: {0}")]
    GeneratorMismatch(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("base ring is not finite-dimensional over QQ")]
    InfiniteDimensional,
    #[error("canonical map in degree {degree} does not annihilate the divided-power relations")]
    AnnihilationFailure { degree: u32 },
    #[error("independent computations disagree: {0}")]
    RouteMismatch(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
