use thiserror::Error;

/// Errors raised while parsing inputs or validating preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty alphabet")]
    EmptyAlphabet,
    #[error("invalid alphabet token {0:?}")]
    InvalidToken(String),
    #[error("duplicate alphabet token {0:?}")]
    DuplicateToken(String),
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),
    #[error("empty word")]
    EmptyWord,
    #[error("multidegree has {got} entries but the alphabet has {expected} letters")]
    MultiDegreeArity { expected: usize, got: usize },
    #[error("multidegree must have a positive total")]
    ZeroMultiDegree,
    #[error("{word} is not in {set}")]
    NotInBasisSet { word: String, set: &'static str },
    #[error("tree parse error at byte {pos}: {msg}")]
    TreeParse { pos: usize, msg: String },
    #[error("graph error: {0}")]
    Graph(String),
    #[error("size mismatch: {vertices} vertices against {leaves} leaves")]
    SizeMismatch { vertices: usize, leaves: usize },
    #[error("invalid leaf assignment: {0}")]
    Assignment(String),
    #[error("fixture {name}, line {line}: {msg}")]
    Fixture { name: String, line: usize, msg: String },
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("invalid alphabet map: {0}")]
    AlphabetMap(String),
    #[error("empty {0} set for pairing matrix")]
    EmptyMatrix(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
