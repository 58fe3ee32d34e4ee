use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("base {0} is not an element of the semigroup")]
    InvalidBase(i64),

    #[error("point violates the defining inequality for (i, j) = ({i}, {j})")]
    NotInPolyhedron { i: usize, j: usize },

    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),

    #[error("ideals live over different ambient semigroups")]
    AmbientMismatch,

    #[error("{0} is not a unit modulo {1}")]
    InvalidAutomorphism(i64, i64),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("gluing weights {a} and {b} are not coprime")]
    NotCoprime { a: i64, b: i64 },

    #[error("gluing weight {weight} is not a member of {side}")]
    NotMember { weight: i64, side: String },

    #[error("no representation of {0} over the generators found within the search bound")]
    RepresentationNotFound(i64),

    #[error("embedded catalog fixture is corrupt: {0}")]
    CorruptCatalog(String),

    #[error("serialization failed: {0}")]
    Serialization(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}
