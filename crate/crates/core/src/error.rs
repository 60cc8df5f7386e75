use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("edge ({0}, {1}) has an endpoint outside the vertex set")]
    DanglingEdge(String, String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("graph format error on line {line}: {message}")]
    GraphFormat { line: usize, message: String },

    #[error("term `{0}` is trivial (contains inf)")]
    TrivialTerm(String),

    #[error("variable `{0}` has no value in the assignment")]
    Unbound(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex `{0}` does not reach every vertex of the graph")]
    NotRoot(String),

    #[error("invalid source transversal: {0}")]
    InvalidTransversal(String),

    #[error("name `{0}` is reserved")]
    ReservedName(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity(_))
    }
}
