use thiserror::Error;

/// Crate-wide error type.
///
/// Every variant carries a machine-readable kind (see [`Error::kind`]) so the
/// command-line layer can map failures onto its exit-code contract.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("self-loop at `{0}`")]
    SelfLoop(String),

    #[error("vertex pair must be distinct, got `{0}` twice")]
    SamePair(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("diameter != 2")]
    NotDiameterTwo,

    #[error("graph has {n} vertices, cap is {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("min size {min_size} exceeds vertex count {n}")]
    MinSizeTooLarge { min_size: usize, n: usize },

    #[error("tree has fewer than 2 vertices, nothing to prune")]
    NothingToPrune,

    #[error("diameter class must be at least 1")]
    ZeroDiameterClass,

    #[error("not a cliqueless hamlet: {0}")]
    NotCliquelessHamlet(&'static str),

    #[error("invalid club: {0}")]
    InvalidClub(String),

    #[error("{file}:{line}: {reason}")]
    Parse {
        file: String,
        line: usize,
        reason: String,
    },

    #[error("{0}: empty edge-list document")]
    EmptyDocument(String),

    #[error("highlight edge ({0}, {1}) not in graph")]
    HighlightEdgeMissing(String, String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable kind token used in the CLI error grammar `error: <kind>: ...`.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DuplicateLabel(_)
            | Error::UnknownVertex(_)
            | Error::SelfLoop(_)
            | Error::Parse { .. }
            | Error::EmptyDocument(_) => "parse",
            Error::Io(_) => "io",
            _ => "precondition",
        }
    }
}
