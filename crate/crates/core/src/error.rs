use thiserror::Error;

use crate::graph::Vertex;

/// Every failure the library reports. The CLI maps these onto exit codes via
/// [`Error::kind`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,

    #[error("no such edge {0}-{1}")]
    NoSuchEdge(Vertex, Vertex),

    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("{position}: {message}")]
    Parse { position: String, message: String },

    #[error("hypothesis violated ({lemma}): {detail}")]
    Hypothesis { lemma: &'static str, detail: String },

    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),

    #[error("bridges belong to different host cycles")]
    DifferentHosts,

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("not a separator: {0:?}")]
    NotASeparator(Vec<Vertex>),

    #[error("graph is disconnected; unreachable vertices {unreachable:?}")]
    Disconnected { unreachable: Vec<Vertex> },

    #[error("insufficient connectivity for x = {x}: vertex connectivity is {kappa}")]
    InsufficientConnectivity { x: usize, kappa: usize },

    #[error("bad cell reference: {0}")]
    BadCell(String),

    #[error("inconsistent boundary data at cell {0}")]
    InconsistentBoundary(String),

    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),

    #[error("not a closed embedded complex: {0}")]
    NotClosedEmbedded(String),

    #[error("region data unavailable: {0}")]
    RegionsUnavailable(String),

    #[error("complex has no region cells of dimension {0}")]
    MissingRegions(usize),

    #[error("preflight equation ({equation}) failed: {detail}")]
    Preflight { equation: u8, detail: String },

    #[error("ledger is at stage {found}, expected {expected}")]
    WrongStage { found: String, expected: String },

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Hypothesis,
    Budget,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Hypothesis { .. }
            | Error::NotTwoConnected
            | Error::NotASeparator(_)
            | Error::Disconnected { .. }
            | Error::InsufficientConnectivity { .. }
            | Error::NotClosedEmbedded(_)
            | Error::MissingRegions(_)
            | Error::Preflight { .. } => ErrorKind::Hypothesis,
            Error::TooLarge(_) => ErrorKind::Budget,
            _ => ErrorKind::Input,
        }
    }

    pub(crate) fn parse(position: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            position: position.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
