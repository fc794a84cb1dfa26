use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// The variants fall into three classes which the command-line front end maps
/// to distinct exit codes: input errors, enumeration guard breaches, and
/// internal consistency failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error in diagram string {text:?}: unexpected token {token:?}")]
    DiagramSyntax { text: String, token: String },

    #[error("unknown family {family:?} in {token:?}")]
    UnknownFamily { family: String, token: String },

    #[error("rank {rank} out of bounds for family {family}")]
    RankOutOfBounds { family: char, rank: usize },

    #[error("invalid marking token {token:?}")]
    MarkingSyntax { token: String },

    #[error("marking not in ascending order at token {token:?}")]
    MarkingOrder { token: String },

    #[error("node {node} out of range (diagram {diagram} has {rank} nodes)")]
    NodeOutOfRange {
        node: usize,
        diagram: String,
        rank: usize,
    },

    #[error("weyl enumeration guard exceeded: estimated order {estimated} > limit {limit}")]
    GuardLimit { estimated: u128, limit: u128 },

    #[error("minimal separating subset is not unique: {candidates:?}")]
    NonUniqueMinimum { candidates: Vec<Vec<usize>> },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::DiagramSyntax { .. }
                | Error::UnknownFamily { .. }
                | Error::RankOutOfBounds { .. }
                | Error::MarkingSyntax { .. }
                | Error::MarkingOrder { .. }
                | Error::NodeOutOfRange { .. }
        )
    }

    /// Process exit code for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            e if e.is_input_error() => 2,
            Error::GuardLimit { .. } => 3,
            _ => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
