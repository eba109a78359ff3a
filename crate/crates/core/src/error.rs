use thiserror::Error;

/// Errors raised by the model, the game classes and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition of the {n} players: {detail}")]
    NotAPartition { n: usize, detail: String },

    #[error("player {player} out of range for a game with {n} players")]
    PlayerOutOfRange { player: usize, n: usize },

    #[error("corrupt dynamic-programming tables: {0}")]
    CorruptTables(String),

    #[error("value of a coalition of size {size} is intractable (exact search is capped at {cap})")]
    IntractableEvaluation { size: usize, cap: usize },

    #[error("game class `{0}` has no syntactic player types")]
    NoSyntacticTypes(&'static str),

    #[error("threshold games need a monotone inner game: {0}")]
    NonMonotoneInner(String),

    #[error("instance too large for exact search: {what} is {size}, cap is {cap}")]
    TooLarge { what: &'static str, size: usize, cap: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("too many players for brute force: {n} > cap {cap}")]
    TooManyPlayers { n: usize, cap: usize },

    #[error("unsolvable: {reason}")]
    Unsolvable { reason: String },

    #[error("sum of the multiset ({sum}) is not divisible by k = {k}")]
    NotDivisible { sum: u64, k: usize },

    #[error("vertex {0} is adjacent to every other vertex")]
    UniversalVertex(usize),

    #[error("invalid instance: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}
