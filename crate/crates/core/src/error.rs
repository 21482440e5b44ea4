use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("not a Latin square: {0}")]
    NotLatinSquare(String),

    #[error("table has no two-sided identity element")]
    NoIdentity,

    #[error("set is not closed under the loop operations")]
    NotClosed,

    #[error("subloop is not normal")]
    NotNormal,

    #[error("set is not a subloop")]
    NotSubloop,

    #[error("loop is not an abelian group")]
    NotAbelianGroup,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("generators do not act transitively")]
    NotTransitive,

    #[error("coset representative for point {point} does not map the base point to it")]
    BadCosetRep { point: usize },

    #[error("word {0} is not inner for this loop")]
    NotInnerWord(String),

    #[error("word set does not generate the {scope} mapping group of this loop")]
    WordSetInsufficient { scope: &'static str },

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("subloops belong to loops of different order ({left} vs {right})")]
    NotSameLoop { left: usize, right: usize },

    #[error("element {elem} out of range for a loop of order {order}")]
    OutOfRange { elem: usize, order: usize },

    #[error("word syntax: {0}")]
    WordSyntax(String),
}

pub type Result<T> = std::result::Result<T, Error>;
