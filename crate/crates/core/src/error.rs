use std::fmt;

use serde::Serialize;

pub type Result<T> = std::result::Result<T, Error>;

/// Why a degree profile or construction could not be built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    /// The degree sum is odd.
    Parity,
    /// The profile is too dense for any of the available constructions.
    Density,
    /// The profile lies outside every implemented construction.
    Unsupported,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::Parity => "parity",
            Reason::Density => "density",
            Reason::Unsupported => "unsupported",
        })
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not in the graph")]
    EdgeAbsent(usize, usize),
    #[error("parse error at {location}: {message}")]
    Parse { location: Location, message: String },
    #[error("unsupported header: {0}")]
    UnsupportedHeader(String),
    #[error("n = {n} is too small (need n >= {min})")]
    TooSmall { n: usize, min: usize },
    #[error("unrealizable ({0})")]
    Unrealizable(Reason),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("outside the valid regime: {0}")]
    RegimeViolated(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("n = {n} exceeds the exhaustive-search cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("search space of {required} graphs exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
}

/// Position of a parse failure: a 1-based line for text formats, a 0-based
/// byte offset for graph6.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Line(usize),
    Byte(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(l) => write!(f, "line {l}"),
            Location::Byte(b) => write!(f, "byte {b}"),
        }
    }
}

impl Error {
    pub(crate) fn parse_line(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: Location::Line(line),
            message: message.into(),
        }
    }

    pub(crate) fn parse_byte(byte: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: Location::Byte(byte),
            message: message.into(),
        }
    }
}
