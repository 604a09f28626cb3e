use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex id is >= the host's vertex count.
    VertexOutOfRange { v: usize, n: usize },
    /// A triple has repeated vertices.
    DegenerateTriple { a: usize, b: usize, c: usize },
    /// The same edge appears twice in an input list.
    DuplicateEdge { a: usize, b: usize, c: usize },
    /// Referenced edge is not present in the host.
    EdgeNotInHost { a: usize, b: usize, c: usize },
    /// A coloring's length does not match the host's edge count.
    ColoringLength { expected: usize, got: usize },
    /// A color is outside 1..=r.
    ColorOutOfRange { color: u64, r: u64 },
    /// A partition or class list violates its invariant (message says which).
    BadPartition(String),
    /// A parameter is outside an operation's stated domain.
    Domain(String),
    /// The input is larger than the operation's exhaustive reach.
    TooLarge(String),
    /// A node budget ran out before the computation finished.
    BudgetExhausted { nodes: u64 },
    /// An internal consistency check failed; indicates a bug, never a data
    /// condition.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for n={n}")
            }
            Error::DegenerateTriple { a, b, c } => {
                write!(f, "triple [{a},{b},{c}] has repeated vertices")
            }
            Error::DuplicateEdge { a, b, c } => {
                write!(f, "duplicate edge [{a},{b},{c}]")
            }
            Error::EdgeNotInHost { a, b, c } => {
                write!(f, "edge [{a},{b},{c}] not present in host")
            }
            Error::ColoringLength { expected, got } => {
                write!(f, "coloring has {got} entries, host has {expected} edges")
            }
            Error::ColorOutOfRange { color, r } => {
                write!(f, "color {color} outside 1..={r}")
            }
            Error::BadPartition(msg) => write!(f, "bad partition: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::TooLarge(msg) => write!(f, "input too large: {msg}"),
            Error::BudgetExhausted { nodes } => {
                write!(f, "budget exhausted after {nodes} nodes")
            }
            Error::Internal(msg) => write!(f, "internal consistency violation: {msg}"),
        }
    }
}

#[cfg(test)]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
