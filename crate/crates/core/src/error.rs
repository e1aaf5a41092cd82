use thiserror::Error;

use crate::graph::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {order} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge { order: usize },
    #[error("vertex {vertex} is not in 1..={order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex label {label} cannot be stored in a vertex set (labels are 1..={MAX_ORDER})")]
    InvalidLabel { label: usize },
}

/// Decoding failures. Every variant carries the byte offset into the input
/// line at which the problem was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("sparse6/digraph6 input at offset {offset} is not supported")]
    UnsupportedVariant { offset: usize },
    #[error(
        "multi-byte order header at offset {offset}: orders above {MAX_ORDER} are not supported"
    )]
    UnsupportedOrder { offset: usize },
    #[error(
        "edge data for order {order} needs {expected} bytes after offset {offset}, found {found}"
    )]
    LengthMismatch {
        offset: usize,
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("padding bits in the final byte at offset {offset} are not zero")]
    NonZeroPadding { offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("operation needs at least {required} vertices, graph has {order}")]
    TooFewVertices { order: usize, required: usize },
    #[error("subset enumeration over {order} vertices exceeds the limit of {limit}")]
    SubsetBudget { order: usize, limit: usize },
    #[error("connected component of order {size} exceeds the path-cover limit of {limit}")]
    ComponentTooLarge { size: usize, limit: usize },
    #[error("edge-subset search over {edges} edges exceeds the limit of {limit}")]
    EdgeBudget { edges: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },
}
