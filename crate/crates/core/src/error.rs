use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("combined order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    CombinedOrderTooLarge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("graph has no vertices")]
    NoVertices,
    #[error("strength is undefined for edgeless graphs")]
    EdgelessGraph,
    #[error("graph has an isolated vertex")]
    IsolatedVertex,
    #[error("invalid graph6 data: {0}")]
    Graph6(String),
    #[error("invalid edge list: {0}")]
    EdgeList(String),
    #[error("order {order} outside enumeration range [1,{max}]")]
    EnumerationOrder { order: usize, max: usize },
    #[error("canonical form supported only up to order {max}, got {order}")]
    CanonicalOrder { order: usize, max: usize },
    #[error("shard index {shard} out of range for {shard_count} shards")]
    ShardIndex { shard: usize, shard_count: usize },
    #[error("unsupported cursor version {0}")]
    CursorVersion(u32),
    #[error("corrupt cursor: {0}")]
    CursorCorrupt(String),
    #[error("argument out of range: {0}")]
    Domain(String),
    #[error("insufficient known Ramsey data for n = {0}")]
    InsufficientRamseyData(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
