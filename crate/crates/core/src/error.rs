use thiserror::Error;

use crate::graph::NodeId;

/// Errors raised while building or mutating a [`DirectedGraph`](crate::DirectedGraph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one node")]
    InvalidSize,
    #[error("node {node} out of range for graph with {n} nodes")]
    OutOfRange { node: NodeId, n: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),
    #[error("duplicate edge {0} -> {1}")]
    Duplicate(NodeId, NodeId),
    #[error("edge {0} -> {1} not present")]
    NotFound(NodeId, NodeId),
}

/// Errors raised by the network generators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),
    #[error("{edges} edges requested but at most {max} fit on {n} nodes")]
    InfeasibleDensity { n: usize, edges: usize, max: usize },
    #[error("static model stuck after {rejections} consecutive rejections ({placed} of {edges} edges placed)")]
    Stuck {
        rejections: usize,
        placed: usize,
        edges: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised while reading edge-list files.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Errors raised by sweeps and sweep CSV files.
#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid sweep: {0}")]
    InvalidConfig(String),
    #[error("unknown figure {0:?} (expected fig1, fig2, fig3 or fig4)")]
    UnknownFigure(String),
    #[error("seed collision between runs {0}")]
    SeedCollision(String),
    #[error("line {line}: {msg}")]
    Csv { line: usize, msg: String },
    #[error(transparent)]
    CsvFormat(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
