//! Simple directed graph with incrementally maintained degree tables.

use std::collections::HashSet;
use std::fmt;

use crate::error::GraphError;

/// Dense node index in `0..n`.
pub type NodeId = usize;

/// A directed link `source -> target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: NodeId,
    pub target: NodeId,
}

impl Edge {
    pub const fn new(source: NodeId, target: NodeId) -> Self {
        Self { source, target }
    }
}

impl From<(NodeId, NodeId)> for Edge {
    fn from((source, target): (NodeId, NodeId)) -> Self {
        Self { source, target }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.source, self.target)
    }
}

/// Simple directed graph: no self-loops, no parallel edges, fixed node set.
///
/// Adjacency lists are unordered; use [`DirectedGraph::edges`] or
/// [`DirectedGraph::sorted_out_neighbors`] when a deterministic order is needed.
#[derive(Clone)]
pub struct DirectedGraph {
    n: usize,
    out_adj: Vec<Vec<NodeId>>,
    in_adj: Vec<Vec<NodeId>>,
    edge_set: HashSet<Edge>,
}

impl DirectedGraph {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidSize);
        }
        Ok(Self {
            n,
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            edge_set: HashSet::new(),
        })
    }

    /// Builds a graph from an edge iterator, rejecting any invalid edge.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut g = Self::new(n)?;
        for e in edges {
            let e = e.into();
            g.add_edge(e.source, e.target)?;
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_set.len()
    }

    fn check_node(&self, node: NodeId) -> Result<(), GraphError> {
        if node < self.n {
            Ok(())
        } else {
            Err(GraphError::OutOfRange { node, n: self.n })
        }
    }

    pub fn add_edge(&mut self, u: NodeId, v: NodeId) -> Result<(), GraphError> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.edge_set.insert(Edge::new(u, v)) {
            return Err(GraphError::Duplicate(u, v));
        }
        self.out_adj[u].push(v);
        self.in_adj[v].push(u);
        self.debug_check();
        Ok(())
    }

    pub fn remove_edge(&mut self, u: NodeId, v: NodeId) -> Result<(), GraphError> {
        if !self.edge_set.remove(&Edge::new(u, v)) {
            return Err(GraphError::NotFound(u, v));
        }
        remove_value(&mut self.out_adj[u], v);
        remove_value(&mut self.in_adj[v], u);
        self.debug_check();
        Ok(())
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.edge_set.contains(&Edge::new(u, v))
    }

    pub fn out_degree(&self, u: NodeId) -> usize {
        self.out_adj[u].len()
    }

    pub fn in_degree(&self, v: NodeId) -> usize {
        self.in_adj[v].len()
    }

    /// Total degree `in + out`.
    pub fn degree(&self, u: NodeId) -> usize {
        self.out_adj[u].len() + self.in_adj[u].len()
    }

    /// Out-neighbors in insertion order.
    pub fn out_neighbors(&self, u: NodeId) -> &[NodeId] {
        &self.out_adj[u]
    }

    /// In-neighbors in insertion order.
    pub fn in_neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.in_adj[v]
    }

    pub fn sorted_out_neighbors(&self, u: NodeId) -> Vec<NodeId> {
        let mut out = self.out_adj[u].clone();
        out.sort_unstable();
        out
    }

    /// All edges sorted by `(source, target)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            edges.extend(self.sorted_out_neighbors(u).into_iter().map(|v| Edge::new(u, v)));
        }
        edges
    }

    /// `2L / N`, the total-degree average.
    pub fn average_degree(&self) -> f64 {
        2.0 * self.edge_count() as f64 / self.n as f64
    }

    /// Full consistency scan of adjacency lists against the edge set.
    pub fn is_consistent(&self) -> bool {
        let out_sum: usize = self.out_adj.iter().map(Vec::len).sum();
        let in_sum: usize = self.in_adj.iter().map(Vec::len).sum();
        if out_sum != self.edge_set.len() || in_sum != self.edge_set.len() {
            return false;
        }
        let from_out = (0..self.n).all(|u| {
            self.out_adj[u]
                .iter()
                .all(|&v| u != v && self.edge_set.contains(&Edge::new(u, v)))
        });
        let from_in = (0..self.n).all(|v| {
            self.in_adj[v]
                .iter()
                .all(|&u| self.edge_set.contains(&Edge::new(u, v)))
        });
        from_out && from_in
    }

    #[inline]
    fn debug_check(&self) {
        // Full scans are quadratic over a rewiring run; only sample small graphs.
        #[cfg(debug_assertions)]
        if self.n <= 64 {
            debug_assert!(self.is_consistent());
        }
    }
}

fn remove_value(list: &mut Vec<NodeId>, value: NodeId) {
    if let Some(pos) = list.iter().position(|&x| x == value) {
        list.swap_remove(pos);
    }
}

impl PartialEq for DirectedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edge_set == other.edge_set
    }
}

impl Eq for DirectedGraph {}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirectedGraph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}
