//! Maximum matching on the out-copy / in-copy bipartite view of a directed
//! graph, and the driver nodes it induces.
//!
//! Every directed edge `u -> v` becomes a bipartite edge between the
//! out-copy of `u` and the in-copy of `v`. A node whose in-copy is left
//! unmatched by a maximum matching must receive its own input signal.

use std::collections::VecDeque;

use crate::graph::{DirectedGraph, Edge, NodeId};

const UNSEEN: usize = usize::MAX;

/// A matching of the bipartite view, stored as two partial maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    match_out: Vec<Option<NodeId>>,
    match_in: Vec<Option<NodeId>>,
    size: usize,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Self {
            match_out: vec![None; n],
            match_in: vec![None; n],
            size: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn node_count(&self) -> usize {
        self.match_out.len()
    }

    /// Target matched to the out-copy of `source`.
    pub fn target_of(&self, source: NodeId) -> Option<NodeId> {
        self.match_out[source]
    }

    /// Source matched to the in-copy of `target`.
    pub fn source_of(&self, target: NodeId) -> Option<NodeId> {
        self.match_in[target]
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.match_out[e.source] == Some(e.target)
    }

    /// Matched edges sorted by `(source, target)`.
    pub fn edges(&self) -> Vec<Edge> {
        self.match_out
            .iter()
            .enumerate()
            .filter_map(|(u, v)| v.map(|v| Edge::new(u, v)))
            .collect()
    }

    /// Checks that this is a matching made of edges of `g`.
    pub fn is_valid_for(&self, g: &DirectedGraph) -> bool {
        let n = g.node_count();
        if self.match_out.len() != n || self.match_in.len() != n {
            return false;
        }
        let mut count = 0;
        for u in 0..n {
            if let Some(v) = self.match_out[u] {
                if self.match_in[v] != Some(u) || !g.has_edge(u, v) {
                    return false;
                }
                count += 1;
            }
        }
        let back = self.match_in.iter().flatten().count();
        count == self.size && back == self.size
    }

    fn link(&mut self, u: NodeId, v: NodeId) {
        self.match_out[u] = Some(v);
        self.match_in[v] = Some(u);
    }

    /// Drops `u -> v` from the matching if present. Returns whether it was.
    pub fn unlink(&mut self, u: NodeId, v: NodeId) -> bool {
        if self.match_out[u] == Some(v) {
            self.match_out[u] = None;
            self.match_in[v] = None;
            self.size -= 1;
            true
        } else {
            false
        }
    }

    /// Searches for one augmenting path in `g` and applies it.
    ///
    /// Used to restore maximality after a single edge insertion or after
    /// unlinking one matched edge; either change moves the maximum by at
    /// most one.
    pub fn augment_once(&mut self, g: &DirectedGraph) -> bool {
        let n = g.node_count();
        // parent[w] = (left vertex, right vertex) that reached left vertex w.
        let mut reached = vec![false; n];
        let mut parent: Vec<(NodeId, NodeId)> = vec![(UNSEEN, UNSEEN); n];
        let mut queue: VecDeque<NodeId> = VecDeque::new();
        for u in 0..n {
            if self.match_out[u].is_none() && g.out_degree(u) > 0 {
                reached[u] = true;
                queue.push_back(u);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in g.out_neighbors(u) {
                match self.match_in[v] {
                    None => {
                        let (mut x, mut y) = (u, v);
                        loop {
                            let prev = self.match_out[x];
                            self.link(x, y);
                            match prev {
                                None => break,
                                Some(pv) => {
                                    y = pv;
                                    debug_assert_eq!(parent[x].1, pv);
                                    x = parent[x].0;
                                }
                            }
                        }
                        self.size += 1;
                        return true;
                    }
                    Some(w) if !reached[w] => {
                        reached[w] = true;
                        parent[w] = (u, v);
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        false
    }
}

/// Hopcroft–Karp maximum matching with edges scanned in sorted
/// `(source, target)` order, so equal graphs give equal matchings.
pub fn maximum_matching(g: &DirectedGraph) -> Matching {
    let n = g.node_count();
    let adj: Vec<Vec<NodeId>> = (0..n).map(|u| g.sorted_out_neighbors(u)).collect();
    hopcroft_karp(&adj)
}

pub(crate) fn hopcroft_karp(adj: &[Vec<NodeId>]) -> Matching {
    let n = adj.len();
    let mut m = Matching::empty(n);
    let mut dist = vec![UNSEEN; n];
    let mut next = vec![0usize; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut stack: Vec<NodeId> = Vec::new();
    let mut via: Vec<NodeId> = Vec::new();

    loop {
        // Layer the free out-copies and everything reachable by alternating paths.
        queue.clear();
        for u in 0..n {
            if m.match_out[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = UNSEEN;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match m.match_in[v] {
                    None => found = true,
                    Some(w) if dist[w] == UNSEEN => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }

        next.iter_mut().for_each(|x| *x = 0);
        for root in 0..n {
            if m.match_out[root].is_some() {
                continue;
            }
            stack.clear();
            via.clear();
            stack.push(root);
            while let Some(&u) = stack.last() {
                if next[u] < adj[u].len() {
                    let v = adj[u][next[u]];
                    next[u] += 1;
                    match m.match_in[v] {
                        None => {
                            via.push(v);
                            for (&x, &y) in stack.iter().zip(&via) {
                                m.link(x, y);
                            }
                            m.size += 1;
                            break;
                        }
                        Some(w) if dist[w] == dist[u] + 1 => {
                            via.push(v);
                            stack.push(w);
                        }
                        _ => {}
                    }
                } else {
                    dist[u] = UNSEEN;
                    stack.pop();
                    via.pop();
                }
            }
        }
    }
    m
}

/// Nodes whose in-copy is unmatched, plus the driver count `max(N - |M|, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DriverSet {
    pub drivers: Vec<NodeId>,
    pub n_driver: usize,
}

impl DriverSet {
    /// Drivers to actually attach inputs to: the unmatched nodes, or node 0
    /// when the matching is perfect.
    pub fn input_nodes(&self) -> Vec<NodeId> {
        if self.drivers.is_empty() {
            vec![0]
        } else {
            self.drivers.clone()
        }
    }
}

pub fn driver_set(m: &Matching) -> DriverSet {
    let drivers: Vec<NodeId> = (0..m.node_count())
        .filter(|&v| m.source_of(v).is_none())
        .collect();
    let n_driver = driver_count(m.node_count(), m.len());
    DriverSet { drivers, n_driver }
}

/// `max(n - matched, 1)`.
pub fn driver_count(n: usize, matched: usize) -> usize {
    n.saturating_sub(matched).max(1)
}

/// Driver-node density `n_driver / N`.
pub fn n_d(g: &DirectedGraph) -> f64 {
    let m = maximum_matching(g);
    driver_count(g.node_count(), m.len()) as f64 / g.node_count() as f64
}
