//! Critical / redundant / ordinary link labels from a single maximum matching.
//!
//! An edge belongs to some maximum matching iff it is matched, lies on an
//! even alternating path from a free vertex, or lies on an alternating
//! cycle. Orienting matched edges in-copy -> out-copy and unmatched edges
//! out-copy -> in-copy turns these into plain reachability and SCC
//! membership, so the whole labelling is linear in `N + L`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::graph::{DirectedGraph, Edge, NodeId};
use crate::matching::{maximum_matching, Matching};
use crate::scc::{tarjan, Csr};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinkClass {
    /// In every maximum matching.
    Critical,
    /// In no maximum matching.
    Redundant,
    /// In some but not all maximum matchings.
    Ordinary,
}

impl LinkClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            LinkClass::Critical => "critical",
            LinkClass::Redundant => "redundant",
            LinkClass::Ordinary => "ordinary",
        }
    }
}

impl fmt::Display for LinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LinkClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "critical" => Ok(LinkClass::Critical),
            "redundant" => Ok(LinkClass::Redundant),
            "ordinary" => Ok(LinkClass::Ordinary),
            other => Err(format!("unknown link class {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    labels: BTreeMap<Edge, LinkClass>,
    pub critical: usize,
    pub redundant: usize,
    pub ordinary: usize,
}

impl ClassificationResult {
    pub fn label(&self, e: Edge) -> Option<LinkClass> {
        self.labels.get(&e).copied()
    }

    /// Labels in `(source, target)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, LinkClass)> + '_ {
        self.labels.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edges_of(&self, class: LinkClass) -> Vec<Edge> {
        self.iter().filter(|&(_, c)| c == class).map(|(e, _)| e).collect()
    }
}

/// Labels every edge of `g`.
pub fn classify_links(g: &DirectedGraph) -> ClassificationResult {
    let m = maximum_matching(g);
    classify_with_matching(g, &m)
}

/// Labels every edge of `g` given any maximum matching `m` of it.
pub fn classify_with_matching(g: &DirectedGraph, m: &Matching) -> ClassificationResult {
    let mut labels = BTreeMap::new();
    let (mut critical, mut redundant, mut ordinary) = (0, 0, 0);
    for_each_label(g, m, |e, class| {
        match class {
            LinkClass::Critical => critical += 1,
            LinkClass::Redundant => redundant += 1,
            LinkClass::Ordinary => ordinary += 1,
        }
        labels.insert(e, class);
    });
    ClassificationResult {
        labels,
        critical,
        redundant,
        ordinary,
    }
}

/// Redundant edges of `g`, sorted by `(source, target)`.
pub fn redundant_links(g: &DirectedGraph) -> Vec<Edge> {
    redundant_with_matching(g, &maximum_matching(g))
}

pub fn redundant_with_matching(g: &DirectedGraph, m: &Matching) -> Vec<Edge> {
    MatchingStructure::new(g, m).redundant()
}

/// Alternating-path structure of a graph relative to one maximum matching.
///
/// Also records which out-copies and in-copies some maximum matching leaves
/// unmatched; see [`MatchingStructure::grows_matching`].
pub struct MatchingStructure<'a> {
    g: &'a DirectedGraph,
    m: &'a Matching,
    from_free: Vec<bool>,
    to_free: Vec<bool>,
    comp: Vec<usize>,
}

impl<'a> MatchingStructure<'a> {
    /// `m` must be a maximum matching of `g`.
    pub fn new(g: &'a DirectedGraph, m: &'a Matching) -> Self {
        let n = g.node_count();
        debug_assert_eq!(m.node_count(), n);
        // Out-copy of u is vertex u, in-copy of v is vertex n + v.
        let mut arcs = Vec::with_capacity(g.edge_count());
        for u in 0..n {
            for &v in g.out_neighbors(u) {
                if m.target_of(u) == Some(v) {
                    arcs.push((n + v, u));
                } else {
                    arcs.push((u, n + v));
                }
            }
        }
        let d = Csr::from_arcs(2 * n, &arcs);
        let from_free = d.reachable_from((0..n).filter(|&u| m.target_of(u).is_none()));
        let to_free = d
            .reversed()
            .reachable_from((0..n).filter(|&v| m.source_of(v).is_none()).map(|v| n + v));
        let (comp, _) = tarjan(&d);
        Self {
            g,
            m,
            from_free,
            to_free,
            comp,
        }
    }

    /// Some maximum matching leaves the out-copy of `u` unmatched.
    pub fn out_copy_avoidable(&self, u: NodeId) -> bool {
        self.from_free[u]
    }

    /// Some maximum matching leaves the in-copy of `v` unmatched, i.e. `v`
    /// is a driver node under some maximum matching.
    pub fn in_copy_avoidable(&self, v: NodeId) -> bool {
        self.to_free[self.g.node_count() + v]
    }

    /// Inserting `u -> v` raises the maximum matching size by one exactly
    /// when both copies are avoidable.
    pub fn grows_matching(&self, u: NodeId, v: NodeId) -> bool {
        self.out_copy_avoidable(u) && self.in_copy_avoidable(v)
    }

    pub fn label(&self, u: NodeId, v: NodeId) -> LinkClass {
        let n = self.g.node_count();
        let matched = self.m.target_of(u) == Some(v);
        let (a, b) = if matched { (n + v, u) } else { (u, n + v) };
        let alternates = self.from_free[a] || self.to_free[b] || self.comp[a] == self.comp[b];
        match (matched, alternates) {
            (true, false) => LinkClass::Critical,
            (false, false) => LinkClass::Redundant,
            _ => LinkClass::Ordinary,
        }
    }

    /// Redundant edges sorted by `(source, target)`.
    pub fn redundant(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        self.for_each_label(|e, class| {
            if class == LinkClass::Redundant {
                out.push(e);
            }
        });
        out.sort_unstable();
        out
    }

    fn for_each_label(&self, mut visit: impl FnMut(Edge, LinkClass)) {
        for u in 0..self.g.node_count() {
            for &v in self.g.out_neighbors(u) {
                visit(Edge::new(u, v), self.label(u, v));
            }
        }
    }
}

fn for_each_label(g: &DirectedGraph, m: &Matching, visit: impl FnMut(Edge, LinkClass)) {
    MatchingStructure::new(g, m).for_each_label(visit);
}
