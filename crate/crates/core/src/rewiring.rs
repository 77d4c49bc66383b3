//! Link rewiring to reduce the number of driver nodes.
//!
//! Both strategies repeat the same step: pick a redundant link, delete it,
//! and insert a new link elsewhere, so `N` and `L` never change. The
//! regular strategy deletes the smallest redundant link and connects the
//! highest-ranked out-degree node to the highest-ranked in-degree node it
//! is not yet linked to. Under [`AdditionRule::ProgressFirst`] the scan
//! first looks only at pairs whose link enlarges the maximum matching and
//! falls back to the plain ranking once no such pair exists. The random
//! strategy picks both uniformly.
//!
//! A redundant link sits in no maximum matching, so deleting it keeps the
//! current matching maximum; inserting a link can only grow it. The driver
//! count is therefore non-increasing, and the matching is carried across
//! iterations with a single augmenting-path search per insertion.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{redundant_with_matching, MatchingStructure};
use crate::graph::{DirectedGraph, Edge, NodeId};
use crate::matching::{driver_count, maximum_matching, Matching};
use crate::seed::splitmix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Regular,
    Random,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Regular => "regular",
            Method::Random => "random",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "regular" => Ok(Method::Regular),
            "random" => Ok(Method::Random),
            other => Err(format!("unknown rewiring method {other:?}")),
        }
    }
}

/// Which pairs the regular strategy may link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AdditionRule {
    /// First ranked pair whose link enlarges the maximum matching, else the
    /// first ranked absent pair.
    #[default]
    ProgressFirst,
    /// First ranked absent pair only. On random graphs this shuttles links
    /// between hubs and stalls without changing the driver count.
    Ranked,
}

impl AdditionRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            AdditionRule::ProgressFirst => "progress-first",
            AdditionRule::Ranked => "ranked",
        }
    }
}

impl FromStr for AdditionRule {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "progress-first" => Ok(AdditionRule::ProgressFirst),
            "ranked" => Ok(AdditionRule::Ranked),
            other => Err(format!("unknown addition rule {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RewireLimits {
    /// Defaults to ten times the initial edge count.
    pub max_iterations: Option<usize>,
    /// Only used by the random strategy.
    pub seed: u64,
    /// Only used by the regular strategy.
    pub addition: AdditionRule,
}

impl RewireLimits {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn iteration_cap(&self, initial_edges: usize) -> usize {
        self.max_iterations.unwrap_or(10 * initial_edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TerminationReason {
    NoRedundantLinks,
    IterationCap,
    /// Every missing pair was excluded; only reachable on saturated graphs.
    NoAdditionCandidate,
    /// No addition can enlarge the matching, or the deterministic loop
    /// revisited an earlier edge set.
    NoProgress,
}

impl TerminationReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            TerminationReason::NoRedundantLinks => "no-redundant-links",
            TerminationReason::IterationCap => "iteration-cap",
            TerminationReason::NoAdditionCandidate => "no-addition-candidate",
            TerminationReason::NoProgress => "no-progress",
        }
    }
}

impl fmt::Display for TerminationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TerminationReason {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            TerminationReason::NoRedundantLinks,
            TerminationReason::IterationCap,
            TerminationReason::NoAdditionCandidate,
            TerminationReason::NoProgress,
        ]
        .into_iter()
        .find(|r| r.as_str() == s)
        .ok_or_else(|| format!("unknown termination reason {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewiringReport {
    pub iterations: usize,
    pub deleted: Vec<Edge>,
    pub added: Vec<Edge>,
    /// Driver count before any rewiring.
    pub initial_n_driver: usize,
    /// Driver count after each committed iteration.
    pub n_driver_trajectory: Vec<usize>,
    pub termination_reason: TerminationReason,
}

impl RewiringReport {
    fn new(initial_n_driver: usize) -> Self {
        Self {
            iterations: 0,
            deleted: Vec::new(),
            added: Vec::new(),
            initial_n_driver,
            n_driver_trajectory: Vec::new(),
            termination_reason: TerminationReason::NoRedundantLinks,
        }
    }

    pub fn final_n_driver(&self) -> usize {
        self.n_driver_trajectory
            .last()
            .copied()
            .unwrap_or(self.initial_n_driver)
    }

    fn commit(&mut self, deleted: Edge, added: Edge, n_driver: usize) {
        self.iterations += 1;
        self.deleted.push(deleted);
        self.added.push(added);
        self.n_driver_trajectory.push(n_driver);
    }

    /// Writes `iteration,deleted_u,deleted_v,added_u,added_v,n_driver` rows.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "iteration",
            "deleted_u",
            "deleted_v",
            "added_u",
            "added_v",
            "n_driver",
        ])?;
        for i in 0..self.iterations {
            let (d, a) = (self.deleted[i], self.added[i]);
            w.write_record([
                (i + 1).to_string(),
                d.source.to_string(),
                d.target.to_string(),
                a.source.to_string(),
                a.target.to_string(),
                self.n_driver_trajectory[i].to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Sources ranked by out-degree, targets by in-degree, ties to the lower id.
fn ranked_nodes(g: &DirectedGraph, keep: impl Fn(NodeId) -> bool) -> (Vec<NodeId>, Vec<NodeId>) {
    let n = g.node_count();
    let mut sources: Vec<NodeId> = (0..n).filter(|&u| keep(u)).collect();
    sources.sort_by_key(|&u| (std::cmp::Reverse(g.out_degree(u)), u));
    let mut targets: Vec<NodeId> = (0..n).filter(|&v| keep(n + v)).collect();
    targets.sort_by_key(|&v| (std::cmp::Reverse(g.in_degree(v)), v));
    (sources, targets)
}

/// Scans `sources x targets` by increasing rank sum, then by source rank.
fn first_ranked_pair(
    g: &DirectedGraph,
    sources: &[NodeId],
    targets: &[NodeId],
    excluded: Option<Edge>,
) -> Option<Edge> {
    if sources.is_empty() || targets.is_empty() {
        return None;
    }
    let (ns, nt) = (sources.len(), targets.len());
    for sum in 0..=(ns + nt - 2) {
        for i in sum.saturating_sub(nt - 1)..=sum.min(ns - 1) {
            let (u, v) = (sources[i], targets[sum - i]);
            if u != v && !g.has_edge(u, v) && excluded != Some(Edge::new(u, v)) {
                return Some(Edge::new(u, v));
            }
        }
    }
    None
}

/// Picks the link to insert: sources ranked by out-degree, targets by
/// in-degree (ties to the lower id), scanning pairs by increasing rank sum
/// and then by source rank. Returns the first pair that is not a loop, not
/// present and not `excluded`.
pub fn select_addition_pair(g: &DirectedGraph, excluded: Option<Edge>) -> Option<Edge> {
    let (sources, targets) = ranked_nodes(g, |_| true);
    first_ranked_pair(g, &sources, &targets, excluded)
}

/// Same scan as [`select_addition_pair`], restricted to pairs whose link
/// enlarges the maximum matching described by `structure`.
pub fn select_progress_pair(g: &DirectedGraph, structure: &MatchingStructure<'_>) -> Option<Edge> {
    let n = g.node_count();
    let (sources, targets) = ranked_nodes(g, |x| {
        if x < n {
            structure.out_copy_avoidable(x)
        } else {
            structure.in_copy_avoidable(x - n)
        }
    });
    first_ranked_pair(g, &sources, &targets, None)
}

/// Order-independent fingerprint of an edge set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Fingerprint(u64);

impl Fingerprint {
    fn of(g: &DirectedGraph) -> Self {
        let mut fp = Fingerprint(0);
        for e in g.edges() {
            fp.toggle(e);
        }
        fp
    }

    fn toggle(&mut self, e: Edge) {
        self.0 ^= splitmix64(((e.source as u64) << 32) ^ e.target as u64);
    }
}

struct State {
    g: DirectedGraph,
    m: Matching,
    report: RewiringReport,
    cap: usize,
}

impl State {
    fn new(g: &DirectedGraph, limits: &RewireLimits) -> Self {
        let m = maximum_matching(g);
        let report = RewiringReport::new(driver_count(g.node_count(), m.len()));
        Self {
            cap: limits.iteration_cap(g.edge_count()),
            g: g.clone(),
            m,
            report,
        }
    }

    fn commit(&mut self, deleted: Edge, added: Edge) {
        debug_assert!(!self.m.contains(deleted));
        self.g
            .remove_edge(deleted.source, deleted.target)
            .expect("deleted link must exist");
        self.g
            .add_edge(added.source, added.target)
            .expect("added link must be absent");
        self.m.augment_once(&self.g);
        let n_driver = driver_count(self.g.node_count(), self.m.len());
        self.report.commit(deleted, added, n_driver);
    }

    fn finish(mut self, reason: TerminationReason) -> (DirectedGraph, RewiringReport) {
        self.report.termination_reason = reason;
        (self.g, self.report)
    }
}

/// Deterministic rewiring: delete the smallest redundant link, then add the
/// best-ranked missing pair permitted by `limits.addition`.
pub fn rewire_regular(g: &DirectedGraph, limits: &RewireLimits) -> (DirectedGraph, RewiringReport) {
    let mut st = State::new(g, limits);
    let mut fp = Fingerprint::of(&st.g);
    let mut visited = HashSet::from([fp]);

    loop {
        if st.report.iterations >= st.cap {
            return st.finish(TerminationReason::IterationCap);
        }
        let (choice, reason) = match limits.addition {
            AdditionRule::ProgressFirst => progress_first_step(&mut st.g, &st.m),
            AdditionRule::Ranked => ranked_step(&mut st.g, &st.m),
        };
        let Some((deleted, added)) = choice else {
            return st.finish(reason);
        };
        st.commit(deleted, added);
        fp.toggle(deleted);
        fp.toggle(added);
        if !visited.insert(fp) {
            return st.finish(TerminationReason::NoProgress);
        }
    }
}

type Step = (Option<(Edge, Edge)>, TerminationReason);

fn progress_first_step(g: &mut DirectedGraph, m: &Matching) -> Step {
    let progress = {
        let structure = MatchingStructure::new(g, m);
        let redundant = structure.redundant();
        let Some(&deleted) = redundant.first() else {
            return (None, TerminationReason::NoRedundantLinks);
        };
        // A redundant link lies in no maximum matching, so deleting it leaves
        // `structure` valid, and it never joins two avoidable copies.
        select_progress_pair(g, &structure).map(|added| (deleted, added))
    };
    match progress {
        Some(pair) => (Some(pair), TerminationReason::NoProgress),
        None => ranked_step(g, m),
    }
}

fn ranked_step(g: &mut DirectedGraph, m: &Matching) -> Step {
    let redundant = redundant_with_matching(g, m);
    if redundant.is_empty() {
        return (None, TerminationReason::NoRedundantLinks);
    }
    for &e in &redundant {
        g.remove_edge(e.source, e.target).expect("redundant link exists");
        let add = select_addition_pair(g, Some(e));
        g.add_edge(e.source, e.target).expect("restoring deleted link");
        if let Some(a) = add {
            return (Some((e, a)), TerminationReason::NoAdditionCandidate);
        }
    }
    (None, TerminationReason::NoAdditionCandidate)
}

/// Baseline: delete a uniformly random redundant link and add a uniformly
/// random missing link.
pub fn rewire_random(g: &DirectedGraph, limits: &RewireLimits) -> (DirectedGraph, RewiringReport) {
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    let mut st = State::new(g, limits);
    let n = g.node_count();

    loop {
        if st.report.iterations >= st.cap {
            return st.finish(TerminationReason::IterationCap);
        }
        let redundant = redundant_with_matching(&st.g, &st.m);
        if redundant.is_empty() {
            return st.finish(TerminationReason::NoRedundantLinks);
        }
        let deleted = redundant[rng.gen_range(0..redundant.len())];
        // After deleting one link, `deleted` is the only excluded absent pair.
        let absent = n * (n - 1) - st.g.edge_count();
        if absent == 0 {
            return st.finish(TerminationReason::NoAdditionCandidate);
        }
        let added = random_absent_pair(&st.g, deleted, absent, &mut rng);
        st.commit(deleted, added);
    }
}

/// Uniform over missing non-loop pairs of `g` other than `deleted`, which is
/// treated as present.
fn random_absent_pair(g: &DirectedGraph, deleted: Edge, absent: usize, rng: &mut impl Rng) -> Edge {
    let n = g.node_count();
    let usable = |u: NodeId, v: NodeId| u != v && !g.has_edge(u, v);
    if absent * 4 >= n * (n - 1) {
        loop {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if usable(u, v) {
                return Edge::new(u, v);
            }
        }
    }
    // Dense graph: enumerate the few gaps instead of rejecting.
    let mut pick = rng.gen_range(0..absent);
    for u in 0..n {
        for v in 0..n {
            if usable(u, v) {
                if pick == 0 {
                    return Edge::new(u, v);
                }
                pick -= 1;
            }
        }
    }
    unreachable!("absent pair count out of sync with graph {deleted}")
}

pub fn rewire(
    g: &DirectedGraph,
    method: Method,
    limits: &RewireLimits,
) -> (DirectedGraph, RewiringReport) {
    match method {
        Method::Regular => rewire_regular(g, limits),
        Method::Random => rewire_random(g, limits),
    }
}
