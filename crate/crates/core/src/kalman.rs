//! Kalman rank check of matching-derived driver sets.
//!
//! The system `x' = A x + B u` takes `A[v][u]` nonzero for every link
//! `u -> v`. With independent random nonzero weights over a large prime
//! field, the rank of `(B, AB, ..., A^{N-1} B)` equals its generic
//! (structural) rank except with probability at most about `N^2 / p` per
//! draw, so the maximum over a few draws decides structural
//! controllability.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, Fp};
use crate::graph::{DirectedGraph, NodeId};
use crate::matching::{driver_set, maximum_matching, DriverSet};
use crate::scc::{tarjan, Csr};
use crate::seed::mix_seed;

/// Zero pattern of an input matrix: `(row, column)` entries over `m` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputPattern {
    pub m: usize,
    pub entries: Vec<(NodeId, usize)>,
}

impl InputPattern {
    /// One column per listed node, each with a single entry.
    pub fn diagonal(nodes: &[NodeId]) -> Self {
        Self {
            m: nodes.len(),
            entries: nodes.iter().enumerate().map(|(c, &v)| (v, c)).collect(),
        }
    }

    pub fn column(&self, c: usize) -> impl Iterator<Item = NodeId> + '_ {
        self.entries
            .iter()
            .filter(move |&&(_, col)| col == c)
            .map(|&(v, _)| v)
    }

    /// Drops column `c`, renumbering the later ones.
    pub fn without_column(&self, c: usize) -> Self {
        Self {
            m: self.m - 1,
            entries: self
                .entries
                .iter()
                .filter(|&&(_, col)| col != c)
                .map(|&(v, col)| (v, if col > c { col - 1 } else { col }))
                .collect(),
        }
    }
}

/// Lowest-id node of every source strongly connected component (no links
/// entering from outside), in increasing order.
pub fn source_component_roots(g: &DirectedGraph) -> Vec<Vec<NodeId>> {
    let n = g.node_count();
    let arcs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.source, e.target)).collect();
    let (comp, n_comp) = tarjan(&Csr::from_arcs(n, &arcs));
    let mut has_entry = vec![false; n_comp];
    for &(u, v) in &arcs {
        if comp[u] != comp[v] {
            has_entry[comp[v]] = true;
        }
    }
    let mut members: Vec<Vec<NodeId>> = vec![Vec::new(); n_comp];
    for v in 0..n {
        members[comp[v]].push(v);
    }
    let mut sources: Vec<Vec<NodeId>> = members
        .into_iter()
        .zip(has_entry)
        .filter(|(_, entered)| !entered)
        .map(|(m, _)| m)
        .collect();
    sources.sort_by_key(|m| m[0]);
    sources
}

/// One column per driver node (node 0 alone when the matching is perfect),
/// plus an extra entry in column 0 at the lowest-id node of every source
/// component that contains no driver.
pub fn build_input_matrix(g: &DirectedGraph, drivers: &DriverSet) -> InputPattern {
    input_pattern_for(g, &drivers.input_nodes())
}

/// The same construction for an arbitrary non-empty set of input nodes.
pub fn input_pattern_for(g: &DirectedGraph, inputs: &[NodeId]) -> InputPattern {
    let mut pattern = InputPattern::diagonal(inputs);
    for component in source_component_roots(g) {
        if !component.iter().any(|v| inputs.contains(v)) {
            pattern.entries.push((component[0], 0));
        }
    }
    pattern
}

/// Numeric `(A, B)` over a field.
#[derive(Debug, Clone)]
pub struct WeightedSystem<F> {
    pub n: usize,
    pub m: usize,
    /// `(source, target, weight)`: `A[target][source] = weight`.
    pub a_entries: Vec<(NodeId, NodeId, F)>,
    /// `(row, column, weight)`.
    pub b_entries: Vec<(NodeId, usize, F)>,
}

impl WeightedSystem<Fp> {
    /// Independent uniform nonzero weights on the patterns of `g` and `pattern`.
    pub fn random(g: &DirectedGraph, pattern: &InputPattern, rng: &mut impl Rng) -> Self {
        let a_entries = g
            .edges()
            .into_iter()
            .map(|e| (e.source, e.target, Fp::random_nonzero(rng)))
            .collect();
        let b_entries = pattern
            .entries
            .iter()
            .map(|&(v, c)| (v, c, Fp::random_nonzero(rng)))
            .collect();
        Self {
            n: g.node_count(),
            m: pattern.m,
            a_entries,
            b_entries,
        }
    }
}

impl<F: Field> WeightedSystem<F> {
    fn apply_a(&self, x: &[F]) -> Vec<F> {
        let mut y = vec![F::zero(); self.n];
        for (u, v, w) in &self.a_entries {
            if !x[*u].is_zero() {
                y[*v] = y[*v].clone() + w.clone() * x[*u].clone();
            }
        }
        y
    }

    fn b_columns(&self) -> Vec<Vec<F>> {
        let mut cols = vec![vec![F::zero(); self.n]; self.m];
        for (v, c, w) in &self.b_entries {
            cols[*c][*v] = cols[*c][*v].clone() + w.clone();
        }
        cols
    }
}

/// Row-echelon basis with one pivot per stored vector; each stored vector
/// is zero at the pivots of earlier ones and one at its own pivot.
struct EchelonBasis<F> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> EchelonBasis<F> {
    fn new() -> Self {
        Self { rows: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` and stores it if independent. Returns the stored vector.
    fn insert(&mut self, mut v: Vec<F>) -> Option<&Vec<F>> {
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if !c.is_zero() {
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = x.clone() - c.clone() * r.clone();
                    }
                }
            }
        }
        let pivot = v.iter().position(|x| !x.is_zero())?;
        let inv = v[pivot].inverse().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        self.rows.push((pivot, v));
        self.rows.last().map(|(_, r)| r)
    }
}

/// Rank of `(B, AB, ..., A^{N-1} B)`: the dimension of the smallest
/// `A`-invariant subspace containing the columns of `B`, grown one
/// independent vector at a time until it stops or reaches `N`.
pub fn controllability_rank<F: Field>(sys: &WeightedSystem<F>) -> usize {
    let mut basis = EchelonBasis::new();
    let mut pending: VecDeque<Vec<F>> = sys.b_columns().into();
    while let Some(v) = pending.pop_front() {
        if basis.rank() == sys.n {
            break;
        }
        if let Some(stored) = basis.insert(v) {
            let next = sys.apply_a(stored);
            pending.push_back(next);
        }
    }
    basis.rank()
}

/// Outcome of [`verify_driver_set`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verification {
    pub controllable: bool,
    /// Number of independent inputs, `max(N - |M|, 1)`.
    pub m: usize,
    /// Largest rank seen over all draws.
    pub rank: usize,
}

/// Largest controllability rank of `pattern` on `g` over `trials` weight draws.
pub fn generic_rank(g: &DirectedGraph, pattern: &InputPattern, trials: usize, seed: u64) -> usize {
    let n = g.node_count();
    let mut best = 0;
    for t in 0..trials.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(&[seed, t as u64]));
        let sys = WeightedSystem::random(g, pattern, &mut rng);
        best = best.max(controllability_rank(&sys));
        if best == n {
            break;
        }
    }
    best
}

/// Checks that the matching-derived driver set of `g` controls it.
pub fn verify_driver_set(g: &DirectedGraph, trials: usize, seed: u64) -> Verification {
    let drivers = driver_set(&maximum_matching(g));
    let pattern = build_input_matrix(g, &drivers);
    let rank = generic_rank(g, &pattern, trials, seed);
    Verification {
        controllable: rank == g.node_count(),
        m: pattern.m,
        rank,
    }
}
