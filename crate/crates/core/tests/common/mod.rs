//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the matching, classification or metric code it
//! checks.

#![allow(dead_code)]

use std::collections::BTreeMap;

use netctl::{DegreeType, DirectedGraph, Edge, LinkClass};
use rand::Rng;

/// Each ordered pair becomes a link with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> DirectedGraph {
    let mut g = DirectedGraph::new(n).unwrap();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Size of a maximum matching by dynamic programming over subsets of used
/// targets. Exponential in `N`; intended for `N <= 12`.
pub fn brute_max_matching(g: &DirectedGraph) -> usize {
    let n = g.node_count();
    assert!(n <= 12);
    let adj: Vec<Vec<usize>> = (0..n).map(|u| g.sorted_out_neighbors(u)).collect();
    // best[mask] after processing sources 0..i.
    let mut best = vec![i32::MIN; 1 << n];
    best[0] = 0;
    for targets in &adj {
        let mut next = best.clone();
        for mask in 0..1usize << n {
            if best[mask] < 0 {
                continue;
            }
            for &v in targets {
                if mask & (1 << v) == 0 {
                    let m = mask | (1 << v);
                    next[m] = next[m].max(best[mask] + 1);
                }
            }
        }
        best = next;
    }
    best.into_iter().max().unwrap() as usize
}

/// Every maximum matching, each as a sorted list of links.
pub fn all_maximum_matchings(g: &DirectedGraph) -> Vec<Vec<Edge>> {
    fn go(
        u: usize,
        adj: &[Vec<usize>],
        used: &mut Vec<bool>,
        current: &mut Vec<Edge>,
        out: &mut Vec<Vec<Edge>>,
    ) {
        if u == adj.len() {
            out.push(current.clone());
            return;
        }
        go(u + 1, adj, used, current, out);
        for &v in &adj[u] {
            if !used[v] {
                used[v] = true;
                current.push(Edge { source: u, target: v });
                go(u + 1, adj, used, current, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    let n = g.node_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|u| g.sorted_out_neighbors(u)).collect();
    let mut all = Vec::new();
    go(0, &adj, &mut vec![false; n], &mut Vec::new(), &mut all);
    let max = all.iter().map(Vec::len).max().unwrap_or(0);
    all.retain(|m| m.len() == max);
    all
}

/// Labels from the definitions: in every maximum matching, in none, or in some.
pub fn enumerated_labels(g: &DirectedGraph) -> BTreeMap<Edge, LinkClass> {
    let matchings = all_maximum_matchings(g);
    g.edges()
        .into_iter()
        .map(|e| {
            let hits = matchings.iter().filter(|m| m.contains(&e)).count();
            let class = if hits == matchings.len() {
                LinkClass::Critical
            } else if hits == 0 {
                LinkClass::Redundant
            } else {
                LinkClass::Ordinary
            };
            (e, class)
        })
        .collect()
}

pub fn degree_of(g: &DirectedGraph, t: DegreeType, u: usize) -> f64 {
    match t {
        DegreeType::In => g.in_degree(u) as f64,
        DegreeType::Out => g.out_degree(u) as f64,
    }
}

/// Pearson correlation over links computed from centred values.
pub fn two_pass_assortativity(g: &DirectedGraph, alpha: DegreeType, beta: DegreeType) -> Option<f64> {
    let pairs: Vec<(f64, f64)> = g
        .edges()
        .iter()
        .map(|e| (degree_of(g, alpha, e.source), degree_of(g, beta, e.target)))
        .collect();
    if pairs.is_empty() {
        return None;
    }
    let l = pairs.len() as f64;
    let mx = pairs.iter().map(|p| p.0).sum::<f64>() / l;
    let my = pairs.iter().map(|p| p.1).sum::<f64>() / l;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in &pairs {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx.sqrt() * syy.sqrt()))
}

/// `sum_i sum_j |k_i - k_j| / (2 N^2 <k>)` by the double sum.
pub fn direct_heterogeneity(g: &DirectedGraph) -> Option<f64> {
    let n = g.node_count();
    let k: Vec<f64> = (0..n).map(|u| (g.in_degree(u) + g.out_degree(u)) as f64).collect();
    let mean = k.iter().sum::<f64>() / n as f64;
    if mean == 0.0 {
        return None;
    }
    let mut total = 0.0;
    for a in &k {
        for b in &k {
            total += (a - b).abs();
        }
    }
    Some(total / (2.0 * (n * n) as f64 * mean))
}

/// Every node links to `i + s mod n` for each shift, so all total degrees
/// are equal.
pub fn circulant(n: usize, shifts: &[usize]) -> DirectedGraph {
    let mut g = DirectedGraph::new(n).unwrap();
    for u in 0..n {
        for &s in shifts {
            let v = (u + s) % n;
            if v != u && !g.has_edge(u, v) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// All subsets of `0..n` with exactly `size` elements.
pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == size)
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}
