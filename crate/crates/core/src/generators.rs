//! Seeded Erdős–Rényi and static-model scale-free directed graphs.
//!
//! All randomness comes from [`ChaCha8Rng`] seeded with [`GeneratorSpec::seed`],
//! so a given [`GeneratorSpec`] always yields the same graph.

use std::fmt;

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::{index, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::GenerateError;
use crate::graph::DirectedGraph;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    ErdosRenyi,
    ScaleFree { gamma: f64 },
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::ErdosRenyi => "ER",
            Model::ScaleFree { .. } => "SF",
        }
    }

    pub fn gamma(&self) -> Option<f64> {
        match *self {
            Model::ErdosRenyi => None,
            Model::ScaleFree { gamma } => Some(gamma),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub model: Model,
    pub n: usize,
    /// Target `2L / N`.
    pub k_avg: f64,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn erdos_renyi(n: usize, k_avg: f64, seed: u64) -> Self {
        Self {
            model: Model::ErdosRenyi,
            n,
            k_avg,
            seed,
        }
    }

    pub fn scale_free(n: usize, k_avg: f64, gamma: f64, seed: u64) -> Self {
        Self {
            model: Model::ScaleFree { gamma },
            n,
            k_avg,
            seed,
        }
    }

    /// Number of edges to place, `round(n * k_avg / 2)`.
    pub fn edge_target(&self) -> usize {
        (self.n as f64 * self.k_avg / 2.0).round() as usize
    }

    fn validate(&self) -> Result<usize, GenerateError> {
        if self.n == 0 {
            return Err(GenerateError::InvalidSpec("n must be at least 1".into()));
        }
        if !(self.k_avg > 0.0 && self.k_avg.is_finite()) {
            return Err(GenerateError::InvalidSpec(format!(
                "k_avg must be positive, got {}",
                self.k_avg
            )));
        }
        if let Model::ScaleFree { gamma } = self.model {
            if !(gamma > 2.0 && gamma.is_finite()) {
                return Err(GenerateError::InvalidSpec(format!(
                    "gamma must exceed 2, got {gamma}"
                )));
            }
        }
        let edges = self.edge_target();
        let max = self.n * (self.n - 1);
        if edges > max {
            return Err(GenerateError::InfeasibleDensity {
                n: self.n,
                edges,
                max,
            });
        }
        Ok(edges)
    }

    pub fn generate(&self) -> Result<DirectedGraph, GenerateError> {
        match self.model {
            Model::ErdosRenyi => erdos_renyi(self),
            Model::ScaleFree { .. } => scale_free_static(self),
        }
    }
}

/// Exactly `L` distinct non-loop edges sampled uniformly without replacement.
pub fn erdos_renyi(spec: &GeneratorSpec) -> Result<DirectedGraph, GenerateError> {
    if spec.model != Model::ErdosRenyi {
        return Err(GenerateError::InvalidSpec("expected an ER spec".into()));
    }
    let edges = spec.validate()?;
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut g = DirectedGraph::new(n)?;
    if edges == 0 {
        return Ok(g);
    }
    // Pair index p encodes source p / (n-1) and the (p % (n-1))-th other node.
    let mut picks = index::sample(&mut rng, n * (n - 1), edges).into_vec();
    picks.sort_unstable();
    for p in picks {
        let u = p / (n - 1);
        let mut v = p % (n - 1);
        if v >= u {
            v += 1;
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Static model: node weights `(rank + 1)^(-1/(gamma-1))`, with independent
/// rank orders for the source and target ends.
/// Gives up after `100 * L` consecutive rejected draws.
pub fn scale_free_static(spec: &GeneratorSpec) -> Result<DirectedGraph, GenerateError> {
    let edges = spec.validate()?;
    place_static(spec, edges, 100 * edges)
}

fn place_static(spec: &GeneratorSpec, edges: usize, limit: usize) -> Result<DirectedGraph, GenerateError> {
    let Model::ScaleFree { gamma } = spec.model else {
        return Err(GenerateError::InvalidSpec("expected an SF spec".into()));
    };
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut g = DirectedGraph::new(n)?;
    if edges == 0 {
        return Ok(g);
    }

    let xi = 1.0 / (gamma - 1.0);
    let weights: Vec<f64> = (0..n).map(|i| ((i + 1) as f64).powf(-xi)).collect();
    let sampler = WeightedIndex::new(&weights)
        .map_err(|e| GenerateError::InvalidSpec(format!("weights: {e}")))?;

    let mut out_order: Vec<usize> = (0..n).collect();
    out_order.shuffle(&mut rng);
    let mut in_order: Vec<usize> = (0..n).collect();
    in_order.shuffle(&mut rng);

    let mut rejections = 0;
    while g.edge_count() < edges {
        let u = out_order[sampler.sample(&mut rng)];
        let v = in_order[sampler.sample(&mut rng)];
        if u == v || g.has_edge(u, v) {
            rejections += 1;
            if rejections > limit {
                return Err(GenerateError::Stuck {
                    rejections,
                    placed: g.edge_count(),
                    edges,
                });
            }
            continue;
        }
        rejections = 0;
        g.add_edge(u, v)?;
    }
    Ok(g)
}
