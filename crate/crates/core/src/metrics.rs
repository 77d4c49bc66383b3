//! Structural measures: driver density, directed degree assortativity, and
//! degree heterogeneity.
//!
//! Degree sums are accumulated exactly in integers; only the final ratio is
//! formed in the caller's float type `F`.

use std::fmt;

use num_traits::Float;

use crate::graph::DirectedGraph;
use crate::matching;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeType {
    In,
    Out,
}

impl DegreeType {
    pub const ALL: [DegreeType; 2] = [DegreeType::In, DegreeType::Out];

    fn of(self, g: &DirectedGraph, node: usize) -> usize {
        match self {
            DegreeType::In => g.in_degree(node),
            DegreeType::Out => g.out_degree(node),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            DegreeType::In => "in",
            DegreeType::Out => "out",
        }
    }
}

impl fmt::Display for DegreeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A metric that may be undefined (no edges, or zero variance).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetricValue<F> {
    Defined(F),
    Undefined,
}

impl<F: Copy> MetricValue<F> {
    pub fn value(&self) -> Option<F> {
        match *self {
            MetricValue::Defined(v) => Some(v),
            MetricValue::Undefined => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, MetricValue::Defined(_))
    }
}

fn cast<F: Float>(x: i128) -> F {
    F::from(x).expect("integer fits in float type")
}

/// Pearson correlation of integer pairs from exact sums, clamped to [-1, 1]
/// against rounding in the final square root.
fn pearson<F: Float>(pairs: impl Iterator<Item = (usize, usize)>) -> MetricValue<F> {
    let (mut n, mut sx, mut sy, mut sxx, mut syy, mut sxy) = (0i128, 0i128, 0i128, 0i128, 0i128, 0i128);
    for (x, y) in pairs {
        let (x, y) = (x as i128, y as i128);
        n += 1;
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    if n == 0 {
        return MetricValue::Undefined;
    }
    let cov = n * sxy - sx * sy;
    let var_x = n * sxx - sx * sx;
    let var_y = n * syy - sy * sy;
    if var_x == 0 || var_y == 0 {
        return MetricValue::Undefined;
    }
    let r = cast::<F>(cov) / (cast::<F>(var_x).sqrt() * cast::<F>(var_y).sqrt());
    MetricValue::Defined(r.max(-F::one()).min(F::one()))
}

/// Edge-wise correlation between the source's `alpha`-degree and the
/// target's `beta`-degree.
pub fn assortativity<F: Float>(
    g: &DirectedGraph,
    alpha: DegreeType,
    beta: DegreeType,
) -> MetricValue<F> {
    let pairs = (0..g.node_count()).flat_map(|u| {
        let ju = alpha.of(g, u);
        g.out_neighbors(u).iter().map(move |&v| (ju, beta.of(g, v)))
    });
    pearson(pairs)
}

/// Node-wise correlation between each node's in-degree and out-degree.
pub fn node_in_out_correlation<F: Float>(g: &DirectedGraph) -> MetricValue<F> {
    pearson((0..g.node_count()).map(|u| (g.in_degree(u), g.out_degree(u))))
}

/// Half the relative mean absolute difference of total degrees,
/// `sum_ij |k_i - k_j| / (2 N^2 <k>)`, via sorted prefix sums.
pub fn heterogeneity<F: Float>(g: &DirectedGraph) -> MetricValue<F> {
    let l = g.edge_count();
    if l == 0 {
        return MetricValue::Undefined;
    }
    let n = g.node_count();
    let mut k: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    k.sort_unstable();
    // For ascending k, sum_ij |k_i - k_j| = 2 * sum_i k_i * (2i - n + 1).
    let total: i128 = k
        .iter()
        .enumerate()
        .map(|(i, &ki)| ki as i128 * (2 * i as i128 - n as i128 + 1))
        .sum::<i128>()
        * 2;
    // 2 N^2 <k> with <k> = 2L/N.
    let denom = 4 * n as i128 * l as i128;
    MetricValue::Defined(cast::<F>(total) / cast::<F>(denom))
}

/// `n_driver / N`.
pub fn density_of_driver_nodes(g: &DirectedGraph) -> f64 {
    matching::n_d(g)
}

/// Every metric reported for a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary<F> {
    pub n: usize,
    pub l: usize,
    pub k_avg: F,
    pub n_driver: usize,
    pub n_d: F,
    pub r_in_in: MetricValue<F>,
    pub r_in_out: MetricValue<F>,
    pub r_out_in: MetricValue<F>,
    pub r_out_out: MetricValue<F>,
    pub r_node_inout: MetricValue<F>,
    pub h: MetricValue<F>,
}

pub fn summarize<F: Float>(g: &DirectedGraph) -> Summary<F> {
    use DegreeType::{In, Out};
    let n = g.node_count();
    let m = matching::maximum_matching(g);
    let n_driver = matching::driver_count(n, m.len());
    Summary {
        n,
        l: g.edge_count(),
        k_avg: cast::<F>(2 * g.edge_count() as i128) / cast::<F>(n as i128),
        n_driver,
        n_d: cast::<F>(n_driver as i128) / cast::<F>(n as i128),
        r_in_in: assortativity(g, In, In),
        r_in_out: assortativity(g, In, Out),
        r_out_in: assortativity(g, Out, In),
        r_out_out: assortativity(g, Out, Out),
        r_node_inout: node_in_out_correlation(g),
        h: heterogeneity(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use DegreeType::{In, Out};

    fn graph(n: usize, edges: &[(usize, usize)]) -> DirectedGraph {
        DirectedGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn cycle_assortativity_undefined() {
        let g = graph(3, &[(0, 1), (1, 2), (2, 0)]);
        for a in DegreeType::ALL {
            for b in DegreeType::ALL {
                assert_eq!(assortativity::<f64>(&g, a, b), MetricValue::Undefined);
            }
        }
    }

    #[test]
    fn shortcut_triangle_assortativity() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let r = assortativity::<f64>(&g, Out, In).value().unwrap();
        assert!((r + 0.5).abs() < 1e-15);
        let r = assortativity::<f64>(&g, In, Out).value().unwrap();
        assert!((r + 0.5).abs() < 1e-15);
        let r32 = assortativity::<f32>(&g, In, Out).value().unwrap();
        assert!((r32 + 0.5).abs() < 1e-6);
    }

    #[test]
    fn heterogeneity_values() {
        let cycle = graph(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(heterogeneity::<f64>(&cycle), MetricValue::Defined(0.0));
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(heterogeneity::<f64>(&star), MetricValue::Defined(0.25));
        assert_eq!(heterogeneity::<f32>(&star), MetricValue::Defined(0.25f32));
        let empty = DirectedGraph::new(3).unwrap();
        assert_eq!(heterogeneity::<f64>(&empty), MetricValue::Undefined);
    }

    #[test]
    fn driver_density() {
        assert!((density_of_driver_nodes(&graph(3, &[(0, 1), (1, 2)])) - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(density_of_driver_nodes(&DirectedGraph::new(10).unwrap()), 1.0);
        let ring: Vec<_> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
        assert_eq!(density_of_driver_nodes(&graph(10, &ring)), 0.1);
    }

    #[test]
    fn node_correlation() {
        // in = [0, 1, 2], out = [2, 1, 0]
        let g = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(node_in_out_correlation::<f64>(&g), MetricValue::Defined(-1.0));
    }

    #[test]
    fn summary_of_path() {
        let s = summarize::<f64>(&graph(3, &[(0, 1), (1, 2)]));
        assert_eq!((s.n, s.l, s.n_driver), (3, 2, 1));
        assert!((s.k_avg - 4.0 / 3.0).abs() < 1e-15);
        assert!(s.h.is_defined());
    }
}
