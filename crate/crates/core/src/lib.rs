//! Structural controllability of directed networks.
//!
//! Driver nodes come from a maximum matching of the network's bipartite
//! representation. On top of that the crate classifies links by their role
//! in maximum matchings, rewires networks to reduce the number of driver
//! nodes, measures degree correlations and heterogeneity, checks driver
//! sets against the Kalman rank condition over a prime field, and runs
//! seeded parameter sweeps on Erdős–Rényi and scale-free networks.
//!
//! ```
//! use netctl::{classify_links, maximum_matching, DirectedGraph, LinkClass};
//!
//! let g = DirectedGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
//! assert_eq!(maximum_matching(&g).len(), 2);
//! assert_eq!(classify_links(&g).label((0, 2).into()), Some(LinkClass::Redundant));
//! ```

pub mod classify;
pub mod error;
pub mod field;
pub mod generators;
pub mod graph;
pub mod io;
pub mod kalman;
pub mod matching;
pub mod metrics;
pub mod rewiring;
mod scc;
pub mod seed;
pub mod sweep;

pub use classify::{
    classify_links, classify_with_matching, redundant_links, ClassificationResult, LinkClass,
    MatchingStructure,
};
pub use error::{GenerateError, GraphError, ParseError, SweepError};
pub use field::{Field, Fp};
pub use generators::{GeneratorSpec, Model};
pub use graph::{DirectedGraph, Edge, NodeId};
pub use io::{format_edge_list, parse_edge_list, read_edge_list, write_edge_list};
pub use kalman::{
    build_input_matrix, controllability_rank, verify_driver_set, InputPattern, Verification,
    WeightedSystem,
};
pub use matching::{driver_set, maximum_matching, n_d, DriverSet, Matching};
pub use metrics::{
    assortativity, density_of_driver_nodes, heterogeneity, node_in_out_correlation, summarize,
    DegreeType, MetricValue, Summary,
};
pub use rewiring::{
    rewire, rewire_random, rewire_regular, select_addition_pair, select_progress_pair, AdditionRule,
    Method, RewireLimits, RewiringReport, TerminationReason,
};
pub use sweep::{
    figure_recipe, run_sweep, Figure, ModelFamily, SweepConfig, SweepMethod, SweepOutput, SweepRecord,
};

/// Metric value in double precision.
pub type Metric = MetricValue<f64>;
/// Metric value in single precision.
pub type Metric32 = MetricValue<f32>;
/// Full metric summary in double precision.
pub type GraphSummary = Summary<f64>;
/// Single-precision metric summary.
pub type GraphSummary32 = Summary<f32>;
/// Weighted system over the default prime field.
pub type PrimeSystem = WeightedSystem<Fp>;
