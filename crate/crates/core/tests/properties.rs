mod common;

use netctl::{
    assortativity, classify_links, driver_set, heterogeneity, maximum_matching, rewire, summarize,
    DegreeType, DirectedGraph, GeneratorSpec, LinkClass, Method, MetricValue, RewireLimits,
    TerminationReason,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn generated(max_n: usize) -> impl Strategy<Value = DirectedGraph> {
    (5..=max_n, 0.5f64..6.0, prop::option::of(2.2f64..6.0), any::<u64>()).prop_map(|(n, k, gamma, seed)| {
        let k = k.min((n - 1) as f64);
        let er = GeneratorSpec::erdos_renyi(n, k, seed);
        match gamma {
            Some(gamma) => GeneratorSpec::scale_free(n, k, gamma, seed)
                .generate()
                .unwrap_or_else(|_| er.generate().unwrap()),
            None => er.generate().unwrap(),
        }
    })
}

fn method() -> impl Strategy<Value = Method> {
    prop_oneof![Just(Method::Regular), Just(Method::Random)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rewiring_never_adds_drivers(g in generated(120), m in method(), seed in any::<u64>()) {
        let (out, report) = rewire(&g, m, &RewireLimits::with_seed(seed));
        prop_assert_eq!(out.node_count(), g.node_count());
        prop_assert_eq!(out.edge_count(), g.edge_count());
        prop_assert!(out.is_consistent());
        prop_assert_eq!(report.n_driver_trajectory.len(), report.iterations);
        let mut prev = report.initial_n_driver;
        for &d in &report.n_driver_trajectory {
            prop_assert!(d <= prev);
            prev = d;
        }
        prop_assert_eq!(report.final_n_driver(), driver_set(&maximum_matching(&out)).n_driver);
        if report.termination_reason == TerminationReason::NoRedundantLinks {
            prop_assert!(classify_links(&out).edges_of(LinkClass::Redundant).is_empty());
        }
    }

    #[test]
    fn deleted_links_were_redundant(g in generated(60), m in method(), seed in any::<u64>()) {
        let limits = RewireLimits { max_iterations: Some(1), ..RewireLimits::with_seed(seed) };
        let (out, report) = rewire(&g, m, &limits);
        if let (Some(d), Some(a)) = (report.deleted.first(), report.added.first()) {
            prop_assert_eq!(classify_links(&g).label(*d), Some(LinkClass::Redundant));
            prop_assert!(!g.has_edge(a.source, a.target) || a == d);
            prop_assert!(out.has_edge(a.source, a.target));
        }
    }

    #[test]
    fn fast_metrics_match_direct_sums(seed in any::<u64>(), n in 1usize..200, p in 0.0f64..0.1) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p);
        match (heterogeneity::<f64>(&g).value(), direct_heterogeneity(&g)) {
            (Some(a), Some(b)) => prop_assert!((a - b).abs() <= 1e-12),
            (a, b) => prop_assert_eq!(a, b),
        }
        for a in DegreeType::ALL {
            for b in DegreeType::ALL {
                match (assortativity::<f64>(&g, a, b).value(), two_pass_assortativity(&g, a, b)) {
                    (Some(x), Some(y)) => {
                        prop_assert!((-1.0..=1.0).contains(&x));
                        prop_assert!((x - y).abs() <= 1e-12);
                    }
                    (x, y) => prop_assert_eq!(x, y),
                }
            }
        }
    }

    #[test]
    fn regular_graphs_have_zero_heterogeneity(n in 3usize..200, shifts in prop::collection::vec(1usize..1000, 1..4)) {
        let shifts: Vec<usize> = shifts.iter().map(|s| 1 + s % (n - 1)).collect();
        let g = circulant(n, &shifts);
        prop_assert_eq!(heterogeneity::<f64>(&g), MetricValue::Defined(0.0));
    }

    #[test]
    fn single_precision_tracks_double(g in generated(200)) {
        let (a, b) = (summarize::<f64>(&g), summarize::<f32>(&g));
        prop_assert_eq!(a.n_driver, b.n_driver);
        for (x, y) in [(a.h, b.h), (a.r_in_out, b.r_in_out), (a.r_node_inout, b.r_node_inout)] {
            match (x.value(), y.value()) {
                (Some(x), Some(y)) => prop_assert!((x - y as f64).abs() < 1e-5),
                (x, y) => prop_assert_eq!(x.is_some(), y.is_some()),
            }
        }
    }
}

#[test]
fn star_heterogeneity() {
    let star = DirectedGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert_eq!(heterogeneity::<f64>(&star), MetricValue::Defined(0.25));
    assert_eq!(direct_heterogeneity(&star), Some(0.25));
}
