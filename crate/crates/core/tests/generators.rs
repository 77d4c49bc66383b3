use netctl::generators::{erdos_renyi, scale_free_static};
use netctl::{node_in_out_correlation, GenerateError, GeneratorSpec};
use proptest::prelude::*;

/// In the static model a node's in-degree follows, for `k > gamma - 1`,
/// `P(k) ~ Gamma(k + 1 - gamma) / Gamma(k + 1)`, which decays as `k^-gamma`.
/// A pure `k^-gamma` law fitted to the small degrees of an N = 2000 graph
/// overestimates the exponent by about half a unit, so the fit uses this
/// exact shape. Log-weights are relative to `kmin`.
fn log_weights(gamma: f64, kmin: usize, kmax: usize) -> Vec<f64> {
    let mut w = vec![0.0; kmax - kmin + 1];
    for k in kmin..kmax {
        w[k + 1 - kmin] = w[k - kmin] + ((k as f64 + 1.0 - gamma) / (k as f64 + 1.0)).ln();
    }
    w
}

fn log_normalizer(gamma: f64, kmin: usize) -> f64 {
    let kmax = kmin + 100_000;
    let w = log_weights(gamma, kmin, kmax);
    let head: f64 = w.iter().map(|x| x.exp()).sum();
    // Remaining mass of a k^-gamma tail beyond kmax.
    (head + w[w.len() - 1].exp() * kmax as f64 / (gamma - 1.0)).ln()
}

/// Discrete maximum-likelihood exponent from the values `>= kmin`.
fn discrete_mle(values: &[usize], kmin: usize) -> f64 {
    let tail: Vec<usize> = values.iter().copied().filter(|&k| k >= kmin).collect();
    let kmax = tail.iter().copied().max().unwrap_or(kmin);
    let nll = |gamma: f64| {
        let w = log_weights(gamma, kmin, kmax);
        tail.len() as f64 * log_normalizer(gamma, kmin) - tail.iter().map(|&k| w[k - kmin]).sum::<f64>()
    };
    // Golden-section search over gamma < kmin + 1, where every weight is positive.
    let (mut lo, mut hi) = (1.5f64, (kmin as f64 + 0.99).min(12.0));
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..80 {
        let a = hi - phi * (hi - lo);
        let b = lo + phi * (hi - lo);
        if nll(a) < nll(b) {
            hi = b;
        } else {
            lo = a;
        }
    }
    (lo + hi) / 2.0
}

#[test]
fn fitter_recovers_known_exponent() {
    use rand::distributions::{Distribution, WeightedIndex};
    use rand::SeedableRng;
    let (gamma, kmin) = (3.0, 5);
    let w = log_weights(gamma, kmin, kmin + 20_000);
    let dist = WeightedIndex::new(w.iter().map(|x| x.exp())).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let samples: Vec<usize> = (0..20_000).map(|_| kmin + dist.sample(&mut rng)).collect();
    assert!((discrete_mle(&samples, kmin) - gamma).abs() < 0.05);
}

#[test]
fn scale_free_in_degree_tail_exponent() {
    let fits: Vec<f64> = (0..20)
        .map(|seed| {
            let g = GeneratorSpec::scale_free(2000, 6.0, 4.0, seed).generate().unwrap();
            assert_eq!(g.edge_count(), 6000);
            let in_degrees: Vec<usize> = (0..2000).map(|v| g.in_degree(v)).collect();
            discrete_mle(&in_degrees, 8)
        })
        .collect();
    let mean = fits.iter().sum::<f64>() / fits.len() as f64;
    assert!((mean - 4.0).abs() <= 0.5, "mean fitted exponent {mean}, fits {fits:?}");
}

#[test]
fn scale_free_in_out_degrees_uncorrelated() {
    let r: Vec<f64> = (0..20)
        .map(|seed| {
            let g = GeneratorSpec::scale_free(2000, 6.0, 4.0, 100 + seed).generate().unwrap();
            node_in_out_correlation::<f64>(&g).value().unwrap()
        })
        .collect();
    let mean = r.iter().sum::<f64>() / r.len() as f64;
    assert!(mean.abs() < 0.05, "mean correlation {mean}");
}

#[test]
fn exact_link_counts() {
    assert_eq!(GeneratorSpec::erdos_renyi(1000, 6.0, 1).generate().unwrap().edge_count(), 3000);
    let triangle = GeneratorSpec::erdos_renyi(3, 4.0, 1).generate().unwrap();
    assert_eq!(triangle.edge_count(), 6);
    assert!(matches!(
        GeneratorSpec::erdos_renyi(3, 4.4, 1).generate(),
        Err(GenerateError::InfeasibleDensity { .. })
    ));
    assert!(matches!(
        GeneratorSpec::scale_free(100, 4.0, 2.0, 1).generate(),
        Err(GenerateError::InvalidSpec(_))
    ));
}

#[test]
fn free_functions_match_spec_generate() {
    let er = GeneratorSpec::erdos_renyi(200, 3.0, 9);
    assert_eq!(erdos_renyi(&er).unwrap(), er.generate().unwrap());
    let sf = GeneratorSpec::scale_free(200, 3.0, 3.0, 9);
    assert_eq!(scale_free_static(&sf).unwrap(), sf.generate().unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_graphs_are_valid(
        n in 2usize..150,
        k in 0.0f64..8.0,
        gamma in prop::option::of(2.1f64..7.0),
        seed in any::<u64>(),
    ) {
        let spec = match gamma {
            Some(gamma) => GeneratorSpec::scale_free(n, k, gamma, seed),
            None => GeneratorSpec::erdos_renyi(n, k, seed),
        };
        match spec.generate() {
            Ok(g) => {
                prop_assert!(g.is_consistent());
                prop_assert_eq!(g.edge_count(), spec.edge_target());
                let expected = 2.0 * (n as f64 * k / 2.0).round() / n as f64;
                prop_assert_eq!(g.average_degree(), expected);
                prop_assert_eq!(spec.generate().unwrap(), g);
            }
            Err(GenerateError::InfeasibleDensity { .. }) => {
                prop_assert!(spec.edge_target() > n * (n - 1));
            }
            Err(GenerateError::Stuck { .. }) => prop_assert!(gamma.is_some()),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

