//! Parameter sweeps over generated networks.
//!
//! A sweep is a grid of (model, N, target `<k>`, gamma) points. Every grid
//! point and replicate generates one graph, measures it as generated
//! (`original`) and after each rewiring strategy, and yields one
//! [`SweepRecord`] per method. All methods of a replicate start from the
//! same graph, so the run seed does not depend on the method.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{GenerateError, SweepError};
use crate::generators::{GeneratorSpec, Model};
use crate::graph::DirectedGraph;
use crate::metrics::{summarize, MetricValue};
use crate::rewiring::{rewire, AdditionRule, Method, RewireLimits, TerminationReason};
use crate::seed::mix_seed;

pub const DEFAULT_BASE_SEED: u64 = 20_240_601;
pub const DEFAULT_REPLICATES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelFamily {
    ErdosRenyi,
    ScaleFree,
}

impl ModelFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModelFamily::ErdosRenyi => "ER",
            ModelFamily::ScaleFree => "SF",
        }
    }

    fn tag(&self) -> u64 {
        match self {
            ModelFamily::ErdosRenyi => 1,
            ModelFamily::ScaleFree => 2,
        }
    }
}

impl fmt::Display for ModelFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModelFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ER" | "er" => Ok(ModelFamily::ErdosRenyi),
            "SF" | "sf" => Ok(ModelFamily::ScaleFree),
            other => Err(format!("unknown model {other:?}")),
        }
    }
}

/// What a record measures: the generated graph or a rewired copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SweepMethod {
    Original,
    Random,
    Regular,
}

impl SweepMethod {
    pub const ALL: [SweepMethod; 3] = [SweepMethod::Original, SweepMethod::Random, SweepMethod::Regular];

    pub fn as_str(&self) -> &'static str {
        match self {
            SweepMethod::Original => "original",
            SweepMethod::Random => "random",
            SweepMethod::Regular => "regular",
        }
    }

    pub fn rewiring(&self) -> Option<Method> {
        match self {
            SweepMethod::Original => None,
            SweepMethod::Random => Some(Method::Random),
            SweepMethod::Regular => Some(Method::Regular),
        }
    }
}

impl fmt::Display for SweepMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SweepMethod::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// One generated graph: a grid point plus a replicate index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunKey {
    pub model: ModelFamily,
    pub n: usize,
    pub k_target: f64,
    /// Present exactly for scale-free runs.
    pub gamma: Option<f64>,
    pub replicate: usize,
}

impl RunKey {
    /// Seed of this run within a sweep with the given base seed.
    pub fn seed(&self, base_seed: u64) -> u64 {
        mix_seed(&[
            base_seed,
            self.model.tag(),
            self.n as u64,
            self.k_target.to_bits(),
            self.gamma.map_or(0, f64::to_bits),
            self.replicate as u64,
        ])
    }

    pub fn generator(&self, seed: u64) -> GeneratorSpec {
        let model = match self.gamma {
            Some(gamma) => Model::ScaleFree { gamma },
            None => Model::ErdosRenyi,
        };
        GeneratorSpec {
            model,
            n: self.n,
            k_avg: self.k_target,
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub models: Vec<ModelFamily>,
    pub n_list: Vec<usize>,
    pub k_list: Vec<f64>,
    /// Exponents for scale-free runs; ignored by Erdős–Rényi runs.
    pub gamma_list: Vec<f64>,
    pub methods: Vec<SweepMethod>,
    pub replicates: usize,
    pub base_seed: u64,
    pub addition: AdditionRule,
    pub max_iterations: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            models: vec![ModelFamily::ErdosRenyi],
            n_list: vec![2000],
            k_list: (2..=10).map(f64::from).collect(),
            gamma_list: vec![4.0],
            methods: SweepMethod::ALL.to_vec(),
            replicates: DEFAULT_REPLICATES,
            base_seed: DEFAULT_BASE_SEED,
            addition: AdditionRule::default(),
            max_iterations: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepError> {
        let bad = |msg: &str| Err(SweepError::InvalidConfig(msg.to_string()));
        if self.models.is_empty() {
            return bad("no models");
        }
        if self.n_list.is_empty() || self.n_list.contains(&0) {
            return bad("node counts must be non-empty and positive");
        }
        if self.k_list.is_empty() || self.k_list.iter().any(|k| !k.is_finite() || *k < 0.0) {
            return bad("average degrees must be non-empty, finite and non-negative");
        }
        if self.models.contains(&ModelFamily::ScaleFree)
            && (self.gamma_list.is_empty() || self.gamma_list.iter().any(|g| !(*g > 2.0 && g.is_finite())))
        {
            return bad("scale-free runs need exponents greater than 2");
        }
        if self.methods.is_empty() {
            return bad("no methods");
        }
        if self.replicates == 0 {
            return bad("replicates must be at least 1");
        }
        Ok(())
    }

    /// Every run of the sweep in record order.
    pub fn runs(&self) -> Vec<RunKey> {
        let mut models = self.models.clone();
        models.sort();
        models.dedup();
        let mut gammas = self.gamma_list.clone();
        gammas.sort_by(f64::total_cmp);
        gammas.dedup();
        let mut runs = Vec::new();
        for &model in &models {
            let gamma_axis: Vec<Option<f64>> = match model {
                ModelFamily::ErdosRenyi => vec![None],
                ModelFamily::ScaleFree => gammas.iter().copied().map(Some).collect(),
            };
            for &n in &self.n_list {
                for &k_target in &self.k_list {
                    for &gamma in &gamma_axis {
                        for replicate in 0..self.replicates {
                            runs.push(RunKey { model, n, k_target, gamma, replicate });
                        }
                    }
                }
            }
        }
        runs.sort_by(run_order);
        runs.dedup_by(|a, b| run_order(a, b).is_eq());
        runs
    }

    fn sorted_methods(&self) -> Vec<SweepMethod> {
        let mut methods = self.methods.clone();
        methods.sort();
        methods.dedup();
        methods
    }

    pub fn record_count(&self) -> usize {
        self.runs().len() * self.sorted_methods().len()
    }
}

fn run_order(a: &RunKey, b: &RunKey) -> std::cmp::Ordering {
    a.model
        .cmp(&b.model)
        .then(a.n.cmp(&b.n))
        .then(a.k_target.total_cmp(&b.k_target))
        .then(a.gamma.unwrap_or(0.0).total_cmp(&b.gamma.unwrap_or(0.0)))
        .then(a.replicate.cmp(&b.replicate))
}

/// One row of sweep output.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub model: ModelFamily,
    pub n: usize,
    pub k_target: f64,
    pub k_realized: f64,
    pub gamma: Option<f64>,
    pub method: SweepMethod,
    pub replicate: usize,
    pub seed: u64,
    pub n_driver: usize,
    pub n_d: f64,
    pub r_in_in: MetricValue<f64>,
    pub r_in_out: MetricValue<f64>,
    pub r_out_in: MetricValue<f64>,
    pub r_out_out: MetricValue<f64>,
    pub r_node_inout: MetricValue<f64>,
    pub h: MetricValue<f64>,
    pub iterations: usize,
    /// Absent for `original` records.
    pub termination_reason: Option<TerminationReason>,
}

impl SweepRecord {
    pub fn key(&self) -> RunKey {
        RunKey {
            model: self.model,
            n: self.n,
            k_target: self.k_target,
            gamma: self.gamma,
            replicate: self.replicate,
        }
    }

    fn measure(key: &RunKey, seed: u64, method: SweepMethod, g: &DirectedGraph) -> Self {
        let s = summarize::<f64>(g);
        Self {
            model: key.model,
            n: key.n,
            k_target: key.k_target,
            k_realized: s.k_avg,
            gamma: key.gamma,
            method,
            replicate: key.replicate,
            seed,
            n_driver: s.n_driver,
            n_d: s.n_d,
            r_in_in: s.r_in_in,
            r_in_out: s.r_in_out,
            r_out_in: s.r_out_in,
            r_out_out: s.r_out_out,
            r_node_inout: s.r_node_inout,
            h: s.h,
            iterations: 0,
            termination_reason: None,
        }
    }
}

/// CSV column names in output order.
pub const CSV_HEADER: [&str; 18] = [
    "model",
    "n",
    "k_target",
    "k_realized",
    "gamma",
    "method",
    "replicate",
    "seed",
    "n_driver",
    "n_d",
    "r_in_in",
    "r_in_out",
    "r_out_in",
    "r_out_out",
    "r_node_inout",
    "H",
    "iterations",
    "termination_reason",
];

/// Formats like C's `%g`: six significant digits, trailing zeros dropped,
/// exponent form outside `[1e-4, 1e6)`.
pub fn format_g(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (5 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn metric_field(m: MetricValue<f64>) -> String {
    m.value().map(format_g).unwrap_or_default()
}

impl SweepRecord {
    pub fn csv_fields(&self) -> [String; 18] {
        [
            self.model.to_string(),
            self.n.to_string(),
            format_g(self.k_target),
            format_g(self.k_realized),
            self.gamma.map(format_g).unwrap_or_default(),
            self.method.to_string(),
            self.replicate.to_string(),
            self.seed.to_string(),
            self.n_driver.to_string(),
            format_g(self.n_d),
            metric_field(self.r_in_in),
            metric_field(self.r_in_out),
            metric_field(self.r_out_in),
            metric_field(self.r_out_out),
            metric_field(self.r_node_inout),
            metric_field(self.h),
            self.iterations.to_string(),
            self.termination_reason.map(|r| r.to_string()).unwrap_or_default(),
        ]
    }

    fn from_fields(row: &csv::StringRecord, line: usize) -> Result<Self, SweepError> {
        let bad = |column: &str, value: &str| SweepError::Csv {
            line,
            msg: format!("bad {column} value {value:?}"),
        };
        let field = |i: usize| row.get(i).unwrap_or("");
        fn parse<T: FromStr>(s: &str) -> Option<T> {
            s.parse().ok()
        }
        let num = |i: usize| -> Result<f64, SweepError> {
            parse::<f64>(field(i)).ok_or_else(|| bad(CSV_HEADER[i], field(i)))
        };
        let int = |i: usize| -> Result<usize, SweepError> {
            parse::<usize>(field(i)).ok_or_else(|| bad(CSV_HEADER[i], field(i)))
        };
        let metric = |i: usize| -> Result<MetricValue<f64>, SweepError> {
            match field(i) {
                "" => Ok(MetricValue::Undefined),
                s => parse::<f64>(s)
                    .map(MetricValue::Defined)
                    .ok_or_else(|| bad(CSV_HEADER[i], s)),
            }
        };
        if row.len() != CSV_HEADER.len() {
            return Err(SweepError::Csv {
                line,
                msg: format!("expected {} fields, found {}", CSV_HEADER.len(), row.len()),
            });
        }
        Ok(Self {
            model: field(0).parse().map_err(|_| bad("model", field(0)))?,
            n: int(1)?,
            k_target: num(2)?,
            k_realized: num(3)?,
            gamma: match field(4) {
                "" => None,
                _ => Some(num(4)?),
            },
            method: field(5).parse().map_err(|_| bad("method", field(5)))?,
            replicate: int(6)?,
            seed: parse::<u64>(field(7)).ok_or_else(|| bad("seed", field(7)))?,
            n_driver: int(8)?,
            n_d: num(9)?,
            r_in_in: metric(10)?,
            r_in_out: metric(11)?,
            r_out_in: metric(12)?,
            r_out_out: metric(13)?,
            r_node_inout: metric(14)?,
            h: metric(15)?,
            iterations: int(16)?,
            termination_reason: match field(17) {
                "" => None,
                s => Some(s.parse().map_err(|_| bad("termination_reason", s))?),
            },
        })
    }
}

/// Writes the header and one row per record, LF-terminated.
pub fn write_records<W: Write>(records: &[SweepRecord], out: W) -> Result<(), SweepError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(r.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

/// Reads records written by [`write_records`].
pub fn read_records<R: Read>(input: R) -> Result<Vec<SweepRecord>, SweepError> {
    let mut rdr = csv::Reader::from_reader(input);
    let header = rdr.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(SweepError::Csv {
            line: 1,
            msg: "unexpected header".to_string(),
        });
    }
    let mut records = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        records.push(SweepRecord::from_fields(&row?, i + 2)?);
    }
    Ok(records)
}

/// A run whose graph could not be generated.
#[derive(Debug, Clone, PartialEq)]
pub struct SkippedRun {
    pub key: RunKey,
    pub seed: u64,
    pub error: GenerateError,
}

impl fmt::Display for SkippedRun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.key;
        write!(
            f,
            "skipped {} n={} k={} gamma={} replicate={} seed={}: {}",
            k.model,
            k.n,
            format_g(k.k_target),
            k.gamma.map(format_g).unwrap_or_else(|| "-".to_string()),
            k.replicate,
            self.seed,
            self.error
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepOutput {
    pub records: Vec<SweepRecord>,
    pub skipped: Vec<SkippedRun>,
}

/// Seed used by the random strategy for a run.
pub fn rewiring_seed(run_seed: u64) -> u64 {
    mix_seed(&[run_seed, 0x7265_7769_7265])
}

/// Generates one graph and measures it under each method, in method order.
pub fn run_single(
    key: &RunKey,
    seed: u64,
    methods: &[SweepMethod],
    addition: AdditionRule,
    max_iterations: Option<usize>,
) -> Result<Vec<SweepRecord>, GenerateError> {
    let g = key.generator(seed).generate()?;
    let limits = RewireLimits {
        max_iterations,
        seed: rewiring_seed(seed),
        addition,
    };
    Ok(methods
        .iter()
        .map(|&method| match method.rewiring() {
            None => SweepRecord::measure(key, seed, method, &g),
            Some(m) => {
                let (rewired, report) = rewire(&g, m, &limits);
                let mut rec = SweepRecord::measure(key, seed, method, &rewired);
                rec.iterations = report.iterations;
                rec.termination_reason = Some(report.termination_reason);
                rec
            }
        })
        .collect())
}

/// Recomputes one record from its identifying fields.
pub fn replay(
    key: &RunKey,
    method: SweepMethod,
    seed: u64,
    addition: AdditionRule,
    max_iterations: Option<usize>,
) -> Result<SweepRecord, GenerateError> {
    run_single(key, seed, &[method], addition, max_iterations).map(|mut v| v.remove(0))
}

/// Runs every grid point, in parallel, and returns records in sorted order.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutput, SweepError> {
    config.validate()?;
    let runs = config.runs();
    let mut seen: HashMap<u64, usize> = HashMap::with_capacity(runs.len());
    for (i, key) in runs.iter().enumerate() {
        if let Some(&j) = seen.get(&key.seed(config.base_seed)) {
            return Err(SweepError::SeedCollision(format!("{:?} and {:?}", runs[j], key)));
        }
        seen.insert(key.seed(config.base_seed), i);
    }
    let methods = config.sorted_methods();
    let results: Vec<(RunKey, u64, Result<Vec<SweepRecord>, GenerateError>)> = runs
        .par_iter()
        .map(|key| {
            let seed = key.seed(config.base_seed);
            let result = run_single(key, seed, &methods, config.addition, config.max_iterations);
            (*key, seed, result)
        })
        .collect();
    let mut out = SweepOutput::default();
    for (key, seed, result) in results {
        match result {
            Ok(records) => out.records.extend(records),
            Err(error) => out.skipped.push(SkippedRun { key, seed, error }),
        }
    }
    out.records.sort_by(|a, b| {
        a.model
            .cmp(&b.model)
            .then(a.n.cmp(&b.n))
            .then(a.k_target.total_cmp(&b.k_target))
            .then(a.gamma.unwrap_or(0.0).total_cmp(&b.gamma.unwrap_or(0.0)))
            .then(a.method.cmp(&b.method))
            .then(a.replicate.cmp(&b.replicate))
    });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::Fig1, Figure::Fig2, Figure::Fig3, Figure::Fig4];

    pub fn as_str(&self) -> &'static str {
        match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
        }
    }

    /// One-line description of the grid.
    pub fn describe(&self) -> &'static str {
        match self {
            Figure::Fig1 => "driver density vs <k>: ER and SF(gamma=4), N=2000, k=2..10, original/random/regular",
            Figure::Fig2 => "assortativity vs <k>: ER and SF(gamma=4), N=2000, k=2..10, original/regular",
            Figure::Fig3 => "size independence: ER, N in {500,1000,2000}, k=2..10, regular",
            Figure::Fig4 => "heterogeneity: SF, gamma in {3,4,6}, N=2000, k=2..10, original/regular",
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Figure {
    type Err = SweepError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Figure::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| SweepError::UnknownFigure(s.to_string()))
    }
}

/// Sweep reproducing one figure. The `<k>` grid 2..10 and ten replicates
/// per point are reconstructions, not published values.
pub fn figure_recipe(figure: Figure) -> SweepConfig {
    use ModelFamily::{ErdosRenyi, ScaleFree};
    use SweepMethod::{Original, Random, Regular};
    let base = SweepConfig::default();
    match figure {
        Figure::Fig1 => SweepConfig {
            models: vec![ErdosRenyi, ScaleFree],
            gamma_list: vec![4.0],
            methods: vec![Original, Random, Regular],
            ..base
        },
        Figure::Fig2 => SweepConfig {
            models: vec![ErdosRenyi, ScaleFree],
            gamma_list: vec![4.0],
            methods: vec![Original, Regular],
            ..base
        },
        Figure::Fig3 => SweepConfig {
            models: vec![ErdosRenyi],
            n_list: vec![500, 1000, 2000],
            methods: vec![Regular],
            ..base
        },
        Figure::Fig4 => SweepConfig {
            models: vec![ScaleFree],
            gamma_list: vec![3.0, 4.0, 6.0],
            methods: vec![Original, Regular],
            ..base
        },
    }
}

/// Mean and sample standard deviation over the replicates of one grid
/// point and method. Undefined metric values are left out.
#[derive(Debug, Clone, PartialEq)]
pub struct Aggregate {
    pub model: ModelFamily,
    pub n: usize,
    pub k_target: f64,
    pub gamma: Option<f64>,
    pub method: SweepMethod,
    pub count: usize,
    pub n_d: MeanSd,
    pub n_driver: MeanSd,
    pub k_realized: MeanSd,
    pub r_in_in: MeanSd,
    pub r_in_out: MeanSd,
    pub r_out_in: MeanSd,
    pub r_out_out: MeanSd,
    pub r_node_inout: MeanSd,
    pub h: MeanSd,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanSd {
    /// Number of defined values.
    pub count: usize,
    pub mean: Option<f64>,
    /// Sample standard deviation; absent below two values.
    pub sd: Option<f64>,
}

impl MeanSd {
    pub fn of(values: impl IntoIterator<Item = f64>) -> Self {
        let values: Vec<f64> = values.into_iter().collect();
        let count = values.len();
        if count == 0 {
            return Self { count, mean: None, sd: None };
        }
        let mean = values.iter().sum::<f64>() / count as f64;
        let sd = (count > 1).then(|| {
            let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
            (ss / (count - 1) as f64).sqrt()
        });
        Self { count, mean: Some(mean), sd }
    }
}

type GroupKey = (ModelFamily, usize, OrdF64, OrdF64, SweepMethod);

/// Groups records by grid point and method, in record sort order.
pub fn aggregate(records: &[SweepRecord]) -> Vec<Aggregate> {
    let mut groups: BTreeMap<GroupKey, Vec<&SweepRecord>> = BTreeMap::new();
    for r in records {
        let key = (r.model, r.n, OrdF64(r.k_target), OrdF64(r.gamma.unwrap_or(0.0)), r.method);
        groups.entry(key).or_default().push(r);
    }
    groups
        .into_values()
        .map(|rs| {
            let first = rs[0];
            let stat = |f: &dyn Fn(&SweepRecord) -> Option<f64>| MeanSd::of(rs.iter().filter_map(|r| f(r)));
            Aggregate {
                model: first.model,
                n: first.n,
                k_target: first.k_target,
                gamma: first.gamma,
                method: first.method,
                count: rs.len(),
                n_d: stat(&|r| Some(r.n_d)),
                n_driver: stat(&|r| Some(r.n_driver as f64)),
                k_realized: stat(&|r| Some(r.k_realized)),
                r_in_in: stat(&|r| r.r_in_in.value()),
                r_in_out: stat(&|r| r.r_in_out.value()),
                r_out_in: stat(&|r| r.r_out_in.value()),
                r_out_out: stat(&|r| r.r_out_out.value()),
                r_node_inout: stat(&|r| r.r_node_inout.value()),
                h: stat(&|r| r.h.value()),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct OrdF64(f64);

impl Eq for OrdF64 {}

impl PartialOrd for OrdF64 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdF64 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}
