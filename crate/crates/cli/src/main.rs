//! `netctl` command-line tool.
//!
//! Graphs are read and written in the edge-list format: a `# nodes=<N>`
//! header followed by one `<source>\t<target>` line per link. A graph
//! argument of `-` reads standard input.
//!
//! Exit status is 0 on success, 1 on a usage error and 2 on a data error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use netctl::sweep::{self, RunKey, DEFAULT_BASE_SEED, DEFAULT_REPLICATES};
use netctl::{
    classify_links, figure_recipe, format_edge_list, parse_edge_list, rewire, run_sweep,
    summarize, verify_driver_set, AdditionRule, DirectedGraph, Figure, GeneratorSpec,
    GraphSummary, LinkClass, Method, MetricValue, ModelFamily, RewireLimits, SweepConfig,
    SweepError, SweepMethod,
};

#[derive(Parser)]
#[command(name = "netctl", version, about = "Structural controllability of directed networks")]
struct Cli {
    /// Random seed (sweeps: base seed of the whole grid).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the primary output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Suppress diagnostics on standard error.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an Erdős–Rényi or static-model scale-free network.
    Generate(GenerateArgs),
    /// Print driver counts, assortativity and heterogeneity of a network.
    Analyze {
        graph: PathBuf,
        /// Print a CSV header and row instead of key=value lines.
        #[arg(long)]
        csv: bool,
    },
    /// Label every link critical, redundant or ordinary.
    Classify { graph: PathBuf },
    /// Rewire redundant links to reduce the number of driver nodes.
    Rewire(RewireArgs),
    /// Check the matching-derived driver set with the Kalman rank test.
    Verify {
        graph: PathBuf,
        /// Independent random weight draws.
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Run a parameter sweep and print one CSV row per run and method.
    Sweep(SweepArgs),
    /// Run the sweep behind one figure (fig1, fig2, fig3, fig4).
    Figure(FigureArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Er,
    Sf,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    /// Node count.
    #[arg(long)]
    n: usize,
    /// Target average total degree 2L/N.
    #[arg(long)]
    k: f64,
    /// Degree exponent of scale-free networks.
    #[arg(long, default_value_t = 4.0)]
    gamma: f64,
}

#[derive(Args)]
struct RewireArgs {
    graph: PathBuf,
    #[arg(long, default_value = "regular", value_parser = parse_from_str::<Method>)]
    method: Method,
    /// Iteration cap; defaults to ten times the link count.
    #[arg(long)]
    max_iters: Option<usize>,
    /// Addition rule of the regular method: progress-first or ranked.
    #[arg(long, default_value = "progress-first", value_parser = parse_from_str::<AdditionRule>)]
    addition: AdditionRule,
    /// Write the per-iteration report as CSV.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Models: ER, SF.
    #[arg(long, value_delimiter = ',', default_value = "ER", value_parser = parse_from_str::<ModelFamily>)]
    models: Vec<ModelFamily>,
    #[arg(long = "n", value_delimiter = ',', default_value = "2000")]
    n_list: Vec<usize>,
    #[arg(long = "k", value_delimiter = ',', default_value = "2,3,4,5,6,7,8,9,10")]
    k_list: Vec<f64>,
    #[arg(long = "gamma", value_delimiter = ',', default_value = "4")]
    gamma_list: Vec<f64>,
    /// Methods: original, random, regular.
    #[arg(long, value_delimiter = ',', default_value = "original,random,regular", value_parser = parse_from_str::<SweepMethod>)]
    methods: Vec<SweepMethod>,
    #[arg(long, default_value_t = DEFAULT_REPLICATES)]
    replicates: usize,
    #[arg(long, default_value = "progress-first", value_parser = parse_from_str::<AdditionRule>)]
    addition: AdditionRule,
    #[arg(long)]
    max_iters: Option<usize>,
    /// Recompute a single record from its seed column. Needs exactly one
    /// model, node count, degree, method and (for SF) exponent.
    #[arg(long, value_name = "RUN_SEED")]
    replay: Option<u64>,
    /// Replicate index reported by --replay.
    #[arg(long, default_value_t = 0, requires = "replay")]
    replicate: usize,
}

#[derive(Args)]
struct FigureArgs {
    /// fig1, fig2, fig3 or fig4.
    #[arg(required_unless_present = "list")]
    name: Option<String>,
    /// Override the number of replicates per grid point.
    #[arg(long)]
    replicates: Option<usize>,
    /// List the recipes and exit.
    #[arg(long)]
    list: bool,
}

fn parse_from_str<T: std::str::FromStr<Err = String>>(s: &str) -> Result<T, String> {
    s.parse()
}

enum CliError {
    Usage(String),
    Data(String),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<SweepError> for CliError {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::InvalidConfig(_) | SweepError::UnknownFigure(_) => CliError::Usage(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

type CliResult = Result<(), CliError>;

struct Context {
    seed: Option<u64>,
    output: Option<PathBuf>,
    quiet: bool,
}

impl Context {
    fn emit(&self, bytes: &[u8]) -> CliResult {
        match &self.output {
            Some(path) => fs::write(path, bytes)
                .map_err(|e| CliError::Data(format!("{}: {e}", path.display()))),
            None => {
                let mut out = io::stdout().lock();
                out.write_all(bytes)?;
                out.flush()?;
                Ok(())
            }
        }
    }

    fn note(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("{}", msg.as_ref());
        }
    }
}

fn read_graph(path: &Path) -> Result<DirectedGraph, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?
    };
    parse_edge_list(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn metric(m: MetricValue<f64>) -> String {
    m.value().map(sweep::format_g).unwrap_or_else(|| "undefined".to_string())
}

fn summary_pairs(s: &GraphSummary) -> Vec<(&'static str, String)> {
    vec![
        ("n", s.n.to_string()),
        ("l", s.l.to_string()),
        ("k_avg", sweep::format_g(s.k_avg)),
        ("n_driver", s.n_driver.to_string()),
        ("n_d", sweep::format_g(s.n_d)),
        ("r_in_in", metric(s.r_in_in)),
        ("r_in_out", metric(s.r_in_out)),
        ("r_out_in", metric(s.r_out_in)),
        ("r_out_out", metric(s.r_out_out)),
        ("r_node_inout", metric(s.r_node_inout)),
        ("H", metric(s.h)),
    ]
}

fn generate(ctx: &Context, args: &GenerateArgs) -> CliResult {
    let seed = ctx.seed.unwrap_or(0);
    let spec = match args.model {
        ModelArg::Er => GeneratorSpec::erdos_renyi(args.n, args.k, seed),
        ModelArg::Sf => GeneratorSpec::scale_free(args.n, args.k, args.gamma, seed),
    };
    let g = spec.generate().map_err(|e| match e {
        netctl::GenerateError::InvalidSpec(_) => CliError::Usage(e.to_string()),
        _ => CliError::Data(e.to_string()),
    })?;
    ctx.note(format!("generated {} nodes, {} links", g.node_count(), g.edge_count()));
    ctx.emit(format_edge_list(&g).as_bytes())
}

fn analyze(ctx: &Context, path: &Path, csv: bool) -> CliResult {
    let pairs = summary_pairs(&summarize::<f64>(&read_graph(path)?));
    let text = if csv {
        let header: Vec<&str> = pairs.iter().map(|(k, _)| *k).collect();
        let row: Vec<String> = pairs
            .into_iter()
            .map(|(_, v)| if v == "undefined" { String::new() } else { v })
            .collect();
        format!("{}\n{}\n", header.join(","), row.join(","))
    } else {
        pairs.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    };
    ctx.emit(text.as_bytes())
}

fn classify(ctx: &Context, path: &Path) -> CliResult {
    let result = classify_links(&read_graph(path)?);
    let text: String = result
        .iter()
        .map(|(e, class)| format!("{}\t{}\t{class}\n", e.source, e.target))
        .collect();
    ctx.note(format!(
        "critical={} redundant={} ordinary={}",
        result.edges_of(LinkClass::Critical).len(),
        result.edges_of(LinkClass::Redundant).len(),
        result.edges_of(LinkClass::Ordinary).len()
    ));
    ctx.emit(text.as_bytes())
}

fn rewire_cmd(ctx: &Context, args: &RewireArgs) -> CliResult {
    let g = read_graph(&args.graph)?;
    let limits = RewireLimits {
        max_iterations: args.max_iters,
        seed: ctx.seed.unwrap_or(0),
        addition: args.addition,
    };
    let (rewired, report) = rewire(&g, args.method, &limits);
    if let Some(path) = &args.report {
        let file = fs::File::create(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        report
            .write_csv(io::BufWriter::new(file))
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    }
    ctx.note(format!(
        "iterations={} n_driver={}->{} termination={}",
        report.iterations,
        report.initial_n_driver,
        report.final_n_driver(),
        report.termination_reason
    ));
    ctx.emit(format_edge_list(&rewired).as_bytes())
}

fn verify(ctx: &Context, path: &Path, trials: usize) -> CliResult {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".to_string()));
    }
    let v = verify_driver_set(&read_graph(path)?, trials, ctx.seed.unwrap_or(0));
    ctx.note(format!("prime={}", netctl::field::PRIME));
    ctx.emit(format!("controllable={} m={} rank={}\n", v.controllable, v.m, v.rank).as_bytes())
}

fn write_sweep(ctx: &Context, records: &[netctl::SweepRecord]) -> CliResult {
    let mut buf = Vec::new();
    sweep::write_records(records, &mut buf)?;
    ctx.emit(&buf)
}

fn run_config(ctx: &Context, config: &SweepConfig) -> CliResult {
    config.validate()?;
    ctx.note(format!("running {} records", config.record_count()));
    let out = run_sweep(config)?;
    for skipped in &out.skipped {
        ctx.note(skipped.to_string());
    }
    write_sweep(ctx, &out.records)
}

fn sweep_cmd(ctx: &Context, args: &SweepArgs) -> CliResult {
    let config = SweepConfig {
        models: args.models.clone(),
        n_list: args.n_list.clone(),
        k_list: args.k_list.clone(),
        gamma_list: args.gamma_list.clone(),
        methods: args.methods.clone(),
        replicates: args.replicates,
        base_seed: ctx.seed.unwrap_or(DEFAULT_BASE_SEED),
        addition: args.addition,
        max_iterations: args.max_iters,
    };
    let Some(run_seed) = args.replay else {
        return run_config(ctx, &config);
    };
    let single = |name: &str, len: usize| {
        if len == 1 {
            Ok(())
        } else {
            Err(CliError::Usage(format!("--replay needs exactly one {name}")))
        }
    };
    single("model", args.models.len())?;
    single("node count", args.n_list.len())?;
    single("degree", args.k_list.len())?;
    single("method", args.methods.len())?;
    let model = args.models[0];
    let gamma = match model {
        ModelFamily::ScaleFree => {
            single("exponent", args.gamma_list.len())?;
            Some(args.gamma_list[0])
        }
        ModelFamily::ErdosRenyi => None,
    };
    let key = RunKey {
        model,
        n: args.n_list[0],
        k_target: args.k_list[0],
        gamma,
        replicate: args.replicate,
    };
    let record = sweep::replay(&key, args.methods[0], run_seed, args.addition, args.max_iters)
        .map_err(|e| CliError::Data(e.to_string()))?;
    write_sweep(ctx, &[record])
}

fn figure(ctx: &Context, args: &FigureArgs) -> CliResult {
    if args.list {
        let text: String = Figure::ALL
            .iter()
            .map(|f| format!("{f}\t{} records\t{}\n", figure_recipe(*f).record_count(), f.describe()))
            .collect();
        return ctx.emit(text.as_bytes());
    }
    let name = args.name.as_deref().unwrap_or_default();
    let mut config = figure_recipe(name.parse::<Figure>()?);
    if let Some(r) = args.replicates {
        config.replicates = r;
    }
    if let Some(seed) = ctx.seed {
        config.base_seed = seed;
    }
    run_config(ctx, &config)
}

fn run(cli: Cli) -> CliResult {
    let ctx = Context {
        seed: cli.seed,
        output: cli.output,
        quiet: cli.quiet,
    };
    match &cli.command {
        Command::Generate(args) => generate(&ctx, args),
        Command::Analyze { graph, csv } => analyze(&ctx, graph, *csv),
        Command::Classify { graph } => classify(&ctx, graph),
        Command::Rewire(args) => rewire_cmd(&ctx, args),
        Command::Verify { graph, trials } => verify(&ctx, graph, *trials),
        Command::Sweep(args) => sweep_cmd(&ctx, args),
        Command::Figure(args) => figure(&ctx, args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
