//! `ntcover` command-line tool.
//!
//! Exit codes: 0 success, 1 verification failed, 2 parse, usage or I/O
//! error, 3 instance too large for the exact solver.

mod bench;
mod input;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ntcover::approx::{approx_vc, ratio_bound, verify_result, ApproxError, ApproxResult};
use ntcover::geometry::{generate_instance, restrict_shapes, GenParams, ShapeKind};
use ntcover::graph::{WeightedGraph, MAX_TOTAL_WEIGHT};
use ntcover::io::{parse_result, serialize_graph, serialize_shapes, write_result};
use ntcover::kernel::kernelize;
use ntcover::oracle::{
    ExactOracle, GreedyOracle, IndependentSetOracle, LocalSearchOracle, OracleError, OracleKind,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::input::{load, Format, Loaded};

#[derive(Parser)]
#[command(
    name = "ntcover",
    version,
    about = "Vertex cover through LP kernels and independent set oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a vertex cover and print the result document.
    Solve(SolveArgs),
    /// Print the crown decomposition sizes and the kernel instance.
    Kernelize(KernelizeArgs),
    /// Generate a random instance.
    Gen(GenArgs),
    /// Check a result document against its instance.
    Verify(VerifyArgs),
    /// Run oracles over many instances and print a table.
    Bench(BenchArgs),
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Instance file, or `-` for stdin.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
    /// Read graph weights as decimals and multiply them by this factor.
    #[arg(long)]
    weight_scale: Option<u64>,
}

#[derive(Args, Clone)]
struct OracleArgs {
    /// Epsilon in [0, 1). Defaults to 0 for the exact oracle and 0.5 otherwise.
    #[arg(long)]
    eps: Option<f64>,
    /// Local-search swap size; overrides the value derived from --eps.
    #[arg(long)]
    swap_size: Option<usize>,
    /// Constant c in t = ceil(c / eps^2).
    #[arg(long, default_value_t = 1.0)]
    swap_constant: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest instance the exact solver accepts.
    #[arg(long, env = "NTCOVER_CAP", default_value_t = 30,
          value_parser = clap::value_parser!(u64).range(0..=30))]
    cap: u64,
}

impl OracleArgs {
    fn eps_for(&self, kind: OracleKind) -> f64 {
        self.eps
            .unwrap_or(if kind == OracleKind::Exact { 0.0 } else { 0.5 })
    }

    fn build(&self, kind: OracleKind) -> Result<Box<dyn IndependentSetOracle + Send + Sync>> {
        Ok(match kind {
            OracleKind::Exact => Box::new(ExactOracle {
                cap: self.cap as usize,
            }),
            OracleKind::Greedy => Box::new(GreedyOracle),
            OracleKind::LocalSearch => match self.swap_size {
                Some(t) => Box::new(LocalSearchOracle::new(t, self.seed)?),
                None => Box::new(LocalSearchOracle::from_epsilon(
                    self.eps_for(kind),
                    self.swap_constant,
                    self.seed,
                )?),
            },
        })
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "local-search", value_parser = parse_oracle)]
    oracle: OracleKind,
    #[command(flatten)]
    oracle_args: OracleArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct KernelizeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Disks,
    Rects,
    Gnp,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 100)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge probability (gnp).
    #[arg(long, default_value_t = 0.1)]
    p: f64,
    /// Side of the square holding centers or lower corners.
    #[arg(long, default_value_t = 100.0)]
    region: f64,
    /// Smallest radius or side.
    #[arg(long, default_value_t = 1.0)]
    min_size: f64,
    /// Largest radius or side.
    #[arg(long, default_value_t = 5.0)]
    max_size: f64,
    #[arg(long, default_value_t = 1)]
    max_weight: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Result document produced by `solve`.
    result: PathBuf,
    #[arg(long, env = "NTCOVER_CAP", default_value_t = 30,
          value_parser = clap::value_parser!(u64).range(0..=30))]
    cap: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance files or directories of instance files.
    #[arg(required = true)]
    paths: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
    #[arg(long)]
    weight_scale: Option<u64>,
    #[arg(long, value_delimiter = ',', default_value = "exact,greedy,local-search",
          value_parser = parse_oracle)]
    oracles: Vec<OracleKind>,
    #[command(flatten)]
    oracle_args: OracleArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_oracle(s: &str) -> Result<OracleKind, OracleError> {
    s.parse()
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    let too_large = e.chain().any(|cause| {
        matches!(cause.downcast_ref(), Some(OracleError::TooLarge { .. }))
            || matches!(
                cause.downcast_ref(),
                Some(ApproxError::Oracle(OracleError::TooLarge { .. }))
            )
    });
    if too_large {
        3
    } else {
        2
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve(args) => solve(args),
        Command::Kernelize(args) => kernelize_cmd(args),
        Command::Gen(args) => gen(args),
        Command::Verify(args) => verify(args),
        Command::Bench(args) => bench::run(args),
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn load_input(args: &InputArgs) -> Result<Loaded> {
    load(&args.input, args.format, args.weight_scale)
}

fn solve_graph(graph: &WeightedGraph, kind: OracleKind, args: &OracleArgs) -> Result<ApproxResult> {
    let oracle = args.build(kind)?;
    Ok(approx_vc(graph, oracle.as_ref(), args.eps_for(kind))?)
}

fn solve(args: SolveArgs) -> Result<ExitCode> {
    let loaded = load_input(&args.input)?;
    let res = solve_graph(&loaded.graph, args.oracle, &args.oracle_args)?;
    log::info!(
        "kernel {} of {} vertices, cover weight {}, LP bound {}",
        res.kernel_stats.half.size,
        loaded.graph.num_vertices(),
        res.cover_weight(),
        res.lp_lower_bound
    );
    emit(args.output.as_deref(), &write_result(&res))?;
    Ok(ExitCode::SUCCESS)
}

fn kernelize_cmd(args: KernelizeArgs) -> Result<ExitCode> {
    let loaded = load_input(&args.input)?;
    let kernel = kernelize(&loaded.graph)?;
    let part = |name: &str, s: &ntcover::graph::VertexSet| {
        format!("c {name} size {} weight {}\n", s.len(), s.weight())
    };
    let mut text = String::new();
    text += &part("v0", &kernel.free);
    text += &part("vhalf", &kernel.half);
    text += &part("v1", &kernel.forced);
    text += &format!("c lp_bound {}\n", kernel.solution.objective());
    if !kernel.back_map.is_empty() {
        let ids: Vec<String> = kernel
            .back_map
            .iter()
            .map(|v| (v + 1).to_string())
            .collect();
        text += &format!("c map {}\n", ids.join(" "));
    }
    match &loaded.shapes {
        Some((shapes, shape_map)) => {
            text += &serialize_shapes(&restrict_shapes(shapes, &kernel.half, shape_map)?)
        }
        None => text += &serialize_graph(&kernel.graph),
    }
    eprintln!(
        "V0 {} (weight {}), Vhalf {} (weight {}), V1 {} (weight {})",
        kernel.free.len(),
        kernel.free.weight(),
        kernel.half.len(),
        kernel.half.weight(),
        kernel.forced.len(),
        kernel.forced.weight()
    );
    emit(args.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn gen(args: GenArgs) -> Result<ExitCode> {
    let text = match args.kind {
        GenKind::Gnp => {
            if !(0.0..=1.0).contains(&args.p) {
                bail!("--p must lie in [0, 1], got {}", args.p);
            }
            if args.max_weight == 0 {
                bail!("--max-weight must be positive");
            }
            let total = (args.n as u128) * u128::from(args.max_weight);
            if total > u128::from(MAX_TOTAL_WEIGHT) {
                bail!("n * max-weight exceeds {MAX_TOTAL_WEIGHT}");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            serialize_graph(&WeightedGraph::random_gnp(
                args.n,
                args.p,
                args.max_weight,
                &mut rng,
            ))
        }
        GenKind::Disks | GenKind::Rects => {
            let kind = match args.kind {
                GenKind::Disks => ShapeKind::Disks,
                _ => ShapeKind::Rects,
            };
            let set = generate_instance(&GenParams {
                kind,
                n: args.n,
                region: args.region,
                min_size: args.min_size,
                max_size: args.max_size,
                max_weight: args.max_weight,
                seed: args.seed,
            })?;
            serialize_shapes(&set)
        }
    };
    emit(args.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let loaded = load_input(&args.input)?;
    let text = fs::read_to_string(&args.result)
        .with_context(|| format!("reading {}", args.result.display()))?;
    let doc = parse_result(&text).with_context(|| format!("{}", args.result.display()))?;
    let claim = doc
        .to_claim()
        .with_context(|| format!("{}", args.result.display()))?;
    let report = verify_result(&loaded.graph, &claim, args.cap as usize);

    let mut out = String::new();
    let mut passed = report.passed();
    for check in &report.checks {
        let status = if check.passed { "ok  " } else { "FAIL" };
        out += &format!("{status} {}: {}\n", check.name, check.detail);
    }
    let expected = ratio_bound(claim.cover_weight, claim.lp_bound)
        .map(|r| format!("{}/{}", r.numer(), r.denom()));
    let ratio_ok = doc.ratio_bound == expected;
    passed &= ratio_ok;
    out += &format!(
        "{} ratio-bound: claimed {}, expected {}\n",
        if ratio_ok { "ok  " } else { "FAIL" },
        doc.ratio_bound.as_deref().unwrap_or("none"),
        expected.as_deref().unwrap_or("none")
    );
    if let (Some(opt), Some(ratio)) = (report.optimum, report.exact_ratio) {
        out += &format!(
            "optimum {opt}, exact ratio {}/{} ({:.4})\n",
            ratio.numer(),
            ratio.denom(),
            *ratio.numer() as f64 / *ratio.denom() as f64
        );
    } else if let Some(opt) = report.optimum {
        out += &format!("optimum {opt}\n");
    }
    emit(None, &out)?;
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
