//! Command-line front end.
//!
//! Exit codes: 0 on success or a "yes" decision, 1 on a "no" decision, 2 on
//! any error. Vertex ids in printed sets are 0-based; DIMACS files are
//! 1-based.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use crate::dimacs::{parse_graph, serialize_graph};
use crate::error::{Error, Result};
use crate::exact::{has_domset_of_size, min_domset_bb, min_domset_enum, DecideStrategy};
use crate::graph::{gen_random_graph, GenParams, Graph, VertexSet};
use crate::greedy::{good_vertex_greedy, greedy_lnn, GoodVertexParams, ThresholdBase};
use crate::harness::{
    emit_csv, emit_summary, run_campaign, run_campaign_with_threads, summarize, ExperimentConfig,
};
use crate::hybrid::{
    approx_via_fpt, expected_qp_min_domset, fpt_via_approx, sparse_fpt_decide, ApproxViaFptParams,
    ApproximatorHandle, PluginFn, PluginFunctions, ScanMode,
};
use crate::partition::{partition_hunt, HuntParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "domset", version, about = "Dominating sets in random graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample G(n, p) and write it as DIMACS.
    Gen(GenArgs),
    /// Compute a dominating set.
    Solve(SolveArgs),
    /// Decide whether a dominating set of size at most k exists.
    Decide(DecideArgs),
    /// Run the partition-refinement certificate hunt.
    Hunt(HuntArgs),
    /// Approximate via repeated parameterized decisions.
    Approx(ApproxArgs),
    /// Run a seeded campaign from a JSON config.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Args)]
#[group(id = "density", required = true, multiple = false)]
pub struct Density {
    /// Edge probability.
    #[arg(long, group = "density")]
    pub p: Option<f64>,
    /// Sparse density p = 1/g(n).
    #[arg(long = "g-expr", group = "density")]
    pub g_expr: Option<PluginFn>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub density: Density,
    #[arg(long)]
    pub seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolveAlgo {
    Enum,
    Exact,
    Greedy,
    GoodGreedy,
    Hybrid,
    ApproxViaFpt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecideAlgo {
    Enum,
    Exact,
    FptViaApprox,
    Sparse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BaseArg {
    Residual,
    Original,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanArg {
    Linear,
    Binary,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub algo: SolveAlgo,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long = "C", default_value_t = 4.0)]
    pub c: f64,
    #[arg(long = "D", default_value_t = 2.0)]
    pub d: f64,
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    #[arg(long = "e-expr", default_value = "log2")]
    pub e_expr: PluginFn,
    #[arg(long = "threshold-base", value_enum, default_value = "residual")]
    pub threshold_base: BaseArg,
    #[arg(long, value_enum, default_value = "linear")]
    pub scan: ScanArg,
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    #[arg(long, value_enum)]
    pub algo: DecideAlgo,
    #[arg(long)]
    pub k: usize,
    #[arg(long, conflicts_with = "g_expr")]
    pub p: Option<f64>,
    #[arg(long = "w-expr", default_value = "loglog2")]
    pub w_expr: PluginFn,
    #[arg(long = "g-expr")]
    pub g_expr: Option<PluginFn>,
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct HuntArgs {
    #[arg(long)]
    pub p: f64,
    #[arg(long = "C", default_value_t = 4.0)]
    pub c: f64,
    #[arg(long)]
    pub rounds: Option<usize>,
    /// Per-round JSON lines.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct ApproxArgs {
    #[arg(long)]
    pub p: f64,
    #[arg(long = "D")]
    pub d: f64,
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    #[arg(long = "e-expr", default_value = "log2")]
    pub e_expr: PluginFn,
    #[arg(long, value_enum, default_value = "linear")]
    pub scan: ScanArg,
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the config's base seed.
    #[arg(long)]
    pub seed: u64,
    /// CSV path; defaults to the config's `output`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Summary JSON path; defaults to the CSV path with a `.json` extension.
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[arg(long)]
    pub threads: Option<usize>,
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read_file(path)?).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        },
        other => other,
    })
}

fn need_p(p: Option<f64>, algo: &str) -> Result<f64> {
    p.ok_or_else(|| Error::Param(format!("--p is required for {algo}")))
}

fn set_line(set: &VertexSet, method: &str) -> String {
    format!("size={} set={} method={method}", set.len(), set.to_csv())
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

fn gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let p = match (args.density.p, args.density.g_expr) {
        (Some(p), _) => p,
        (None, Some(g)) => 1.0 / g.eval(args.n) as f64,
        (None, None) => unreachable!("clap enforces the density group"),
    };
    let g = gen_random_graph(GenParams::new(args.n, p, args.seed))?;
    let text = serialize_graph(&g);
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes()).map_err(io_err)?,
    }
    Ok(EXIT_OK)
}

fn solve(args: &SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(&args.file)?;
    let line = match args.algo {
        SolveAlgo::Enum => {
            let o = min_domset_enum(&g);
            set_line(&o.witness, o.method.tag())
        }
        SolveAlgo::Exact => {
            let o = min_domset_bb(&g);
            set_line(&o.witness, o.method.tag())
        }
        SolveAlgo::Greedy => set_line(&greedy_lnn(&g), "greedy"),
        SolveAlgo::GoodGreedy => {
            let base = match args.threshold_base {
                BaseArg::Residual => ThresholdBase::Residual,
                BaseArg::Original => ThresholdBase::Original,
            };
            let params = GoodVertexParams::new(need_p(args.p, "good-greedy")?, args.epsilon, args.d).with_base(base);
            match good_vertex_greedy(&g, &params)? {
                Some(s) => set_line(&s, "good_vertex"),
                None => "absent method=good_vertex".to_string(),
            }
        }
        SolveAlgo::Hybrid => {
            let o = expected_qp_min_domset(&g, need_p(args.p, "hybrid")?, args.c)?;
            set_line(&o.witness, o.stage.tag())
        }
        SolveAlgo::ApproxViaFpt => {
            let params = ApproxViaFptParams {
                p: need_p(args.p, "approx-via-fpt")?,
                epsilon: args.epsilon,
                d: args.d,
                plugins: PluginFunctions {
                    e: args.e_expr,
                    ..PluginFunctions::default()
                },
                scan: scan_mode(args.scan),
            };
            let o = approx_via_fpt(&g, &params, |g, k| has_domset_of_size(g, k, DecideStrategy::BranchAndBound))?;
            set_line(&o.witness, o.step.tag())
        }
    };
    writeln!(out, "{line}").map_err(io_err)?;
    Ok(EXIT_OK)
}

fn scan_mode(s: ScanArg) -> ScanMode {
    match s {
        ScanArg::Linear => ScanMode::Linear,
        ScanArg::Binary => ScanMode::Binary,
    }
}

fn decide(args: &DecideArgs, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(&args.file)?;
    let (decision, step) = match args.algo {
        DecideAlgo::Enum => (has_domset_of_size(&g, args.k, DecideStrategy::BoundedSearch)?, "bounded_search"),
        DecideAlgo::Exact => (has_domset_of_size(&g, args.k, DecideStrategy::BranchAndBound)?, "branch_and_bound"),
        DecideAlgo::FptViaApprox => {
            let plugins = PluginFunctions {
                w: args.w_expr,
                ..PluginFunctions::default()
            };
            let o = fpt_via_approx(&g, need_p(args.p, "fpt-via-approx")?, args.k, &ApproximatorHandle::exact(), &plugins)?;
            (o.decision, o.step.tag())
        }
        DecideAlgo::Sparse => {
            let gfun = args
                .g_expr
                .ok_or_else(|| Error::Param("--g-expr is required for sparse".into()))?;
            let o = sparse_fpt_decide(&g, gfun, args.k)?;
            (o.decision, o.step.tag())
        }
    };
    if decision.yes {
        writeln!(out, "yes").map_err(io_err)?;
        if let Some(w) = &decision.witness {
            writeln!(out, "{}", set_line(w, step)).map_err(io_err)?;
        }
        Ok(EXIT_OK)
    } else {
        writeln!(out, "no").map_err(io_err)?;
        Ok(EXIT_NO)
    }
}

fn hunt(args: &HuntArgs, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(&args.file)?;
    let mut params = HuntParams::new(args.c, args.p);
    if let Some(r) = args.rounds {
        params = params.with_rounds(r);
    }
    let report = partition_hunt(&g, &params)?;
    if let Some(path) = &args.trace {
        write_file(path, &report.trace_jsonl())?;
    }
    let line = match &report.certificate {
        Some(cert) => format!("certificate {} rounds={}", set_line(cert, "partition"), report.rounds_completed),
        None => format!("no-stall rounds={}", report.rounds_completed),
    };
    writeln!(out, "{line}").map_err(io_err)?;
    Ok(EXIT_OK)
}

fn approx(args: &ApproxArgs, out: &mut dyn Write) -> Result<i32> {
    solve(
        &SolveArgs {
            algo: SolveAlgo::ApproxViaFpt,
            p: Some(args.p),
            c: 4.0,
            d: args.d,
            epsilon: args.epsilon,
            e_expr: args.e_expr,
            threshold_base: BaseArg::Residual,
            scan: args.scan,
            file: args.file.clone(),
        },
        out,
    )
}

fn experiment(args: &ExperimentArgs, out: &mut dyn Write) -> Result<i32> {
    let mut config = ExperimentConfig::from_json(&read_file(&args.config)?)?;
    config.base_seed = args.seed;
    let csv_path = args
        .out
        .clone()
        .or_else(|| config.output.clone())
        .ok_or_else(|| Error::Config("no output path: pass --out or set `output`".into()))?;
    let summary_path = args.summary.clone().unwrap_or_else(|| csv_path.with_extension("json"));
    let records = match args.threads {
        Some(t) => run_campaign_with_threads(&config, t)?,
        None => run_campaign(&config)?,
    };
    emit_csv(&records, &csv_path)?;
    emit_summary(&summarize(&config, &records), &summary_path)?;
    writeln!(
        out,
        "records={} csv={} summary={}",
        records.len(),
        csv_path.display(),
        summary_path.display()
    )
    .map_err(io_err)?;
    Ok(EXIT_OK)
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Gen(a) => gen(a, out),
        Command::Solve(a) => solve(a, out),
        Command::Decide(a) => decide(a, out),
        Command::Hunt(a) => hunt(a, out),
        Command::Approx(a) => approx(a, out),
        Command::Experiment(a) => experiment(a, out),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                if !rendered.contains("Usage:") {
                    let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                }
                EXIT_ERROR
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
