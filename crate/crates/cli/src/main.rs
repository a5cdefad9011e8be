//! Command-line driver: single runs, convergence ladders, timing benches and
//! the coefficient derivation.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cfweno::derive::{derive_kernel, render_rust_tables, render_text};
use cfweno::harness::{self, RunConfig};
use cfweno::{Layout, Order, Scheme};

/// Environment variable overriding the worker thread count.
const THREADS_ENV: &str = "CFWENO_THREADS";

#[derive(Parser, Debug)]
#[command(name = "cfweno", version, about = "Compact fully-discrete WENO solvers and benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one case and print its report.
    Run(RunArgs),
    /// Error and observed order over a ladder of grids.
    Convergence(ConvergenceArgs),
    /// Time every scheme on one case and compare with the predicted speed.
    Bench(BenchArgs),
    /// Derive the stencil coefficients, linear weights and smoothness
    /// indicators in exact arithmetic.
    DeriveCoefficients(DeriveArgs),
}

/// Flags shared by every solver subcommand; each mirrors a config-file key.
#[derive(Args, Debug, Default)]
struct Common {
    /// Plain `key = value` file; command-line flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Case name, e.g. sod, linear-sine, riemann2d-3.
    #[arg(long)]
    case: Option<String>,
    /// cfweno, fweno or weno-rk3.
    #[arg(long)]
    scheme: Option<String>,
    /// 3, 5 or 7.
    #[arg(long)]
    order: Option<String>,
    /// Node count, `N` or `NxM`.
    #[arg(long)]
    grid: Option<String>,
    /// CFL number; defaults to the scheme's.
    #[arg(long)]
    cfl: Option<String>,
    /// End time; defaults to the case's.
    #[arg(long)]
    tend: Option<String>,
    /// Extra foot-value recomputations per interface.
    #[arg(long)]
    iterations: Option<String>,
    /// Linearise with the node average instead of the traced foot value.
    #[arg(long)]
    baseline_flux: bool,
    /// xy or alternate.
    #[arg(long)]
    sweep_order: Option<String>,
    /// Output directory.
    #[arg(long)]
    out: Option<String>,
    /// Worker threads for concurrent runs and sweeps.
    #[arg(long, env = THREADS_ENV)]
    threads: Option<String>,
    /// Node count of fine-grid references.
    #[arg(long)]
    reference_grid: Option<String>,
    /// Directory caching fine-grid references.
    #[arg(long)]
    cache_dir: Option<String>,
}

impl Common {
    fn resolve(&self) -> cfweno::Result<RunConfig> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &self.config {
            let text = fs::read_to_string(path)
                .map_err(|e| cfweno::Error::Config(format!("cannot read {}: {e}", path.display())))?;
            cfg.apply_text(&text)?;
        }
        let flags = [
            ("case", &self.case),
            ("scheme", &self.scheme),
            ("order", &self.order),
            ("grid", &self.grid),
            ("cfl", &self.cfl),
            ("tend", &self.tend),
            ("iterations", &self.iterations),
            ("sweep-order", &self.sweep_order),
            ("out", &self.out),
            ("threads", &self.threads),
            ("reference-grid", &self.reference_grid),
            ("cache-dir", &self.cache_dir),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                cfg.set(key, v)?;
            }
        }
        if self.baseline_flux {
            cfg.baseline_flux = true;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args, Debug)]
struct RunArgs {
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct ConvergenceArgs {
    #[command(flatten)]
    common: Common,
    /// Number of grids, each twice as fine as the previous; `--grid` is the coarsest.
    #[arg(long, default_value_t = 5)]
    levels: usize,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    common: Common,
    /// Runs per scheme; the fastest is reported.
    #[arg(long, default_value_t = 3)]
    repeats: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Rust,
}

#[derive(Args, Debug)]
struct DeriveArgs {
    /// Restrict to one order (3, 5 or 7).
    #[arg(long)]
    order: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Write to standard output; a closed pipe is not an error.
fn emit(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn init_threads(cfg: &RunConfig) -> Result<()> {
    if let Some(n) = cfg.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    }
    Ok(())
}

fn run(args: &RunArgs) -> Result<()> {
    let cfg = args.common.resolve()?;
    init_threads(&cfg)?;
    let outcome = harness::run_case(&cfg)?;
    if let Some(dir) = &cfg.out {
        for p in harness::write_outputs(&outcome, dir)? {
            eprintln!("wrote {}", p.display());
        }
    }
    emit(&(serde_json::to_string_pretty(&outcome.report)? + "\n"))?;
    Ok(())
}

fn fmt_order(o: Option<f64>) -> String {
    o.map_or_else(|| "-".into(), |v| format!("{v:.2}"))
}

fn convergence(args: &ConvergenceArgs) -> Result<()> {
    let mut cfg = args.common.resolve()?;
    init_threads(&cfg)?;
    let n0 = cfg.grid.map_or(20, |g| g.0);
    cfg.grid = None;
    let rows = harness::convergence(&cfg, &harness::ladder(n0, args.levels.max(1)))?;
    let mut t =
        format!("{:>6} {:>12} {:>6} {:>12} {:>6} {:>12} {:>6}\n", "N", "L1", "order", "L2", "order", "Linf", "order");
    for r in &rows {
        writeln!(
            t,
            "{:>6} {:>12.4e} {:>6} {:>12.4e} {:>6} {:>12.4e} {:>6}",
            r.n,
            r.errors.l1,
            fmt_order(r.order_l1),
            r.errors.l2,
            fmt_order(r.order_l2),
            r.errors.linf,
            fmt_order(r.order_linf)
        )?;
    }
    emit(&t)?;
    if let Some(dir) = &cfg.out {
        fs::create_dir_all(dir)?;
        let p = dir.join(format!("{}-{}{}-convergence.json", cfg.case, cfg.scheme, cfg.order.design_order()));
        fs::write(&p, serde_json::to_string_pretty(&rows)?)?;
        eprintln!("wrote {}", p.display());
    }
    Ok(())
}

fn bench(args: &BenchArgs) -> Result<()> {
    let cfg = args.common.resolve()?;
    init_threads(&cfg)?;
    let rows = harness::bench(&cfg, &Scheme::ALL, args.repeats)?;
    let base = rows[0].wall_seconds;
    let mut t = format!(
        "{:>9} {:>11} {:>7} {:>10} {:>10} {:>10} {:>10}\n",
        "scheme", "grid", "steps", "wall (s)", "vs first", "Q_e pred", "cost pred"
    );
    for r in &rows {
        writeln!(
            t,
            "{:>9} {:>11} {:>7} {:>10.4} {:>10.3} {:>10.2} {:>10.2}",
            r.scheme.name(),
            format!("{}x{}", r.grid.0, r.grid.1),
            r.steps,
            r.wall_seconds,
            r.wall_seconds / base,
            r.predicted.normalized,
            r.predicted.cost_multiplier
        )?;
    }
    emit(&t)?;
    if let Some(dir) = &cfg.out {
        fs::create_dir_all(dir)?;
        let p = dir.join(format!("{}-order{}-bench.json", cfg.case, cfg.order.design_order()));
        fs::write(&p, serde_json::to_string_pretty(&rows)?)?;
        eprintln!("wrote {}", p.display());
    }
    Ok(())
}

fn derive(args: &DeriveArgs) -> Result<()> {
    let orders = match &args.order {
        Some(o) => vec![harness::parse_order(o)?],
        None => Order::ALL.to_vec(),
    };
    let kernels: Vec<_> = [Layout::Compact, Layout::NodeOnly]
        .into_iter()
        .flat_map(|l| orders.iter().map(move |&o| derive_kernel(l, o)))
        .collect();
    let text = match args.format {
        Format::Text => render_text(&kernels),
        Format::Rust => render_rust_tables(&kernels),
    };
    match &args.out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => emit(&text)?,
    }
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    err.chain().find_map(|e| e.downcast_ref::<cfweno::Error>()).map_or(1, |e| e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Run(a) => run(a),
        Command::Convergence(a) => convergence(a),
        Command::Bench(a) => bench(a),
        Command::DeriveCoefficients(a) => derive(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
