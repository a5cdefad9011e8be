//! Benchmark harness: run configuration, case execution, error reporting,
//! convergence ladders, timing and output writers.

pub mod cases;
pub mod metrics;
pub mod reference;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::solver::{run_euler, EulerGrid};
use crate::euler::Primitive;
use crate::multidim::{run_2d, FineGrid2D};
use crate::scalar::{run_scalar, ScalarGrid};
use crate::scheme::{Counters, Scheme, SchemeConfig, SweepOrder};
use crate::stencil::{Layout, Order};

pub use cases::{case, cases, CaseSpec, Problem, ReferenceKind};
pub use metrics::{convergence_order, error_coefficient, error_norms, predicted_speed, Norms, SpeedPrediction};
pub use reference::FineGridOptions;

/// Everything needed to run one case; every field has a `key=value` form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub case: String,
    pub scheme: Scheme,
    pub order: Order,
    /// Node counts; `None` uses the case default.
    pub grid: Option<(usize, usize)>,
    /// `None` uses the scheme default.
    pub cfl: Option<f64>,
    /// `None` uses the case end time.
    pub tend: Option<f64>,
    pub iterations: usize,
    pub baseline_flux: bool,
    pub sweep_order: SweepOrder,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
    pub reference_grid: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            case: "sod".into(),
            scheme: Scheme::Cfweno,
            order: Order::Fifth,
            grid: None,
            cfl: None,
            tend: None,
            iterations: 0,
            baseline_flux: false,
            sweep_order: SweepOrder::XY,
            out: None,
            threads: None,
            reference_grid: reference::FINE_GRID_NODES,
            cache_dir: None,
        }
    }
}

/// `"200"` or `"200x100"`.
pub fn parse_grid(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Config(format!("invalid grid `{s}`"));
    let num = |t: &str| t.trim().parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(bad);
    match s.split_once(['x', 'X']) {
        Some((a, b)) => Ok((num(a)?, num(b)?)),
        None => Ok((num(s)?, 1)),
    }
}

pub fn parse_order(s: &str) -> Result<Order> {
    s.trim()
        .parse::<usize>()
        .ok()
        .and_then(Order::from_design_order)
        .ok_or_else(|| Error::Config(format!("order must be 3, 5 or 7, got `{s}`")))
}

fn parse_bool(s: &str) -> Result<bool> {
    match s.trim().to_ascii_lowercase().as_str() {
        "1" | "true" | "yes" | "on" => Ok(true),
        "0" | "false" | "no" | "off" => Ok(false),
        _ => Err(Error::Config(format!("invalid boolean `{s}`"))),
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Config(format!("invalid value `{s}` for `{key}`")))
}

/// Lines of `key = value`; `#` starts a comment.
pub fn parse_key_values(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) =
            line.split_once('=').ok_or_else(|| Error::Config(format!("line {}: expected key=value", n + 1)))?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

impl RunConfig {
    /// Set one field from its `key=value` form. Keys accept `-` or `_`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "case" => self.case = value.trim().to_string(),
            "scheme" => self.scheme = value.parse()?,
            "order" => self.order = parse_order(value)?,
            "grid" => self.grid = Some(parse_grid(value)?),
            "cfl" => self.cfl = Some(parse_num(key, value)?),
            "tend" | "t-end" => self.tend = Some(parse_num(key, value)?),
            "iterations" => self.iterations = parse_num(key, value)?,
            "baseline-flux" => self.baseline_flux = parse_bool(value)?,
            "sweep-order" => self.sweep_order = value.parse()?,
            "out" => self.out = Some(PathBuf::from(value.trim())),
            "threads" => self.threads = Some(parse_num(key, value)?),
            "reference-grid" => self.reference_grid = parse_num(key, value)?,
            "cache-dir" => self.cache_dir = Some(PathBuf::from(value.trim())),
            other => return Err(Error::Config(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Apply the pairs of a `key=value` document in order.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (k, v) in parse_key_values(text)? {
            self.set(&k, &v)?;
        }
        Ok(())
    }

    pub fn scheme_config(&self) -> SchemeConfig {
        let mut c = SchemeConfig::new(self.scheme, self.order)
            .with_iterations(self.iterations)
            .with_baseline_flux(self.baseline_flux);
        if let Some(cfl) = self.cfl {
            c = c.with_cfl(cfl);
        }
        c.sweep = self.sweep_order;
        c
    }

    pub fn case_spec(&self) -> Result<&'static CaseSpec> {
        case(&self.case)
    }

    /// Node counts used for the run.
    pub fn nodes(&self) -> Result<(usize, usize)> {
        let spec = self.case_spec()?;
        let (nx, ny) = self.grid.unwrap_or_else(|| spec.default_nodes(self.scheme.layout()));
        if nx < 2 * self.order.r() || (spec.dimension() == 2 && ny < 2 * self.order.r()) {
            return Err(Error::Config(format!("grid {nx}x{ny} too small for order {}", self.order)));
        }
        Ok((nx, ny))
    }

    pub fn validate(&self) -> Result<()> {
        self.case_spec()?;
        self.scheme_config().validate()?;
        self.nodes()?;
        if self.threads == Some(0) {
            return Err(Error::Config("threads must be positive".into()));
        }
        if self.tend.is_some_and(|t| !(t >= 0.0 && t.is_finite())) {
            return Err(Error::Config("tend must be a non-negative number".into()));
        }
        Ok(())
    }

    fn fine_grid(&self) -> FineGridOptions {
        let mut o = FineGridOptions { nodes: self.reference_grid, ..Default::default() };
        if let Some(d) = &self.cache_dir {
            o.cache_dir = d.clone();
        }
        o
    }
}

/// Summary of one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub case: String,
    pub scheme: Scheme,
    pub order: usize,
    /// Node counts per direction.
    pub grid: (usize, usize),
    /// Stored points per direction (nodes plus face points for the compact layout).
    pub lattice: (usize, usize),
    pub cfl: f64,
    pub t_end: f64,
    pub steps: usize,
    /// Solver time only, excluding setup, reference and output.
    pub wall_seconds: f64,
    /// Errors of the node values (density for the Euler equations).
    pub errors: Option<Norms>,
    pub counters: Counters,
}

/// Final solution of a run.
#[derive(Clone, Debug)]
pub enum Solution {
    Line { x: Vec<f64>, columns: Vec<(&'static str, Vec<f64>)>, reference: Option<Vec<f64>> },
    Lattice(Box<FineGrid2D>),
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: RunReport,
    pub solution: Solution,
}

/// Execute a case.
pub fn run_case(cfg: &RunConfig) -> Result<RunOutcome> {
    cfg.validate()?;
    let spec = cfg.case_spec()?;
    let sc = cfg.scheme_config();
    let (nx, ny) = cfg.nodes()?;
    let t_end = cfg.tend.unwrap_or(spec.t_end);
    let layout = cfg.scheme.layout();
    let d = &spec.domain;
    let lattice_len = |n: usize, periodic: bool| match layout {
        Layout::Compact if periodic => 2 * n,
        Layout::Compact => 2 * n - 1,
        Layout::NodeOnly => n,
    };
    let report = |steps, wall_seconds, errors, counters| RunReport {
        case: spec.name.to_string(),
        scheme: cfg.scheme,
        order: cfg.order.design_order(),
        grid: (nx, if spec.dimension() == 1 { 1 } else { ny }),
        lattice: (
            lattice_len(nx, spec.is_periodic_x()),
            if spec.dimension() == 1 { 1 } else { lattice_len(ny, spec.is_periodic_y()) },
        ),
        cfl: sc.cfl,
        t_end,
        steps,
        wall_seconds,
        errors,
        counters,
    };
    match spec.problem {
        Problem::Scalar { flux, u0, .. } => {
            let avg = reference::scalar_initial_averages(spec, nx)?;
            let h = spec.length() / nx as f64;
            let lookup = |a: f64, _b: f64| avg[(((a - d.x0) / h).round() as usize).min(nx - 1)];
            let mut g = ScalarGrid::from_averages(layout, &sc, nx, d.x0, d.x1, spec.bc.left, &lookup, &u0);
            let clock = Instant::now();
            let counters = run_scalar(&mut g, flux, &sc, t_end)?;
            let wall = clock.elapsed().as_secs_f64();
            let u = g.nodes();
            let reference = match spec.reference {
                ReferenceKind::Translation | ReferenceKind::Characteristics => {
                    Some(reference::scalar_reference_at(spec, nx, t_end)?)
                }
                _ => None,
            };
            let errors = reference.as_ref().map(|r| error_norms(&u, r, h)).transpose()?;
            Ok(RunOutcome {
                report: report(g.steps, wall, errors, counters),
                solution: Solution::Line { x: g.node_centres(), columns: vec![("u", u)], reference },
            })
        }
        Problem::Euler1D { init, .. } => {
            let mut g = EulerGrid::new(layout, &sc, nx, d.x0, d.x1, spec.bc.left, spec.bc.right, &init);
            let clock = Instant::now();
            let counters = run_euler(&mut g, &sc, t_end)?;
            let wall = clock.elapsed().as_secs_f64();
            let prims = g.primitives();
            let rho: Vec<f64> = prims.iter().map(|p| p.rho).collect();
            let reference = reference::euler_reference(spec, nx, t_end, &cfg.fine_grid())?;
            let errors = reference.as_ref().map(|r| error_norms(&rho, r, g.h)).transpose()?;
            let columns = vec![
                ("rho", rho),
                ("u", prims.iter().map(|p| p.u).collect()),
                ("p", prims.iter().map(|p| p.p).collect()),
            ];
            Ok(RunOutcome {
                report: report(g.steps, wall, errors, counters),
                solution: Solution::Line { x: g.node_centres(), columns, reference },
            })
        }
        Problem::Euler2D { init } => {
            let mut g = FineGrid2D::new(layout, &sc, nx, ny, *d, spec.bc, &init);
            let clock = Instant::now();
            let counters = run_2d(&mut g, &sc, t_end)?;
            let wall = clock.elapsed().as_secs_f64();
            Ok(RunOutcome { report: report(g.steps, wall, None, counters), solution: Solution::Lattice(Box::new(g)) })
        }
    }
}

/// CSV with a header `x,<columns>[,reference]`, one row per node.
pub fn write_line_csv(
    path: &Path,
    x: &[f64],
    columns: &[(&'static str, Vec<f64>)],
    reference: Option<&[f64]>,
) -> Result<()> {
    let mut s = String::from("x");
    for (name, _) in columns {
        s.push(',');
        s.push_str(name);
    }
    if reference.is_some() {
        s.push_str(",reference");
    }
    s.push('\n');
    for (i, xi) in x.iter().enumerate() {
        let _ = write!(s, "{xi:.12e}");
        for (_, c) in columns {
            let _ = write!(s, ",{:.12e}", c[i]);
        }
        if let Some(r) = reference {
            let _ = write!(s, ",{:.12e}", r[i]);
        }
        s.push('\n');
    }
    fs::write(path, s)?;
    Ok(())
}

/// ASCII dump: header `nx ny x0 x1 y0 y1`, then row-major blocks of
/// density, x velocity, y velocity and pressure over every lattice point.
pub fn write_lattice_dump(path: &Path, g: &FineGrid2D) -> Result<()> {
    let (mx, my) = (g.mx(), g.my());
    let d = g.domain;
    let mut s = format!("{mx} {my} {} {} {} {}\n", d.x0, d.x1, d.y0, d.y1);
    let prims: Vec<Primitive> = g.data.iter().map(|c| Primitive::from_cons(c, g.gamma)).collect();
    let fields: [fn(&Primitive) -> f64; 4] = [|p| p.rho, |p| p.u, |p| p.v, |p| p.p];
    for f in fields {
        for j in 0..my {
            let row: Vec<String> = (0..mx).map(|i| format!("{:.10e}", f(&prims[j * mx + i]))).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
    }
    fs::write(path, s)?;
    Ok(())
}

/// Base name of a run's output files.
pub fn output_stem(r: &RunReport) -> String {
    format!("{}-{}{}-{}x{}", r.case, r.scheme, r.order, r.grid.0, r.grid.1)
}

/// Write the solution and the JSON report into `dir`; returns the paths.
pub fn write_outputs(outcome: &RunOutcome, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let stem = output_stem(&outcome.report);
    let data = match &outcome.solution {
        Solution::Line { x, columns, reference } => {
            let p = dir.join(format!("{stem}.csv"));
            write_line_csv(&p, x, columns, reference.as_deref())?;
            p
        }
        Solution::Lattice(g) => {
            let p = dir.join(format!("{stem}.dat"));
            write_lattice_dump(&p, g)?;
            p
        }
    };
    let rep = dir.join(format!("{stem}.json"));
    fs::write(&rep, serde_json::to_string_pretty(&outcome.report)?)?;
    Ok(vec![data, rep])
}

/// One rung of a convergence ladder.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub h: f64,
    pub errors: Norms,
    /// Orders relative to the previous rung.
    pub order_l1: Option<f64>,
    pub order_l2: Option<f64>,
    pub order_linf: Option<f64>,
    pub wall_seconds: f64,
}

/// Grids `n0 * 2^k` for `k < levels`.
pub fn ladder(n0: usize, levels: usize) -> Vec<usize> {
    (0..levels).map(|k| n0 << k).collect()
}

/// Run a 1D case with a reference on every grid (concurrently) and report
/// errors and observed orders.
pub fn convergence(cfg: &RunConfig, grids: &[usize]) -> Result<Vec<ConvergenceRow>> {
    let spec = cfg.case_spec()?;
    if spec.dimension() != 1 || spec.reference == ReferenceKind::None {
        return Err(Error::Config(format!("case `{}` has no reference for a convergence study", spec.name)));
    }
    let reports: Vec<RunReport> = grids
        .par_iter()
        .map(|&n| {
            let mut c = cfg.clone();
            c.grid = Some((n, 1));
            run_case(&c).map(|o| o.report)
        })
        .collect::<Result<_>>()?;
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(reports.len());
    for r in &reports {
        let errors = r.errors.ok_or_else(|| Error::Config("run produced no errors".into()))?;
        let h = spec.length() / r.grid.0 as f64;
        let (o1, o2, oi) = match rows.last() {
            Some(p) => {
                let ord = |a: f64, b: f64| convergence_order(&[a, b], &[p.h, h])[0];
                (ord(p.errors.l1, errors.l1), ord(p.errors.l2, errors.l2), ord(p.errors.linf, errors.linf))
            }
            None => (None, None, None),
        };
        rows.push(ConvergenceRow {
            n: r.grid.0,
            h,
            errors,
            order_l1: o1,
            order_l2: o2,
            order_linf: oi,
            wall_seconds: r.wall_seconds,
        });
    }
    Ok(rows)
}

/// Timing of one scheme in a bench.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub scheme: Scheme,
    pub order: usize,
    pub grid: (usize, usize),
    pub steps: usize,
    /// Fastest of the repeats.
    pub wall_seconds: f64,
    pub predicted: SpeedPrediction,
}

/// Node counts giving `points` stored points per direction for a layout.
pub fn nodes_for_lattice(spec: &CaseSpec, layout: Layout, points: (usize, usize)) -> (usize, usize) {
    if layout == Layout::NodeOnly {
        return points;
    }
    let half = |m: usize, periodic: bool| if periodic { m / 2 } else { m.div_ceil(2) };
    let ny = if spec.dimension() == 1 { points.1 } else { half(points.1, spec.is_periodic_y()) };
    (half(points.0, spec.is_periodic_x()), ny)
}

/// Time each scheme at its default CFL number on the same case,
/// sequentially. In 1D `grid` (or the
/// case default) is the node count for every scheme; in 2D it is the number
/// of stored lattice points per direction, matched across schemes.
pub fn bench(cfg: &RunConfig, schemes: &[Scheme], repeats: usize) -> Result<Vec<BenchRow>> {
    let spec = cfg.case_spec()?;
    let mut rows = Vec::new();
    for &scheme in schemes {
        let mut c = cfg.clone();
        c.scheme = scheme;
        c.cfl = None;
        if spec.dimension() == 2 {
            let points = cfg.grid.unwrap_or(spec.resolution);
            c.grid = Some(nodes_for_lattice(spec, scheme.layout(), points));
        }
        let mut best = f64::INFINITY;
        let mut last = None;
        for _ in 0..repeats.max(1) {
            let o = run_case(&c)?;
            best = best.min(o.report.wall_seconds);
            last = Some(o.report);
        }
        let r = last.expect("at least one repeat");
        rows.push(BenchRow {
            scheme,
            order: r.order,
            grid: r.grid,
            steps: r.steps,
            wall_seconds: best,
            predicted: predicted_speed(scheme, cfg.order, spec.dimension() as u32),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_values_and_flags() {
        let mut c = RunConfig::default();
        c.apply_text("# comment\ncase = square-wave\nscheme=FWENO\norder = 7\ngrid=100\ncfl=1 # exact shift\nsweep_order=alternate\n")
            .unwrap();
        assert_eq!(c.case, "square-wave");
        assert_eq!(c.scheme, Scheme::Fweno);
        assert_eq!(c.order, Order::Seventh);
        assert_eq!(c.grid, Some((100, 1)));
        assert_eq!(c.cfl, Some(1.0));
        assert_eq!(c.sweep_order, SweepOrder::Alternate);
        assert!(c.set("bogus", "1").is_err());
        assert!(c.set("order", "4").is_err());
        assert_eq!(parse_grid("280x120").unwrap(), (280, 120));
        assert!(parse_grid("0").is_err());
        assert!(parse_key_values("novalue").is_err());
    }

    #[test]
    fn square_wave_at_unit_cfl_is_exact() {
        let mut c = RunConfig { case: "square-wave".into(), cfl: Some(1.0), ..Default::default() };
        for scheme in [Scheme::Cfweno, Scheme::Fweno] {
            c.scheme = scheme;
            let r = run_case(&c).unwrap().report;
            assert!(r.errors.unwrap().linf <= 1e-12, "{scheme}: {:?}", r.errors);
            assert_eq!(r.steps, 1000);
        }
    }

    #[test]
    fn sod_report_and_outputs() {
        let c = RunConfig { case: "sod".into(), grid: Some((100, 1)), ..Default::default() };
        let o = run_case(&c).unwrap();
        let e = o.report.errors.unwrap();
        assert!(e.l1 > 0.0 && e.l1 < 1e-2);
        assert_eq!(o.report.counters.options.iter().sum::<u64>(), o.report.counters.interfaces);
        let dir = std::env::temp_dir().join(format!("cfweno-harness-{}", std::process::id()));
        let files = write_outputs(&o, &dir).unwrap();
        let csv = fs::read_to_string(&files[0]).unwrap();
        assert_eq!(csv.lines().count(), 101);
        assert!(csv.starts_with("x,rho,u,p,reference"));
        let back: RunReport = serde_json::from_str(&fs::read_to_string(&files[1]).unwrap()).unwrap();
        assert_eq!(back, o.report);
        fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn unknown_case_is_a_config_error() {
        let c = RunConfig { case: "nope".into(), ..Default::default() };
        let e = run_case(&c).unwrap_err();
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn lattice_dump_layout() {
        let c = RunConfig { case: "riemann2d-3".into(), grid: Some((12, 10)), tend: Some(0.02), ..Default::default() };
        let o = run_case(&c).unwrap();
        assert_eq!(o.report.lattice, (23, 19));
        let Solution::Lattice(g) = &o.solution else { panic!() };
        let p = std::env::temp_dir().join(format!("cfweno-dump-{}.dat", std::process::id()));
        write_lattice_dump(&p, g).unwrap();
        let text = fs::read_to_string(&p).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "23 19 0 1 0 1");
        assert_eq!(lines.count(), 4 * 19);
        fs::remove_file(p).unwrap();
    }

    #[test]
    fn convergence_ladder_on_linear_sine() {
        let c = RunConfig { case: "linear-sine".into(), cfl: Some(0.5), ..Default::default() };
        let rows = convergence(&c, &ladder(20, 3)).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows[0].order_l2.is_none());
        assert!(rows[2].order_l2.unwrap() > 4.0);
    }
}
