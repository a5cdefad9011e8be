//! Reference solutions: exact translation, characteristics, exact Riemann
//! and cached fine-grid runs.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::euler::solver::{run_euler, EulerGrid};
use crate::euler::{exact_riemann, GAMMA};
use crate::scalar::{cell_average, ScalarFlux};
use crate::scheme::{Scheme, SchemeConfig};
use crate::stencil::Order;

use super::cases::{CaseSpec, Problem, ReferenceKind};

/// Sub-cells per cell for averages of smooth but strongly varying data.
const SUB_CELLS: usize = 8;

/// Default node count of fine-grid references.
pub const FINE_GRID_NODES: usize = 10_000;

/// Average of `f` over `[a, b]`, split at every point of `cuts` inside the
/// interval and into `SUB_CELLS` pieces.
pub fn piecewise_average(f: &dyn Fn(f64) -> f64, a: f64, b: f64, cuts: &[f64]) -> f64 {
    let mut pts: Vec<f64> = vec![a];
    pts.extend(cuts.iter().copied().filter(|&c| c > a && c < b));
    pts.push(b);
    pts.sort_by(f64::total_cmp);
    let mut acc = 0.0;
    for w in pts.windows(2) {
        let d = (w[1] - w[0]) / SUB_CELLS as f64;
        for s in 0..SUB_CELLS {
            let lo = w[0] + s as f64 * d;
            acc += d * cell_average(f, lo, lo + d);
        }
    }
    acc / (b - a)
}

/// Breakpoints of a periodic profile translated by `shift`, covering `[a, b]`.
fn periodic_cuts(breaks: &[f64], shift: f64, x0: f64, period: f64, a: f64, b: f64) -> Vec<f64> {
    let mut out = Vec::new();
    for &p in breaks.iter().chain(std::iter::once(&x0)) {
        let base = p + shift;
        let k0 = ((a - base) / period).floor() as i64 - 1;
        let k1 = ((b - base) / period).ceil() as i64 + 1;
        for k in k0..=k1 {
            out.push(base + k as f64 * period);
        }
    }
    out
}

fn wrap(x: f64, x0: f64, period: f64) -> f64 {
    x0 + (x - x0).rem_euclid(period)
}

/// Initial cell averages of a scalar case on `n` cells, breakpoint aware.
pub fn scalar_initial_averages(case: &CaseSpec, n: usize) -> Result<Vec<f64>> {
    scalar_reference_at(case, n, 0.0)
}

/// Cell averages of the exact scalar solution at time `t`.
pub fn scalar_reference_at(case: &CaseSpec, n: usize, t: f64) -> Result<Vec<f64>> {
    let Problem::Scalar { flux, u0, breaks } = case.problem else {
        return Err(Error::Config(format!("case `{}` is not scalar", case.name)));
    };
    let (x0, period) = (case.domain.x0, case.length());
    let h = period / n as f64;
    let cells = (0..n).map(|i| (x0 + i as f64 * h, x0 + (i + 1) as f64 * h));
    match flux {
        ScalarFlux::Linear { speed } => {
            let shift = (speed * t).rem_euclid(period);
            let f = move |x: f64| u0(wrap(x - shift, x0, period));
            Ok(cells
                .map(|(a, b)| piecewise_average(&f, a, b, &periodic_cuts(breaks, shift, x0, period, a, b)))
                .collect())
        }
        ScalarFlux::Burgers => {
            if t > 0.0 && !breaks.is_empty() {
                return Err(Error::Config("characteristic reference needs smooth data".into()));
            }
            let f = move |x: f64| burgers_characteristic(u0, x, t, x0, period);
            Ok(cells.map(|(a, b)| piecewise_average(&f, a, b, &[])).collect())
        }
    }
}

/// Value at `(x, t)` of the smooth Burgers solution `u = u0(x - u t)`, by
/// Newton iteration on the foot `xi + u0(xi) t = x`.
pub fn burgers_characteristic(u0: fn(f64) -> f64, x: f64, t: f64, x0: f64, period: f64) -> f64 {
    let u = |xi: f64| u0(wrap(xi, x0, period));
    if t == 0.0 {
        return u(x);
    }
    let du = |xi: f64| {
        let d = 1e-6;
        (u(xi + d) - u(xi - d)) / (2.0 * d)
    };
    let mut xi = x - u(x) * t;
    for _ in 0..100 {
        let g = xi + u(xi) * t - x;
        let step = g / (1.0 + du(xi) * t);
        xi -= step;
        if step.abs() < 1e-13 {
            break;
        }
    }
    u(xi)
}

/// Reference density cell averages of a 1D Euler case at its end time on `n`
/// cells, or `None` when the case has no reference.
pub fn euler_reference(case: &CaseSpec, n: usize, t: f64, fine: &FineGridOptions) -> Result<Option<Vec<f64>>> {
    let Problem::Euler1D { riemann, .. } = case.problem else {
        return Err(Error::Config(format!("case `{}` is not a 1D Euler case", case.name)));
    };
    let (x0, len) = (case.domain.x0, case.length());
    let h = len / n as f64;
    match case.reference {
        ReferenceKind::ExactRiemann => {
            let (l, r, xd) = riemann.ok_or_else(|| Error::Config("missing Riemann data".into()))?;
            let sol = exact_riemann(l, r, GAMMA)?;
            Ok(Some((0..n).map(|i| sol.cell_average(x0 + i as f64 * h, x0 + (i + 1) as f64 * h, t, xd)[0]).collect()))
        }
        ReferenceKind::FineGrid => {
            let (xs, rho) = fine_grid_density(case, t, fine)?;
            Ok(Some(restrict(&xs, &rho, x0, len, n)))
        }
        _ => Ok(None),
    }
}

/// Where and how fine-grid references are computed.
#[derive(Clone, Debug)]
pub struct FineGridOptions {
    pub nodes: usize,
    pub cache_dir: PathBuf,
}

impl Default for FineGridOptions {
    fn default() -> Self {
        Self { nodes: FINE_GRID_NODES, cache_dir: std::env::temp_dir().join("cfweno-reference") }
    }
}

fn cache_path(dir: &Path, case: &CaseSpec, nodes: usize, t: f64) -> PathBuf {
    dir.join(format!("{}_n{}_t{}.csv", case.name, nodes, t))
}

/// Node centres and density of a WENO5-JS + RK3 run on the fine grid, read
/// from the cache or computed and cached.
pub fn fine_grid_density(case: &CaseSpec, t: f64, opts: &FineGridOptions) -> Result<(Vec<f64>, Vec<f64>)> {
    let path = cache_path(&opts.cache_dir, case, opts.nodes, t);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Some(parsed) = parse_two_columns(&text) {
            if parsed.0.len() == opts.nodes {
                return Ok(parsed);
            }
        }
    }
    let Problem::Euler1D { init, .. } = case.problem else {
        return Err(Error::Config(format!("case `{}` is not a 1D Euler case", case.name)));
    };
    let cfg = SchemeConfig::new(Scheme::WenoRk3, Order::Fifth);
    let mut g = EulerGrid::new(
        cfg.scheme.layout(),
        &cfg,
        opts.nodes,
        case.domain.x0,
        case.domain.x1,
        case.bc.left,
        case.bc.right,
        &init,
    );
    run_euler(&mut g, &cfg, t)?;
    let xs = g.node_centres();
    let rho: Vec<f64> = g.nodes().iter().map(|c| c[0]).collect();
    fs::create_dir_all(&opts.cache_dir)?;
    let mut out = String::from("x,rho\n");
    for (x, r) in xs.iter().zip(&rho) {
        out.push_str(&format!("{x:e},{r:e}\n"));
    }
    fs::write(&path, out)?;
    Ok((xs, rho))
}

fn parse_two_columns(text: &str) -> Option<(Vec<f64>, Vec<f64>)> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for line in text.lines().skip(1) {
        let (a, b) = line.split_once(',')?;
        xs.push(a.trim().parse().ok()?);
        ys.push(b.trim().parse().ok()?);
    }
    Some((xs, ys))
}

/// Average fine uniform cells (centres `xs`) onto `n` coarse cells of the
/// same interval, weighting by overlap.
pub fn restrict(xs: &[f64], values: &[f64], x0: f64, len: f64, n: usize) -> Vec<f64> {
    let m = xs.len();
    let hf = len / m as f64;
    let hc = len / n as f64;
    let mut out = vec![0.0; n];
    for (k, &v) in values.iter().enumerate() {
        let (a, b) = (xs[k] - 0.5 * hf - x0, xs[k] + 0.5 * hf - x0);
        let i0 = ((a / hc).floor().max(0.0) as usize).min(n - 1);
        let i1 = (((b / hc).ceil() as usize).max(1) - 1).min(n - 1);
        for (i, o) in out.iter_mut().enumerate().take(i1 + 1).skip(i0) {
            let lo = a.max(i as f64 * hc);
            let hi = b.min((i + 1) as f64 * hc);
            if hi > lo {
                *o += v * (hi - lo);
            }
        }
    }
    out.iter().map(|s| s / hc).collect()
}
