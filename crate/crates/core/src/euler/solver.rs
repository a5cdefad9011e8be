//! Fully-discrete characteristic-wise solver for the Euler equations.
//!
//! Each interface is linearised about the baseline eigen-system; the window
//! around it is projected onto the characteristic fields, the foot of every
//! field is traced with its wave speed, and the composed foot state drives the
//! per-wave selection between the baseline and the high-order linearisation.

use super::eigen::{average_state, eigenvalues, EigenSystem};
use super::selection::{linearize_fields, select_option, SelectionOption};
use super::{guess_middle_pressure, is_admissible, max_speed, pressure, reflect, wall_state, Primitive};
use crate::error::{Error, Location, Result};
use crate::grid::{Boundary, LineLayout};
use crate::reconstruction::{kernel, Kernel, MAX_WINDOW};
use crate::scalar::FaceWindows;
use crate::scheme::{step_plan, Counters, Scheme, SchemeConfig};
use crate::stencil::{Family, Layout};

/// Longest union of the two upwind windows of one interface.
const UNION: usize = MAX_WINDOW + 2;

/// Failure inside a line update, located by line index.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum LineFailure {
    Cfl { nu: f64, face: usize },
    Positivity { rho: f64, p: f64, node: usize },
    NonFinite { node: usize },
}

impl LineFailure {
    pub(crate) fn into_error(self, step: usize, j: Option<usize>, direction: Option<char>) -> Error {
        let at = |i| Location { step, i, j, direction };
        match self {
            LineFailure::Cfl { nu, face } => Error::Cfl { nu: nu.abs(), at: at(face) },
            LineFailure::Positivity { rho, p, node } => Error::Positivity { rho, p, at: at(node) },
            LineFailure::NonFinite { node } => Error::NonFinite { at: at(node) },
        }
    }
}

/// Per-line scratch reused across lines and steps.
#[derive(Clone, Debug, Default)]
pub(crate) struct LineScratch<const D: usize> {
    fluxes: Vec<[f64; D]>,
    feet: Vec<[f64; D]>,
}

#[inline(always)]
fn cfl_ok(nu: f64) -> bool {
    nu.abs() <= 1.0 + 1e-12
}

/// Numerical flux and new face state at interface `e`.
#[inline]
#[allow(clippy::too_many_arguments)]
pub(crate) fn euler_interface_flux<const D: usize>(
    kern: &Kernel,
    line: &LineLayout,
    buf: &[[f64; D]],
    e: usize,
    lam: f64,
    gamma: f64,
    cfg: &SchemeConfig,
    counters: &mut Counters,
) -> std::result::Result<([f64; D], [f64; D]), LineFailure> {
    let (cl, cr) = line.face_centres(e);
    let (ul, ur) = (&buf[cl], &buf[cr]);
    let eig: EigenSystem<D> = match average_state(ul, ur, gamma) {
        Ok(e) => e,
        Err(_) => return Err(LineFailure::NonFinite { node: e }),
    };
    let h = kern.r() - 1;
    let lo = cl - h;
    let len = cr + h + 1 - lo;
    let mut proj = [[0.0; UNION]; D];
    for (q, state) in buf[lo..lo + len].iter().enumerate() {
        for k in 0..D {
            proj[k][q] = eig.project(k, state);
        }
    }
    let mut wins: [FaceWindows; D] = std::array::from_fn(|k| FaceWindows::new(kern, &proj[k][..len], h, h + cr - cl));
    let mut clamped = false;
    let mut split = false;
    let mut trace = |wins: &mut [FaceWindows; D], speeds: &[f64; D]| -> std::result::Result<[f64; D], LineFailure> {
        let mut w = [0.0; D];
        for k in 0..D {
            let nu = speeds[k] * lam;
            if !cfl_ok(nu) {
                return Err(LineFailure::Cfl { nu, face: e });
            }
            let (v, c, s) = wins[k].eval(Family::FootValue, nu);
            clamped |= c;
            split |= s;
            w[k] = v;
        }
        Ok(w)
    };

    counters.interfaces += 1;
    let option = select_option(pressure(ul, gamma), pressure(ur, gamma), || {
        guess_middle_pressure(&Primitive::from_cons(ul, gamma), &Primitive::from_cons(ur, gamma), gamma)
    });
    counters.options[option.index()] += 1;
    let waves = option.high_order_waves();
    let high: [bool; D] = std::array::from_fn(|k| waves[super::selection::wave_of_field(k, D)]);

    let mut foot = eig.compose(&trace(&mut wins, &eig.lambda)?);
    let mut effective = if cfg.baseline_flux { SelectionOption::StrongJump } else { option };
    if effective != SelectionOption::StrongJump && high.iter().any(|&b| b) {
        for _ in 0..cfg.iterations {
            if !is_admissible(&foot, gamma) {
                break;
            }
            let c = (gamma * pressure(&foot, gamma) / foot[0]).sqrt();
            let ls: [f64; D] = eigenvalues(foot[1] / foot[0], c);
            let mut speeds = eig.lambda;
            for k in 0..D {
                if high[k] {
                    speeds[k] = ls[k];
                }
            }
            foot = eig.compose(&trace(&mut wins, &speeds)?);
        }
    }
    if !is_admissible(&foot, gamma) {
        counters.fallback += 1;
        effective = SelectionOption::StrongJump;
        for i in 0..D {
            foot[i] = 0.5 * (ul[i] + ur[i]);
        }
    }
    counters.clamped += clamped as u64;
    counters.split += split as u64;

    let lin = linearize_fields(ul, ur, &foot, &eig, gamma, effective);
    let mut comb = [0.0; D];
    for k in 0..D {
        let nu = lin.lambda[k] * lam;
        if !cfl_ok(nu) {
            return Err(LineFailure::Cfl { nu, face: e });
        }
        let ubar = wins[k].eval(Family::IntervalAverage, nu).0;
        comb[k] = lin.lambda[k] * ubar - lin.phi[k];
    }
    Ok((eig.compose(&comb), foot))
}

/// Advance the interior of one line (ghosts already filled) by `lam = tau / h`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn euler_line_step<const D: usize>(
    kern: &Kernel,
    line: &LineLayout,
    buf: &mut [[f64; D]],
    scratch: &mut LineScratch<D>,
    lam: f64,
    gamma: f64,
    cfg: &SchemeConfig,
    counters: &mut Counters,
) -> std::result::Result<(), LineFailure> {
    let n = line.n;
    scratch.fluxes.resize(n + 1, [0.0; D]);
    scratch.feet.resize(n + 1, [0.0; D]);
    for e in 0..=n {
        let (f, u) = euler_interface_flux(kern, line, buf, e, lam, gamma, cfg, counters)?;
        scratch.fluxes[e] = f;
        scratch.feet[e] = u;
    }
    for i in 0..n {
        let q = line.node(i);
        let (fl, fr) = (&scratch.fluxes[i], &scratch.fluxes[i + 1]);
        for c in 0..D {
            buf[q][c] -= lam * (fr[c] - fl[c]);
        }
        check_state(&buf[q], gamma, i)?;
    }
    for e in 1..=n {
        if line.face_is_interior(e) {
            let q = line.face_slot(e).expect("compact layout");
            buf[q] = scratch.feet[e];
            check_state(&buf[q], gamma, e)?;
        }
    }
    Ok(())
}

#[inline(always)]
pub(crate) fn check_state<const D: usize>(
    s: &[f64; D],
    gamma: f64,
    node: usize,
) -> std::result::Result<(), LineFailure> {
    if !s.iter().all(|v| v.is_finite()) {
        return Err(LineFailure::NonFinite { node });
    }
    let p = pressure(s, gamma);
    if s[0] > 0.0 && p > 0.0 {
        Ok(())
    } else {
        Err(LineFailure::Positivity { rho: s[0], p, node })
    }
}

/// Conservative state as a function of position.
pub type StateFn<'a> = &'a dyn Fn(f64) -> Primitive;

/// A 1D Euler line with boundary description.
#[derive(Clone, Debug)]
pub struct EulerGrid {
    pub line: LineLayout,
    pub buf: Vec<[f64; 3]>,
    pub x0: f64,
    pub h: f64,
    pub t: f64,
    pub gamma: f64,
    pub left: Boundary,
    pub right: Boundary,
    pub left_state: Option<[f64; 3]>,
    pub right_state: Option<[f64; 3]>,
    pub steps: usize,
}

/// Cell average of the conservative state over `[a, b]`: composite four-point
/// Gauss-Legendre on eight sub-cells.
pub fn average_cons(f: StateFn, a: f64, b: f64, gamma: f64) -> [f64; 3] {
    const X: [f64; 4] =
        [-0.861_136_311_594_052_6, -0.339_981_043_584_856_3, 0.339_981_043_584_856_3, 0.861_136_311_594_052_6];
    const W: [f64; 4] =
        [0.347_854_845_137_453_9, 0.652_145_154_862_546_1, 0.652_145_154_862_546_1, 0.347_854_845_137_453_9];
    const SUB: usize = 8;
    let d = (b - a) / SUB as f64;
    let mut acc = [0.0; 3];
    for s in 0..SUB {
        let c = a + (s as f64 + 0.5) * d;
        for (x, w) in X.iter().zip(W) {
            let u: [f64; 3] = f(c + 0.5 * d * x).to_cons(gamma);
            for i in 0..3 {
                acc[i] += 0.5 * w * u[i] / SUB as f64;
            }
        }
    }
    acc
}

/// Point value at `x`, averaging the one-sided limits across a jump.
pub fn point_cons(f: StateFn, x: f64, h: f64, gamma: f64) -> [f64; 3] {
    let d = 1e-9 * h;
    let (a, b): ([f64; 3], [f64; 3]) = (f(x - d).to_cons(gamma), f(x + d).to_cons(gamma));
    std::array::from_fn(|i| 0.5 * (a[i] + b[i]))
}

impl EulerGrid {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        layout: Layout,
        cfg: &SchemeConfig,
        n: usize,
        x0: f64,
        x1: f64,
        left: Boundary,
        right: Boundary,
        init: StateFn,
    ) -> Self {
        let periodic = left == Boundary::Periodic || right == Boundary::Periodic;
        let line = LineLayout::new(layout, cfg.order, n, periodic);
        let h = (x1 - x0) / n as f64;
        let gamma = super::GAMMA;
        let mut buf = vec![[0.0; 3]; line.len()];
        for i in 0..n {
            buf[line.node(i)] = average_cons(init, x0 + i as f64 * h, x0 + (i + 1) as f64 * h, gamma);
        }
        for e in 1..=n {
            if line.face_is_interior(e) {
                buf[line.face_slot(e).expect("compact layout")] = point_cons(init, x0 + e as f64 * h, h, gamma);
            }
        }
        let left_state = (left == Boundary::Dirichlet).then(|| init(x0 - 0.5 * h).to_cons(gamma));
        let right_state = (right == Boundary::Dirichlet).then(|| init(x1 + 0.5 * h).to_cons(gamma));
        let mut g = Self { line, buf, x0, h, t: 0.0, gamma, left, right, left_state, right_state, steps: 0 };
        g.fill_ghosts();
        g
    }

    pub fn fill_ghosts(&mut self) {
        self.line.fill_ghosts(
            &mut self.buf,
            self.left,
            self.right,
            self.left_state,
            self.right_state,
            reflect,
            wall_state,
        );
    }

    pub fn nodes(&self) -> Vec<[f64; 3]> {
        (0..self.line.n).map(|i| self.buf[self.line.node(i)]).collect()
    }

    pub fn primitives(&self) -> Vec<Primitive> {
        self.nodes().iter().map(|c| Primitive::from_cons(c, self.gamma)).collect()
    }

    pub fn node_centres(&self) -> Vec<f64> {
        (0..self.line.n).map(|i| self.x0 + (i as f64 + 0.5) * self.h).collect()
    }

    /// Total of each conserved quantity over the nodes.
    pub fn totals(&self) -> [f64; 3] {
        let mut s = [0.0; 3];
        for c in self.nodes() {
            for i in 0..3 {
                s[i] += c[i] * self.h;
            }
        }
        s
    }

    /// Largest stable step over every stored point.
    pub fn compute_dt(&self, cfl: f64) -> Result<f64> {
        let g = self.line.ghost;
        let mut smax: f64 = 0.0;
        for (q, s) in self.buf[g..g + self.line.interior()].iter().enumerate() {
            check_state(s, self.gamma, q).map_err(|f| f.into_error(self.steps, None, None))?;
            smax = smax.max(max_speed(s, self.gamma));
        }
        Ok(cfl * self.h / smax)
    }
}

/// Advance a fully-discrete Euler line by one step of size `tau`.
pub fn step_euler(grid: &mut EulerGrid, tau: f64, cfg: &SchemeConfig, counters: &mut Counters) -> Result<()> {
    let kern = kernel(grid.line.layout, cfg.order);
    let line = grid.line;
    let mut scratch = LineScratch::default();
    euler_line_step(kern, &line, &mut grid.buf, &mut scratch, tau / grid.h, grid.gamma, cfg, counters)
        .map_err(|f| f.into_error(grid.steps, None, None))?;
    grid.t += tau;
    grid.steps += 1;
    grid.fill_ghosts();
    Ok(())
}

/// Advance to `t_end`; every step is as large as the CFL number allows and
/// the final one lands exactly on `t_end`.
pub fn run_euler(grid: &mut EulerGrid, cfg: &SchemeConfig, t_end: f64) -> Result<Counters> {
    cfg.validate()?;
    let mut counters = Counters::default();
    loop {
        let (n, tau) = step_plan(t_end - grid.t, grid.compute_dt(cfg.cfl)?);
        if n == 0 {
            break;
        }
        match cfg.scheme {
            Scheme::WenoRk3 => crate::baselines::rk3_step_euler(grid, tau, cfg)?,
            _ => step_euler(grid, tau, cfg, &mut counters)?,
        }
    }
    grid.t = t_end;
    Ok(counters)
}
