//! One-step fully-discrete solver for scalar conservation laws.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Location, Result};
use crate::grid::{Boundary, LineLayout};
use crate::reconstruction::{kernel, Kernel, MAX_R, MAX_WINDOW};
use crate::scheme::{step_plan, Counters, Scheme, SchemeConfig};
use crate::stencil::{Family, Layout};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum ScalarFlux {
    /// `f = c u`
    Linear { speed: f64 },
    /// `f = u^2 / 2`
    Burgers,
}

impl ScalarFlux {
    #[inline(always)]
    pub fn f(&self, u: f64) -> f64 {
        match *self {
            ScalarFlux::Linear { speed } => speed * u,
            ScalarFlux::Burgers => 0.5 * u * u,
        }
    }

    #[inline(always)]
    pub fn f_u(&self, u: f64) -> f64 {
        match *self {
            ScalarFlux::Linear { speed } => speed,
            ScalarFlux::Burgers => u,
        }
    }
}

/// `f(u) ~ a u - f_star` near an interface.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearizedFlux {
    pub a: f64,
    pub f_star: f64,
}

/// Whether the interface is treated as a shock (Roe linearisation).
#[inline(always)]
pub fn is_shock(u_l: f64, u_r: f64, flux: ScalarFlux, tau: f64, h: f64) -> bool {
    flux.f_u(u_l) * tau / h > flux.f_u(u_r) * tau / h
}

/// Roe speed with a guard against a vanishing jump.
#[inline]
pub fn roe_speed(u_l: f64, u_r: f64, flux: ScalarFlux) -> f64 {
    let du = u_r - u_l;
    if du.abs() < 1e-14 * 1f64.max(u_l.abs()).max(u_r.abs()) {
        flux.f_u(0.5 * (u_l + u_r))
    } else {
        (flux.f(u_r) - flux.f(u_l)) / du
    }
}

/// Entropy-condition linearisation: Roe speed across shocks, otherwise the
/// exact linearisation at `u_star`.
pub fn linearize_flux_scalar(u_l: f64, u_r: f64, u_star: f64, flux: ScalarFlux, tau: f64, h: f64) -> LinearizedFlux {
    if is_shock(u_l, u_r, flux, tau, h) {
        let a = roe_speed(u_l, u_r, flux);
        LinearizedFlux { a, f_star: a * 0.5 * (u_l + u_r) - 0.5 * (flux.f(u_l) + flux.f(u_r)) }
    } else {
        let a = flux.f_u(u_star);
        LinearizedFlux { a, f_star: a * u_star - flux.f(u_star) }
    }
}

/// Upwind windows around one interface, gathered lazily.
pub(crate) struct FaceWindows<'a> {
    kern: &'a Kernel,
    left: &'a [f64],
    right: [f64; MAX_WINDOW],
    beta_left: Option<[f64; MAX_R]>,
    beta_right: Option<[f64; MAX_R]>,
}

impl<'a> FaceWindows<'a> {
    #[inline(always)]
    pub(crate) fn new(kern: &'a Kernel, buf: &'a [f64], cl: usize, cr: usize) -> Self {
        let h = kern.r() - 1;
        let left = &buf[cl - h..=cl + h];
        let mut right = [0.0; MAX_WINDOW];
        for (m, v) in right.iter_mut().take(2 * h + 1).enumerate() {
            *v = buf[cr + h - m];
        }
        Self { kern, left, right, beta_left: None, beta_right: None }
    }

    /// Reconstruction with signed `nu`; `a = 0` takes the left-biased window.
    /// Returns the value and whether the cutoff / split were active.
    #[inline(always)]
    pub(crate) fn eval(&mut self, family: Family, nu: f64) -> (f64, bool, bool) {
        let k = self.kern;
        let n = 2 * k.r() - 1;
        let (w, beta): (&[f64], [f64; MAX_R]) = if nu >= 0.0 {
            let b = *self.beta_left.get_or_insert_with(|| k.smoothness(self.left));
            (self.left, b)
        } else {
            let w = &self.right[..n];
            let b = *self.beta_right.get_or_insert_with(|| k.smoothness(w));
            (&self.right[..n], b)
        };
        let x = nu.abs();
        let gamma = k.linear_weights(family, x);
        let clamped = family == Family::FootValue && k.is_clamped(family, x);
        let split = gamma[..k.r()].iter().any(|&g| g < 0.0);
        (k.combine(family, x, w, &gamma, &beta), clamped, split)
    }
}

/// A scalar line with its boundary description.
#[derive(Clone, Debug)]
pub struct ScalarGrid {
    pub line: LineLayout,
    pub buf: Vec<f64>,
    pub x0: f64,
    pub h: f64,
    pub t: f64,
    pub left: Boundary,
    pub right: Boundary,
    pub steps: usize,
}

/// Four-point Gauss-Legendre cell average.
pub fn cell_average(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    const X: [f64; 4] =
        [-0.861_136_311_594_052_6, -0.339_981_043_584_856_3, 0.339_981_043_584_856_3, 0.861_136_311_594_052_6];
    const W: [f64; 4] =
        [0.347_854_845_137_453_9, 0.652_145_154_862_546_1, 0.652_145_154_862_546_1, 0.347_854_845_137_453_9];
    let (c, r) = (0.5 * (a + b), 0.5 * (b - a));
    0.5 * X.iter().zip(W).map(|(x, w)| w * f(c + r * x)).sum::<f64>()
}

impl ScalarGrid {
    /// Nodes initialised by four-point Gauss-Legendre cell averages, face
    /// values pointwise.
    pub fn new(
        layout: Layout,
        cfg: &SchemeConfig,
        n: usize,
        x0: f64,
        x1: f64,
        bc: Boundary,
        u0: &dyn Fn(f64) -> f64,
    ) -> Self {
        Self::from_averages(layout, cfg, n, x0, x1, bc, &|a, b| cell_average(u0, a, b), u0)
    }

    /// Nodes initialised by a caller-supplied cell average, faces by `point`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_averages(
        layout: Layout,
        cfg: &SchemeConfig,
        n: usize,
        x0: f64,
        x1: f64,
        bc: Boundary,
        average: &dyn Fn(f64, f64) -> f64,
        point: &dyn Fn(f64) -> f64,
    ) -> Self {
        let periodic = bc == Boundary::Periodic;
        let line = LineLayout::new(layout, cfg.order, n, periodic);
        let h = (x1 - x0) / n as f64;
        let mut buf = vec![0.0; line.len()];
        for i in 0..n {
            buf[line.node(i)] = average(x0 + i as f64 * h, x0 + (i + 1) as f64 * h);
        }
        for e in 1..=n {
            if line.face_is_interior(e) {
                let slot = line.face_slot(e).expect("compact layout");
                buf[slot] = point(x0 + e as f64 * h);
            }
        }
        let mut g = Self { line, buf, x0, h, t: 0.0, left: bc, right: bc, steps: 0 };
        g.fill_ghosts();
        g
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.line.n).map(|i| self.buf[self.line.node(i)]).collect()
    }

    pub fn node_centres(&self) -> Vec<f64> {
        (0..self.line.n).map(|i| self.x0 + (i as f64 + 0.5) * self.h).collect()
    }

    /// Sum of the node values times the spacing.
    pub fn total(&self) -> f64 {
        self.nodes().iter().sum::<f64>() * self.h
    }

    pub fn fill_ghosts(&mut self) {
        self.line.fill_ghosts(&mut self.buf, self.left, self.right, None, None, |v| v, |v| v);
    }

    /// Largest stable step for the given CFL number.
    pub fn compute_dt(&self, flux: ScalarFlux, cfl: f64) -> Result<f64> {
        let g = self.line.ghost;
        let mut smax: f64 = 0.0;
        for (q, &u) in self.buf[g..g + self.line.interior()].iter().enumerate() {
            if !u.is_finite() {
                return Err(Error::NonFinite { at: Location { step: self.steps, i: q, ..Default::default() } });
            }
            smax = smax.max(flux.f_u(u).abs());
        }
        Ok(if smax > 0.0 { cfl * self.h / smax } else { cfl * self.h })
    }
}

/// Flux and new face value at interface `e` of a fully-discrete line.
#[inline(always)]
pub(crate) fn interface_flux(
    kern: &Kernel,
    line: &LineLayout,
    buf: &[f64],
    e: usize,
    flux: ScalarFlux,
    tau: f64,
    h: f64,
    cfg: &SchemeConfig,
    counters: &mut Counters,
) -> std::result::Result<(f64, f64), f64> {
    let (cl, cr) = line.face_centres(e);
    let (ul, ur) = (buf[cl], buf[cr]);
    let mut win = FaceWindows::new(kern, buf, cl, cr);
    let lam = tau / h;
    let check = |nu: f64| if nu.abs() > 1.0 + 1e-12 { Err(nu) } else { Ok(()) };
    let mut clamped = false;
    let mut split = false;
    let mut foot_at = |win: &mut FaceWindows, a: f64| -> std::result::Result<f64, f64> {
        check(a * lam)?;
        let (v, c, s) = win.eval(Family::FootValue, a * lam);
        clamped |= c;
        split |= s;
        Ok(v)
    };
    counters.interfaces += 1;
    let (lin, foot) = if is_shock(ul, ur, flux, tau, h) {
        counters.shock_branch += 1;
        let lin = linearize_flux_scalar(ul, ur, 0.5 * (ul + ur), flux, tau, h);
        (lin, foot_at(&mut win, lin.a)?)
    } else {
        counters.high_order_branch += 1;
        let avg = 0.5 * (ul + ur);
        if cfg.baseline_flux {
            let a = flux.f_u(avg);
            (LinearizedFlux { a, f_star: a * avg - flux.f(avg) }, foot_at(&mut win, a)?)
        } else {
            let mut foot = foot_at(&mut win, flux.f_u(avg))?;
            for _ in 0..cfg.iterations {
                foot = foot_at(&mut win, flux.f_u(foot))?;
            }
            let a = flux.f_u(foot);
            (LinearizedFlux { a, f_star: a * foot - flux.f(foot) }, foot)
        }
    };
    counters.clamped += clamped as u64;
    counters.split += split as u64;
    let nu = lin.a * lam;
    check(nu)?;
    let ubar = win.eval(Family::IntervalAverage, nu).0;
    Ok((lin.a * ubar - lin.f_star, foot))
}

/// Advance a fully-discrete scalar line by one step of size `tau`.
pub fn step_scalar(
    grid: &mut ScalarGrid,
    tau: f64,
    cfg: &SchemeConfig,
    flux: ScalarFlux,
    counters: &mut Counters,
) -> Result<()> {
    let kern = kernel(grid.line.layout, cfg.order);
    let line = grid.line;
    let n = line.n;
    let mut fluxes = vec![0.0; n + 1];
    let mut feet = vec![0.0; n + 1];
    for e in 0..=n {
        let (f, u) = interface_flux(kern, &line, &grid.buf, e, flux, tau, grid.h, cfg, counters)
            .map_err(|nu| Error::Cfl { nu: nu.abs(), at: Location { step: grid.steps, i: e, ..Default::default() } })?;
        fluxes[e] = f;
        feet[e] = u;
    }
    let lam = tau / grid.h;
    for i in 0..n {
        grid.buf[line.node(i)] -= lam * (fluxes[i + 1] - fluxes[i]);
    }
    for e in 1..=n {
        if line.face_is_interior(e) {
            grid.buf[line.face_slot(e).expect("compact layout")] = feet[e];
        }
    }
    grid.t += tau;
    grid.steps += 1;
    grid.fill_ghosts();
    Ok(())
}

/// Advance to `t_end` with the largest uniform step allowed by the CFL number
/// at each step; the final step lands exactly on `t_end`.
pub fn run_scalar(grid: &mut ScalarGrid, flux: ScalarFlux, cfg: &SchemeConfig, t_end: f64) -> Result<Counters> {
    cfg.validate()?;
    let mut counters = Counters::default();
    loop {
        let (n, tau) = step_plan(t_end - grid.t, grid.compute_dt(flux, cfg.cfl)?);
        if n == 0 {
            break;
        }
        match cfg.scheme {
            Scheme::WenoRk3 => crate::baselines::rk3_step_scalar(grid, tau, cfg, flux)?,
            _ => step_scalar(grid, tau, cfg, flux, &mut counters)?,
        }
    }
    grid.t = t_end;
    Ok(counters)
}
