//! Semi-discrete reference scheme: WENO-JS reconstruction, Roe flux with an
//! entropy fix, and three-stage TVD Runge-Kutta time stepping.

use crate::error::{Error, Location, Result};
use crate::euler::solver::check_state;
use crate::euler::{flux as euler_flux, reflect, wall_state, EigenSystem, EulerGrid};
use crate::grid::LineLayout;
use crate::reconstruction::{kernel, Kernel, MAX_WINDOW};
use crate::scalar::{ScalarFlux, ScalarGrid};
use crate::scheme::SchemeConfig;
use crate::stencil::{Family, Layout, Order};

/// Left and right interface values at `x_{i+1/2}` from the `2r` nodes
/// `u_{i-r+1} .. u_{i+r}`.
pub fn weno_js_reconstruct(order: Order, nodes: &[f64]) -> (f64, f64) {
    let k = kernel(Layout::NodeOnly, order);
    let n = k.window_len();
    assert_eq!(nodes.len(), n + 1, "WENO-JS needs 2r nodes");
    let mut right = [0.0; MAX_WINDOW];
    for (m, v) in right.iter_mut().take(n).enumerate() {
        *v = nodes[n - m];
    }
    (weno_js_left(k, &nodes[..n]), weno_js_left(k, &right[..n]))
}

/// Upwind WENO-JS value at the downstream edge of the window centre.
#[inline(always)]
pub fn weno_js_left(kern: &Kernel, window: &[f64]) -> f64 {
    kern.reconstruct(Family::FootValue, 0.0, window)
}

/// Harten-Hyman entropy fix of a wave speed given the one-sided speeds.
#[inline(always)]
pub fn harten_hyman(a: f64, a_l: f64, a_r: f64, delta_floor: f64) -> f64 {
    let delta = delta_floor.max(a - a_l).max(a_r - a).max(0.0);
    if a.abs() < delta {
        (a * a + delta * delta) / (2.0 * delta)
    } else {
        a.abs()
    }
}

/// Scalar Roe flux with the Harten-Hyman fix.
#[inline]
pub fn roe_flux_scalar(u_l: f64, u_r: f64, flux: ScalarFlux) -> f64 {
    let a = crate::scalar::roe_speed(u_l, u_r, flux);
    let abs_a = harten_hyman(a, flux.f_u(u_l), flux.f_u(u_r), 0.0);
    0.5 * (flux.f(u_l) + flux.f(u_r)) - 0.5 * abs_a * (u_r - u_l)
}

/// Roe-averaged eigen-system.
pub fn roe_eigen<const D: usize>(ul: &[f64; D], ur: &[f64; D], gamma: f64) -> Result<EigenSystem<D>> {
    use crate::euler::{enthalpy, velocity};
    let (sl, sr) = (ul[0].sqrt(), ur[0].sqrt());
    let w = 1.0 / (sl + sr);
    let u = (sl * velocity(ul) + sr * velocity(ur)) * w;
    let v = if D == 4 { (sl * ul[2] / ul[0] + sr * ur[2] / ur[0]) * w } else { 0.0 };
    let h = (sl * enthalpy(ul, gamma) + sr * enthalpy(ur, gamma)) * w;
    EigenSystem::at(u, v, h, gamma)
}

/// Euler Roe flux; the acoustic fields get the Harten-Hyman fix with a floor
/// of a tenth of the Roe sound speed.
pub fn roe_flux_euler<const D: usize>(ul: &[f64; D], ur: &[f64; D], eig: &EigenSystem<D>, gamma: f64) -> [f64; D] {
    let (fl, fr) = (euler_flux(ul, gamma), euler_flux(ur, gamma));
    let cs = |s: &[f64; D]| (gamma * crate::euler::pressure(s, gamma) / s[0]).sqrt();
    let (cl, cr) = (cs(ul), cs(ur));
    let (vl, vr) = (ul[1] / ul[0], ur[1] / ur[0]);
    let mut w = [0.0; D];
    for k in 0..D {
        let mut du = [0.0; D];
        for i in 0..D {
            du[i] = ur[i] - ul[i];
        }
        let l = eig.lambda[k];
        let a = if k == 0 {
            harten_hyman(l, vl - cl, vr - cr, 0.1 * eig.c)
        } else if k == D - 1 {
            harten_hyman(l, vl + cl, vr + cr, 0.1 * eig.c)
        } else {
            l.abs()
        };
        w[k] = a * eig.project(k, &du);
    }
    let d = eig.compose(&w);
    std::array::from_fn(|i| 0.5 * (fl[i] + fr[i]) - 0.5 * d[i])
}

/// Vector space operations needed by the Runge-Kutta driver.
pub trait Lin: Copy {
    const ZERO: Self;
    /// `self + a * x`
    fn axpy(self, a: f64, x: Self) -> Self;
}

impl Lin for f64 {
    const ZERO: Self = 0.0;
    #[inline(always)]
    fn axpy(self, a: f64, x: Self) -> Self {
        self + a * x
    }
}

impl<const D: usize> Lin for [f64; D] {
    const ZERO: Self = [0.0; D];
    #[inline(always)]
    fn axpy(self, a: f64, x: Self) -> Self {
        std::array::from_fn(|i| self[i] + a * x[i])
    }
}

/// One three-stage TVD Runge-Kutta step.
///
/// `op(buf, l)` may overwrite ghost entries of `buf` and must write the
/// semi-discrete right-hand side of every interior entry into `l` (ghost
/// entries of `l` are ignored as long as they stay zero).
pub fn tvd_rk3<T: Lin>(u: &mut [T], tau: f64, mut op: impl FnMut(&mut [T], &mut [T]) -> Result<()>) -> Result<()> {
    let n = u.len();
    let mut l1 = vec![T::ZERO; n];
    let mut l2 = vec![T::ZERO; n];
    let mut l3 = vec![T::ZERO; n];
    op(u, &mut l1)?;
    let mut stage: Vec<T> = u.iter().zip(&l1).map(|(&a, &b)| a.axpy(tau, b)).collect();
    op(&mut stage, &mut l2)?;
    for i in 0..n {
        stage[i] = u[i].axpy(0.25 * tau, l1[i]).axpy(0.25 * tau, l2[i]);
    }
    op(&mut stage, &mut l3)?;
    for i in 0..n {
        u[i] = u[i].axpy(tau / 6.0, l1[i]).axpy(tau / 6.0, l2[i]).axpy(4.0 * tau / 6.0, l3[i]);
    }
    Ok(())
}

/// Scalar WENO-JS + Roe right-hand side on a node-only line.
pub fn scalar_operator(kern: &Kernel, line: &LineLayout, buf: &[f64], h: f64, flux: ScalarFlux, l: &mut [f64]) {
    let r = kern.r();
    let n = kern.window_len();
    let mut prev = 0.0;
    for e in 0..=line.n {
        let (cl, cr) = line.face_centres(e);
        let um = weno_js_left(kern, &buf[cl + 1 - r..cl + r]);
        let mut right = [0.0; MAX_WINDOW];
        for (m, v) in right.iter_mut().take(n).enumerate() {
            *v = buf[cr + r - 1 - m];
        }
        let up = weno_js_left(kern, &right[..n]);
        let f = roe_flux_scalar(um, up, flux);
        if e > 0 {
            l[line.node(e - 1)] = -(f - prev) / h;
        }
        prev = f;
    }
}

/// Advance a node-only scalar line by one WENO-JS + RK3 step.
pub fn rk3_step_scalar(grid: &mut ScalarGrid, tau: f64, cfg: &SchemeConfig, flux: ScalarFlux) -> Result<()> {
    if grid.line.layout != Layout::NodeOnly {
        return Err(Error::Config("the Runge-Kutta baseline runs on node-only lines".into()));
    }
    let kern = kernel(Layout::NodeOnly, cfg.order);
    let line = grid.line;
    let (left, right, h) = (grid.left, grid.right, grid.h);
    let mut buf = std::mem::take(&mut grid.buf);
    tvd_rk3(&mut buf, tau, |u, l| {
        line.fill_ghosts(u, left, right, None, None, |v| v, |v| v);
        scalar_operator(kern, &line, u, h, flux, l);
        Ok(())
    })?;
    grid.buf = buf;
    grid.t += tau;
    grid.steps += 1;
    grid.fill_ghosts();
    Ok(())
}

/// Characteristic-wise WENO-JS interface states; falls back to the node
/// values when a reconstructed state is inadmissible.
#[inline]
pub fn characteristic_states<const D: usize>(
    kern: &Kernel,
    buf: &[[f64; D]],
    cl: usize,
    cr: usize,
    eig: &EigenSystem<D>,
    gamma: f64,
) -> ([f64; D], [f64; D]) {
    let r = kern.r();
    let n = kern.window_len();
    let lo = cl + 1 - r;
    let mut wm = [0.0; D];
    let mut wp = [0.0; D];
    for k in 0..D {
        let mut proj = [0.0; MAX_WINDOW + 1];
        for (q, s) in buf[lo..=cr + r - 1].iter().enumerate() {
            proj[q] = eig.project(k, s);
        }
        wm[k] = weno_js_left(kern, &proj[..n]);
        let mut right = [0.0; MAX_WINDOW];
        for (m, v) in right.iter_mut().take(n).enumerate() {
            *v = proj[n - m];
        }
        wp[k] = weno_js_left(kern, &right[..n]);
    }
    let (um, up) = (eig.compose(&wm), eig.compose(&wp));
    if crate::euler::is_admissible(&um, gamma) && crate::euler::is_admissible(&up, gamma) {
        (um, up)
    } else {
        (buf[cl], buf[cr])
    }
}

/// Euler WENO-JS + Roe right-hand side on a node-only line.
pub fn euler_operator<const D: usize>(
    kern: &Kernel,
    line: &LineLayout,
    buf: &[[f64; D]],
    h: f64,
    gamma: f64,
    l: &mut [[f64; D]],
) -> std::result::Result<(), usize> {
    let mut prev = [0.0; D];
    for e in 0..=line.n {
        let (cl, cr) = line.face_centres(e);
        let eig = roe_eigen(&buf[cl], &buf[cr], gamma).map_err(|_| e)?;
        let (um, up) = characteristic_states(kern, buf, cl, cr, &eig, gamma);
        let eig2 = roe_eigen(&um, &up, gamma).map_err(|_| e)?;
        let f = roe_flux_euler(&um, &up, &eig2, gamma);
        if e > 0 {
            let q = line.node(e - 1);
            for c in 0..D {
                l[q][c] = -(f[c] - prev[c]) / h;
            }
        }
        prev = f;
    }
    Ok(())
}

/// Advance a node-only Euler line by one WENO-JS + RK3 step.
pub fn rk3_step_euler(grid: &mut EulerGrid, tau: f64, cfg: &SchemeConfig) -> Result<()> {
    if grid.line.layout != Layout::NodeOnly {
        return Err(Error::Config("the Runge-Kutta baseline runs on node-only lines".into()));
    }
    let kern = kernel(Layout::NodeOnly, cfg.order);
    let line = grid.line;
    let (left, right, h, gamma, steps) = (grid.left, grid.right, grid.h, grid.gamma, grid.steps);
    let (ls, rs) = (grid.left_state, grid.right_state);
    let mut buf = std::mem::take(&mut grid.buf);
    let res = tvd_rk3(&mut buf, tau, |u, l| {
        line.fill_ghosts(u, left, right, ls, rs, reflect, wall_state);
        for i in 0..line.n {
            check_state(&u[line.node(i)], gamma, i).map_err(|f| f.into_error(steps, None, None))?;
        }
        euler_operator(kern, &line, u, h, gamma, l)
            .map_err(|i| Error::NonFinite { at: Location { step: steps, i, ..Default::default() } })
    });
    grid.buf = buf;
    res?;
    for i in 0..line.n {
        check_state(&grid.buf[line.node(i)], gamma, i).map_err(|f| f.into_error(steps, None, None))?;
    }
    grid.t += tau;
    grid.steps += 1;
    grid.fill_ghosts();
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{Primitive, GAMMA};

    #[test]
    fn weno_js_reproduces_quadratics() {
        // every sub-stencil is exact, whatever the nonlinear weights
        let f = |x: f64| 3.0 * x * x - 2.0 * x + 0.5;
        let avg = |i: f64| {
            let (a, b) = (i - 1.0, i);
            (b.powi(3) - a.powi(3)) - (b * b - a * a) + 0.5
        };
        // nodes i = -2 ..= 3; the face sits at x = 0
        let nodes: Vec<f64> = (-2..=3).map(|i| avg(i as f64)).collect();
        let (um, up) = weno_js_reconstruct(Order::Fifth, &nodes);
        assert!((um - f(0.0)).abs() < 1e-12 && (up - f(0.0)).abs() < 1e-12, "{um} {up}");
    }

    #[test]
    fn roe_flux_is_consistent_and_upwind() {
        let f = ScalarFlux::Burgers;
        assert!((roe_flux_scalar(0.7, 0.7, f) - 0.245).abs() < 1e-15);
        assert_eq!(roe_flux_scalar(2.0, 1.0, f), 2.0);
        // transonic rarefaction gets a non-zero dissipation
        assert!(roe_flux_scalar(-1.0, 1.0, f) < 0.5);
        let s: [f64; 3] = Primitive::new(1.0, 0.3, 1.0).to_cons(GAMMA);
        let e = roe_eigen(&s, &s, GAMMA).unwrap();
        let r = roe_flux_euler(&s, &s, &e, GAMMA);
        let ex = euler_flux(&s, GAMMA);
        assert!((0..3).all(|i| (r[i] - ex[i]).abs() < 1e-14));
    }

    #[test]
    fn rk3_integrates_a_quadratic_exactly() {
        // u' = t-independent linear decay: third-order accurate exponential
        let mut u = vec![1.0f64];
        tvd_rk3(&mut u, 0.1, |x, l| {
            l[0] = -x[0];
            Ok(())
        })
        .unwrap();
        let exact = 1.0 - 0.1 + 0.005 - 0.1f64.powi(3) / 6.0;
        assert!((u[0] - exact).abs() < 1e-15);
    }
}
