//! Compressible Euler equations for a gamma-law gas.
//!
//! Conservative states are `[f64; D]` arrays: `D = 3` is `(rho, rho u, E)`,
//! `D = 4` is `(rho, rho u_n, rho u_t, E)` with the normal direction first, as
//! seen by a directional sweep. All characteristic machinery is generic over
//! `D`; the tangential component is a passively advected shear wave.

pub mod eigen;
pub mod riemann;
pub mod selection;
pub mod solver;

pub use eigen::{average_state, EigenSystem};
pub use riemann::{exact_riemann, RiemannSolution};
pub use selection::{guess_middle_pressure, select_flux_linearization, SelectionOption, WaveLinearization};
pub use solver::{run_euler, step_euler, EulerGrid};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const GAMMA: f64 = 1.4;

/// Primitive gas state; `v` is the tangential velocity (zero in 1D).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Primitive {
    pub rho: f64,
    pub u: f64,
    pub v: f64,
    pub p: f64,
}

impl Primitive {
    pub const fn new(rho: f64, u: f64, p: f64) -> Self {
        Self { rho, u, v: 0.0, p }
    }

    pub const fn new2d(rho: f64, u: f64, v: f64, p: f64) -> Self {
        Self { rho, u, v, p }
    }

    pub fn is_admissible(&self) -> bool {
        self.rho > 0.0
            && self.p > 0.0
            && self.rho.is_finite()
            && self.p.is_finite()
            && self.u.is_finite()
            && self.v.is_finite()
    }

    pub fn sound_speed(&self, gamma: f64) -> f64 {
        (gamma * self.p / self.rho).sqrt()
    }

    pub fn to_cons<const D: usize>(&self, gamma: f64) -> [f64; D] {
        let mut c = [0.0; D];
        c[0] = self.rho;
        c[1] = self.rho * self.u;
        let mut ke = self.u * self.u;
        if D == 4 {
            c[2] = self.rho * self.v;
            ke += self.v * self.v;
        }
        c[D - 1] = self.p / (gamma - 1.0) + 0.5 * self.rho * ke;
        c
    }

    pub fn from_cons<const D: usize>(c: &[f64; D], gamma: f64) -> Self {
        let rho = c[0];
        let u = c[1] / rho;
        let v = if D == 4 { c[2] / rho } else { 0.0 };
        let p = (gamma - 1.0) * (c[D - 1] - 0.5 * rho * (u * u + v * v));
        Self { rho, u, v, p }
    }

    /// Swap normal and tangential velocities.
    pub fn transposed(&self) -> Self {
        Self { rho: self.rho, u: self.v, v: self.u, p: self.p }
    }
}

/// Conservative state helpers.
#[inline(always)]
pub fn pressure<const D: usize>(c: &[f64; D], gamma: f64) -> f64 {
    let rho = c[0];
    let mut m2 = c[1] * c[1];
    if D == 4 {
        m2 += c[2] * c[2];
    }
    (gamma - 1.0) * (c[D - 1] - 0.5 * m2 / rho)
}

#[inline(always)]
pub fn velocity<const D: usize>(c: &[f64; D]) -> f64 {
    c[1] / c[0]
}

#[inline(always)]
pub fn is_admissible<const D: usize>(c: &[f64; D], gamma: f64) -> bool {
    let p = pressure(c, gamma);
    c[0] > 0.0 && p > 0.0 && c.iter().all(|v| v.is_finite()) && p.is_finite()
}

/// Normal flux.
#[inline(always)]
pub fn flux<const D: usize>(c: &[f64; D], gamma: f64) -> [f64; D] {
    let rho = c[0];
    let u = c[1] / rho;
    let p = pressure(c, gamma);
    let mut f = [0.0; D];
    f[0] = c[1];
    f[1] = c[1] * u + p;
    if D == 4 {
        f[2] = c[2] * u;
    }
    f[D - 1] = u * (c[D - 1] + p);
    f
}

/// Largest characteristic speed `|u_n| + c`.
#[inline(always)]
pub fn max_speed<const D: usize>(c: &[f64; D], gamma: f64) -> f64 {
    let p = pressure(c, gamma);
    (c[1] / c[0]).abs() + (gamma * p / c[0]).sqrt()
}

/// Total enthalpy.
#[inline(always)]
pub fn enthalpy<const D: usize>(c: &[f64; D], gamma: f64) -> f64 {
    (c[D - 1] + pressure(c, gamma)) / c[0]
}

/// Mirror a state across a wall normal to the line.
#[inline(always)]
pub fn reflect<const D: usize>(mut c: [f64; D]) -> [f64; D] {
    c[1] = -c[1];
    c
}

/// Wall state: same density and pressure, zero normal velocity.
#[inline(always)]
pub fn wall_state<const D: usize>(mut c: [f64; D]) -> [f64; D] {
    c[D - 1] -= 0.5 * c[1] * c[1] / c[0];
    c[1] = 0.0;
    c
}

pub(crate) fn check_admissible(p: &Primitive, what: &str) -> Result<()> {
    if p.is_admissible() {
        Ok(())
    } else {
        Err(Error::Inadmissible(format!("{what}: {p:?}")))
    }
}
