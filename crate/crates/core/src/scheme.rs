//! Scheme selection and per-run diagnostics shared by every solver.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::stencil::{Layout, Order};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    /// Compact fully-discrete WENO: stores and reuses face point values.
    Cfweno,
    /// Fully-discrete WENO on node averages only.
    Fweno,
    /// Semi-discrete WENO-JS with a Roe flux and three-stage TVD Runge-Kutta.
    WenoRk3,
}

impl Scheme {
    pub const ALL: [Scheme; 3] = [Scheme::Cfweno, Scheme::Fweno, Scheme::WenoRk3];

    pub fn layout(self) -> Layout {
        match self {
            Scheme::Cfweno => Layout::Compact,
            Scheme::Fweno | Scheme::WenoRk3 => Layout::NodeOnly,
        }
    }

    pub fn default_cfl(self) -> f64 {
        match self {
            Scheme::Cfweno | Scheme::Fweno => 0.9,
            Scheme::WenoRk3 => 0.6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Cfweno => "cfweno",
            Scheme::Fweno => "fweno",
            Scheme::WenoRk3 => "weno-rk3",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "cfweno" => Ok(Scheme::Cfweno),
            "fweno" => Ok(Scheme::Fweno),
            "weno-rk3" | "wenork3" | "weno" | "weno+rk3" => Ok(Scheme::WenoRk3),
            other => Err(Error::Config(format!("unknown scheme `{other}`"))),
        }
    }
}

/// Order of the directional sweeps within a 2D step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepOrder {
    /// `T_x` then `T_y` every step.
    XY,
    /// Alternate `XY` and `YX` between steps.
    Alternate,
}

impl FromStr for SweepOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "xy" | "fixed" => Ok(SweepOrder::XY),
            "alternate" | "alt" => Ok(SweepOrder::Alternate),
            other => Err(Error::Config(format!("unknown sweep order `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchemeConfig {
    pub scheme: Scheme,
    pub order: Order,
    pub cfl: f64,
    /// Extra foot-value recomputations with the updated wave speed. Zero means
    /// the foot value is traced once with the baseline speed.
    pub iterations: usize,
    /// Use the node average instead of the traced foot value as the
    /// linearisation state (the pure baseline flux).
    pub baseline_flux: bool,
    pub sweep: SweepOrder,
}

impl SchemeConfig {
    pub fn new(scheme: Scheme, order: Order) -> Self {
        Self { scheme, order, cfl: scheme.default_cfl(), iterations: 0, baseline_flux: false, sweep: SweepOrder::XY }
    }

    pub fn with_cfl(mut self, cfl: f64) -> Self {
        self.cfl = cfl;
        self
    }

    pub fn with_iterations(mut self, k: usize) -> Self {
        self.iterations = k;
        self
    }

    pub fn with_baseline_flux(mut self, on: bool) -> Self {
        self.baseline_flux = on;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        let ok = match self.scheme {
            Scheme::Cfweno | Scheme::Fweno => self.cfl > 0.0 && self.cfl <= 1.0,
            Scheme::WenoRk3 => self.cfl > 0.0 && self.cfl < 1.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!("cfl {} out of range for {}", self.cfl, self.scheme)))
        }
    }
}

/// Per-run scheme diagnostics.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Counters {
    /// Interface flux evaluations.
    pub interfaces: u64,
    /// Scalar linearisation: interfaces on the shock (Roe) branch.
    pub shock_branch: u64,
    /// Scalar linearisation: interfaces on the high-order branch.
    pub high_order_branch: u64,
    /// Euler linearisation: histogram of the six selection options.
    pub options: [u64; 6],
    /// Interfaces where a foot-value weight argument was moved off a pole.
    pub clamped: u64,
    /// Interfaces where negative foot-value weights required the split.
    pub split: u64,
    /// Interfaces whose traced state was inadmissible and fell back to the baseline.
    pub fallback: u64,
    /// Split 2D steps repeated with a halved τ after a CFL overshoot.
    pub cfl_retries: u64,
}

impl Counters {
    pub fn merge(&mut self, other: &Counters) {
        self.interfaces += other.interfaces;
        self.shock_branch += other.shock_branch;
        self.high_order_branch += other.high_order_branch;
        for (a, b) in self.options.iter_mut().zip(other.options) {
            *a += b;
        }
        self.clamped += other.clamped;
        self.split += other.split;
        self.fallback += other.fallback;
        self.cfl_retries += other.cfl_retries;
    }
}

/// Number of steps and uniform step size reaching `remaining` without
/// exceeding `tau_max` (beyond rounding). A remainder below rounding level
/// of the accumulated time counts as arrival: `(0, 0.0)`.
pub fn step_plan(remaining: f64, tau_max: f64) -> (usize, f64) {
    if remaining <= 1e-9 * tau_max {
        return (0, 0.0);
    }
    let n = ((remaining / tau_max) - 1e-9).ceil().max(1.0) as usize;
    let tau = remaining / n as f64;
    // Rounding in the accumulated time must not perturb an exact Courant
    // number step after step.
    if (tau - tau_max).abs() <= 1e-9 * tau_max {
        (n, tau_max)
    } else {
        (n, tau)
    }
}
