//! Error norms, convergence orders and the closed-form error-coefficient and
//! computing-speed predictors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scheme::Scheme;
use crate::stencil::Order;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Norms {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

/// `L1 = sum |e| h`, `L2 = (sum e^2 h)^(1/2)`, `Linf = max |e|`.
pub fn error_norms(numeric: &[f64], reference: &[f64], h: f64) -> Result<Norms> {
    if numeric.len() != reference.len() {
        return Err(Error::LengthMismatch(numeric.len(), reference.len()));
    }
    let mut n = Norms::default();
    let mut sq = 0.0;
    for (a, b) in numeric.iter().zip(reference) {
        let e = (a - b).abs();
        n.l1 += e * h;
        sq += e * e * h;
        n.linf = n.linf.max(e);
    }
    n.l2 = sq.sqrt();
    Ok(n)
}

/// Observed orders between consecutive grids; `None` where an error is not
/// positive.
pub fn convergence_order(errors: &[f64], hs: &[f64]) -> Vec<Option<f64>> {
    errors
        .windows(2)
        .zip(hs.windows(2))
        .map(|(e, h)| {
            if e[0] > 0.0 && e[1] > 0.0 && e[0].is_finite() && e[1].is_finite() {
                Some((e[0] / e[1]).ln() / (h[0] / h[1]).ln())
            } else {
                None
            }
        })
        .collect()
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Leading truncation-error coefficient for linear advection at Courant
/// number `nu`.
pub fn error_coefficient(scheme: Scheme, order: Order, nu: f64) -> f64 {
    let v = nu;
    match (scheme, order) {
        (Scheme::Cfweno, Order::Third) => v * (1.0 - v).powi(2) / factorial(2).powi(2),
        (Scheme::Cfweno, Order::Fifth) => v * (1.0 - v).powi(2) * (1.0 + v) * (2.0 - v) / factorial(3).powi(2),
        (Scheme::Cfweno, Order::Seventh) => {
            v * (1.0 - v).powi(2) * (1.0 + v).powi(2) * (2.0 - v).powi(2) / factorial(4).powi(2)
        }
        (Scheme::Fweno, Order::Third) => (1.0 - v * v) * (2.0 - v) / factorial(4),
        (Scheme::Fweno, Order::Fifth) => (1.0 - v * v) * (4.0 - v * v) * (3.0 - v) / factorial(6),
        (Scheme::Fweno, Order::Seventh) => (1.0 - v * v) * (4.0 - v * v) * (9.0 - v * v) * (4.0 - v) / factorial(8),
        (Scheme::WenoRk3, Order::Third) => 2.0 / factorial(4),
        (Scheme::WenoRk3, Order::Fifth) => 12.0 / factorial(6),
        (Scheme::WenoRk3, Order::Seventh) => 144.0 / factorial(8),
    }
}

/// Measured per-point cost of each scheme relative to WENO-JS + RK3 stages.
pub fn cost_coefficient(scheme: Scheme, order: Order) -> f64 {
    match (scheme, order) {
        (Scheme::Cfweno, Order::Third) => 1.71,
        (Scheme::Cfweno, Order::Fifth) => 1.47,
        (Scheme::Cfweno, Order::Seventh) => 1.31,
        (Scheme::Fweno, Order::Third) => 1.29,
        (Scheme::Fweno, Order::Fifth) => 1.10,
        (Scheme::Fweno, Order::Seventh) => 0.97,
        (Scheme::WenoRk3, _) => 1.0,
    }
}

/// Evolution stages per step.
pub fn stages(scheme: Scheme) -> f64 {
    match scheme {
        Scheme::WenoRk3 => 3.0,
        _ => 1.0,
    }
}

/// Lattice points advanced per node spacing in the evolution direction.
pub fn evolution_span(scheme: Scheme) -> f64 {
    match scheme {
        Scheme::Cfweno => 2.0,
        _ => 1.0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpeedPrediction {
    /// `Q_e = span * dt / (C_Q P)` with `dt = span * CFL / a_max`, `a_max = 1`.
    pub q_e: f64,
    /// `Q_e` relative to WENO-JS + RK3.
    pub normalized: f64,
    /// Cost per step relative to `n^d` node updates of unit cost
    /// (`n (2n - 1)^(d-1) ~ 2^(d-1) n^d` lattice lines for the compact scheme).
    pub cost_multiplier: f64,
}

pub fn predicted_speed(scheme: Scheme, order: Order, dimension: u32) -> SpeedPrediction {
    let q = |s: Scheme| {
        let span = evolution_span(s);
        let dt = span * s.default_cfl();
        span * dt / (cost_coefficient(s, order) * stages(s))
    };
    let q_e = q(scheme);
    let lattice = match scheme {
        Scheme::Cfweno => 2f64.powi(dimension.saturating_sub(1) as i32),
        _ => 1.0,
    };
    SpeedPrediction {
        q_e,
        normalized: q_e / q(Scheme::WenoRk3),
        cost_multiplier: lattice * cost_coefficient(scheme, order) * stages(scheme),
    }
}
