//! Per-wave choice between the baseline (Roe / average) and the high-order
//! linearisation, driven by the pressure jump and a middle-pressure estimate.

use serde::{Deserialize, Serialize};

use super::eigen::{eigenvalues, EigenSystem};
use super::{flux, pressure, Primitive};

/// Pressure ratio at or above which every wave uses the baseline.
pub const S1: f64 = 2.0;
/// Pressure ratio below which every wave uses the high-order linearisation.
pub const S2: f64 = 1.05;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SelectionOption {
    /// Strong pressure jump or sign problem: all baseline.
    StrongJump = 1,
    /// Nearly equal pressures: all high order.
    NearlyEqual = 2,
    /// Two shocks: all baseline.
    TwoShocks = 3,
    /// Two rarefactions: all high order.
    TwoRarefactions = 4,
    /// Left shock, right rarefaction: left wave baseline.
    LeftShock = 5,
    /// Left rarefaction, right shock: right wave baseline.
    RightShock = 6,
}

impl SelectionOption {
    pub fn index(self) -> usize {
        self as usize - 1
    }

    /// Whether waves 1 (left acoustic), 2 (linearly degenerate), 3 (right
    /// acoustic) use the high-order linearisation.
    pub fn high_order_waves(self) -> [bool; 3] {
        match self {
            SelectionOption::StrongJump | SelectionOption::TwoShocks => [false; 3],
            SelectionOption::NearlyEqual | SelectionOption::TwoRarefactions => [true; 3],
            SelectionOption::LeftShock => [false, true, true],
            SelectionOption::RightShock => [true, true, false],
        }
    }
}

/// Wave (1-based position in the fan) of characteristic field `k`.
#[inline(always)]
pub fn wave_of_field(k: usize, d: usize) -> usize {
    if k == 0 {
        0
    } else if k == d - 1 {
        2
    } else {
        1
    }
}

/// Middle-pressure estimate used to classify the two acoustic waves.
pub fn guess_middle_pressure(left: &Primitive, right: &Primitive, gamma: f64) -> f64 {
    let g = gamma;
    let (cl, cr) = (left.sound_speed(g), right.sound_speed(g));
    let a = (0.5 * (left.u - right.u + cl / (g - 1.0) + cr / (g - 1.0))).max(0.0).powf(2.0 * g / (g - 1.0));
    let b = (4.0 / (1.0 / left.p.sqrt() + 1.0 / right.p.sqrt())).powi(2);
    let k = 0.5 * (g + 1.0);
    let c = ((left.u - right.u) / (1.0 / (left.rho.sqrt() * k) + 1.0 / (right.rho.sqrt() * k))).max(0.0).powi(2);
    a.min(b).max(c)
}

/// Decision tree over the node pressures; `p_m` is only evaluated when needed.
pub fn select_option(p_l: f64, p_r: f64, p_m: impl FnOnce() -> f64) -> SelectionOption {
    let (hi, lo) = (p_l.abs().max(p_r.abs()), p_l.abs().min(p_r.abs()));
    if hi >= S1 * lo || p_l * p_r <= 0.0 {
        return SelectionOption::StrongJump;
    }
    if hi < S2 * lo {
        return SelectionOption::NearlyEqual;
    }
    let pm = p_m();
    if p_l < pm && pm > p_r {
        SelectionOption::TwoShocks
    } else if p_l >= pm && pm <= p_r {
        SelectionOption::TwoRarefactions
    } else if p_l < pm && pm <= p_r {
        SelectionOption::LeftShock
    } else {
        SelectionOption::RightShock
    }
}

/// Per-field wave speed and flux offset.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WaveLinearization<const D: usize> {
    pub lambda: [f64; D],
    pub phi: [f64; D],
    pub high_order: [bool; D],
    pub option: SelectionOption,
}

/// Baseline state and flux of the linearisation.
#[inline(always)]
pub fn baseline_state<const D: usize>(ul: &[f64; D], ur: &[f64; D], gamma: f64) -> ([f64; D], [f64; D]) {
    let mut mid = [0.0; D];
    for i in 0..D {
        mid[i] = 0.5 * (ul[i] + ur[i]);
    }
    let fb = if ul[1] / ul[0] > ur[1] / ur[0] {
        let (fl, fr) = (flux(ul, gamma), flux(ur, gamma));
        let mut f = [0.0; D];
        for i in 0..D {
            f[i] = 0.5 * (fl[i] + fr[i]);
        }
        f
    } else {
        flux(&mid, gamma)
    };
    (mid, fb)
}

/// Apply the decision tree: baseline fields keep `lambda_b` and the baseline
/// offset, high-order fields take the eigenvalue and exact offset at `u_star`.
/// Eigenvectors always come from `eig`.
pub fn select_flux_linearization<const D: usize>(
    ul: &[f64; D],
    ur: &[f64; D],
    u_star: &[f64; D],
    eig: &EigenSystem<D>,
    gamma: f64,
) -> WaveLinearization<D> {
    let (p_l, p_r) = (pressure(ul, gamma), pressure(ur, gamma));
    let option = select_option(p_l, p_r, || {
        guess_middle_pressure(&Primitive::from_cons(ul, gamma), &Primitive::from_cons(ur, gamma), gamma)
    });
    linearize_fields(ul, ur, u_star, eig, gamma, option)
}

pub fn linearize_fields<const D: usize>(
    ul: &[f64; D],
    ur: &[f64; D],
    u_star: &[f64; D],
    eig: &EigenSystem<D>,
    gamma: f64,
    option: SelectionOption,
) -> WaveLinearization<D> {
    let waves = option.high_order_waves();
    let mut high_order = [false; D];
    for (k, h) in high_order.iter_mut().enumerate() {
        *h = waves[wave_of_field(k, D)];
    }
    let mut lambda = eig.lambda;
    let mut phi = [0.0; D];
    if high_order.iter().any(|&h| !h) {
        let (mid, fb) = baseline_state(ul, ur, gamma);
        for k in 0..D {
            if !high_order[k] {
                phi[k] = eig.lambda[k] * eig.project(k, &mid) - eig.project(k, &fb);
            }
        }
    }
    if high_order.iter().any(|&h| h) {
        let fs = flux(u_star, gamma);
        let us = u_star[1] / u_star[0];
        let cs = (gamma * pressure(u_star, gamma) / u_star[0]).sqrt();
        let ls: [f64; D] = eigenvalues(us, cs);
        for k in 0..D {
            if high_order[k] {
                lambda[k] = ls[k];
                let mut t = [0.0; D];
                for i in 0..D {
                    t[i] = ls[k] * u_star[i] - fs[i];
                }
                phi[k] = eig.project(k, &t);
            }
        }
    }
    WaveLinearization { lambda, phi, high_order, option }
}
