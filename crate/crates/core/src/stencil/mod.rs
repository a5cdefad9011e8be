//! Stencil vocabulary shared by the offline derivation and the runtime kernels,
//! plus the frozen coefficient tables produced by the derivation.
//!
//! All coordinates are measured in units of the node spacing `h`, with the
//! reconstructed interface `x_{i+1/2}` at the origin. A window of `2r-1`
//! entries is centred on node `i` (cell `[-1, 0]`).
//!
//! * [`Layout::Compact`] interleaves node cell averages and half-point values:
//!   entry `e` sits at half-index `m = e - (r-1)`; even `m` is the cell average
//!   of node `i + m/2`, odd `m` is the point value at `x_{i + m/2}`.
//! * [`Layout::NodeOnly`] holds `2r-1` consecutive cell averages, nodes
//!   `i-r+1 ..= i+r-1`.
//!
//! Sub-stencil `k` uses window entries `k ..= k+r-1`; the big stencil uses all.

#[rustfmt::skip]
mod tables;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use tables::KERNELS;

/// Scheme order `2r-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Order {
    Third,
    Fifth,
    Seventh,
}

impl Order {
    pub const ALL: [Order; 3] = [Order::Third, Order::Fifth, Order::Seventh];

    /// Number of sub-stencils.
    pub const fn r(self) -> usize {
        match self {
            Order::Third => 2,
            Order::Fifth => 3,
            Order::Seventh => 4,
        }
    }

    pub const fn design_order(self) -> usize {
        2 * self.r() - 1
    }

    pub const fn window_len(self) -> usize {
        2 * self.r() - 1
    }

    pub fn from_design_order(order: usize) -> Option<Self> {
        match order {
            3 => Some(Order::Third),
            5 => Some(Order::Fifth),
            7 => Some(Order::Seventh),
            _ => None,
        }
    }

    pub fn from_r(r: usize) -> Option<Self> {
        Self::from_design_order(2 * r - 1)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.design_order())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Layout {
    /// Interleaved node averages and stored half-point values.
    Compact,
    /// Node cell averages only.
    NodeOnly,
}

impl Layout {
    pub const ALL: [Layout; 2] = [Layout::Compact, Layout::NodeOnly];
}

/// What a stencil evaluates from its interpolating polynomial `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `(1/nu) * integral of p over [-nu, 0]`
    IntervalAverage,
    /// `p(-nu)`
    FootValue,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::IntervalAverage, Family::FootValue];
}

/// Exact rational `(numerator, denominator)`.
pub type Q = (i64, i64);

/// Rational function of `nu`, coefficients in ascending powers.
#[derive(Debug)]
pub struct FrozenRatFn {
    pub num: &'static [Q],
    pub den: &'static [Q],
}

/// One weighted square `weight * (form . u)^2` of a smoothness indicator,
/// `form` indexed by the sub-stencil's local entries.
#[derive(Debug)]
pub struct FrozenSquare {
    pub weight: Q,
    pub form: &'static [Q],
}

#[derive(Debug)]
pub struct FrozenFamily {
    /// `[k][j][n]`: coefficient of local entry `j` of sub-stencil `k`, power `nu^n`.
    pub subs: &'static [&'static [&'static [Q]]],
    /// `[e][n]`: big-stencil coefficient of window entry `e`.
    pub big: &'static [&'static [Q]],
    /// Linear weights of the sub-stencils reproducing the big stencil.
    pub weights: &'static [FrozenRatFn],
    /// Real poles of the linear weights inside `(0, 1)`, ascending.
    pub poles: &'static [f64],
}

#[derive(Debug)]
pub struct FrozenKernel {
    pub layout: Layout,
    pub r: usize,
    pub interval_average: FrozenFamily,
    pub foot_value: FrozenFamily,
    /// `[k][m]` weighted squares summing to the smoothness indicator of sub-stencil `k`.
    pub smoothness: &'static [&'static [FrozenSquare]],
}

impl FrozenKernel {
    pub fn family(&self, family: Family) -> &FrozenFamily {
        match family {
            Family::IntervalAverage => &self.interval_average,
            Family::FootValue => &self.foot_value,
        }
    }
}

/// Frozen tables for a layout and order.
pub fn frozen(layout: Layout, order: Order) -> &'static FrozenKernel {
    KERNELS.iter().find(|k| k.layout == layout && k.r == order.r()).expect("frozen tables cover every layout and order")
}

pub fn q_to_f64(q: Q) -> f64 {
    q.0 as f64 / q.1 as f64
}
