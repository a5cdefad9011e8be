//! Compact fully-discrete WENO schemes for hyperbolic conservation laws.
//!
//! The crate provides the stencil derivation ([`derive`]) and its frozen
//! tables ([`stencil`]), the reconstruction kernels, one-step solvers for
//! scalar laws and the Euler equations, dimensionally split 2D drivers, the
//! semi-discrete WENO-JS + RK3 reference scheme and a benchmark harness.

pub mod baselines;
pub mod derive;
pub mod error;
pub mod euler;
pub mod grid;
pub mod harness;
pub mod multidim;
pub mod reconstruction;
pub mod scalar;
pub mod scheme;
pub mod stencil;

pub use error::{Error, Result};
pub use scheme::{Counters, Scheme, SchemeConfig, SweepOrder};
pub use stencil::{Family, Layout, Order};
