//! Registry of the benchmark problems.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::Primitive;
use crate::grid::Boundary;
use crate::multidim::{Boundaries2D, Domain};
use crate::scalar::ScalarFlux;
use crate::stencil::Layout;

/// How the reference solution of a case is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReferenceKind {
    /// Exact translation of the initial profile.
    Translation,
    /// Characteristics of the inviscid Burgers equation (smooth solutions).
    Characteristics,
    /// Exact Riemann solution.
    ExactRiemann,
    /// Fine-grid WENO5-JS + RK3 run.
    FineGrid,
    None,
}

/// Initial condition and physics of a case.
#[derive(Clone, Copy, Debug)]
pub enum Problem {
    Scalar {
        flux: ScalarFlux,
        u0: fn(f64) -> f64,
        /// Discontinuities and kinks of `u0` inside one period.
        breaks: &'static [f64],
    },
    Euler1D {
        init: fn(f64) -> Primitive,
        /// Left and right Riemann states and the jump position.
        riemann: Option<(Primitive, Primitive, f64)>,
    },
    Euler2D {
        init: fn(f64, f64) -> Primitive,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct CaseSpec {
    pub name: &'static str,
    pub description: &'static str,
    pub problem: Problem,
    pub domain: Domain,
    /// Boundary tags; 1D cases use `left` and `right` only.
    pub bc: Boundaries2D,
    pub t_end: f64,
    /// Reference resolution: node count in 1D, lattice points per direction in 2D.
    pub resolution: (usize, usize),
    pub reference: ReferenceKind,
}

impl CaseSpec {
    pub fn dimension(&self) -> usize {
        match self.problem {
            Problem::Euler2D { .. } => 2,
            _ => 1,
        }
    }

    pub fn is_periodic_x(&self) -> bool {
        self.bc.left == Boundary::Periodic
    }

    pub fn is_periodic_y(&self) -> bool {
        self.bc.bottom == Boundary::Periodic
    }

    /// Default node counts for a lattice layout. In 2D the registered resolution
    /// counts every lattice point, so the compact lattice uses about half as
    /// many nodes per direction.
    pub fn default_nodes(&self, layout: Layout) -> (usize, usize) {
        let (rx, ry) = self.resolution;
        if self.dimension() == 1 || layout == Layout::NodeOnly {
            return (rx, ry);
        }
        let half = |m: usize, periodic: bool| if periodic { m / 2 } else { m.div_ceil(2) };
        (half(rx, self.is_periodic_x()), half(ry, self.is_periodic_y()))
    }

    pub fn length(&self) -> f64 {
        self.domain.x1 - self.domain.x0
    }
}

const fn line(x0: f64, x1: f64) -> Domain {
    Domain { x0, x1, y0: 0.0, y1: 1.0 }
}

const fn sides(b: Boundary) -> Boundaries2D {
    Boundaries2D { left: b, right: b, bottom: b, top: b }
}

fn sine(x: f64) -> f64 {
    (PI * x).sin()
}

fn shifted_sine(x: f64) -> f64 {
    0.5 + (PI * x).sin()
}

fn square(x: f64) -> f64 {
    if (-1.0 / 3.0..=1.0 / 3.0).contains(&x) {
        1.0
    } else {
        -1.0
    }
}

/// Gaussian, square, triangle and semi-ellipse on `[-1, 1]`.
pub fn multiple_extremes(x: f64) -> f64 {
    let (z, delta, a, alpha) = (-0.7, 0.005, 0.5, 10.0);
    let beta = 2f64.ln() / (36.0 * delta * delta);
    let g = |z: f64| (-beta * (x - z) * (x - z)).exp();
    let f = |a: f64| (1.0 - alpha * alpha * (x - a) * (x - a)).max(0.0).sqrt();
    if (-0.8..=-0.6).contains(&x) {
        (g(z - delta) + g(z + delta) + 4.0 * g(z)) / 6.0
    } else if (-0.4..=-0.2).contains(&x) {
        1.0
    } else if (0.0..=0.2).contains(&x) {
        1.0 - (10.0 * (x - 0.1)).abs()
    } else if (0.4..=0.6).contains(&x) {
        (f(a - delta) + f(a + delta) + 4.0 * f(a)) / 6.0
    } else {
        0.0
    }
}

const SOD_L: Primitive = Primitive::new(1.0, 0.0, 1.0);
const SOD_R: Primitive = Primitive::new(0.125, 0.0, 0.1);

fn sod(x: f64) -> Primitive {
    if x < 0.5 {
        SOD_L
    } else {
        SOD_R
    }
}

fn shu_osher(x: f64) -> Primitive {
    if x < -4.0 {
        Primitive::new(3.857, 2.629, 10.333)
    } else {
        Primitive::new(1.0 + 0.2 * (5.0 * x).sin(), 0.0, 1.0)
    }
}

fn titarev_toro(x: f64) -> Primitive {
    if x < -4.5 {
        Primitive::new(1.515695, 0.523346, 1.80500)
    } else {
        Primitive::new(1.0 + 0.1 * (20.0 * PI * x).sin(), 0.0, 1.0)
    }
}

fn blast(x: f64) -> Primitive {
    if x < 0.1 {
        Primitive::new(1.0, 0.0, 1e3)
    } else if x < 0.9 {
        Primitive::new(1.0, 0.0, 1e-2)
    } else {
        Primitive::new(1.0, 0.0, 1e2)
    }
}

fn riemann_config3(x: f64, y: f64) -> Primitive {
    match (x > 0.8, y > 0.8) {
        (true, true) => Primitive::new2d(1.5, 0.0, 0.0, 1.5),
        (false, true) => Primitive::new2d(0.5323, 1.206, 0.0, 0.3),
        (false, false) => Primitive::new2d(0.138, 1.206, 1.206, 0.029),
        (true, false) => Primitive::new2d(0.5323, 0.0, 1.206, 0.3),
    }
}

fn riemann_config16(x: f64, y: f64) -> Primitive {
    match (x > 0.5, y > 0.5) {
        (true, true) => Primitive::new2d(0.5313, 0.1, 0.1, 0.4),
        (false, true) => Primitive::new2d(1.0222, -0.6179, 0.1, 1.0),
        (false, false) => Primitive::new2d(0.8, 0.1, 0.1, 1.0),
        (true, false) => Primitive::new2d(1.0, 0.1, 0.8276, 1.0),
    }
}

fn implosion(x: f64, y: f64) -> Primitive {
    if (x - 0.3).abs() < 0.15 && (y - 0.3).abs() < 0.15 {
        Primitive::new2d(0.125, 0.0, 0.0, 0.14)
    } else {
        Primitive::new2d(1.0, 0.0, 0.0, 1.0)
    }
}

/// Single-material triple point: high-pressure driver on the left, dense
/// gas below and light gas above the horizontal interface.
fn triple_point(x: f64, y: f64) -> Primitive {
    if x < 1.0 {
        Primitive::new2d(1.0, 0.0, 0.0, 1.0)
    } else if y < 1.5 {
        Primitive::new2d(1.0, 0.0, 0.0, 0.1)
    } else {
        Primitive::new2d(0.125, 0.0, 0.0, 0.1)
    }
}

static CASES: &[CaseSpec] = &[
    CaseSpec {
        name: "linear-sine",
        description: "linear advection of sin(pi x) over one period",
        problem: Problem::Scalar { flux: ScalarFlux::Linear { speed: 1.0 }, u0: sine, breaks: &[] },
        domain: line(-1.0, 1.0),
        bc: sides(Boundary::Periodic),
        t_end: 2.0,
        resolution: (80, 1),
        reference: ReferenceKind::Translation,
    },
    CaseSpec {
        name: "burgers-sine",
        description: "Burgers equation with smooth data before shock formation",
        problem: Problem::Scalar { flux: ScalarFlux::Burgers, u0: shifted_sine, breaks: &[] },
        domain: line(0.0, 2.0),
        bc: sides(Boundary::Periodic),
        t_end: 0.15,
        resolution: (80, 1),
        reference: ReferenceKind::Characteristics,
    },
    CaseSpec {
        name: "burgers-long",
        description: "Burgers equation long after shock formation",
        problem: Problem::Scalar { flux: ScalarFlux::Burgers, u0: shifted_sine, breaks: &[] },
        domain: line(0.0, 2.0),
        bc: sides(Boundary::Periodic),
        t_end: 20.0,
        resolution: (80, 1),
        reference: ReferenceKind::None,
    },
    CaseSpec {
        name: "square-wave",
        description: "linear advection of a square wave over ten periods",
        problem: Problem::Scalar {
            flux: ScalarFlux::Linear { speed: 1.0 },
            u0: square,
            breaks: &[-1.0 / 3.0, 1.0 / 3.0],
        },
        domain: line(-1.0, 1.0),
        bc: sides(Boundary::Periodic),
        t_end: 20.0,
        resolution: (100, 1),
        reference: ReferenceKind::Translation,
    },
    CaseSpec {
        name: "multiple-extremes",
        description: "Gaussian, square, triangle and semi-ellipse advected over four periods",
        problem: Problem::Scalar {
            flux: ScalarFlux::Linear { speed: 1.0 },
            u0: multiple_extremes,
            breaks: &[-0.8, -0.6, -0.4, -0.2, 0.0, 0.1, 0.2, 0.4, 0.6],
        },
        domain: line(-1.0, 1.0),
        bc: sides(Boundary::Periodic),
        t_end: 8.0,
        resolution: (200, 1),
        reference: ReferenceKind::Translation,
    },
    CaseSpec {
        name: "sod",
        description: "Sod shock tube",
        problem: Problem::Euler1D { init: sod, riemann: Some((SOD_L, SOD_R, 0.5)) },
        domain: line(0.0, 1.0),
        bc: sides(Boundary::Outflow),
        t_end: 0.2,
        resolution: (200, 1),
        reference: ReferenceKind::ExactRiemann,
    },
    CaseSpec {
        name: "shu-osher",
        description: "Mach 3 shock interacting with a density wave",
        problem: Problem::Euler1D { init: shu_osher, riemann: None },
        domain: line(-5.0, 5.0),
        bc: sides(Boundary::Outflow),
        t_end: 1.8,
        resolution: (200, 1),
        reference: ReferenceKind::FineGrid,
    },
    CaseSpec {
        name: "titarev-toro",
        description: "shock interacting with a high-frequency density wave",
        problem: Problem::Euler1D { init: titarev_toro, riemann: None },
        domain: line(-5.0, 5.0),
        bc: sides(Boundary::Outflow),
        t_end: 5.0,
        resolution: (400, 1),
        reference: ReferenceKind::FineGrid,
    },
    CaseSpec {
        name: "blast",
        description: "interacting blast waves between reflective walls",
        problem: Problem::Euler1D { init: blast, riemann: None },
        domain: line(0.0, 1.0),
        bc: sides(Boundary::Reflective),
        t_end: 0.038,
        resolution: (200, 1),
        reference: ReferenceKind::FineGrid,
    },
    CaseSpec {
        name: "riemann2d-3",
        description: "2D Riemann problem, configuration 3 (four shocks)",
        problem: Problem::Euler2D { init: riemann_config3 },
        domain: Domain { x0: 0.0, x1: 1.0, y0: 0.0, y1: 1.0 },
        bc: sides(Boundary::Outflow),
        t_end: 0.8,
        resolution: (400, 400),
        reference: ReferenceKind::None,
    },
    CaseSpec {
        name: "riemann2d-16",
        description: "2D Riemann problem, configuration 16",
        problem: Problem::Euler2D { init: riemann_config16 },
        domain: Domain { x0: 0.0, x1: 1.0, y0: 0.0, y1: 1.0 },
        bc: sides(Boundary::Outflow),
        t_end: 0.6,
        resolution: (800, 800),
        reference: ReferenceKind::None,
    },
    CaseSpec {
        name: "implosion",
        description: "implosion in a periodic box",
        problem: Problem::Euler2D { init: implosion },
        domain: Domain { x0: 0.0, x1: 0.6, y0: 0.0, y1: 0.6 },
        bc: sides(Boundary::Periodic),
        t_end: 0.4,
        resolution: (600, 600),
        reference: ReferenceKind::None,
    },
    CaseSpec {
        name: "triple-point",
        description: "single-material triple point",
        problem: Problem::Euler2D { init: triple_point },
        domain: Domain { x0: 0.0, x1: 7.0, y0: 0.0, y1: 3.0 },
        bc: sides(Boundary::Outflow),
        t_end: 5.0,
        resolution: (560, 240),
        reference: ReferenceKind::None,
    },
];

/// Every registered case.
pub fn cases() -> &'static [CaseSpec] {
    CASES
}

/// Case by name.
pub fn case(name: &str) -> Result<&'static CaseSpec> {
    CASES.iter().find(|c| c.name == name).ok_or_else(|| Error::UnknownCase(name.to_string()))
}
