//! Two-dimensional Euler solvers.
//!
//! The one-step schemes are dimensionally split. For the compact scheme the
//! state lives on a fine lattice holding node and half points in both
//! directions; an x-sweep treats every lattice row (node rows and half rows)
//! as an independent compact line, so half points receive fully evolved
//! states in both directions. The node-only scheme uses the same machinery on
//! the node lattice. The Runge-Kutta baseline is unsplit on the node lattice.
//!
//! Ghost frames are materialised per line: each row or column is copied into
//! a line buffer whose ghost cells are filled from the boundary tags.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::baselines::{euler_operator, tvd_rk3};
use crate::error::{Error, Location, Result};
use crate::euler::solver::{check_state, euler_line_step, LineFailure, LineScratch};
use crate::euler::{pressure, reflect, wall_state, Primitive, GAMMA};
use crate::grid::{Boundary, LineLayout};
use crate::reconstruction::kernel;
use crate::scheme::{step_plan, Counters, Scheme, SchemeConfig, SweepOrder};
use crate::stencil::Layout;

/// Conservative 2D state `(rho, rho u, rho v, E)`.
pub type State2 = [f64; 4];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    X,
    Y,
}

impl Direction {
    pub fn label(self) -> char {
        match self {
            Direction::X => 'x',
            Direction::Y => 'y',
        }
    }
}

/// Boundary tags of the four sides.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Boundaries2D {
    pub left: Boundary,
    pub right: Boundary,
    pub bottom: Boundary,
    pub top: Boundary,
}

impl Boundaries2D {
    pub fn all(b: Boundary) -> Self {
        Self { left: b, right: b, bottom: b, top: b }
    }
}

/// Rectangular domain.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

/// Lattice of Euler states for a split 2D run.
#[derive(Clone, Debug)]
pub struct FineGrid2D {
    pub row: LineLayout,
    pub col: LineLayout,
    /// Interior lattice, row-major: index `j * mx + i`.
    pub data: Vec<State2>,
    pub domain: Domain,
    /// Node spacings.
    pub hx: f64,
    pub hy: f64,
    pub bc: Boundaries2D,
    pub gamma: f64,
    pub t: f64,
    pub steps: usize,
}

/// Swap the two momentum components.
#[inline(always)]
fn swap(s: State2) -> State2 {
    [s[0], s[2], s[1], s[3]]
}

/// Coordinate of lattice index `q` along a line of node spacing `h`.
fn coordinate(line: &LineLayout, x0: f64, h: f64, q: usize) -> f64 {
    match line.layout {
        Layout::Compact => x0 + 0.5 * (q as f64 + 1.0) * h,
        Layout::NodeOnly => x0 + (q as f64 + 0.5) * h,
    }
}

impl FineGrid2D {
    /// Lattice sampled pointwise from `init`; `nx`, `ny` are node counts.
    pub fn new(
        layout: Layout,
        cfg: &SchemeConfig,
        nx: usize,
        ny: usize,
        domain: Domain,
        bc: Boundaries2D,
        init: &(dyn Fn(f64, f64) -> Primitive + Sync),
    ) -> Self {
        let px = bc.left == Boundary::Periodic || bc.right == Boundary::Periodic;
        let py = bc.bottom == Boundary::Periodic || bc.top == Boundary::Periodic;
        let row = LineLayout::new(layout, cfg.order, nx, px);
        let col = LineLayout::new(layout, cfg.order, ny, py);
        let hx = (domain.x1 - domain.x0) / nx as f64;
        let hy = (domain.y1 - domain.y0) / ny as f64;
        let (mx, my) = (row.interior(), col.interior());
        let mut data = vec![[0.0; 4]; mx * my];
        data.par_chunks_mut(mx).enumerate().for_each(|(j, r)| {
            let y = coordinate(&col, domain.y0, hy, j);
            for (i, s) in r.iter_mut().enumerate() {
                *s = init(coordinate(&row, domain.x0, hx, i), y).to_cons(GAMMA);
            }
        });
        Self { row, col, data, domain, hx, hy, bc, gamma: GAMMA, t: 0.0, steps: 0 }
    }

    pub fn mx(&self) -> usize {
        self.row.interior()
    }

    pub fn my(&self) -> usize {
        self.col.interior()
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &State2 {
        &self.data[j * self.mx() + i]
    }

    pub fn x_of(&self, i: usize) -> f64 {
        coordinate(&self.row, self.domain.x0, self.hx, i)
    }

    pub fn y_of(&self, j: usize) -> f64 {
        coordinate(&self.col, self.domain.y0, self.hy, j)
    }

    /// Whether lattice point `(i, j)` is a node in both directions.
    pub fn is_node(&self, i: usize, j: usize) -> bool {
        match self.row.layout {
            Layout::Compact => i.is_multiple_of(2) && j.is_multiple_of(2),
            Layout::NodeOnly => true,
        }
    }

    /// Sum of each conserved quantity over node points, times the cell area.
    pub fn totals(&self) -> [f64; 4] {
        let mut s = [0.0; 4];
        for j in 0..self.my() {
            for i in 0..self.mx() {
                if self.is_node(i, j) {
                    let v = self.at(i, j);
                    for c in 0..4 {
                        s[c] += v[c] * self.hx * self.hy;
                    }
                }
            }
        }
        s
    }

    /// Largest common step for both sweeps.
    pub fn compute_dt(&self, cfl: f64) -> Result<f64> {
        let g = self.gamma;
        let mx = self.mx();
        let (sx, sy) = self
            .data
            .par_iter()
            .enumerate()
            .map(|(q, s)| {
                check_state(s, g, q % mx).map_err(|f| f.into_error(self.steps, Some(q / mx), None))?;
                let c = (g * pressure(s, g) / s[0]).sqrt();
                Ok::<_, Error>(((s[1] / s[0]).abs() + c, (s[2] / s[0]).abs() + c))
            })
            .try_reduce(|| (0.0, 0.0), |a, b| Ok((a.0.max(b.0), a.1.max(b.1))))?;
        Ok(cfl / (sx / self.hx).max(sy / self.hy))
    }

    fn sides(&self) -> Sides {
        Sides { row: self.row, col: self.col, bc: self.bc }
    }

    /// Fill the ghosts of a line buffer holding one row (`Direction::X`) or
    /// one column (`Direction::Y`, momenta already swapped).
    pub fn apply_bc_line(&self, dir: Direction, buf: &mut [State2]) {
        self.sides().fill(dir, buf);
    }

    /// Padded copy of the lattice with both ghost frames filled (corners
    /// take the x-fill of the y-filled columns).
    pub fn apply_bc_2d(&self) -> (Vec<State2>, usize, usize) {
        let (gx, gy) = (self.row.ghost, self.col.ghost);
        let (mx, my) = (self.mx(), self.my());
        let (wx, wy) = (self.row.len(), self.col.len());
        let mut out = vec![[0.0; 4]; wx * wy];
        let mut colbuf = vec![[0.0; 4]; wy];
        for i in 0..mx {
            for j in 0..my {
                colbuf[gy + j] = swap(*self.at(i, j));
            }
            self.apply_bc_line(Direction::Y, &mut colbuf);
            for (j, s) in colbuf.iter().enumerate() {
                out[j * wx + gx + i] = swap(*s);
            }
        }
        for j in 0..wy {
            let row = &mut out[j * wx..(j + 1) * wx];
            self.apply_bc_line(Direction::X, row);
        }
        (out, wx, wy)
    }
}

/// Line layouts and boundary tags, detached from the lattice storage.
#[derive(Clone, Copy)]
struct Sides {
    row: LineLayout,
    col: LineLayout,
    bc: Boundaries2D,
}

impl Sides {
    #[inline]
    fn fill(&self, dir: Direction, buf: &mut [State2]) {
        let (line, lo, hi) = match dir {
            Direction::X => (&self.row, self.bc.left, self.bc.right),
            Direction::Y => (&self.col, self.bc.bottom, self.bc.top),
        };
        line.fill_ghosts(buf, lo, hi, None, None, reflect, wall_state);
    }
}

/// One directional sweep of a one-step scheme.
pub fn sweep(
    grid: &mut FineGrid2D,
    dir: Direction,
    tau: f64,
    cfg: &SchemeConfig,
    counters: &mut Counters,
) -> Result<()> {
    let kern = kernel(grid.row.layout, cfg.order);
    let gamma = grid.gamma;
    let step = grid.steps;
    let (mx, my) = (grid.mx(), grid.my());
    let fail = |f: LineFailure, line: usize| {
        let err = f.into_error(step, Some(line), Some(dir.label()));
        // report lattice (i, j) regardless of sweep direction
        match (dir, err) {
            (Direction::Y, Error::Cfl { nu, at }) => Error::Cfl { nu, at: transpose(at) },
            (Direction::Y, Error::Positivity { rho, p, at }) => Error::Positivity { rho, p, at: transpose(at) },
            (Direction::Y, Error::NonFinite { at }) => Error::NonFinite { at: transpose(at) },
            (_, e) => e,
        }
    };
    let sides = grid.sides();
    let merged = match dir {
        Direction::X => {
            let line = grid.row;
            let lam = tau / grid.hx;
            let g = line.ghost;
            let mut data = std::mem::take(&mut grid.data);
            let res = data
                .par_chunks_mut(mx)
                .enumerate()
                .map_init(
                    || (LineScratch::default(), vec![[0.0; 4]; line.len()]),
                    |(scratch, buf), (j, row)| {
                        buf[g..g + mx].copy_from_slice(row);
                        sides.fill(Direction::X, buf);
                        let mut c = Counters::default();
                        euler_line_step(kern, &line, buf, scratch, lam, gamma, cfg, &mut c).map_err(|f| fail(f, j))?;
                        row.copy_from_slice(&buf[g..g + mx]);
                        Ok::<_, Error>(c)
                    },
                )
                .try_reduce(Counters::default, |mut a, b| {
                    a.merge(&b);
                    Ok(a)
                });
            grid.data = data;
            res?
        }
        Direction::Y => {
            let this = &*grid;
            let line = this.col;
            let lam = tau / this.hy;
            let g = line.ghost;
            let cols: Vec<Result<(Vec<State2>, Counters)>> = (0..mx)
                .into_par_iter()
                .map_init(
                    || (LineScratch::default(), vec![[0.0; 4]; line.len()]),
                    |(scratch, buf), i| {
                        for j in 0..my {
                            buf[g + j] = swap(this.data[j * mx + i]);
                        }
                        sides.fill(Direction::Y, buf);
                        let mut c = Counters::default();
                        euler_line_step(kern, &line, buf, scratch, lam, gamma, cfg, &mut c).map_err(|f| fail(f, i))?;
                        Ok((buf[g..g + my].iter().map(|&s| swap(s)).collect(), c))
                    },
                )
                .collect();
            let mut total = Counters::default();
            let mut out = std::mem::take(&mut grid.data);
            for (i, r) in cols.into_iter().enumerate() {
                match r {
                    Ok((col, c)) => {
                        total.merge(&c);
                        for (j, s) in col.into_iter().enumerate() {
                            out[j * mx + i] = s;
                        }
                    }
                    Err(e) => {
                        grid.data = out;
                        return Err(e);
                    }
                }
            }
            grid.data = out;
            total
        }
    };
    counters.merge(&merged);
    Ok(())
}

fn transpose(at: Location) -> Location {
    // a y-sweep indexes lines by column and positions by row
    Location { step: at.step, i: at.j.unwrap_or(0), j: Some(at.i), direction: at.direction }
}

/// One full split step `T_x T_y` (or `T_y T_x` on odd steps when alternating).
pub fn step_2d(grid: &mut FineGrid2D, tau: f64, cfg: &SchemeConfig, counters: &mut Counters) -> Result<()> {
    let order = match cfg.sweep {
        SweepOrder::Alternate if grid.steps % 2 == 1 => [Direction::Y, Direction::X],
        _ => [Direction::X, Direction::Y],
    };
    for d in order {
        sweep(grid, d, tau, cfg, counters)?;
    }
    grid.t += tau;
    grid.steps += 1;
    Ok(())
}

/// Unsplit WENO-JS + RK3 step on the node lattice.
pub fn rk3_step_2d(grid: &mut FineGrid2D, tau: f64, cfg: &SchemeConfig) -> Result<()> {
    if grid.row.layout != Layout::NodeOnly {
        return Err(Error::Config("the Runge-Kutta baseline runs on the node lattice".into()));
    }
    let kern = kernel(Layout::NodeOnly, cfg.order);
    let (mx, my) = (grid.mx(), grid.my());
    let (row, col) = (grid.row, grid.col);
    let (hx, hy, gamma, step) = (grid.hx, grid.hy, grid.gamma, grid.steps);
    let sides = grid.sides();
    let mut data = std::mem::take(&mut grid.data);
    let res = tvd_rk3(&mut data, tau, |u, l| {
        let (gx, gy) = (row.ghost, col.ghost);
        u.par_iter()
            .enumerate()
            .try_for_each(|(q, s)| check_state(s, gamma, q % mx).map_err(|f| f.into_error(step, Some(q / mx), None)))?;
        l.par_chunks_mut(mx).enumerate().try_for_each_init(
            || (vec![[0.0; 4]; row.len()], vec![[0.0; 4]; row.len()]),
            |(buf, out), (j, lrow)| {
                buf[gx..gx + mx].copy_from_slice(&u[j * mx..(j + 1) * mx]);
                sides.fill(Direction::X, buf);
                euler_operator(kern, &row, buf, hx, gamma, out)
                    .map_err(|i| Error::NonFinite { at: Location { step, i, j: Some(j), direction: Some('x') } })?;
                lrow.copy_from_slice(&out[gx..gx + mx]);
                Ok::<(), Error>(())
            },
        )?;
        let cols: Vec<Result<Vec<State2>>> = (0..mx)
            .into_par_iter()
            .map_init(
                || (vec![[0.0; 4]; col.len()], vec![[0.0; 4]; col.len()]),
                |(buf, out), i| {
                    for j in 0..my {
                        buf[gy + j] = swap(u[j * mx + i]);
                    }
                    sides.fill(Direction::Y, buf);
                    euler_operator(kern, &col, buf, hy, gamma, out)
                        .map_err(|j| Error::NonFinite { at: Location { step, i, j: Some(j), direction: Some('y') } })?;
                    Ok(out[gy..gy + my].iter().map(|&s| swap(s)).collect())
                },
            )
            .collect();
        for (i, c) in cols.into_iter().enumerate() {
            for (j, s) in c?.into_iter().enumerate() {
                let t = &mut l[j * mx + i];
                for k in 0..4 {
                    t[k] += s[k];
                }
            }
        }
        Ok(())
    });
    grid.data = data;
    res?;
    grid.t += tau;
    grid.steps += 1;
    Ok(())
}

/// Advance to `t_end` with the largest common step allowed by the CFL number.
/// Halvings of τ tried before a CFL violation in a split step is reported.
pub const MAX_CFL_RETRIES: usize = 4;

pub fn run_2d(grid: &mut FineGrid2D, cfg: &SchemeConfig, t_end: f64) -> Result<Counters> {
    cfg.validate()?;
    let mut counters = Counters::default();
    loop {
        let (n, mut tau) = step_plan(t_end - grid.t, grid.compute_dt(cfg.cfl)?);
        if n == 0 {
            break;
        }
        if cfg.scheme == Scheme::WenoRk3 {
            rk3_step_2d(grid, tau, cfg)?;
            continue;
        }
        // The second sweep sees speeds raised by the first; on a CFL overshoot
        // the step is repeated from the saved state with a shorter τ.
        let saved = (grid.data.clone(), grid.t, grid.steps);
        let mut attempt = 0;
        loop {
            let mut local = Counters::default();
            match step_2d(grid, tau, cfg, &mut local) {
                Ok(()) => {
                    counters.merge(&local);
                    break;
                }
                Err(Error::Cfl { .. }) if attempt < MAX_CFL_RETRIES => {
                    attempt += 1;
                    counters.cfl_retries += 1;
                    grid.data.clone_from(&saved.0);
                    grid.t = saved.1;
                    grid.steps = saved.2;
                    tau *= 0.5;
                }
                Err(e) => return Err(e),
            }
        }
    }
    grid.t = t_end;
    for (q, s) in grid.data.iter().enumerate() {
        check_state(s, grid.gamma, q % grid.mx()).map_err(|f| f.into_error(grid.steps, Some(q / grid.mx()), None))?;
    }
    Ok(counters)
}
