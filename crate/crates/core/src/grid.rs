//! Line storage shared by the 1D solvers and the 2D sweeps.
//!
//! A compact line interleaves node cell averages and face point values: fine
//! index `q` even is node `q/2`, `q` odd is face `(q+1)/2` (face `e` separates
//! nodes `e-1` and `e`). A node-only line stores nodes at `q = i`. Non-periodic
//! lines keep the `N-1` interior faces (boundary faces are ghosts filled from
//! the boundary condition); periodic compact lines also keep the face shared
//! by both ends, so they hold `2N` points.

use serde::{Deserialize, Serialize};

use crate::stencil::{Layout, Order};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Boundary {
    Periodic,
    /// Zeroth-order extrapolation of the boundary line value.
    Outflow,
    /// Mirror about the wall, negating the normal momentum.
    Reflective,
    /// Ghosts hold a fixed state supplied by the caller.
    Dirichlet,
}

/// Index arithmetic for one line of `n` nodes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineLayout {
    pub layout: Layout,
    pub n: usize,
    pub periodic: bool,
    pub ghost: usize,
}

impl LineLayout {
    pub fn new(layout: Layout, order: Order, n: usize, periodic: bool) -> Self {
        let r = order.r();
        let ghost = match layout {
            Layout::Compact => 2 * r,
            Layout::NodeOnly => r,
        };
        Self { layout, n, periodic, ghost }
    }

    /// Number of stored interior points.
    pub fn interior(&self) -> usize {
        match (self.layout, self.periodic) {
            (Layout::Compact, true) => 2 * self.n,
            (Layout::Compact, false) => 2 * self.n - 1,
            (Layout::NodeOnly, _) => self.n,
        }
    }

    pub fn len(&self) -> usize {
        self.interior() + 2 * self.ghost
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Buffer index of node `i`.
    #[inline(always)]
    pub fn node(&self, i: usize) -> usize {
        match self.layout {
            Layout::Compact => self.ghost + 2 * i,
            Layout::NodeOnly => self.ghost + i,
        }
    }

    /// Buffer indices of the left and right upwind window centres of face `e`;
    /// they are also the nodes flanking the face.
    #[inline(always)]
    pub fn face_centres(&self, e: usize) -> (usize, usize) {
        match self.layout {
            Layout::Compact => (self.ghost + 2 * e - 2, self.ghost + 2 * e),
            Layout::NodeOnly => (self.ghost + e - 1, self.ghost + e),
        }
    }

    /// Buffer index holding the point value at face `e`, when stored.
    #[inline(always)]
    pub fn face_slot(&self, e: usize) -> Option<usize> {
        match self.layout {
            Layout::Compact => Some(self.ghost + 2 * e - 1),
            Layout::NodeOnly => None,
        }
    }

    /// Whether face `e`'s point value is an interior (persistent) entry.
    #[inline(always)]
    pub fn face_is_interior(&self, e: usize) -> bool {
        self.layout == Layout::Compact && e >= 1 && (e < self.n || (self.periodic && e == self.n))
    }

    /// Fill both ghost regions.
    ///
    /// `reflect` mirrors a state across a wall (negates the normal momentum);
    /// `wall` maps the adjacent node to the state stored on a compact wall face.
    /// Dirichlet sides take `left_state` / `right_state`.
    #[allow(clippy::too_many_arguments)]
    pub fn fill_ghosts<T: Copy>(
        &self,
        buf: &mut [T],
        left: Boundary,
        right: Boundary,
        left_state: Option<T>,
        right_state: Option<T>,
        reflect: impl Fn(T) -> T,
        wall: impl Fn(T) -> T,
    ) {
        let g = self.ghost as isize;
        let m = self.interior() as isize;
        let at = |q: isize| (q + g) as usize;
        if left == Boundary::Periodic || right == Boundary::Periodic {
            for k in 1..=g {
                buf[at(-k)] = buf[at(m - k)];
                buf[at(m - 1 + k)] = buf[at(k - 1)];
            }
            return;
        }
        let compact = self.layout == Layout::Compact;
        for k in 1..=g {
            let q = -k;
            buf[at(q)] = match left {
                Boundary::Outflow | Boundary::Periodic => buf[at(0)],
                Boundary::Dirichlet => left_state.unwrap_or(buf[at(0)]),
                Boundary::Reflective => {
                    if compact {
                        if q == -1 {
                            wall(buf[at(0)])
                        } else {
                            reflect(buf[at(-2 - q)])
                        }
                    } else {
                        reflect(buf[at(-1 - q)])
                    }
                }
            };
        }
        for k in 1..=g {
            let q = m - 1 + k;
            buf[at(q)] = match right {
                Boundary::Outflow | Boundary::Periodic => buf[at(m - 1)],
                Boundary::Dirichlet => right_state.unwrap_or(buf[at(m - 1)]),
                Boundary::Reflective => {
                    if compact {
                        if q == m {
                            wall(buf[at(m - 1)])
                        } else {
                            reflect(buf[at(2 * m - q)])
                        }
                    } else {
                        reflect(buf[at(2 * m - 1 - q)])
                    }
                }
            };
        }
    }
}
