//! Exact Riemann solver for the gamma-law Euler equations (Newton iteration on
//! the pressure function) with a self-similar sampler and exact cell averages.

use super::{check_admissible, Primitive};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RiemannSolution {
    pub left: Primitive,
    pub right: Primitive,
    pub gamma: f64,
    pub p_star: f64,
    pub u_star: f64,
    /// Final residual of the pressure equation.
    pub residual: f64,
}

fn pressure_function(p: f64, s: &Primitive, gamma: f64) -> (f64, f64) {
    let c = s.sound_speed(gamma);
    if p > s.p {
        let a = 2.0 / ((gamma + 1.0) * s.rho);
        let b = (gamma - 1.0) / (gamma + 1.0) * s.p;
        let q = (a / (p + b)).sqrt();
        (((p - s.p) * q), q * (1.0 - 0.5 * (p - s.p) / (p + b)))
    } else {
        let e = (gamma - 1.0) / (2.0 * gamma);
        let ratio = p / s.p;
        (2.0 * c / (gamma - 1.0) * (ratio.powf(e) - 1.0), ratio.powf(-(gamma + 1.0) / (2.0 * gamma)) / (s.rho * c))
    }
}

/// Star pressure and velocity of the Riemann problem.
pub fn exact_riemann(left: Primitive, right: Primitive, gamma: f64) -> Result<RiemannSolution> {
    check_admissible(&left, "left Riemann state")?;
    check_admissible(&right, "right Riemann state")?;
    let (cl, cr) = (left.sound_speed(gamma), right.sound_speed(gamma));
    let du = right.u - left.u;
    if 2.0 * (cl + cr) / (gamma - 1.0) <= du {
        return Err(Error::Vacuum);
    }
    // two-rarefaction guess, always positive and usually close
    let e = (gamma - 1.0) / (2.0 * gamma);
    let num = cl + cr - 0.5 * (gamma - 1.0) * du;
    let den = cl / left.p.powf(e) + cr / right.p.powf(e);
    let mut p = (num / den).powf(1.0 / e);
    let pvrs = 0.5 * (left.p + right.p) - 0.125 * du * (left.rho + right.rho) * (cl + cr);
    if p.is_nan() || p <= 0.0 {
        p = pvrs.max(1e-8);
    }
    let scale = 0.5 * (left.p + right.p);
    let mut residual = f64::INFINITY;
    for _ in 0..100 {
        let (fl, dl) = pressure_function(p, &left, gamma);
        let (fr, dr) = pressure_function(p, &right, gamma);
        let g = fl + fr + du;
        residual = g.abs();
        let mut next = p - g / (dl + dr);
        if next <= 0.0 {
            next = 0.1 * p;
        }
        let change = (next - p).abs() / (0.5 * (next + p));
        p = next;
        if change < 1e-15 || residual < 1e-14 * scale.max(1.0) {
            break;
        }
    }
    let (fl, _) = pressure_function(p, &left, gamma);
    let (fr, _) = pressure_function(p, &right, gamma);
    residual = residual.min((fl + fr + du).abs());
    let u_star = 0.5 * (left.u + right.u) + 0.5 * (fr - fl);
    Ok(RiemannSolution { left, right, gamma, p_star: p, u_star, residual })
}

impl RiemannSolution {
    /// Whether the left (right) wave is a shock.
    pub fn shocks(&self) -> (bool, bool) {
        (self.p_star > self.left.p, self.p_star > self.right.p)
    }

    /// Solution at similarity coordinate `s = x / t`.
    pub fn sample(&self, s: f64) -> Primitive {
        let g = self.gamma;
        let (pl, pr) = (self.left, self.right);
        let ps = self.p_star;
        let us = self.u_star;
        let gm = (g - 1.0) / (g + 1.0);
        if s <= us {
            let c = pl.sound_speed(g);
            let v = pl.v;
            if ps > pl.p {
                let ratio = ps / pl.p;
                let speed = pl.u - c * ((g + 1.0) / (2.0 * g) * ratio + (g - 1.0) / (2.0 * g)).sqrt();
                if s <= speed {
                    pl
                } else {
                    Primitive::new2d(pl.rho * (ratio + gm) / (gm * ratio + 1.0), us, v, ps)
                }
            } else {
                let head = pl.u - c;
                let cs = c * (ps / pl.p).powf((g - 1.0) / (2.0 * g));
                let tail = us - cs;
                if s <= head {
                    pl
                } else if s >= tail {
                    Primitive::new2d(pl.rho * (ps / pl.p).powf(1.0 / g), us, v, ps)
                } else {
                    let u = 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * pl.u + s);
                    let cf = 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * (pl.u - s));
                    let rho = pl.rho * (cf / c).powf(2.0 / (g - 1.0));
                    Primitive::new2d(rho, u, v, pl.p * (cf / c).powf(2.0 * g / (g - 1.0)))
                }
            }
        } else {
            let c = pr.sound_speed(g);
            let v = pr.v;
            if ps > pr.p {
                let ratio = ps / pr.p;
                let speed = pr.u + c * ((g + 1.0) / (2.0 * g) * ratio + (g - 1.0) / (2.0 * g)).sqrt();
                if s >= speed {
                    pr
                } else {
                    Primitive::new2d(pr.rho * (ratio + gm) / (gm * ratio + 1.0), us, v, ps)
                }
            } else {
                let head = pr.u + c;
                let cs = c * (ps / pr.p).powf((g - 1.0) / (2.0 * g));
                let tail = us + cs;
                if s >= head {
                    pr
                } else if s <= tail {
                    Primitive::new2d(pr.rho * (ps / pr.p).powf(1.0 / g), us, v, ps)
                } else {
                    let u = 2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * pr.u + s);
                    let cf = 2.0 / (g + 1.0) * (c - 0.5 * (g - 1.0) * (pr.u - s));
                    let rho = pr.rho * (cf / c).powf(2.0 / (g - 1.0));
                    Primitive::new2d(rho, u, v, pr.p * (cf / c).powf(2.0 * g / (g - 1.0)))
                }
            }
        }
    }

    /// Similarity speeds of every wave edge, ascending.
    pub fn wave_speeds(&self) -> Vec<f64> {
        let g = self.gamma;
        let (pl, pr) = (self.left, self.right);
        let (cl, cr) = (pl.sound_speed(g), pr.sound_speed(g));
        let mut s = Vec::with_capacity(5);
        if self.p_star > pl.p {
            s.push(pl.u - cl * ((g + 1.0) / (2.0 * g) * self.p_star / pl.p + (g - 1.0) / (2.0 * g)).sqrt());
        } else {
            s.push(pl.u - cl);
            s.push(self.u_star - cl * (self.p_star / pl.p).powf((g - 1.0) / (2.0 * g)));
        }
        s.push(self.u_star);
        if self.p_star > pr.p {
            s.push(pr.u + cr * ((g + 1.0) / (2.0 * g) * self.p_star / pr.p + (g - 1.0) / (2.0 * g)).sqrt());
        } else {
            s.push(self.u_star + cr * (self.p_star / pr.p).powf((g - 1.0) / (2.0 * g)));
            s.push(pr.u + cr);
        }
        s
    }

    /// Exact average of the conservative variables over `[a, b]` at time `t`,
    /// with the initial discontinuity at `x0`.
    pub fn cell_average(&self, a: f64, b: f64, t: f64, x0: f64) -> [f64; 3] {
        const X: [f64; 5] =
            [-0.906_179_845_938_664, -0.538_469_310_105_683, 0.0, 0.538_469_310_105_683, 0.906_179_845_938_664];
        const W: [f64; 5] = [
            0.236_926_885_056_189_1,
            0.478_628_670_499_366_5,
            0.568_888_888_888_888_9,
            0.478_628_670_499_366_5,
            0.236_926_885_056_189_1,
        ];
        let state = |x: f64| -> [f64; 3] {
            let p = if t > 0.0 {
                self.sample((x - x0) / t)
            } else if x < x0 {
                self.left
            } else {
                self.right
            };
            p.to_cons(self.gamma)
        };
        let mut cuts = vec![a];
        let edges: Vec<f64> = if t > 0.0 { self.wave_speeds().iter().map(|s| x0 + s * t).collect() } else { vec![x0] };
        cuts.extend(edges.into_iter().filter(|&x| x > a && x < b));
        cuts.push(b);
        let mut acc = [0.0; 3];
        for win in cuts.windows(2) {
            let (lo, hi) = (win[0], win[1]);
            let (c, r) = (0.5 * (lo + hi), 0.5 * (hi - lo));
            for (x, w) in X.iter().zip(W) {
                let s = state(c + r * x);
                for i in 0..3 {
                    acc[i] += w * r * s[i];
                }
            }
        }
        acc.map(|v| v / (b - a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::GAMMA;

    #[test]
    fn sod_star_state() {
        let s = exact_riemann(Primitive::new(1.0, 0.0, 1.0), Primitive::new(0.125, 0.0, 0.1), GAMMA).unwrap();
        assert!((s.p_star - 0.303_130_178_050_5).abs() < 1e-10);
        assert!((s.u_star - 0.927_452_620_048_9).abs() < 1e-10);
        assert!(s.residual <= 1e-12);
        assert_eq!(s.shocks(), (false, true));
    }

    #[test]
    fn identical_states_are_trivial() {
        let p = Primitive::new(0.7, 0.3, 2.0);
        let s = exact_riemann(p, p, GAMMA).unwrap();
        assert!((s.p_star - 2.0).abs() < 1e-12 && (s.u_star - 0.3).abs() < 1e-12);
        let q = s.sample(0.1);
        assert!((q.rho - 0.7).abs() < 1e-12);
    }

    #[test]
    fn symmetric_collision_stops() {
        let s = exact_riemann(Primitive::new(1.0, 2.0, 1.0), Primitive::new(1.0, -2.0, 1.0), GAMMA).unwrap();
        assert!(s.u_star.abs() < 1e-12);
        assert_eq!(s.shocks(), (true, true));
    }

    #[test]
    fn vacuum_is_reported() {
        let r = exact_riemann(Primitive::new(1.0, -20.0, 0.1), Primitive::new(1.0, 20.0, 0.1), GAMMA);
        assert!(matches!(r, Err(Error::Vacuum)));
    }

    #[test]
    fn cell_average_of_uniform_region() {
        let s = exact_riemann(Primitive::new(1.0, 0.0, 1.0), Primitive::new(0.125, 0.0, 0.1), GAMMA).unwrap();
        let a = s.cell_average(0.0, 0.01, 0.2, 0.5);
        assert!((a[0] - 1.0).abs() < 1e-14);
        // mass in [0, 1] is conserved
        let n = 1000;
        let m: f64 = (0..n)
            .map(|i| s.cell_average(i as f64 / n as f64, (i + 1) as f64 / n as f64, 0.2, 0.5)[0] / n as f64)
            .sum();
        assert!((m - 0.5625).abs() < 1e-12);
    }
}
