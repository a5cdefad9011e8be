//! Runtime reconstruction kernels: sub-stencil moving averages and foot values
//! as polynomials in `nu`, linear weights with pole clamping, smoothness
//! indicators and WENO weighting with the signed split for negative weights.
//!
//! Windows are always oriented upwind (left-biased for `a >= 0`); right-biased
//! reconstructions pass a mirrored window and `|nu|`.

use std::sync::OnceLock;

use crate::stencil::{frozen, q_to_f64, Family, FrozenFamily, Layout, Order, Q};

pub const MAX_R: usize = 4;
pub const MAX_WINDOW: usize = 2 * MAX_R - 1;

/// WENO regulariser.
pub const EPSILON: f64 = 1e-6;
/// Half-width of the excluded band around each foot-value weight pole.
pub const POLE_CUTOFF: f64 = 0.05;
/// Split parameter for negative linear weights.
pub const SPLIT_THETA: f64 = 3.0;

const MAX_COEF: usize = 12;

#[derive(Clone, Copy, Debug, Default)]
struct Poly {
    c: [f64; MAX_COEF],
    len: usize,
}

impl Poly {
    fn from_q(q: &[Q]) -> Self {
        assert!(q.len() <= MAX_COEF);
        let mut c = [0.0; MAX_COEF];
        for (dst, &v) in c.iter_mut().zip(q) {
            *dst = q_to_f64(v);
        }
        Self { c, len: q.len() }
    }

    #[inline(always)]
    fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for n in (0..self.len).rev() {
            acc = acc * x + self.c[n];
        }
        acc
    }
}

#[derive(Clone, Debug)]
struct FamilyKernel {
    /// `[k][n][j]`: coefficient of `nu^n` multiplying local entry `j` of sub-stencil `k`.
    subs: [[[f64; MAX_R]; MAX_R]; MAX_R],
    big: [Poly; MAX_WINDOW],
    num: [Poly; MAX_R],
    den: [Poly; MAX_R],
    poles: Vec<f64>,
    /// Whether any weight is a true rational function.
    rational: bool,
}

impl FamilyKernel {
    fn new(r: usize, f: &FrozenFamily) -> Self {
        let mut subs = [[[0.0; MAX_R]; MAX_R]; MAX_R];
        for (k, sub) in f.subs.iter().enumerate() {
            for (j, coeffs) in sub.iter().enumerate() {
                for (n, &q) in coeffs.iter().enumerate() {
                    subs[k][n][j] = q_to_f64(q);
                }
            }
        }
        let mut big = [Poly::default(); MAX_WINDOW];
        for (e, coeffs) in f.big.iter().enumerate() {
            big[e] = Poly::from_q(coeffs);
        }
        let mut num = [Poly::default(); MAX_R];
        let mut den = [Poly::default(); MAX_R];
        for k in 0..r {
            num[k] = Poly::from_q(f.weights[k].num);
            den[k] = Poly::from_q(f.weights[k].den);
        }
        let rational = f.weights.iter().any(|w| w.den.len() > 1);
        Self { subs, big, num, den, poles: f.poles.to_vec(), rational }
    }
}

/// Reconstruction kernel for one layout and order.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub layout: Layout,
    pub order: Order,
    r: usize,
    ia: FamilyKernel,
    fv: FamilyKernel,
    /// `[k][m]`: weighted squares of the smoothness indicator of sub-stencil `k`.
    smooth: [[(f64, [f64; MAX_R]); MAX_R - 1]; MAX_R],
}

/// Shared kernel for a layout and order, built once from the frozen tables.
pub fn kernel(layout: Layout, order: Order) -> &'static Kernel {
    static KERNELS: OnceLock<Vec<Kernel>> = OnceLock::new();
    let all = KERNELS.get_or_init(|| {
        Layout::ALL.iter().flat_map(|&l| Order::ALL.iter().map(move |&o| Kernel::build(l, o))).collect()
    });
    let li = Layout::ALL.iter().position(|&l| l == layout).unwrap_or(0);
    let oi = Order::ALL.iter().position(|&o| o == order).unwrap_or(0);
    &all[li * Order::ALL.len() + oi]
}

impl Kernel {
    fn build(layout: Layout, order: Order) -> Self {
        let t = frozen(layout, order);
        let r = order.r();
        let mut smooth = [[(0.0, [0.0; MAX_R]); MAX_R - 1]; MAX_R];
        for (k, squares) in t.smoothness.iter().enumerate() {
            for (m, sq) in squares.iter().enumerate() {
                let mut form = [0.0; MAX_R];
                for (j, &q) in sq.form.iter().enumerate() {
                    form[j] = q_to_f64(q);
                }
                smooth[k][m] = (q_to_f64(sq.weight), form);
            }
        }
        Self {
            layout,
            order,
            r,
            ia: FamilyKernel::new(r, &t.interval_average),
            fv: FamilyKernel::new(r, &t.foot_value),
            smooth,
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn window_len(&self) -> usize {
        2 * self.r - 1
    }

    fn family(&self, family: Family) -> &FamilyKernel {
        match family {
            Family::IntervalAverage => &self.ia,
            Family::FootValue => &self.fv,
        }
    }

    /// Poles of the foot-value weights inside `(0, 1)`.
    pub fn poles(&self, family: Family) -> &[f64] {
        &self.family(family).poles
    }

    /// Argument at which the weights of `family` are evaluated: `nu` itself, or
    /// the edge of the excluded band when `nu` falls inside it.
    #[inline]
    pub fn weight_argument(&self, family: Family, nu: f64) -> f64 {
        for &d in &self.family(family).poles {
            if (nu - d).abs() < POLE_CUTOFF {
                return if nu < d { d - POLE_CUTOFF } else { d + POLE_CUTOFF };
            }
        }
        nu
    }

    /// Whether `nu` triggers the pole cutoff for `family`.
    pub fn is_clamped(&self, family: Family, nu: f64) -> bool {
        self.weight_argument(family, nu) != nu
    }

    /// Linear weights at `|nu|`, after the pole cutoff.
    #[inline]
    pub fn linear_weights(&self, family: Family, nu: f64) -> [f64; MAX_R] {
        let f = self.family(family);
        let x = self.weight_argument(family, nu.abs());
        let mut g = [0.0; MAX_R];
        if f.rational {
            for k in 0..self.r {
                g[k] = f.num[k].eval(x) / f.den[k].eval(x);
            }
        } else {
            for k in 0..self.r {
                g[k] = f.num[k].eval(x);
            }
        }
        g
    }

    /// Sub-stencil values at `nu >= 0` for an upwind-oriented window.
    #[inline]
    pub fn sub_values(&self, family: Family, nu: f64, w: &[f64]) -> [f64; MAX_R] {
        let f = self.family(family);
        let r = self.r;
        let mut out = [0.0; MAX_R];
        for k in 0..r {
            let mut acc = 0.0;
            for n in (0..r).rev() {
                let c = &f.subs[k][n];
                let mut s = 0.0;
                for j in 0..r {
                    s += c[j] * w[k + j];
                }
                acc = acc * nu + s;
            }
            out[k] = acc;
        }
        out
    }

    /// Big-stencil (linear, full order) value at `nu >= 0`.
    pub fn big_value(&self, family: Family, nu: f64, w: &[f64]) -> f64 {
        let f = self.family(family);
        (0..self.window_len()).map(|e| f.big[e].eval(nu) * w[e]).sum()
    }

    /// Smoothness indicators of the sub-stencils.
    #[inline]
    pub fn smoothness(&self, w: &[f64]) -> [f64; MAX_R] {
        let r = self.r;
        let mut beta = [0.0; MAX_R];
        for k in 0..r {
            let mut b = 0.0;
            for m in 0..r - 1 {
                let (weight, form) = &self.smooth[k][m];
                let mut s = 0.0;
                for j in 0..r {
                    s += form[j] * w[k + j];
                }
                b += weight * s * s;
            }
            beta[k] = b;
        }
        beta
    }

    /// Nonlinearly weighted reconstruction for an upwind window at `nu >= 0`,
    /// with smoothness indicators supplied by the caller.
    #[inline]
    pub fn reconstruct_with(&self, family: Family, nu: f64, w: &[f64], beta: &[f64; MAX_R]) -> f64 {
        let gamma = self.linear_weights(family, nu);
        let omega = effective_weights(&gamma[..self.r], &beta[..self.r]);
        let p = self.sub_values(family, nu, w);
        let mut v = 0.0;
        for k in 0..self.r {
            v += omega[k] * p[k];
        }
        v
    }

    /// Nonlinear combination with precomputed linear weights.
    #[inline]
    pub fn combine(&self, family: Family, nu: f64, w: &[f64], gamma: &[f64; MAX_R], beta: &[f64; MAX_R]) -> f64 {
        let omega = effective_weights(&gamma[..self.r], &beta[..self.r]);
        let p = self.sub_values(family, nu, w);
        let mut v = 0.0;
        for k in 0..self.r {
            v += omega[k] * p[k];
        }
        v
    }

    /// Linear-weight reconstruction (no WENO weighting).
    pub fn reconstruct_linear(&self, family: Family, nu: f64, w: &[f64]) -> f64 {
        let gamma = self.linear_weights(family, nu);
        let p = self.sub_values(family, nu, w);
        (0..self.r).map(|k| gamma[k] * p[k]).sum()
    }

    pub fn reconstruct(&self, family: Family, nu: f64, w: &[f64]) -> f64 {
        let beta = self.smoothness(w);
        self.reconstruct_with(family, nu, w, &beta)
    }
}

/// Nonlinear weights for one family.
#[derive(Clone, Debug, PartialEq)]
pub enum NonlinearWeights {
    /// All linear weights non-negative: `value = sum omega_k p_k`.
    Convex { omegas: Vec<f64> },
    /// Some linear weight negative: `value = sigma_plus R+ - sigma_minus R-`.
    Split { sigma_plus: f64, omega_plus: Vec<f64>, sigma_minus: f64, omega_minus: Vec<f64> },
}

impl NonlinearWeights {
    /// Per-sub-stencil multipliers of the final combination.
    pub fn effective(&self) -> Vec<f64> {
        match self {
            NonlinearWeights::Convex { omegas } => omegas.clone(),
            NonlinearWeights::Split { sigma_plus, omega_plus, sigma_minus, omega_minus } => {
                omega_plus.iter().zip(omega_minus).map(|(p, m)| sigma_plus * p - sigma_minus * m).collect()
            }
        }
    }
}

fn normalised_alphas(gamma: &[f64], beta: &[f64], out: &mut [f64]) {
    let mut sum = 0.0;
    for k in 0..gamma.len() {
        let d = beta[k] + EPSILON;
        out[k] = gamma[k] / (d * d);
        sum += out[k];
    }
    for v in out.iter_mut().take(gamma.len()) {
        *v /= sum;
    }
}

/// WENO weights from linear weights and smoothness indicators, splitting into
/// positive and negative parts when any linear weight is negative.
pub fn nonlinear_weights(gammas: &[f64], betas: &[f64]) -> NonlinearWeights {
    let r = gammas.len();
    if gammas.iter().all(|&g| g >= 0.0) {
        let mut omegas = vec![0.0; r];
        normalised_alphas(gammas, betas, &mut omegas);
        return NonlinearWeights::Convex { omegas };
    }
    let plus: Vec<f64> = gammas.iter().map(|&g| 0.5 * (g + SPLIT_THETA * g.abs())).collect();
    let minus: Vec<f64> = plus.iter().zip(gammas).map(|(p, g)| p - g).collect();
    let sigma_plus: f64 = plus.iter().sum();
    let sigma_minus: f64 = minus.iter().sum();
    let gp: Vec<f64> = plus.iter().map(|v| v / sigma_plus).collect();
    let gm: Vec<f64> = minus.iter().map(|v| v / sigma_minus).collect();
    let mut omega_plus = vec![0.0; r];
    let mut omega_minus = vec![0.0; r];
    normalised_alphas(&gp, betas, &mut omega_plus);
    normalised_alphas(&gm, betas, &mut omega_minus);
    NonlinearWeights::Split { sigma_plus, omega_plus, sigma_minus, omega_minus }
}

/// Allocation-free form of [`nonlinear_weights`] returning the effective multipliers.
#[inline]
pub fn effective_weights(gamma: &[f64], beta: &[f64]) -> [f64; MAX_R] {
    let r = gamma.len();
    let mut out = [0.0; MAX_R];
    let mut inv = [0.0; MAX_R];
    for k in 0..r {
        let d = beta[k] + EPSILON;
        inv[k] = 1.0 / (d * d);
    }
    if gamma.iter().all(|&g| g >= 0.0) {
        let mut sum = 0.0;
        for k in 0..r {
            out[k] = gamma[k] * inv[k];
            sum += out[k];
        }
        let s = 1.0 / sum;
        for v in out.iter_mut().take(r) {
            *v *= s;
        }
        return out;
    }
    let mut plus = [0.0; MAX_R];
    let mut minus = [0.0; MAX_R];
    let (mut sp, mut sm) = (0.0, 0.0);
    for k in 0..r {
        plus[k] = 0.5 * (gamma[k] + SPLIT_THETA * gamma[k].abs());
        minus[k] = plus[k] - gamma[k];
        sp += plus[k];
        sm += minus[k];
    }
    let (mut ap, mut am) = (0.0, 0.0);
    for k in 0..r {
        plus[k] *= inv[k] / sp;
        minus[k] *= inv[k] / sm;
        ap += plus[k];
        am += minus[k];
    }
    for k in 0..r {
        out[k] = sp * plus[k] / ap - sm * minus[k] / am;
    }
    out
}

/// Reverse a window so a right-biased reconstruction reuses the left-biased kernels.
pub fn mirror_window(window: &[f64]) -> Vec<f64> {
    window.iter().rev().copied().collect()
}

/// Interval-average linear weights of the compact family.
pub fn linear_weights_interval_average(order: Order, nu: f64) -> Vec<f64> {
    let k = kernel(Layout::Compact, order);
    k.linear_weights(Family::IntervalAverage, nu)[..k.r()].to_vec()
}

/// Foot-value linear weights of the compact family, with the pole cutoff.
pub fn linear_weights_foot_value(order: Order, nu: f64) -> Vec<f64> {
    let k = kernel(Layout::Compact, order);
    k.linear_weights(Family::FootValue, nu)[..k.r()].to_vec()
}

pub fn smoothness_indicators(order: Order, window: &[f64]) -> Vec<f64> {
    let k = kernel(Layout::Compact, order);
    assert_eq!(window.len(), k.window_len());
    k.smoothness(window)[..k.r()].to_vec()
}

/// Compact interval average `(1/nu) * integral over [-nu, 0]` for an upwind window.
pub fn reconstruct_interval_average(order: Order, nu: f64, window: &[f64]) -> f64 {
    let k = kernel(Layout::Compact, order);
    assert_eq!(window.len(), k.window_len());
    k.reconstruct(Family::IntervalAverage, nu.abs(), window)
}

/// Compact foot value `p(-nu)` for an upwind window.
pub fn reconstruct_foot_value(order: Order, nu: f64, window: &[f64]) -> f64 {
    let k = kernel(Layout::Compact, order);
    assert_eq!(window.len(), k.window_len());
    k.reconstruct(Family::FootValue, nu.abs(), window)
}
