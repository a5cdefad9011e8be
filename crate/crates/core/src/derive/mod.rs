//! Offline derivation of every stencil table in exact rational arithmetic.
//!
//! For each sub-stencil the unique polynomial matching the mixed cell-average /
//! point-value conditions is built symbolically, then mapped onto either its
//! moving average over `[-nu, 0]` or its value at `-nu`. Because the moving
//! average of a polynomial is itself a polynomial in `nu`, no division by `nu`
//! survives into the tables.
//!
//! The derivation is the oracle for the frozen tables in [`crate::stencil`];
//! `render_rust_tables` regenerates that file and the acceptance suite checks
//! the committed copy against a fresh derivation.

pub mod poly;

use std::fmt::Write as _;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::stencil::{Family, Layout, Order, Q};
use poly::{int, rat, RatFn, RatPoly, Rational};

/// A data condition on the interpolating polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum Condition {
    /// `p(x) = u`
    Point(Rational),
    /// `integral of p over [a, b] / (b - a) = u`
    CellAverage(Rational, Rational),
}

impl Condition {
    /// The condition applied to the monomial `x^n`.
    fn monomial(&self, n: usize) -> Rational {
        match self {
            Condition::Point(x) => pow(x, n),
            Condition::CellAverage(a, b) => (pow(b, n + 1) - pow(a, n + 1)) / (int(n as i64 + 1) * (b - a)),
        }
    }
}

fn pow(x: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, _| acc * x)
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * int(k as i64))
}

/// Conditions for the full `2r-1` window.
pub fn window_conditions(layout: Layout, order: Order) -> Vec<Condition> {
    let r = order.r() as i64;
    (-(r - 1)..r)
        .map(|m| match layout {
            Layout::Compact => {
                let centre = rat(m, 2) - rat(1, 2);
                if m % 2 == 0 {
                    Condition::CellAverage(&centre - rat(1, 2), &centre + rat(1, 2))
                } else {
                    Condition::Point(centre)
                }
            }
            Layout::NodeOnly => Condition::CellAverage(int(m - 1), int(m)),
        })
        .collect()
}

/// Inverse of the interpolation matrix: `coef[n] = sum_j inv[n][j] * u_j`.
pub fn interpolation_inverse(conditions: &[Condition]) -> Vec<Vec<Rational>> {
    let n = conditions.len();
    let mut a: Vec<Vec<Rational>> = conditions
        .iter()
        .map(|c| {
            let mut row: Vec<Rational> = (0..n).map(|p| c.monomial(p)).collect();
            row.resize(2 * n, Rational::zero());
            row
        })
        .collect();
    for (i, row) in a.iter_mut().enumerate() {
        row[n + i] = Rational::one();
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("interpolation conditions are unisolvent");
        a.swap(col, pivot);
        let inv = Rational::one() / &a[col][col];
        for v in a[col].iter_mut() {
            *v = &*v * &inv;
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let factor = a[row][col].clone();
                for j in 0..2 * n {
                    let delta = &factor * &a[col][j];
                    a[row][j] = &a[row][j] - delta;
                }
            }
        }
    }
    // a[i][n + j] is inverse(i, j): rows index unknown monomial coefficients
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Image of `x^n` under the target functional, as a polynomial in `nu`.
fn target_monomial(family: Family, n: usize) -> RatPoly {
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    match family {
        Family::IntervalAverage => RatPoly::monomial(sign / int(n as i64 + 1), n),
        Family::FootValue => RatPoly::monomial(sign, n),
    }
}

/// Data coefficients, as polynomials in `nu`, of the target functional applied
/// to the polynomial interpolating `conditions`.
pub fn stencil_coefficients(conditions: &[Condition], family: Family) -> Vec<RatPoly> {
    let inv = interpolation_inverse(conditions);
    let targets: Vec<RatPoly> = (0..conditions.len()).map(|n| target_monomial(family, n)).collect();
    (0..conditions.len())
        .map(|j| inv.iter().zip(&targets).fold(RatPoly::zero(), |acc, (row, t)| &acc + &t.scale(&row[j])))
        .collect()
}

/// Coefficient tables of one layout, order and family.
#[derive(Clone, Debug, PartialEq)]
pub struct StencilCoefficients {
    pub layout: Layout,
    pub order: Order,
    pub family: Family,
    /// `[k][j]`, local entry `j` of sub-stencil `k` is window entry `k + j`.
    pub subs: Vec<Vec<RatPoly>>,
    /// `[e]` over the whole window.
    pub big: Vec<RatPoly>,
}

impl StencilCoefficients {
    /// Sub-stencil coefficients padded to the full window (zeros outside).
    pub fn sub_on_window(&self, k: usize) -> Vec<RatPoly> {
        let mut row = vec![RatPoly::zero(); self.order.window_len()];
        for (j, c) in self.subs[k].iter().enumerate() {
            row[k + j] = c.clone();
        }
        row
    }
}

pub fn derive_stencil_coefficients(layout: Layout, order: Order, family: Family) -> StencilCoefficients {
    let r = order.r();
    let window = window_conditions(layout, order);
    let subs = (0..r).map(|k| stencil_coefficients(&window[k..k + r], family)).collect();
    let big = stencil_coefficients(&window, family);
    StencilCoefficients { layout, order, family, subs, big }
}

/// Linear weights `gamma_k(nu)` with `sum_k gamma_k * sub_k == big` identically
/// in the data, solved over the field of rational functions in `nu`.
pub fn derive_linear_weights(coeffs: &StencilCoefficients) -> Vec<RatFn> {
    let r = coeffs.order.r();
    let rows = coeffs.order.window_len();
    // augmented system: rows = window entries, columns = sub-stencils + rhs
    let mut m: Vec<Vec<RatFn>> = (0..rows)
        .map(|e| {
            let mut row: Vec<RatFn> =
                (0..r)
                    .map(|k| {
                        if e >= k && e < k + r {
                            RatFn::from_poly(coeffs.subs[k][e - k].clone())
                        } else {
                            RatFn::zero()
                        }
                    })
                    .collect();
            row.push(RatFn::from_poly(coeffs.big[e].clone()));
            row
        })
        .collect();

    let mut pivot_rows = Vec::with_capacity(r);
    let mut next = 0;
    for col in 0..r {
        let p = (next..rows).find(|&i| !m[i][col].is_zero()).expect("sub-stencils span the big stencil");
        m.swap(next, p);
        let inv = RatFn::from_poly(RatPoly::constant(Rational::one())).div(&m[next][col]);
        for j in 0..=r {
            m[next][j] = m[next][j].mul(&inv);
        }
        for i in 0..rows {
            if i != next && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in 0..=r {
                    let delta = factor.mul(&m[next][j]);
                    m[i][j] = m[i][j].sub(&delta);
                }
            }
        }
        pivot_rows.push(next);
        next += 1;
    }
    for row in &m[next..] {
        assert!(row.iter().all(RatFn::is_zero), "overdetermined weight system is inconsistent");
    }
    pivot_rows.iter().map(|&i| m[i][r].clone()).collect()
}

/// Poles of any weight inside `(0, 1)`, ascending and deduplicated.
pub fn weight_poles(weights: &[RatFn]) -> Vec<f64> {
    let mut poles: Vec<f64> = weights.iter().flat_map(|w| w.den.real_roots_in(0.0, 1.0)).collect();
    poles.sort_by(f64::total_cmp);
    poles.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    poles
}

/// Smoothness indicator of one sub-stencil as `sum_m weight_m * (form_m . u)^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareSum {
    pub terms: Vec<(Rational, Vec<Rational>)>,
}

impl SquareSum {
    /// Symmetric quadratic-form matrix.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.terms.first().map_or(0, |t| t.1.len());
        let mut q = vec![vec![Rational::zero(); n]; n];
        for (w, form) in &self.terms {
            for i in 0..n {
                for j in 0..n {
                    q[i][j] = &q[i][j] + w * &form[i] * &form[j];
                }
            }
        }
        q
    }
}

/// `sum_{l=1}^{r-1} integral over cell i of (p^(l))^2` with `h = 1`, the
/// indicator evaluated at `nu = 0`, decomposed by `L D L^T` on the Taylor
/// derivatives of `p` at the cell centre.
pub fn derive_smoothness(layout: Layout, order: Order) -> Vec<SquareSum> {
    let r = order.r();
    let window = window_conditions(layout, order);
    let centre = rat(-1, 2);
    let moment = |m: usize| -> Rational {
        if m % 2 == 1 {
            Rational::zero()
        } else {
            int(2) * pow(&rat(1, 2), m + 1) / int(m as i64 + 1)
        }
    };
    let d = r - 1;
    // gram[s-1][t-1] for derivative orders s, t in 1..=r-1
    let mut gram = vec![vec![Rational::zero(); d]; d];
    for s in 1..r {
        for t in 1..r {
            let mut acc = Rational::zero();
            for l in 1..=s.min(t) {
                acc = acc + moment(s - l + t - l) / (factorial(s - l) * factorial(t - l));
            }
            gram[s - 1][t - 1] = acc;
        }
    }
    // L D L^T
    let mut lower = vec![vec![Rational::zero(); d]; d];
    let mut diag = vec![Rational::zero(); d];
    for j in 0..d {
        let mut dj = gram[j][j].clone();
        for k in 0..j {
            dj = dj - &lower[j][k] * &lower[j][k] * &diag[k];
        }
        diag[j] = dj;
        lower[j][j] = Rational::one();
        for i in j + 1..d {
            let mut v = gram[i][j].clone();
            for k in 0..j {
                v = v - &lower[i][k] * &lower[j][k] * &diag[k];
            }
            lower[i][j] = v / &diag[j];
        }
    }

    (0..r)
        .map(|k| {
            let inv = interpolation_inverse(&window[k..k + r]);
            // taylor[s-1][j] = p^(s)(centre) as a linear form in local data
            let taylor: Vec<Vec<Rational>> = (1..r)
                .map(|s| {
                    (0..r)
                        .map(|j| {
                            (s..r).fold(Rational::zero(), |acc, n| {
                                acc + &inv[n][j] * factorial(n) / factorial(n - s) * pow(&centre, n - s)
                            })
                        })
                        .collect()
                })
                .collect();
            let terms = (0..d)
                .map(|m| {
                    let form: Vec<Rational> = (0..r)
                        .map(|j| (m..d).fold(Rational::zero(), |acc, s| acc + &lower[s][m] * &taylor[s][j]))
                        .collect();
                    (diag[m].clone(), form)
                })
                .collect();
            SquareSum { terms }
        })
        .collect()
}

/// Everything derived for one layout and order.
#[derive(Clone, Debug)]
pub struct DerivedKernel {
    pub layout: Layout,
    pub order: Order,
    pub interval_average: StencilCoefficients,
    pub foot_value: StencilCoefficients,
    pub interval_average_weights: Vec<RatFn>,
    pub foot_value_weights: Vec<RatFn>,
    pub smoothness: Vec<SquareSum>,
}

impl DerivedKernel {
    pub fn coefficients(&self, family: Family) -> &StencilCoefficients {
        match family {
            Family::IntervalAverage => &self.interval_average,
            Family::FootValue => &self.foot_value,
        }
    }

    pub fn weights(&self, family: Family) -> &[RatFn] {
        match family {
            Family::IntervalAverage => &self.interval_average_weights,
            Family::FootValue => &self.foot_value_weights,
        }
    }
}

pub fn derive_kernel(layout: Layout, order: Order) -> DerivedKernel {
    let interval_average = derive_stencil_coefficients(layout, order, Family::IntervalAverage);
    let foot_value = derive_stencil_coefficients(layout, order, Family::FootValue);
    let interval_average_weights = derive_linear_weights(&interval_average);
    let foot_value_weights = derive_linear_weights(&foot_value);
    DerivedKernel {
        layout,
        order,
        smoothness: derive_smoothness(layout, order),
        interval_average,
        foot_value,
        interval_average_weights,
        foot_value_weights,
    }
}

pub fn derive_all() -> Vec<DerivedKernel> {
    Layout::ALL.iter().flat_map(|&layout| Order::ALL.iter().map(move |&order| derive_kernel(layout, order))).collect()
}

pub fn to_q(x: &Rational) -> Q {
    let n = x.numer().to_i64().expect("numerator fits in i64");
    let d = x.denom().to_i64().expect("denominator fits in i64");
    (n, d)
}

pub fn from_q(q: Q) -> Rational {
    rat(q.0, q.1)
}

fn poly_to_q(p: &RatPoly) -> Vec<Q> {
    p.coeffs().iter().map(to_q).collect()
}

fn fmt_q_slice(v: &[Q]) -> String {
    let items: Vec<String> = v.iter().map(|(n, d)| format!("({n}, {d})")).collect();
    format!("&[{}]", items.join(", "))
}

fn layout_name(layout: Layout) -> &'static str {
    match layout {
        Layout::Compact => "Compact",
        Layout::NodeOnly => "NodeOnly",
    }
}

/// Rust source of `stencil/tables.rs`.
pub fn render_rust_tables(kernels: &[DerivedKernel]) -> String {
    let mut out = String::new();
    out.push_str("// @generated by `cfweno derive-coefficients --format rust`; do not edit by hand.\n\n");
    out.push_str("use super::{FrozenFamily, FrozenKernel, FrozenRatFn, FrozenSquare, Layout};\n\n");
    let _ = writeln!(out, "pub static KERNELS: [FrozenKernel; {}] = [", kernels.len());
    for k in kernels {
        let _ = writeln!(out, "    FrozenKernel {{");
        let _ = writeln!(out, "        layout: Layout::{},", layout_name(k.layout));
        let _ = writeln!(out, "        r: {},", k.order.r());
        for family in Family::ALL {
            let name = match family {
                Family::IntervalAverage => "interval_average",
                Family::FootValue => "foot_value",
            };
            let c = k.coefficients(family);
            let w = k.weights(family);
            let _ = writeln!(out, "        {name}: FrozenFamily {{");
            let _ = writeln!(out, "            subs: &[");
            for sub in &c.subs {
                let entries: Vec<String> = sub.iter().map(|p| fmt_q_slice(&poly_to_q(p))).collect();
                let _ = writeln!(out, "                &[{}],", entries.join(", "));
            }
            let _ = writeln!(out, "            ],");
            let big: Vec<String> = c.big.iter().map(|p| fmt_q_slice(&poly_to_q(p))).collect();
            let _ = writeln!(out, "            big: &[{}],", big.join(", "));
            let _ = writeln!(out, "            weights: &[");
            for g in w {
                let _ = writeln!(
                    out,
                    "                FrozenRatFn {{ num: {}, den: {} }},",
                    fmt_q_slice(&poly_to_q(&g.num)),
                    fmt_q_slice(&poly_to_q(&g.den))
                );
            }
            let _ = writeln!(out, "            ],");
            let poles: Vec<String> = weight_poles(w).iter().map(|p| format!("{p:?}")).collect();
            let _ = writeln!(out, "            poles: &[{}],", poles.join(", "));
            let _ = writeln!(out, "        }},");
        }
        let _ = writeln!(out, "        smoothness: &[");
        for s in &k.smoothness {
            let terms: Vec<String> = s
                .terms
                .iter()
                .map(|(w, f)| {
                    let (n, d) = to_q(w);
                    let form: Vec<Q> = f.iter().map(to_q).collect();
                    format!("FrozenSquare {{ weight: ({n}, {d}), form: {} }}", fmt_q_slice(&form))
                })
                .collect();
            let _ = writeln!(out, "            &[{}],", terms.join(", "));
        }
        let _ = writeln!(out, "        ],");
        let _ = writeln!(out, "    }},");
    }
    out.push_str("];\n");
    out
}

fn entry_label(layout: Layout, order: Order, e: usize) -> String {
    let m = e as i64 - (order.r() as i64 - 1);
    match layout {
        Layout::Compact => {
            if m % 2 == 0 {
                offset_label(m / 2, false)
            } else {
                offset_label(m, true)
            }
        }
        Layout::NodeOnly => offset_label(m, false),
    }
}

fn offset_label(m: i64, half: bool) -> String {
    if half {
        let sign = if m < 0 { "-" } else { "+" };
        format!("u[j{sign}{}/2]", m.abs())
    } else if m == 0 {
        "u[j]".to_string()
    } else {
        format!("u[j{}{}]", if m < 0 { "-" } else { "+" }, m.abs())
    }
}

/// Human-readable dump of the derived tables in exact rationals (`v` is nu).
pub fn render_text(kernels: &[DerivedKernel]) -> String {
    let mut out = String::new();
    for k in kernels {
        for family in Family::ALL {
            let c = k.coefficients(family);
            let _ = writeln!(out, "== {:?} r={} {:?} ==", k.layout, k.order.r(), family);
            for (s, sub) in c.subs.iter().enumerate() {
                let _ = writeln!(out, "sub-stencil {s}:");
                for (j, p) in sub.iter().enumerate() {
                    let _ = writeln!(out, "    {:<10} {}", entry_label(k.layout, k.order, s + j), p);
                }
            }
            let _ = writeln!(out, "big stencil:");
            for (e, p) in c.big.iter().enumerate() {
                let _ = writeln!(out, "    {:<10} {}", entry_label(k.layout, k.order, e), p);
            }
            let w = k.weights(family);
            for (s, g) in w.iter().enumerate() {
                let _ = writeln!(out, "gamma_{s} = {g}");
            }
            let poles = weight_poles(w);
            if !poles.is_empty() {
                let _ = writeln!(out, "poles in (0,1): {poles:?}");
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "== {:?} r={} smoothness ==", k.layout, k.order.r());
        for (s, sum) in k.smoothness.iter().enumerate() {
            let terms: Vec<String> = sum
                .terms
                .iter()
                .map(|(w, f)| {
                    let lin: Vec<String> = f
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(j, c)| {
                            let sign = if c.is_negative() { "-" } else { "+" };
                            format!("{sign} {}*{}", c.abs(), entry_label(k.layout, k.order, s + j))
                        })
                        .collect();
                    format!("{w}*({})^2", lin.join(" "))
                })
                .collect();
            let _ = writeln!(out, "beta_{s} = {}", terms.join(" + "));
        }
        let _ = writeln!(out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(p: &RatPoly, nu: &Rational) -> Rational {
        p.eval(nu)
    }

    #[test]
    fn third_order_sub_stencil_zero_matches_closed_form() {
        // u_j + (1 - nu)(u_j - u_{j-1/2})
        let c = derive_stencil_coefficients(Layout::Compact, Order::Third, Family::IntervalAverage);
        let sub = &c.subs[0];
        assert_eq!(sub[0], RatPoly::new(vec![int(-1), int(1)]));
        assert_eq!(sub[1], RatPoly::new(vec![int(2), int(-1)]));
    }

    #[test]
    fn rows_sum_to_one() {
        for k in derive_all() {
            for family in Family::ALL {
                let c = k.coefficients(family);
                let nu = rat(3, 7);
                for sub in &c.subs {
                    let s: Rational = sub.iter().map(|p| eval(p, &nu)).sum();
                    assert_eq!(s, int(1));
                }
                let s: Rational = c.big.iter().map(|p| eval(p, &nu)).sum();
                assert_eq!(s, int(1));
            }
        }
    }

    #[test]
    fn weights_form_partition_of_unity() {
        for k in derive_all() {
            for family in Family::ALL {
                let w = k.weights(family);
                let sum = w.iter().fold(RatFn::zero(), |acc, g| acc.add(g));
                assert_eq!(sum, RatFn::from_poly(RatPoly::constant(int(1))), "{:?} {:?}", k.layout, family);
            }
        }
    }

    #[test]
    fn node_only_upwind_weights_are_classical() {
        let k = derive_kernel(Layout::NodeOnly, Order::Fifth);
        let zero = int(0);
        let g: Vec<Rational> = k.foot_value_weights.iter().map(|w| w.eval(&zero).unwrap()).collect();
        assert_eq!(g, vec![rat(1, 10), rat(6, 10), rat(3, 10)]);
    }

    #[test]
    fn compact_foot_poles_are_where_expected() {
        let k = derive_kernel(Layout::Compact, Order::Seventh);
        let poles = weight_poles(&k.foot_value_weights);
        let expected = [1.0 - 0.5f64.sqrt(), 0.5, 0.5f64.sqrt()];
        assert_eq!(poles.len(), 3);
        for (p, e) in poles.iter().zip(expected) {
            assert!((p - e).abs() < 1e-14);
        }
    }
}
