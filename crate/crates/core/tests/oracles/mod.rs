//! Closed forms printed for the compact stencils, encoded literally, and
//! comparisons against the exact derivation.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cfweno::derive::poly::{int, rat, RatFn, RatPoly, Rational};
use cfweno::derive::{derive_all, derive_kernel, render_rust_tables, DerivedKernel};
use cfweno::{Layout, Order};

/// Linear combination of window data keyed by half-index `m` (`u_{j+m/2}`).
type Expr = BTreeMap<i64, RatPoly>;

fn p(c: &[i64]) -> RatPoly {
    RatPoly::new(c.iter().map(|&x| int(x)).collect())
}

fn k(n: i64, d: i64) -> RatPoly {
    RatPoly::constant(rat(n, d))
}

fn prod(fs: &[RatPoly]) -> RatPoly {
    fs.iter().fold(p(&[1]), |acc, f| &acc * f)
}

fn one_minus_v() -> RatPoly {
    p(&[1, -1])
}
fn minus_v() -> RatPoly {
    p(&[0, -1])
}
fn one_plus_v() -> RatPoly {
    p(&[1, 1])
}
fn two_minus_v() -> RatPoly {
    p(&[2, -1])
}
fn v() -> RatPoly {
    p(&[0, 1])
}

type Data = &'static [(i64, i64)];
const UJ: Data = &[(0, 1)];
const D1L: Data = &[(0, 1), (-1, -1)];
const D1R: Data = &[(1, 1), (0, -1)];
const S2L: Data = &[(-2, 1), (-1, -2), (0, 1)];
const S2C: Data = &[(-1, 1), (0, -2), (1, 1)];
const S2R: Data = &[(0, 1), (1, -2), (2, 1)];
const T3L: Data = &[(-3, -2), (-2, 5), (-1, -4), (0, 1)];
const T3C1: Data = &[(-2, -1), (-1, 4), (0, -5), (1, 2)];
const T3C2: Data = &[(-1, 2), (0, -5), (1, 4), (2, -1)];
const T3R: Data = &[(0, 1), (1, -4), (2, 5), (3, -2)];
const Q4: Data = &[(-2, -1), (-1, 6), (0, -10), (1, 6), (2, -1)];
const Q5: Data = &[(-3, 3), (-2, -10), (-1, 18), (0, -19), (1, 9), (2, -1)];
const Q6: Data = &[(-3, -3), (-2, 11), (-1, -27), (0, 38), (1, -27), (2, 11), (3, -3)];

fn expr(terms: &[(RatPoly, Data)]) -> Expr {
    let mut e = Expr::new();
    for (c, data) in terms {
        for &(m, w) in data.iter() {
            let add = c.scale(&int(w));
            let cur = e.remove(&m).unwrap_or_else(RatPoly::zero);
            let next = &cur + &add;
            if !next.is_zero() {
                e.insert(m, next);
            }
        }
    }
    e
}

fn map_terms(terms: Vec<(RatPoly, Data)>, f: &dyn Fn(&RatPoly) -> RatPoly) -> Vec<(RatPoly, Data)> {
    terms.into_iter().map(|(c, d)| (f(&c), d)).collect()
}

/// Moving-average forms (sub-stencils `0..r`, then the big stencil), as
/// printed, in term form. With `corrected`, the cubic term of the seventh-order
/// sub-stencil 1 uses `(1-v)` where `(1+v)` is printed.
fn published_interval_terms(r: usize, corrected: bool) -> Vec<Vec<(RatPoly, Data)>> {
    let a = one_minus_v;
    let sub1_cubic = || if corrected { one_minus_v() } else { one_plus_v() };
    let one = || p(&[1]);
    match r {
        2 => vec![
            vec![(one(), UJ), (a(), D1L)],
            vec![(one(), UJ), (a(), D1R)],
            vec![(one(), UJ), (a(), D1R), (prod(&[a(), minus_v()]), S2C)],
        ],
        3 => vec![
            vec![(one(), UJ), (a(), D1L), (prod(&[k(1, 2), a(), a()]), S2L)],
            vec![(one(), UJ), (a(), D1R), (prod(&[a(), minus_v()]), S2C)],
            vec![(one(), UJ), (a(), D1R), (prod(&[k(1, 2), a(), minus_v()]), S2R)],
            vec![
                (one(), UJ),
                (a(), D1R),
                (prod(&[k(1, 2), a(), minus_v()]), S2R),
                (prod(&[k(1, 4), a(), minus_v(), one_plus_v()]), T3C2),
                (prod(&[k(1, 12), a(), a(), minus_v(), one_plus_v()]), Q4),
            ],
        ],
        4 => vec![
            vec![
                (one(), UJ),
                (a(), D1L),
                (prod(&[k(1, 2), a(), a()]), S2L),
                (prod(&[k(1, 4), two_minus_v(), a(), a()]), T3L),
            ],
            vec![
                (one(), UJ),
                (a(), D1R),
                (prod(&[a(), minus_v()]), S2C),
                (prod(&[k(1, 4), a(), minus_v(), sub1_cubic()]), T3C1),
            ],
            vec![
                (one(), UJ),
                (a(), D1R),
                (prod(&[k(1, 2), a(), minus_v()]), S2R),
                (prod(&[k(1, 4), a(), minus_v(), one_plus_v()]), T3C2),
            ],
            vec![
                (one(), UJ),
                (a(), D1R),
                (prod(&[k(1, 2), a(), minus_v()]), S2R),
                (prod(&[k(1, 4), a(), minus_v(), one_plus_v()]), T3R),
            ],
            vec![
                (one(), UJ),
                (a(), D1R),
                (prod(&[k(1, 2), a(), minus_v()]), S2R),
                (prod(&[k(1, 4), a(), minus_v(), one_plus_v()]), T3C2),
                (prod(&[k(1, 12), a(), a(), minus_v(), one_plus_v()]), Q4),
                (prod(&[k(1, 36), two_minus_v(), a(), a(), minus_v(), one_plus_v()]), Q5),
                (prod(&[k(1, 108), two_minus_v(), two_minus_v(), a(), a(), minus_v(), one_plus_v()]), Q6),
            ],
        ],
        _ => unreachable!(),
    }
}

/// Foot-value forms as printed: `u_j + sum d/dv(P) * data`. The printed factor
/// `(-1-v)` is passed in so both its literal reading and the reading
/// `-(1-v)` can be evaluated. With `corrected`, the third-order big stencil
/// uses the curvature term of its own moving-average form and sub-stencil 1
/// of the seventh order carries the same `(1+v) -> (1-v)` correction as its
/// moving average.
fn published_foot_terms(r: usize, neg_one_minus_v: &dyn Fn() -> RatPoly, corrected: bool) -> Vec<Vec<(RatPoly, Data)>> {
    let a = one_minus_v;
    let sub1_cubic = || if corrected { one_minus_v() } else { one_plus_v() };
    let m = minus_v;
    let n = neg_one_minus_v;
    let d = |f: RatPoly| f.derivative();
    let one = || p(&[1]);
    let lin = || d(prod(&[n(), m()]));
    match r {
        2 => vec![
            vec![(one(), UJ), (lin(), D1L)],
            vec![(one(), UJ), (lin(), D1R)],
            if corrected {
                vec![(one(), UJ), (lin(), D1R), (d(prod(&[n(), m(), m()])), S2C)]
            } else {
                vec![(one(), UJ), (lin(), D1R), (d(prod(&[k(-1, 2), a(), m(), m()])), S2R)]
            },
        ],
        3 => vec![
            vec![(one(), UJ), (lin(), D1L), (d(prod(&[k(-1, 2), a(), a(), m()])), S2L)],
            vec![(one(), UJ), (lin(), D1R), (d(prod(&[n(), m(), m()])), S2C)],
            vec![(one(), UJ), (lin(), D1R), (d(prod(&[k(-1, 2), a(), m(), m()])), S2R)],
            vec![
                (one(), UJ),
                (lin(), D1R),
                (d(prod(&[k(-1, 2), a(), m(), m()])), S2R),
                (d(prod(&[k(-1, 4), a(), m(), m(), one_plus_v()])), T3C2),
                (d(prod(&[k(-1, 12), a(), a(), m(), m(), one_plus_v()])), Q4),
            ],
        ],
        4 => vec![
            vec![
                (one(), UJ),
                (lin(), D1L),
                (d(prod(&[k(-1, 2), a(), a(), m()])), S2L),
                (d(prod(&[k(-1, 4), two_minus_v(), a(), a(), m()])), T3L),
            ],
            vec![
                (one(), UJ),
                (lin(), D1R),
                (d(prod(&[n(), m(), m()])), S2C),
                (d(prod(&[k(-1, 4), a(), m(), m(), sub1_cubic()])), T3C1),
            ],
            vec![
                (one(), UJ),
                (lin(), D1R),
                (d(prod(&[k(-1, 2), a(), m(), m()])), S2R),
                (d(prod(&[k(-1, 4), a(), m(), m(), one_plus_v()])), T3C2),
            ],
            vec![
                (one(), UJ),
                (lin(), D1R),
                (d(prod(&[k(-1, 2), a(), m(), m()])), S2R),
                (d(prod(&[k(-1, 4), a(), m(), m(), one_plus_v()])), T3R),
            ],
            vec![
                (one(), UJ),
                (lin(), D1R),
                (d(prod(&[k(-1, 2), a(), m(), m()])), S2R),
                (d(prod(&[k(-1, 4), a(), m(), m(), one_plus_v()])), T3C2),
                (d(prod(&[k(-1, 12), a(), a(), m(), m(), one_plus_v()])), Q4),
                (d(prod(&[k(-1, 36), two_minus_v(), a(), a(), m(), m(), one_plus_v()])), Q5),
                (d(prod(&[k(-1, 108), two_minus_v(), two_minus_v(), a(), a(), m(), m(), one_plus_v()])), Q6),
            ],
        ],
        _ => unreachable!(),
    }
}

fn window_expr(row: &[RatPoly], r: usize) -> Expr {
    let mut e = Expr::new();
    for (idx, c) in row.iter().enumerate() {
        if !c.is_zero() {
            e.insert(idx as i64 - (r as i64 - 1), c.clone());
        }
    }
    e
}

fn order_of(r: usize) -> Order {
    Order::from_r(r).unwrap()
}

fn compare(label: &str, derived: &cfweno::derive::StencilCoefficients, printed: &[Expr]) -> Vec<String> {
    let r = derived.order.r();
    let mut bad = Vec::new();
    for (idx, want) in printed.iter().enumerate() {
        let got = if idx < r { window_expr(&derived.sub_on_window(idx), r) } else { window_expr(&derived.big, r) };
        if &got != want {
            let which = if idx < r { format!("sub-stencil {idx}") } else { "big stencil".into() };
            bad.push(format!("{label} r={r} {which}"));
        }
    }
    bad
}

/// Mismatches between the printed moving-average forms and the derivation.
pub fn interval_form_mismatches(corrected: bool) -> Vec<String> {
    (2..=4)
        .flat_map(|r| {
            let kern = derive_kernel(Layout::Compact, order_of(r));
            let printed: Vec<Expr> = published_interval_terms(r, corrected).iter().map(|t| expr(t)).collect();
            compare("moving average", &kern.interval_average, &printed)
        })
        .collect()
}

/// Mismatches of the derived foot values against `d/dv (v * moving average)`.
pub fn foot_is_derivative_mismatches() -> Vec<String> {
    (2..=4)
        .flat_map(|r| {
            let kern = derive_kernel(Layout::Compact, order_of(r));
            let printed: Vec<Expr> = published_interval_terms(r, true)
                .into_iter()
                .map(|t| expr(&map_terms(t, &|c| (&v() * c).derivative())))
                .collect();
            compare("foot value", &kern.foot_value, &printed)
        })
        .collect()
}

/// Mismatches of the printed foot-value forms, reading the printed factor
/// `(-1-v)` either literally or as `-(1-v)`.
pub fn foot_form_mismatches(literal: bool, corrected: bool) -> Vec<String> {
    let factor: &dyn Fn() -> RatPoly = if literal { &|| p(&[-1, -1]) } else { &|| p(&[-1, 1]) };
    (2..=4)
        .flat_map(|r| {
            let kern = derive_kernel(Layout::Compact, order_of(r));
            let printed: Vec<Expr> = published_foot_terms(r, factor, corrected).iter().map(|t| expr(t)).collect();
            compare("foot value", &kern.foot_value, &printed)
        })
        .collect()
}

fn ratfn(num: RatPoly, den: RatPoly) -> RatFn {
    RatFn::new(num, den)
}

fn same(a: &RatFn, b: &RatFn) -> bool {
    (&a.num * &b.den) == (&b.num * &a.den)
}

/// Printed moving-average linear weights of the compact layout.
fn published_average_weights(r: usize) -> Vec<RatFn> {
    let c = |n, d, fs: &[RatPoly]| ratfn(prod(&[&[k(n, d)][..], fs].concat()), p(&[1]));
    match r {
        2 => vec![c(1, 1, &[v()]), c(1, 1, &[one_minus_v()])],
        3 => vec![
            c(1, 6, &[v(), one_plus_v()]),
            c(1, 6, &[one_plus_v(), two_minus_v()]),
            c(1, 6, &[one_minus_v(), two_minus_v()]),
        ],
        4 => vec![
            c(1, 18, &[v(), one_plus_v(), one_plus_v()]),
            c(7, 54, &[one_plus_v(), one_plus_v(), two_minus_v()]),
            c(7, 54, &[one_plus_v(), two_minus_v(), two_minus_v()]),
            c(1, 18, &[one_minus_v(), two_minus_v(), two_minus_v()]),
        ],
        _ => unreachable!(),
    }
}

/// Printed foot-value linear weights of the compact layout.
fn published_foot_weights(r: usize) -> Vec<RatFn> {
    match r {
        2 => vec![ratfn(p(&[0, -2, 3]), p(&[-1, 2])), ratfn(p(&[-1, 4, -3]), p(&[-1, 2]))],
        3 => vec![
            ratfn(prod(&[k(1, 6), v(), p(&[-2, 1, 5])]), p(&[-1, 3])),
            ratfn(prod(&[k(-1, 6), p(&[-8, 31, -1, -60, 30])]), prod(&[p(&[-1, 3]), p(&[-2, 3])])),
            ratfn(prod(&[k(1, 6), p(&[-1, 1]), p(&[4, -11, 5])]), p(&[-2, 3])),
        ],
        4 => vec![
            ratfn(prod(&[k(1, 36), v(), one_plus_v(), p(&[4, -3, -12, 7])]), p(&[1, -4, 2])),
            ratfn(
                prod(&[k(1, 108), one_plus_v(), two_minus_v(), p(&[-14, 61, 4, -177, 98])]),
                prod(&[p(&[1, -4, 2]), p(&[-1, 2])]),
            ),
            ratfn(
                prod(&[k(1, 108), one_plus_v(), p(&[-2, 1]), p(&[-28, 70, 61, -215, 98])]),
                prod(&[p(&[-1, 2]), p(&[-1, 0, 2])]),
            ),
            ratfn(prod(&[k(1, 36), one_minus_v(), p(&[-2, 1]), p(&[4, -6, -9, 7])]), p(&[-1, 0, 2])),
        ],
        _ => unreachable!(),
    }
}

/// `(r, k)` of printed linear weights differing from the derivation.
pub fn weight_mismatches(foot: bool) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for r in 2..=4 {
        let kern = derive_kernel(Layout::Compact, order_of(r));
        let (printed, derived) = if foot {
            (published_foot_weights(r), &kern.foot_value_weights)
        } else {
            (published_average_weights(r), &kern.interval_average_weights)
        };
        for (kk, (a, b)) in printed.iter().zip(derived.iter()).enumerate() {
            if !same(a, b) {
                bad.push((r, kk));
            }
        }
    }
    bad
}

/// The correction of the one misprinted moving-average weight.
pub fn corrected_weight_matches() -> bool {
    let kern = derive_kernel(Layout::Compact, Order::Fifth);
    same(&kern.interval_average_weights[1], &ratfn(prod(&[k(1, 3), one_plus_v(), two_minus_v()]), p(&[1])))
}

/// Largest distance between printed and derived pole positions.
pub fn pole_error() -> f64 {
    let printed: [&[f64]; 3] = [&[0.5], &[1.0 / 3.0, 2.0 / 3.0], &[1.0 - 0.5f64.sqrt(), 0.5, 0.5f64.sqrt()]];
    let mut worst: f64 = 0.0;
    for (r, want) in (2..=4).zip(printed) {
        let kern = derive_kernel(Layout::Compact, order_of(r));
        let got = cfweno::derive::weight_poles(&kern.foot_value_weights);
        if got.len() != want.len() {
            return f64::INFINITY;
        }
        for (a, b) in got.iter().zip(want) {
            worst = worst.max((a - b).abs());
        }
    }
    worst
}

/// Printed smoothness indicators: `[k] -> [(weight, (local entry, coef))]`.
fn published_indicators(r: usize) -> Vec<Vec<(Rational, Vec<i64>)>> {
    let w = |n, d| rat(n, d);
    match r {
        2 => vec![vec![(w(4, 1), vec![-1, 1])], vec![(w(4, 1), vec![-1, 1])]],
        3 => vec![
            vec![(w(1, 4), vec![1, -6, 5]), (w(39, 4), vec![1, -2, 1])],
            vec![(w(1, 1), vec![1, 0, -1]), (w(39, 1), vec![1, -2, 1])],
            vec![(w(1, 4), vec![5, -6, 1]), (w(39, 4), vec![1, -2, 1])],
        ],
        4 => vec![
            vec![(w(1, 1), vec![-1, 3, -5, 3]), (w(39, 1), vec![-1, 3, -3, 1]), (w(781, 20), vec![-2, 5, -4, 1])],
            vec![(w(1, 1), vec![0, 1, 0, -1]), (w(39, 1), vec![0, 1, -2, 1]), (w(781, 20), vec![-1, 4, -5, 2])],
            vec![(w(1, 1), vec![1, 0, -1, 0]), (w(39, 1), vec![1, -2, 1, 0]), (w(781, 20), vec![-2, 5, -4, 1])],
            vec![(w(1, 1), vec![3, -5, 3, -1]), (w(39, 1), vec![1, -3, 3, -1]), (w(781, 20), vec![1, -4, 5, -2])],
        ],
        _ => unreachable!(),
    }
}

fn outer(w: &Rational, f: &[Rational]) -> Vec<Vec<Rational>> {
    f.iter().map(|a| f.iter().map(|b| w * a * b).collect()).collect()
}

/// `(r, k, term)` where a printed square differs from the derived one.
pub fn indicator_mismatches() -> Vec<(usize, usize, usize)> {
    let mut bad = Vec::new();
    for r in 2..=4 {
        let kern = derive_kernel(Layout::Compact, order_of(r));
        for (kk, printed) in published_indicators(r).iter().enumerate() {
            let derived = &kern.smoothness[kk].terms;
            if derived.len() != printed.len() {
                bad.push((r, kk, usize::MAX));
                continue;
            }
            for (l, ((pw, pf), (dw, df))) in printed.iter().zip(derived).enumerate() {
                let pf: Vec<Rational> = pf.iter().map(|&c| int(c)).collect();
                if outer(pw, &pf) != outer(dw, df) {
                    bad.push((r, kk, l));
                }
            }
        }
    }
    bad
}

/// The committed tables are byte-identical to a fresh rendering.
pub fn frozen_tables_match() -> bool {
    render_rust_tables(&derive_all()) == include_str!("../../src/stencil/tables.rs")
}

/// Every derived kernel, for numeric comparisons with the frozen tables.
pub fn all_kernels() -> Vec<DerivedKernel> {
    derive_all()
}

/// Whether a printed moving-average form of the seventh-order compact
/// layout reproduces the exact moving average of `x^3` at `v = 1/3`.
pub fn seventh_order_form_is_exact_for_cubics(idx: usize, corrected: bool) -> bool {
    let e = expr(&published_interval_terms(4, corrected)[idx]);
    let nu = rat(1, 3);
    let cube = |x: &Rational| x * x * x;
    let quart = |x: &Rational| x * x * x * x;
    let datum = |m: i64| -> Rational {
        if m % 2 == 0 {
            let (a, b) = (rat(m / 2 - 1, 1), rat(m / 2, 1));
            (quart(&b) - quart(&a)) / int(4)
        } else {
            cube(&(rat(m, 2) - rat(1, 2)))
        }
    };
    let value: Rational = e.iter().map(|(&m, c)| c.eval(&nu) * datum(m)).sum();
    // average of x^3 over [-nu, 0]
    value == -quart(&nu) / (int(4) * &nu)
}
