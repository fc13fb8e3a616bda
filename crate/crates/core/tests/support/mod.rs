//! Shared oracles and random draws for the integration tests.
//!
//! The pipeline functions evaluate each bound from the integrals that precede
//! the closed-form simplification, so they share no algebra with `bounds`.
#![allow(dead_code)]

use std::f64::consts::PI;

use hadamard_bounds::funcmodel::SParameter;
use hadamard_bounds::means::{MeanExponent, PositiveInterval};
use hadamard_bounds::{FunctionModel, Integrator};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn interval(u: f64, v: f64) -> PositiveInterval {
    PositiveInterval::new(u, v).unwrap()
}

/// Random interval with both endpoints in `(lo, hi)` and width at least `min_width`.
pub fn draw_interval(rng: &mut ChaCha8Rng, lo: f64, hi: f64, min_width: f64) -> PositiveInterval {
    loop {
        let a = rng.gen_range(lo..hi);
        let b = rng.gen_range(lo..hi);
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if v - u >= min_width {
            return interval(u, v);
        }
    }
}

pub fn draw_point(rng: &mut ChaCha8Rng, iv: &PositiveInterval) -> f64 {
    rng.gen_range(iv.u()..=iv.v())
}

pub fn draw_s(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.05..=1.0)
}

/// Tight oracle integrator.
pub fn oracle() -> Integrator {
    Integrator {
        abs_tol: 1e-13,
        rel_tol: 1e-13,
        max_evals: 400_000,
    }
}

fn integral<F: Fn(f64) -> f64>(f: F) -> f64 {
    oracle().integrate(f, 0.0, 1.0).unwrap().value
}

/// Distance in units in the last place between two finite values of one sign.
pub fn ulps(a: f64, b: f64) -> u64 {
    if a == b {
        return 0;
    }
    assert!(a.signum() == b.signum(), "{a} and {b} differ in sign");
    a.abs().to_bits().abs_diff(b.abs().to_bits())
}

pub fn rel_close(a: f64, b: f64, rtol: f64) -> bool {
    (a - b).abs() <= rtol * a.abs().max(b.abs()).max(1.0)
}

/// `∫₀¹ w(t)^p dt` with the weight running from `v` to `u`.
pub fn weight_power_integral(iv: &PositiveInterval, p: f64) -> f64 {
    let (u, v) = (iv.u(), iv.v());
    integral(|t| (t * u + (1.0 - t) * v).powf(p))
}

/// Slopes `|f'|` at `x`, `u`, `v`.
fn slopes(f: &FunctionModel, iv: &PositiveInterval, x: f64) -> (f64, f64, f64) {
    (f.deriv(x).abs(), f.deriv(iv.u()).abs(), f.deriv(iv.v()).abs())
}

fn split(iv: &PositiveInterval, x: f64) -> (f64, f64) {
    let w = (iv.v() - iv.u()).powi(2);
    ((iv.v() - x).powi(2) / w, (x - iv.u()).powi(2) / w)
}

/// Weight `h(t)` in the s-convexity majorant `h(t) g(x) + h(1-t) g(y)`.
fn h(s: f64) -> impl Fn(f64) -> f64 {
    move |t: f64| if s == 1.0 { t } else { t.powf(s) }
}

/// Direct majorant pipeline shared by t1 (s = 1) and t2.
pub fn pipeline_direct(f: &FunctionModel, iv: &PositiveInterval, x: f64, s: f64) -> f64 {
    let (u, v) = (iv.u(), iv.v());
    let (a, b) = split(iv, x);
    let (fx, fu, fv) = slopes(f, iv, x);
    let h = h(s);
    let toward_v = integral(|t| (t * u + (1.0 - t) * v) * (h(t) * fx + h(1.0 - t) * fv));
    let toward_u = integral(|t| (t * v + (1.0 - t) * u) * (h(t) * fx + h(1.0 - t) * fu));
    a * toward_v + b * toward_u
}

/// Hölder pipeline shared by t3 (s = 1) and t4.
pub fn pipeline_holder(f: &FunctionModel, iv: &PositiveInterval, x: f64, s: f64, q: f64) -> f64 {
    let p = q / (q - 1.0);
    let (u, v) = (iv.u(), iv.v());
    let (a, b) = split(iv, x);
    let (fx, fu, fv) = slopes(f, iv, x);
    let (fx, fu, fv) = (fx.powf(q), fu.powf(q), fv.powf(q));
    let h = h(s);
    let wv = integral(|t| (t * u + (1.0 - t) * v).powf(p)).powf(1.0 / p);
    let wu = integral(|t| (t * v + (1.0 - t) * u).powf(p)).powf(1.0 / p);
    let gv = integral(|t| h(t) * fx + h(1.0 - t) * fv).powf(1.0 / q);
    let gu = integral(|t| h(t) * fx + h(1.0 - t) * fu).powf(1.0 / q);
    a * wv * gv + b * wu * gu
}

/// Power-mean pipeline shared by t5 and t6 (s = 1).
pub fn pipeline_power_mean(f: &FunctionModel, iv: &PositiveInterval, x: f64, s: f64, q: f64) -> f64 {
    let (u, v) = (iv.u(), iv.v());
    let (a, b) = split(iv, x);
    let (fx, fu, fv) = slopes(f, iv, x);
    let (fx, fu, fv) = (fx.powf(q), fu.powf(q), fv.powf(q));
    let h = h(s);
    let wv = integral(|t| t * u + (1.0 - t) * v);
    let wu = integral(|t| t * v + (1.0 - t) * u);
    let gv = integral(|t| (t * u + (1.0 - t) * v) * (h(t) * fx + h(1.0 - t) * fv));
    let gu = integral(|t| (t * v + (1.0 - t) * u) * (h(t) * fx + h(1.0 - t) * fu));
    a * wv.powf(1.0 - 1.0 / q) * gv.powf(1.0 / q) + b * wu.powf(1.0 - 1.0 / q) * gu.powf(1.0 / q)
}

/// Hölder pipeline with the reversed midpoint inequality, t7 and t8 (s = 1).
///
/// `∫₀¹ |f'(tx + (1-t)v)|^q dt` is replaced by `2^(s-1) |f'((x+v)/2)|^q`.
pub fn pipeline_midpoint(f: &FunctionModel, iv: &PositiveInterval, x: f64, s: f64, q: f64) -> f64 {
    let p = q / (q - 1.0);
    let (u, v) = (iv.u(), iv.v());
    let (a, b) = split(iv, x);
    let wv = integral(|t| (t * u + (1.0 - t) * v).powf(p)).powf(1.0 / p);
    let wu = integral(|t| (t * v + (1.0 - t) * u).powf(p)).powf(1.0 / p);
    let mv = (2f64.powf(s - 1.0) * f.deriv((x + v) / 2.0).abs().powf(q)).powf(1.0 / q);
    let mu = (2f64.powf(s - 1.0) * f.deriv((x + u) / 2.0).abs().powf(q)).powf(1.0 / q);
    a * wv * mv + b * wu * mu
}

/// `∫₀¹ |f'(tx + (1-t)y)|^q dt`, the quantity the midpoint bound replaces.
pub fn slope_power_mean(f: &FunctionModel, x: f64, y: f64, q: f64) -> f64 {
    integral(|t| f.deriv(t * x + (1.0 - t) * y).abs().powf(q))
}

/// The s-convex closed form with the coefficient typo `((s+1)v + v)` on `|f'(u)|`,
/// which the pipeline oracle must reject.
pub fn t2_swapped_bracket(f: &FunctionModel, iv: &PositiveInterval, x: f64, s: f64) -> f64 {
    let (u, v) = (iv.u(), iv.v());
    let (a, b) = split(iv, x);
    let (fx, fu, fv) = slopes(f, iv, x);
    let d = (s + 1.0) * (s + 2.0);
    a * (((s + 1.0) * u + v) * fx + (u + (s + 1.0) * v) * fv) / d
        + b * ((u + (s + 1.0) * v) * fx + ((s + 1.0) * v + v) * fu) / d
}

/// Identity left side from exact antiderivatives: `F` with `F' = f`.
pub fn lemma_lhs_exact<F: Fn(f64) -> f64, G: Fn(f64) -> f64>(
    f: F,
    antiderivative: G,
    iv: &PositiveInterval,
    x: f64,
) -> f64 {
    let (u, v) = (iv.u(), iv.v());
    let boundary = ((v - x) * (v * f(v) - u * f(x)) + (x - u) * (v * f(x) - u * f(u))) / (v - u).powi(2);
    boundary - (antiderivative(v) - antiderivative(u)) / (v - u)
}

pub fn s_param(s: f64) -> SParameter {
    SParameter::new(s).unwrap()
}

pub fn mean_exp(p: f64) -> MeanExponent {
    MeanExponent::new(p).unwrap()
}

/// A draw from one of the families used for identity checks.
pub fn draw_identity_case(rng: &mut ChaCha8Rng, i: usize) -> (FunctionModel, PositiveInterval, &'static str) {
    match i % 4 {
        0 => {
            let c: Vec<f64> = vec![
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(0.1..2.0),
            ];
            (FunctionModel::polynomial(c), draw_interval(rng, 0.1, 5.0, 0.01), "cubic")
        }
        1 => (
            FunctionModel::power(draw_s(rng)),
            draw_interval(rng, 0.1, 5.0, 0.01),
            "power",
        ),
        2 => (FunctionModel::sine(), draw_interval(rng, 0.1, PI - 0.1, 0.01), "sin"),
        _ => (FunctionModel::exponential(), draw_interval(rng, 0.1, 5.0, 0.01), "exp"),
    }
}

/// Random function for the convex-class theorems: `|f'|^q` is convex and
/// non-negative, hence s-convex for every `s`.
pub fn draw_convex_slope(rng: &mut ChaCha8Rng, i: usize) -> (FunctionModel, PositiveInterval) {
    let iv = draw_interval(rng, 0.1, 5.0, 0.05);
    let f = match i % 3 {
        0 => FunctionModel::polynomial(vec![
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-3.0..3.0),
            rng.gen_range(0.1..2.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 },
        ]),
        1 => {
            // r <= 1 gives a convex decreasing slope; r >= 2 gives x^((r-1)q) with (r-1)q >= 1
            let r = if rng.gen_bool(0.5) {
                rng.gen_range(0.1..=1.0)
            } else {
                rng.gen_range(2.0..4.0)
            };
            FunctionModel::power(r)
        }
        _ => FunctionModel::parse(&format!("exp({} * x)", rng.gen_range(-1.5..1.5))).unwrap(),
    };
    (f, iv)
}

/// Random function whose `|f'|^q` is concave on the returned interval.
pub fn draw_concave_slope(rng: &mut ChaCha8Rng, i: usize, q: f64) -> (FunctionModel, PositiveInterval) {
    if i % 2 == 0 {
        // cos^q is concave where (q-1) tan^2 <= 1
        let top = (1.0 / (q - 1.0).sqrt()).atan();
        (FunctionModel::sine(), draw_interval(rng, 0.02, 0.98 * top, 0.01))
    } else {
        let r = 1.0 + rng.gen_range(0.0..=1.0) / q;
        (FunctionModel::power(r), draw_interval(rng, 0.1, 5.0, 0.05))
    }
}

/// Random expression text that stays finite and positive on `[0.5, 2]`.
pub fn positive_expr(rng: &mut ChaCha8Rng, depth: u32) -> String {
    if depth == 0 {
        return if rng.gen_bool(0.6) {
            "x".to_string()
        } else {
            format!("{:.3}", rng.gen_range(0.5..3.0))
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..7) {
        0 => format!("({} + {})", positive_expr(rng, d), positive_expr(rng, d)),
        1 => format!("({} * {})", positive_expr(rng, d), positive_expr(rng, d)),
        2 => format!("({} / {})", positive_expr(rng, d), positive_expr(rng, d)),
        3 => format!("exp(sin({}))", any_expr(rng, d)),
        4 => format!("sqrt({})", positive_expr(rng, d)),
        5 => format!("{}^{:.2}", atom(positive_expr(rng, d)), rng.gen_range(-2.0..3.0)),
        _ => format!("(2 + cos({}))", any_expr(rng, d)),
    }
}

/// Random expression text that stays finite on `[0.5, 2]`.
pub fn any_expr(rng: &mut ChaCha8Rng, depth: u32) -> String {
    if depth == 0 {
        return positive_expr(rng, 0);
    }
    let d = depth - 1;
    match rng.gen_range(0..7) {
        0 => format!("({} - {})", any_expr(rng, d), any_expr(rng, d)),
        1 => format!("sin({})", any_expr(rng, d)),
        2 => format!("cos({})", any_expr(rng, d)),
        3 => format!("ln({})", positive_expr(rng, d)),
        4 => format!("-{}", atom(any_expr(rng, d))),
        5 => format!("({} * {})", any_expr(rng, d), any_expr(rng, d)),
        _ => positive_expr(rng, depth),
    }
}

fn atom(text: String) -> String {
    if text.chars().all(|c| c.is_ascii_alphanumeric() || c == '.') || text.starts_with('(') && text.ends_with(')') {
        text
    } else {
        format!("({text})")
    }
}

/// Runs the `hadamard` binary, returning exit code, stdout and stderr.
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_hadamard"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}
