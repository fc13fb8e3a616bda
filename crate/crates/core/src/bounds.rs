//! Upper bounds on the absolute value of the two-point identity.
//!
//! Every theorem bounds the same left-hand side,
//! `|lemma1_lhs(f, iv, x)|`, by a closed form in `|f'|` at a few points:
//!
//! | id | hypothesis on `|f'|` | technique |
//! |----|----------------------|-----------|
//! | t1 | convex | direct |
//! | t2 | s-convex | direct |
//! | t3 | `|f'|^q` convex, `q > 1` | Hölder |
//! | t4 | `|f'|^q` s-convex, `q > 1` | Hölder |
//! | t5 | `|f'|^q` s-convex, `q >= 1` | power mean |
//! | t6 | `|f'|^q` convex, `q >= 1` | power mean |
//! | t7 | `|f'|^q` s-concave, `q > 1` | Hölder + midpoint |
//! | t8 | `|f'|^q` concave, `q > 1` | Hölder + midpoint |
//!
//! The corollaries fix `x` to the midpoint or the left endpoint.
//!
//! The second bracket of t2 uses `((s+1)u + v) |f'(u)|`; integrating
//! `∫₀¹ (tv + (1-t)u)(1-t)^s dt` gives exactly that coefficient over
//! `(s+1)(s+2)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::funcmodel::{classify, ConvexityCertificate, ConvexityClass, FunctionModel, SParameter};
use crate::hadamard::{lemma1_lhs, DEFAULT_COMPARE_TOLERANCE};
use crate::means::{arithmetic_mean, generalized_log_mean, MeanExponent, PositiveInterval};
use crate::quadrature::Integrator;

/// Grid used for automatic derivative bounds.
const DERIVATIVE_BOUND_GRID: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    C1,
    C2,
    C3i,
    C3iiTight,
    C3iiLoose,
    C4i,
    C4ii,
    C4iiiTight,
    C4iiiLoose,
    C5i,
    C5ii,
}

/// What a bound assumes about `g = |f'|^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hypothesis {
    pub class: ConvexityClass,
    /// `true` when the hypothesis is on `|f'|^q`, `false` for `|f'|`.
    pub on_power: bool,
}

impl BoundId {
    pub const ALL: [BoundId; 19] = [
        BoundId::T1,
        BoundId::T2,
        BoundId::T3,
        BoundId::T4,
        BoundId::T5,
        BoundId::T6,
        BoundId::T7,
        BoundId::T8,
        BoundId::C1,
        BoundId::C2,
        BoundId::C3i,
        BoundId::C3iiTight,
        BoundId::C3iiLoose,
        BoundId::C4i,
        BoundId::C4ii,
        BoundId::C4iiiTight,
        BoundId::C4iiiLoose,
        BoundId::C5i,
        BoundId::C5ii,
    ];

    pub const THEOREMS: [BoundId; 8] = [
        BoundId::T1,
        BoundId::T2,
        BoundId::T3,
        BoundId::T4,
        BoundId::T5,
        BoundId::T6,
        BoundId::T7,
        BoundId::T8,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            BoundId::T1 => "t1",
            BoundId::T2 => "t2",
            BoundId::T3 => "t3",
            BoundId::T4 => "t4",
            BoundId::T5 => "t5",
            BoundId::T6 => "t6",
            BoundId::T7 => "t7",
            BoundId::T8 => "t8",
            BoundId::C1 => "c1",
            BoundId::C2 => "c2",
            BoundId::C3i => "c3i",
            BoundId::C3iiTight => "c3ii_tight",
            BoundId::C3iiLoose => "c3ii_loose",
            BoundId::C4i => "c4i",
            BoundId::C4ii => "c4ii",
            BoundId::C4iiiTight => "c4iii_tight",
            BoundId::C4iiiLoose => "c4iii_loose",
            BoundId::C5i => "c5i",
            BoundId::C5ii => "c5ii",
        }
    }

    pub fn is_theorem(self) -> bool {
        BoundId::THEOREMS.contains(&self)
    }

    pub fn uses_s(self) -> bool {
        !matches!(
            self,
            BoundId::T1 | BoundId::T3 | BoundId::T6 | BoundId::T8 | BoundId::C4ii
        )
    }

    /// `None` when the bound takes no `q`; `Some(true)` when `q > 1` is required.
    pub fn q_strict(self) -> Option<bool> {
        match self {
            BoundId::T1 | BoundId::T2 | BoundId::C1 | BoundId::C2 | BoundId::C4ii => None,
            BoundId::T5 | BoundId::T6 | BoundId::C4i | BoundId::C4iiiTight | BoundId::C4iiiLoose => {
                Some(false)
            }
            _ => Some(true),
        }
    }

    /// Where a corollary evaluates the identity; `None` for theorems.
    pub fn fixed_point(self, iv: &PositiveInterval) -> Option<f64> {
        match self {
            BoundId::C1
            | BoundId::C2
            | BoundId::C3iiTight
            | BoundId::C3iiLoose
            | BoundId::C4iiiTight
            | BoundId::C4iiiLoose
            | BoundId::C5ii => Some(iv.midpoint()),
            BoundId::C3i | BoundId::C4i | BoundId::C4ii | BoundId::C5i => Some(iv.u()),
            _ => None,
        }
    }

    pub fn hypothesis(self) -> Hypothesis {
        use ConvexityClass::*;
        let (class, on_power) = match self {
            BoundId::T1 | BoundId::C4ii => (Convex, false),
            BoundId::T2 | BoundId::C1 | BoundId::C2 => (SConvex, false),
            BoundId::T3 | BoundId::T6 => (Convex, true),
            BoundId::T4
            | BoundId::T5
            | BoundId::C3i
            | BoundId::C3iiTight
            | BoundId::C3iiLoose
            | BoundId::C4i
            | BoundId::C4iiiTight
            | BoundId::C4iiiLoose => (SConvex, true),
            BoundId::T7 | BoundId::C5i | BoundId::C5ii => (SConcave, true),
            BoundId::T8 => (Concave, true),
        };
        Hypothesis { class, on_power }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for BoundId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

impl FromStr for BoundId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.tag() == s)
            .ok_or_else(|| Error::UnknownBound(s.to_string()))
    }
}

/// Hölder conjugates `1/p + 1/q = 1` with `q > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HolderPair {
    q: f64,
    p: f64,
}

impl HolderPair {
    pub fn new(q: f64) -> Result<Self> {
        if !(q.is_finite() && q > 1.0) {
            return Err(Error::InvalidParameter {
                name: "q",
                value: q,
                reason: "Hölder exponent requires q > 1",
            });
        }
        Ok(Self { q, p: q / (q - 1.0) })
    }

    pub fn q(self) -> f64 {
        self.q
    }

    pub fn p(self) -> f64 {
        self.p
    }

    fn log_mean(self, iv: &PositiveInterval) -> f64 {
        generalized_log_mean(iv, MeanExponent::new(self.p).expect("p > 1"))
    }
}

/// Power-mean exponent `q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerMeanExponent(f64);

impl PowerMeanExponent {
    pub fn new(q: f64) -> Result<Self> {
        if q.is_finite() && q >= 1.0 {
            Ok(Self(q))
        } else {
            Err(Error::InvalidParameter {
                name: "q",
                value: q,
                reason: "power-mean exponent requires q >= 1",
            })
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Uniform bound `M >= |f'|` on the interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivativeBound(f64);

impl DerivativeBound {
    pub fn new(m: f64) -> Result<Self> {
        if m.is_finite() && m >= 0.0 {
            Ok(Self(m))
        } else {
            Err(Error::InvalidParameter {
                name: "M",
                value: m,
                reason: "derivative bound must be finite and non-negative",
            })
        }
    }

    /// Largest `|f'|` over a uniform grid of the interval, endpoints included.
    pub fn sampled(f: &FunctionModel, iv: &PositiveInterval) -> Result<Self> {
        let mut m = 0.0f64;
        for x in iv.grid(DERIVATIVE_BOUND_GRID) {
            m = m.max(f.abs_deriv(x)?);
        }
        Ok(Self(m))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// `|f'|` at the three points a bound needs.
struct Slopes {
    at_x: f64,
    at_u: f64,
    at_v: f64,
}

impl Slopes {
    fn new(f: &FunctionModel, iv: &PositiveInterval, x: f64) -> Result<Self> {
        Ok(Self {
            at_x: f.abs_deriv(x)?,
            at_u: f.abs_deriv(iv.u())?,
            at_v: f.abs_deriv(iv.v())?,
        })
    }

    fn pow(&self, q: f64) -> Slopes {
        Slopes {
            at_x: self.at_x.powf(q),
            at_u: self.at_u.powf(q),
            at_v: self.at_v.powf(q),
        }
    }
}

// (v-x)^2/(v-u)^2 and (x-u)^2/(v-u)^2
fn weights(iv: &PositiveInterval, x: f64) -> Result<(f64, f64, f64)> {
    let x = iv.check_point(x)?;
    let (u, v) = (iv.u(), iv.v());
    Ok(((v - x) * (v - x), (x - u) * (x - u), iv.width() * iv.width()))
}

/// `|lemma1_lhs|`, the common left-hand side.
pub fn evaluate_lhs(
    f: &FunctionModel,
    iv: &PositiveInterval,
    x: f64,
    quad: &Integrator,
) -> Result<f64> {
    Ok(lemma1_lhs(f, iv, x, quad)?.abs())
}

/// `|f'|` convex.
pub fn rhs_t1(f: &FunctionModel, iv: &PositiveInterval, x: f64) -> Result<f64> {
    let (a, b, w) = weights(iv, x)?;
    let (u, v) = (iv.u(), iv.v());
    let d = Slopes::new(f, iv, x)?;
    Ok(a / (6.0 * w) * ((2.0 * u + v) * d.at_x + (u + 2.0 * v) * d.at_v)
        + b / (6.0 * w) * ((u + 2.0 * v) * d.at_x + (2.0 * u + v) * d.at_u))
}

/// `|f'|` s-convex.
pub fn rhs_t2(f: &FunctionModel, iv: &PositiveInterval, x: f64, s: SParameter) -> Result<f64> {
    let (a, b, w) = weights(iv, x)?;
    let (u, v, s) = (iv.u(), iv.v(), s.get());
    let d = Slopes::new(f, iv, x)?;
    let denom = (s + 1.0) * (s + 2.0);
    Ok(a / w * (((s + 1.0) * u + v) * d.at_x + (u + (s + 1.0) * v) * d.at_v) / denom
        + b / w * ((u + (s + 1.0) * v) * d.at_x + ((s + 1.0) * u + v) * d.at_u) / denom)
}

/// `|f'|^q` convex, Hölder with `1/p + 1/q = 1`.
pub fn rhs_t3(f: &FunctionModel, iv: &PositiveInterval, x: f64, hp: HolderPair) -> Result<f64> {
    let (a, b, w) = weights(iv, x)?;
    let q = hp.q();
    let lp = hp.log_mean(iv);
    let d = Slopes::new(f, iv, x)?.pow(q);
    Ok(a / w * lp * ((d.at_x + d.at_v) / 2.0).powf(1.0 / q)
        + b / w * lp * ((d.at_x + d.at_u) / 2.0).powf(1.0 / q))
}

/// `|f'|^q` s-convex, Hölder.
pub fn rhs_t4(
    f: &FunctionModel,
    iv: &PositiveInterval,
    x: f64,
    s: SParameter,
    hp: HolderPair,
) -> Result<f64> {
    let (a, b, w) = weights(iv, x)?;
    let (q, s) = (hp.q(), s.get());
    let lp = hp.log_mean(iv);
    let d = Slopes::new(f, iv, x)?.pow(q);
    Ok(a / w * lp * ((d.at_x + d.at_v) / (s + 1.0)).powf(1.0 / q)
        + b / w * lp * ((d.at_x + d.at_u) / (s + 1.0)).powf(1.0 / q))
}

/// `|f'|^q` s-convex, power mean with `q >= 1`.
pub fn rhs_t5(
    f: &FunctionModel,
    iv: &PositiveInterval,
    x: f64,
    s: SParameter,
    q: PowerMeanExponent,
) -> Result<f64> {
    let (a, b, w) = weights(iv, x)?;
    let (u, v, s, q) = (iv.u(), iv.v(), s.get(), q.get());
    let scale = arithmetic_mean(iv).powf(1.0 - 1.0 / q) * (1.0 / ((s + 1.0) * (s + 2.0))).powf(1.0 / q);
    let d = Slopes::new(f, iv, x)?.pow(q);
    Ok(a / w * scale * (((s + 1.0) * u + v) * d.at_x + ((s + 1.0) * v + u) * d.at_v).powf(1.0 / q)
        + b / w * scale * (((s + 1.0) * v + u) * d.at_x + ((s + 1.0) * u + v) * d.at_u).powf(1.0 / q))
}

/// `|f'|^q` convex, power mean with `q >= 1`.
pub fn rhs_t6(
    f: &FunctionModel,
    iv: &PositiveInterval,
    x: f64,
    q: PowerMeanExponent,
) -> Result<f64> {
    let (a, b, w) = weights(iv, x)?;
    let (u, v, q) = (iv.u(), iv.v(), q.get());
    let scale = arithmetic_mean(iv).powf(1.0 - 1.0 / q) * (1.0 / 6.0f64).powf(1.0 / q);
    let d = Slopes::new(f, iv, x)?.pow(q);
    Ok(a / w * scale * ((2.0 * u + v) * d.at_x + (2.0 * v + u) * d.at_v).powf(1.0 / q)
        + b / w * scale * ((2.0 * v + u) * d.at_x + (2.0 * u + v) * d.at_u).powf(1.0 / q))
}

/// `|f'|^q` s-concave, Hölder plus the reversed midpoint inequality.
pub fn rhs_t7(
    f: &FunctionModel,
    iv: &PositiveInterval,
    x: f64,
    s: SParameter,
    hp: HolderPair,
) -> Result<f64> {
    let (a, b, w) = weights(iv, x)?;
    let (u, v) = (iv.u(), iv.v());
    let scale = 2f64.powf((s.get() - 1.0) / hp.q()) * hp.log_mean(iv);
    Ok(scale / w * (a * f.abs_deriv((x + v) / 2.0)? + b * f.abs_deriv((x + u) / 2.0)?))
}

/// `|f'|^q` concave, Hölder plus the reversed midpoint inequality.
pub fn rhs_t8(f: &FunctionModel, iv: &PositiveInterval, x: f64, hp: HolderPair) -> Result<f64> {
    let (a, b, w) = weights(iv, x)?;
    let (u, v) = (iv.u(), iv.v());
    let lp = hp.log_mean(iv);
    Ok(lp / w * (a * f.abs_deriv((x + v) / 2.0)? + b * f.abs_deriv((x + u) / 2.0)?))
}

/// Raw, unvalidated bound parameters as supplied by a caller.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct BoundParams {
    pub x: Option<f64>,
    pub s: Option<f64>,
    pub q: Option<f64>,
    /// Derivative bound for `c2`; sampled from `f'` when absent.
    pub m: Option<f64>,
}

impl BoundParams {
    pub fn at(x: f64) -> Self {
        Self {
            x: Some(x),
            ..Self::default()
        }
    }

    pub fn with_s(mut self, s: f64) -> Self {
        self.s = Some(s);
        self
    }

    pub fn with_q(mut self, q: f64) -> Self {
        self.q = Some(q);
        self
    }

    pub fn with_m(mut self, m: f64) -> Self {
        self.m = Some(m);
        self
    }

    fn s_for(&self, id: BoundId) -> Result<SParameter> {
        let s = self.s.ok_or_else(|| Error::MissingParameter {
            name: "s",
            context: id.to_string(),
        })?;
        SParameter::new(s)
    }

    fn q_raw(&self, id: BoundId) -> Result<f64> {
        self.q.ok_or_else(|| Error::MissingParameter {
            name: "q",
            context: id.to_string(),
        })
    }

    fn holder_for(&self, id: BoundId) -> Result<HolderPair> {
        HolderPair::new(self.q_raw(id)?)
    }

    fn power_mean_for(&self, id: BoundId) -> Result<PowerMeanExponent> {
        PowerMeanExponent::new(self.q_raw(id)?)
    }

    fn x_for(&self, id: BoundId, iv: &PositiveInterval) -> Result<f64> {
        match id.fixed_point(iv) {
            Some(x) => Ok(x),
            None => {
                let x = self.x.ok_or_else(|| Error::MissingParameter {
                    name: "x",
                    context: id.to_string(),
                })?;
                iv.check_point(x)
            }
        }
    }
}

/// Right-hand side of a corollary in its simplified form.
pub fn rhs_corollary(
    id: BoundId,
    f: &FunctionModel,
    iv: &PositiveInterval,
    params: &BoundParams,
) -> Result<f64> {
    let (u, v) = (iv.u(), iv.v());
    let mid = iv.midpoint();
    let slope = |x: f64| f.abs_deriv(x);
    Ok(match id {
        BoundId::C1 => {
            let s = params.s_for(id)?.get();
            let (fm, fu, fv) = (slope(mid)?, slope(u)?, slope(v)?);
            let denom = (s + 1.0) * (s + 2.0);
            0.25 * ((((s + 1.0) * u + v) * fm + (u + (s + 1.0) * v) * fv) / denom)
                + 0.25 * (((u + (s + 1.0) * v) * fm + ((s + 1.0) * u + v) * fu) / denom)
        }
        BoundId::C2 => {
            let s = params.s_for(id)?.get();
            let m = match params.m {
                Some(m) => DerivativeBound::new(m)?,
                None => DerivativeBound::sampled(f, iv)?,
            };
            m.get() * (u + v) / (2.0 * (s + 1.0))
        }
        BoundId::C3i => {
            let s = params.s_for(id)?.get();
            let hp = params.holder_for(id)?;
            let q = hp.q();
            hp.log_mean(iv) * ((slope(u)?.powf(q) + slope(v)?.powf(q)) / (s + 1.0)).powf(1.0 / q)
        }
        BoundId::C3iiTight | BoundId::C3iiLoose => {
            let s = params.s_for(id)?.get();
            let hp = params.holder_for(id)?;
            let q = hp.q();
            let (fm, fu, fv) = (slope(mid)?.powf(q), slope(u)?.powf(q), slope(v)?.powf(q));
            let brackets = if id == BoundId::C3iiTight {
                ((fm + fv) / (s + 1.0)).powf(1.0 / q) + ((fm + fu) / (s + 1.0)).powf(1.0 / q)
            } else {
                (fm + fv).powf(1.0 / q) + (fm + fu).powf(1.0 / q)
            };
            hp.log_mean(iv) / 4.0 * brackets
        }
        BoundId::C4i => {
            let s = params.s_for(id)?.get();
            let q = params.power_mean_for(id)?.get();
            arithmetic_mean(iv).powf(1.0 - 1.0 / q)
                * (1.0 / ((s + 1.0) * (s + 2.0))).powf(1.0 / q)
                * (((s + 1.0) * u + v) * slope(u)?.powf(q) + ((s + 1.0) * v + u) * slope(v)?.powf(q))
                    .powf(1.0 / q)
        }
        BoundId::C4ii => ((2.0 * u + v) * slope(u)? + (2.0 * v + u) * slope(v)?) / 6.0,
        BoundId::C4iiiTight | BoundId::C4iiiLoose => {
            let s = params.s_for(id)?.get();
            let q = params.power_mean_for(id)?.get();
            let (fm, fu, fv) = (slope(mid)?.powf(q), slope(u)?.powf(q), slope(v)?.powf(q));
            let factor = if id == BoundId::C4iiiTight {
                (1.0 / ((s + 1.0) * (s + 2.0))).powf(1.0 / q)
            } else {
                1.0
            };
            0.25 * arithmetic_mean(iv).powf(1.0 - 1.0 / q)
                * factor
                * ((((s + 1.0) * u + v) * fm + ((s + 1.0) * v + u) * fv).powf(1.0 / q)
                    + (((s + 1.0) * v + u) * fm + ((s + 1.0) * u + v) * fu).powf(1.0 / q))
        }
        BoundId::C5i => {
            let s = params.s_for(id)?.get();
            let hp = params.holder_for(id)?;
            2f64.powf((s - 1.0) / hp.q()) * hp.log_mean(iv) * slope(mid)?
        }
        BoundId::C5ii => {
            let s = params.s_for(id)?.get();
            let hp = params.holder_for(id)?;
            2f64.powf((s - 1.0) / hp.q()) * hp.log_mean(iv) / 4.0
                * (slope((u + 3.0 * v) / 4.0)? + slope((v + 3.0 * u) / 4.0)?)
        }
        theorem => {
            return Err(Error::UnknownBound(format!(
                "{theorem} is a theorem, not a corollary"
            )))
        }
    })
}

/// Right-hand side for any id, theorem or corollary.
pub fn rhs(
    id: BoundId,
    f: &FunctionModel,
    iv: &PositiveInterval,
    params: &BoundParams,
) -> Result<f64> {
    if !id.is_theorem() {
        return rhs_corollary(id, f, iv, params);
    }
    let x = params.x_for(id, iv)?;
    match id {
        BoundId::T1 => rhs_t1(f, iv, x),
        BoundId::T2 => rhs_t2(f, iv, x, params.s_for(id)?),
        BoundId::T3 => rhs_t3(f, iv, x, params.holder_for(id)?),
        BoundId::T4 => rhs_t4(f, iv, x, params.s_for(id)?, params.holder_for(id)?),
        BoundId::T5 => rhs_t5(f, iv, x, params.s_for(id)?, params.power_mean_for(id)?),
        BoundId::T6 => rhs_t6(f, iv, x, params.power_mean_for(id)?),
        BoundId::T7 => rhs_t7(f, iv, x, params.s_for(id)?, params.holder_for(id)?),
        BoundId::T8 => rhs_t8(f, iv, x, params.holder_for(id)?),
        _ => unreachable!("corollaries handled above"),
    }
}

/// Sampled check of a bound's hypothesis on `|f'|` or `|f'|^q`.
pub fn certify_hypothesis(
    id: BoundId,
    f: &FunctionModel,
    iv: &PositiveInterval,
    params: &BoundParams,
    grid: usize,
) -> Result<ConvexityCertificate> {
    let hyp = id.hypothesis();
    let exponent = if hyp.on_power { params.q_raw(id)? } else { 1.0 };
    let s = if hyp.class.needs_s() {
        Some(params.s_for(id)?)
    } else {
        None
    };
    classify(|x| f.deriv(x).abs().powf(exponent), iv, hyp.class, s, grid)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum HypothesisCheck {
    Unchecked,
    Certified {
        target: String,
        certificate: ConvexityCertificate,
    },
}

impl HypothesisCheck {
    pub fn status(&self) -> String {
        match self {
            HypothesisCheck::Unchecked => "unchecked".to_string(),
            HypothesisCheck::Certified { certificate, .. } => certificate.status(),
        }
    }

    pub fn certificate(&self) -> Option<&ConvexityCertificate> {
        match self {
            HypothesisCheck::Unchecked => None,
            HypothesisCheck::Certified { certificate, .. } => Some(certificate),
        }
    }
}

/// One inequality instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub theorem_id: BoundId,
    pub u: f64,
    pub v: f64,
    pub x: f64,
    pub s: Option<f64>,
    pub q: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    /// `lhs / rhs`, defined as 0 when `rhs = 0`.
    pub ratio: f64,
    pub holds: bool,
    pub tol: f64,
    pub hypothesis: HypothesisCheck,
}

impl BoundReport {
    pub(crate) fn compare_sides(lhs: f64, rhs: f64, tol: f64) -> (f64, f64, bool) {
        let ratio = if rhs == 0.0 { 0.0 } else { lhs / rhs };
        (rhs - lhs, ratio, lhs <= rhs + tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    /// Additive slack in `lhs <= rhs + tol`.
    pub tol: f64,
    pub quad: Integrator,
    /// Grid for hypothesis certification; `None` leaves it unchecked.
    pub classify_grid: Option<usize>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_COMPARE_TOLERANCE,
            quad: Integrator::default(),
            classify_grid: None,
        }
    }
}

impl CheckOptions {
    pub fn classified(grid: usize) -> Self {
        Self {
            classify_grid: Some(grid),
            ..Self::default()
        }
    }
}

/// Evaluates one bound: probes `f`, computes both sides and, when requested,
/// certifies the hypothesis. A failed certificate is reported, not raised.
pub fn check_bound(
    id: BoundId,
    f: &FunctionModel,
    iv: &PositiveInterval,
    params: &BoundParams,
    opts: &CheckOptions,
) -> Result<BoundReport> {
    let x = params.x_for(id, iv)?;
    f.probe(iv.u(), iv.v())?;
    let rhs = rhs(id, f, iv, params)?;
    let lhs = evaluate_lhs(f, iv, x, &opts.quad)?;
    let (margin, ratio, holds) = BoundReport::compare_sides(lhs, rhs, opts.tol);

    let hypothesis = match opts.classify_grid {
        None => HypothesisCheck::Unchecked,
        Some(grid) => HypothesisCheck::Certified {
            target: if id.hypothesis().on_power {
                "|f'|^q".to_string()
            } else {
                "|f'|".to_string()
            },
            certificate: certify_hypothesis(id, f, iv, params, grid)?,
        },
    };

    Ok(BoundReport {
        theorem_id: id,
        u: iv.u(),
        v: iv.v(),
        x,
        s: if id.uses_s() { params.s } else { None },
        q: if id.q_strict().is_some() { params.q } else { None },
        lhs,
        rhs,
        margin,
        ratio,
        holds,
        tol: opts.tol,
        hypothesis,
    })
}
