//! Hermite–Hadamard baselines and the two-point identity.
//!
//! The identity's left side is a boundary expression minus the integral mean
//! of `f`; its right side is two weighted `t`-integrals of `f'`. They share
//! no evaluation path, so agreement of the two is a check on both.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::funcmodel::{FunctionModel, SParameter};
use crate::means::PositiveInterval;
use crate::quadrature::Integrator;

pub const DEFAULT_COMPARE_TOLERANCE: f64 = 1e-8;

/// Which way the Hermite–Hadamard chain is expected to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `left <= middle <= right`
    #[default]
    Convex,
    /// `left >= middle >= right`
    Concave,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassicReport {
    pub u: f64,
    pub v: f64,
    pub s: Option<f64>,
    pub direction: Direction,
    /// `2^(s-1) f((u+v)/2)`; `f((u+v)/2)` for the classical check.
    pub left: f64,
    /// Integral mean of `f` over `[u, v]`.
    pub middle: f64,
    /// `(f(u) + f(v)) / (s+1)`; `(f(u) + f(v)) / 2` for the classical check.
    pub right: f64,
    pub left_holds: bool,
    pub right_holds: bool,
    pub holds: bool,
    pub tol: f64,
}

/// Outcome of comparing both sides of the identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityReport {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub tol: f64,
    pub holds: bool,
}

// The classical checks accept u = 0.
fn check_base_interval(u: f64, v: f64) -> Result<()> {
    if !(u.is_finite() && v.is_finite()) || u < 0.0 {
        return Err(Error::InvalidInterval {
            u,
            v,
            reason: "require 0 <= u with finite endpoints",
        });
    }
    if u >= v {
        return Err(Error::InvalidInterval {
            u,
            v,
            reason: "endpoints must be strictly ordered",
        });
    }
    Ok(())
}

fn classic(
    f: &FunctionModel,
    u: f64,
    v: f64,
    s: Option<SParameter>,
    direction: Direction,
    tol: f64,
    quad: &Integrator,
) -> Result<ClassicReport> {
    check_base_interval(u, v)?;
    f.probe_values(u, v)?;

    let scale = match s {
        Some(s) => 2f64.powf(s.get() - 1.0),
        None => 1.0,
    };
    let denom = match s {
        Some(s) => s.get() + 1.0,
        None => 2.0,
    };
    let left = scale * f.value((u + v) / 2.0)?;
    let middle = quad.integrate(|x| f.eval(x), u, v)?.value / (v - u);
    let right = (f.value(u)? + f.value(v)?) / denom;

    let (left_holds, right_holds) = match direction {
        Direction::Convex => (left <= middle + tol, middle <= right + tol),
        Direction::Concave => (left + tol >= middle, middle + tol >= right),
    };
    Ok(ClassicReport {
        u,
        v,
        s: s.map(SParameter::get),
        direction,
        left,
        middle,
        right,
        left_holds,
        right_holds,
        holds: left_holds && right_holds,
        tol,
    })
}

/// Classical chain `f((u+v)/2) <= mean(f) <= (f(u)+f(v))/2`, or its reverse.
pub fn hh_check(
    f: &FunctionModel,
    u: f64,
    v: f64,
    direction: Direction,
    tol: f64,
    quad: &Integrator,
) -> Result<ClassicReport> {
    classic(f, u, v, None, direction, tol, quad)
}

/// s-convex chain `2^(s-1) f((u+v)/2) <= mean(f) <= (f(u)+f(v))/(s+1)`, or its reverse.
///
/// With `s = 1` the triple is bit-identical to [`hh_check`].
pub fn shh_check(
    f: &FunctionModel,
    u: f64,
    v: f64,
    s: SParameter,
    direction: Direction,
    tol: f64,
    quad: &Integrator,
) -> Result<ClassicReport> {
    classic(f, u, v, Some(s), direction, tol, quad)
}

/// Boundary expression minus the integral mean of `f`.
pub fn lemma1_lhs(
    f: &FunctionModel,
    iv: &PositiveInterval,
    x: f64,
    quad: &Integrator,
) -> Result<f64> {
    let x = iv.check_point(x)?;
    let (u, v) = (iv.u(), iv.v());
    let (fu, fv, fx) = (f.value(u)?, f.value(v)?, f.value(x)?);
    let boundary =
        ((v - x) * (v * fv - u * fx) + (x - u) * (v * fx - u * fu)) / (iv.width() * iv.width());
    let mean = quad.integral_mean(|y| f.eval(y), iv)?;
    Ok(boundary - mean)
}

/// Weighted `t`-integrals of `f'`.
pub fn lemma1_rhs(
    f: &FunctionModel,
    iv: &PositiveInterval,
    x: f64,
    quad: &Integrator,
) -> Result<f64> {
    let x = iv.check_point(x)?;
    let (u, v) = (iv.u(), iv.v());
    let w2 = iv.width() * iv.width();
    let (toward_v, toward_u) = rayon::join(
        || {
            quad.integrate(
                |t| (t * u + (1.0 - t) * v) * f.deriv(t * x + (1.0 - t) * v),
                0.0,
                1.0,
            )
        },
        || {
            quad.integrate(
                |t| (t * v + (1.0 - t) * u) * f.deriv(t * x + (1.0 - t) * u),
                0.0,
                1.0,
            )
        },
    );
    Ok((v - x).powi(2) / w2 * toward_v?.value + (x - u).powi(2) / w2 * toward_u?.value)
}

/// Evaluates both sides of the identity at `x` and compares them.
pub fn verify_identity(
    f: &FunctionModel,
    iv: &PositiveInterval,
    x: f64,
    tol: f64,
    quad: &Integrator,
) -> Result<IdentityReport> {
    iv.check_point(x)?;
    f.probe(iv.u(), iv.v())?;
    let lhs = lemma1_lhs(f, iv, x, quad)?;
    let rhs = lemma1_rhs(f, iv, x, quad)?;
    let residual = (lhs - rhs).abs();
    Ok(IdentityReport {
        lhs,
        rhs,
        residual,
        tol,
        holds: residual <= tol,
    })
}
