//! Special-means inequalities obtained by feeding `x^s` and `sin` to the
//! midpoint corollaries.
//!
//! Each proposition is stated in doubled form: both sides equal twice the
//! corresponding corollary's sides for the generating function.
//!
//! | id | generating `f` | parent |
//! |----|----------------|--------|
//! | 1 | `x^s` | c1 |
//! | 2 | `x^s` | c3ii_tight |
//! | 3 | `x^s` | c4iii_tight |
//! | 4 | `sin` | c5ii, `s = 1` |
//!
//! `rhs` is always the value obtained by substitution into the parent.
//! `rhs_as_printed` is the simplified closed form; the two disagree for
//! propositions 1 and 2 when `s < 1`, and `discrepancy` records that.

use std::f64::consts::PI;

use serde::Serialize;

use crate::bounds::{certify_hypothesis, BoundId, BoundParams, BoundReport, CheckOptions, HolderPair, HypothesisCheck, PowerMeanExponent};
use crate::error::{Error, Result};
use crate::funcmodel::{FunctionModel, SParameter};
use crate::means::{arithmetic_mean, generalized_log_mean, generalized_log_mean_pow, geometric_mean, MeanExponent, PositiveInterval};

const DISCREPANCY_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropositionReport {
    pub id: u8,
    pub u: f64,
    pub v: f64,
    pub s: Option<f64>,
    pub q: Option<f64>,
    pub lhs: f64,
    /// Value from substitution into the parent corollary.
    pub rhs: f64,
    pub rhs_as_printed: f64,
    pub discrepancy: bool,
    pub margin: f64,
    pub ratio: f64,
    pub holds: bool,
    pub tol: f64,
    pub hypothesis: HypothesisCheck,
}

/// Two-point means applied to `(u^k, v^k)`.
fn a_pow(iv: &PositiveInterval, k: f64) -> f64 {
    (iv.u().powf(k) + iv.v().powf(k)) / 2.0
}

// |(s-1) L_s^s + A^s|, shared by propositions 1-3
fn power_lhs(iv: &PositiveInterval, s: f64) -> f64 {
    let ls = generalized_log_mean_pow(iv, MeanExponent::new(s).expect("0 < s <= 1"));
    ((s - 1.0) * ls + arithmetic_mean(iv).powf(s)).abs()
}

#[allow(clippy::too_many_arguments)]
fn report(
    id: u8,
    iv: &PositiveInterval,
    s: Option<f64>,
    q: Option<f64>,
    lhs: f64,
    rhs: f64,
    rhs_as_printed: f64,
    opts: &CheckOptions,
    parent: BoundId,
    f: &FunctionModel,
) -> Result<PropositionReport> {
    let (margin, ratio, holds) = BoundReport::compare_sides(lhs, rhs, opts.tol);
    let hypothesis = match opts.classify_grid {
        None => HypothesisCheck::Unchecked,
        Some(grid) => {
            let params = BoundParams {
                x: None,
                s: Some(s.unwrap_or(1.0)),
                q,
                m: None,
            };
            HypothesisCheck::Certified {
                target: if parent.hypothesis().on_power {
                    "|f'|^q".to_string()
                } else {
                    "|f'|".to_string()
                },
                certificate: certify_hypothesis(parent, f, iv, &params, grid)?,
            }
        }
    };
    Ok(PropositionReport {
        id,
        u: iv.u(),
        v: iv.v(),
        s,
        q,
        lhs,
        rhs,
        rhs_as_printed,
        discrepancy: (rhs - rhs_as_printed).abs() > DISCREPANCY_RTOL * rhs.abs().max(1.0),
        margin,
        ratio,
        holds,
        tol: opts.tol,
        hypothesis,
    })
}

pub fn prop1(iv: &PositiveInterval, s: SParameter, opts: &CheckOptions) -> Result<PropositionReport> {
    let s = s.get();
    let a = arithmetic_mean(iv);
    let g = geometric_mean(iv);
    let tail = s / (s + 2.0) * a_pow(iv, s) + s * g * g / ((s + 1.0) * (s + 2.0)) * a_pow(iv, s - 2.0);
    let rhs = s / (s + 1.0) * a.powf(s) + tail;
    let printed = s / (s + 1.0) * a + tail;
    report(1, iv, Some(s), None, power_lhs(iv, s), rhs, printed, opts, BoundId::C1, &FunctionModel::power(s))
}

pub fn prop2(
    iv: &PositiveInterval,
    s: SParameter,
    hp: HolderPair,
    opts: &CheckOptions,
) -> Result<PropositionReport> {
    let (s, q) = (s.get(), hp.q());
    let lp = generalized_log_mean(iv, MeanExponent::new(hp.p())?);
    let e = (s - 1.0) * q;
    let am = arithmetic_mean(iv).powf(e);
    let brackets = (am + iv.v().powf(e)).powf(1.0 / q) + (am + iv.u().powf(e)).powf(1.0 / q);
    let rhs = lp / 2.0 * s * (1.0 / (s + 1.0)).powf(1.0 / q) * brackets;
    let printed = lp / 2.0 * (s / (s + 1.0)).powf(1.0 / q) * brackets;
    report(
        2,
        iv,
        Some(s),
        Some(q),
        power_lhs(iv, s),
        rhs,
        printed,
        opts,
        BoundId::C3iiTight,
        &FunctionModel::power(s),
    )
}

pub fn prop3(
    iv: &PositiveInterval,
    s: SParameter,
    q: PowerMeanExponent,
    opts: &CheckOptions,
) -> Result<PropositionReport> {
    let (s, q) = (s.get(), q.get());
    let (u, v) = (iv.u(), iv.v());
    let a = arithmetic_mean(iv);
    let e = (s - 1.0) * q;
    let am = a.powf(e);
    let brackets = (((s + 1.0) * u + v) * am + ((s + 1.0) * v + u) * v.powf(e)).powf(1.0 / q)
        + (((s + 1.0) * v + u) * am + ((s + 1.0) * u + v) * u.powf(e)).powf(1.0 / q);
    let rhs = 0.5 * s * a.powf(1.0 - 1.0 / q) * (1.0 / ((s + 1.0) * (s + 2.0))).powf(1.0 / q) * brackets;
    let printed =
        (s.powf(q) * a.powf(q - 1.0) / ((s + 1.0) * (s + 2.0) * 2f64.powf(q))).powf(1.0 / q) * brackets;
    report(
        3,
        iv,
        Some(s),
        Some(q),
        power_lhs(iv, s),
        rhs,
        printed,
        opts,
        BoundId::C4iiiTight,
        &FunctionModel::power(s),
    )
}

/// Requires `v < π`.
pub fn prop4(iv: &PositiveInterval, hp: HolderPair, opts: &CheckOptions) -> Result<PropositionReport> {
    let (u, v) = (iv.u(), iv.v());
    if v >= PI {
        return Err(Error::Domain {
            what: "sine proposition requires v < pi",
            x: v,
        });
    }
    let lhs = ((v * v.sin() - u * u.sin() + 2.0 * v.cos() - 2.0 * u.cos()) / (v - u)
        + arithmetic_mean(iv).sin())
    .abs();
    let lp = generalized_log_mean(iv, MeanExponent::new(hp.p())?);
    let rhs = lp / 2.0 * (((u + 3.0 * v) / 4.0).cos().abs() + ((v + 3.0 * u) / 4.0).cos().abs());
    report(4, iv, None, Some(hp.q()), lhs, rhs, rhs, opts, BoundId::C5ii, &FunctionModel::sine())
}

/// Dispatches on the proposition number with raw parameters.
pub fn proposition(
    id: u8,
    iv: &PositiveInterval,
    s: Option<f64>,
    q: Option<f64>,
    opts: &CheckOptions,
) -> Result<PropositionReport> {
    let need_s = || -> Result<SParameter> {
        SParameter::new(s.ok_or_else(|| Error::MissingParameter {
            name: "s",
            context: format!("proposition {id}"),
        })?)
    };
    let need_q = || -> Result<f64> {
        q.ok_or_else(|| Error::MissingParameter {
            name: "q",
            context: format!("proposition {id}"),
        })
    };
    match id {
        1 => prop1(iv, need_s()?, opts),
        2 => prop2(iv, need_s()?, HolderPair::new(need_q()?)?, opts),
        3 => prop3(iv, need_s()?, PowerMeanExponent::new(need_q()?)?, opts),
        4 => prop4(iv, HolderPair::new(need_q()?)?, opts),
        other => Err(Error::InvalidParameter {
            name: "id",
            value: f64::from(other),
            reason: "proposition id must be 1, 2, 3 or 4",
        }),
    }
}
