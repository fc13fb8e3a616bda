//! Parameter sweeps over one bound.
//!
//! Rows are produced in lexicographic order over `(u, v, s, q, x)`. Rows are
//! evaluated in parallel and collected in that order, so output is identical
//! across runs and thread counts.

use std::io::Write;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::format::{fmt_num, fmt_opt};
use crate::bounds::{check_bound, BoundId, BoundParams, BoundReport, CheckOptions};
use crate::error::{Error, Result};
use crate::funcmodel::FunctionModel;
use crate::means::{uniform_points, PositiveInterval};

/// Values taken by one swept parameter.
///
/// Parsed from `a` (single value), `a,b,c` (list) or `start:stop:count`
/// (inclusive, evenly spaced).
#[derive(Debug, Clone, PartialEq)]
pub struct Axis(Vec<f64>);

impl Axis {
    pub fn single(x: f64) -> Self {
        Axis(vec![x])
    }

    pub fn list(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter {
                name: "axis",
                value: 0.0,
                reason: "axis must have at least one value",
            });
        }
        Ok(Axis(values))
    }

    pub fn range(start: f64, stop: f64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidParameter {
                name: "axis",
                value: 0.0,
                reason: "axis count must be at least 1",
            });
        }
        if count == 1 {
            return Ok(Axis(vec![start]));
        }
        Ok(Axis(
            (0..count)
                .map(|i| {
                    if i + 1 == count {
                        stop
                    } else {
                        let tau = i as f64 / (count - 1) as f64;
                        start * (1.0 - tau) + stop * tau
                    }
                })
                .collect(),
        ))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        let number = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| format!("invalid number {:?} in axis {text:?}", s.trim()))
        };
        let parts: Vec<&str> = text.split(':').collect();
        let axis = match parts.as_slice() {
            [start, stop, count] => {
                let count = count
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| format!("invalid count {:?} in axis {text:?}", count.trim()))?;
                Axis::range(number(start)?, number(stop)?, count)
            }
            [list] => Axis::list(list.split(',').map(number).collect::<std::result::Result<_, _>>()?),
            _ => return Err(format!("axis {text:?} must be a value, a list or start:stop:count")),
        };
        axis.map_err(|e| e.to_string())
    }
}

/// How `x` is chosen inside each interval.
#[derive(Debug, Clone, PartialEq)]
pub enum XAxis {
    /// `count` evenly spaced points from `u` to `v`; one point means `u`.
    Uniform(usize),
    /// Fixed values; each must lie in every swept interval.
    Values(Axis),
    /// `count` sorted uniform draws from a seeded generator.
    Random { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub u: Axis,
    pub v: Axis,
    pub x: XAxis,
    pub s: Option<Axis>,
    pub q: Option<Axis>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub theorem_id: BoundId,
    pub u: f64,
    pub v: f64,
    pub x: f64,
    pub s: Option<f64>,
    pub q: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub ratio: f64,
    pub holds: bool,
    pub hypothesis_status: String,
}

pub const CSV_HEADER: [&str; 12] = [
    "theorem_id",
    "u",
    "v",
    "x",
    "s",
    "q",
    "lhs",
    "rhs",
    "margin",
    "ratio",
    "holds",
    "hypothesis_status",
];

impl From<BoundReport> for SweepRow {
    fn from(r: BoundReport) -> Self {
        SweepRow {
            theorem_id: r.theorem_id,
            u: r.u,
            v: r.v,
            x: r.x,
            s: r.s,
            q: r.q,
            lhs: r.lhs,
            rhs: r.rhs,
            margin: r.margin,
            ratio: r.ratio,
            holds: r.holds,
            hypothesis_status: r.hypothesis.status(),
        }
    }
}

impl SweepRow {
    pub fn csv_record(&self) -> [String; 12] {
        [
            self.theorem_id.to_string(),
            fmt_num(self.u),
            fmt_num(self.v),
            fmt_num(self.x),
            fmt_opt(self.s),
            fmt_opt(self.q),
            fmt_num(self.lhs),
            fmt_num(self.rhs),
            fmt_num(self.margin),
            fmt_num(self.ratio),
            self.holds.to_string(),
            self.hypothesis_status.clone(),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepSummary {
    pub rows: usize,
    pub failures: usize,
    pub ratio_min: f64,
    pub ratio_mean: f64,
    pub ratio_max: f64,
}

impl SweepSummary {
    pub fn of(rows: &[SweepRow]) -> Self {
        let n = rows.len();
        let ratios = rows.iter().map(|r| r.ratio);
        SweepSummary {
            rows: n,
            failures: rows.iter().filter(|r| !r.holds).count(),
            ratio_min: ratios.clone().fold(f64::INFINITY, f64::min),
            ratio_mean: ratios.clone().sum::<f64>() / n as f64,
            ratio_max: ratios.fold(f64::NEG_INFINITY, f64::max),
        }
    }
}

fn x_points(x: &XAxis, id: BoundId, iv: &PositiveInterval, interval_index: usize) -> Vec<f64> {
    if let Some(fixed) = id.fixed_point(iv) {
        return vec![fixed];
    }
    match x {
        XAxis::Uniform(1) => vec![iv.u()],
        XAxis::Uniform(n) => uniform_points(iv.u(), iv.v(), n - 1),
        XAxis::Values(axis) => axis.values().to_vec(),
        XAxis::Random { count, seed } => {
            // one stream per interval, independent of evaluation order
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            rng.set_stream(interval_index as u64);
            let mut xs: Vec<f64> = (0..*count).map(|_| rng.gen_range(iv.u()..=iv.v())).collect();
            xs.sort_by(f64::total_cmp);
            xs
        }
    }
}

/// Every grid point, in output order.
pub fn grid_points(id: BoundId, grid: &SweepGrid) -> Result<Vec<(PositiveInterval, BoundParams)>> {
    if matches!(grid.x, XAxis::Uniform(0) | XAxis::Random { count: 0, .. }) {
        return Err(Error::InvalidParameter {
            name: "x",
            value: 0.0,
            reason: "x axis count must be at least 1",
        });
    }
    let s_values: Vec<Option<f64>> = match (&grid.s, id.uses_s()) {
        (Some(axis), true) => axis.values().iter().copied().map(Some).collect(),
        (None, true) => {
            return Err(Error::MissingParameter {
                name: "s",
                context: format!("sweep of {id}"),
            })
        }
        (_, false) => vec![None],
    };
    let q_values: Vec<Option<f64>> = match (&grid.q, id.q_strict()) {
        (Some(axis), Some(_)) => axis.values().iter().copied().map(Some).collect(),
        (None, Some(_)) => {
            return Err(Error::MissingParameter {
                name: "q",
                context: format!("sweep of {id}"),
            })
        }
        (_, None) => vec![None],
    };

    let mut points = Vec::new();
    let mut interval_index = 0;
    for &u in grid.u.values() {
        for &v in grid.v.values() {
            let iv = PositiveInterval::new(u, v)?;
            let xs = x_points(&grid.x, id, &iv, interval_index);
            interval_index += 1;
            for &s in &s_values {
                for &q in &q_values {
                    for &x in &xs {
                        points.push((
                            iv,
                            BoundParams {
                                x: Some(x),
                                s,
                                q,
                                m: None,
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(points)
}

/// Evaluates every grid point. The first failing point in output order is
/// returned as the error.
pub fn run_sweep(
    id: BoundId,
    f: &FunctionModel,
    grid: &SweepGrid,
    opts: &CheckOptions,
) -> Result<Vec<SweepRow>> {
    let points = grid_points(id, grid)?;
    let results: Vec<Result<SweepRow>> = points
        .par_iter()
        .map(|(iv, params)| check_bound(id, f, iv, params, opts).map(SweepRow::from))
        .collect();
    results.into_iter().collect()
}

pub fn write_csv<W: Write>(out: W, rows: &[SweepRow]) -> std::io::Result<()> {
    let mut out = out;
    writeln!(out, "# hadamard-bounds {}", env!("CARGO_PKG_VERSION"))?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.csv_record())?;
    }
    w.flush()
}
