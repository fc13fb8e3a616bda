//! Sampled falsification of (s-)convexity and (s-)concavity.
//!
//! The defining inequality
//!
//! ```text
//! g(t x + (1-t) y) <= w(t) g(x) + w(1-t) g(y),    w(t) = t or t^s
//! ```
//!
//! (reversed for the concave classes) is evaluated for every pair of points
//! of a uniform grid on `[u, v]` and every `t = k / grid`. The certificate
//! records the worst violation. This is evidence at a stated resolution, not
//! a proof.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::SParameter;
use crate::error::{Error, Result};
use crate::means::PositiveInterval;

/// A certificate with `max_violation` at or below this passes.
pub const PASS_TOLERANCE: f64 = 1e-9;
/// Violations at or below this count as zero; above it a counterexample is kept.
pub const CERTIFICATE_ZERO: f64 = 1e-12;

// Per-triple rounding allowance, relative to the magnitude of the terms.
const ROUNDING_SLACK: f64 = 64.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConvexityClass {
    #[serde(rename = "convex")]
    Convex,
    #[serde(rename = "concave")]
    Concave,
    #[serde(rename = "s-convex-2nd")]
    SConvex,
    #[serde(rename = "s-concave-2nd")]
    SConcave,
}

impl ConvexityClass {
    pub fn needs_s(self) -> bool {
        matches!(self, ConvexityClass::SConvex | ConvexityClass::SConcave)
    }

    pub fn is_concave(self) -> bool {
        matches!(self, ConvexityClass::Concave | ConvexityClass::SConcave)
    }

    pub fn name(self) -> &'static str {
        match self {
            ConvexityClass::Convex => "convex",
            ConvexityClass::Concave => "concave",
            ConvexityClass::SConvex => "s-convex-2nd",
            ConvexityClass::SConcave => "s-concave-2nd",
        }
    }
}

impl fmt::Display for ConvexityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ConvexityClass {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "convex" => ConvexityClass::Convex,
            "concave" => ConvexityClass::Concave,
            "s-convex" | "s-convex-2nd" => ConvexityClass::SConvex,
            "s-concave" | "s-concave-2nd" => ConvexityClass::SConcave,
            _ => return Err(format!("unknown convexity class {s:?}")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexityCertificate {
    pub class_tested: ConvexityClass,
    pub s: Option<f64>,
    pub grid_size: usize,
    pub max_violation: f64,
    /// `(x, y, t)` of the worst violation, present iff `max_violation > CERTIFICATE_ZERO`.
    pub counterexample: Option<(f64, f64, f64)>,
}

impl ConvexityCertificate {
    pub fn passes(&self) -> bool {
        self.max_violation <= PASS_TOLERANCE
    }

    pub fn status(&self) -> String {
        let verdict = if self.passes() { "pass" } else { "fail" };
        format!("{verdict} at grid {}", self.grid_size)
    }
}

#[derive(Clone, Copy)]
struct Worst {
    violation: f64,
    index: (usize, usize, usize),
}

impl Worst {
    // Larger violation wins; ties go to the lexicographically smaller triple.
    fn pick(self, other: Worst) -> Worst {
        match self.violation.total_cmp(&other.violation) {
            std::cmp::Ordering::Greater => self,
            std::cmp::Ordering::Less => other,
            std::cmp::Ordering::Equal => {
                if self.index <= other.index {
                    self
                } else {
                    other
                }
            }
        }
    }
}

/// Tests `g` against `class` on `iv` with `grid + 1` points and `grid + 1` values of `t`.
///
/// `s` is required for the s-classes and rejected otherwise; `grid >= 8`.
pub fn classify<G>(
    g: G,
    iv: &PositiveInterval,
    class: ConvexityClass,
    s: Option<SParameter>,
    grid: usize,
) -> Result<ConvexityCertificate>
where
    G: Fn(f64) -> f64 + Sync,
{
    if grid < 8 {
        return Err(Error::InvalidParameter {
            name: "grid",
            value: grid as f64,
            reason: "grid must be at least 8",
        });
    }
    let s = match (class.needs_s(), s) {
        (true, Some(s)) => Some(s.get()),
        (true, None) => {
            return Err(Error::MissingParameter {
                name: "s",
                context: format!("class {class}"),
            })
        }
        (false, Some(s)) => {
            return Err(Error::InvalidParameter {
                name: "s",
                value: s.get(),
                reason: "s is only meaningful for the s-convex and s-concave classes",
            })
        }
        (false, None) => None,
    };

    let (a, b) = (iv.u(), iv.v());
    let points = iv.grid(grid);
    let values: Vec<f64> = points.iter().map(|&x| g(x)).collect();
    let ts: Vec<f64> = (0..=grid).map(|k| k as f64 / grid as f64).collect();
    let weights: Vec<f64> = match s {
        Some(s) => ts.iter().map(|t| t.powf(s)).collect(),
        None => ts.clone(),
    };
    let concave = class.is_concave();
    let n = points.len();

    let worst = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut worst = Worst {
                violation: f64::NEG_INFINITY,
                index: (i, 0, 0),
            };
            for j in 0..n {
                for k in 0..ts.len() {
                    let t = ts[k];
                    let z = (t * points[i] + (1.0 - t) * points[j]).clamp(a, b);
                    let gz = g(z);
                    let (wx, wy) = (weights[k], weights[ts.len() - 1 - k]);
                    let chord = wx * values[i] + wy * values[j];
                    let gap = if concave { chord - gz } else { gz - chord };
                    let magnitude = gz.abs() + wx * values[i].abs() + wy * values[j].abs();
                    let violation = if gap.is_nan() {
                        f64::INFINITY
                    } else {
                        gap - ROUNDING_SLACK * magnitude
                    };
                    worst = worst.pick(Worst {
                        violation,
                        index: (i, j, k),
                    });
                }
            }
            worst
        })
        .reduce_with(Worst::pick)
        .expect("grid has at least one point");

    let max_violation = worst.violation.max(0.0);
    let counterexample = (max_violation > CERTIFICATE_ZERO).then(|| {
        let (i, j, k) = worst.index;
        (points[i], points[j], ts[k])
    });
    Ok(ConvexityCertificate {
        class_tested: class,
        s,
        grid_size: grid,
        max_violation,
        counterexample,
    })
}
