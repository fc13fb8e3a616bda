//! Functions with exact derivatives and sampled convexity classification.
//!
//! A [`FunctionModel`] is either a built-in family, differentiated by its own
//! closed-form rule, or a parsed [`Expr`] differentiated symbolically.

mod classify;
pub mod expr;
pub mod parser;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::means::uniform_points;

pub use classify::{classify, ConvexityCertificate, ConvexityClass, CERTIFICATE_ZERO, PASS_TOLERANCE};
pub use expr::{Expr, Func};
pub use parser::{ParseError, ParseErrorKind};

/// Number of probe points used before a model is evaluated on an interval.
pub const PROBE_POINTS: usize = 64;
/// Relative tolerance of the finite-difference self-consistency probe.
pub const PROBE_DERIVATIVE_RTOL: f64 = 1e-6;

/// The s-convexity order, `0 < s <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct SParameter(f64);

impl SParameter {
    pub const ONE: SParameter = SParameter(1.0);

    pub fn new(s: f64) -> Result<Self> {
        if s > 0.0 && s <= 1.0 {
            Ok(Self(s))
        } else {
            Err(Error::InvalidParameter {
                name: "s",
                value: s,
                reason: "s must lie in (0, 1]",
            })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for SParameter {
    type Error = Error;
    fn try_from(s: f64) -> Result<Self> {
        SParameter::new(s)
    }
}

impl From<SParameter> for f64 {
    fn from(s: SParameter) -> f64 {
        s.0
    }
}

/// Built-in function families with closed-form derivatives.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `coeff * x^exponent`
    Power { coeff: f64, exponent: f64 },
    /// Coefficients in ascending order: `c0 + c1 x + c2 x^2 + ...`
    Polynomial(Vec<f64>),
    /// `amplitude * sin(x)`
    Sine { amplitude: f64 },
    /// `amplitude * cos(x)`
    Cosine { amplitude: f64 },
    /// `scale * exp(rate * x)`
    Exponential { scale: f64, rate: f64 },
    /// `slope * x + intercept`
    Affine { slope: f64, intercept: f64 },
}

impl Family {
    fn eval(&self, x: f64) -> f64 {
        match self {
            Family::Power { coeff, exponent } => coeff * x.powf(*exponent),
            Family::Polynomial(c) => c.iter().rev().fold(0.0, |acc, &k| acc * x + k),
            Family::Sine { amplitude } => amplitude * x.sin(),
            Family::Cosine { amplitude } => amplitude * x.cos(),
            Family::Exponential { scale, rate } => scale * (rate * x).exp(),
            Family::Affine { slope, intercept } => slope * x + intercept,
        }
    }

    fn eval_derivative(&self, x: f64) -> f64 {
        match self {
            Family::Power { exponent, .. } if *exponent == 0.0 => 0.0,
            Family::Power { coeff, exponent } => coeff * exponent * x.powf(exponent - 1.0),
            Family::Polynomial(c) => c
                .iter()
                .enumerate()
                .skip(1)
                .rev()
                .fold(0.0, |acc, (k, &ck)| acc * x + k as f64 * ck),
            Family::Sine { amplitude } => amplitude * x.cos(),
            Family::Cosine { amplitude } => -amplitude * x.sin(),
            Family::Exponential { scale, rate } => scale * rate * (rate * x).exp(),
            Family::Affine { slope, .. } => *slope,
        }
    }

    fn derivative(&self) -> Family {
        match self {
            Family::Power { exponent, .. } if *exponent == 0.0 => Family::Affine {
                slope: 0.0,
                intercept: 0.0,
            },
            Family::Power { coeff, exponent } => Family::Power {
                coeff: coeff * exponent,
                exponent: exponent - 1.0,
            },
            Family::Polynomial(c) => Family::Polynomial(
                c.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, &ck)| k as f64 * ck)
                    .collect(),
            ),
            Family::Sine { amplitude } => Family::Cosine {
                amplitude: *amplitude,
            },
            Family::Cosine { amplitude } => Family::Sine {
                amplitude: -amplitude,
            },
            Family::Exponential { scale, rate } => Family::Exponential {
                scale: scale * rate,
                rate: *rate,
            },
            Family::Affine { slope, .. } => Family::Affine {
                slope: 0.0,
                intercept: *slope,
            },
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Power { coeff, exponent } if *coeff == 1.0 => write!(f, "x^{exponent:?}"),
            Family::Power { coeff, exponent } => write!(f, "{coeff:?} * x^{exponent:?}"),
            Family::Polynomial(c) => {
                if c.is_empty() {
                    return write!(f, "0.0");
                }
                for (k, ck) in c.iter().enumerate() {
                    if k > 0 {
                        write!(f, " + ")?;
                    }
                    match k {
                        0 => write!(f, "({ck:?})")?,
                        1 => write!(f, "({ck:?}) * x")?,
                        _ => write!(f, "({ck:?}) * x^{k}")?,
                    }
                }
                Ok(())
            }
            Family::Sine { amplitude } => write!(f, "({amplitude:?}) * sin(x)"),
            Family::Cosine { amplitude } => write!(f, "({amplitude:?}) * cos(x)"),
            Family::Exponential { scale, rate } => {
                write!(f, "({scale:?}) * exp(({rate:?}) * x)")
            }
            Family::Affine { slope, intercept } => write!(f, "({slope:?}) * x + ({intercept:?})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    Family(Family),
    Expr { expr: Expr, derivative: Expr },
}

/// An evaluable real function together with its exact derivative.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionModel {
    repr: Repr,
}

impl FunctionModel {
    pub fn from_family(family: Family) -> Self {
        Self {
            repr: Repr::Family(family),
        }
    }

    pub fn from_expr(expr: Expr) -> Result<Self> {
        let derivative = expr.derivative()?;
        Ok(Self {
            repr: Repr::Expr { expr, derivative },
        })
    }

    /// `x^s`
    pub fn power(s: f64) -> Self {
        Self::from_family(Family::Power {
            coeff: 1.0,
            exponent: s,
        })
    }

    pub fn sine() -> Self {
        Self::from_family(Family::Sine { amplitude: 1.0 })
    }

    pub fn exponential() -> Self {
        Self::from_family(Family::Exponential {
            scale: 1.0,
            rate: 1.0,
        })
    }

    /// Coefficients in ascending order.
    pub fn polynomial(coeffs: Vec<f64>) -> Self {
        Self::from_family(Family::Polynomial(coeffs))
    }

    pub fn affine(slope: f64, intercept: f64) -> Self {
        Self::from_family(Family::Affine { slope, intercept })
    }

    pub fn constant(c: f64) -> Self {
        Self::affine(0.0, c)
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_expression(text)
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        match &self.repr {
            Repr::Family(f) => f.eval(x),
            Repr::Expr { expr, .. } => expr.eval(x),
        }
    }

    #[inline]
    pub fn deriv(&self, x: f64) -> f64 {
        match &self.repr {
            Repr::Family(f) => f.eval_derivative(x),
            Repr::Expr { derivative, .. } => derivative.eval(x),
        }
    }

    /// `|f'(x)|`, checked for finiteness.
    pub fn abs_deriv(&self, x: f64) -> Result<f64> {
        let d = self.deriv(x);
        if d.is_finite() {
            Ok(d.abs())
        } else {
            Err(Error::Domain {
                what: "f'",
                x,
            })
        }
    }

    /// `f(x)`, checked for finiteness.
    pub fn value(&self, x: f64) -> Result<f64> {
        let y = self.eval(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::Domain { what: "f", x })
        }
    }

    pub fn differentiate(&self) -> Result<FunctionModel> {
        match &self.repr {
            Repr::Family(f) => Ok(Self::from_family(f.derivative())),
            Repr::Expr { derivative, .. } => Self::from_expr(derivative.clone()),
        }
    }

    pub fn family(&self) -> Option<&Family> {
        match &self.repr {
            Repr::Family(f) => Some(f),
            Repr::Expr { .. } => None,
        }
    }

    pub fn expr(&self) -> Option<&Expr> {
        match &self.repr {
            Repr::Expr { expr, .. } => Some(expr),
            Repr::Family(_) => None,
        }
    }

    /// Checks that `f` is finite on `PROBE_POINTS` points of `[a, b]`.
    pub fn probe_values(&self, a: f64, b: f64) -> Result<()> {
        for x in uniform_points(a, b, PROBE_POINTS - 1) {
            self.value(x)?;
        }
        Ok(())
    }

    /// Validates the model on `[a, b]` before any bound evaluation:
    /// `f` and `f'` finite on the probe grid, no `abs` kink strictly inside,
    /// and `f'` consistent with central finite differences of `f`.
    pub fn probe(&self, a: f64, b: f64) -> Result<()> {
        let grid = uniform_points(a, b, PROBE_POINTS - 1);
        for &x in &grid {
            self.value(x)?;
            self.abs_deriv(x)?;
        }

        if let Repr::Expr { expr, .. } = &self.repr {
            for arg in expr.kink_arguments() {
                let signs: Vec<f64> = grid.iter().map(|&x| arg.eval(x)).collect();
                for (k, w) in signs.windows(2).enumerate() {
                    let interior_zero = w[1] == 0.0 && k + 2 < grid.len();
                    if w[0] * w[1] < 0.0 || interior_zero {
                        return Err(Error::NonDifferentiable {
                            u: a,
                            v: b,
                            near: grid[k + 1],
                        });
                    }
                }
            }
        }

        let width = b - a;
        for i in 0..PROBE_POINTS {
            let x = a + width * ((i as f64 + 0.5) / PROBE_POINTS as f64);
            let h = (1e-6 * x.abs().max(1.0)).min(width / (4.0 * PROBE_POINTS as f64));
            let numeric = (self.eval(x + h) - self.eval(x - h)) / (2.0 * h);
            let exact = self.deriv(x);
            let scale = exact.abs().max(self.eval(x).abs()).max(1.0);
            if !((exact - numeric).abs() <= PROBE_DERIVATIVE_RTOL * scale) {
                return Err(Error::DerivativeMismatch {
                    x,
                    exact,
                    numeric,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for FunctionModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Family(fam) => write!(f, "{fam}"),
            Repr::Expr { expr, .. } => write!(f, "{expr}"),
        }
    }
}

/// Parses an expression in `x` into a model with a symbolic derivative.
pub fn parse_expression(text: &str) -> Result<FunctionModel> {
    let expr = parser::parse(text)?;
    FunctionModel::from_expr(expr)
}
