use thiserror::Error;

use crate::funcmodel::ParseError;
use crate::quadrature::QuadratureError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval [{u}, {v}]: require u < v ({reason})")]
    InvalidInterval { u: f64, v: f64, reason: &'static str },

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("missing parameter {name} for {context}")]
    MissingParameter {
        name: &'static str,
        context: String,
    },

    #[error("unknown bound id {0:?}")]
    UnknownBound(String),

    #[error("point x = {x} lies outside [{u}, {v}]")]
    PointOutsideInterval { x: f64, u: f64, v: f64 },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("unsupported construct: {0}")]
    Unsupported(String),

    #[error("{what} is not finite at x = {x}")]
    Domain { what: &'static str, x: f64 },

    #[error("function is not differentiable at a point inside [{u}, {v}] (near x = {near})")]
    NonDifferentiable { u: f64, v: f64, near: f64 },

    #[error("derivative disagrees with finite differences at x = {x}: exact {exact}, numeric {numeric}")]
    DerivativeMismatch { x: f64, exact: f64, numeric: f64 },

    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}
