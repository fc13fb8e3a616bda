//! Numerical verification of Hadamard-type integral inequalities.
//!
//! The crate evaluates, for a differentiable `f` on an interval `0 < u < v`,
//! the two-point identity
//!
//! ```text
//! [(v-x)(v f(v) - u f(x)) + (x-u)(v f(x) - u f(u))] / (v-u)^2 - mean(f)
//!   = (v-x)^2/(v-u)^2 ∫₀¹ (tu+(1-t)v) f'(tx+(1-t)v) dt
//!   + (x-u)^2/(v-u)^2 ∫₀¹ (tv+(1-t)u) f'(tx+(1-t)u) dt
//! ```
//!
//! together with the family of upper bounds on its absolute value that follow
//! when `|f'|` (or `|f'|^q`) is convex, s-convex, concave or s-concave, the
//! classical Hermite–Hadamard baselines, and the closed-form special-means
//! inequalities obtained from `f(x) = x^s` and `f(x) = sin x`.
//!
//! Module map:
//!
//! - [`means`]: arithmetic, geometric, identric and generalized logarithmic means.
//! - [`funcmodel`]: functions with exact derivatives, an expression parser,
//!   symbolic differentiation and a sampled (s-)convexity classifier.
//! - [`quadrature`]: adaptive Gauss–Kronrod integration.
//! - [`hadamard`]: Hermite–Hadamard checks and the two-route identity.
//! - [`bounds`]: theorem and corollary right-hand sides, [`bounds::check_bound`].
//! - [`props`]: special-means propositions.
//! - [`cli`]: the `hadamard` command-line front end.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod cli;
pub mod error;
pub mod funcmodel;
pub mod hadamard;
pub mod means;
pub mod props;
pub mod quadrature;

pub use bounds::{check_bound, BoundId, BoundParams, BoundReport, CheckOptions};
pub use error::{Error, Result};
pub use funcmodel::{
    classify, parse_expression, ConvexityCertificate, ConvexityClass, FunctionModel, SParameter,
};
pub use hadamard::{verify_identity, IdentityReport};
pub use means::{MeanExponent, PositiveInterval};
pub use quadrature::{integral_mean, integrate, Integrator, QuadratureResult};
