//! Adaptive Gauss–Kronrod quadrature.
//!
//! Every panel is evaluated with the embedded 7-point Gauss / 15-point Kronrod
//! pair; the Kronrod value is kept and `|K15 - G7|` is the panel error
//! estimate. The panel with the largest estimate is bisected until the summed
//! estimate meets the tolerance, so endpoint singularities such as `t^s` with
//! small `s` only refine locally.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::Serialize;
use thiserror::Error;

use crate::means::PositiveInterval;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_MAX_EVALS: usize = 100_000;

const EVALS_PER_PANEL: usize = 15;

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

// Gauss weights for the odd-indexed Kronrod nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum QuadratureError {
    #[error("invalid integration bounds [{a}, {b}]")]
    InvalidBounds { a: f64, b: f64 },
    #[error("integrand is not finite at x = {x}")]
    NonFinite { x: f64 },
    #[error("evaluation budget of {budget} exhausted (error estimate {estimate:e})")]
    BudgetExceeded { budget: usize, estimate: f64 },
    #[error("tolerance {tol:e} is below the attainable accuracy (error estimate {estimate:e})")]
    ToleranceUnreachable { tol: f64, estimate: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub n_evals: usize,
}

/// Tolerances and budget for [`Integrator::integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integrator {
    pub abs_tol: f64,
    /// Accept when the estimate is below `rel_tol * |value|` even if it
    /// exceeds `abs_tol`. Zero disables the relative criterion.
    pub rel_tol: f64,
    pub max_evals: usize,
}

impl Default for Integrator {
    fn default() -> Self {
        Self {
            abs_tol: DEFAULT_TOLERANCE,
            rel_tol: 0.0,
            max_evals: DEFAULT_MAX_EVALS,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    resabs: f64,
}

impl Panel {
    fn splittable(&self) -> bool {
        let mid = 0.5 * (self.a + self.b);
        let roundoff = 50.0 * f64::EPSILON * self.resabs;
        self.error > roundoff && mid > self.a && mid < self.b
    }
}

// Max-heap by error; ties resolved towards the leftmost panel.
impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn kronrod_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel, QuadratureError> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let sample = |x: f64| {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(QuadratureError::NonFinite { x })
        }
    };

    let fc = sample(center)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut resabs = (WGK[7] * fc).abs();
    let mut pairs = [(0.0, 0.0); 7];
    for (j, (&node, &weight)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let dx = half * node;
        let f1 = sample(center - dx)?;
        let f2 = sample(center + dx)?;
        pairs[j] = (f1, f2);
        kronrod += weight * (f1 + f2);
        resabs += weight * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    // QUADPACK scaling of |K - G| against the spread of f about its mean
    let mean = 0.5 * kronrod;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for (&(f1, f2), &weight) in pairs.iter().zip(&WGK[..7]) {
        resasc += weight * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let half = half.abs();
    let (resabs, resasc) = (resabs * half, resasc * half);
    let mut error = ((kronrod - gauss) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }

    Ok(Panel {
        a,
        b,
        value: kronrod * half,
        error,
        resabs,
    })
}

// Children whose sum disagrees with the parent by more than their joint
// estimate share the discrepancy; this catches accidental K/G agreement.
fn bisect<F: Fn(f64) -> f64>(f: &F, parent: &Panel) -> Result<[Panel; 2], QuadratureError> {
    let mid = 0.5 * (parent.a + parent.b);
    let mut left = kronrod_panel(f, parent.a, mid)?;
    let mut right = kronrod_panel(f, mid, parent.b)?;
    let jump = (parent.value - (left.value + right.value)).abs();
    if jump > left.error + right.error {
        left.error = left.error.max(0.5 * jump);
        right.error = right.error.max(0.5 * jump);
    }
    Ok([left, right])
}

fn neumaier_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in values {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

impl Integrator {
    pub fn with_tolerance(abs_tol: f64) -> Self {
        Self {
            abs_tol,
            ..Self::default()
        }
    }

    pub fn integrate<F: Fn(f64) -> f64>(
        &self,
        f: F,
        a: f64,
        b: f64,
    ) -> Result<QuadratureResult, QuadratureError> {
        if !(a.is_finite() && b.is_finite()) || a > b {
            return Err(QuadratureError::InvalidBounds { a, b });
        }
        if a == b {
            return Ok(QuadratureResult {
                value: 0.0,
                abs_error_estimate: 0.0,
                n_evals: 0,
            });
        }
        if self.max_evals < EVALS_PER_PANEL {
            return Err(QuadratureError::BudgetExceeded {
                budget: self.max_evals,
                estimate: f64::INFINITY,
            });
        }

        if self.max_evals < 3 * EVALS_PER_PANEL {
            return Err(QuadratureError::BudgetExceeded {
                budget: self.max_evals,
                estimate: f64::INFINITY,
            });
        }
        let mut n_evals = 3 * EVALS_PER_PANEL;
        let mut active = BinaryHeap::new();
        let mut frozen: Vec<Panel> = Vec::new();
        let root = kronrod_panel(&f, a, b)?;
        let [left, right] = bisect(&f, &root)?;
        active.push(left);
        active.push(right);

        loop {
            let (value, error) = totals(active.iter().chain(frozen.iter()));
            let target = self.abs_tol.max(self.rel_tol * value.abs());
            if error <= target {
                let mut panels: Vec<Panel> = active.into_vec();
                panels.extend(frozen);
                panels.sort_by(|p, q| p.a.total_cmp(&q.a));
                return Ok(QuadratureResult {
                    value: neumaier_sum(panels.iter().map(|p| p.value)),
                    abs_error_estimate: error,
                    n_evals,
                });
            }

            let Some(worst) = active.pop() else {
                return Err(QuadratureError::ToleranceUnreachable {
                    tol: target,
                    estimate: error,
                });
            };
            if !worst.splittable() {
                frozen.push(worst);
                continue;
            }
            if n_evals + 2 * EVALS_PER_PANEL > self.max_evals {
                return Err(QuadratureError::BudgetExceeded {
                    budget: self.max_evals,
                    estimate: error,
                });
            }
            let [left, right] = bisect(&f, &worst)?;
            active.push(left);
            active.push(right);
            n_evals += 2 * EVALS_PER_PANEL;
        }
    }

    /// `(1/(v-u)) ∫ᵤᵛ f`, integrated with tolerance scaled by the width.
    pub fn integral_mean<F: Fn(f64) -> f64>(
        &self,
        f: F,
        iv: &PositiveInterval,
    ) -> Result<f64, QuadratureError> {
        let w = iv.width();
        let scaled = Integrator {
            abs_tol: self.abs_tol * w,
            ..*self
        };
        Ok(scaled.integrate(f, iv.u(), iv.v())?.value / w)
    }
}

fn totals<'a, I: Iterator<Item = &'a Panel>>(panels: I) -> (f64, f64) {
    let mut value = 0.0;
    let mut error = 0.0;
    for p in panels {
        value += p.value;
        error += p.error;
    }
    (value, error)
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol` with the default budget.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    Integrator::with_tolerance(tol).integrate(f, a, b)
}

pub fn integral_mean<F: Fn(f64) -> f64>(
    f: F,
    iv: &PositiveInterval,
    tol: f64,
) -> Result<f64, QuadratureError> {
    Integrator::with_tolerance(tol).integral_mean(f, iv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn square_on_unit_interval() {
        let r = integrate(|x| x * x, 0.0, 1.0, 1e-10).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-15);
        assert!(r.abs_error_estimate <= 1e-10);
        assert!(r.n_evals <= DEFAULT_MAX_EVALS);
    }

    #[test]
    fn empty_interval_is_zero() {
        let r = integrate(|x| x.exp(), 2.5, 2.5, 1e-10).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.n_evals, 0);
    }

    #[test]
    fn chord_square_matches_log_mean_power() {
        // ∫₀¹ (t + 2(1-t))² dt = (2³ - 1³)/3
        let r = integrate(|t| (t + 2.0 * (1.0 - t)).powi(2), 0.0, 1.0, 1e-10).unwrap();
        assert!((r.value - 7.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn integral_means() {
        let iv = PositiveInterval::new(1.0, 2.0).unwrap();
        assert!((integral_mean(|x| x * x, &iv, 1e-10).unwrap() - 7.0 / 3.0).abs() < 1e-14);
        let iv = PositiveInterval::new(0.3, 4.0).unwrap();
        assert!((integral_mean(|_| 2.75, &iv, 1e-10).unwrap() - 2.75).abs() < 1e-15);
        // [0, π] is not a PositiveInterval; integrate directly
        let r = integrate(f64::sin, 0.0, PI, 1e-10).unwrap();
        assert!((r.value / PI - 2.0 / PI).abs() < 1e-12);
    }

    #[test]
    fn endpoint_power_singularity() {
        for s in [0.05, 0.2, 0.5] {
            let r = integrate(|t: f64| t.powf(s), 0.0, 1.0, 1e-12).unwrap();
            assert!((r.value - 1.0 / (s + 1.0)).abs() <= 1e-12, "s = {s}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            integrate(|x| x, 1.0, 0.0, 1e-10),
            Err(QuadratureError::InvalidBounds { .. })
        ));
        assert!(matches!(
            integrate(|x: f64| 1.0 / (x - 0.5), 0.0, 1.0, 1e-10),
            Err(QuadratureError::NonFinite { .. }) | Err(QuadratureError::BudgetExceeded { .. })
        ));
        let tiny = Integrator {
            max_evals: 40,
            ..Integrator::with_tolerance(1e-14)
        };
        assert!(matches!(
            tiny.integrate(|x: f64| (x - 0.3).abs().sqrt(), 0.0, 1.0),
            Err(QuadratureError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn deterministic() {
        let f = |x: f64| (x - 0.37).abs().sqrt() + x.sin();
        let a = integrate(f, 0.0, 2.0, 1e-9).unwrap();
        let b = integrate(f, 0.0, 2.0, 1e-9).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.n_evals, b.n_evals);
    }
}
