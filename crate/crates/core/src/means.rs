//! Special means of two positive reals.
//!
//! All means take a [`PositiveInterval`], so `0 < u < v` holds by construction.
//! `u = v` is rejected rather than extended by continuity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered pair `0 < u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawInterval")]
pub struct PositiveInterval {
    u: f64,
    v: f64,
}

#[derive(Deserialize)]
struct RawInterval {
    u: f64,
    v: f64,
}

impl TryFrom<RawInterval> for PositiveInterval {
    type Error = Error;

    fn try_from(raw: RawInterval) -> Result<Self> {
        PositiveInterval::new(raw.u, raw.v)
    }
}

impl PositiveInterval {
    pub fn new(u: f64, v: f64) -> Result<Self> {
        if !u.is_finite() || !v.is_finite() {
            return Err(Error::InvalidInterval {
                u,
                v,
                reason: "endpoints must be finite",
            });
        }
        if u <= 0.0 {
            return Err(Error::InvalidInterval {
                u,
                v,
                reason: "u must be positive",
            });
        }
        if u >= v {
            return Err(Error::InvalidInterval {
                u,
                v,
                reason: "endpoints must be strictly ordered",
            });
        }
        Ok(Self { u, v })
    }

    #[inline]
    pub fn u(&self) -> f64 {
        self.u
    }

    #[inline]
    pub fn v(&self) -> f64 {
        self.v
    }

    #[inline]
    pub fn width(&self) -> f64 {
        self.v - self.u
    }

    #[inline]
    pub fn midpoint(&self) -> f64 {
        arithmetic_mean(self)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.u <= x && x <= self.v
    }

    /// Validates that `x` lies in the closed interval.
    pub fn check_point(&self, x: f64) -> Result<f64> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::PointOutsideInterval {
                x,
                u: self.u,
                v: self.v,
            })
        }
    }

    /// `n + 1` uniformly spaced points from `u` to `v` inclusive.
    ///
    /// Point `i` is computed as `u + (v - u) * (i / n)` so the grid for `2n`
    /// contains the grid for `n` bit-for-bit.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        uniform_points(self.u, self.v, n)
    }
}

pub(crate) fn uniform_points(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 0 {
        return vec![a];
    }
    let w = b - a;
    (0..=n)
        .map(|i| {
            if i == n {
                b
            } else {
                a + w * (i as f64 / n as f64)
            }
        })
        .collect()
}

/// Exponent of the generalized logarithmic mean; `p` is finite and not `-1` or `0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeanExponent(f64);

impl MeanExponent {
    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() {
            return Err(Error::InvalidParameter {
                name: "p",
                value: p,
                reason: "must be finite",
            });
        }
        if p == 0.0 || p == -1.0 {
            return Err(Error::InvalidParameter {
                name: "p",
                value: p,
                reason: "the generalized logarithmic mean excludes p = -1 and p = 0",
            });
        }
        Ok(Self(p))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// `A(u, v) = (u + v) / 2`.
pub fn arithmetic_mean(iv: &PositiveInterval) -> f64 {
    (iv.u + iv.v) / 2.0
}

/// `G(u, v) = sqrt(u v)`.
pub fn geometric_mean(iv: &PositiveInterval) -> f64 {
    (iv.u * iv.v).sqrt()
}

/// `I(u, v) = (1/e) (v^v / u^u)^(1/(v-u))`, evaluated in log space.
pub fn identric_mean(iv: &PositiveInterval) -> f64 {
    let (u, v) = (iv.u, iv.v);
    ((v * v.ln() - u * u.ln()) / (v - u) - 1.0).exp()
}

/// `L_p(u, v) = ((v^(p+1) - u^(p+1)) / ((p+1)(v-u)))^(1/p)`.
pub fn generalized_log_mean(iv: &PositiveInterval, p: MeanExponent) -> f64 {
    generalized_log_mean_pow(iv, p).powf(1.0 / p.get())
}

/// `L_p^p(u, v)`, the integral mean of `x^p` over `[u, v]`.
pub fn generalized_log_mean_pow(iv: &PositiveInterval, p: MeanExponent) -> f64 {
    let n = p.get() + 1.0;
    power_difference_quotient(iv, n) / n
}

/// `(v^n - u^n) / (v - u)` without catastrophic cancellation for narrow intervals.
fn power_difference_quotient(iv: &PositiveInterval, n: f64) -> f64 {
    let (u, v) = (iv.u, iv.v);
    if n.fract() == 0.0 && (1.0..=64.0).contains(&n) {
        // v^n - u^n = (v - u) * sum_k v^(n-1-k) u^k
        let n = n as i32;
        let mut sum = 0.0;
        for k in 0..n {
            sum += v.powi(n - 1 - k) * u.powi(k);
        }
        return sum;
    }
    let d = v - u;
    u.powf(n) * (n * (d / u).ln_1p()).exp_m1() / d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(u: f64, v: f64) -> PositiveInterval {
        PositiveInterval::new(u, v).unwrap()
    }

    #[test]
    fn arithmetic_and_geometric_values() {
        assert_eq!(arithmetic_mean(&iv(2.0, 4.0)), 3.0);
        assert_eq!(arithmetic_mean(&iv(1.0, 3.0)), 2.0);
        assert_eq!(arithmetic_mean(&iv(1.0, 2.0)), 1.5);
        assert_eq!(geometric_mean(&iv(1.0, 4.0)), 2.0);
        assert_eq!(geometric_mean(&iv(2.0, 8.0)), 4.0);
        assert!((geometric_mean(&iv(1.0, 2.0)) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn identric_closed_forms() {
        let e = std::f64::consts::E;
        assert!((identric_mean(&iv(1.0, 2.0)) - 4.0 / e).abs() < 1e-14);
        assert!((identric_mean(&iv(1.0, e)) - e.powf(1.0 / (e - 1.0))).abs() < 1e-14);
    }

    #[test]
    fn identric_survives_large_endpoints() {
        let i = identric_mean(&iv(800.0, 900.0));
        assert!(i.is_finite() && 800.0 < i && i < 900.0);
    }

    #[test]
    fn log_mean_values() {
        let p1 = MeanExponent::new(1.0).unwrap();
        let p2 = MeanExponent::new(2.0).unwrap();
        assert_eq!(generalized_log_mean(&iv(1.0, 2.0), p1), 1.5);
        assert!((generalized_log_mean(&iv(1.0, 2.0), p2) - (7.0f64 / 3.0).sqrt()).abs() < 1e-15);
        // non-integer route against the direct formula
        let p = MeanExponent::new(0.5).unwrap();
        let direct = ((2f64.powf(1.5) - 1.0) / 1.5).powf(2.0);
        assert!((generalized_log_mean(&iv(1.0, 2.0), p) - direct).abs() < 1e-14);
        let p = MeanExponent::new(-2.5).unwrap();
        let direct = ((2f64.powf(-1.5) - 1.0) / -1.5).powf(1.0 / -2.5);
        assert!((generalized_log_mean(&iv(1.0, 2.0), p) - direct).abs() < 1e-14);
    }

    #[test]
    fn excluded_exponents() {
        assert!(MeanExponent::new(-1.0).is_err());
        assert!(MeanExponent::new(0.0).is_err());
        assert!(MeanExponent::new(f64::NAN).is_err());
    }

    #[test]
    fn interval_invariants() {
        assert!(PositiveInterval::new(2.0, 2.0).is_err());
        assert!(PositiveInterval::new(3.0, 2.0).is_err());
        assert!(PositiveInterval::new(0.0, 2.0).is_err());
        assert!(PositiveInterval::new(1.0, f64::INFINITY).is_err());
        let i = iv(1.0, 2.0);
        assert!(i.check_point(2.5).is_err());
        assert_eq!(i.check_point(1.0).unwrap(), 1.0);
    }

    #[test]
    fn grids_nest() {
        let i = iv(0.3, 1.7);
        let coarse = i.grid(16);
        let fine = i.grid(32);
        for (k, x) in coarse.iter().enumerate() {
            assert_eq!(x.to_bits(), fine[2 * k].to_bits());
        }
    }
}
