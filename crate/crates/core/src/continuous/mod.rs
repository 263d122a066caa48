//! Galileo functions: continuous `f >= 0` with
//! `int_0^{a x} f = b int_0^x f` for all `x > 0`.
//!
//! Every such `f` has the form `f(x) = g(log_a x) x^e` with `e = log_a(b / a)`
//! and `g` continuous of period 1. Specs are restricted to `e > 0`, where
//! `f` extends continuously to `f(0) = 0`.
//!
//! Integrals are taken in `t = ln x`, where `f` becomes periodic up to an
//! exponential weight. Panels follow the period `|ln a|` (at least 32 per
//! period, plus any profile breakpoints) and the part below the last panel
//! is bounded by `max(g) x0^(e+1) / (e+1)`.

pub mod profile;
pub mod quadrature;

pub use profile::{Harmonic, Profile};
pub use quadrature::Estimate;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct GalileoFunctionSpec {
    a: f64,
    b: f64,
    profile: Profile,
    exponent: f64,
}

impl GalileoFunctionSpec {
    pub fn new(a: f64, b: f64, profile: Profile) -> Result<Self> {
        if !(a.is_finite() && a > 0.0 && a != 1.0) {
            return Err(Error::InvalidParameter(format!(
                "a must be positive and different from 1, got {a}"
            )));
        }
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::InvalidParameter(format!("b must be positive, got {b}")));
        }
        let exponent = (b / a).ln() / a.ln();
        if exponent.is_nan() || exponent <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "exponent log_a(b/a) = {exponent} must be positive"
            )));
        }
        Ok(Self {
            a,
            b,
            profile: profile.validated()?,
            exponent,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    /// `e = log_a(b / a)`
    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    /// `f(x) = g(log_a x) x^e`, with `f(0) = 0`.
    pub fn eval_f(&self, x: f64) -> Result<f64> {
        if x < 0.0 || x.is_nan() {
            return Err(Error::InvalidParameter(format!("f is defined on [0, inf), got {x}")));
        }
        Ok(self.eval_unchecked(x))
    }

    fn eval_unchecked(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        self.profile.eval(x.ln() / self.a.ln()) * x.powf(self.exponent)
    }

    /// Shape of `f` as seen by the quadrature driver.
    pub fn integrand(&self) -> Integrand<impl Fn(f64) -> f64 + '_> {
        let ln_a = self.a.ln();
        // profile breakpoints u_j sit at t = (m + u_j) ln a
        let offsets = self
            .profile
            .breakpoints()
            .into_iter()
            .map(|u| if ln_a > 0.0 { u } else { (1.0 - u).rem_euclid(1.0) })
            .collect();
        Integrand {
            f: move |x| self.eval_unchecked(x),
            log_period: ln_a.abs(),
            offsets,
            envelope: PowerEnvelope {
                scale: self.profile.max_bound(),
                exponent: self.exponent,
            },
        }
    }
}

/// `f(x) <= scale * x^exponent` for all `x > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerEnvelope {
    pub scale: f64,
    pub exponent: f64,
}

impl PowerEnvelope {
    /// Bound on `int_0^x0 f`.
    pub fn tail(&self, x0: f64) -> f64 {
        self.scale * x0.powf(self.exponent + 1.0) / (self.exponent + 1.0)
    }
}

/// A nonnegative function on `(0, inf)` prepared for integration from 0.
pub struct Integrand<F> {
    pub f: F,
    /// Panel period in `t = ln x`.
    pub log_period: f64,
    /// Extra breakpoints as fractions of a period in `[0, 1)`.
    pub offsets: Vec<f64>,
    pub envelope: PowerEnvelope,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraturePolicy {
    pub panels_per_period: u32,
    pub max_depth: u32,
    pub max_periods: u32,
}

impl Default for QuadraturePolicy {
    fn default() -> Self {
        Self {
            panels_per_period: 32,
            max_depth: 40,
            max_periods: 200_000,
        }
    }
}

impl<F: Fn(f64) -> f64> Integrand<F> {
    /// `int_0^upper f(x) dx` to relative accuracy `rel_tol`; `None` if the
    /// quadrature does not converge.
    pub fn integrate(&self, upper: f64, rel_tol: f64, policy: QuadraturePolicy) -> Option<Estimate> {
        if !(upper > 0.0 && upper.is_finite()) || self.log_period <= 0.0 {
            return None;
        }
        let mut fracs: Vec<f64> = (0..policy.panels_per_period.max(1))
            .map(|i| f64::from(i) / f64::from(policy.panels_per_period.max(1)))
            .chain(self.offsets.iter().copied())
            .collect();
        fracs.sort_by(f64::total_cmp);
        fracs.dedup_by(|x, y| (*x - *y).abs() < 1e-15);

        let h = |t: f64| {
            let x = t.exp();
            (self.f)(x) * x
        };
        let period = self.log_period;
        let top = upper.ln();
        let mut m = (top / period).floor();
        let mut hi = top;
        let mut total = Estimate {
            value: 0.0,
            error: 0.0,
            evaluations: 0,
        };
        for _ in 0..policy.max_periods {
            for frac in fracs.iter().rev() {
                let lo = (m + frac) * period;
                if lo >= hi {
                    continue;
                }
                let piece = quadrature::adaptive(&h, lo, hi, 1e-300, 0.1 * rel_tol, policy.max_depth)?;
                total.value += piece.value;
                total.error += piece.error;
                total.evaluations += piece.evaluations;
                hi = lo;
            }
            m -= 1.0;
            let tail = self.envelope.tail(hi.exp());
            if tail <= 0.05 * rel_tol * total.value || tail < 1e-300 {
                total.error += tail;
                return Some(total);
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Quadrature did not reach the requested accuracy.
    Indeterminate,
}

/// Result of comparing `int_0^{a x} f` with `b int_0^x f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralCheck {
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// `|lhs - rhs|`
    pub residual: f64,
    /// `residual / |rhs|`, or `residual` when `rhs = 0`.
    pub relative: f64,
    pub verdict: Verdict,
}

/// Checks the integral relation at `x` for an arbitrary integrand; the
/// relative residual is compared against `tol`, each integral is computed
/// to `tol / 10`.
pub fn integral_relation_residual<F: Fn(f64) -> f64>(
    integrand: &Integrand<F>,
    a: f64,
    b: f64,
    x: f64,
    tol: f64,
    policy: QuadraturePolicy,
) -> Result<IntegralCheck> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::InvalidParameter(format!("x must be positive, got {x}")));
    }
    let integral_tol = 0.1 * tol;
    let (lhs, rhs) = match (
        integrand.integrate(a * x, integral_tol, policy),
        integrand.integrate(x, integral_tol, policy),
    ) {
        (Some(l), Some(r)) => (l.value, b * r.value),
        _ => {
            return Ok(IntegralCheck {
                x,
                lhs: f64::NAN,
                rhs: f64::NAN,
                residual: f64::NAN,
                relative: f64::NAN,
                verdict: Verdict::Indeterminate,
            })
        }
    };
    let residual = (lhs - rhs).abs();
    let relative = if rhs == 0.0 { residual } else { residual / rhs.abs() };
    Ok(IntegralCheck {
        x,
        lhs,
        rhs,
        residual,
        relative,
        verdict: if relative <= tol { Verdict::Pass } else { Verdict::Fail },
    })
}

pub fn verify_integral_relation(spec: &GalileoFunctionSpec, x: f64, tol: f64) -> Result<IntegralCheck> {
    integral_relation_residual(&spec.integrand(), spec.a, spec.b, x, tol, QuadraturePolicy::default())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointwiseCheck {
    /// Largest `|a f(a x) - b f(x)| / max(|a f(a x)|, |b f(x)|)` over the samples.
    pub max_relative: f64,
    pub worst_x: f64,
    pub passed: bool,
}

/// Checks `a f(a x) = b f(x)` at every sample, relative to the larger side.
pub fn verify_pointwise_identity(spec: &GalileoFunctionSpec, xs: &[f64], tol: f64) -> Result<PointwiseCheck> {
    if xs.is_empty() {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    let mut worst = (0.0, xs[0]);
    for &x in xs {
        if !(x > 0.0 && x.is_finite()) {
            return Err(Error::InvalidParameter(format!("x must be positive, got {x}")));
        }
        let lhs = spec.a * spec.eval_unchecked(spec.a * x);
        let rhs = spec.b * spec.eval_unchecked(x);
        let scale = lhs.abs().max(rhs.abs());
        let rel = if scale == 0.0 { 0.0 } else { (lhs - rhs).abs() / scale };
        if rel > worst.0 || rel.is_nan() {
            worst = (rel, x);
        }
    }
    Ok(PointwiseCheck {
        max_relative: worst.0,
        worst_x: worst.1,
        passed: worst.0 <= tol,
    })
}

/// Profile recovered from a function via `g(u) = f(a^u) / (b/a)^u`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileExtraction {
    pub points: Vec<(f64, f64)>,
    /// `max |g(u + 1) - g(u)|` over the grid.
    pub periodicity_defect: f64,
}

pub fn extract_profile(f: impl Fn(f64) -> f64, a: f64, b: f64, grid: &[f64]) -> Result<ProfileExtraction> {
    if !(a > 0.0 && a != 1.0 && b > 0.0) {
        return Err(Error::InvalidParameter("need a > 0, a != 1 and b > 0".into()));
    }
    if b == a {
        return Err(Error::InvalidParameter("b / a must differ from 1".into()));
    }
    let ratio = b / a;
    let g = |u: f64| -> Result<f64> {
        let x = a.powf(u);
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::InvalidParameter(format!("f({x}) is not finite")));
        }
        Ok(v / ratio.powf(u))
    };
    let mut points = Vec::with_capacity(grid.len());
    let mut defect: f64 = 0.0;
    for &u in grid {
        let here = g(u)?;
        defect = defect.max((g(u + 1.0)? - here).abs());
        points.push((u, here));
    }
    Ok(ProfileExtraction {
        points,
        periodicity_defect: defect,
    })
}

/// `n` points `i / n` in `[0, 1)`.
pub fn unit_grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64 / n as f64).collect()
}
