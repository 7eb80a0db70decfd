//! Finite-interval integral representations of `x^(-alpha)` and their
//! composite-rule approximations.
//!
//! Three families are provided. All integrate over `t in [0, 1]` and have
//! bounded integrands once the stretching exponent `sigma` is at least the
//! family's threshold:
//!
//! * [`Family::Resolvent`]: terms `((1-t)^(sigma/(1-alpha)) x + t^(1/(1-alpha)))^-1`,
//!   threshold `(1-alpha)/alpha`.
//! * [`Family::InverseResolvent`]: terms `((1-t)^(sigma/alpha) + t^(1/alpha) x)^-1`,
//!   threshold `alpha/(1-alpha)`.
//! * [`Family::Split`]: the two-term integrand obtained with `theta = t^sigma`,
//!   threshold `max(1/alpha, 1/(1-alpha))`.
//!
//! `kappa >= 1` expresses `sigma` as a multiple of the threshold.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::Rule;

/// Exponents closer to zero than this are treated as exactly zero.
const EXPONENT_SNAP: f64 = 1e-12;

/// Fractional exponent, strictly inside `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if value > 0.0 && value < 1.0 {
            Ok(Alpha(value))
        } else {
            Err(Error::domain(format!("alpha must lie in (0, 1), got {value}")))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `sin(pi alpha) / pi`.
    #[inline]
    pub(crate) fn sine_factor(self) -> f64 {
        (PI * self.0).sin() / PI
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Alpha::new(value)
    }
}

impl From<Alpha> for f64 {
    fn from(a: Alpha) -> f64 {
        a.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Resolvent,
    InverseResolvent,
    Split,
}

impl Family {
    /// Smallest `sigma` for which the integrand stays bounded on `[0, 1]`.
    pub fn min_sigma(self, alpha: Alpha) -> f64 {
        let a = alpha.get();
        match self {
            Family::Resolvent => (1.0 - a) / a,
            Family::InverseResolvent => a / (1.0 - a),
            Family::Split => (1.0 / a).max(1.0 / (1.0 - a)),
        }
    }
}

fn snap(e: f64) -> f64 {
    if e.abs() < EXPONENT_SNAP {
        0.0
    } else {
        e
    }
}

/// `(1 - t)^p` for `t in [0, 1)`, evaluated through `log1p` so that it stays
/// accurate close to `t = 1`.
#[inline]
fn one_minus_pow(t: f64, p: f64) -> f64 {
    (p * (-t).ln_1p()).exp()
}

/// Validated integral representation of `x^(-alpha)` on `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Representation {
    family: Family,
    alpha: Alpha,
    sigma: f64,
    kappa: Option<f64>,
    /// Exponent of the `(1-t)` density (resolvent families) or of `t` in the
    /// first split term.
    e1: f64,
    /// Exponent of `t` in the second split term; unused otherwise.
    e2: f64,
}

impl Representation {
    /// Representation with `sigma = kappa * min_sigma`.
    pub fn with_kappa(family: Family, alpha: Alpha, kappa: f64) -> Result<Self> {
        if !(kappa >= 1.0) || !kappa.is_finite() {
            return Err(Error::domain(format!("kappa must be >= 1, got {kappa}")));
        }
        let a = alpha.get();
        let sigma = kappa * family.min_sigma(alpha);
        // With sigma a multiple of the threshold the limiting exponent is kappa - 1
        // exactly; computing it from sigma would leave rounding noise.
        let (e1, e2) = match family {
            Family::Resolvent | Family::InverseResolvent => (kappa - 1.0, 0.0),
            Family::Split if a <= 0.5 => (kappa - 1.0, snap(sigma * (1.0 - a) - 1.0)),
            Family::Split => (snap(sigma * a - 1.0), kappa - 1.0),
        };
        Ok(Representation {
            family,
            alpha,
            sigma,
            kappa: Some(kappa),
            e1,
            e2,
        })
    }

    /// Representation with an explicit stretching exponent.
    pub fn with_sigma(family: Family, alpha: Alpha, sigma: f64) -> Result<Self> {
        let a = alpha.get();
        let min = family.min_sigma(alpha);
        if !sigma.is_finite() || sigma < min * (1.0 - 1e-12) {
            return Err(Error::domain(format!(
                "sigma = {sigma} is below the threshold {min} for alpha = {a}"
            )));
        }
        let (e1, e2) = match family {
            Family::Resolvent => (snap(sigma * a / (1.0 - a) - 1.0), 0.0),
            Family::InverseResolvent => (snap(sigma * (1.0 - a) / a - 1.0), 0.0),
            Family::Split => (snap(sigma * a - 1.0), snap(sigma * (1.0 - a) - 1.0)),
        };
        Ok(Representation {
            family,
            alpha,
            sigma,
            kappa: None,
            e1: e1.max(0.0),
            e2: e2.max(0.0),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn kappa(&self) -> Option<f64> {
        self.kappa
    }

    /// Integrand value with argument checks.
    pub fn integrand(&self, t: f64, x: f64) -> Result<f64> {
        check_args(t, x)?;
        Ok(self.eval(t, x))
    }

    /// Integrand value; `t` must lie in `[0, 1]` and `x` must be positive.
    /// Endpoints return the finite limits of the formula.
    pub fn eval(&self, t: f64, x: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&t) && x > 0.0);
        let a = self.alpha.get();
        let s = self.sigma;
        match self.family {
            Family::Resolvent => {
                let c = self.alpha.sine_factor() / (1.0 - a);
                if t == 0.0 {
                    c / x
                } else if t == 1.0 {
                    if self.e1 == 0.0 {
                        c * s
                    } else {
                        0.0
                    }
                } else {
                    c * one_minus_pow(t, self.e1) * (1.0 + (s - 1.0) * t)
                        / (one_minus_pow(t, s / (1.0 - a)) * x + t.powf(1.0 / (1.0 - a)))
                }
            }
            Family::InverseResolvent => {
                let c = self.alpha.sine_factor() / a;
                if t == 0.0 {
                    c
                } else if t == 1.0 {
                    if self.e1 == 0.0 {
                        c * s / x
                    } else {
                        0.0
                    }
                } else {
                    c * one_minus_pow(t, self.e1) * (1.0 + (s - 1.0) * t)
                        / (one_minus_pow(t, s / a) + t.powf(1.0 / a) * x)
                }
            }
            Family::Split => {
                let c = s * self.alpha.sine_factor();
                if t == 0.0 {
                    let first = if self.e1 == 0.0 { 1.0 } else { 0.0 };
                    let second = if self.e2 == 0.0 { 1.0 / x } else { 0.0 };
                    c * (first + second)
                } else {
                    let ts = t.powf(s);
                    c * (t.powf(self.e1) / (1.0 + ts * x) + t.powf(self.e2) / (x + ts))
                }
            }
        }
    }

    /// Decomposes the integrand at node `t` into terms `weight / (gamma x + beta)`.
    ///
    /// The resolvent families produce one term, the split family two.
    pub fn resolvent_terms(&self, t: f64) -> Vec<ResolventTerm> {
        debug_assert!((0.0..=1.0).contains(&t));
        let a = self.alpha.get();
        let s = self.sigma;
        match self.family {
            Family::Resolvent => {
                let c = self.alpha.sine_factor() / (1.0 - a);
                let (density, gamma) = if t == 1.0 {
                    (if self.e1 == 0.0 { c * s } else { 0.0 }, 0.0)
                } else {
                    (
                        c * one_minus_pow(t, self.e1) * (1.0 + (s - 1.0) * t),
                        one_minus_pow(t, s / (1.0 - a)),
                    )
                };
                vec![ResolventTerm {
                    weight: density,
                    gamma,
                    beta: t.powf(1.0 / (1.0 - a)),
                }]
            }
            Family::InverseResolvent => {
                let c = self.alpha.sine_factor() / a;
                let (density, beta) = if t == 1.0 {
                    (if self.e1 == 0.0 { c * s } else { 0.0 }, 0.0)
                } else {
                    (
                        c * one_minus_pow(t, self.e1) * (1.0 + (s - 1.0) * t),
                        one_minus_pow(t, s / a),
                    )
                };
                vec![ResolventTerm {
                    weight: density,
                    gamma: t.powf(1.0 / a),
                    beta,
                }]
            }
            Family::Split => {
                let c = s * self.alpha.sine_factor();
                let ts = t.powf(s);
                vec![
                    ResolventTerm {
                        weight: c * t.powf(self.e1),
                        gamma: ts,
                        beta: 1.0,
                    },
                    ResolventTerm {
                        weight: c * t.powf(self.e2),
                        gamma: 1.0,
                        beta: ts,
                    },
                ]
            }
        }
    }
}

/// One `weight * (gamma x + beta)^-1` contribution of an integrand.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResolventTerm {
    pub weight: f64,
    pub gamma: f64,
    pub beta: f64,
}

fn check_args(t: f64, x: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::domain(format!("t = {t} is outside [0, 1]")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("x = {x} must be positive and finite")));
    }
    Ok(())
}

/// Resolvent-family integrand, `sigma = kappa (1 - alpha) / alpha`.
pub fn resolvent_integrand(t: f64, x: f64, rep: &Representation) -> Result<f64> {
    expect_family(rep, Family::Resolvent)?;
    rep.integrand(t, x)
}

/// Inverse-resolvent-family integrand.
pub fn inverse_resolvent_integrand(t: f64, x: f64, rep: &Representation) -> Result<f64> {
    expect_family(rep, Family::InverseResolvent)?;
    rep.integrand(t, x)
}

/// Two-term integrand obtained with `theta = t^sigma`.
pub fn split_integrand(t: f64, x: f64, rep: &Representation) -> Result<f64> {
    expect_family(rep, Family::Split)?;
    rep.integrand(t, x)
}

fn expect_family(rep: &Representation, family: Family) -> Result<()> {
    if rep.family != family {
        return Err(Error::config(format!(
            "expected a {family:?} representation, got {:?}",
            rep.family
        )));
    }
    Ok(())
}

/// Resolvent integrand at the threshold `sigma = (1 - alpha) / alpha`, in its
/// simplified closed form.
pub fn resolvent_minimal_integrand(t: f64, x: f64, alpha: Alpha) -> Result<f64> {
    check_args(t, x)?;
    let a = alpha.get();
    let c = alpha.sine_factor() / (a * (1.0 - a));
    let lead = if t == 1.0 { 0.0 } else { one_minus_pow(t, 1.0 / a) };
    Ok(c * (a + (1.0 - 2.0 * a) * t) / (lead * x + t.powf(1.0 / (1.0 - a))))
}

/// Inverse-resolvent integrand at the threshold `sigma = alpha / (1 - alpha)`.
/// Equals [`resolvent_minimal_integrand`] at `1 - t`.
pub fn inverse_resolvent_minimal_integrand(t: f64, x: f64, alpha: Alpha) -> Result<f64> {
    check_args(t, x)?;
    let a = alpha.get();
    let c = alpha.sine_factor() / (a * (1.0 - a));
    let lead = if t == 1.0 { 0.0 } else { one_minus_pow(t, 1.0 / (1.0 - a)) };
    Ok(c * (1.0 - a + (2.0 * a - 1.0) * t) / (lead + t.powf(1.0 / a) * x))
}

/// Composite rule applied to a representation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub rule: Rule,
    pub m: usize,
    pub representation: Representation,
}

impl QuadratureSpec {
    pub fn new(rule: Rule, m: usize, representation: Representation) -> Result<Self> {
        rule.validate(m)?;
        Ok(QuadratureSpec {
            rule,
            m,
            representation,
        })
    }

    pub fn alpha(&self) -> Alpha {
        self.representation.alpha
    }

    /// Precomputes the nodes so the rule can be evaluated at many `x`.
    pub fn approximant(&self) -> Result<Approximant> {
        Ok(Approximant {
            rep: self.representation,
            nodes: self.rule.nodes(self.m)?,
        })
    }
}

/// `r(x)`, the quadrature approximation of `x^(-alpha)`, with fixed nodes.
#[derive(Clone, Debug)]
pub struct Approximant {
    rep: Representation,
    nodes: Vec<(f64, f64)>,
}

impl Approximant {
    /// Evaluates the rule, summing nodes in ascending order.
    pub fn eval(&self, x: f64) -> f64 {
        self.nodes
            .iter()
            .map(|&(t, w)| w * self.rep.eval(t, x))
            .fold(0.0, |acc, v| acc + v)
    }
}

/// Quadrature approximation of `x^(-alpha)`.
pub fn approx_frac_power(x: f64, q: &QuadratureSpec) -> Result<f64> {
    check_args(0.0, x)?;
    Ok(q.approximant()?.eval(x))
}

/// Log-uniform sampling of `[x_min, x_max]`, endpoints included.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub samples_per_decade: usize,
}

impl ScanSpec {
    pub fn new(x_min: f64, x_max: f64, samples_per_decade: usize) -> Result<Self> {
        let scan = ScanSpec {
            x_min,
            x_max,
            samples_per_decade,
        };
        scan.validate()?;
        Ok(scan)
    }

    /// Scan `[1, x_max]` at 100 samples per decade.
    pub fn up_to(x_max: f64) -> Result<Self> {
        ScanSpec::new(1.0, x_max, 100)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x_min >= 1.0) {
            return Err(Error::config(format!("scan x_min = {} must be >= 1", self.x_min)));
        }
        if !(self.x_max > self.x_min) || !self.x_max.is_finite() {
            return Err(Error::config(format!(
                "empty scan: x_max = {} must exceed x_min = {}",
                self.x_max, self.x_min
            )));
        }
        if self.samples_per_decade == 0 {
            return Err(Error::config("samples per decade must be positive"));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        let lo = self.x_min.log10();
        let hi = self.x_max.log10();
        let n = (((hi - lo) * self.samples_per_decade as f64).round() as usize).max(1);
        (0..=n)
            .map(|i| match i {
                0 => self.x_min,
                i if i == n => self.x_max,
                i => 10f64.powf(lo + (hi - lo) * i as f64 / n as f64),
            })
            .collect()
    }
}

/// Maximum absolute error of `r(x)` against `x^(-alpha)` over a scan.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub max_error: f64,
    pub argmax_x: f64,
    /// `(x, |r(x) - x^(-alpha)|)` per sample, ascending in `x`.
    pub curve: Vec<(f64, f64)>,
}

pub fn error_scan(q: &QuadratureSpec, scan: &ScanSpec) -> Result<ErrorReport> {
    scan.validate()?;
    let r = q.approximant()?;
    let a = q.alpha().get();
    let err = |x: f64| (x, (r.eval(x) - x.powf(-a)).abs());
    let points = scan.points();

    #[cfg(feature = "parallel")]
    let curve: Vec<(f64, f64)> = {
        use rayon::prelude::*;
        points.into_par_iter().map(err).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let curve: Vec<(f64, f64)> = points.into_iter().map(err).collect();

    // First maximum in x order, so the result does not depend on scheduling.
    let (argmax_x, max_error) = curve
        .iter()
        .copied()
        .fold((f64::NAN, f64::NEG_INFINITY), |best, (x, e)| {
            if e > best.1 {
                (x, e)
            } else {
                best
            }
        });
    Ok(ErrorReport {
        max_error,
        argmax_x,
        curve,
    })
}
