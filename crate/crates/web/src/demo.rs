//! The computations behind the page, in plain Rust.

use fracpow::error::{Error, Result};
use fracpow::{
    error_norms, error_scan, frac_apply_inverse, normalized_solution, rhs_library, spectral_reference, Alpha,
    EllipticOperator, Family, GridSpec, OperatorQuadraturePlan, QuadratureSpec, Representation, RightHandSide,
    Rule, ScanSpec, SolveConfig,
};

/// Largest grid the page may request; the solve runs on the main thread.
pub const MAX_GRID: usize = 256;

pub fn parse_family(s: &str) -> Result<Family> {
    match s {
        "resolvent" => Ok(Family::Resolvent),
        "inverse" => Ok(Family::InverseResolvent),
        "split" => Ok(Family::Split),
        _ => Err(Error::Config(format!("unknown representation '{s}'"))),
    }
}

fn spec(alpha: f64, m: usize, kappa: f64, rule: &str, repr: &str) -> Result<QuadratureSpec> {
    let rep = Representation::with_kappa(parse_family(repr)?, Alpha::new(alpha)?, kappa)?;
    QuadratureSpec::new(rule.parse::<Rule>()?, m, rep)
}

pub struct Curve {
    pub x: Vec<f64>,
    pub error: Vec<f64>,
    pub max_error: f64,
    pub argmax_x: f64,
}

pub fn error_curve(
    alpha: f64,
    m: usize,
    kappa: f64,
    rule: &str,
    repr: &str,
    x_max: f64,
    samples_per_decade: usize,
) -> Result<Curve> {
    let report = error_scan(&spec(alpha, m, kappa, rule, repr)?, &ScanSpec::new(1.0, x_max, samples_per_decade)?)?;
    let (x, error) = report.curve.into_iter().unzip();
    Ok(Curve {
        x,
        error,
        max_error: report.max_error,
        argmax_x: report.argmax_x,
    })
}

/// Integrand over `t` at `samples` equispaced points of `[0, 1]`.
pub fn integrand_profile(alpha: f64, kappa: f64, repr: &str, x: f64, samples: usize) -> Result<Vec<f64>> {
    if samples < 2 {
        return Err(Error::Config("need at least two samples".into()));
    }
    let rep = Representation::with_kappa(parse_family(repr)?, Alpha::new(alpha)?, kappa)?;
    (0..samples)
        .map(|i| rep.integrand(i as f64 / (samples - 1) as f64, x))
        .collect()
}

pub struct Field {
    pub n: usize,
    /// `u / max u` on the interior nodes, row-major, `x1` fastest.
    pub y: Vec<f64>,
    pub umax: f64,
    pub eps: f64,
    pub eps_inf: f64,
}

pub fn solution_field(alpha: f64, m: usize, kappa: f64, rule: &str, n: usize, rhs: &str) -> Result<Field> {
    if n > MAX_GRID {
        return Err(Error::Config(format!("grid {n} exceeds the demo limit {MAX_GRID}")));
    }
    let grid = GridSpec::unit_square(n)?;
    let op = EllipticOperator::laplacian(grid);
    let b = rhs_library(rhs.parse::<RightHandSide>()?, grid);
    let plan = OperatorQuadraturePlan::new(spec(alpha, m, kappa, rule, "resolvent")?)?;
    let u = frac_apply_inverse(&op, &b, &plan, &SolveConfig::fast())?.u;
    let (eps, eps_inf) = error_norms(&u, &spectral_reference(&op, &b, plan.alpha())?)?;
    let (y, umax) = normalized_solution(&u)?;
    Ok(Field {
        n,
        y: y.into_values(),
        umax,
        eps,
        eps_inf,
    })
}
