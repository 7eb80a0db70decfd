//! Model-problem solves on the unit square: `solve` and the sweeps behind
//! tables 4-7.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use fracpow::io::dump_with_meta;
use fracpow::{
    default_kappa, error_norms, frac_apply_inverse_with, normalized_solution, rhs_library, spectral_reference,
    Alpha, EllipticOperator, Family, GridSpec, Normalization, OperatorQuadraturePlan, RightHandSide, Rule,
    SolveConfig, SolveMetadata,
};
use serde::Serialize;

use crate::args::{SolveArgs, SolverArg, ToArgv};
use crate::manifest::Manifest;
use crate::scalar::quadrature;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PdeRow {
    #[serde(rename = "M")]
    pub m: usize,
    pub alpha: f64,
    pub eps: f64,
    pub eps_inf: f64,
    pub umax: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PdeSweep {
    pub rule: Rule,
    pub family: Family,
    pub kappa: f64,
    pub rhs: RightHandSide,
    pub alphas: Vec<f64>,
    pub ms: Vec<usize>,
    /// Intervals per side.
    pub grid: usize,
}

/// Rows sorted by `(M, alpha)`. Errors are against the spectral solution.
pub fn sweep(s: &PdeSweep) -> Result<Vec<PdeRow>> {
    let grid = GridSpec::unit_square(s.grid)?;
    let op = EllipticOperator::laplacian(grid);
    let b = rhs_library(s.rhs, grid);
    let cfg = SolveConfig::auto(&op);
    let mut rows = Vec::new();
    for &alpha in &s.alphas {
        let reference = spectral_reference(&op, &b, Alpha::new(alpha)?)?;
        for &m in &s.ms {
            let plan = OperatorQuadraturePlan::new(quadrature(s.rule, s.family, m, s.kappa, alpha)?)?;
            let res = frac_apply_inverse_with(&op, &b, &plan, &cfg, Normalization::IfNeeded)
                .with_context(|| format!("M = {m}, alpha = {alpha}"))?;
            let (eps, eps_inf) = error_norms(&res.u, &reference)?;
            rows.push(PdeRow {
                m,
                alpha,
                eps,
                eps_inf,
                umax: res.u.max(),
            });
        }
    }
    rows.sort_by(|a, b| a.m.cmp(&b.m).then(a.alpha.total_cmp(&b.alpha)));
    Ok(rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub manifest: Manifest,
    pub metadata: SolveMetadata,
    pub umax: f64,
    pub u: PathBuf,
    pub y: PathBuf,
}

fn stem(out: &Path, part: &str) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".");
    s.push(part);
    PathBuf::from(s)
}

/// Writes `<out>.u.*`, `<out>.y.*` and `<out>.metrics.json`.
pub fn solve(args: &SolveArgs) -> Result<SolveReport> {
    let rule: Rule = args.rule.into();
    let kappa = args.kappa.unwrap_or_else(|| default_kappa(rule));
    let plan = OperatorQuadraturePlan::new(quadrature(rule, args.repr.into(), args.m, kappa, args.alpha)?)?;
    let grid = GridSpec::unit_square(args.grid)?;
    let op = EllipticOperator::laplacian(grid);
    let b = rhs_library(args.rhs.into(), grid);
    let cfg = match args.solver {
        SolverArg::Auto => SolveConfig::auto(&op),
        SolverArg::Cg => SolveConfig::cg(),
        SolverArg::Fast => SolveConfig::fast(),
    };

    let res = frac_apply_inverse_with(&op, &b, &plan, &cfg, args.normalization.into()).context("solve failed")?;
    let reference = spectral_reference(&op, &b, plan.alpha())?;
    let errors = error_norms(&res.u, &reference)?;
    let (y, umax) = normalized_solution(&res.u)?;

    let manifest = Manifest::new("solve", args.to_argv(), args);
    let meta = serde_json::to_value(&manifest)?;
    if let Some(dir) = args.out.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let format = args.format.into();
    let (u_path, _) = dump_with_meta(&res.u, &stem(&args.out, "u"), format, Some(meta.clone()))?;
    let (y_path, _) = dump_with_meta(&y, &stem(&args.out, "y"), format, Some(meta))?;

    let report = SolveReport {
        manifest,
        metadata: res.metadata(&plan, Some(errors)),
        umax,
        u: u_path,
        y: y_path,
    };
    let metrics = stem(&args.out, "metrics.json");
    fs::write(&metrics, serde_json::to_string_pretty(&report)? + "\n")
        .with_context(|| format!("writing {}", metrics.display()))?;
    Ok(report)
}
