//! `scalar-error` and `scalar-curve`.

use anyhow::{Context, Result};
use fracpow::{default_kappa, error_scan, Alpha, Family, QuadratureSpec, Representation, Rule, ScanSpec};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{ScalarCurveArgs, ScalarErrorArgs, ToArgv};
use crate::format::sci;
use crate::manifest::Manifest;

/// One cell of a scalar sweep.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScalarRow {
    #[serde(rename = "M")]
    pub m: usize,
    pub kappa: f64,
    pub alpha: f64,
    pub max_error: f64,
    pub argmax_x: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalarSweep {
    pub rule: Rule,
    pub family: Family,
    pub alphas: Vec<f64>,
    pub ms: Vec<usize>,
    pub kappas: Vec<f64>,
    pub scan: ScanSpec,
}

pub fn quadrature(rule: Rule, family: Family, m: usize, kappa: f64, alpha: f64) -> Result<QuadratureSpec> {
    let run = || -> fracpow::error::Result<QuadratureSpec> {
        let rep = Representation::with_kappa(family, Alpha::new(alpha)?, kappa)?;
        QuadratureSpec::new(rule, m, rep)
    };
    run().with_context(|| format!("M = {m}, kappa = {kappa}, alpha = {alpha}, rule = {}", rule.name()))
}

/// Rows sorted by `(M, kappa, alpha)`.
pub fn sweep(s: &ScalarSweep) -> Result<Vec<ScalarRow>> {
    s.scan.validate().context("invalid scan")?;
    let mut cells = Vec::new();
    for &m in &s.ms {
        for &kappa in &s.kappas {
            for &alpha in &s.alphas {
                cells.push((m, kappa, alpha, quadrature(s.rule, s.family, m, kappa, alpha)?));
            }
        }
    }
    let mut rows = cells
        .into_par_iter()
        .map(|(m, kappa, alpha, q)| {
            let r = error_scan(&q, &s.scan)?;
            Ok(ScalarRow {
                m,
                kappa,
                alpha,
                max_error: r.max_error,
                argmax_x: r.argmax_x,
            })
        })
        .collect::<fracpow::error::Result<Vec<_>>>()?;
    rows.sort_by(|a, b| {
        a.m.cmp(&b.m)
            .then(a.kappa.total_cmp(&b.kappa))
            .then(a.alpha.total_cmp(&b.alpha))
    });
    Ok(rows)
}

pub fn scalar_error(args: &ScalarErrorArgs) -> Result<String> {
    let rows = sweep(&ScalarSweep {
        rule: args.rule.into(),
        family: args.repr.into(),
        alphas: args.alphas.clone(),
        ms: args.ms.clone(),
        kappas: args.kappas.clone(),
        scan: ScanSpec::new(1.0, args.xmax, args.samples_per_decade)?,
    })?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["M", "kappa", "alpha", "max_error", "argmax_x"])?;
    for r in &rows {
        w.write_record([
            r.m.to_string(),
            r.kappa.to_string(),
            r.alpha.to_string(),
            sci(r.max_error),
            sci(r.argmax_x),
        ])?;
    }
    let manifest = Manifest::new("scalar-error", args.to_argv(), args);
    Ok(manifest.csv_line() + &String::from_utf8(w.into_inner()?)?)
}

pub fn scalar_curve(args: &ScalarCurveArgs) -> Result<String> {
    let rule: Rule = args.rule.into();
    let kappa = args.kappa.unwrap_or_else(|| default_kappa(rule));
    let q = quadrature(rule, args.repr.into(), args.m, kappa, args.alpha)?;
    let scan = ScanSpec::new(1.0, args.xmax, args.samples_per_decade)?;
    let report = error_scan(&q, &scan)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["x", "error"])?;
    for (x, e) in &report.curve {
        w.write_record([sci(*x), sci(*e)])?;
    }
    let manifest = Manifest::new("scalar-curve", args.to_argv(), args);
    Ok(manifest.csv_line() + &String::from_utf8(w.into_inner()?)?)
}
