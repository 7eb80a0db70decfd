//! `table`: the seven standard sweeps in row/column layout.

use anyhow::{bail, Result};
use fracpow::{Family, RightHandSide, Rule, ScanSpec};

use crate::args::{TableArgs, ToArgv, DEFAULT_ALPHAS, DEFAULT_KAPPAS, DEFAULT_MS};
use crate::format::sci;
use crate::manifest::Manifest;
use crate::pde::{self, PdeRow, PdeSweep};
use crate::scalar::{self, ScalarRow, ScalarSweep};

#[derive(Clone, Debug, PartialEq)]
pub enum TableSpec {
    Scalar(ScalarSweep),
    Pde(PdeSweep),
}

#[derive(Clone, Debug, PartialEq)]
pub enum TableRows {
    Scalar(Vec<ScalarRow>),
    Pde(Vec<PdeRow>),
}

pub fn spec(id: u8, grid: usize, scan: ScanSpec) -> Result<TableSpec> {
    let scalar = |rule, family| {
        TableSpec::Scalar(ScalarSweep {
            rule,
            family,
            alphas: DEFAULT_ALPHAS.to_vec(),
            ms: DEFAULT_MS.to_vec(),
            kappas: DEFAULT_KAPPAS.to_vec(),
            scan,
        })
    };
    let solves = |rule, kappa, rhs| {
        TableSpec::Pde(PdeSweep {
            rule,
            family: Family::Resolvent,
            kappa,
            rhs,
            alphas: DEFAULT_ALPHAS.to_vec(),
            ms: DEFAULT_MS.to_vec(),
            grid,
        })
    };
    Ok(match id {
        1 => scalar(Rule::Midpoint, Family::Resolvent),
        2 => scalar(Rule::Midpoint, Family::Split),
        3 => scalar(Rule::Simpson, Family::Resolvent),
        4 => solves(Rule::Midpoint, 3.0, RightHandSide::Sgn),
        5 => solves(Rule::Simpson, 5.0, RightHandSide::Sgn),
        6 => solves(Rule::Simpson, 5.0, RightHandSide::Xy),
        7 => solves(Rule::Simpson, 5.0, RightHandSide::Bubble),
        _ => bail!("no table {id}; expected 1-7"),
    })
}

pub fn rows(spec: &TableSpec) -> Result<TableRows> {
    Ok(match spec {
        TableSpec::Scalar(s) => TableRows::Scalar(scalar::sweep(s)?),
        TableSpec::Pde(s) => TableRows::Pde(pde::sweep(s)?),
    })
}

fn header(first: &str, second: &str) -> Vec<String> {
    let mut h = vec![first.to_string(), second.to_string()];
    h.extend(DEFAULT_ALPHAS.iter().map(|a| format!("alpha={a}")));
    h
}

pub fn table(args: &TableArgs) -> Result<String> {
    let spec = spec(args.id, args.grid, ScanSpec::new(1.0, args.xmax, args.samples_per_decade)?)?;
    let n = DEFAULT_ALPHAS.len();
    let mut w = csv::Writer::from_writer(Vec::new());
    match rows(&spec)? {
        TableRows::Scalar(rows) => {
            w.write_record(header("M", "kappa"))?;
            for line in rows.chunks(n) {
                let mut rec = vec![line[0].m.to_string(), line[0].kappa.to_string()];
                rec.extend(line.iter().map(|r| sci(r.max_error)));
                w.write_record(rec)?;
            }
        }
        TableRows::Pde(rows) => {
            w.write_record(header("M", "error"))?;
            for line in rows.chunks(n) {
                for (name, get) in [("eps", (|r| r.eps) as fn(&PdeRow) -> f64), ("eps_inf", |r| r.eps_inf)] {
                    let mut rec = vec![line[0].m.to_string(), name.to_string()];
                    rec.extend(line.iter().map(|r| sci(get(r))));
                    w.write_record(rec)?;
                }
            }
        }
    }
    let manifest = Manifest::new("table", args.to_argv(), args);
    Ok(manifest.csv_line() + &String::from_utf8(w.into_inner()?)?)
}
