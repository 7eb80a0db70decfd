//! Command-line flags.
//!
//! Every argument struct can print itself back as the flag list that
//! produced it ([`ToArgv`]); that list is stored in each output's manifest.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fracpow::io::DumpFormat;
use fracpow::{Family, Normalization, RightHandSide, Rule};
use serde::Serialize;

pub const DEFAULT_ALPHAS: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];
pub const DEFAULT_MS: [usize; 3] = [50, 100, 200];
pub const DEFAULT_KAPPAS: [f64; 6] = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];

#[derive(Parser, Debug, Clone)]
#[command(name = "fracpow", version, about = "Error studies and solves for fractional powers of elliptic operators")]
pub struct Cli {
    /// Worker threads; 0 uses one per core. Does not affect results.
    #[arg(long, global = true, default_value_t = 0, value_name = "W")]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Maximum scalar error over a scan, for every (M, kappa, alpha).
    ScalarError(ScalarErrorArgs),
    /// Pointwise scalar error over a scan.
    ScalarCurve(ScalarCurveArgs),
    /// Solve the model problem on the unit square and dump the solution.
    Solve(SolveArgs),
    /// Run one of the seven standard sweeps.
    Table(TableArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleArg {
    #[value(alias = "midpoint")]
    Rect,
    Simpson,
}

impl From<RuleArg> for Rule {
    fn from(r: RuleArg) -> Rule {
        match r {
            RuleArg::Rect => Rule::Midpoint,
            RuleArg::Simpson => Rule::Simpson,
        }
    }
}

/// Integral representation: `eq22` is the resolvent form, `eq23` the split form.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReprArg {
    #[value(name = "eq22", alias = "resolvent")]
    #[serde(rename = "eq22")]
    Resolvent,
    #[value(name = "eq23", alias = "split")]
    #[serde(rename = "eq23")]
    Split,
}

impl From<ReprArg> for Family {
    fn from(r: ReprArg) -> Family {
        match r {
            ReprArg::Resolvent => Family::Resolvent,
            ReprArg::Split => Family::Split,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RhsArg {
    Sgn,
    Xy,
    Bubble,
}

impl From<RhsArg> for RightHandSide {
    fn from(r: RhsArg) -> RightHandSide {
        match r {
            RhsArg::Sgn => RightHandSide::Sgn,
            RhsArg::Xy => RightHandSide::Xy,
            RhsArg::Bubble => RightHandSide::Bubble,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormatArg {
    Csv,
    Bin,
}

impl From<FormatArg> for DumpFormat {
    fn from(f: FormatArg) -> DumpFormat {
        match f {
            FormatArg::Csv => DumpFormat::Csv,
            FormatArg::Bin => DumpFormat::Bin,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverArg {
    /// Sine-transform diagonalization when possible, CG otherwise.
    Auto,
    Cg,
    Fast,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalizationArg {
    IfNeeded,
    MinEigenvalue,
}

impl From<NormalizationArg> for Normalization {
    fn from(n: NormalizationArg) -> Normalization {
        match n {
            NormalizationArg::IfNeeded => Normalization::IfNeeded,
            NormalizationArg::MinEigenvalue => Normalization::MinEigenvalue,
        }
    }
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct ScalarErrorArgs {
    /// Exponent; repeat or comma-separate for a sweep.
    #[arg(long = "alpha", value_delimiter = ',', default_values_t = DEFAULT_ALPHAS)]
    pub alphas: Vec<f64>,
    /// Number of subintervals of [0, 1].
    #[arg(long = "M", value_delimiter = ',', default_values_t = DEFAULT_MS)]
    #[serde(rename = "M")]
    pub ms: Vec<usize>,
    /// Stretching parameter, at least 1.
    #[arg(long = "kappa", value_delimiter = ',', default_values_t = DEFAULT_KAPPAS)]
    pub kappas: Vec<f64>,
    #[arg(long, value_enum, default_value_t = RuleArg::Rect)]
    pub rule: RuleArg,
    #[arg(long, value_enum, default_value_t = ReprArg::Resolvent)]
    pub repr: ReprArg,
    /// Upper end of the scan; it starts at 1.
    #[arg(long, default_value_t = 1e20)]
    pub xmax: f64,
    #[arg(long, default_value_t = 100)]
    pub samples_per_decade: usize,
    /// Output file; stdout when absent.
    #[arg(long, value_name = "PATH")]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct ScalarCurveArgs {
    #[arg(long, default_value_t = 0.5)]
    pub alpha: f64,
    #[arg(long = "M", default_value_t = 100)]
    #[serde(rename = "M")]
    pub m: usize,
    /// Defaults to 3 for rect and 5 for simpson.
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long, value_enum, default_value_t = RuleArg::Rect)]
    pub rule: RuleArg,
    #[arg(long, value_enum, default_value_t = ReprArg::Resolvent)]
    pub repr: ReprArg,
    #[arg(long, default_value_t = 1e10)]
    pub xmax: f64,
    #[arg(long, default_value_t = 100)]
    pub samples_per_decade: usize,
    #[arg(long, value_name = "PATH")]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct SolveArgs {
    #[arg(long, default_value_t = 0.5)]
    pub alpha: f64,
    #[arg(long = "M", default_value_t = 100)]
    #[serde(rename = "M")]
    pub m: usize,
    /// Defaults to 3 for rect and 5 for simpson.
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long, value_enum, default_value_t = RuleArg::Rect)]
    pub rule: RuleArg,
    #[arg(long, value_enum, default_value_t = ReprArg::Resolvent)]
    pub repr: ReprArg,
    /// Intervals per side of the unit square.
    #[arg(long, default_value_t = 256, value_name = "N")]
    pub grid: usize,
    #[arg(long, value_enum, default_value_t = RhsArg::Sgn)]
    pub rhs: RhsArg,
    #[arg(long, value_enum, default_value_t = SolverArg::Auto)]
    pub solver: SolverArg,
    #[arg(long, value_enum, default_value_t = NormalizationArg::IfNeeded)]
    pub normalization: NormalizationArg,
    /// Body format of the solution dumps.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    /// Output stem: writes `<PATH>.u.*`, `<PATH>.y.*` and `<PATH>.metrics.json`.
    #[arg(long, value_name = "PATH", default_value = "solution")]
    #[serde(skip)]
    pub out: PathBuf,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct TableArgs {
    /// 1-3: scalar sweeps (rect/eq22, rect/eq23, simpson/eq22);
    /// 4-7: solution errors (sgn rect, sgn simpson, xy simpson, bubble simpson).
    #[arg(value_parser = clap::value_parser!(u8).range(1..=7))]
    pub id: u8,
    /// Grid for tables 4-7.
    #[arg(long, default_value_t = 256, value_name = "N")]
    pub grid: usize,
    /// Scan end for tables 1-3.
    #[arg(long, default_value_t = 1e20)]
    pub xmax: f64,
    #[arg(long, default_value_t = 100)]
    pub samples_per_decade: usize,
    #[arg(long, value_name = "PATH")]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

/// The flags, after the subcommand name, that reproduce a run.
pub trait ToArgv {
    fn to_argv(&self) -> Vec<String>;
}

fn flag(out: &mut Vec<String>, name: &str, value: impl ToString) {
    out.push(format!("--{name}"));
    out.push(value.to_string());
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

impl ToArgv for ScalarErrorArgs {
    fn to_argv(&self) -> Vec<String> {
        let mut v = Vec::new();
        self.alphas.iter().for_each(|a| flag(&mut v, "alpha", a));
        self.ms.iter().for_each(|m| flag(&mut v, "M", m));
        self.kappas.iter().for_each(|k| flag(&mut v, "kappa", k));
        flag(&mut v, "rule", value_name(self.rule));
        flag(&mut v, "repr", value_name(self.repr));
        flag(&mut v, "xmax", self.xmax);
        flag(&mut v, "samples-per-decade", self.samples_per_decade);
        v
    }
}

impl ToArgv for ScalarCurveArgs {
    fn to_argv(&self) -> Vec<String> {
        let mut v = Vec::new();
        flag(&mut v, "alpha", self.alpha);
        flag(&mut v, "M", self.m);
        if let Some(k) = self.kappa {
            flag(&mut v, "kappa", k);
        }
        flag(&mut v, "rule", value_name(self.rule));
        flag(&mut v, "repr", value_name(self.repr));
        flag(&mut v, "xmax", self.xmax);
        flag(&mut v, "samples-per-decade", self.samples_per_decade);
        v
    }
}

impl ToArgv for SolveArgs {
    fn to_argv(&self) -> Vec<String> {
        let mut v = Vec::new();
        flag(&mut v, "alpha", self.alpha);
        flag(&mut v, "M", self.m);
        if let Some(k) = self.kappa {
            flag(&mut v, "kappa", k);
        }
        flag(&mut v, "rule", value_name(self.rule));
        flag(&mut v, "repr", value_name(self.repr));
        flag(&mut v, "grid", self.grid);
        flag(&mut v, "rhs", value_name(self.rhs));
        flag(&mut v, "solver", value_name(self.solver));
        flag(&mut v, "normalization", value_name(self.normalization));
        flag(&mut v, "format", value_name(self.format));
        v
    }
}

impl ToArgv for TableArgs {
    fn to_argv(&self) -> Vec<String> {
        let mut v = vec![self.id.to_string()];
        flag(&mut v, "grid", self.grid);
        flag(&mut v, "xmax", self.xmax);
        flag(&mut v, "samples-per-decade", self.samples_per_decade);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn defaults() {
        let cli = Cli::try_parse_from(["fracpow", "scalar-error"]).unwrap();
        let Command::ScalarError(a) = cli.command else { panic!() };
        assert_eq!(a.alphas, DEFAULT_ALPHAS);
        assert_eq!(a.ms, DEFAULT_MS);
        assert_eq!(a.kappas, DEFAULT_KAPPAS);
        assert_eq!(a.rule, RuleArg::Rect);
        assert_eq!(a.repr, ReprArg::Resolvent);
        assert_eq!(a.xmax, 1e20);
    }

    #[test]
    fn repeated_and_delimited_flags() {
        let cli = Cli::try_parse_from([
            "fracpow", "scalar-error", "--alpha", "0.5", "--alpha", "0.9", "--M", "50,100", "--rule", "simpson",
            "--repr", "eq23",
        ])
        .unwrap();
        let Command::ScalarError(a) = cli.command else { panic!() };
        assert_eq!(a.alphas, [0.5, 0.9]);
        assert_eq!(a.ms, [50, 100]);
        assert_eq!(a.rule, RuleArg::Simpson);
        assert_eq!(a.repr, ReprArg::Split);
    }

    #[test]
    fn argv_round_trip() {
        let cli = Cli::try_parse_from(["fracpow", "solve", "--alpha", "0.25", "--rule", "simpson", "--rhs", "xy"]).unwrap();
        let Command::Solve(a) = cli.command else { panic!() };
        let mut argv = vec!["fracpow".to_string(), "solve".to_string()];
        argv.extend(a.to_argv());
        let Command::Solve(b) = Cli::try_parse_from(argv).unwrap().command else { panic!() };
        assert_eq!(a, b);
    }

    #[test]
    fn table_id_range() {
        assert!(Cli::try_parse_from(["fracpow", "table", "8"]).is_err());
        assert!(Cli::try_parse_from(["fracpow", "table", "0"]).is_err());
        assert!(Cli::try_parse_from(["fracpow", "table", "7"]).is_ok());
    }
}
