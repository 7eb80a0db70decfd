//! Composite quadrature rules on `[0, 1]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Composite rule over `M` equal subintervals of `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    /// Rectangle rule evaluated at subinterval midpoints.
    Midpoint,
    /// Composite Simpson rule on the `M + 1` subinterval boundaries (`M` even).
    Simpson,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Midpoint => "midpoint",
            Rule::Simpson => "simpson",
        }
    }

    /// Checks that `m` subintervals are usable with this rule.
    pub fn validate(self, m: usize) -> Result<()> {
        if m == 0 {
            return Err(Error::config("number of subintervals must be positive"));
        }
        if self == Rule::Simpson && !m.is_multiple_of(2) {
            return Err(Error::config(format!(
                "Simpson's rule needs an even number of subintervals, got {m}"
            )));
        }
        Ok(())
    }

    /// Nodes and weights in ascending node order.
    pub fn nodes(self, m: usize) -> Result<Vec<(f64, f64)>> {
        self.validate(m)?;
        let step = 1.0 / m as f64;
        let nodes = match self {
            Rule::Midpoint => (0..m).map(|i| ((i as f64 + 0.5) * step, step)).collect(),
            Rule::Simpson => {
                let third = step / 3.0;
                (0..=m)
                    .map(|i| {
                        let t = if i == m { 1.0 } else { i as f64 * step };
                        let w = if i == 0 || i == m {
                            third
                        } else if i % 2 == 1 {
                            4.0 * third
                        } else {
                            2.0 * third
                        };
                        (t, w)
                    })
                    .collect()
            }
        };
        Ok(nodes)
    }
}

impl std::str::FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "midpoint" | "rect" | "rectangle" => Ok(Rule::Midpoint),
            "simpson" => Ok(Rule::Simpson),
            other => Err(Error::config(format!("unknown quadrature rule '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midpoint_nodes() {
        let n = Rule::Midpoint.nodes(2).unwrap();
        assert_eq!(n, vec![(0.25, 0.5), (0.75, 0.5)]);
    }

    #[test]
    fn simpson_weights_pattern() {
        let n = Rule::Simpson.nodes(4).unwrap();
        let w: Vec<f64> = n.iter().map(|&(_, w)| w * 12.0).collect();
        for (got, want) in w.iter().zip([1.0, 4.0, 2.0, 4.0, 1.0]) {
            assert!((got - want).abs() < 1e-14);
        }
        assert_eq!(n[0].0, 0.0);
        assert_eq!(n[4].0, 1.0);
    }

    #[test]
    fn simpson_rejects_odd() {
        assert!(matches!(Rule::Simpson.nodes(5), Err(Error::Config(_))));
        assert!(Rule::Midpoint.nodes(5).is_ok());
        assert!(Rule::Midpoint.nodes(0).is_err());
    }

    #[test]
    fn weights_sum_to_one() {
        for m in [2, 10, 200] {
            for rule in [Rule::Midpoint, Rule::Simpson] {
                let s: f64 = rule.nodes(m).unwrap().iter().map(|n| n.1).sum();
                assert!((s - 1.0).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn simpson_exact_for_cubics() {
        let s: f64 = Rule::Simpson
            .nodes(6)
            .unwrap()
            .iter()
            .map(|&(t, w)| w * (t * t * t - 2.0 * t + 0.5))
            .sum();
        assert!((s - (0.25 - 1.0 + 0.5)).abs() < 1e-14);
    }
}
