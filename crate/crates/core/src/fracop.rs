//! `u = A^(-alpha) b` as a quadrature-weighted sum of shifted solves, plus
//! the exact spectral solution used as reference.

use std::str::FromStr;
use std::time::Instant;

use nalgebra::{DVector, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{EllipticOperator, GridFunction, GridSpec, DENSE_LIMIT};
use crate::quadrature::Rule;
use crate::scalar::{Alpha, Family, QuadratureSpec, Representation};
use crate::shifted::{Diagonalization, ShiftedSolver, SolveConfig};

/// One shifted solve `weight * (gamma A + beta I)^-1` of the plan.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanNode {
    pub t: f64,
    pub weight: f64,
    pub gamma: f64,
    pub beta: f64,
}

/// Quadrature nodes with the rule weights and the integrand's prefactor and
/// density folded into `weight`. Independent of the grid.
#[derive(Clone, Debug)]
pub struct OperatorQuadraturePlan {
    quadrature: QuadratureSpec,
    nodes: Vec<PlanNode>,
}

impl OperatorQuadraturePlan {
    pub fn new(quadrature: QuadratureSpec) -> Result<Self> {
        let rep = quadrature.representation;
        let mut nodes = Vec::new();
        for (t, w) in quadrature.rule.nodes(quadrature.m)? {
            for term in rep.resolvent_terms(t) {
                let node = PlanNode {
                    t,
                    weight: w * term.weight,
                    gamma: term.gamma,
                    beta: term.beta,
                };
                if !node.weight.is_finite() {
                    return Err(Error::domain(format!("non-finite weight at t = {t}")));
                }
                nodes.push(node);
            }
        }
        Ok(OperatorQuadraturePlan { quadrature, nodes })
    }

    pub fn quadrature(&self) -> &QuadratureSpec {
        &self.quadrature
    }

    pub fn alpha(&self) -> Alpha {
        self.quadrature.alpha()
    }

    pub fn nodes(&self) -> &[PlanNode] {
        &self.nodes
    }

    /// Nodes that need a solve (non-zero weight).
    pub fn active_nodes(&self) -> impl Iterator<Item = (usize, &PlanNode)> {
        self.nodes.iter().enumerate().filter(|(_, n)| n.weight != 0.0)
    }

    /// `sum weight / (gamma x + beta)`, the scalar counterpart of the plan.
    pub fn eval_scalar(&self, x: f64) -> f64 {
        self.nodes
            .iter()
            .map(|n| n.weight / (n.gamma * x + n.beta))
            .fold(0.0, |acc, v| acc + v)
    }
}

/// Plan for the resolvent representation with `sigma = kappa (1 - alpha) / alpha`.
pub fn build_plan(alpha: Alpha, rule: Rule, m: usize, kappa: f64) -> Result<OperatorQuadraturePlan> {
    let rep = Representation::with_kappa(Family::Resolvent, alpha, kappa)?;
    OperatorQuadraturePlan::new(QuadratureSpec::new(rule, m, rep)?)
}

/// Default stretching: 3 for the midpoint rule, 5 for Simpson's rule.
pub fn default_kappa(rule: Rule) -> f64 {
    match rule {
        Rule::Midpoint => 3.0,
        Rule::Simpson => 5.0,
    }
}

/// How the operator is rescaled so that it is `>= I` before quadrature.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// Divide by `delta` only when `delta < 1`; an operator already `>= I`
    /// is used as is.
    #[default]
    IfNeeded,
    /// Always divide by `delta`, so the smallest eigenvalue becomes 1.
    MinEigenvalue,
}

#[derive(Clone, Debug)]
pub struct FracSolveResult {
    pub u: GridFunction,
    /// Scale the operator was divided by.
    pub delta: f64,
    /// Shifted solves performed.
    pub node_count: usize,
    pub total_iterations: usize,
    /// Seconds.
    pub wall_time: f64,
}

/// Run description written next to solution dumps.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveMetadata {
    pub alpha: f64,
    pub rule: Rule,
    #[serde(rename = "M")]
    pub m: usize,
    pub kappa: Option<f64>,
    pub family: Family,
    pub grid: GridSpec,
    pub delta: f64,
    pub node_count: usize,
    pub iterations: usize,
    pub wall_time: f64,
    pub eps: Option<f64>,
    pub eps_inf: Option<f64>,
}

impl FracSolveResult {
    pub fn metadata(&self, plan: &OperatorQuadraturePlan, errors: Option<(f64, f64)>) -> SolveMetadata {
        let q = plan.quadrature();
        SolveMetadata {
            alpha: q.alpha().get(),
            rule: q.rule,
            m: q.m,
            kappa: q.representation.kappa(),
            family: q.representation.family(),
            grid: *self.u.grid(),
            delta: self.delta,
            node_count: self.node_count,
            iterations: self.total_iterations,
            wall_time: self.wall_time,
            eps: errors.map(|e| e.0),
            eps_inf: errors.map(|e| e.1),
        }
    }
}

/// `u ~ A^(-alpha) b` with the default normalization.
pub fn frac_apply_inverse(
    op: &EllipticOperator,
    b: &GridFunction,
    plan: &OperatorQuadraturePlan,
    cfg: &SolveConfig,
) -> Result<FracSolveResult> {
    frac_apply_inverse_with(op, b, plan, cfg, Normalization::default())
}

/// `u = delta^(-alpha) sum_i w_i (gamma_i A/delta + beta_i I)^-1 b`.
///
/// Node solves may run in parallel; contributions are summed in ascending
/// node order, so the result does not depend on scheduling.
pub fn frac_apply_inverse_with(
    op: &EllipticOperator,
    b: &GridFunction,
    plan: &OperatorQuadraturePlan,
    cfg: &SolveConfig,
    normalization: Normalization,
) -> Result<FracSolveResult> {
    let start = Instant::now();
    let bound = op.min_eigenvalue().value;
    if !(bound > 0.0) {
        return Err(Error::domain(format!("operator is not positive definite (delta = {bound})")));
    }
    let delta = match normalization {
        Normalization::IfNeeded if bound >= 1.0 => 1.0,
        _ => bound,
    };
    let scaled = op.scaled(delta)?;
    let solver = ShiftedSolver::new(&scaled, *cfg)?;

    let active: Vec<(usize, PlanNode)> = plan.active_nodes().map(|(i, n)| (i, *n)).collect();
    let solve_node = |&(i, node): &(usize, PlanNode)| {
        solver
            .solve(node.gamma, node.beta, b)
            .map(|s| (node.weight, s))
            .map_err(|e| Error::NodeSolve {
                node: i,
                source: Box::new(e),
            })
    };

    let mut acc = vec![0.0; b.len()];
    let mut iterations = 0;
    #[cfg(feature = "parallel")]
    let chunk = 2 * rayon::current_num_threads().max(1);
    #[cfg(not(feature = "parallel"))]
    let chunk = 1;
    for batch in active.chunks(chunk) {
        #[cfg(feature = "parallel")]
        let solved: Vec<Result<(f64, crate::shifted::Solution)>> = {
            use rayon::prelude::*;
            batch.par_iter().map(solve_node).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let solved: Vec<Result<(f64, crate::shifted::Solution)>> = batch.iter().map(solve_node).collect();

        for item in solved {
            let (weight, s) = item?;
            iterations += s.iterations;
            for (a, v) in acc.iter_mut().zip(s.w.values()) {
                *a += weight * v;
            }
        }
    }
    let factor = delta.powf(-plan.alpha().get());
    acc.iter_mut().for_each(|v| *v *= factor);

    Ok(FracSolveResult {
        u: GridFunction::new(*b.grid(), acc)?,
        delta,
        node_count: active.len(),
        total_iterations: iterations,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

/// Which eigen-decomposition [`spectral_power_with`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectralPath {
    /// Sine transform when coefficients are constant, dense otherwise.
    Auto,
    /// Closed-form sine eigenpairs; constant coefficients only.
    Fast,
    /// Full symmetric eigendecomposition; at most `DENSE_LIMIT` unknowns.
    Dense,
}

/// Exact `A^(-alpha) b` (up to roundoff).
pub fn spectral_reference(op: &EllipticOperator, b: &GridFunction, alpha: Alpha) -> Result<GridFunction> {
    spectral_power_with(op, b, -alpha.get(), SpectralPath::Auto)
}

/// `A^p b` from the eigen-expansion of `A`, for any real `p`.
pub fn spectral_power_with(
    op: &EllipticOperator,
    b: &GridFunction,
    power: f64,
    path: SpectralPath,
) -> Result<GridFunction> {
    if b.grid() != op.grid() {
        return Err(Error::config("right-hand side lives on a different grid"));
    }
    let fast = match path {
        SpectralPath::Auto => op.coefficients().is_constant(),
        SpectralPath::Fast => true,
        SpectralPath::Dense => false,
    };
    if fast {
        let diag = Diagonalization::new(op)?;
        let u = diag.apply_fn(b.values(), |mu| mu.powf(power));
        return GridFunction::new(*b.grid(), u);
    }
    let k = op.grid().len();
    if k > DENSE_LIMIT {
        return Err(Error::config(format!(
            "no spectral path: variable coefficients and {k} unknowns exceed the dense limit {DENSE_LIMIT}"
        )));
    }
    let eig = SymmetricEigen::new(op.to_dense()?);
    let vt_b = eig.eigenvectors.transpose() * DVector::from_column_slice(b.values());
    let scaled = DVector::from_iterator(
        k,
        vt_b.iter().zip(eig.eigenvalues.iter()).map(|(c, mu)| c * mu.powf(power)),
    );
    let u: DVector<f64> = &eig.eigenvectors * scaled;
    GridFunction::new(*b.grid(), u.as_slice().to_vec())
}

/// Right-hand sides of the model problems on the unit square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RightHandSide {
    /// `sgn(x1 - 1/2) sgn(x2 - 1/2)`, with `sgn(0) = 0`.
    Sgn,
    /// `x1 x2`.
    Xy,
    /// `x1 (1 - x1) x2 (1 - x2)`.
    Bubble,
}

impl RightHandSide {
    pub const ALL: [RightHandSide; 3] = [RightHandSide::Sgn, RightHandSide::Xy, RightHandSide::Bubble];

    pub fn name(self) -> &'static str {
        match self {
            RightHandSide::Sgn => "sgn",
            RightHandSide::Xy => "xy",
            RightHandSide::Bubble => "bubble",
        }
    }

    pub fn eval(self, x1: f64, x2: f64) -> f64 {
        match self {
            RightHandSide::Sgn => sgn(x1 - 0.5) * sgn(x2 - 0.5),
            RightHandSide::Xy => x1 * x2,
            RightHandSide::Bubble => x1 * (1.0 - x1) * x2 * (1.0 - x2),
        }
    }
}

impl FromStr for RightHandSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sgn" => Ok(RightHandSide::Sgn),
            "xy" => Ok(RightHandSide::Xy),
            "bubble" => Ok(RightHandSide::Bubble),
            other => Err(Error::config(format!("unknown right-hand side '{other}'"))),
        }
    }
}

/// Three-valued sign; `f64::signum` maps 0 to 1.
fn sgn(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Samples a named right-hand side at the interior nodes.
pub fn rhs_library(rhs: RightHandSide, grid: GridSpec) -> GridFunction {
    GridFunction::from_fn(grid, |x1, x2| rhs.eval(x1, x2))
}

/// Relative errors `(||w - u||_2 / ||u||_2, ||w - u||_inf / ||u||_inf)`.
pub fn error_norms(w: &GridFunction, u_ref: &GridFunction) -> Result<(f64, f64)> {
    let diff = w.sub(u_ref)?;
    let (n2, ninf) = (u_ref.norm(), u_ref.max_abs());
    if n2 == 0.0 || ninf == 0.0 {
        return Err(Error::ZeroReference);
    }
    Ok((diff.norm() / n2, diff.max_abs() / ninf))
}

/// `y = u / max u` together with `max u`.
pub fn normalized_solution(u: &GridFunction) -> Result<(GridFunction, f64)> {
    let umax = u.max();
    if !(umax > 0.0) {
        return Err(Error::NonPositiveMax(umax));
    }
    Ok((u.scale(1.0 / umax), umax))
}
