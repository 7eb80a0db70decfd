//! Solvers for shifted systems `(gamma A + beta I) w = r`.

use serde::{Deserialize, Serialize};

use crate::dst::SineTransform2d;
use crate::error::{Error, Result};
use crate::grid::{dot, EllipticOperator, GridFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    /// Matrix-free, unpreconditioned conjugate gradients from a zero start.
    ConjugateGradient,
    /// Sine-transform diagonalization; constant coefficients only.
    FastDiagonalization,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveConfig {
    pub method: SolveMethod,
    /// Relative residual target for CG.
    pub rel_tol: f64,
    /// CG iteration cap; `None` means `10 sqrt(K)`.
    pub max_iter: Option<usize>,
}

impl SolveConfig {
    pub fn cg() -> Self {
        SolveConfig {
            method: SolveMethod::ConjugateGradient,
            rel_tol: 1e-12,
            max_iter: None,
        }
    }

    pub fn fast() -> Self {
        SolveConfig {
            method: SolveMethod::FastDiagonalization,
            ..SolveConfig::cg()
        }
    }

    /// Fast diagonalization when the operator allows it, CG otherwise.
    pub fn auto(op: &EllipticOperator) -> Self {
        if op.coefficients().is_constant() {
            SolveConfig::fast()
        } else {
            SolveConfig::cg()
        }
    }
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig::cg()
    }
}

/// `gamma A + beta I` for a given operator.
#[derive(Clone, Copy, Debug)]
pub struct ShiftedSystem<'a> {
    pub op: &'a EllipticOperator,
    pub gamma: f64,
    pub beta: f64,
}

impl<'a> ShiftedSystem<'a> {
    pub fn new(op: &'a EllipticOperator, gamma: f64, beta: f64) -> Result<Self> {
        check_shift(gamma, beta)?;
        Ok(ShiftedSystem { op, gamma, beta })
    }
}

fn check_shift(gamma: f64, beta: f64) -> Result<()> {
    if !(gamma >= 0.0 && beta >= 0.0) || !(gamma + beta > 0.0) || !(gamma + beta).is_finite() {
        return Err(Error::domain(format!(
            "shift coefficients must be non-negative and not both zero, got gamma = {gamma}, beta = {beta}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub w: GridFunction,
    /// CG iterations; zero for the direct path.
    pub iterations: usize,
}

/// Sine basis and eigenvalues of a constant-coefficient operator.
#[derive(Clone)]
pub(crate) struct Diagonalization {
    pub(crate) transform: SineTransform2d,
    pub(crate) eigenvalues: Vec<f64>,
}

impl Diagonalization {
    pub(crate) fn new(op: &EllipticOperator) -> Result<Self> {
        let eigenvalues = op.eigenvalues().ok_or_else(|| {
            Error::config("fast diagonalization requires constant coefficients on a rectangle")
        })?;
        let g = op.grid();
        Ok(Diagonalization {
            transform: SineTransform2d::new(g.n1, g.n2),
            eigenvalues,
        })
    }

    /// `f(A) r` for a scalar function of the eigenvalues.
    pub(crate) fn apply_fn(&self, r: &[f64], f: impl Fn(f64) -> f64) -> Vec<f64> {
        let mut coeffs = self.transform.forward(r);
        for (c, &mu) in coeffs.iter_mut().zip(&self.eigenvalues) {
            *c *= f(mu);
        }
        self.transform.inverse(&coeffs)
    }
}

/// Reusable solver for many shifts of one operator.
pub struct ShiftedSolver<'a> {
    op: &'a EllipticOperator,
    cfg: SolveConfig,
    diag: Option<Diagonalization>,
}

impl<'a> ShiftedSolver<'a> {
    pub fn new(op: &'a EllipticOperator, cfg: SolveConfig) -> Result<Self> {
        if !(cfg.rel_tol > 0.0) {
            return Err(Error::config(format!("relative tolerance must be positive, got {}", cfg.rel_tol)));
        }
        let diag = match cfg.method {
            SolveMethod::FastDiagonalization => Some(Diagonalization::new(op)?),
            SolveMethod::ConjugateGradient => None,
        };
        Ok(ShiftedSolver { op, cfg, diag })
    }

    pub fn operator(&self) -> &EllipticOperator {
        self.op
    }

    pub fn config(&self) -> &SolveConfig {
        &self.cfg
    }

    pub fn solve(&self, gamma: f64, beta: f64, r: &GridFunction) -> Result<Solution> {
        check_shift(gamma, beta)?;
        if r.grid() != self.op.grid() {
            return Err(Error::config("right-hand side lives on a different grid"));
        }
        if r.values().iter().all(|&v| v == 0.0) {
            return Ok(Solution {
                w: GridFunction::zeros(*r.grid()),
                iterations: 0,
            });
        }
        match &self.diag {
            Some(diag) => {
                let w = diag.apply_fn(r.values(), |mu| 1.0 / (gamma * mu + beta));
                Ok(Solution {
                    w: GridFunction::new(*r.grid(), w)?,
                    iterations: 0,
                })
            }
            None => {
                let (w, iterations) = self.cg(gamma, beta, r.values())?;
                Ok(Solution {
                    w: GridFunction::new(*r.grid(), w)?,
                    iterations,
                })
            }
        }
    }

    fn shifted_apply(&self, gamma: f64, beta: f64, x: &[f64], out: &mut [f64]) {
        if gamma != 0.0 {
            self.op.apply_into(x, out);
            for (o, &v) in out.iter_mut().zip(x) {
                *o = gamma * *o + beta * v;
            }
        } else {
            for (o, &v) in out.iter_mut().zip(x) {
                *o = beta * v;
            }
        }
    }

    fn cg(&self, gamma: f64, beta: f64, b: &[f64]) -> Result<(Vec<f64>, usize)> {
        let n = b.len();
        let max_iter = self
            .cfg
            .max_iter
            .unwrap_or_else(|| (10.0 * (n as f64).sqrt()).ceil() as usize);
        let target = self.cfg.rel_tol * dot(b, b).sqrt();

        let mut x = vec![0.0; n];
        let mut r = b.to_vec();
        let mut ap = vec![0.0; n];
        let mut iterations = 0;
        let mut residual = dot(&r, &r).sqrt();

        // The recursive residual drifts from the true one; restart from the
        // true residual until it also meets the target.
        while iterations < max_iter {
            let mut p = r.clone();
            let mut rr = residual * residual;
            while residual > target && iterations < max_iter {
                self.shifted_apply(gamma, beta, &p, &mut ap);
                let step = rr / dot(&p, &ap);
                for i in 0..n {
                    x[i] += step * p[i];
                    r[i] -= step * ap[i];
                }
                let rr_new = dot(&r, &r);
                iterations += 1;
                residual = rr_new.sqrt();
                let ratio = rr_new / rr;
                for i in 0..n {
                    p[i] = r[i] + ratio * p[i];
                }
                rr = rr_new;
            }
            self.shifted_apply(gamma, beta, &x, &mut ap);
            for i in 0..n {
                r[i] = b[i] - ap[i];
            }
            residual = dot(&r, &r).sqrt();
            if residual <= target {
                return Ok((x, iterations));
            }
        }
        Err(Error::Convergence {
            iterations,
            residual: residual / dot(b, b).sqrt(),
        })
    }
}

/// Solves one shifted system.
pub fn solve(sys: &ShiftedSystem<'_>, r: &GridFunction, cfg: &SolveConfig) -> Result<Solution> {
    ShiftedSolver::new(sys.op, *cfg)?.solve(sys.gamma, sys.beta, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Coefficients, GridSpec};
    use std::f64::consts::PI;

    fn residual(op: &EllipticOperator, gamma: f64, beta: f64, w: &GridFunction, r: &GridFunction) -> f64 {
        let aw = op.apply(w).unwrap().scale(gamma).add_scaled(beta, w).unwrap();
        aw.sub(r).unwrap().norm() / r.norm()
    }

    #[test]
    fn identity_system() {
        let g = GridSpec::unit_square(8).unwrap();
        let op = EllipticOperator::laplacian(g);
        let r = GridFunction::from_fn(g, |x, y| x - 2.0 * y);
        for cfg in [SolveConfig::cg(), SolveConfig::fast()] {
            let s = solve(&ShiftedSystem::new(&op, 0.0, 1.0).unwrap(), &r, &cfg).unwrap();
            for (a, b) in s.w.values().iter().zip(r.values()) {
                assert!((a - b).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn eigenvector_after_normalization() {
        let g = GridSpec::unit_square(12).unwrap();
        let (op, _) = EllipticOperator::laplacian(g).normalize().unwrap();
        let r = GridFunction::from_fn(g, |x, y| (PI * x).sin() * (PI * y).sin());
        for cfg in [SolveConfig::cg(), SolveConfig::fast()] {
            let s = solve(&ShiftedSystem::new(&op, 1.0, 0.0).unwrap(), &r, &cfg).unwrap();
            for (a, b) in s.w.values().iter().zip(r.values()) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn zero_rhs_short_circuits() {
        let g = GridSpec::unit_square(8).unwrap();
        let op = EllipticOperator::laplacian(g);
        let s = ShiftedSolver::new(&op, SolveConfig::cg())
            .unwrap()
            .solve(1.0, 0.0, &GridFunction::zeros(g))
            .unwrap();
        assert_eq!(s.iterations, 0);
        assert!(s.w.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn cg_residual_contract_variable() {
        let g = GridSpec::new(1.0, 2.0, 20, 30).unwrap();
        let op = EllipticOperator::new(
            g,
            Coefficients::variable(|x, y| 1.0 + x * y, |x, _| 2.0 * x, 1.0, 0.0).unwrap(),
        )
        .unwrap();
        let r = GridFunction::from_fn(g, |x, y| (5.0 * x).sin() + y);
        let solver = ShiftedSolver::new(&op, SolveConfig::cg()).unwrap();
        for (gamma, beta) in [(1.0, 0.0), (0.3, 0.7), (0.01, 5.0)] {
            let s = solver.solve(gamma, beta, &r).unwrap();
            assert!(residual(&op, gamma, beta, &s.w, &r) <= 1e-12);
        }
    }

    #[test]
    fn convergence_failure_reported() {
        let g = GridSpec::unit_square(32).unwrap();
        let op = EllipticOperator::laplacian(g);
        let cfg = SolveConfig {
            max_iter: Some(3),
            ..SolveConfig::cg()
        };
        let r = GridFunction::from_fn(g, |x, y| x * y);
        let err = ShiftedSolver::new(&op, cfg).unwrap().solve(1.0, 0.0, &r).unwrap_err();
        assert!(matches!(err, Error::Convergence { iterations: 3, .. }));
    }

    #[test]
    fn fast_path_rejects_variable_coefficients() {
        let g = GridSpec::unit_square(8).unwrap();
        let op = EllipticOperator::new(
            g,
            Coefficients::variable(|x, _| 1.0 + x, |_, _| 0.0, 1.0, 0.0).unwrap(),
        )
        .unwrap();
        assert!(matches!(ShiftedSolver::new(&op, SolveConfig::fast()), Err(Error::Config(_))));
    }

    #[test]
    fn invalid_shift_rejected() {
        let g = GridSpec::unit_square(4).unwrap();
        let op = EllipticOperator::laplacian(g);
        assert!(ShiftedSystem::new(&op, 0.0, 0.0).is_err());
        assert!(ShiftedSystem::new(&op, -1.0, 2.0).is_err());
    }

    #[test]
    fn more_shift_fewer_iterations() {
        let g = GridSpec::unit_square(32).unwrap();
        let (op, _) = EllipticOperator::laplacian(g).normalize().unwrap();
        let r = GridFunction::from_fn(g, |x, y| (x - 0.5).signum() * (y - 0.3).signum());
        let solver = ShiftedSolver::new(&op, SolveConfig::cg()).unwrap();
        let weak = solver.solve(1.0, 0.1, &r).unwrap().iterations;
        let strong = solver.solve(1.0, 10.0, &r).unwrap().iterations;
        assert!(strong <= weak, "{strong} > {weak}");
    }
}
