//! Uniform rectangular grids, grid functions and the five-point elliptic
//! operator `-div(a grad u) + c u` with homogeneous Dirichlet conditions.
//!
//! Interior values are stored row-major over `(i2, i1)` with `i1` fastest:
//! node `(i1, i2)`, `1 <= i_n <= N_n - 1`, lives at index
//! `(i2 - 1) * (N1 - 1) + (i1 - 1)`.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest interior node count for which dense matrices are assembled.
pub const DENSE_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub l1: f64,
    pub l2: f64,
    pub n1: usize,
    pub n2: usize,
}

impl GridSpec {
    pub fn new(l1: f64, l2: f64, n1: usize, n2: usize) -> Result<Self> {
        if !(l1 > 0.0 && l2 > 0.0) || !l1.is_finite() || !l2.is_finite() {
            return Err(Error::config(format!("side lengths must be positive, got {l1} x {l2}")));
        }
        if n1 < 2 || n2 < 2 {
            return Err(Error::config(format!(
                "each direction needs at least 2 intervals, got {n1} x {n2}"
            )));
        }
        Ok(GridSpec { l1, l2, n1, n2 })
    }

    /// `n x n` grid on the unit square.
    pub fn unit_square(n: usize) -> Result<Self> {
        GridSpec::new(1.0, 1.0, n, n)
    }

    #[inline]
    pub fn h1(&self) -> f64 {
        self.l1 / self.n1 as f64
    }

    #[inline]
    pub fn h2(&self) -> f64 {
        self.l2 / self.n2 as f64
    }

    /// Interior nodes per row.
    #[inline]
    pub fn m1(&self) -> usize {
        self.n1 - 1
    }

    /// Interior rows.
    #[inline]
    pub fn m2(&self) -> usize {
        self.n2 - 1
    }

    /// Interior node count `K = (N1 - 1)(N2 - 1)`.
    #[inline]
    pub fn len(&self) -> usize {
        self.m1() * self.m2()
    }

    /// Always `false`: a grid has at least one interior node.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Storage index of interior node `(i1, i2)`, both 1-based.
    #[inline]
    pub fn index(&self, i1: usize, i2: usize) -> usize {
        debug_assert!((1..self.n1).contains(&i1) && (1..self.n2).contains(&i2));
        (i2 - 1) * self.m1() + (i1 - 1)
    }

    /// Coordinates of the node stored at `idx`.
    #[inline]
    pub fn node(&self, idx: usize) -> (f64, f64) {
        let i1 = idx % self.m1() + 1;
        let i2 = idx / self.m1() + 1;
        // i l / N rather than i h: mid-lines land exactly on l/2 for even N.
        (
            i1 as f64 * self.l1 / self.n1 as f64,
            i2 as f64 * self.l2 / self.n2 as f64,
        )
    }

    /// Eigenvalues `(4/h^2) sin^2(k pi h / (2 l))`, `k = 1..N-1`, of the 1D
    /// second difference along each axis.
    pub fn laplacian_eigenvalues_1d(&self) -> (Vec<f64>, Vec<f64>) {
        let axis = |l: f64, n: usize| {
            let h = l / n as f64;
            (1..n)
                .map(|k| {
                    let s = (k as f64 * PI * h / (2.0 * l)).sin();
                    4.0 / (h * h) * s * s
                })
                .collect()
        };
        (axis(self.l1, self.n1), axis(self.l2, self.n2))
    }

    /// Smallest eigenvalue of the five-point Laplacian on this grid.
    pub fn laplacian_min_eigenvalue(&self) -> f64 {
        let h1 = self.h1();
        let h2 = self.h2();
        let s1 = (PI * h1 / (2.0 * self.l1)).sin();
        let s2 = (PI * h2 / (2.0 * self.l2)).sin();
        4.0 / (h1 * h1) * s1 * s1 + 4.0 / (h2 * h2) * s2 * s2
    }

    fn check_compatible(&self, other: &GridSpec) -> Result<()> {
        if self != other {
            return Err(Error::config(format!(
                "grid functions live on different grids: {self:?} vs {other:?}"
            )));
        }
        Ok(())
    }
}

/// Values at the interior nodes of a grid; zero on the boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    grid: GridSpec,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: GridSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::DimensionMismatch {
                expected: grid.len(),
                found: values.len(),
            });
        }
        Ok(GridFunction { grid, values })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        GridFunction {
            grid,
            values: vec![0.0; grid.len()],
        }
    }

    /// Samples `f(x1, x2)` at the interior nodes.
    pub fn from_fn(grid: GridSpec, f: impl Fn(f64, f64) -> f64) -> Self {
        let values = (0..grid.len())
            .map(|idx| {
                let (x1, x2) = grid.node(idx);
                f(x1, x2)
            })
            .collect();
        GridFunction { grid, values }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at interior node `(i1, i2)`.
    pub fn at(&self, i1: usize, i2: usize) -> f64 {
        self.values[self.grid.index(i1, i2)]
    }

    /// `(u, w) = sum u w h1 h2`.
    pub fn dot(&self, other: &GridFunction) -> Result<f64> {
        self.grid.check_compatible(&other.grid)?;
        Ok(dot(&self.values, &other.values) * self.grid.h1() * self.grid.h2())
    }

    pub fn norm(&self) -> f64 {
        (dot(&self.values, &self.values) * self.grid.h1() * self.grid.h2()).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn scale(&self, s: f64) -> GridFunction {
        self.map(|v| v * s)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> GridFunction {
        GridFunction {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, s: f64, other: &GridFunction) -> Result<GridFunction> {
        self.grid.check_compatible(&other.grid)?;
        Ok(GridFunction {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + s * b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &GridFunction) -> Result<GridFunction> {
        self.add_scaled(-1.0, other)
    }
}

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub type Field = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// Coefficients `a(x)`, `c(x)` of `-div(a grad u) + c u`.
#[derive(Clone)]
pub enum Coefficients {
    Constant {
        a: f64,
        c: f64,
    },
    /// Variable fields with certified bounds `a >= a_min > 0`, `c >= c_min >= 0`.
    Variable {
        a: Field,
        c: Field,
        a_min: f64,
        c_min: f64,
    },
}

impl Coefficients {
    pub fn constant(a: f64, c: f64) -> Result<Self> {
        if !(a > 0.0) || !(c >= 0.0) || !a.is_finite() || !c.is_finite() {
            return Err(Error::domain(format!("need a > 0 and c >= 0, got a = {a}, c = {c}")));
        }
        Ok(Coefficients::Constant { a, c })
    }

    /// The Laplacian, `a = 1`, `c = 0`.
    pub fn laplacian() -> Self {
        Coefficients::Constant { a: 1.0, c: 0.0 }
    }

    pub fn variable(
        a: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        c: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        a_min: f64,
        c_min: f64,
    ) -> Result<Self> {
        if !(a_min > 0.0) || !(c_min >= 0.0) {
            return Err(Error::domain(format!(
                "need a_min > 0 and c_min >= 0, got {a_min}, {c_min}"
            )));
        }
        Ok(Coefficients::Variable {
            a: Arc::new(a),
            c: Arc::new(c),
            a_min,
            c_min,
        })
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Coefficients::Constant { .. })
    }

    fn a_at(&self, x1: f64, x2: f64) -> f64 {
        match self {
            Coefficients::Constant { a, .. } => *a,
            Coefficients::Variable { a, .. } => a(x1, x2),
        }
    }

    fn c_at(&self, x1: f64, x2: f64) -> f64 {
        match self {
            Coefficients::Constant { c, .. } => *c,
            Coefficients::Variable { c, .. } => c(x1, x2),
        }
    }
}

impl fmt::Debug for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Constant { a, c } => {
                f.debug_struct("Constant").field("a", a).field("c", c).finish()
            }
            Coefficients::Variable { a_min, c_min, .. } => f
                .debug_struct("Variable")
                .field("a_min", a_min)
                .field("c_min", c_min)
                .finish_non_exhaustive(),
        }
    }
}

/// Smallest eigenvalue, or a certified lower bound for it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueBound {
    pub value: f64,
    /// `true` when `value` is the eigenvalue itself.
    pub exact: bool,
}

/// Sampled stencil coefficients for variable fields.
#[derive(Clone, Debug)]
struct Stencil {
    /// `a` at `((i1 + 1/2) h1, i2 h2)`, `i1 = 0..N1-1`, per interior row.
    ax: Vec<f64>,
    /// `a` at `(i1 h1, (i2 + 1/2) h2)`, `i2 = 0..N2-1`, per interior column.
    ay: Vec<f64>,
    c: Vec<f64>,
}

/// Five-point operator `A / scale` on a grid.
///
/// `scale` is 1 for the operator itself; [`EllipticOperator::normalize`]
/// produces a copy with `scale = delta` so that the result is `>= I`.
#[derive(Clone, Debug)]
pub struct EllipticOperator {
    grid: GridSpec,
    coeffs: Coefficients,
    scale: f64,
    stencil: Option<Arc<Stencil>>,
}

impl EllipticOperator {
    pub fn new(grid: GridSpec, coeffs: Coefficients) -> Result<Self> {
        let stencil = match &coeffs {
            Coefficients::Constant { .. } => None,
            Coefficients::Variable { .. } => Some(Arc::new(sample_stencil(&grid, &coeffs)?)),
        };
        Ok(EllipticOperator {
            grid,
            coeffs,
            scale: 1.0,
            stencil,
        })
    }

    /// Five-point Laplacian on the grid.
    pub fn laplacian(grid: GridSpec) -> Self {
        EllipticOperator {
            grid,
            coeffs: Coefficients::laplacian(),
            scale: 1.0,
            stencil: None,
        }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn coefficients(&self) -> &Coefficients {
        &self.coeffs
    }

    /// Divisor applied to the unscaled operator.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Copy of this operator divided by an extra factor `s > 0`.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        if !(s > 0.0) || !s.is_finite() {
            return Err(Error::domain(format!("scale factor must be positive, got {s}")));
        }
        let mut op = self.clone();
        op.scale *= s;
        Ok(op)
    }

    /// `A u`.
    pub fn apply(&self, u: &GridFunction) -> Result<GridFunction> {
        self.grid.check_compatible(u.grid())?;
        let mut out = vec![0.0; self.grid.len()];
        self.apply_into(u.values(), &mut out);
        Ok(GridFunction {
            grid: self.grid,
            values: out,
        })
    }

    /// `out = A u` on raw storage vectors.
    pub(crate) fn apply_into(&self, u: &[f64], out: &mut [f64]) {
        let g = &self.grid;
        let (m1, m2) = (g.m1(), g.m2());
        debug_assert_eq!(u.len(), m1 * m2);
        let r1 = 1.0 / (g.h1() * g.h1() * self.scale);
        let r2 = 1.0 / (g.h2() * g.h2() * self.scale);
        let get = |i1: usize, i2: usize| -> f64 {
            // 0-based interior indices, with boundary zeros at -1 and m.
            if i1 >= m1 || i2 >= m2 {
                0.0
            } else {
                u[i2 * m1 + i1]
            }
        };
        match (&self.coeffs, &self.stencil) {
            (Coefficients::Constant { a, c }, _) => {
                let c = c / self.scale;
                for i2 in 0..m2 {
                    for i1 in 0..m1 {
                        let v = u[i2 * m1 + i1];
                        let w = get(i1.wrapping_sub(1), i2);
                        let e = get(i1 + 1, i2);
                        let s = get(i1, i2.wrapping_sub(1));
                        let n = get(i1, i2 + 1);
                        out[i2 * m1 + i1] =
                            a * (r1 * (2.0 * v - w - e) + r2 * (2.0 * v - s - n)) + c * v;
                    }
                }
            }
            (Coefficients::Variable { .. }, Some(st)) => {
                let inv = 1.0 / self.scale;
                for i2 in 0..m2 {
                    for i1 in 0..m1 {
                        let k = i2 * m1 + i1;
                        let v = u[k];
                        // ax row i2 has N1 = m1 + 1 half-point entries.
                        let aw = st.ax[i2 * (m1 + 1) + i1];
                        let ae = st.ax[i2 * (m1 + 1) + i1 + 1];
                        let a_s = st.ay[i1 * (m2 + 1) + i2];
                        let an = st.ay[i1 * (m2 + 1) + i2 + 1];
                        out[k] = r1 * (aw * (v - get(i1.wrapping_sub(1), i2)) - ae * (get(i1 + 1, i2) - v))
                            + r2 * (a_s * (v - get(i1, i2.wrapping_sub(1))) - an * (get(i1, i2 + 1) - v))
                            + st.c[k] * inv * v;
                    }
                }
            }
            (Coefficients::Variable { .. }, None) => unreachable!("variable coefficients are sampled on construction"),
        }
    }

    /// Smallest eigenvalue for constant coefficients; otherwise the bound
    /// `a_min * mu_1(Laplacian) + c_min`.
    pub fn min_eigenvalue(&self) -> EigenvalueBound {
        let lap = self.grid.laplacian_min_eigenvalue();
        match &self.coeffs {
            Coefficients::Constant { a, c } => EigenvalueBound {
                value: (a * lap + c) / self.scale,
                exact: true,
            },
            Coefficients::Variable { a_min, c_min, .. } => EigenvalueBound {
                value: (a_min * lap + c_min) / self.scale,
                exact: false,
            },
        }
    }

    /// Returns `A / delta` together with `delta`, the smallest eigenvalue (or
    /// its lower bound), so that the returned operator is `>= I`.
    pub fn normalize(&self) -> Result<(EllipticOperator, f64)> {
        let delta = self.min_eigenvalue().value;
        if !(delta > 0.0) {
            return Err(Error::domain(format!("operator is not positive definite (delta = {delta})")));
        }
        Ok((self.scaled(delta)?, delta))
    }

    /// All eigenvalues for constant coefficients, in storage order of the
    /// sine modes `(k1, k2)`.
    pub fn eigenvalues(&self) -> Option<Vec<f64>> {
        let Coefficients::Constant { a, c } = self.coeffs else {
            return None;
        };
        let (l1, l2) = self.grid.laplacian_eigenvalues_1d();
        let mut out = Vec::with_capacity(self.grid.len());
        for &e2 in &l2 {
            for &e1 in &l1 {
                out.push((a * (e1 + e2) + c) / self.scale);
            }
        }
        Some(out)
    }

    /// Dense matrix of the operator in storage order.
    pub fn to_dense(&self) -> Result<DMatrix<f64>> {
        let k = self.grid.len();
        if k > DENSE_LIMIT {
            return Err(Error::config(format!(
                "dense assembly limited to {DENSE_LIMIT} unknowns, grid has {k}"
            )));
        }
        let mut m = DMatrix::zeros(k, k);
        let mut e = vec![0.0; k];
        let mut col = vec![0.0; k];
        for j in 0..k {
            e[j] = 1.0;
            self.apply_into(&e, &mut col);
            // Only the five stencil neighbours of j are non-zero.
            for (i, &v) in col.iter().enumerate() {
                if v != 0.0 {
                    m[(i, j)] = v;
                }
            }
            e[j] = 0.0;
        }
        Ok(m)
    }
}

fn sample_stencil(grid: &GridSpec, coeffs: &Coefficients) -> Result<Stencil> {
    let (m1, m2) = (grid.m1(), grid.m2());
    let (h1, h2) = (grid.h1(), grid.h2());
    let mut ax = Vec::with_capacity(m2 * (m1 + 1));
    for i2 in 1..=m2 {
        for i1 in 0..=m1 {
            ax.push(coeffs.a_at((i1 as f64 + 0.5) * h1, i2 as f64 * h2));
        }
    }
    let mut ay = Vec::with_capacity(m1 * (m2 + 1));
    for i1 in 1..=m1 {
        for i2 in 0..=m2 {
            ay.push(coeffs.a_at(i1 as f64 * h1, (i2 as f64 + 0.5) * h2));
        }
    }
    if let Some(bad) = ax.iter().chain(&ay).find(|v| !(**v > 0.0) || !v.is_finite()) {
        return Err(Error::domain(format!("coefficient a must be positive, sampled {bad}")));
    }
    let c: Vec<f64> = (0..grid.len())
        .map(|idx| {
            let (x1, x2) = grid.node(idx);
            coeffs.c_at(x1, x2)
        })
        .collect();
    if let Some(bad) = c.iter().find(|v| !(**v >= 0.0) || !v.is_finite()) {
        return Err(Error::domain(format!("coefficient c must be non-negative, sampled {bad}")));
    }
    Ok(Stencil { ax, ay, c })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn first_mode(grid: GridSpec) -> GridFunction {
        GridFunction::from_fn(grid, |x1, x2| {
            (PI * x1 / grid.l1).sin() * (PI * x2 / grid.l2).sin()
        })
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(1.0, 1.0, 1, 4).is_err());
        assert!(GridSpec::new(0.0, 1.0, 4, 4).is_err());
        let g = GridSpec::new(2.0, 1.0, 4, 3).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.index(1, 1), 0);
        assert_eq!(g.index(3, 1), 2);
        assert_eq!(g.index(1, 2), 3);
        assert_eq!(g.node(4), (1.0, 2.0 / 3.0));
    }

    #[test]
    fn dimension_mismatch() {
        let g = GridSpec::unit_square(4).unwrap();
        assert!(matches!(
            GridFunction::new(g, vec![0.0; 5]),
            Err(Error::DimensionMismatch { expected: 9, found: 5 })
        ));
        let other = GridFunction::zeros(GridSpec::unit_square(5).unwrap());
        assert!(EllipticOperator::laplacian(g).apply(&other).is_err());
    }

    #[test]
    fn first_mode_is_eigenvector() {
        let g = GridSpec::new(1.0, 2.0, 8, 12).unwrap();
        let op = EllipticOperator::laplacian(g);
        let u = first_mode(g);
        let au = op.apply(&u).unwrap();
        let mu = g.laplacian_min_eigenvalue();
        for (x, y) in au.values().iter().zip(u.values()) {
            assert!((x - mu * y).abs() < 1e-11 * mu);
        }
    }

    #[test]
    fn zero_maps_to_zero() {
        let g = GridSpec::unit_square(6).unwrap();
        let op = EllipticOperator::laplacian(g);
        assert!(op.apply(&GridFunction::zeros(g)).unwrap().values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn reaction_term_adds_identity() {
        let g = GridSpec::unit_square(6).unwrap();
        let lap = EllipticOperator::laplacian(g);
        let shifted = EllipticOperator::new(g, Coefficients::constant(1.0, 1.0).unwrap()).unwrap();
        let u = GridFunction::from_fn(g, |x, y| x * x - 3.0 * y + x * y);
        let want = lap.apply(&u).unwrap().add_scaled(1.0, &u).unwrap();
        let got = shifted.apply(&u).unwrap();
        for (a, b) in got.values().iter().zip(want.values()) {
            assert!((a - b).abs() < 1e-12 * a.abs().max(1.0));
        }
    }

    #[test]
    fn continuum_limit_of_min_eigenvalue() {
        let mu = GridSpec::unit_square(1024).unwrap().laplacian_min_eigenvalue();
        assert!((mu - 2.0 * PI * PI).abs() < 1e-4);
    }

    #[test]
    fn reaction_shift_moves_min_eigenvalue() {
        let g = GridSpec::unit_square(8).unwrap();
        let base = EllipticOperator::laplacian(g).min_eigenvalue();
        let shifted = EllipticOperator::new(g, Coefficients::constant(1.0, 5.0).unwrap())
            .unwrap()
            .min_eigenvalue();
        assert!(base.exact && shifted.exact);
        assert!((shifted.value - base.value - 5.0).abs() < 1e-12);
    }

    #[test]
    fn variable_bound_flagged() {
        let g = GridSpec::unit_square(8).unwrap();
        let c = Coefficients::variable(|x, _| 1.0 + x, |_, y| y, 1.0, 0.0).unwrap();
        let op = EllipticOperator::new(g, c).unwrap();
        let b = op.min_eigenvalue();
        assert!(!b.exact);
        assert!((b.value - g.laplacian_min_eigenvalue()).abs() < 1e-12);
    }

    #[test]
    fn variable_with_constant_fields_matches_constant() {
        let g = GridSpec::new(1.0, 0.5, 7, 5).unwrap();
        let var = EllipticOperator::new(
            g,
            Coefficients::variable(|_, _| 2.5, |_, _| 0.75, 2.5, 0.75).unwrap(),
        )
        .unwrap();
        let con = EllipticOperator::new(g, Coefficients::constant(2.5, 0.75).unwrap()).unwrap();
        let u = GridFunction::from_fn(g, |x, y| (3.0 * x).cos() + y * y);
        let a = var.apply(&u).unwrap();
        let b = con.apply(&u).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            assert!((x - y).abs() < 1e-11 * x.abs().max(1.0));
        }
    }

    #[test]
    fn rejects_nonpositive_a() {
        let g = GridSpec::unit_square(4).unwrap();
        let c = Coefficients::variable(|x, _| x - 0.5, |_, _| 0.0, 1.0, 0.0).unwrap();
        assert!(matches!(EllipticOperator::new(g, c), Err(Error::Domain(_))));
        assert!(Coefficients::constant(0.0, 1.0).is_err());
        assert!(Coefficients::constant(1.0, -1.0).is_err());
    }

    #[test]
    fn dense_matches_apply() {
        let g = GridSpec::new(1.0, 1.0, 5, 4).unwrap();
        let op = EllipticOperator::new(
            g,
            Coefficients::variable(|x, y| 1.0 + x * y, |x, _| x, 1.0, 0.0).unwrap(),
        )
        .unwrap();
        let m = op.to_dense().unwrap();
        assert_eq!(m, m.transpose());
        let u = GridFunction::from_fn(g, |x, y| x - y * y);
        let au = op.apply(&u).unwrap();
        let mu = &m * nalgebra::DVector::from_column_slice(u.values());
        for (a, b) in au.values().iter().zip(mu.iter()) {
            assert!((a - b).abs() < 1e-12 * a.abs().max(1.0));
        }
    }

    #[test]
    fn normalize_scales_to_unit_min() {
        let g = GridSpec::unit_square(8).unwrap();
        let (n, delta) = EllipticOperator::laplacian(g).normalize().unwrap();
        assert!((delta - g.laplacian_min_eigenvalue()).abs() < 1e-12);
        assert!((n.min_eigenvalue().value - 1.0).abs() < 1e-14);
        let ev = n.eigenvalues().unwrap();
        assert!((ev.iter().copied().fold(f64::INFINITY, f64::min) - 1.0).abs() < 1e-14);
    }
}
