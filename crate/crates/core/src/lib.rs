//! Fractional powers of elliptic operators via quadrature.
//!
//! `x^(-alpha)`, `0 < alpha < 1`, `x >= 1`, is written as an integral over
//! `[0, 1]` whose integrand is a sum of terms `(gamma x + beta)^-1`. A
//! composite midpoint or Simpson rule turns it into a finite sum, and
//! substituting a grid operator `A >= I` for `x` gives
//! `A^(-alpha) b ~ sum_i w_i (gamma_i A + beta_i I)^-1 b`.
//!
//! * [`scalar`]: integrands, scalar approximations and error scans.
//! * [`grid`]: five-point elliptic operator on a rectangle.
//! * [`shifted`]: solvers for `(gamma A + beta I) w = r`.
//! * [`fracop`]: the operator approximation and its spectral reference.

// Negated comparisons reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dst;
pub mod error;
pub mod fracop;
pub mod grid;
pub mod io;
pub mod quadrature;
pub mod scalar;
pub mod shifted;

pub use error::{Error, Result};
pub use fracop::{
    build_plan, default_kappa, error_norms, frac_apply_inverse, frac_apply_inverse_with,
    normalized_solution, rhs_library, spectral_power_with, spectral_reference, FracSolveResult,
    Normalization, OperatorQuadraturePlan, PlanNode, RightHandSide, SolveMetadata, SpectralPath,
};
pub use grid::{Coefficients, EigenvalueBound, EllipticOperator, GridFunction, GridSpec};
pub use quadrature::Rule;
pub use scalar::{
    approx_frac_power, error_scan, Alpha, ErrorReport, Family, QuadratureSpec, Representation,
    ScanSpec,
};
pub use shifted::{solve, ShiftedSolver, ShiftedSystem, SolveConfig, SolveMethod};
