//! WebAssembly bindings for the demo page in `www/`.
//!
//! Build with `wasm-pack build crates/web --target web --out-dir www/pkg`
//! and serve `crates/web/www`.

pub mod demo;

use wasm_bindgen::prelude::*;

fn js(e: fracpow::error::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub struct ErrorCurve(demo::Curve);

#[wasm_bindgen]
impl ErrorCurve {
    #[wasm_bindgen(getter)]
    pub fn x(&self) -> Vec<f64> {
        self.0.x.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn error(&self) -> Vec<f64> {
        self.0.error.clone()
    }

    #[wasm_bindgen(getter, js_name = maxError)]
    pub fn max_error(&self) -> f64 {
        self.0.max_error
    }

    #[wasm_bindgen(getter, js_name = argmaxX)]
    pub fn argmax_x(&self) -> f64 {
        self.0.argmax_x
    }
}

/// `|r(x) - x^(-alpha)|` over a log-uniform scan of `[1, xMax]`.
#[wasm_bindgen(js_name = errorCurve)]
pub fn error_curve(
    alpha: f64,
    m: usize,
    kappa: f64,
    rule: &str,
    repr: &str,
    x_max: f64,
    samples_per_decade: usize,
) -> Result<ErrorCurve, JsError> {
    demo::error_curve(alpha, m, kappa, rule, repr, x_max, samples_per_decade)
        .map(ErrorCurve)
        .map_err(js)
}

#[wasm_bindgen(js_name = integrandProfile)]
pub fn integrand_profile(alpha: f64, kappa: f64, repr: &str, x: f64, samples: usize) -> Result<Vec<f64>, JsError> {
    demo::integrand_profile(alpha, kappa, repr, x, samples).map_err(js)
}

#[wasm_bindgen]
pub struct SolutionField(demo::Field);

#[wasm_bindgen]
impl SolutionField {
    #[wasm_bindgen(getter)]
    pub fn n(&self) -> usize {
        self.0.n
    }

    #[wasm_bindgen(getter)]
    pub fn y(&self) -> Vec<f64> {
        self.0.y.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn umax(&self) -> f64 {
        self.0.umax
    }

    #[wasm_bindgen(getter)]
    pub fn eps(&self) -> f64 {
        self.0.eps
    }

    #[wasm_bindgen(getter, js_name = epsInf)]
    pub fn eps_inf(&self) -> f64 {
        self.0.eps_inf
    }
}

/// Solves the model problem on an `n x n` unit-square grid.
#[wasm_bindgen(js_name = solutionField)]
pub fn solution_field(
    alpha: f64,
    m: usize,
    kappa: f64,
    rule: &str,
    n: usize,
    rhs: &str,
) -> Result<SolutionField, JsError> {
    demo::solution_field(alpha, m, kappa, rule, n, rhs)
        .map(SolutionField)
        .map_err(js)
}
