//! Type-I discrete sine transform and its 2D tensor product.
//!
//! The 1D transform of `x_1..x_{N-1}` is
//! `X_k = sum_j x_j sin(pi j k / N)`, `k = 1..N-1`; applying it twice gives
//! `N/2` times the input. It is computed from a complex FFT of length `2N`
//! over the odd extension `[0, x, 0, -reverse(x)]`.

use std::sync::Arc;

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};

#[derive(Clone)]
pub struct SineTransform {
    n: usize,
    fft: Arc<dyn Fft<f64>>,
}

impl SineTransform {
    /// Transform for `n - 1` interior values (`n` intervals).
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "sine transform needs at least two intervals");
        let fft = FftPlanner::new().plan_fft_forward(2 * n);
        SineTransform { n, fft }
    }

    /// Number of interior values.
    pub fn len(&self) -> usize {
        self.n - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn work(&self) -> (Vec<Complex<f64>>, Vec<Complex<f64>>) {
        (
            vec![Complex::default(); 2 * self.n],
            vec![Complex::default(); self.fft.get_inplace_scratch_len()],
        )
    }

    fn transform_with(&self, data: &mut [f64], buf: &mut [Complex<f64>], scratch: &mut [Complex<f64>]) {
        let n = self.n;
        debug_assert_eq!(data.len(), n - 1);
        buf[0] = Complex::default();
        buf[n] = Complex::default();
        for (j, &v) in data.iter().enumerate() {
            buf[j + 1] = Complex::new(v, 0.0);
            buf[2 * n - 1 - j] = Complex::new(-v, 0.0);
        }
        self.fft.process_with_scratch(buf, scratch);
        // FFT of the odd extension is -2i X_k.
        for (k, out) in data.iter_mut().enumerate() {
            *out = -0.5 * buf[k + 1].im;
        }
    }

    /// In-place unnormalized transform.
    pub fn transform(&self, data: &mut [f64]) {
        let (mut buf, mut scratch) = self.work();
        self.transform_with(data, &mut buf, &mut scratch);
    }
}

/// Sine transform along both axes of a row-major `(m2, m1)` array.
#[derive(Clone)]
pub struct SineTransform2d {
    rows: SineTransform,
    cols: SineTransform,
}

impl SineTransform2d {
    /// For a grid with `n1 x n2` intervals.
    pub fn new(n1: usize, n2: usize) -> Self {
        SineTransform2d {
            rows: SineTransform::new(n1),
            cols: SineTransform::new(n2),
        }
    }

    /// Unnormalized forward transform: coefficients of `values` against
    /// `sin(k1 pi i1 / N1) sin(k2 pi i2 / N2)`, scaled by `N1 N2 / 4`.
    pub fn forward(&self, values: &[f64]) -> Vec<f64> {
        let mut out = values.to_vec();
        self.apply(&mut out);
        out
    }

    /// Exact inverse of [`SineTransform2d::forward`].
    pub fn inverse(&self, coeffs: &[f64]) -> Vec<f64> {
        let mut out = coeffs.to_vec();
        self.apply(&mut out);
        let s = 4.0 / ((self.rows.n * self.cols.n) as f64);
        out.iter_mut().for_each(|v| *v *= s);
        out
    }

    fn apply(&self, data: &mut [f64]) {
        let m1 = self.rows.len();
        let m2 = self.cols.len();
        assert_eq!(data.len(), m1 * m2, "sine transform size mismatch");

        let (mut buf, mut scratch) = self.rows.work();
        for row in data.chunks_exact_mut(m1) {
            self.rows.transform_with(row, &mut buf, &mut scratch);
        }

        let (mut buf, mut scratch) = self.cols.work();
        let mut col = vec![0.0; m2];
        for i1 in 0..m1 {
            for (i2, c) in col.iter_mut().enumerate() {
                *c = data[i2 * m1 + i1];
            }
            self.cols.transform_with(&mut col, &mut buf, &mut scratch);
            for (i2, c) in col.iter().enumerate() {
                data[i2 * m1 + i1] = *c;
            }
        }
    }
}
