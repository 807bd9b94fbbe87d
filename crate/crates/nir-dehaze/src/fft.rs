//! Thin 2D FFT wrapper: row/column passes over a real plane with cached
//! plans. Used by the solver to invert circulant quadratic systems under
//! periodic boundaries.

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

pub(crate) struct Fft2d {
    width: usize,
    height: usize,
    row_fwd: Arc<dyn Fft<f64>>,
    row_inv: Arc<dyn Fft<f64>>,
    col_fwd: Arc<dyn Fft<f64>>,
    col_inv: Arc<dyn Fft<f64>>,
}

fn transpose(src: &[Complex<f64>], width: usize, height: usize) -> Vec<Complex<f64>> {
    let mut out = vec![Complex::new(0.0, 0.0); src.len()];
    for y in 0..height {
        for x in 0..width {
            out[x * height + y] = src[y * width + x];
        }
    }
    out
}

impl Fft2d {
    pub fn new(width: usize, height: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            width,
            height,
            row_fwd: planner.plan_fft_forward(width),
            row_inv: planner.plan_fft_inverse(width),
            col_fwd: planner.plan_fft_forward(height),
            col_inv: planner.plan_fft_inverse(height),
        }
    }

    /// Unnormalized 2D DFT of a row-major real plane; output index
    /// `ky * width + kx`.
    pub fn forward(&self, plane: &[f64]) -> Vec<Complex<f64>> {
        debug_assert_eq!(plane.len(), self.width * self.height);
        let mut buf: Vec<Complex<f64>> =
            plane.iter().map(|&v| Complex::new(v, 0.0)).collect();
        self.row_fwd.process(&mut buf);
        let mut cols = transpose(&buf, self.width, self.height);
        self.col_fwd.process(&mut cols);
        transpose(&cols, self.height, self.width)
    }

    /// Inverse 2D DFT with 1/(w*h) normalization; returns the real part.
    pub fn inverse(&self, mut freq: Vec<Complex<f64>>) -> Vec<f64> {
        debug_assert_eq!(freq.len(), self.width * self.height);
        self.row_inv.process(&mut freq);
        let mut cols = transpose(&freq, self.width, self.height);
        self.col_inv.process(&mut cols);
        let out = transpose(&cols, self.height, self.width);
        let scale = 1.0 / (self.width * self.height) as f64;
        out.iter().map(|c| c.re * scale).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::TAU;

    fn naive_dft2(plane: &[f64], w: usize, h: usize) -> Vec<Complex<f64>> {
        let mut out = vec![Complex::new(0.0, 0.0); w * h];
        for ky in 0..h {
            for kx in 0..w {
                let mut acc = Complex::new(0.0, 0.0);
                for y in 0..h {
                    for x in 0..w {
                        let phase = -TAU
                            * (kx as f64 * x as f64 / w as f64
                                + ky as f64 * y as f64 / h as f64);
                        acc += plane[y * w + x] * Complex::from_polar(1.0, phase);
                    }
                }
                out[ky * w + kx] = acc;
            }
        }
        out
    }

    #[test]
    fn forward_matches_naive_dft() {
        let mut r = ChaCha8Rng::seed_from_u64(31);
        let (w, h) = (8, 6);
        let plane: Vec<f64> = (0..w * h).map(|_| r.gen::<f64>() - 0.5).collect();
        let fft = Fft2d::new(w, h);
        let got = fft.forward(&plane);
        let want = naive_dft2(&plane, w, h);
        for (g, e) in got.iter().zip(&want) {
            assert!((g - e).norm() < 1e-10);
        }
    }

    #[test]
    fn round_trip_is_identity() {
        let mut r = ChaCha8Rng::seed_from_u64(32);
        for (w, h) in [(16, 16), (7, 5), (1, 9)] {
            let plane: Vec<f64> = (0..w * h).map(|_| r.gen::<f64>() * 4.0 - 2.0).collect();
            let fft = Fft2d::new(w, h);
            let back = fft.inverse(fft.forward(&plane));
            for (a, b) in plane.iter().zip(&back) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }
}
