//! Fourier differentiation on the periodic grids.
//!
//! Real fields are transformed with a complex FFT per axis and derivative
//! symbols act bin-wise. Wavenumbers follow the symmetric truncation
//! convention `k = 0, 1, …, n/2, −n/2+1, …, −1`; the Nyquist bin `n/2` is
//! kept for even-order operators and zeroed for odd ones, which keeps
//! first-derivative operators real and antisymmetric.

use std::cell::RefCell;
use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::exec;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn plan(len: usize, dir: FftDirection) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| p.borrow_mut().plan_fft(len, dir))
}

/// Grid layout normalized to two axes; 1-D grids are `[n, 1]`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Layout {
    pub shape: [usize; 2],
    pub periods: [f64; 2],
}

impl Layout {
    pub fn len(&self) -> usize {
        self.shape[0] * self.shape[1]
    }
}

/// Derivative symbols.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum DiffOp {
    /// −|κ|²
    Laplacian,
    /// iκ along the given axis, Nyquist zeroed
    First(usize),
    /// −κ² along the given axis, Nyquist kept
    Second(usize),
    /// ∂²/∂x∂y on 2-D grids, Nyquist zeroed on both axes
    MixedSecond,
    /// exp(−|κ|²·dt), the exact diffusion propagator
    HeatSemigroup(f64),
}

/// Angular wavenumbers 2πk/L for one axis.
fn wavenumbers(n: usize, period: f64, zero_nyquist: bool) -> Vec<f64> {
    (0..n)
        .map(|j| {
            let k = if 2 * j < n {
                j as i64
            } else if 2 * j == n {
                if zero_nyquist {
                    0
                } else {
                    (n / 2) as i64
                }
            } else {
                j as i64 - n as i64
            };
            TAU * k as f64 / period
        })
        .collect()
}

fn fft_axis1(buf: &mut [Complex<f64>], n1: usize, dir: FftDirection) {
    if n1 == 1 {
        return;
    }
    let fft = plan(n1, dir);
    exec::for_each_chunk_mut(buf, n1, |_, row| fft.process(row));
}

fn fft_axis0(buf: &mut [Complex<f64>], n0: usize, n1: usize, dir: FftDirection) {
    if n0 == 1 {
        return;
    }
    if n1 == 1 {
        plan(n0, dir).process(buf);
        return;
    }
    let mut t = vec![Complex::default(); buf.len()];
    transpose(buf, &mut t, n0, n1);
    let fft = plan(n0, dir);
    exec::for_each_chunk_mut(&mut t, n0, |_, col| fft.process(col));
    transpose(&t, buf, n1, n0);
}

fn transpose(src: &[Complex<f64>], dst: &mut [Complex<f64>], rows: usize, cols: usize) {
    for r in 0..rows {
        for c in 0..cols {
            dst[c * rows + r] = src[r * cols + c];
        }
    }
}

/// Forward transform of a real field.
pub(crate) struct Spectrum {
    layout: Layout,
    bins: Vec<Complex<f64>>,
}

pub(crate) fn forward(values: &[f64], layout: Layout) -> Spectrum {
    debug_assert_eq!(values.len(), layout.len());
    let mut bins: Vec<Complex<f64>> = values.iter().map(|&v| Complex::new(v, 0.0)).collect();
    fft_axis1(&mut bins, layout.shape[1], FftDirection::Forward);
    fft_axis0(&mut bins, layout.shape[0], layout.shape[1], FftDirection::Forward);
    Spectrum { layout, bins }
}

fn inverse_to_real(mut bins: Vec<Complex<f64>>, layout: Layout, scale: f64) -> Vec<f64> {
    fft_axis1(&mut bins, layout.shape[1], FftDirection::Inverse);
    fft_axis0(&mut bins, layout.shape[0], layout.shape[1], FftDirection::Inverse);
    bins.iter().map(|c| c.re * scale).collect()
}

impl Spectrum {
    /// Applies one derivative symbol and returns node values.
    pub fn apply(&self, op: DiffOp) -> Vec<f64> {
        let [n0, n1] = self.layout.shape;
        let [l0, l1] = self.layout.periods;
        let k0 = wavenumbers(n0, l0, false);
        let k1 = wavenumbers(n1, l1, false);
        let k0_odd = wavenumbers(n0, l0, true);
        let k1_odd = wavenumbers(n1, l1, true);

        let mut work = self.bins.clone();
        exec::for_each_chunk_mut(&mut work, n1, |i0, row| {
            for (i1, c) in row.iter_mut().enumerate() {
                match op {
                    DiffOp::Laplacian => {
                        *c *= -(k0[i0] * k0[i0] + k1[i1] * k1[i1]);
                    }
                    DiffOp::HeatSemigroup(dt) => {
                        *c *= (-(k0[i0] * k0[i0] + k1[i1] * k1[i1]) * dt).exp();
                    }
                    DiffOp::First(0) => *c *= Complex::new(0.0, k0_odd[i0]),
                    DiffOp::First(_) => *c *= Complex::new(0.0, k1_odd[i1]),
                    DiffOp::Second(0) => *c *= -(k0[i0] * k0[i0]),
                    DiffOp::Second(_) => *c *= -(k1[i1] * k1[i1]),
                    DiffOp::MixedSecond => *c *= -(k0_odd[i0] * k1_odd[i1]),
                }
            }
        });
        inverse_to_real(work, self.layout, 1.0 / self.layout.len() as f64)
    }
}

/// Band-limited (trigonometric) interpolation onto a refined grid of the
/// same periods. The Nyquist coefficient is split evenly between the ±n/2
/// bins of the fine spectrum, so exactly-Nyquist cosines interpolate
/// exactly and real fields stay real.
pub(crate) fn interpolate(values: &[f64], from: Layout, to_shape: [usize; 2]) -> Vec<f64> {
    debug_assert!(to_shape[0] >= from.shape[0] && to_shape[1] >= from.shape[1]);
    let spec = forward(values, from);
    let [n0, n1] = from.shape;
    let [m0, m1] = to_shape;
    let mut fine = vec![Complex::default(); m0 * m1];
    for j0 in 0..n0 {
        for &(t0, w0) in split_targets(j0, n0, m0).iter() {
            for j1 in 0..n1 {
                for &(t1, w1) in split_targets(j1, n1, m1).iter() {
                    fine[t0 * m1 + t1] += spec.bins[j0 * n1 + j1] * (w0 * w1);
                }
            }
        }
    }
    let to_layout = Layout {
        shape: to_shape,
        periods: from.periods,
    };
    // scale by the coarse node count: DFT bins grow with sample count
    inverse_to_real(fine, to_layout, 1.0 / from.len() as f64)
}

/// Fine-spectrum bins (index, weight) receiving coarse bin `j`.
fn split_targets(j: usize, n: usize, m: usize) -> Vec<(usize, f64)> {
    if n == 1 {
        return vec![(0, 1.0)];
    }
    if 2 * j == n {
        let hi = n / 2;
        if m == n {
            return vec![(hi, 1.0)];
        }
        return vec![(hi, 0.5), (m - hi, 0.5)];
    }
    if 2 * j < n {
        vec![(j, 1.0)]
    } else {
        vec![(m - (n - j), 1.0)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn layout_1d(n: usize, period: f64) -> Layout {
        Layout {
            shape: [n, 1],
            periods: [period, 1.0],
        }
    }

    #[test]
    fn first_derivative_of_sine_is_cosine() {
        let n = 32;
        let l = layout_1d(n, TAU);
        let xs: Vec<f64> = (0..n).map(|j| TAU * j as f64 / n as f64).collect();
        let v: Vec<f64> = xs.iter().map(|x| x.sin()).collect();
        let d = forward(&v, l).apply(DiffOp::First(0));
        for (x, d) in xs.iter().zip(&d) {
            assert!((d - x.cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn nyquist_cosine_first_derivative_is_zeroed() {
        let n = 16;
        let l = layout_1d(n, TAU);
        let v: Vec<f64> = (0..n).map(|j| if j % 2 == 0 { 1.0 } else { -1.0 }).collect();
        let d = forward(&v, l).apply(DiffOp::First(0));
        for d in &d {
            assert!(d.abs() < 1e-12);
        }
        // the Laplacian keeps the Nyquist mode
        let lap = forward(&v, l).apply(DiffOp::Laplacian);
        let kn = (n / 2) as f64;
        for (v, lap) in v.iter().zip(&lap) {
            assert!((lap + kn * kn * v).abs() < 1e-9);
        }
    }

    #[test]
    fn interpolation_is_exact_for_resolved_modes() {
        let n = 16;
        let m = 48;
        let l = layout_1d(n, TAU);
        let f = |x: f64| 0.7 + (3.0 * x).cos() - 0.2 * (5.0 * x).sin() + (8.0 * x).cos();
        let coarse: Vec<f64> = (0..n).map(|j| f(TAU * j as f64 / n as f64)).collect();
        let fine = interpolate(&coarse, l, [m, 1]);
        for (j, got) in fine.iter().enumerate() {
            let x = TAU * j as f64 / m as f64;
            assert!(
                (got - f(x)).abs() < 1e-11,
                "node {j}: {got} vs {}",
                f(x)
            );
        }
    }
}
