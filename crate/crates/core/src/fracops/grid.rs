use crate::error::{Error, Result};
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

/// Uniform periodic grid x_j = x_min + j dx, j = 0..n, with cached FFT plans.
#[derive(Clone)]
pub struct Grid1D {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
    pub dx: f64,
    /// FFT ordering: 0, 1, .., n/2-1, -n/2, .., -1 times 2 pi / (x_max - x_min)
    pub wavenumbers: Vec<f64>,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for Grid1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Grid1D")
            .field("x_min", &self.x_min)
            .field("x_max", &self.x_max)
            .field("n", &self.n)
            .finish()
    }
}

impl PartialEq for Grid1D {
    fn eq(&self, o: &Self) -> bool {
        self.x_min == o.x_min && self.x_max == o.x_max && self.n == o.n
    }
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::Grid(format!("n = {n} must be a power of two >= 8")));
        }
        if !(x_min.is_finite() && x_max.is_finite() && x_max > x_min) {
            return Err(Error::Grid(format!("bad interval [{x_min}, {x_max}]")));
        }
        let len = x_max - x_min;
        let dk = 2.0 * PI / len;
        let wavenumbers = (0..n)
            .map(|j| if j < n / 2 { j as f64 * dk } else { (j as f64 - n as f64) * dk })
            .collect();
        let mut planner = FftPlanner::new();
        Ok(Grid1D {
            x_min,
            x_max,
            n,
            dx: len / n as f64,
            wavenumbers,
            fwd: planner.plan_fft_forward(n),
            inv: planner.plan_fft_inverse(n),
        })
    }

    /// Symmetric grid on [-l, l).
    pub fn symmetric(l: f64, n: usize) -> Result<Self> {
        Self::new(-l, l, n)
    }

    pub fn length(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn half_width(&self) -> f64 {
        0.5 * self.length()
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.dx
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.x(j)).collect()
    }

    /// Unnormalized forward transform, in place.
    pub fn fft(&self, v: &mut [Complex64]) {
        self.fwd.process(v);
    }

    /// Inverse transform including the 1/n factor, in place.
    pub fn ifft(&self, v: &mut [Complex64]) {
        self.inv.process(v);
        let s = 1.0 / self.n as f64;
        v.iter_mut().for_each(|z| *z *= s);
    }

    /// v -> IFFT(m * FFT(v)) for a real symbol m.
    pub fn apply_symbol(&self, v: &mut [Complex64], m: &[f64]) {
        self.fft(v);
        v.iter_mut().zip(m).for_each(|(z, s)| *z *= *s);
        self.ifft(v);
    }

    pub fn apply_symbol_complex(&self, v: &mut [Complex64], m: &[Complex64]) {
        self.fft(v);
        v.iter_mut().zip(m).for_each(|(z, s)| *z *= *s);
        self.ifft(v);
    }
}

/// Complex field sampled on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveField {
    pub grid: Grid1D,
    pub values: Vec<Complex64>,
}

impl WaveField {
    pub fn new(grid: Grid1D, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n {
            return Err(Error::Grid(format!("{} values for a grid of {}", values.len(), grid.n)));
        }
        Ok(WaveField { grid, values })
    }

    pub fn from_fn<F: Fn(f64) -> Complex64>(grid: &Grid1D, f: F) -> Self {
        let values = (0..grid.n).map(|j| f(grid.x(j))).collect();
        WaveField { grid: grid.clone(), values }
    }

    pub fn from_real_fn<F: Fn(f64) -> f64>(grid: &Grid1D, f: F) -> Self {
        Self::from_fn(grid, |x| Complex64::new(f(x), 0.0))
    }

    pub fn zeros(grid: &Grid1D) -> Self {
        WaveField { grid: grid.clone(), values: vec![Complex64::new(0.0, 0.0); grid.n] }
    }

    /// sum |psi|^2 dx
    pub fn norm_sq(&self) -> f64 {
        self.values.iter().map(|z| z.norm_sqr()).sum::<f64>() * self.grid.dx
    }

    /// sum conj(self) other dx
    pub fn inner(&self, other: &WaveField) -> Complex64 {
        self.values.iter().zip(&other.values).map(|(a, b)| a.conj() * b).sum::<Complex64>() * self.grid.dx
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn check_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFinite { step: 0 })
        }
    }

    /// <x> weighted by |psi|^2
    pub fn centroid(&self) -> f64 {
        let w: f64 = self.values.iter().map(|z| z.norm_sqr()).sum();
        let m: f64 = self.values.iter().enumerate().map(|(j, z)| self.grid.x(j) * z.norm_sqr()).sum();
        m / w
    }

    /// relative L2 distance |self - other| / |other|
    pub fn rel_l2(&self, other: &WaveField) -> f64 {
        let num: f64 = self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm_sqr()).sum();
        let den: f64 = other.values.iter().map(|b| b.norm_sqr()).sum();
        (num / den).sqrt()
    }

    pub fn max_abs_diff(&self, other: &WaveField) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}
