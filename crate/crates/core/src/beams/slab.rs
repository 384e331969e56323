//! Caputo-in-z slab beam in the Dirichlet sine basis on [-L, L].

use super::EvolutionReport;
use crate::error::{Error, Result};
use crate::fracops::WaveField;
use crate::specfun::mittag_leffler;
use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabConfig {
    /// half width of the slab
    pub l: f64,
    pub k_carrier: f64,
    pub omega: f64,
    pub alpha: f64,
    pub beta: f64,
    pub n_modes: usize,
}

impl SlabConfig {
    pub fn validate(&self) -> Result<()> {
        let mut bad = Vec::new();
        if !(self.l > 0.0 && self.l.is_finite()) {
            bad.push(format!("L = {} must be positive", self.l));
        }
        if !(self.k_carrier > 0.0 && self.k_carrier.is_finite()) {
            bad.push(format!("k_carrier = {} must be positive", self.k_carrier));
        }
        if !self.omega.is_finite() {
            bad.push(format!("omega = {}", self.omega));
        }
        if !(self.alpha > 0.0 && self.alpha <= 2.0) {
            bad.push(format!("alpha = {} must lie in (0,2]", self.alpha));
        }
        if !(self.beta > 0.0 && self.beta <= 1.0) {
            bad.push(format!("beta = {} must lie in (0,1]", self.beta));
        }
        if self.n_modes < 4 {
            bad.push(format!("n_modes = {} must be >= 4", self.n_modes));
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(bad.join(", ")))
        }
    }

    /// Small carrier wavenumbers sit outside the slowly varying envelope regime.
    pub fn weakly_paraxial(&self) -> bool {
        self.k_carrier < 1.0
    }

    pub fn eigenvalue(&self, n: usize) -> f64 {
        (n as f64 * PI / (2.0 * self.l)).powf(self.alpha)
    }

    /// c_n(z) / c_n(0)
    pub fn mode_factor(&self, n: usize, z: f64) -> Result<Complex64> {
        let theta = (self.eigenvalue(n) - self.omega) / (2.0 * self.k_carrier);
        if z == 0.0 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if self.beta == 1.0 {
            return Ok(Complex64::from_polar(1.0, theta * z));
        }
        mittag_leffler(self.beta, 1.0, Complex64::new(0.0, theta * z.powf(self.beta)))
    }
}

/// Expand, evolve each sine coefficient with the Mittag-Leffler factor, resample.
/// The grid must span [-L, L]; sample j sits at x = -L + 2Lj/N.
pub fn slab_evolve(psi0: &WaveField, cfg: &SlabConfig, z_values: &[f64]) -> Result<EvolutionReport> {
    cfg.validate()?;
    let g = &psi0.grid;
    let n = g.n;
    let tol = 1e-9 * cfg.l;
    if (g.x_min + cfg.l).abs() > tol || (g.x_max - cfg.l).abs() > tol {
        return Err(Error::Grid(format!("slab grid must span [-L, L] with L = {}", cfg.l)));
    }
    if cfg.n_modes >= n {
        return Err(Error::Invalid(format!("n_modes = {} must be below grid size {n}", cfg.n_modes)));
    }
    if z_values.first().is_some_and(|&z| z != 0.0) || z_values.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Invalid("z values must start at 0 and ascend".into()));
    }
    // sin(m pi j / N) for m = 1..=n_modes
    let sines: Vec<Vec<f64>> =
        (1..=cfg.n_modes).map(|m| (0..n).map(|j| (PI * (m * j % (2 * n)) as f64 / n as f64).sin()).collect()).collect();
    let coef: Vec<Complex64> = sines
        .iter()
        .map(|s| s.iter().zip(&psi0.values).map(|(s, v)| v * *s).sum::<Complex64>() * (2.0 / n as f64))
        .collect();
    let mut report = EvolutionReport::default();
    for &z in z_values {
        let mut vals = vec![Complex64::new(0.0, 0.0); n];
        for (m, (c, s)) in coef.iter().zip(&sines).enumerate() {
            let cz = c * cfg.mode_factor(m + 1, z)?;
            for (v, s) in vals.iter_mut().zip(s) {
                *v += cz * *s;
            }
        }
        let f = WaveField::new(g.clone(), vals)?;
        f.check_finite()?;
        report.record(z, &f);
    }
    Ok(report)
}

/// max_x |psi_zz| / (|2 k psi_z| + floor) from central differences of consecutive slices.
pub fn paraxial_residual(slices: &[WaveField], k_carrier: f64, dz: f64) -> Result<f64> {
    if slices.len() < 3 {
        return Err(Error::Invalid("paraxial residual needs >= 3 slices".into()));
    }
    if !(dz > 0.0) {
        return Err(Error::Invalid(format!("dz = {dz} must be positive")));
    }
    let n = slices[0].values.len();
    if slices.iter().any(|s| s.values.len() != n) {
        return Err(Error::Grid("slices differ in size".into()));
    }
    let mut pairs = Vec::new();
    let mut scale: f64 = 0.0;
    for w in slices.windows(3) {
        for j in 0..n {
            let (a, b, c) = (w[0].values[j], w[1].values[j], w[2].values[j]);
            let zz = ((c - 2.0 * b + a) / (dz * dz)).norm();
            let z1 = (2.0 * k_carrier * (c - a) / (2.0 * dz)).norm();
            scale = scale.max(z1);
            pairs.push((zz, z1));
        }
    }
    let floor = 1e-12 * scale + 1e-300;
    Ok(pairs.iter().map(|(zz, z1)| zz / (z1 + floor)).fold(0.0, f64::max))
}
