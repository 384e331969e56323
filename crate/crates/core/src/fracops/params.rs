use crate::error::{Error, Result};

/// Physical parameters shared by the models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracParams {
    /// Levy index of the space derivative, (0, 2]
    pub alpha: f64,
    /// Caputo index of the time derivative, (0, 1]
    pub beta: f64,
    /// gravitational kernel index, (0, 1)
    pub nu: f64,
    pub hbar_ef: f64,
    pub mass: f64,
    /// Kerr nonlinearity
    pub b: f64,
    /// Newton constant
    pub g: f64,
}

impl Default for FracParams {
    fn default() -> Self {
        FracParams { alpha: 2.0, beta: 1.0, nu: 0.5, hbar_ef: 1.0, mass: 1.0, b: 0.0, g: 0.0 }
    }
}

impl FracParams {
    pub fn validate(&self) -> Result<()> {
        let mut bad = Vec::new();
        if !(self.alpha > 0.0 && self.alpha <= 2.0) {
            bad.push(format!("alpha = {}", self.alpha));
        }
        if !(self.beta > 0.0 && self.beta <= 1.0) {
            bad.push(format!("beta = {}", self.beta));
        }
        if !(self.nu > 0.0 && self.nu < 1.0) {
            bad.push(format!("nu = {}", self.nu));
        }
        if !(self.hbar_ef > 0.0 && self.hbar_ef.is_finite()) {
            bad.push(format!("hbar_ef = {}", self.hbar_ef));
        }
        if !(self.mass > 0.0 && self.mass.is_finite()) {
            bad.push(format!("mass = {}", self.mass));
        }
        if !self.b.is_finite() {
            bad.push(format!("B = {}", self.b));
        }
        if !(self.g >= 0.0 && self.g.is_finite()) {
            bad.push(format!("G = {}", self.g));
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(bad.join(", ")))
        }
    }
}
