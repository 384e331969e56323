use crate::error::{Error, Result};
use crate::specfun::gamma;
use crate::specfun::quad::{integrate, QuadTol};
use num_complex::Complex64;
use std::f64::consts::PI;

/// m_beta = Gamma(beta + 1)^2.
pub fn effective_mass(beta: f64) -> Result<f64> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::Invalid(format!("beta = {beta} must lie in (0,1]")));
    }
    Ok(gamma(beta + 1.0)?.powi(2))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracGreenQuery {
    pub x_t: f64,
    pub x_0: f64,
    pub t: f64,
    pub beta: f64,
    pub hbar_ef: f64,
}

impl FracGreenQuery {
    fn validate(&self) -> Result<()> {
        if !(self.t > 0.0 && self.t.is_finite()) {
            return Err(Error::Invalid(format!("T = {} must be positive", self.t)));
        }
        if !(self.hbar_ef > 0.0) {
            return Err(Error::Invalid(format!("hbar_ef = {} must be positive", self.hbar_ef)));
        }
        effective_mass(self.beta).map(|_| ())
    }

    /// a in exp(i a (x_T - x_0)^2)
    fn chirp(&self) -> Result<f64> {
        let g = gamma(self.beta + 1.0)?;
        Ok(effective_mass(self.beta)? / (2.0 * self.hbar_ef * g * self.t.powf(self.beta)))
    }
}

/// F(T) exp(i m_beta dx^2 / (2 hbar Gamma(beta+1) T^beta)), F fixed by unit mass.
pub fn frac_green(q: FracGreenQuery) -> Result<Complex64> {
    q.validate()?;
    let a = q.chirp()?;
    let pref = Complex64::new(0.0, PI / a).sqrt().inv();
    let dx = q.x_t - q.x_0;
    Ok(pref * Complex64::from_polar(1.0, a * dx * dx))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Normalization {
    /// extrapolated integral
    pub value: Complex64,
    /// |last two Richardson diagonals|
    pub error: f64,
    /// regularized integrals at each delta
    pub samples: Vec<(f64, Complex64)>,
}

/// int G(x) exp(-delta (x - x_0)^2) dx by quadrature for delta = a 2^{-j},
/// j = 1..=levels, then Richardson extrapolation delta -> 0 in integer powers.
pub fn green_normalization(base: FracGreenQuery, levels: usize) -> Result<Normalization> {
    base.validate()?;
    if levels < 2 {
        return Err(Error::Invalid("need at least two regularization levels".into()));
    }
    let a = base.chirp()?;
    let tol = QuadTol { abs: 1e-14, rel: 1e-12, max_panels: 200_000 };
    let mut samples = Vec::with_capacity(levels);
    for j in 1..=levels {
        let delta = a * 0.5f64.powi(j as i32);
        let half = (40.0 / delta).sqrt();
        let f = |u: f64| {
            let g = frac_green(FracGreenQuery { x_t: base.x_0 + u, ..base }).unwrap_or(Complex64::new(f64::NAN, 0.0));
            g * (-delta * u * u).exp()
        };
        // even integrand; panels sized to the local chirp period near the far end
        let panels = ((a * half * half) / PI).ceil() as usize + 8;
        let (v, _) = integrate(f, 0.0, half, panels, tol)?;
        samples.push((delta, 2.0 * v));
    }
    // Neville-Richardson table in delta
    let mut t: Vec<Complex64> = samples.iter().map(|s| s.1).collect();
    let mut prev = t[t.len() - 1];
    let mut err = f64::INFINITY;
    for k in 1..levels {
        for i in (k..levels).rev() {
            let r = 2f64.powi(k as i32);
            t[i] = (r * t[i] - t[i - 1]) / (r - 1.0);
        }
        err = (t[levels - 1] - prev).norm();
        prev = t[levels - 1];
    }
    Ok(Normalization { value: t[levels - 1], error: err, samples })
}
