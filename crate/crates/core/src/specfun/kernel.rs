//! Fractional free-particle kernel
//!
//!   G(x) = (1/pi) * int_0^inf cos(k x) exp(-c tau k^alpha) dk
//!
//! The cosine is split into exp(+iks) and exp(-iks). Each half is moved onto
//! a contour on which the integrand decays without oscillating: a ray from
//! the origin where that is possible, otherwise a real segment through the
//! stationary point followed by a descending ray. Every finite piece goes
//! through adaptive Gauss-Kronrod with an error estimate.

use super::gamma::gamma_r;
use super::quad::{integrate, QuadTol};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

/// Arguments of the kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelQuery {
    pub x: f64,
    pub tau: f64,
    pub alpha: f64,
    /// multiplier of |k|^alpha in the exponent
    pub coeff: Complex64,
}

/// Smooth spectral cut-off: 1 below `k_flat`, 0 above `k_max`, C-infinity between.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandWindow {
    pub k_flat: f64,
    pub k_max: f64,
}

impl BandWindow {
    pub fn weight(&self, k: f64) -> f64 {
        if k <= self.k_flat {
            return 1.0;
        }
        if k >= self.k_max {
            return 0.0;
        }
        let u = (k - self.k_flat) / (self.k_max - self.k_flat);
        let a = (-1.0 / u).exp();
        let b = (-1.0 / (1.0 - u)).exp();
        b / (a + b)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct KernelOptions {
    /// added to Re(coeff); zero is allowed because the contours converge without it
    pub regulator: f64,
    /// relative accuracy target, measured against |G(0)|
    pub tol: f64,
    pub window: Option<BandWindow>,
    /// width of the Gaussian returned for tau = 0
    pub delta_width: f64,
    pub max_panels: usize,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions { regulator: 1e-6, tol: 1e-10, window: None, delta_width: 1e-3, max_panels: 40_000 }
    }
}

/// Kernel with default options (regulator 1e-6).
pub fn frac_free_kernel(q: KernelQuery) -> Result<Complex64> {
    frac_free_kernel_with(q, &KernelOptions::default())
}

pub fn frac_free_kernel_with(q: KernelQuery, opts: &KernelOptions) -> Result<Complex64> {
    let KernelQuery { x, tau, alpha, coeff } = q;
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(Error::Domain(format!("alpha = {alpha} outside (0, 2]")));
    }
    if !(tau >= 0.0 && tau.is_finite() && x.is_finite()) {
        return Err(Error::Domain(format!("tau = {tau}, x = {x}")));
    }
    if tau == 0.0 {
        let s = opts.delta_width;
        return Ok(Complex64::new((-0.5 * x * x / (s * s)).exp() / ((2.0 * PI).sqrt() * s), 0.0));
    }
    let c = (coeff + opts.regulator) * tau;
    if c.re < 0.0 || c.norm() == 0.0 {
        return Err(Error::Domain(format!("coefficient {coeff} gives a divergent integral")));
    }
    // G(conj c) = conj G(c) because the cosine is real
    if c.im < 0.0 {
        let qc = KernelQuery { coeff: coeff.conj(), ..q };
        return frac_free_kernel_with(qc, opts).map(|v| v.conj());
    }
    let s = x.abs();
    let scale = gamma_r(1.0 + 1.0 / alpha) * c.norm().powf(-1.0 / alpha) / PI;
    let tol = QuadTol { abs: opts.tol * scale, rel: 0.0, max_panels: opts.max_panels };

    if let Some(w) = opts.window {
        return windowed(s, c, alpha, w, tol);
    }
    if alpha == 1.0 {
        let d = c * c + s * s;
        if d.norm() < 1e-300 {
            return Err(Error::Domain("alpha = 1 kernel evaluated at its pole".into()));
        }
        return Ok(c / d / PI);
    }
    if s == 0.0 {
        return Ok(gamma_r(1.0 + 1.0 / alpha) * c.powf(-1.0 / alpha) / PI);
    }
    let gam = c.arg();
    let minus = {
        let th = -0.5 * ((FRAC_PI_2 + gam) / alpha).min(PI);
        ray(-1.0, s, c, alpha, th, tol)?
    };
    let plus = if gam > FRAC_PI_4 {
        through_stationary_point(s, c, alpha, tol)?
    } else {
        let th = 0.5 * ((FRAC_PI_2 - gam) / alpha).min(PI);
        ray(1.0, s, c, alpha, th, tol)?
    };
    Ok((plus + minus) / (2.0 * PI))
}

#[inline]
fn exponent(sign: f64, s: f64, c: Complex64, alpha: f64, k: Complex64) -> Complex64 {
    Complex64::new(0.0, sign * s) * k - c * (alpha * k.ln()).exp()
}

/// Length along direction `dir` from `k0` after which the integrand has fallen by e^-50.
fn decay_length(sign: f64, s: f64, c: Complex64, alpha: f64, k0: Complex64, dir: Complex64) -> Result<f64> {
    let base = if k0.norm() == 0.0 { 0.0 } else { exponent(sign, s, c, alpha, k0).re };
    let mut r = 1e-3 * c.norm().powf(-1.0 / alpha).min(1.0 / s.max(1e-300));
    for _ in 0..400 {
        if exponent(sign, s, c, alpha, k0 + dir * r).re - base < -50.0 {
            return Ok(r);
        }
        r *= 1.5;
    }
    Err(Error::NonConvergence {
        requested: 0.0,
        achieved: f64::INFINITY,
        detail: "integrand does not decay along the chosen contour".into(),
    })
}

fn panels_for(phase: f64, max: usize) -> Result<usize> {
    let n = (phase.abs() / 3.0).ceil() as usize + 4;
    if n > max {
        return Err(Error::NonConvergence {
            requested: 0.0,
            achieved: f64::INFINITY,
            detail: format!("segment spans {phase:.3e} rad of phase, beyond the panel budget"),
        });
    }
    Ok(n)
}

/// int_0^inf exp(i sign s k - c k^alpha) dk along k = r e^{i theta}.
fn ray(sign: f64, s: f64, c: Complex64, alpha: f64, theta: f64, tol: QuadTol) -> Result<Complex64> {
    let dir = Complex64::from_polar(1.0, theta);
    let len = decay_length(sign, s, c, alpha, Complex64::new(0.0, 0.0), dir)?;
    let phase = exponent(sign, s, c, alpha, dir * len).im;
    let n0 = panels_for(phase, tol.max_panels)?;
    let (v, _) = integrate(
        |r| {
            if r == 0.0 {
                dir
            } else {
                exponent(sign, s, c, alpha, dir * r).exp() * dir
            }
        },
        0.0,
        len,
        n0,
        tol,
    )?;
    Ok(v)
}

/// exp(+iks) half when c is mostly imaginary: real segment [0, K] past the
/// stationary point, then a ray from K on which the exponent decreases.
fn through_stationary_point(s: f64, c: Complex64, alpha: f64, tol: QuadTol) -> Result<Complex64> {
    let im = c.norm() * c.arg().sin();
    let kstar = if alpha > 1.0 {
        (s / (alpha * im)).powf(1.0 / (alpha - 1.0))
    } else {
        (alpha * im / s).powf(1.0 / (1.0 - alpha))
    };
    let kk = 2.0 * kstar;
    if !kk.is_finite() {
        return Err(Error::NonConvergence {
            requested: tol.abs,
            achieved: f64::INFINITY,
            detail: "stationary point out of range".into(),
        });
    }
    let f = |k: f64| {
        if k == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            exponent(1.0, s, c, alpha, Complex64::new(k, 0.0)).exp()
        }
    };
    let phase = s * kk + im * kk.powf(alpha);
    let n0 = panels_for(phase, tol.max_panels)?;
    let (seg, _) = integrate(f, 0.0, kk, n0, tol)?;
    let psi = if alpha > 1.0 { -c.arg() / alpha } else { FRAC_PI_2 };
    let dir = Complex64::from_polar(1.0, psi);
    let k0 = Complex64::new(kk, 0.0);
    let len = decay_length(1.0, s, c, alpha, k0, dir)?;
    let e0 = exponent(1.0, s, c, alpha, k0);
    let phase = (exponent(1.0, s, c, alpha, k0 + dir * len) - e0).im;
    let n0 = panels_for(phase, tol.max_panels)?;
    let (tail, _) = integrate(|r| exponent(1.0, s, c, alpha, k0 + dir * r).exp() * dir, 0.0, len, n0, tol)?;
    Ok(seg + tail)
}

fn windowed(s: f64, c: Complex64, alpha: f64, w: BandWindow, tol: QuadTol) -> Result<Complex64> {
    if !(w.k_flat >= 0.0 && w.k_max > w.k_flat) {
        return Err(Error::Invalid(format!("band window {w:?}")));
    }
    let phase = s * w.k_max + c.im * w.k_max.powf(alpha);
    let n0 = panels_for(phase, tol.max_panels)?;
    let (v, _) = integrate(
        |k| {
            let damp = if k == 0.0 { Complex64::new(1.0, 0.0) } else { (-c * k.powf(alpha)).exp() };
            damp * ((k * s).cos() * w.weight(k))
        },
        0.0,
        w.k_max,
        n0,
        tol,
    )?;
    Ok(v / PI)
}
