//! Beam propagation in a time-dependent optical metric,
//!
//!   i hbar dpsi/dt = (1/g) * [ (hbar^alpha/2) (-Laplacian)^{alpha/2} psi - B |psi|^2 psi ],
//!
//! written in the rescaled time g1(t) for the linear part. Also the Caputo
//! slab solver in the sine basis.

mod metric;
mod slab;

pub use metric::{metric_g1, MetricKind, MetricProfile};
pub use slab::{paraxial_residual, slab_evolve, SlabConfig};

use crate::error::{Error, Result};
use crate::fracops::{riesz_multiplier, FracParams, Grid1D, WaveField};
use crate::specfun::{airy_ai_ext, frac_free_kernel_with, KernelOptions, KernelQuery};
use num_complex::Complex64;

/// Observables recorded during a run.
#[derive(Debug, Clone, Default)]
pub struct EvolutionReport {
    pub times: Vec<f64>,
    pub norms: Vec<f64>,
    pub centroids: Vec<f64>,
    /// <(x - x_c(0))^2> relative to the initial centroid
    pub msd: Vec<f64>,
    pub peak_positions: Vec<f64>,
    pub snapshots: Vec<WaveField>,
}

impl EvolutionReport {
    pub(crate) fn record(&mut self, t: f64, f: &WaveField) {
        let norm = f.norm_sq();
        let c = f.centroid();
        let c0 = *self.centroids.first().unwrap_or(&c);
        let xs = f.grid.xs();
        let m: f64 = xs.iter().zip(&f.values).map(|(x, v)| (x - c0).powi(2) * v.norm_sqr()).sum::<f64>() * f.grid.dx;
        self.times.push(t);
        self.norms.push(norm);
        self.centroids.push(c);
        self.msd.push(if norm > 0.0 { m / norm } else { 0.0 });
        self.peak_positions.push(peak_position(f));
        self.snapshots.push(f.clone());
    }
}

/// Location of max |psi|^2, refined by a parabola through the three top samples.
pub fn peak_position(f: &WaveField) -> f64 {
    let p: Vec<f64> = f.values.iter().map(|v| v.norm_sqr()).collect();
    let mut j = 0;
    for (i, &v) in p.iter().enumerate() {
        if v > p[j] {
            j = i;
        }
    }
    let x = f.grid.x(j);
    if j == 0 || j + 1 == p.len() {
        return x;
    }
    let (a, b, c) = (p[j - 1], p[j], p[j + 1]);
    let den = a - 2.0 * b + c;
    if den == 0.0 {
        return x;
    }
    x + 0.5 * (a - c) / den * f.grid.dx
}

fn linear_multiplier(grid: &Grid1D, params: &FracParams, dg1: f64) -> Vec<Complex64> {
    let c = 0.5 * params.hbar_ef.powf(params.alpha - 1.0) * dg1;
    riesz_multiplier(grid, params.alpha).into_iter().map(|s| Complex64::from_polar(1.0, -c * s)).collect()
}

/// Exact linear flow over an increment dg1 of the rescaled time.
pub fn linear_step(field: &WaveField, params: &FracParams, dg1: f64) -> WaveField {
    let mut out = field.clone();
    if dg1 != 0.0 {
        let m = linear_multiplier(&field.grid, params, dg1);
        field.grid.apply_symbol_complex(&mut out.values, &m);
    }
    out
}

/// Pointwise Kerr phase exp(i B |psi|^2 dt / (hbar g)).
pub fn kerr_step(field: &WaveField, params: &FracParams, g_t: f64, dt: f64) -> WaveField {
    let mut out = field.clone();
    kerr_in_place(&mut out.values, params.b / (params.hbar_ef * g_t) * dt);
    out
}

fn kerr_in_place(v: &mut [Complex64], c: f64) {
    if c == 0.0 {
        return;
    }
    for z in v {
        *z *= Complex64::from_polar(1.0, c * z.norm_sqr());
    }
}

/// Strang split run: half linear, Kerr at the midpoint, half linear.
/// The step count is round(t_final/dt); dt is adjusted so the last step lands on t_final.
pub fn propagate_nlse(
    field: &WaveField,
    params: &FracParams,
    profile: &MetricProfile,
    t_final: f64,
    dt: f64,
    record_every: usize,
) -> Result<EvolutionReport> {
    params.validate()?;
    profile.validate()?;
    if !(dt > 0.0 && t_final >= dt * (1.0 - 1e-12)) {
        return Err(Error::Invalid(format!("need dt > 0 and t_final >= dt, got dt = {dt}, t_final = {t_final}")));
    }
    if record_every == 0 {
        return Err(Error::Invalid("record_every must be >= 1".into()));
    }
    let steps = (t_final / dt).round().max(1.0) as usize;
    let h = t_final / steps as f64;
    let grid = &field.grid;
    let mut psi = field.clone();
    let mut report = EvolutionReport::default();
    report.record(0.0, &psi);

    // constant metric: one multiplier for the whole run
    let fixed = match profile.kind {
        MetricKind::Constant(_) => Some(linear_multiplier(grid, params, profile.g1_between(0.0, 0.5 * h)?)),
        _ => None,
    };
    for s in 0..steps {
        let t0 = s as f64 * h;
        let tm = t0 + 0.5 * h;
        let t1 = (s + 1) as f64 * h;
        match &fixed {
            Some(m) => grid.apply_symbol_complex(&mut psi.values, m),
            None => {
                let m = linear_multiplier(grid, params, profile.g1_between(t0, tm)?);
                grid.apply_symbol_complex(&mut psi.values, &m);
            }
        }
        if params.b != 0.0 {
            let g = profile.g(tm)?;
            kerr_in_place(&mut psi.values, params.b / (params.hbar_ef * g) * h);
        }
        match &fixed {
            Some(m) => grid.apply_symbol_complex(&mut psi.values, m),
            None => {
                let m = linear_multiplier(grid, params, profile.g1_between(tm, t1)?);
                grid.apply_symbol_complex(&mut psi.values, &m);
            }
        }
        if !psi.is_finite() {
            return Err(Error::NonFinite { step: s + 1 });
        }
        if (s + 1) % record_every == 0 || s + 1 == steps {
            report.record(t1, &psi);
        }
    }
    Ok(report)
}

/// Shaping of the Airy launch field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryOptions {
    /// fraction of the grid, from the left edge, covered by the half-cosine ramp
    pub taper_fraction: f64,
    /// exponential apodization exp(s * X) in the scaled variable X
    pub apodization: f64,
}

impl Default for AiryOptions {
    fn default() -> Self {
        AiryOptions { taper_fraction: 0.15, apodization: 0.0 }
    }
}

/// Ai(a x / hbar^{2/3}) with the default left taper.
pub fn airy_initial(grid: &Grid1D, a: f64, hbar_ef: f64) -> Result<WaveField> {
    airy_initial_with(grid, a, hbar_ef, AiryOptions::default())
}

pub fn airy_initial_with(grid: &Grid1D, a: f64, hbar_ef: f64, opts: AiryOptions) -> Result<WaveField> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Invalid(format!("Airy scale a = {a} must be positive")));
    }
    if !(0.0..1.0).contains(&opts.taper_fraction) {
        return Err(Error::Invalid(format!("taper fraction {} outside [0, 1)", opts.taper_fraction)));
    }
    let scale = a / hbar_ef.powf(2.0 / 3.0);
    let width = opts.taper_fraction * grid.length();
    Ok(WaveField::from_real_fn(grid, |x| {
        let xs = scale * x;
        let mut v = airy_ai_ext(xs);
        if opts.apodization != 0.0 {
            v *= (opts.apodization * xs).exp();
        }
        let d = x - grid.x_min;
        if d < width {
            v *= 0.5 * (1.0 - (std::f64::consts::PI * d / width).cos());
        }
        v
    }))
}

fn green_query(x: f64, t: f64, params: &FracParams, profile: &MetricProfile) -> Result<KernelQuery> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("Green's function needs t > 0, got {t}")));
    }
    Ok(KernelQuery {
        x,
        tau: metric_g1(profile, t)?,
        alpha: params.alpha,
        coeff: Complex64::new(0.0, 0.5 * params.hbar_ef.powf(params.alpha - 1.0)),
    })
}

/// Propagator of the linear beam equation at rescaled time g1(t).
pub fn fox_beam_green(x: f64, t: f64, params: &FracParams, profile: &MetricProfile) -> Result<Complex64> {
    fox_beam_green_with(x, t, params, profile, &KernelOptions::default())
}

pub fn fox_beam_green_with(
    x: f64,
    t: f64,
    params: &FracParams,
    profile: &MetricProfile,
    opts: &KernelOptions,
) -> Result<Complex64> {
    frac_free_kernel_with(green_query(x, t, params, profile)?, opts)
}

/// Linear solution by direct convolution with the Green's function,
/// psi(x_i) = sum_m G(x_i - x_m) psi0(x_m) dx (free space, no periodic wrap).
pub fn green_propagate(
    field: &WaveField,
    t: f64,
    params: &FracParams,
    profile: &MetricProfile,
    opts: &KernelOptions,
) -> Result<WaveField> {
    let g = &field.grid;
    let n = g.n;
    let mut kern = Vec::with_capacity(n);
    for j in 0..n {
        kern.push(fox_beam_green_with(j as f64 * g.dx, t, params, profile, opts)?);
    }
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, v) in field.values.iter().enumerate() {
            acc += kern[i.abs_diff(m)] * v;
        }
        *o = acc * g.dx;
    }
    WaveField::new(g.clone(), out)
}
