//! 1D Schrodinger-Newton equation with fractional gravity,
//!
//!   i hbar psi_t = (hbar^alpha/2m) (-Laplacian)^{alpha/2} psi + N(psi),
//!
//! and the four-wave decay of a single populated mode into q +- p.
//!
//! Two forms of N are available. `Spectral` follows the Fourier-space mode
//! equation literally, N = -G m^2 IFFT(|k|^nu FFT(|psi|^2 psi)); a plane wave
//! then feels the phase shift |q|^nu I. `Potential` applies |k|^nu to the
//! density first, N = -G m^2 IFFT(|k|^nu FFT(|psi|^2)) psi, which is a real
//! potential and conserves the norm exactly, but leaves a plane wave alone.

use crate::beams::EvolutionReport;
use crate::error::{Error, Result};
use crate::fit::linear_fit;
use crate::fracops::{riesz_multiplier, FracParams, Grid1D, WaveField};
use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GravityForm {
    #[default]
    Spectral,
    Potential,
}

fn gravity_symbol(grid: &Grid1D, nu: f64) -> Vec<f64> {
    riesz_multiplier(grid, nu)
}

/// N(psi) with the sign convention of the equation above.
fn nonlinear(psi: &[Complex64], grid: &Grid1D, sym: &[f64], params: &FracParams, form: GravityForm) -> Vec<Complex64> {
    let gm2 = params.g * params.mass * params.mass;
    match form {
        GravityForm::Spectral => {
            let mut v: Vec<Complex64> = psi.iter().map(|z| z * z.norm_sqr()).collect();
            grid.apply_symbol(&mut v, sym);
            v.iter_mut().for_each(|z| *z *= -gm2);
            v
        }
        GravityForm::Potential => {
            let pot = potential(psi, grid, sym, gm2);
            psi.iter().zip(&pot).map(|(z, u)| z * *u).collect()
        }
    }
}

fn potential(psi: &[Complex64], grid: &Grid1D, sym: &[f64], gm2: f64) -> Vec<f64> {
    let mut d: Vec<Complex64> = psi.iter().map(|z| Complex64::new(z.norm_sqr(), 0.0)).collect();
    grid.apply_symbol(&mut d, sym);
    d.iter().map(|z| -gm2 * z.re).collect()
}

/// d psi / dt.
pub fn sne_rhs(field: &WaveField, params: &FracParams, form: GravityForm) -> Result<WaveField> {
    field.check_finite()?;
    let grid = &field.grid;
    let mut lin = field.values.clone();
    grid.apply_symbol(&mut lin, &riesz_multiplier(grid, params.alpha));
    let kin = params.hbar_ef.powf(params.alpha) / (2.0 * params.mass);
    let nl = nonlinear(&field.values, grid, &gravity_symbol(grid, params.nu), params, form);
    let f = Complex64::new(0.0, -1.0 / params.hbar_ef);
    let out = lin.iter().zip(&nl).map(|(l, n)| f * (kin * l + n)).collect();
    WaveField::new(grid.clone(), out)
}

struct Stepper<'a> {
    grid: &'a Grid1D,
    params: &'a FracParams,
    form: GravityForm,
    sym: Vec<f64>,
    half: Vec<Complex64>,
}

impl<'a> Stepper<'a> {
    fn new(grid: &'a Grid1D, params: &'a FracParams, form: GravityForm, dt: f64) -> Self {
        let w = params.hbar_ef.powf(params.alpha - 1.0) / (2.0 * params.mass);
        let half = riesz_multiplier(grid, params.alpha).iter().map(|s| Complex64::from_polar(1.0, -0.5 * dt * w * s)).collect();
        Stepper { grid, params, form, sym: gravity_symbol(grid, params.nu), half }
    }

    fn nl_rate(&self, psi: &[Complex64]) -> Vec<Complex64> {
        let f = Complex64::new(0.0, -1.0 / self.params.hbar_ef);
        nonlinear(psi, self.grid, &self.sym, self.params, self.form).into_iter().map(|z| f * z).collect()
    }

    fn nl_flow(&self, psi: &mut [Complex64], dt: f64) {
        if self.params.g == 0.0 {
            return;
        }
        match self.form {
            GravityForm::Potential => {
                // |psi| is invariant under this flow, so the potential is frozen
                let gm2 = self.params.g * self.params.mass * self.params.mass;
                let pot = potential(psi, self.grid, &self.sym, gm2);
                for (z, u) in psi.iter_mut().zip(&pot) {
                    *z *= Complex64::from_polar(1.0, -u * dt / self.params.hbar_ef);
                }
            }
            GravityForm::Spectral => {
                let axpy = |a: &[Complex64], b: &[Complex64], h: f64| -> Vec<Complex64> {
                    a.iter().zip(b).map(|(x, y)| x + y * h).collect()
                };
                let k1 = self.nl_rate(psi);
                let k2 = self.nl_rate(&axpy(psi, &k1, 0.5 * dt));
                let k3 = self.nl_rate(&axpy(psi, &k2, 0.5 * dt));
                let k4 = self.nl_rate(&axpy(psi, &k3, dt));
                for i in 0..psi.len() {
                    psi[i] += (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (dt / 6.0);
                }
            }
        }
    }

    fn step(&self, psi: &mut [Complex64], dt: f64) {
        self.grid.apply_symbol_complex(psi, &self.half);
        self.nl_flow(psi, dt);
        self.grid.apply_symbol_complex(psi, &self.half);
    }
}

/// Strang-split evolution: exact kinetic half steps around the gravity step
/// (pure phase for `Potential`, one RK4 step for `Spectral`).
pub fn sne_evolve(
    field: &WaveField,
    params: &FracParams,
    form: GravityForm,
    t_final: f64,
    dt: f64,
    record_every: usize,
) -> Result<EvolutionReport> {
    params.validate()?;
    if !(dt > 0.0 && t_final >= dt * (1.0 - 1e-12)) {
        return Err(Error::Invalid(format!("need dt > 0 and t_final >= dt, got dt = {dt}, t_final = {t_final}")));
    }
    if record_every == 0 {
        return Err(Error::Invalid("record_every must be >= 1".into()));
    }
    field.check_finite()?;
    let steps = (t_final / dt).round().max(1.0) as usize;
    let h = t_final / steps as f64;
    let st = Stepper::new(&field.grid, params, form, h);
    let mut psi = field.clone();
    let mut report = EvolutionReport::default();
    report.record(0.0, &psi);
    for s in 0..steps {
        st.step(&mut psi.values, h);
        if !psi.is_finite() {
            return Err(Error::NonFinite { step: s + 1 });
        }
        if (s + 1) % record_every == 0 || s + 1 == steps {
            report.record((s + 1) as f64 * h, &psi);
        }
    }
    Ok(report)
}

/// Amplitude of e^{ikx} in the field (exact for grid wavenumbers).
pub fn mode_amplitude(field: &WaveField, k: f64) -> Complex64 {
    let n = field.values.len();
    let s: Complex64 = field.values.iter().enumerate().map(|(j, v)| v * Complex64::from_polar(1.0, -k * field.grid.x(j))).sum();
    s / n as f64
}

/// Kinetic frequency hbar^{alpha-1}/(2m) |k|^alpha.
pub fn omega_kin(k: f64, p: &FracParams) -> f64 {
    p.hbar_ef.powf(p.alpha - 1.0) / (2.0 * p.mass) * k.abs().powf(p.alpha)
}

/// Gravitational frequency G m^2 / hbar |k|^nu.
pub fn omega_grav(k: f64, p: &FracParams) -> f64 {
    p.g * p.mass * p.mass / p.hbar_ef * k.abs().powf(p.nu)
}

/// Phase rate of a lone mode: d arg A_q / dt = -(omega(q) - Omega(q) I).
pub fn single_mode_rate(q: f64, intensity: f64, p: &FracParams) -> f64 {
    -(omega_kin(q, p) - omega_grav(q, p) * intensity)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecaySetup {
    pub q: f64,
    pub p: f64,
    pub a_q: Complex64,
    pub epsilon_seed: f64,
}

impl DecaySetup {
    pub fn validate(&self) -> Result<()> {
        if !(self.q != 0.0 && self.q.is_finite()) {
            return Err(Error::Invalid(format!("pump wavenumber q = {} must be nonzero", self.q)));
        }
        if !(self.p > 0.0 && self.p < self.q.abs()) {
            return Err(Error::Invalid(format!("sideband offset p = {} must lie in (0, |q|)", self.p)));
        }
        if !(self.epsilon_seed > 0.0 && self.epsilon_seed.is_finite()) {
            return Err(Error::Invalid(format!("epsilon_seed = {} must be positive", self.epsilon_seed)));
        }
        Ok(())
    }

    pub fn intensity(&self) -> f64 {
        self.a_q.norm_sqr()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityMatrix {
    /// pump rotation frequency
    pub f: f64,
    pub f_plus: f64,
    pub f_minus: f64,
    pub cal_f: f64,
    pub omega_plus: f64,
    pub omega_minus: f64,
    pub intensity: f64,
}

/// Linearization about the pump. F is the pump's actual rotation rate
/// omega(q) - Omega(q) I, the rate at which the mode equation turns A_q.
pub fn stability_matrix(setup: &DecaySetup, params: &FracParams) -> StabilityMatrix {
    build_matrix(setup, params, -1.0)
}

/// Same bookkeeping with F = omega(q) + Omega(q) I, the variant whose
/// p -> 0 limit leaves calF = 3 Omega I instead of Omega I. Kept to show
/// that it predicts growth where the simulation has none.
pub fn stability_matrix_plus_sign(setup: &DecaySetup, params: &FracParams) -> StabilityMatrix {
    build_matrix(setup, params, 1.0)
}

fn build_matrix(s: &DecaySetup, params: &FracParams, sign: f64) -> StabilityMatrix {
    let i = s.intensity();
    let (kp, km) = (s.q + s.p, s.q - s.p);
    let f = omega_kin(s.q, params) + sign * omega_grav(s.q, params) * i;
    let f_plus = omega_kin(kp, params) - 2.0 * omega_grav(kp, params) * i;
    let f_minus = omega_kin(km, params) - 2.0 * omega_grav(km, params) * i;
    StabilityMatrix {
        f,
        f_plus,
        f_minus,
        cal_f: f - 0.5 * (f_plus + f_minus),
        omega_plus: omega_grav(kp, params),
        omega_minus: omega_grav(km, params),
        intensity: i,
    }
}

/// Eigenvalues of [[i calF, i Omega+ I], [-i Omega- I, -i calF]]: +-sqrt(Omega+ Omega- I^2 - calF^2).
pub fn growth_increment(m: &StabilityMatrix) -> (Complex64, Complex64) {
    let d = m.omega_plus * m.omega_minus * m.intensity * m.intensity - m.cal_f * m.cal_f;
    let l = Complex64::new(d, 0.0).sqrt();
    (l, -l)
}

pub fn predicted_rate(m: &StabilityMatrix) -> f64 {
    let (a, b) = growth_increment(m);
    a.re.max(b.re)
}

/// Periodic box of length 2 pi / p; q/p must be an integer so both sit on the FFT lattice.
pub fn decay_grid(setup: &DecaySetup, n: usize) -> Result<Grid1D> {
    setup.validate()?;
    let ratio = setup.q / setup.p;
    if (ratio - ratio.round()).abs() > 1e-9 * ratio.abs() {
        return Err(Error::Grid(format!("q/p = {ratio} must be an integer for a commensurate grid")));
    }
    // keep the cubic products of q +- p below Nyquist
    let nyquist = 0.5 * n as f64 * setup.p;
    if setup.q.abs() + setup.p >= 0.5 * nyquist {
        return Err(Error::Grid(format!("n = {n} too small to resolve q + p = {}", setup.q.abs() + setup.p)));
    }
    let half = PI / setup.p;
    Grid1D::new(-half, half, n)
}

/// Pump plus both sidebands, sideband phases supplied by the caller.
pub fn decay_initial(grid: &Grid1D, setup: &DecaySetup, phases: (f64, f64)) -> WaveField {
    let (q, p, e) = (setup.q, setup.p, setup.epsilon_seed);
    WaveField::from_fn(grid, |x| {
        setup.a_q * Complex64::from_polar(1.0, q * x)
            + Complex64::from_polar(e, (q + p) * x + phases.0)
            + Complex64::from_polar(e, (q - p) * x + phases.1)
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayTrace {
    pub times: Vec<f64>,
    pub pump: Vec<Complex64>,
    pub plus: Vec<Complex64>,
    pub minus: Vec<Complex64>,
}

impl DecayTrace {
    /// sqrt(|A+|^2 + |A-|^2)
    pub fn sideband(&self) -> Vec<f64> {
        self.plus.iter().zip(&self.minus).map(|(a, b)| (a.norm_sqr() + b.norm_sqr()).sqrt()).collect()
    }
}

pub fn decay_trace(
    setup: &DecaySetup,
    params: &FracParams,
    n: usize,
    phases: (f64, f64),
    t_final: f64,
    dt: f64,
    record_every: usize,
) -> Result<DecayTrace> {
    let grid = decay_grid(setup, n)?;
    let f0 = decay_initial(&grid, setup, phases);
    let r = sne_evolve(&f0, params, GravityForm::Spectral, t_final, dt, record_every)?;
    let amp = |k: f64| r.snapshots.iter().map(|s| mode_amplitude(s, k)).collect::<Vec<_>>();
    Ok(DecayTrace { times: r.times.clone(), pump: amp(setup.q), plus: amp(setup.q + setup.p), minus: amp(setup.q - setup.p) })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayResult {
    pub measured_rate: f64,
    pub predicted_rate: f64,
    pub window: (f64, f64),
    pub samples: usize,
}

/// Growth window: from the start until the sideband first reaches 1% of the
/// pump; the slope of log sideband is fitted over its second half.
pub fn growth_window(trace: &DecayTrace) -> Result<(usize, usize)> {
    let side = trace.sideband();
    let pump = trace.pump[0].norm();
    let end = side.iter().position(|&s| s >= 0.01 * pump).unwrap_or(side.len());
    let start = end / 2;
    if end - start < 10 {
        return Err(Error::NoGrowthWindow(format!(
            "only {} samples before the sideband reaches 1% of the pump",
            end - start
        )));
    }
    Ok((start, end))
}

fn fit_slope(trace: &DecayTrace, lo: usize, hi: usize) -> Result<f64> {
    let side = trace.sideband();
    let ly: Vec<f64> = side[lo..hi].iter().map(|s| s.ln()).collect();
    Ok(linear_fit(&trace.times[lo..hi], &ly)?.slope)
}

/// Log-slope of the sideband over the whole trace (no growth assumed).
pub fn sideband_slope(trace: &DecayTrace) -> Result<f64> {
    fit_slope(trace, trace.times.len() / 2, trace.times.len())
}

/// Runs the decay and compares the fitted growth rate with the 2x2 eigenvalue.
#[allow(clippy::too_many_arguments)]
pub fn decay_experiment(
    setup: &DecaySetup,
    params: &FracParams,
    n: usize,
    phases: (f64, f64),
    t_final: f64,
    dt: f64,
    record_every: usize,
) -> Result<DecayResult> {
    setup.validate()?;
    if setup.epsilon_seed > 1e-4 * setup.a_q.norm() {
        return Err(Error::Invalid(format!("epsilon_seed = {} exceeds 1e-4 |a_q|", setup.epsilon_seed)));
    }
    let predicted = predicted_rate(&stability_matrix(setup, params));
    if predicted <= 0.0 {
        return Err(Error::NoGrowthWindow(format!("stable configuration, Re lambda = {predicted}")));
    }
    let trace = decay_trace(setup, params, n, phases, t_final, dt, record_every)?;
    let (lo, hi) = growth_window(&trace)?;
    Ok(DecayResult {
        measured_rate: fit_slope(&trace, lo, hi)?,
        predicted_rate: predicted,
        window: (trace.times[lo], trace.times[hi - 1]),
        samples: hi - lo,
    })
}
