use super::{AndersonModes, OverlapTensor};
use crate::beams::EvolutionReport;
use crate::error::{Error, Result};
use crate::fit::{linear_fit, LinearFit};
use crate::fracops::{Grid1D, WaveField};
use num_complex::Complex64;
use std::ops::Range;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorState {
    /// amplitudes of the window modes
    pub coefficients: Vec<Complex64>,
    pub time: f64,
}

/// How the cubic term is contracted.
#[derive(Debug, Clone)]
pub enum Coupling<'a> {
    /// stored (possibly truncated) overlap tensor
    Tensor(&'a OverlapTensor),
    /// exact contraction on the grid, int Psi_k |v|^2 v dx with v = sum C Psi,
    /// equivalent to the untruncated tensor over the window
    Grid(Range<usize>),
}

impl Coupling<'_> {
    fn window(&self) -> Range<usize> {
        match self {
            Coupling::Tensor(t) => t.window.clone(),
            Coupling::Grid(w) => w.clone(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct OscillatorReport {
    /// real-space observables of psi = sum C_k Psi_k
    pub report: EvolutionReport,
    pub h_osc: Vec<f64>,
    /// sum |C_k|^2
    pub mode_norm: Vec<f64>,
    /// sum |C_k|^2 (X_k - X(0))^2 / sum |C_k|^2 with X_k the mode centroids
    pub mode_msd: Vec<f64>,
}

struct System<'a> {
    modes: &'a AndersonModes,
    coupling: Coupling<'a>,
    window: Range<usize>,
    omega: Vec<f64>,
    b: f64,
}

impl System<'_> {
    fn field(&self, c: &[Complex64]) -> Vec<Complex64> {
        let n = self.modes.modes.nrows();
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        for (ck, k) in c.iter().zip(self.window.clone()) {
            for (x, p) in v.iter_mut().zip(self.modes.modes.column(k).iter()) {
                *x += ck * *p;
            }
        }
        v
    }

    fn cubic(&self, c: &[Complex64]) -> Vec<Complex64> {
        match &self.coupling {
            Coupling::Tensor(t) => {
                let mut out = vec![Complex64::new(0.0, 0.0); c.len()];
                for ([k, k1, k2, k3], a) in &t.entries {
                    out[*k as usize] += c[*k1 as usize].conj() * c[*k2 as usize] * c[*k3 as usize] * *a;
                }
                out
            }
            Coupling::Grid(_) => {
                let v = self.field(c);
                let g: Vec<Complex64> = v.iter().map(|z| z * z.norm_sqr()).collect();
                self.window
                    .clone()
                    .map(|k| self.modes.modes.column(k).iter().zip(&g).map(|(p, z)| z * *p).sum::<Complex64>() * self.modes.dx)
                    .collect()
            }
        }
    }

    fn rhs(&self, c: &[Complex64], shift: f64) -> Vec<Complex64> {
        let nl = if self.b != 0.0 { self.cubic(c) } else { vec![Complex64::new(0.0, 0.0); c.len()] };
        c.iter().zip(&self.omega).zip(&nl).map(|((ck, w), n)| -I * ((w - shift) * ck + self.b * n)).collect()
    }

    fn energy(&self, c: &[Complex64]) -> f64 {
        let quad: f64 = c.iter().zip(&self.omega).map(|(z, w)| w * z.norm_sqr()).sum();
        let int = match &self.coupling {
            Coupling::Tensor(t) => t
                .entries
                .iter()
                .map(|([k, k1, k2, k3], a)| {
                    (c[*k as usize].conj() * c[*k1 as usize] * c[*k2 as usize].conj() * c[*k3 as usize]).re * a
                })
                .sum::<f64>(),
            Coupling::Grid(_) => self.field(c).iter().map(|z| z.norm_sqr().powi(2)).sum::<f64>() * self.modes.dx,
        };
        quad + 0.5 * self.b * int
    }
}

/// RK4 for i dC_k/dt = omega_k C_k + B sum A_{k k1 k2 k3} C*_k1 C_k2 C_k3.
/// Integrates in a frame rotating at the centre of the window spectrum (the
/// global phase drops out of every observable) to keep omega dt small.
#[allow(clippy::too_many_arguments)]
pub fn evolve_oscillators(
    state: &OscillatorState,
    modes: &AndersonModes,
    grid: &Grid1D,
    coupling: Coupling<'_>,
    b: f64,
    t_final: f64,
    dt: f64,
    record_every: usize,
) -> Result<(OscillatorState, OscillatorReport)> {
    let window = coupling.window();
    if window.is_empty() || window.end > modes.len() {
        return Err(Error::Invalid(format!("mode window {window:?} outside 0..{}", modes.len())));
    }
    if state.coefficients.len() != window.len() {
        return Err(Error::Invalid(format!("{} coefficients for a window of {} modes", state.coefficients.len(), window.len())));
    }
    if grid.n != modes.modes.nrows() {
        return Err(Error::Grid("grid size differs from mode length".into()));
    }
    if !(dt > 0.0 && t_final >= 0.0) || record_every == 0 {
        return Err(Error::Invalid(format!("need dt > 0, t_final >= 0 and record_every >= 1 (dt = {dt})")));
    }
    let omega: Vec<f64> = window.clone().map(|k| modes.energies[k]).collect();
    let shift = 0.5 * (omega.iter().copied().fold(f64::INFINITY, f64::min) + omega.iter().copied().fold(f64::NEG_INFINITY, f64::max));
    let sys = System { modes, coupling: coupling.clone(), window: window.clone(), omega, b };
    let centroids: Vec<f64> = window.clone().map(|k| modes.centroid(k, grid)).collect();
    let mode_msd = |c: &[Complex64], x0: f64| {
        let n: f64 = c.iter().map(|z| z.norm_sqr()).sum();
        c.iter().zip(&centroids).map(|(z, x)| z.norm_sqr() * (x - x0).powi(2)).sum::<f64>() / n
    };
    let c0 = &state.coefficients;
    let n0: f64 = c0.iter().map(|z| z.norm_sqr()).sum();
    let x0 = c0.iter().zip(&centroids).map(|(z, x)| z.norm_sqr() * x).sum::<f64>() / n0;

    let steps = (t_final / dt).round() as usize;
    let h = if steps > 0 { t_final / steps as f64 } else { 0.0 };
    let mut out = OscillatorReport::default();
    let record = |out: &mut OscillatorReport, c: &[Complex64], t: f64| -> Result<()> {
        let rot = Complex64::from_polar(1.0, -shift * t);
        let lab: Vec<Complex64> = c.iter().map(|z| z * rot).collect();
        out.report.record(t, &WaveField::new(grid.clone(), sys.field(&lab))?);
        out.h_osc.push(sys.energy(c));
        out.mode_norm.push(c.iter().map(|z| z.norm_sqr()).sum());
        out.mode_msd.push(mode_msd(c, x0));
        Ok(())
    };
    let mut c = c0.clone();
    record(&mut out, &c, state.time)?;
    let axpy = |a: &[Complex64], k: &[Complex64], s: f64| -> Vec<Complex64> { a.iter().zip(k).map(|(x, y)| x + y * s).collect() };
    for s in 0..steps {
        let k1 = sys.rhs(&c, shift);
        let k2 = sys.rhs(&axpy(&c, &k1, 0.5 * h), shift);
        let k3 = sys.rhs(&axpy(&c, &k2, 0.5 * h), shift);
        let k4 = sys.rhs(&axpy(&c, &k3, h), shift);
        for i in 0..c.len() {
            c[i] += (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (h / 6.0);
        }
        if c.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite { step: s + 1 });
        }
        if (s + 1) % record_every == 0 || s + 1 == steps {
            record(&mut out, &c, state.time + (s + 1) as f64 * h)?;
        }
    }
    let t_end = state.time + t_final;
    let rot = Complex64::from_polar(1.0, -shift * (t_end - state.time));
    let fin = OscillatorState { coefficients: c.iter().map(|z| z * rot).collect(), time: t_end };
    Ok((fin, out))
}

/// Log-log least-squares slope of the MSD over times in `window`.
pub fn fit_msd_exponent(report: &EvolutionReport, window: (f64, f64)) -> Result<LinearFit> {
    let (mut lt, mut lm) = (Vec::new(), Vec::new());
    for (t, m) in report.times.iter().zip(&report.msd) {
        if *t >= window.0 && *t <= window.1 {
            if !(*m > 0.0) || !(*t > 0.0) {
                return Err(Error::Invalid(format!("non-positive MSD {m} at t = {t}")));
            }
            lt.push(t.ln());
            lm.push(m.ln());
        }
    }
    linear_fit(&lt, &lm)
}
