//! Scenario pipelines. Artifacts are built in memory first, then written,
//! so identical configs produce identical bytes.

use crate::config::{FtseHamiltonian, Initial, Kind, Scenario, ScenarioConfig, SneMode};
use crate::output::{encode_snapshot, field_table, report_table, CliError, Table};
use frse::anderson::{self, Coupling, OscillatorState};
use frse::beams::{self, AiryOptions, EvolutionReport};
use frse::fit::linear_fit;
use frse::ftse::{self, FracGreenQuery, HamiltonianMatrix};
use frse::rng::{stream, STREAM_SIDEBAND_PHASES};
use frse::sne::{self, DecaySetup};
use frse::{specfun, Complex64, Grid1D, WaveField};
use rand::Rng;
use serde_json::{json, Map, Value};
use std::path::{Path, PathBuf};

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, PartialEq)]
pub struct Artifacts {
    /// (file name, contents) in write order
    pub files: Vec<(String, Vec<u8>)>,
    pub metrics: Map<String, Value>,
}

impl Artifacts {
    fn new() -> Self {
        Artifacts { files: Vec::new(), metrics: Map::new() }
    }

    fn csv(&mut self, cfg: &ScenarioConfig, name: &str, t: &Table) {
        if cfg.output.csv {
            self.files.push((name.to_string(), t.to_csv().into_bytes()));
        }
    }

    fn snapshot(&mut self, cfg: &ScenarioConfig, name: &str, f: &WaveField) {
        if cfg.output.snapshot {
            self.files.push((name.to_string(), encode_snapshot(f)));
        }
    }

    fn metric(&mut self, k: &str, v: impl Into<Value>) {
        self.metrics.insert(k.to_string(), v.into());
    }

    /// summary.json content; no wall-clock data
    pub fn summary(&self, cfg: &ScenarioConfig) -> Value {
        let mut outputs: Vec<&str> = self.files.iter().map(|f| f.0.as_str()).collect();
        if cfg.output.summary {
            outputs.push("summary.json");
        }
        json!({ "scenario": cfg.kind.name(), "seed": cfg.run.seed, "outputs": outputs, "metrics": self.metrics })
    }
}

fn core<T>(ctx: &str, r: frse::Result<T>) -> Result<T> {
    r.map_err(|e| CliError::from_core(ctx, e))
}

pub fn execute(cfg: &ScenarioConfig) -> Result<Artifacts> {
    match cfg.kind {
        Kind::Beam => beam(cfg),
        Kind::Slab => slab(cfg),
        Kind::Sne => sne_run(cfg),
        Kind::Ftse => ftse_run(cfg),
        Kind::Anderson => anderson_run(cfg),
        Kind::SpecfunTable => specfun_table(cfg),
    }
}

/// Runs and writes everything under the configured directory.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<(Artifacts, Vec<PathBuf>)> {
    let art = execute(cfg)?;
    let paths = write_artifacts(&cfg.output.dir, &art, cfg.output.summary.then(|| art.summary(cfg)))?;
    Ok((art, paths))
}

fn write_artifacts(dir: &Path, art: &Artifacts, summary: Option<Value>) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir.display(), e))?;
    let mut paths = Vec::new();
    let mut put = |name: &str, bytes: &[u8]| -> Result<()> {
        let p = dir.join(name);
        std::fs::write(&p, bytes).map_err(|e| CliError::io(p.display(), e))?;
        paths.push(p);
        Ok(())
    };
    for (name, bytes) in &art.files {
        put(name, bytes)?;
    }
    if let Some(s) = summary {
        let mut text = serde_json::to_string_pretty(&s).expect("summary serializes");
        text.push('\n');
        put("summary.json", text.as_bytes())?;
    }
    Ok(paths)
}

fn initial_field(grid: &Grid1D, init: &Initial, hbar: f64) -> Result<WaveField> {
    Ok(match *init {
        Initial::Gaussian { width, center, amplitude, velocity } => {
            WaveField::from_fn(grid, |x| Complex64::from_polar(amplitude * (-((x - center) / width).powi(2) / 2.0).exp(), velocity * x))
        }
        Initial::Sech { width, center, amplitude, velocity } => {
            WaveField::from_fn(grid, |x| Complex64::from_polar(amplitude / ((x - center) / width).cosh(), velocity * x))
        }
        Initial::Airy { a, taper, apodization } => {
            core("scenario.initial", beams::airy_initial_with(grid, a, hbar, AiryOptions { taper_fraction: taper, apodization }))?
        }
    })
}

fn norm_drift(r: &EvolutionReport) -> f64 {
    let n0 = r.norms[0];
    r.norms.iter().map(|n| (n - n0).abs() / n0).fold(0.0, f64::max)
}

fn beam(cfg: &ScenarioConfig) -> Result<Artifacts> {
    let Scenario::Beam { initial } = &cfg.scenario else { unreachable!() };
    let grid = core("grid", cfg.grid.build())?;
    let f0 = initial_field(&grid, initial, cfg.params.hbar_ef)?;
    let r = core("beam", beams::propagate_nlse(&f0, &cfg.params, &cfg.profile(), cfg.run.t_final, cfg.run.dt, cfg.run.record_every))?;
    let last = r.snapshots.last().expect("at least one record");
    let mut a = Artifacts::new();
    a.csv(cfg, "evolution.csv", &report_table(&r));
    a.csv(cfg, "field_final.csv", &field_table(last));
    a.snapshot(cfg, "initial.frse", &f0);
    a.snapshot(cfg, "final.frse", last);
    a.metric("norm_relative_drift", norm_drift(&r));
    a.metric("final_centroid", *r.centroids.last().unwrap());
    a.metric("final_peak", *r.peak_positions.last().unwrap());
    if matches!(initial, Initial::Airy { .. }) && r.times.len() >= 3 {
        // peak(t) = x0 + c t^2
        let t2: Vec<f64> = r.times.iter().map(|t| t * t).collect();
        if let Ok(fit) = linear_fit(&t2, &r.peak_positions) {
            a.metric("peak_t2_coefficient", fit.slope);
            a.metric("peak_fit_r2", fit.r2);
        }
    }
    Ok(a)
}

fn slab(cfg: &ScenarioConfig) -> Result<Artifacts> {
    let Scenario::Slab { k_carrier, omega, n_modes, initial } = &cfg.scenario else { unreachable!() };
    let grid = core("grid", cfg.grid.build())?;
    let sc = beams::SlabConfig { l: cfg.grid.x_max, k_carrier: *k_carrier, omega: *omega, alpha: cfg.params.alpha, beta: cfg.params.beta, n_modes: *n_modes };
    core("scenario", sc.validate())?;
    let f0 = initial_field(&grid, initial, cfg.params.hbar_ef)?;
    let steps = (cfg.run.t_final / cfg.run.dt).round() as usize;
    let dz = cfg.run.t_final / steps as f64;
    let zs: Vec<f64> = (0..=steps).step_by(cfg.run.record_every).map(|i| i as f64 * dz).collect();
    let r = core("slab", beams::slab_evolve(&f0, &sc, &zs))?;
    let mut a = Artifacts::new();
    a.csv(cfg, "evolution.csv", &report_table(&r));
    a.csv(cfg, "field_final.csv", &field_table(r.snapshots.last().unwrap()));
    a.snapshot(cfg, "final.frse", r.snapshots.last().unwrap());
    a.metric("norm_relative_drift", norm_drift(&r));
    a.metric("weakly_paraxial", sc.weakly_paraxial());
    if r.snapshots.len() >= 3 {
        a.metric("paraxial_residual", core("slab", beams::paraxial_residual(&r.snapshots, *k_carrier, dz * cfg.run.record_every as f64))?);
    }
    Ok(a)
}

fn sne_run(cfg: &ScenarioConfig) -> Result<Artifacts> {
    let Scenario::Sne { mode, form, initial, q, p, a_q, epsilon } = &cfg.scenario else { unreachable!() };
    let mut a = Artifacts::new();
    let run = &cfg.run;
    match mode {
        SneMode::Evolve => {
            let grid = core("grid", cfg.grid.build())?;
            let f0 = initial_field(&grid, initial, cfg.params.hbar_ef)?;
            let r = core("sne", sne::sne_evolve(&f0, &cfg.params, *form, run.t_final, run.dt, run.record_every))?;
            a.csv(cfg, "evolution.csv", &report_table(&r));
            a.csv(cfg, "field_final.csv", &field_table(r.snapshots.last().unwrap()));
            a.snapshot(cfg, "final.frse", r.snapshots.last().unwrap());
            a.metric("norm_relative_drift", norm_drift(&r));
        }
        SneMode::Decay => {
            let setup = DecaySetup { q: *q, p: *p, a_q: Complex64::new(*a_q, 0.0), epsilon_seed: *epsilon };
            let mut rng = stream(run.seed, STREAM_SIDEBAND_PHASES);
            let tau = 2.0 * std::f64::consts::PI;
            let phases = (tau * rng.random::<f64>(), tau * rng.random::<f64>());
            let trace = core("sne decay", sne::decay_trace(&setup, &cfg.params, cfg.grid.n, phases, run.t_final, run.dt, run.record_every))?;
            let side = trace.sideband();
            let mut t = Table::new(&["t", "pump_abs", "plus_abs", "minus_abs", "sideband"]);
            for i in 0..trace.times.len() {
                t.push(&[trace.times[i], trace.pump[i].norm(), trace.plus[i].norm(), trace.minus[i].norm(), side[i]]);
            }
            a.csv(cfg, "decay.csv", &t);
            let m = sne::stability_matrix(&setup, &cfg.params);
            let predicted = sne::predicted_rate(&m);
            a.metric("predicted_rate", predicted);
            a.metric("phases", vec![phases.0, phases.1]);
            if predicted > 0.0 {
                let (lo, hi) = core("sne decay", sne::growth_window(&trace))?;
                let ly: Vec<f64> = side[lo..hi].iter().map(|s| s.ln()).collect();
                let fit = core("sne decay", linear_fit(&trace.times[lo..hi], &ly))?;
                a.metric("measured_rate", fit.slope);
                a.metric("rate_ratio", fit.slope / predicted);
                a.metric("window", vec![trace.times[lo], trace.times[hi - 1]]);
            } else {
                a.metric("measured_rate", Value::Null);
                a.metric("sideband_slope", core("sne decay", sne::sideband_slope(&trace))?);
            }
        }
    }
    Ok(a)
}

/// "dim" line, then dim^2 lines "re im", row-major.
pub fn read_matrix(path: &Path) -> Result<HamiltonianMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display(), e))?;
    let bad = |m: String| CliError::Config(vec![crate::raw::ConfigError { key: "scenario.matrix".into(), line: None, message: format!("{}: {m}", path.display()) }]);
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let dim: usize = lines.next().and_then(|l| l.parse().ok()).ok_or_else(|| bad("first line must be the dimension".into()))?;
    let mut e = Vec::with_capacity(dim * dim);
    for (i, l) in lines.enumerate() {
        let v: Vec<f64> = l.split_whitespace().map(|w| w.parse()).collect::<std::result::Result<_, _>>().map_err(|_| bad(format!("entry {i}: `{l}` is not `re im`")))?;
        if v.len() != 2 {
            return Err(bad(format!("entry {i}: `{l}` is not `re im`")));
        }
        e.push(Complex64::new(v[0], v[1]));
    }
    if e.len() != dim * dim {
        return Err(bad(format!("expected {} entries, found {}", dim * dim, e.len())));
    }
    HamiltonianMatrix::new(dim, e).map_err(|err| bad(err.to_string()))
}

fn ftse_run(cfg: &ScenarioConfig) -> Result<Artifacts> {
    let Scenario::Ftse { hamiltonian, initial_index, corrections, green_x0, green_t } = &cfg.scenario else { unreachable!() };
    let p = &cfg.params;
    let (g, run) = (&cfg.grid, &cfg.run);
    let h = match hamiltonian {
        FtseHamiltonian::File(path) => read_matrix(path)?,
        FtseHamiltonian::Harmonic { omega } => {
            let (m, w) = (p.mass, *omega);
            core("scenario.hamiltonian", HamiltonianMatrix::discretized(g.x_min, g.x_max, g.n, m, p.hbar_ef, |x| 0.5 * m * w * w * x * x))?
        }
        FtseHamiltonian::Free => core("scenario.hamiltonian", HamiltonianMatrix::discretized(g.x_min, g.x_max, g.n, p.mass, p.hbar_ef, |_| 0.0))?,
    };
    if *initial_index >= h.dim() {
        return Err(CliError::from_core("scenario.initial_index", frse::Error::Invalid(format!("{initial_index} >= dimension {}", h.dim()))));
    }
    let mut psi0 = vec![Complex64::new(0.0, 0.0); h.dim()];
    psi0[*initial_index] = Complex64::new(1.0, 0.0);
    let l1 = core("ftse L1", ftse::caputo_l1_evolution_corrected(&h, &psi0, run.t_final, run.dt, p.beta, p.hbar_ef, *corrections))?;
    let steps = l1.len() - 1;
    let dt = run.t_final / steps.max(1) as f64;
    let mut header = vec!["t".to_string(), "norm_ml".into(), "norm_l1".into(), "l1_vs_ml".into()];
    for j in 0..h.dim() {
        header.push(format!("re_{j}"));
        header.push(format!("im_{j}"));
    }
    let mut t = Table { header, rows: Vec::new() };
    let mut worst: f64 = 0.0;
    let mut last_norm = 1.0;
    for s in (0..=steps).step_by(run.record_every).chain((steps % run.record_every != 0).then_some(steps)) {
        let time = s as f64 * dt;
        let ml = core("ftse ML", ftse::ml_evolution(&h, &psi0, time, p.beta, p.hbar_ef))?;
        let nrm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let diff = ml.iter().zip(&l1[s]).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        worst = worst.max(diff);
        last_norm = nrm(&ml);
        let mut row = vec![time, last_norm, nrm(&l1[s]), diff];
        row.extend(ml.iter().flat_map(|z| [z.re, z.im]));
        t.push(&row);
    }
    let mut a = Artifacts::new();
    a.csv(cfg, "evolution.csv", &t);
    let mut gt = Table::new(&["x", "re", "im", "abs"]);
    let n = g.n.max(2);
    for j in 0..n {
        let x = g.x_min + (g.x_max - g.x_min) * j as f64 / (n - 1) as f64;
        let v = core("ftse green", ftse::frac_green(FracGreenQuery { x_t: x, x_0: *green_x0, t: *green_t, beta: p.beta, hbar_ef: p.hbar_ef }))?;
        gt.push(&[x, v.re, v.im, v.norm()]);
    }
    a.csv(cfg, "green.csv", &gt);
    let norm = core("ftse green", ftse::green_normalization(FracGreenQuery { x_t: 0.0, x_0: *green_x0, t: *green_t, beta: p.beta, hbar_ef: p.hbar_ef }, 8))?;
    a.metric("dimension", h.dim());
    a.metric("max_l1_vs_ml", worst);
    a.metric("final_norm_ml", last_norm);
    a.metric("green_integral", vec![norm.value.re, norm.value.im]);
    a.metric("green_integral_error", norm.error);
    Ok(a)
}

fn anderson_run(cfg: &ScenarioConfig) -> Result<Artifacts> {
    let Scenario::Anderson { disorder, window, packet_width, tensor, cutoff } = &cfg.scenario else { unreachable!() };
    let p = &cfg.params;
    let grid = core("grid", cfg.grid.build())?;
    let pot = core("scenario.disorder", anderson::RandomPotential::uniform(grid.n, *disorder, cfg.run.seed))?;
    let h = core("anderson", anderson::build_hamiltonian(&grid, &pot, p.alpha, p.hbar_ef))?;
    let modes = core("anderson", anderson::compute_modes(&h, grid.dx))?;
    let mut mt = Table::new(&["k", "energy", "participation_ratio", "centroid"]);
    for k in 0..modes.len() {
        mt.push_indexed(k, &[modes.energies[k], modes.participation_ratio(k), modes.centroid(k, &grid)]);
    }
    let w = window.0..window.1;
    let psi: Vec<Complex64> = grid.xs().iter().map(|x| Complex64::new((-(x / packet_width).powi(2)).exp(), 0.0)).collect();
    let mut c0 = modes.project(&psi, w.clone());
    let s = c0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if !(s > 0.0) {
        return Err(CliError::Numeric("initial packet has no weight on the mode window".into()));
    }
    c0.iter_mut().for_each(|z| *z /= s);
    let state = OscillatorState { coefficients: c0, time: 0.0 };
    let ten;
    let coupling = if *tensor {
        ten = core("anderson tensor", anderson::overlap_tensor(&modes, w.clone(), *cutoff, anderson::DEFAULT_ENTRY_BUDGET))?;
        Coupling::Tensor(&ten)
    } else {
        Coupling::Grid(w.clone())
    };
    let (_, rep) = core("anderson", anderson::evolve_oscillators(&state, &modes, &grid, coupling, p.b, cfg.run.t_final, cfg.run.dt, cfg.run.record_every))?;
    let r = &rep.report;
    let mut et = Table::new(&["t", "mode_norm", "h_osc", "mode_msd", "norm", "centroid", "msd"]);
    for i in 0..r.times.len() {
        et.push(&[r.times[i], rep.mode_norm[i], rep.h_osc[i], rep.mode_msd[i], r.norms[i], r.centroids[i], r.msd[i]]);
    }
    let mut a = Artifacts::new();
    a.csv(cfg, "modes.csv", &mt);
    a.csv(cfg, "evolution.csv", &et);
    a.snapshot(cfg, "final.frse", r.snapshots.last().unwrap());
    let drift = |v: &[f64]| v.iter().map(|x| (x - v[0]).abs() / v[0].abs()).fold(0.0, f64::max);
    let mut prs: Vec<f64> = (0..modes.len()).map(|k| modes.participation_ratio(k)).collect();
    prs.sort_by(f64::total_cmp);
    a.metric("median_participation_ratio", prs[prs.len() / 2]);
    a.metric("mode_norm_relative_drift", drift(&rep.mode_norm));
    a.metric("h_osc_relative_drift", drift(&rep.h_osc));
    // exploratory only: desk-scale runs are far from the asymptotic regime
    let tail = (r.times[r.times.len() / 2].max(f64::MIN_POSITIVE), *r.times.last().unwrap());
    let mut shifted = r.clone();
    shifted.msd = r.msd.iter().map(|m| m - r.msd[0]).collect();
    match anderson::fit_msd_exponent(&shifted, tail) {
        Ok(fit) => {
            a.metric("msd_exponent", fit.slope);
            a.metric("msd_exponent_stderr", fit.slope_stderr);
        }
        Err(_) => a.metric("msd_exponent", Value::Null),
    }
    Ok(a)
}

fn specfun_table(cfg: &ScenarioConfig) -> Result<Artifacts> {
    let Scenario::SpecfunTable { function, from, to, points, ml_alpha, ml_beta } = &cfg.scenario else { unreachable!() };
    let mut t = Table::new(&["x", "re", "im"]);
    for j in 0..*points {
        let x = from + (to - from) * j as f64 / (*points - 1) as f64;
        let v = match function.as_str() {
            "airy" => Complex64::new(core("airy", specfun::airy_ai(x))?, 0.0),
            "gamma" => Complex64::new(core("gamma", specfun::gamma(x))?, 0.0),
            _ => core("mittag_leffler", specfun::mittag_leffler(*ml_alpha, *ml_beta, Complex64::new(x, 0.0)))?,
        };
        t.push(&[x, v.re, v.im]);
    }
    let mut a = Artifacts::new();
    a.csv(cfg, "table.csv", &t);
    a.metric("function", function.as_str());
    a.metric("points", *points);
    Ok(a)
}
