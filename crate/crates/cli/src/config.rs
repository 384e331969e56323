//! Scenario configuration: typed schema over the flat text format.

use crate::raw::{any, finite, in_range, non_negative, parse_raw, positive, ConfigError, Reader};
use frse::beams::{MetricKind, MetricProfile};
use frse::{FracParams, Grid1D};
use std::fmt::Write;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Beam,
    Slab,
    Sne,
    Ftse,
    Anderson,
    SpecfunTable,
}

impl Kind {
    pub const ALL: [&'static str; 6] = ["beam", "slab", "sne", "ftse", "anderson", "specfun-table"];

    pub fn name(self) -> &'static str {
        Self::ALL[self as usize]
    }

    pub fn from_name(s: &str) -> Option<Kind> {
        use Kind::*;
        [Beam, Slab, Sne, Ftse, Anderson, SpecfunTable].into_iter().find(|k| k.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn build(&self) -> frse::Result<Grid1D> {
        Grid1D::new(self.x_min, self.x_max, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunSpec {
    pub t_final: f64,
    pub dt: f64,
    pub record_every: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputSpec {
    pub dir: PathBuf,
    pub csv: bool,
    pub snapshot: bool,
    pub summary: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Initial {
    Gaussian { width: f64, center: f64, amplitude: f64, velocity: f64 },
    Sech { width: f64, center: f64, amplitude: f64, velocity: f64 },
    /// truncated Airy beam; taper is the fraction of the left edge rolled off
    Airy { a: f64, taper: f64, apodization: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SneMode {
    Evolve,
    Decay,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FtseHamiltonian {
    /// dense matrix read from a text file
    File(PathBuf),
    /// finite differences of -(hbar^2/2m) d^2/dx^2 + V on the grid
    Harmonic { omega: f64 },
    Free,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Scenario {
    Beam { initial: Initial },
    Slab { k_carrier: f64, omega: f64, n_modes: usize, initial: Initial },
    Sne { mode: SneMode, form: frse::sne::GravityForm, initial: Initial, q: f64, p: f64, a_q: f64, epsilon: f64 },
    Ftse { hamiltonian: FtseHamiltonian, initial_index: usize, corrections: usize, green_x0: f64, green_t: f64 },
    Anderson { disorder: f64, window: (usize, usize), packet_width: f64, tensor: bool, cutoff: f64 },
    SpecfunTable { function: String, from: f64, to: f64, points: usize, ml_alpha: f64, ml_beta: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub kind: Kind,
    pub params: FracParams,
    pub grid: GridSpec,
    pub profile: MetricKind,
    pub run: RunSpec,
    pub output: OutputSpec,
    pub scenario: Scenario,
}

impl ScenarioConfig {
    pub fn profile(&self) -> MetricProfile {
        MetricProfile { kind: self.profile.clone(), hbar_ef: self.params.hbar_ef }
    }
}

/// Parses and validates; every offending key is reported. `kind` overrides
/// (and must agree with) `scenario.kind` when given by the command line.
pub fn parse_config(text: &str, kind: Option<Kind>) -> Result<ScenarioConfig, Vec<ConfigError>> {
    let mut errors = Vec::new();
    let raw = parse_raw(text, &mut errors);
    let mut r = Reader::new(raw, errors);

    let named = r.string("scenario.kind");
    let kind = match (kind, named.as_deref().map(|s| (s, Kind::from_name(s)))) {
        (Some(k), None) => k,
        (None, Some((_, Some(k)))) => k,
        (Some(k), Some((_, Some(n)))) if k == n => k,
        (Some(k), Some((s, Some(_)))) => {
            r.error("scenario.kind", format!("`{s}` disagrees with subcommand `{}`", k.name()));
            k
        }
        (k, Some((s, None))) => {
            r.error("scenario.kind", format!("`{s}` is not one of {}", Kind::ALL.join(", ")));
            k.unwrap_or(Kind::Beam)
        }
        (None, None) => {
            r.error("scenario.kind", "required key missing (or give a subcommand)");
            Kind::Beam
        }
    };

    let d = FracParams::default();
    let params = FracParams {
        alpha: r.get("params.alpha", d.alpha, in_range(0.0, 2.0, true, false)),
        beta: r.get("params.beta", d.beta, in_range(0.0, 1.0, true, false)),
        nu: r.get("params.nu", d.nu, in_range(0.0, 1.0, true, true)),
        hbar_ef: r.get("params.hbar_ef", d.hbar_ef, positive),
        mass: r.get("params.mass", d.mass, positive),
        b: r.get("params.B", d.b, finite),
        g: r.get("params.G", d.g, non_negative),
    };

    let decay = kind == Kind::Sne && r.choice("scenario.mode", &["evolve", "decay"], "evolve") == "decay";
    let grid = read_grid(&mut r, kind, decay);
    let profile = read_profile(&mut r, kind);
    let run = read_run(&mut r, kind);
    let output = read_output(&mut r);
    let scenario = read_scenario(&mut r, kind, &params, &grid, decay);

    let errors = r.finish();
    if errors.is_empty() {
        Ok(ScenarioConfig { kind, params, grid, profile, run, output, scenario })
    } else {
        Err(errors)
    }
}

fn read_grid(r: &mut Reader, kind: Kind, decay: bool) -> GridSpec {
    let n_check = |n: &usize| (!(n.is_power_of_two() && *n >= 8)).then(|| "must be a power of two >= 8".to_string());
    match kind {
        Kind::SpecfunTable => GridSpec { x_min: 0.0, x_max: 0.0, n: 0 },
        // the decay box is fixed at 2 pi / p
        Kind::Sne if decay => GridSpec { x_min: 0.0, x_max: 0.0, n: r.get("grid.n", 64, n_check) },
        Kind::Ftse => {
            let g = GridSpec { x_min: r.get("grid.x_min", -5.0, finite), x_max: r.get("grid.x_max", 5.0, finite), n: r.get("grid.n", 4, |n: &usize| (*n < 2).then(|| "must be >= 2".to_string())) };
            if g.x_max <= g.x_min {
                r.error("grid.x_max", format!("must exceed x_min = {}", g.x_min));
            }
            g
        }
        _ => {
            let g = GridSpec { x_min: r.get("grid.x_min", -20.0, finite), x_max: r.get("grid.x_max", 20.0, finite), n: r.get("grid.n", 512, n_check) };
            if g.x_max <= g.x_min {
                r.error("grid.x_max", format!("must exceed x_min = {}", g.x_min));
            }
            if kind == Kind::Slab && (g.x_min + g.x_max).abs() > 1e-12 * g.x_max.abs() {
                r.error("grid.x_min", "the slab needs a symmetric grid [-L, L]");
            }
            g
        }
    }
}

fn read_profile(r: &mut Reader, kind: Kind) -> MetricKind {
    if kind != Kind::Beam {
        return MetricKind::Constant(1.0);
    }
    let which = r.choice("profile.metric_kind", &["constant", "power", "tabulated"], "constant");
    let m = match which {
        "power" => MetricKind::Power(r.required::<f64>("profile.metric_value", |p| (!(*p < 1.0)).then(|| "power exponent must be < 1 (g1 diverges otherwise)".into())).unwrap_or(0.0)),
        "tabulated" => match r.string("profile.metric_value") {
            None => {
                r.error("profile.metric_value", "required key missing (list of t:g pairs)");
                MetricKind::Tabulated(Vec::new())
            }
            Some(s) => match parse_table(&s) {
                Ok(t) => MetricKind::Tabulated(t),
                Err(e) => {
                    r.error("profile.metric_value", e);
                    MetricKind::Tabulated(Vec::new())
                }
            },
        },
        _ => MetricKind::Constant(r.get("profile.metric_value", 1.0, positive)),
    };
    if let Err(e) = (MetricProfile { kind: m.clone(), hbar_ef: 1.0 }).validate() {
        if !r.errors.iter().any(|x| x.key == "profile.metric_value") {
            r.error("profile.metric_value", e.to_string());
        }
    }
    m
}

fn parse_table(s: &str) -> Result<Vec<(f64, f64)>, String> {
    s.split_whitespace()
        .map(|pair| {
            let (t, g) = pair.split_once(':').ok_or_else(|| format!("`{pair}` is not a t:g pair"))?;
            Ok((t.parse().map_err(|_| format!("bad t in `{pair}`"))?, g.parse().map_err(|_| format!("bad g in `{pair}`"))?))
        })
        .collect()
}

fn read_run(r: &mut Reader, kind: Kind) -> RunSpec {
    if kind == Kind::SpecfunTable {
        return RunSpec { t_final: 0.0, dt: 0.0, record_every: 1, seed: 0 };
    }
    let t_final = r.get("run.t_final", 1.0, positive);
    let dt = r.get("run.dt", 1e-2, positive);
    if dt > t_final && t_final > 0.0 {
        r.error("run.dt", format!("must not exceed t_final = {t_final}"));
    }
    RunSpec {
        t_final,
        dt,
        record_every: r.get("run.record_every", 10, |v: &usize| (*v == 0).then(|| "must be >= 1".to_string())),
        seed: r.get("run.seed", 1, any),
    }
}

fn read_output(r: &mut Reader) -> OutputSpec {
    let dir = PathBuf::from(r.string("output.dir").unwrap_or_else(|| "out".into()));
    let formats = r.string("output.formats").unwrap_or_else(|| "csv,summary".into());
    let mut o = OutputSpec { dir, csv: false, snapshot: false, summary: false };
    for f in formats.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match f {
            "csv" => o.csv = true,
            "snapshot" => o.snapshot = true,
            "summary" => o.summary = true,
            _ => r.error("output.formats", format!("`{f}` is not one of csv, snapshot, summary")),
        }
    }
    if !(o.csv || o.snapshot || o.summary) {
        r.error("output.formats", "at least one of csv, snapshot, summary");
    }
    o
}

fn read_initial(r: &mut Reader, allowed: &[&'static str], default: &'static str, width: f64) -> Initial {
    match r.choice("scenario.initial", allowed, default) {
        "airy" => Initial::Airy {
            a: r.get("scenario.airy_a", 1.0, positive),
            taper: r.get("scenario.taper", 0.15, in_range(0.0, 0.5, false, false)),
            apodization: r.get("scenario.apodization", 0.0, non_negative),
        },
        s => {
            let (width, center, amplitude, velocity) = (
                r.get("scenario.width", width, positive),
                r.get("scenario.center", 0.0, finite),
                r.get("scenario.amplitude", 1.0, finite),
                r.get("scenario.velocity", 0.0, finite),
            );
            if s == "sech" {
                Initial::Sech { width, center, amplitude, velocity }
            } else {
                Initial::Gaussian { width, center, amplitude, velocity }
            }
        }
    }
}

fn read_scenario(r: &mut Reader, kind: Kind, params: &FracParams, grid: &GridSpec, decay: bool) -> Scenario {
    match kind {
        Kind::Beam => Scenario::Beam { initial: read_initial(r, &["gaussian", "sech", "airy"], "gaussian", 1.0) },
        Kind::Slab => {
            let s = Scenario::Slab {
                k_carrier: r.get("scenario.k_carrier", 5.0, positive),
                omega: r.get("scenario.omega", 0.0, finite),
                n_modes: r.get("scenario.n_modes", 128, |n: &usize| (*n < 4).then(|| "must be >= 4".to_string())),
                initial: read_initial(r, &["gaussian", "sech"], "gaussian", 1.0),
            };
            if let Scenario::Slab { n_modes, .. } = s {
                if n_modes >= grid.n {
                    r.error("scenario.n_modes", format!("must be below grid.n = {}", grid.n));
                }
            }
            s
        }
        Kind::Sne => {
            let mode = if decay { SneMode::Decay } else { SneMode::Evolve };
            let form = match r.choice("scenario.form", &["spectral", "potential"], "spectral") {
                "potential" => frse::sne::GravityForm::Potential,
                _ => frse::sne::GravityForm::Spectral,
            };
            if decay && form != frse::sne::GravityForm::Spectral {
                r.error("scenario.form", "the decay experiment uses the spectral form");
            }
            let (initial, q, p, a_q, epsilon) = if decay {
                let q = r.get("scenario.q", 3.0, finite);
                let p = r.get("scenario.p", 1.0, positive);
                let a_q = r.get("scenario.a_q", 1.0, positive);
                let eps = r.get("scenario.epsilon", 1e-7, positive);
                let setup = frse::sne::DecaySetup { q, p, a_q: a_q.into(), epsilon_seed: eps };
                if let Err(e) = setup.validate().and_then(|_| frse::sne::decay_grid(&setup, grid.n).map(|_| ())) {
                    r.error("scenario.p", e.to_string());
                }
                if eps > 1e-4 * a_q {
                    r.error("scenario.epsilon", "must not exceed 1e-4 a_q (linear regime)");
                }
                (Initial::Gaussian { width: 1.0, center: 0.0, amplitude: 1.0, velocity: 0.0 }, q, p, a_q, eps)
            } else {
                (read_initial(r, &["gaussian", "sech"], "sech", 1.0), 0.0, 0.0, 0.0, 0.0)
            };
            if params.g == 0.0 && decay {
                r.error("params.G", "the decay experiment needs G > 0");
            }
            Scenario::Sne { mode, form, initial, q, p, a_q, epsilon }
        }
        Kind::Ftse => {
            let hamiltonian = match r.choice("scenario.hamiltonian", &["file", "harmonic", "free"], "harmonic") {
                "file" => match r.string("scenario.matrix") {
                    Some(p) => FtseHamiltonian::File(PathBuf::from(p)),
                    None => {
                        r.error("scenario.matrix", "required when hamiltonian = file");
                        FtseHamiltonian::Free
                    }
                },
                "free" => FtseHamiltonian::Free,
                _ => FtseHamiltonian::Harmonic { omega: r.get("scenario.omega", 1.0, positive) },
            };
            let s = Scenario::Ftse {
                hamiltonian,
                initial_index: r.get("scenario.initial_index", 0, any),
                corrections: r.get("scenario.corrections", 3, |c: &usize| (*c > 8).then(|| "must be <= 8".to_string())),
                green_x0: r.get("scenario.green_x0", 0.0, finite),
                green_t: r.get("scenario.green_t", 1.0, positive),
            };
            if let Scenario::Ftse { hamiltonian: FtseHamiltonian::Harmonic { .. } | FtseHamiltonian::Free, initial_index, .. } = &s {
                if *initial_index >= grid.n {
                    r.error("scenario.initial_index", format!("must be below grid.n = {}", grid.n));
                }
            }
            s
        }
        Kind::Anderson => {
            let disorder = r.get("scenario.disorder", 2.0, non_negative);
            let lo = r.get("scenario.window_start", 0usize, any);
            let hi = r.get("scenario.window_end", grid.n, any);
            if !(lo < hi && hi <= grid.n) {
                r.error("scenario.window_end", format!("window {lo}..{hi} must be non-empty and inside 0..{}", grid.n));
            }
            let tensor = r.choice("scenario.coupling", &["grid", "tensor"], "grid") == "tensor";
            if tensor && hi > lo && ((hi - lo) as u64).pow(4) > frse::anderson::DEFAULT_ENTRY_BUDGET {
                r.error("scenario.coupling", format!("tensor for {} modes exceeds the entry budget; narrow the window or use coupling = grid", hi - lo));
            }
            Scenario::Anderson {
                disorder,
                window: (lo, hi),
                packet_width: r.get("scenario.packet_width", 2.0, positive),
                tensor,
                cutoff: r.get("scenario.cutoff", frse::anderson::DEFAULT_CUTOFF, non_negative),
            }
        }
        Kind::SpecfunTable => {
            let function = r.choice("scenario.function", &["mittag_leffler", "airy", "gamma"], "mittag_leffler").to_string();
            let from = r.get("scenario.from", -5.0, finite);
            let to = r.get("scenario.to", 5.0, finite);
            if to <= from {
                r.error("scenario.to", format!("must exceed from = {from}"));
            }
            let (ml_alpha, ml_beta) = if function == "mittag_leffler" {
                (r.get("scenario.ml_alpha", 0.5, in_range(frse::specfun::NU_MIN, frse::specfun::NU_MAX, false, false)), r.get("scenario.ml_beta", 1.0, positive))
            } else {
                (0.0, 0.0)
            };
            Scenario::SpecfunTable { function, from, to, points: r.get("scenario.points", 101, |p: &usize| (*p < 2).then(|| "must be >= 2".to_string())), ml_alpha, ml_beta }
        }
    }
}

fn fmt_initial(s: &mut String, i: &Initial) {
    match i {
        Initial::Gaussian { width, center, amplitude, velocity } | Initial::Sech { width, center, amplitude, velocity } => {
            let name = if matches!(i, Initial::Sech { .. }) { "sech" } else { "gaussian" };
            let _ = writeln!(s, "initial = {name}\nwidth = {width:?}\ncenter = {center:?}\namplitude = {amplitude:?}\nvelocity = {velocity:?}");
        }
        Initial::Airy { a, taper, apodization } => {
            let _ = writeln!(s, "initial = airy\nairy_a = {a:?}\ntaper = {taper:?}\napodization = {apodization:?}");
        }
    }
}

/// Canonical text with every default spelled out; parses back to the same config.
pub fn to_text(c: &ScenarioConfig) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "[scenario]\nkind = {}", c.kind.name());
    match &c.scenario {
        Scenario::Beam { initial } => fmt_initial(&mut s, initial),
        Scenario::Slab { k_carrier, omega, n_modes, initial } => {
            let _ = writeln!(s, "k_carrier = {k_carrier:?}\nomega = {omega:?}\nn_modes = {n_modes}");
            fmt_initial(&mut s, initial);
        }
        Scenario::Sne { mode, form, initial, q, p, a_q, epsilon } => {
            let form = if *form == frse::sne::GravityForm::Potential { "potential" } else { "spectral" };
            match mode {
                SneMode::Decay => {
                    let _ = writeln!(s, "mode = decay\nform = {form}\nq = {q:?}\np = {p:?}\na_q = {a_q:?}\nepsilon = {epsilon:?}");
                }
                SneMode::Evolve => {
                    let _ = writeln!(s, "mode = evolve\nform = {form}");
                    fmt_initial(&mut s, initial);
                }
            }
        }
        Scenario::Ftse { hamiltonian, initial_index, corrections, green_x0, green_t } => {
            match hamiltonian {
                FtseHamiltonian::File(p) => {
                    let _ = writeln!(s, "hamiltonian = file\nmatrix = \"{}\"", p.display());
                }
                FtseHamiltonian::Harmonic { omega } => {
                    let _ = writeln!(s, "hamiltonian = harmonic\nomega = {omega:?}");
                }
                FtseHamiltonian::Free => {
                    let _ = writeln!(s, "hamiltonian = free");
                }
            }
            let _ = writeln!(s, "initial_index = {initial_index}\ncorrections = {corrections}\ngreen_x0 = {green_x0:?}\ngreen_t = {green_t:?}");
        }
        Scenario::Anderson { disorder, window, packet_width, tensor, cutoff } => {
            let _ = writeln!(
                s,
                "disorder = {disorder:?}\nwindow_start = {}\nwindow_end = {}\npacket_width = {packet_width:?}\ncoupling = {}\ncutoff = {cutoff:?}",
                window.0,
                window.1,
                if *tensor { "tensor" } else { "grid" }
            );
        }
        Scenario::SpecfunTable { function, from, to, points, ml_alpha, ml_beta } => {
            let _ = writeln!(s, "function = {function}\nfrom = {from:?}\nto = {to:?}\npoints = {points}");
            if function == "mittag_leffler" {
                let _ = writeln!(s, "ml_alpha = {ml_alpha:?}\nml_beta = {ml_beta:?}");
            }
        }
    }
    let p = &c.params;
    let _ = writeln!(
        s,
        "\n[params]\nalpha = {:?}\nbeta = {:?}\nnu = {:?}\nhbar_ef = {:?}\nmass = {:?}\nB = {:?}\nG = {:?}",
        p.alpha, p.beta, p.nu, p.hbar_ef, p.mass, p.b, p.g
    );
    match c.kind {
        Kind::SpecfunTable => {}
        Kind::Sne if matches!(c.scenario, Scenario::Sne { mode: SneMode::Decay, .. }) => {
            let _ = writeln!(s, "\n[grid]\nn = {}", c.grid.n);
        }
        _ => {
            let _ = writeln!(s, "\n[grid]\nx_min = {:?}\nx_max = {:?}\nn = {}", c.grid.x_min, c.grid.x_max, c.grid.n);
        }
    }
    if c.kind == Kind::Beam {
        let _ = match &c.profile {
            MetricKind::Constant(v) => writeln!(s, "\n[profile]\nmetric_kind = constant\nmetric_value = {v:?}"),
            MetricKind::Power(v) => writeln!(s, "\n[profile]\nmetric_kind = power\nmetric_value = {v:?}"),
            MetricKind::Tabulated(t) => {
                let pairs: Vec<String> = t.iter().map(|(a, b)| format!("{a:?}:{b:?}")).collect();
                writeln!(s, "\n[profile]\nmetric_kind = tabulated\nmetric_value = \"{}\"", pairs.join(" "))
            }
        };
    }
    if c.kind != Kind::SpecfunTable {
        let r = &c.run;
        let _ = writeln!(s, "\n[run]\nt_final = {:?}\ndt = {:?}\nrecord_every = {}\nseed = {}", r.t_final, r.dt, r.record_every, r.seed);
    }
    let o = &c.output;
    let formats: Vec<&str> = [(o.csv, "csv"), (o.snapshot, "snapshot"), (o.summary, "summary")].iter().filter(|f| f.0).map(|f| f.1).collect();
    let _ = writeln!(s, "\n[output]\ndir = \"{}\"\nformats = {}", o.dir.display(), formats.join(","));
    s
}
