//! Artifact encodings: CSV tables, binary field snapshots, exit-coded errors.

use crate::raw::ConfigError;
use frse::beams::EvolutionReport;
use frse::{Complex64, WaveField};
use std::fmt::Write;

pub const SNAPSHOT_MAGIC: &[u8; 4] = b"FRSE";
pub const SNAPSHOT_VERSION: u32 = 1;

/// 17 significant digits, round-trip exact.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: &[f64]) {
        self.rows.push(row.iter().map(|v| num(*v)).collect());
    }

    /// leading integer column, then reals
    pub fn push_indexed(&mut self, i: usize, row: &[f64]) {
        let mut r = vec![i.to_string()];
        r.extend(row.iter().map(|v| num(*v)));
        self.rows.push(r);
    }

    pub fn to_csv(&self) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.join(","));
            s.push('\n');
        }
        s
    }
}

pub fn report_table(r: &EvolutionReport) -> Table {
    let mut t = Table::new(&["t", "norm", "centroid", "msd", "peak"]);
    for i in 0..r.times.len() {
        t.push(&[r.times[i], r.norms[i], r.centroids[i], r.msd[i], r.peak_positions[i]]);
    }
    t
}

pub fn field_table(f: &WaveField) -> Table {
    let mut t = Table::new(&["x", "re", "im", "abs2"]);
    for (j, z) in f.values.iter().enumerate() {
        t.push(&[f.grid.x(j), z.re, z.im, z.norm_sqr()]);
    }
    t
}

/// "FRSE", version, n, x_min, x_max, then (re, im) pairs; little-endian.
pub fn encode_snapshot(f: &WaveField) -> Vec<u8> {
    let mut b = Vec::with_capacity(32 + 16 * f.values.len());
    b.extend_from_slice(SNAPSHOT_MAGIC);
    b.extend_from_slice(&SNAPSHOT_VERSION.to_le_bytes());
    b.extend_from_slice(&(f.values.len() as u64).to_le_bytes());
    b.extend_from_slice(&f.grid.x_min.to_le_bytes());
    b.extend_from_slice(&f.grid.x_max.to_le_bytes());
    for z in &f.values {
        b.extend_from_slice(&z.re.to_le_bytes());
        b.extend_from_slice(&z.im.to_le_bytes());
    }
    b
}

#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub x_min: f64,
    pub x_max: f64,
    pub values: Vec<Complex64>,
}

pub fn decode_snapshot(b: &[u8]) -> Result<Snapshot, String> {
    let word = |at: usize| -> Result<[u8; 8], String> { b.get(at..at + 8).and_then(|s| s.try_into().ok()).ok_or_else(|| "truncated snapshot".to_string()) };
    if b.len() < 32 || &b[..4] != SNAPSHOT_MAGIC {
        return Err("not a FRSE snapshot".into());
    }
    let version = u32::from_le_bytes(b[4..8].try_into().unwrap());
    if version != SNAPSHOT_VERSION {
        return Err(format!("unsupported snapshot version {version}"));
    }
    let n = u64::from_le_bytes(word(8)?) as usize;
    if b.len() != 32 + 16 * n {
        return Err(format!("snapshot length {} does not match n = {n}", b.len()));
    }
    let f = |at| word(at).map(f64::from_le_bytes);
    let values = (0..n).map(|j| Ok(Complex64::new(f(32 + 16 * j)?, f(40 + 16 * j)?))).collect::<Result<_, String>>()?;
    Ok(Snapshot { x_min: f(16)?, x_max: f(24)?, values })
}

#[derive(Debug)]
pub enum CliError {
    Config(Vec<ConfigError>),
    Numeric(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    /// Module error with scenario context. Precondition failures count as
    /// configuration errors, everything else as numeric.
    pub fn from_core(context: &str, e: frse::Error) -> Self {
        use frse::Error::*;
        match e {
            Invalid(_) | Domain(_) | Grid(_) | UnsupportedAlpha(_) | Budget { .. } | Pole(_) => {
                CliError::Config(vec![ConfigError { key: context.to_string(), line: None, message: e.to_string() }])
            }
            _ => CliError::Numeric(format!("{context}: {e}")),
        }
    }

    pub fn io(context: impl std::fmt::Display, e: std::io::Error) -> Self {
        CliError::Io(format!("{context}: {e}"))
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(errs) => {
                let mut s = format!("{} configuration error(s)", errs.len());
                for e in errs {
                    let _ = write!(s, "\n  {e}");
                }
                f.write_str(&s)
            }
            CliError::Numeric(m) => write!(f, "numeric failure: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}
