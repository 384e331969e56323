use super::AndersonModes;
use crate::error::{Error, Result};
use nalgebra::DMatrix;
use std::ops::Range;

pub const DEFAULT_CUTOFF: f64 = 1e-8;
/// dense M^4 entries allowed before a mode window is demanded
pub const DEFAULT_ENTRY_BUDGET: u64 = 1 << 22;

/// Sparse A_{k,k1,k2,k3} = int Psi_k Psi_k1 Psi_k2 Psi_k3 dx over a window of
/// modes (all modes are real). Indices are window-relative.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapTensor {
    pub window: Range<usize>,
    pub entries: Vec<([u32; 4], f64)>,
}

impl OverlapTensor {
    pub fn size(&self) -> usize {
        self.window.len()
    }

    pub fn get(&self, idx: [u32; 4]) -> f64 {
        self.entries.binary_search_by(|e| e.0.cmp(&idx)).map(|i| self.entries[i].1).unwrap_or(0.0)
    }

    /// Only A_{kkkk}; isolates the self-phase modulation of each mode.
    pub fn diagonal_only(&self) -> OverlapTensor {
        let entries = self.entries.iter().filter(|(i, _)| i.iter().all(|&v| v == i[0])).cloned().collect();
        OverlapTensor { window: self.window.clone(), entries }
    }
}

/// Overlap integrals by grid quadrature for modes in `window`, as one matrix
/// product of the pair products Psi_a Psi_b. Entries below `cutoff` are dropped.
pub fn overlap_tensor(modes: &AndersonModes, window: Range<usize>, cutoff: f64, budget: u64) -> Result<OverlapTensor> {
    if window.is_empty() || window.end > modes.len() {
        return Err(Error::Invalid(format!("mode window {window:?} outside 0..{}", modes.len())));
    }
    if !(cutoff >= 0.0) {
        return Err(Error::Invalid(format!("cutoff = {cutoff} must be >= 0")));
    }
    let m = window.len();
    let needed = (m as u64).pow(4);
    if needed > budget {
        return Err(Error::Budget { needed, budget });
    }
    let n = modes.modes.nrows();
    let cols: Vec<_> = window.clone().map(|k| modes.modes.column(k)).collect();
    let pairs = DMatrix::<f64>::from_fn(m * m, n, |ab, x| cols[ab / m][x] * cols[ab % m][x]);
    let full = &pairs * pairs.transpose() * modes.dx;
    let mut entries = Vec::new();
    for ab in 0..m * m {
        for cd in 0..m * m {
            let v = full[(ab, cd)];
            if v.abs() >= cutoff {
                entries.push(([(ab / m) as u32, (ab % m) as u32, (cd / m) as u32, (cd % m) as u32], v));
            }
        }
    }
    Ok(OverlapTensor { window, entries })
}
