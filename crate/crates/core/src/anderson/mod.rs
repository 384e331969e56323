//! Disordered Levy lattice: H = (hbar^alpha/2)(-Laplacian)^{alpha/2} + V(x)
//! with uniform random V, its localized eigenmodes, the four-mode overlap
//! tensor and the nonlinear oscillator system in mode space.

mod oscillators;
mod tensor;

pub use oscillators::{evolve_oscillators, fit_msd_exponent, Coupling, OscillatorReport, OscillatorState};
pub use tensor::{overlap_tensor, OverlapTensor, DEFAULT_CUTOFF, DEFAULT_ENTRY_BUDGET};

use crate::error::{Error, Result};
use crate::fracops::{riesz_multiplier, Grid1D};
use crate::rng::{stream, STREAM_DISORDER};
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct RandomPotential {
    pub seed: u64,
    pub strength: f64,
    pub samples: Vec<f64>,
}

impl RandomPotential {
    /// i.i.d. uniform on [-W/2, W/2] from the disorder stream of `seed`.
    pub fn uniform(n: usize, strength: f64, seed: u64) -> Result<Self> {
        if !(strength >= 0.0 && strength.is_finite()) {
            return Err(Error::Invalid(format!("disorder strength W = {strength} must be >= 0")));
        }
        let mut r = stream(seed, STREAM_DISORDER);
        let samples = (0..n).map(|_| strength * (r.random::<f64>() - 0.5)).collect();
        Ok(RandomPotential { seed, strength, samples })
    }
}

/// Dense real symmetric matrix of the spectral kinetic term plus diag(V).
pub fn build_hamiltonian(grid: &Grid1D, pot: &RandomPotential, alpha: f64, hbar_ef: f64) -> Result<DMatrix<f64>> {
    let n = grid.n;
    if pot.samples.len() != n {
        return Err(Error::Grid(format!("potential has {} samples, grid has {n}", pot.samples.len())));
    }
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(Error::Invalid(format!("alpha = {alpha} must lie in (0,2]")));
    }
    let sym: Vec<f64> = riesz_multiplier(grid, alpha).iter().map(|s| 0.5 * hbar_ef.powf(alpha) * s).collect();
    let mut h = DMatrix::<f64>::zeros(n, n);
    let mut col = vec![Complex64::new(0.0, 0.0); n];
    for j in 0..n {
        col.iter_mut().for_each(|z| *z = Complex64::new(0.0, 0.0));
        col[j] = Complex64::new(1.0, 0.0);
        grid.apply_symbol(&mut col, &sym);
        for i in 0..n {
            h[(i, j)] = col[i].re;
        }
    }
    let mut s = (&h + h.transpose()) * 0.5;
    for i in 0..n {
        s[(i, i)] += pot.samples[i];
    }
    Ok(s)
}

/// Eigenpairs sorted by energy. Columns are normalized to sum |Psi|^2 dx = 1
/// and signed so the largest-magnitude entry is positive.
#[derive(Debug, Clone, PartialEq)]
pub struct AndersonModes {
    pub energies: Vec<f64>,
    pub modes: DMatrix<f64>,
    pub dx: f64,
}

impl AndersonModes {
    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    /// inverse participation in site units: 1 / sum_j p_j^2, p_j = |Psi_j|^2 dx
    pub fn participation_ratio(&self, k: usize) -> f64 {
        let s: f64 = self.modes.column(k).iter().map(|v| (v * v * self.dx).powi(2)).sum();
        1.0 / s
    }

    /// int x |Psi_k|^2 dx
    pub fn centroid(&self, k: usize, grid: &Grid1D) -> f64 {
        self.modes.column(k).iter().enumerate().map(|(j, v)| grid.x(j) * v * v).sum::<f64>() * self.dx
    }

    /// C_k = int Psi_k psi dx for k in `window`
    pub fn project(&self, psi: &[Complex64], window: std::ops::Range<usize>) -> Vec<Complex64> {
        window.map(|k| self.modes.column(k).iter().zip(psi).map(|(p, z)| z * *p).sum::<Complex64>() * self.dx).collect()
    }

    pub fn orthonormality_defect(&self) -> f64 {
        let g = self.modes.transpose() * &self.modes * self.dx;
        let n = g.nrows();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (g[(i, j)] - if i == j { 1.0 } else { 0.0 }).abs()).fold(0.0, f64::max)
    }

    pub fn max_residual(&self, h: &DMatrix<f64>) -> f64 {
        let r = h * &self.modes - &self.modes * DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(&self.energies));
        r.column_iter().map(|c| c.norm() * self.dx.sqrt()).fold(0.0, f64::max)
    }
}

pub fn compute_modes(h: &DMatrix<f64>, dx: f64) -> Result<AndersonModes> {
    let n = h.nrows();
    if h.ncols() != n {
        return Err(Error::Invalid("Hamiltonian must be square".into()));
    }
    let e = SymmetricEigen::try_new(h.clone(), 1e-15, 100_000).ok_or_else(|| Error::Eigen("dense eigensolver did not converge".into()))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| e.eigenvalues[a].total_cmp(&e.eigenvalues[b]));
    let scale = 1.0 / dx.sqrt();
    let mut modes = DMatrix::<f64>::zeros(n, n);
    for (c, &k) in order.iter().enumerate() {
        let v = e.eigenvectors.column(k);
        let big = v.iter().copied().fold(0.0, |a: f64, x| if x.abs() > a.abs() { x } else { a });
        let s = if big < 0.0 { -scale } else { scale };
        modes.set_column(c, &(v * s));
    }
    Ok(AndersonModes { energies: order.iter().map(|&k| e.eigenvalues[k]).collect(), modes, dx })
}
