use super::grid::{Grid1D, WaveField};
use crate::error::{Error, Result};
use crate::specfun::{cospi, gamma_r};
use num_complex::Complex64;

/// |k|^alpha on the FFT wavenumbers, exactly zero at k = 0.
pub fn riesz_multiplier(grid: &Grid1D, alpha: f64) -> Vec<f64> {
    grid.wavenumbers
        .iter()
        .map(|&k| if k == 0.0 { 0.0 } else if alpha == 2.0 { k * k } else { k.abs().powf(alpha) })
        .collect()
}

/// Spectral (-Laplacian)^(alpha/2) on the periodic grid.
pub fn apply_riesz(field: &WaveField, alpha: f64) -> Result<WaveField> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(Error::UnsupportedAlpha(alpha));
    }
    field.check_finite()?;
    let m = riesz_multiplier(&field.grid, alpha);
    let mut v = field.values.clone();
    field.grid.apply_symbol(&mut v, &m);
    Ok(WaveField { grid: field.grid.clone(), values: v })
}

/// Grunwald-Letnikov coefficients g_j = (-1)^j binom(alpha, j).
fn gl_coeffs(alpha: f64, count: usize) -> Vec<f64> {
    let mut g = Vec::with_capacity(count);
    g.push(1.0);
    for j in 1..count {
        let prev = g[j - 1];
        g.push(prev * (1.0 - (alpha + 1.0) / j as f64));
    }
    g
}

/// sum_{j > big} g_j from the large-j expansion of g_j.
fn gl_tail(alpha: f64, big: usize) -> f64 {
    let t = big as f64 + 0.5;
    (t.powf(-alpha) / alpha + 0.5 * alpha * t.powf(-1.0 - alpha)) / gamma_r(-alpha)
}

fn check_gl_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 2.0) || (alpha - 1.0).abs() < 1e-12 {
        return Err(Error::UnsupportedAlpha(alpha));
    }
    Ok(())
}

/// Weighted-shifted Grunwald weights for the left Weyl derivative:
/// D_L f_i = h^-alpha sum_{j >= -1} w_j f_{i-j}, returned as (w_{-1}, w_0, w_1, ...).
fn wsgd_weights(alpha: f64, count: usize) -> Vec<f64> {
    let (l1, l2) = (alpha / 2.0, 1.0 - alpha / 2.0);
    let g = gl_coeffs(alpha, count + 1);
    let mut w = Vec::with_capacity(count + 1);
    w.push(l1 * g[0]);
    for j in 0..count {
        w.push(l1 * g[j + 1] + l2 * g[j]);
    }
    w
}

/// Second-order Grunwald-Letnikov realization of (D_L + D_R) / (2 cos(alpha pi/2)),
/// with the two Weyl derivatives summed over all periodic images of the field.
/// Test oracle only; alpha = 1 is rejected (use `hilbert_difference_oracle`).
pub fn gl_riesz_oracle(field: &WaveField, alpha: f64) -> Result<WaveField> {
    check_gl_alpha(alpha)?;
    field.check_finite()?;
    let n = field.grid.n;
    let periods = 400usize;
    let count = n * periods;
    let w = wsgd_weights(alpha, count);
    // fold weights by residue; offset j sits at w[j + 1]
    let mut folded = vec![0.0; n];
    for (idx, &wj) in w.iter().enumerate() {
        let j = idx as i64 - 1;
        folded[j.rem_euclid(n as i64) as usize] += wj;
    }
    if alpha != 2.0 {
        let (l1, l2) = (alpha / 2.0, 1.0 - alpha / 2.0);
        // w holds offsets up to count - 1
        let tail = l1 * gl_tail(alpha, count) + l2 * gl_tail(alpha, count - 1);
        folded.iter_mut().for_each(|v| *v += tail / n as f64);
    }
    let pref = field.grid.dx.powf(-alpha) / (2.0 * cospi(alpha / 2.0));
    let f = &field.values;
    let out = (0..n)
        .map(|i| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (r, &wr) in folded.iter().enumerate() {
                acc += (f[(i + n - r) % n] + f[(i + r) % n]) * wr;
            }
            acc * pref
        })
        .collect();
    Ok(WaveField { grid: field.grid.clone(), values: out })
}

/// The same weighted-shifted sums on the line, truncated at the domain edge
/// (the field is taken as zero outside the grid).
pub fn gl_riesz_oracle_truncated(field: &WaveField, alpha: f64) -> Result<WaveField> {
    check_gl_alpha(alpha)?;
    field.check_finite()?;
    let n = field.grid.n as i64;
    let w = wsgd_weights(alpha, field.grid.n + 1);
    let pref = field.grid.dx.powf(-alpha) / (2.0 * cospi(alpha / 2.0));
    let f = &field.values;
    let out = (0..n)
        .map(|i| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (idx, &wj) in w.iter().enumerate() {
                let j = idx as i64 - 1;
                if (0..n).contains(&(i - j)) {
                    acc += f[(i - j) as usize] * wj;
                }
                if (0..n).contains(&(i + j)) {
                    acc += f[(i + j) as usize] * wj;
                }
            }
            acc * pref
        })
        .collect();
    Ok(WaveField { grid: field.grid.clone(), values: out })
}

/// alpha = 1 oracle: Hilbert transform of the centred first difference.
pub fn hilbert_difference_oracle(field: &WaveField) -> Result<WaveField> {
    field.check_finite()?;
    let n = field.grid.n;
    let h = field.grid.dx;
    let f = &field.values;
    let mut d: Vec<Complex64> = (0..n).map(|i| (f[(i + 1) % n] - f[(i + n - 1) % n]) / (2.0 * h)).collect();
    let sym: Vec<Complex64> = field
        .grid
        .wavenumbers
        .iter()
        .map(|&k| Complex64::new(0.0, -k.signum() * (k != 0.0) as i32 as f64))
        .collect();
    field.grid.apply_symbol_complex(&mut d, &sym);
    Ok(WaveField { grid: field.grid.clone(), values: d })
}
