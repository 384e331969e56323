//! Caffarelli-Silvestre extension: the Poisson-kernel extension of f into the
//! half plane y > 0 and the weighted Neumann limit that recovers the
//! fractional Laplacian.

use super::grid::{Grid1D, WaveField};
use crate::error::{Error, Result};
use num_complex::Complex64;

const IMAGES: i64 = 200;

/// Poisson kernel y^alpha / (d^2 + y^2)^((1+alpha)/2) summed over periodic images,
/// at offsets d_m = m dx in FFT order, scaled to unit discrete mass.
pub fn poisson_kernel_periodic(grid: &Grid1D, alpha: f64, y: f64) -> Vec<f64> {
    let n = grid.n;
    let p = grid.length();
    let e = 0.5 * (1.0 + alpha);
    let far = (IMAGES as f64 + 0.5) * p;
    // image sum beyond |l| > IMAGES, spread uniformly: (2/P) int_far^inf y^a x^-(1+a) dx
    let tail = 2.0 / p * y.powf(alpha) * far.powf(-alpha) / alpha;
    let mut k: Vec<f64> = (0..n)
        .map(|j| {
            let m = if j < n / 2 { j as f64 } else { j as f64 - n as f64 };
            let d = m * grid.dx;
            let mut s = 0.0;
            for l in -IMAGES..=IMAGES {
                let x = d + l as f64 * p;
                s += (x * x + y * y).powf(-e);
            }
            s * y.powf(alpha) + tail
        })
        .collect();
    let mass: f64 = k.iter().sum::<f64>() * grid.dx;
    k.iter_mut().for_each(|v| *v /= mass);
    k
}

/// u(x, y) for each y in `y_grid` (rows) by periodic convolution with the kernel.
pub fn extension_solve(f: &WaveField, alpha: f64, y_grid: &[f64]) -> Result<Vec<Vec<Complex64>>> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::UnsupportedAlpha(alpha));
    }
    if y_grid.is_empty() || y_grid[0] <= 0.0 || y_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Invalid("y grid must be positive and strictly ascending".into()));
    }
    f.check_finite()?;
    let g = &f.grid;
    let mut fh = f.values.clone();
    g.fft(&mut fh);
    let mut rows = Vec::with_capacity(y_grid.len());
    for &y in y_grid {
        let ker = poisson_kernel_periodic(g, alpha, y);
        let mut kh: Vec<Complex64> = ker.iter().map(|&v| Complex64::new(v * g.dx, 0.0)).collect();
        g.fft(&mut kh);
        let mut u: Vec<Complex64> = fh.iter().zip(&kh).map(|(a, b)| a * b).collect();
        g.ifft(&mut u);
        if u.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonConvergence {
                requested: 0.0,
                achieved: f64::INFINITY,
                detail: format!("extension at y = {y}"),
            });
        }
        rows.push(u);
    }
    Ok(rows)
}

fn solve3(a: [[f64; 3]; 3], b: [f64; 3]) -> [f64; 3] {
    let det = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(a);
    let mut x = [0.0; 3];
    for (c, xc) in x.iter_mut().enumerate() {
        let mut m = a;
        for r in 0..3 {
            m[r][c] = b[r];
        }
        *xc = det(m) / d;
    }
    x
}

/// lim_{y->0} (u(x,y) - f(x)) / y^alpha by Richardson extrapolation over the
/// three smallest y, eliminating the y^(2-alpha) and y^2 corrections.
/// The result is -c (-Laplacian)^(alpha/2) f with c fixed by the kernel.
pub fn neumann_limit(u: &[Vec<Complex64>], f: &WaveField, alpha: f64, y_grid: &[f64]) -> Result<WaveField> {
    if y_grid.len() < 3 || u.len() != y_grid.len() {
        return Err(Error::Invalid("need three or more y levels with matching rows".into()));
    }
    if y_grid[0] > 1e-2 {
        return Err(Error::Invalid(format!("smallest y = {} must be <= 1e-2", y_grid[0])));
    }
    let p = 2.0 - alpha;
    let ys = [y_grid[0], y_grid[1], y_grid[2]];
    // E0 = sum_j w_j E_j with w the first row of V^-1, V_jk = (1, y_j^p, y_j^2)
    let v = [
        [1.0, ys[0].powf(p), ys[0] * ys[0]],
        [1.0, ys[1].powf(p), ys[1] * ys[1]],
        [1.0, ys[2].powf(p), ys[2] * ys[2]],
    ];
    let vt = [[v[0][0], v[1][0], v[2][0]], [v[0][1], v[1][1], v[2][1]], [v[0][2], v[1][2], v[2][2]]];
    let w = solve3(vt, [1.0, 0.0, 0.0]);
    let est: Vec<Vec<Complex64>> = (0..3)
        .map(|j| u[j].iter().zip(&f.values).map(|(a, b)| (a - b) / ys[j].powf(alpha)).collect())
        .collect();
    let n = f.grid.n;
    let out: Vec<Complex64> = (0..n).map(|i| est[0][i] * w[0] + est[1][i] * w[1] + est[2][i] * w[2]).collect();

    // successive differences must scale like the leading correction y^p
    let norm = |a: &[Complex64], b: &[Complex64]| a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt();
    let scale = out.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let d1 = norm(&est[0], &est[1]) / (ys[1].powf(p) - ys[0].powf(p));
    let d2 = norm(&est[1], &est[2]) / (ys[2].powf(p) - ys[1].powf(p));
    let floor = 1e-6 * scale.max(1e-300);
    if d1 * (ys[1].powf(p) - ys[0].powf(p)) > floor && d2 > 0.0 && !(0.1..=10.0).contains(&(d1 / d2)) {
        return Err(Error::Extrapolation(format!("difference ratio {:.3e}", d1 / d2)));
    }
    Ok(WaveField { grid: f.grid.clone(), values: out })
}

/// Constant c in neumann_limit = -c (-Laplacian)^(alpha/2), measured on the
/// lowest non-constant Fourier mode of the grid.
pub fn extension_constant(grid: &Grid1D, alpha: f64, y_grid: &[f64]) -> Result<f64> {
    let k0 = grid.wavenumbers[1];
    let x0 = grid.x_min;
    let mode = WaveField::from_real_fn(grid, |x| (k0 * (x - x0)).cos());
    let u = extension_solve(&mode, alpha, y_grid)?;
    let lim = neumann_limit(&u, &mode, alpha, y_grid)?;
    let num: f64 = lim.values.iter().zip(&mode.values).map(|(a, b)| a.re * b.re).sum();
    let den: f64 = mode.values.iter().map(|b| b.re * b.re).sum();
    Ok(-num / den / k0.powf(alpha))
}

/// Fractional Laplacian of f via the extension, calibrated on one Fourier mode.
pub fn extension_laplacian(f: &WaveField, alpha: f64, y_grid: &[f64]) -> Result<WaveField> {
    let c = extension_constant(&f.grid, alpha, y_grid)?;
    let u = extension_solve(f, alpha, y_grid)?;
    let mut lim = neumann_limit(&u, f, alpha, y_grid)?;
    lim.values.iter_mut().for_each(|z| *z /= -c);
    Ok(lim)
}
