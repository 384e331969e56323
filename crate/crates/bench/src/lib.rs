//! Fixtures shared by the benchmarks.

use frse::{Complex64, Grid1D, WaveField};

/// Gaussian with a carrier on [-l, l).
pub fn gaussian(n: usize, l: f64, k0: f64) -> WaveField {
    let g = Grid1D::symmetric(l, n).expect("power-of-two grid");
    WaveField::from_fn(&g, |x| Complex64::from_polar((-x * x / 2.0).exp(), k0 * x))
}

/// Plane-wave pump with two weak sidebands on the 2 pi box.
pub fn pumped(n: usize) -> WaveField {
    let g = Grid1D::new(-std::f64::consts::PI, std::f64::consts::PI, n).expect("power-of-two grid");
    WaveField::from_fn(&g, |x| Complex64::from_polar(1.0, 3.0 * x) + Complex64::from_polar(1e-3, 4.0 * x) + Complex64::from_polar(1e-3, 2.0 * x))
}
