//! Adaptive Gauss-Kronrod (10/21) quadrature for complex-valued integrands.

use crate::error::{Error, Result};
use num_complex::Complex64;

const XGK: [f64; 11] = [
    0.995_657_163_025_808_1,
    0.973_906_528_517_171_7,
    0.930_157_491_355_708_2,
    0.865_063_366_688_984_5,
    0.780_817_726_586_416_9,
    0.679_409_568_299_024_4,
    0.562_757_134_668_604_7,
    0.433_395_394_129_247_2,
    0.294_392_862_701_460_2,
    0.148_874_338_981_631_2,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874,
    0.032_558_162_307_964_73,
    0.054_755_896_574_352,
    0.075_039_674_810_919_95,
    0.093_125_454_583_697_6,
    0.109_387_158_802_297_64,
    0.123_491_976_262_065_85,
    0.134_709_217_311_473_33,
    0.142_775_938_577_060_08,
    0.147_739_104_901_338_5,
    0.149_445_554_002_916_9,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_14,
    0.149_451_349_150_580_6,
    0.219_086_362_515_982_04,
    0.269_266_719_309_996_36,
    0.295_524_224_714_752_87,
];

/// One 21-point Kronrod panel; returns (estimate, error estimate).
pub fn gk21<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[10];
    let mut g = Complex64::new(0.0, 0.0);
    for j in 0..10 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        k += s * WGK[j];
        if j % 2 == 1 {
            g += s * WG[j / 2];
        }
    }
    let k = k * h;
    let g = g * h;
    (k, (k - g).norm())
}

/// Integration controls.
#[derive(Debug, Clone, Copy)]
pub struct QuadTol {
    pub abs: f64,
    pub rel: f64,
    pub max_panels: usize,
}

impl Default for QuadTol {
    fn default() -> Self {
        QuadTol { abs: 1e-13, rel: 1e-12, max_panels: 20_000 }
    }
}

/// Adaptive integral over [a, b], starting from `initial` equal panels.
pub fn integrate<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    initial: usize,
    tol: QuadTol,
) -> Result<(Complex64, f64)> {
    let n0 = initial.max(1);
    let mut panels: Vec<(f64, f64, Complex64, f64)> = Vec::with_capacity(n0 * 2);
    let w = (b - a) / n0 as f64;
    for i in 0..n0 {
        let lo = a + w * i as f64;
        let hi = if i + 1 == n0 { b } else { lo + w };
        let (v, e) = gk21(&mut f, lo, hi);
        panels.push((lo, hi, v, e));
    }
    loop {
        let total: Complex64 = panels.iter().map(|p| p.2).sum();
        let err: f64 = panels.iter().map(|p| p.3).sum();
        if !(total.re.is_finite() && total.im.is_finite()) {
            return Err(Error::NonConvergence {
                requested: tol.abs,
                achieved: f64::INFINITY,
                detail: "non-finite integrand".into(),
            });
        }
        let target = tol.abs.max(tol.rel * total.norm());
        if err <= target {
            return Ok((total, err));
        }
        if panels.len() >= tol.max_panels {
            return Err(Error::NonConvergence {
                requested: target,
                achieved: err,
                detail: format!("{} panels on [{a}, {b}]", panels.len()),
            });
        }
        // bisect every panel carrying more than its share of the error
        let share = target / panels.len() as f64;
        let mut next = Vec::with_capacity(panels.len() * 2);
        let mut split_any = false;
        let worst = panels.iter().map(|p| p.3).fold(0.0, f64::max);
        for p in panels {
            if p.3 > share && (p.3 >= 0.05 * worst) && p.1 - p.0 > 1e-15 * (1.0 + p.0.abs()) {
                split_any = true;
                let m = 0.5 * (p.0 + p.1);
                let (v1, e1) = gk21(&mut f, p.0, m);
                let (v2, e2) = gk21(&mut f, m, p.1);
                next.push((p.0, m, v1, e1));
                next.push((m, p.1, v2, e2));
            } else {
                next.push(p);
            }
        }
        panels = next;
        if !split_any {
            let err: f64 = panels.iter().map(|p| p.3).sum();
            let total: Complex64 = panels.iter().map(|p| p.2).sum();
            return Err(Error::NonConvergence {
                requested: tol.abs.max(tol.rel * total.norm()),
                achieved: err,
                detail: "panels reached resolution limit".into(),
            });
        }
    }
}

/// Real-valued convenience wrapper.
pub fn integrate_real<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    initial: usize,
    tol: QuadTol,
) -> Result<(f64, f64)> {
    integrate(|x| Complex64::new(f(x), 0.0), a, b, initial, tol).map(|(v, e)| (v.re, e))
}
