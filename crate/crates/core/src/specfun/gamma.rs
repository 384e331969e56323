//! Complex gamma function via the Lanczos approximation (g = 607/128, 15 terms).

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const G: f64 = 607.0 / 128.0;
const COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_103e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// sin(pi x) with exact reduction of the argument.
pub(crate) fn sinpi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r.abs() <= 0.25 {
        (PI * r).sin()
    } else if r > 0.75 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.75 {
        -(PI * (1.0 + r)).sin()
    } else if r > 0.0 {
        (PI * (0.5 - r)).cos()
    } else {
        -(PI * (0.5 + r)).cos()
    }
}

pub(crate) fn cospi(x: f64) -> f64 {
    sinpi(x + 0.5)
}

fn csinpi(z: Complex64) -> Complex64 {
    let (y, x) = (PI * z.im, z.re);
    Complex64::new(sinpi(x) * y.cosh(), cospi(x) * y.sinh())
}

/// ln Gamma(z) on Re(z) >= 0.5 (principal branch of the Lanczos form).
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut a = Complex64::new(COEF[0], 0.0);
    for (k, &c) in COEF.iter().enumerate().skip(1) {
        a += c / (z + k as f64);
    }
    let t = z + G + 0.5;
    HALF_LN_2PI + (z + 0.5) * t.ln() - t + a.ln()
}

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Gamma(z) for complex z. Poles at non-positive integers are reported as errors.
pub fn cgamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("gamma of non-finite argument {z}")));
    }
    if is_pole(z) {
        return Err(Error::Pole(z.re));
    }
    if z.re < 0.5 {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let s = csinpi(z);
        let g = ln_gamma_right(1.0 - z).exp();
        Ok(PI / (s * g))
    } else {
        Ok(ln_gamma_right(z).exp())
    }
}

/// Real Gamma(x).
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_finite() && x > 0.0 && x == x.round() && x <= 23.0 {
        // exact factorial
        let mut p = 1.0;
        let mut k = 2.0;
        while k < x {
            p *= k;
            k += 1.0;
        }
        return Ok(p);
    }
    cgamma(Complex64::new(x, 0.0)).map(|g| g.re)
}

/// ln|Gamma(x)| for real x > 0, usable where Gamma itself overflows.
pub fn ln_gamma(x: f64) -> f64 {
    ln_gamma_right(Complex64::new(x, 0.0)).re
}

/// 1/Gamma(x), zero at the poles and finite for large x.
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.round() {
        return 0.0;
    }
    if x > 170.0 {
        return (-ln_gamma(x)).exp();
    }
    match gamma(x) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}

/// Gamma for use inside the crate where the argument is known to be regular.
pub(crate) fn gamma_r(x: f64) -> f64 {
    gamma(x).unwrap_or(f64::NAN)
}
