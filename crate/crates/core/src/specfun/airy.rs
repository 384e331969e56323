//! Airy function Ai on the real line.
//!
//! Maclaurin series on [-5, 6], recentred Taylor stepping of y'' = x y on
//! [-8, -5), and the large-argument asymptotic forms outside.

use crate::error::{Error, Result};
use std::f64::consts::{FRAC_PI_4, PI};

const AI0: f64 = 0.355_028_053_887_817_24;
const AIP0: f64 = -0.258_819_403_792_806_8;

/// Ai(x) and Ai'(x) from the Maclaurin series.
fn maclaurin(x: f64) -> (f64, f64) {
    // f = sum 3^k (1/3)_k x^{3k}/(3k)!, g = sum 3^k (2/3)_k x^{3k+1}/(3k+1)!
    let x3 = x * x * x;
    let (mut f, mut g) = (1.0, x);
    let (mut fp, mut gp) = (0.0, 1.0);
    let (mut tf, mut tg) = (1.0, x);
    let mut k = 0.0;
    loop {
        k += 1.0;
        // term ratios: tf_k/tf_{k-1} = x^3 / ((3k-1)(3k)), tg similarly with (3k)(3k+1)
        tf *= x3 / ((3.0 * k - 1.0) * (3.0 * k));
        tg *= x3 / ((3.0 * k) * (3.0 * k + 1.0));
        f += tf;
        g += tg;
        if x != 0.0 {
            fp += 3.0 * k * tf / x;
            gp += (3.0 * k + 1.0) * tg / x;
        }
        if tf.abs() < 1e-18 * f.abs().max(1.0) && tg.abs() < 1e-18 * g.abs().max(1.0) && k > 3.0 {
            break;
        }
        if k > 200.0 {
            break;
        }
    }
    (AI0 * f + AIP0 * g, AI0 * fp + AIP0 * gp)
}

/// Integrate y'' = x y from (x0, y, y') to x1 by Taylor steps of length <= 0.5.
fn taylor_walk(mut x0: f64, mut y: f64, mut yp: f64, x1: f64) -> f64 {
    const NT: usize = 40;
    let nsteps = ((x1 - x0).abs() / 0.5).ceil().max(1.0) as usize;
    let h = (x1 - x0) / nsteps as f64;
    let mut d = [0.0f64; NT];
    for _ in 0..nsteps {
        d[0] = y;
        d[1] = yp;
        for n in 0..NT - 2 {
            let prev = if n >= 1 { n as f64 * d[n - 1] } else { 0.0 };
            d[n + 2] = x0 * d[n] + prev;
        }
        let (mut ny, mut nyp) = (0.0, 0.0);
        let mut hn = 1.0;
        let mut fact = 1.0;
        for n in 0..NT {
            ny += d[n] * hn / fact;
            if n + 1 < NT {
                nyp += d[n + 1] * hn / fact;
            }
            hn *= h;
            fact *= (n + 1) as f64;
        }
        y = ny;
        yp = nyp;
        x0 += h;
    }
    y
}

fn u_coeffs(n: usize) -> Vec<f64> {
    let mut u = vec![1.0; n];
    for k in 1..n {
        let kf = k as f64;
        u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
    }
    u
}

fn asymptotic_pos(x: f64) -> f64 {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let u = u_coeffs(60);
    let mut sum = 0.0;
    let mut zk = 1.0;
    let mut last = f64::INFINITY;
    for (k, uk) in u.iter().enumerate() {
        let t = uk / zk * if k % 2 == 0 { 1.0 } else { -1.0 };
        if t.abs() > last {
            break;
        }
        sum += t;
        last = t.abs();
        zk *= zeta;
    }
    (-zeta).exp() / (2.0 * PI.sqrt() * x.powf(0.25)) * sum
}

fn asymptotic_neg(x: f64) -> f64 {
    let ax = -x;
    let zeta = 2.0 / 3.0 * ax * ax.sqrt();
    let u = u_coeffs(60);
    let (mut p, mut q) = (0.0, 0.0);
    let mut zk = 1.0;
    let mut last = f64::INFINITY;
    for (k, uk) in u.iter().enumerate() {
        let t = uk / zk;
        if t > last {
            break;
        }
        last = t;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * t;
        } else {
            q += sign * t;
        }
        zk *= zeta;
    }
    let ph = zeta + FRAC_PI_4;
    (ph.sin() * p - ph.cos() * q) / (PI.sqrt() * ax.powf(0.25))
}

/// Airy function Ai(x) on its validated range [-20, 10] (absolute error below 1e-11).
pub fn airy_ai(x: f64) -> Result<f64> {
    if !(-20.0..=10.0).contains(&x) {
        return Err(Error::Domain(format!("airy_ai argument {x} outside [-20, 10]")));
    }
    Ok(airy_ai_ext(x))
}

/// Ai(x) for any real x; the asymptotic branches continue beyond the validated range.
pub(crate) fn airy_ai_ext(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x > 6.0 {
        asymptotic_pos(x)
    } else if x >= -5.0 {
        maclaurin(x).0
    } else if x >= -8.0 {
        let (y, yp) = maclaurin(-5.0);
        taylor_walk(-5.0, y, yp, x)
    } else {
        asymptotic_neg(x)
    }
}
