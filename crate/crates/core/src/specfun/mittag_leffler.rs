//! Two-parameter Mittag-Leffler function E_{nu,beta}(z).
//!
//! Small |z| uses the defining power series. Everything else goes through
//! numerical inversion of the Laplace transform s^(nu-beta)/(s^nu - z) on an
//! optimally placed parabolic contour (Garrappa, SIAM J. Numer. Anal. 2015),
//! with the residues of the poles lying to the right of the contour added back.

use super::gamma::rgamma;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

pub const NU_MIN: f64 = 0.3;
pub const NU_MAX: f64 = 2.0;
pub const Z_MAX: f64 = 50.0;

const LOG_EPS_MACHINE: f64 = -36.043_653_389_117_154;
const SERIES_RADIUS: f64 = 0.5;

/// E_{nu,beta}(z) on the validated domain nu in [0.3, 2], |z| <= 50.
pub fn mittag_leffler(nu: f64, beta: f64, z: Complex64) -> Result<Complex64> {
    if !(nu.is_finite() && (NU_MIN - 1e-12..=NU_MAX + 1e-12).contains(&nu)) {
        return Err(Error::Domain(format!("nu = {nu} outside [{NU_MIN}, {NU_MAX}]")));
    }
    if !beta.is_finite() {
        return Err(Error::Domain(format!("beta = {beta}")));
    }
    let r = z.norm();
    if !r.is_finite() || r > Z_MAX * (1.0 + 1e-12) {
        return Err(Error::Domain(format!("|z| = {r} exceeds {Z_MAX}")));
    }
    if r == 0.0 {
        return Ok(Complex64::new(rgamma(beta), 0.0));
    }
    let v = if r <= SERIES_RADIUS {
        series(nu, beta, z)
    } else {
        lt_inversion(nu, beta, z)?
    };
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(Error::Overflow(format!("E_({nu},{beta})({z})")));
    }
    Ok(if z.im == 0.0 { Complex64::new(v.re, 0.0) } else { v })
}

/// E_{nu,1}(z).
pub fn mittag_leffler1(nu: f64, z: Complex64) -> Result<Complex64> {
    mittag_leffler(nu, 1.0, z)
}

fn series(nu: f64, beta: f64, z: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zk = Complex64::new(1.0, 0.0);
    for k in 0..2000 {
        let t = zk * rgamma(nu * k as f64 + beta);
        sum += t;
        if k > 2 && t.norm() <= 1e-17 * sum.norm() {
            break;
        }
        zk *= z;
    }
    sum
}

struct Param {
    mu: f64,
    h: f64,
    n: f64,
}

fn lt_inversion(nu: f64, beta: f64, lambda: Complex64) -> Result<Complex64> {
    let mut log_eps = (1e-15f64).ln();
    let theta = lambda.arg();
    let kmin = (-nu / 2.0 - theta / (2.0 * PI)).ceil() as i64;
    let kmax = (nu / 2.0 - theta / (2.0 * PI)).floor() as i64;
    let rad = lambda.norm().powf(1.0 / nu);
    let mut poles: Vec<(f64, Complex64)> = (kmin..=kmax)
        .map(|k| {
            let s = Complex64::from_polar(rad, (theta + 2.0 * PI * k as f64) / nu);
            ((s.re + s.norm()) / 2.0, s)
        })
        .filter(|(phi, _)| *phi > 1e-15)
        .collect();
    poles.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut s_star = vec![Complex64::new(0.0, 0.0)];
    let mut phi = vec![0.0];
    for (p, s) in &poles {
        s_star.push(*s);
        phi.push(*p);
    }
    let j1 = s_star.len();
    let mut pp = vec![(-2.0 * (nu - beta + 1.0)).max(0.0)];
    pp.extend(std::iter::repeat_n(1.0, j1 - 1));
    let mut qq = vec![1.0; j1 - 1];
    qq.push(f64::INFINITY);
    phi.push(f64::INFINITY);

    let admissible: Vec<usize> = (0..j1)
        .filter(|&j| phi[j] < log_eps - LOG_EPS_MACHINE && phi[j] < phi[j + 1])
        .collect();
    if admissible.is_empty() {
        return Err(Error::Overflow(format!("no admissible contour for z = {lambda}")));
    }
    let mut best: Option<(usize, Param)> = None;
    for _ in 0..20 {
        best = None;
        for &j in &admissible {
            let p = if j + 1 < j1 {
                optimal_rb(phi[j], phi[j + 1], pp[j], qq[j], log_eps)
            } else {
                optimal_ru(phi[j], pp[j], log_eps)
            };
            if best.as_ref().is_none_or(|(_, b)| p.n < b.n) {
                best = Some((j, p));
            }
        }
        match &best {
            Some((_, b)) if b.n <= 200.0 => break,
            _ => log_eps += 10f64.ln(),
        }
    }
    let (region, par) = best.expect("at least one admissible region");
    if !par.n.is_finite() {
        return Err(Error::Overflow(format!("contour parameters for z = {lambda}")));
    }
    let n = par.n as i64;
    let mut integral = Complex64::new(0.0, 0.0);
    let i = Complex64::i();
    for k in -n..=n {
        let u = par.h * k as f64;
        let zc = par.mu * (i * u + 1.0).powi(2);
        let zd = Complex64::new(-2.0 * par.mu * u, 2.0 * par.mu);
        let lz = zc.ln();
        let f = ((nu - beta) * lz).exp() / ((nu * lz).exp() - lambda) * zd;
        integral += zc.exp() * f;
    }
    integral *= par.h / (2.0 * PI * i);
    let mut residues = Complex64::new(0.0, 0.0);
    for s in &s_star[region + 1..] {
        residues += ((1.0 - beta) * s.ln() + s).exp() / nu;
    }
    Ok(integral + residues)
}

fn optimal_rb(phi_j: f64, phi_j1: f64, pj: f64, qj: f64, mut log_eps: f64) -> Param {
    let fac = 1.01;
    let f_max = (log_eps - LOG_EPS_MACHINE).exp();
    let sq_j = phi_j.sqrt();
    let threshold = 2.0 * (log_eps - LOG_EPS_MACHINE).sqrt();
    let sq_j1 = phi_j1.sqrt().min(threshold - sq_j);
    let (sqb_j, sqb_j1, f_bar);
    if pj < 1e-14 && qj < 1e-14 {
        sqb_j = sq_j;
        sqb_j1 = sq_j1;
        f_bar = 1.0;
    } else if pj < 1e-14 {
        sqb_j = sq_j;
        let f_min = if sq_j > 0.0 {
            fac * (sq_j / (sq_j1 - sq_j)).powf(qj)
        } else {
            fac
        };
        if f_min >= f_max {
            return Param { mu: 0.0, h: 0.0, n: f64::INFINITY };
        }
        f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fq = f_bar.powf(-1.0 / qj);
        sqb_j1 = (2.0 * sq_j1 - fq * sq_j) / (2.0 + fq);
    } else if qj < 1e-14 {
        sqb_j1 = sq_j1;
        let f_min = fac * (sq_j1 / (sq_j1 - sq_j)).powf(pj);
        if f_min >= f_max {
            return Param { mu: 0.0, h: 0.0, n: f64::INFINITY };
        }
        f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / pj);
        sqb_j = (2.0 * sq_j + fp * sq_j1) / (2.0 - fp);
    } else {
        let f_min = fac * (sq_j + sq_j1) / (sq_j1 - sq_j).powf(pj.max(qj));
        if f_min >= f_max {
            return Param { mu: 0.0, h: 0.0, n: f64::INFINITY };
        }
        let f_min = f_min.max(1.5);
        f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / pj);
        let fq = f_bar.powf(-1.0 / qj);
        let w = -phi_j1 / log_eps;
        let den = 2.0 + w - (1.0 + w) * fp + fq;
        sqb_j = ((2.0 + w + fq) * sq_j + fp * sq_j1) / den;
        sqb_j1 = (-(1.0 + w) * fq * sq_j + (2.0 + w - (1.0 + w) * fp) * sq_j1) / den;
    }
    log_eps -= f_bar.ln();
    let w = -sqb_j1 * sqb_j1 / log_eps;
    let mu = (((1.0 + w) * sqb_j + sqb_j1) / (2.0 + w)).powi(2);
    let h = -2.0 * PI / log_eps * (sqb_j1 - sqb_j) / ((1.0 + w) * sqb_j + sqb_j1);
    let n = ((1.0 - log_eps / mu).sqrt() / h).ceil();
    if !(h > 0.0 && n.is_finite()) {
        return Param { mu: 0.0, h: 0.0, n: f64::INFINITY };
    }
    Param { mu, h, n }
}

fn optimal_ru(phi_j: f64, pj: f64, log_eps: f64) -> Param {
    let sq_phi = phi_j.sqrt();
    let mut phib = if phi_j > 0.0 { phi_j * 1.01 } else { 0.01 };
    let mut sqb = phib.sqrt();
    let (f_min, f_max, f_tar) = (1.0, 10.0, 5.0f64);
    let (mut n, mut a, mut sq_mu);
    let mut guard = 0;
    loop {
        let phi_t = phib;
        let le = log_eps / phi_t;
        n = (phi_t / PI * (1.0 - 3.0 * le / 2.0 + (1.0 - 2.0 * le).sqrt())).ceil();
        a = PI * n / phi_t;
        sq_mu = sqb * (4.0 - a).abs() / (7.0 - (1.0 + 12.0 * a).sqrt()).abs();
        let fbar = ((sqb - sq_phi) / sq_mu).powf(-pj);
        guard += 1;
        if pj < 1e-14 || (f_min < fbar && fbar < f_max) || guard > 100 {
            break;
        }
        sqb = f_tar.powf(-1.0 / pj) * sq_mu + sq_phi;
        phib = sqb * sqb;
    }
    let mut mu = sq_mu * sq_mu;
    let mut h = (-3.0 * a - 2.0 + 2.0 * (1.0 + 12.0 * a).sqrt()) / (4.0 - a) / n;
    let threshold = log_eps - LOG_EPS_MACHINE;
    if mu > threshold {
        let q = if pj.abs() < 1e-14 { 0.0 } else { f_tar.powf(-1.0 / pj) * mu.sqrt() };
        phib = (q + phi_j.sqrt()).powi(2);
        if phib < threshold {
            let w = (LOG_EPS_MACHINE / (LOG_EPS_MACHINE - log_eps)).sqrt();
            let u = (-phib / LOG_EPS_MACHINE).sqrt();
            mu = threshold;
            n = (w * log_eps / 2.0 / PI / (u * w - 1.0)).ceil();
            h = w / n;
        } else {
            n = f64::INFINITY;
            h = 0.0;
        }
    }
    Param { mu, h, n }
}
