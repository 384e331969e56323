use crate::error::{Error, Result};

/// Shape of the metric determinant g(t).
#[derive(Debug, Clone, PartialEq)]
pub enum MetricKind {
    Constant(f64),
    /// g(t) = t^p
    Power(f64),
    /// (t, g) samples with strictly increasing t starting at 0, linear in between
    Tabulated(Vec<(f64, f64)>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricProfile {
    pub kind: MetricKind,
    pub hbar_ef: f64,
}

impl MetricProfile {
    pub fn constant(c: f64, hbar_ef: f64) -> Self {
        MetricProfile { kind: MetricKind::Constant(c), hbar_ef }
    }

    /// Unit metric, g = 1.
    pub fn flat(hbar_ef: f64) -> Self {
        Self::constant(1.0, hbar_ef)
    }

    /// Static checks: positivity, integrability at t = 0, tabulation order.
    pub fn validate(&self) -> Result<()> {
        if !(self.hbar_ef > 0.0 && self.hbar_ef.is_finite()) {
            return Err(Error::Domain(format!("hbar_ef = {} must be positive", self.hbar_ef)));
        }
        match &self.kind {
            MetricKind::Constant(c) => {
                if !(*c > 0.0 && c.is_finite()) {
                    return Err(Error::Domain(format!("metric constant {c} must be positive")));
                }
            }
            MetricKind::Power(p) => {
                if !p.is_finite() {
                    return Err(Error::Domain(format!("metric exponent {p}")));
                }
                if *p >= 1.0 {
                    return Err(Error::Domain(format!(
                        "g = t^{p}: integral of 1/g diverges at t = 0 (needs exponent < 1)"
                    )));
                }
            }
            MetricKind::Tabulated(s) => {
                if s.len() < 2 {
                    return Err(Error::Domain("tabulated metric needs at least two samples".into()));
                }
                if s[0].0 != 0.0 {
                    return Err(Error::Domain("tabulated metric must start at t = 0".into()));
                }
                for w in s.windows(2) {
                    if !(w[1].0 > w[0].0) {
                        return Err(Error::Domain("tabulated times must increase".into()));
                    }
                }
                if let Some(&(t, g)) = s.iter().find(|(_, g)| !(*g > 0.0 && g.is_finite())) {
                    return Err(Error::Domain(format!("non-positive metric g({t}) = {g}")));
                }
            }
        }
        Ok(())
    }

    /// g(t). Power profiles vanish at t = 0 for positive exponent.
    pub fn g(&self, t: f64) -> Result<f64> {
        let v = match &self.kind {
            MetricKind::Constant(c) => *c,
            MetricKind::Power(p) => t.powf(*p),
            MetricKind::Tabulated(s) => interp(s, t)?,
        };
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain(format!("non-positive metric g({t}) = {v}")));
        }
        Ok(v)
    }

    /// (1/hbar) * int_{t0}^{t1} dt / g(t).
    pub fn g1_between(&self, t0: f64, t1: f64) -> Result<f64> {
        Ok((self.raw_integral(t1)? - self.raw_integral(t0)?) / self.hbar_ef)
    }

    fn raw_integral(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Error::Domain(format!("metric time t = {t} must be >= 0")));
        }
        self.validate()?;
        match &self.kind {
            MetricKind::Constant(c) => Ok(t / c),
            MetricKind::Power(p) => Ok(t.powf(1.0 - p) / (1.0 - p)),
            MetricKind::Tabulated(s) => {
                let last = s[s.len() - 1].0;
                if t > last * (1.0 + 1e-12) {
                    return Err(Error::Domain(format!("t = {t} beyond tabulated range {last}")));
                }
                let mut acc = 0.0;
                for w in s.windows(2) {
                    let (a, b) = (w[0].0, w[1].0.min(t));
                    if b <= a {
                        break;
                    }
                    let f = |u: f64| 1.0 / interp(s, u).unwrap_or(f64::NAN);
                    acc += adaptive_simpson(&f, a, b, 1e-13 * (b - a), 40);
                }
                Ok(acc)
            }
        }
    }
}

/// g1(t) = (1/hbar) * int_0^t dt' / g(t').
pub fn metric_g1(profile: &MetricProfile, t: f64) -> Result<f64> {
    profile.g1_between(0.0, t)
}

fn interp(s: &[(f64, f64)], t: f64) -> Result<f64> {
    let last = s[s.len() - 1].0;
    if !(t >= 0.0) || t > last * (1.0 + 1e-12) {
        return Err(Error::Domain(format!("t = {t} outside tabulated range [0, {last}]")));
    }
    let i = s.partition_point(|p| p.0 <= t).clamp(1, s.len() - 1);
    let (t0, g0) = s[i - 1];
    let (t1, g1) = s[i];
    Ok(g0 + (g1 - g0) * (t - t0) / (t1 - t0))
}

fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}
