use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub t: Vec<f64>,
    pub q: Vec<f64>,
    pub v: Vec<f64>,
}

/// RK4 for q'' = -V'(q) + ((1 - nu)/t) q' on [t0, t1]; `force_grad` is V'(q).
pub fn fractional_action_trajectory<F: Fn(f64) -> f64>(
    q0: f64,
    v0: f64,
    force_grad: F,
    nu: f64,
    t_span: (f64, f64),
    dt: f64,
) -> Result<Trajectory> {
    let (t0, t1) = t_span;
    if !(t0 > 0.0) {
        return Err(Error::Invalid(format!("t_start = {t0} must be > 0 (friction term is singular at 0)")));
    }
    if !(dt > 0.0 && t1 > t0) {
        return Err(Error::Invalid(format!("need dt > 0 and t_end > t_start, got dt = {dt}, span = {t_span:?}")));
    }
    let steps = ((t1 - t0) / dt).round().max(1.0) as usize;
    let h = (t1 - t0) / steps as f64;
    let c = 1.0 - nu;
    let rhs = |t: f64, q: f64, v: f64| (v, -force_grad(q) + c / t * v);
    let mut out = Trajectory { t: vec![t0], q: vec![q0], v: vec![v0] };
    let (mut q, mut v) = (q0, v0);
    for s in 0..steps {
        let t = t0 + s as f64 * h;
        let (k1q, k1v) = rhs(t, q, v);
        let (k2q, k2v) = rhs(t + 0.5 * h, q + 0.5 * h * k1q, v + 0.5 * h * k1v);
        let (k3q, k3v) = rhs(t + 0.5 * h, q + 0.5 * h * k2q, v + 0.5 * h * k2v);
        let (k4q, k4v) = rhs(t + h, q + h * k3q, v + h * k3v);
        q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if !(q.is_finite() && v.is_finite()) {
            return Err(Error::NonFinite { step: s + 1 });
        }
        out.t.push(t0 + (s + 1) as f64 * h);
        out.q.push(q);
        out.v.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_origin() {
        assert!(fractional_action_trajectory(0.0, 1.0, |q| q, 0.5, (0.0, 1.0), 0.01).is_err());
    }
}
