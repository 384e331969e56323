use crate::specfun::gamma_r;

/// L1 weights b_j = ((j+1)^(1-beta) - j^(1-beta)) dt^-beta / Gamma(2-beta), j = 0..n_steps.
pub fn caputo_l1_weights(beta: f64, n_steps: usize, dt: f64) -> Vec<f64> {
    let c = dt.powf(-beta) / gamma_r(2.0 - beta);
    let e = 1.0 - beta;
    (0..n_steps)
        .map(|j| {
            if j == 0 {
                return c;
            }
            let j = j as f64;
            ((j + 1.0).powf(e) - j.powf(e)) * c
        })
        .collect()
}

/// L1 Caputo derivative of uniformly sampled f (f[0] at t = 0); entry 0 is 0.
pub fn caputo_l1(samples: &[f64], beta: f64, dt: f64) -> Vec<f64> {
    let n = samples.len();
    let b = caputo_l1_weights(beta, n.max(1), dt);
    let mut out = vec![0.0; n];
    for m in 1..n {
        let mut acc = 0.0;
        for j in 0..m {
            acc += b[j] * (samples[m - j] - samples[m - j - 1]);
        }
        out[m] = acc;
    }
    out
}

/// Riemann-Liouville integral of order beta by product integration of the
/// piecewise-linear interpolant; exact on linear data.
pub fn frac_integral(samples: &[f64], beta: f64, dt: f64) -> Vec<f64> {
    let n = samples.len();
    let c = dt.powf(beta) / gamma_r(beta + 2.0);
    let mut out = vec![0.0; n];
    let p = |v: f64| v.powf(beta + 1.0);
    for m in 1..n {
        let mf = m as f64;
        let mut acc = (p(mf - 1.0) - (mf - 1.0 - beta) * mf.powf(beta)) * samples[0];
        for (j, &s) in samples.iter().enumerate().take(m).skip(1) {
            let d = (m - j) as f64;
            acc += (p(d + 1.0) - 2.0 * p(d) + p(d - 1.0)) * s;
        }
        acc += samples[m];
        out[m] = c * acc;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_one_is_backward_difference() {
        let w = caputo_l1_weights(1.0, 5, 0.1);
        assert!((w[0] - 10.0).abs() < 1e-12);
        assert!(w[1..].iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn exact_on_linear() {
        let dt = 0.01;
        let f: Vec<f64> = (0..101).map(|i| i as f64 * dt).collect();
        let d = caputo_l1(&f, 0.4, dt);
        let t = 1.0f64;
        let exact = t.powf(0.6) / gamma_r(1.6);
        assert!((d[100] - exact).abs() < 1e-12);
    }

    #[test]
    fn integral_of_constant() {
        let f = vec![1.0; 11];
        let i = frac_integral(&f, 1.0, 0.1);
        for (m, v) in i.iter().enumerate() {
            assert!((v - m as f64 * 0.1).abs() < 1e-13);
        }
    }
}
