//! Koopman operator of H = hbar omega a^+ a on polynomials f(a*, a):
//!
//!   K = e^{-|a|^2} [ H(a*, d/da*) - H(d/da, a) ] e^{|a|^2}.
//!
//! Each term keeps the coherent-state variable to the left of the
//! derivative, so K = hbar omega [ a* D* - a D ] with the conjugated
//! derivatives D* = d/da* + a and D = d/da + a*.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::collections::BTreeMap;

pub const DEFAULT_DEGREE_BUDGET: u32 = 64;

/// Polynomial sum c_{m,n} a*^m a^n, keyed by (m, n).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly {
    pub terms: BTreeMap<(u32, u32), Complex64>,
}

impl Poly {
    pub fn monomial(m: u32, n: u32, c: Complex64) -> Self {
        let mut p = Poly::default();
        p.add(m, n, c);
        p
    }

    fn add(&mut self, m: u32, n: u32, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        let e = self.terms.entry((m, n)).or_insert(Complex64::new(0.0, 0.0));
        *e += c;
        if *e == Complex64::new(0.0, 0.0) {
            self.terms.remove(&(m, n));
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(m, n)| m + n).max().unwrap_or(0)
    }

    fn map<F: Fn(u32, u32, Complex64) -> Option<(u32, u32, Complex64)>>(&self, f: F) -> Poly {
        let mut out = Poly::default();
        for (&(m, n), &c) in &self.terms {
            if let Some((a, b, v)) = f(m, n, c) {
                out.add(a, b, v);
            }
        }
        out
    }

    fn mul_astar(&self) -> Poly {
        self.map(|m, n, c| Some((m + 1, n, c)))
    }

    fn mul_a(&self) -> Poly {
        self.map(|m, n, c| Some((m, n + 1, c)))
    }

    fn d_astar(&self) -> Poly {
        self.map(|m, n, c| (m > 0).then(|| (m - 1, n, c * m as f64)))
    }

    fn d_a(&self) -> Poly {
        self.map(|m, n, c| (n > 0).then(|| (m, n - 1, c * n as f64)))
    }

    fn plus(&self, o: &Poly, s: f64) -> Poly {
        let mut out = self.clone();
        for (&(m, n), &c) in &o.terms {
            out.add(m, n, c * s);
        }
        out
    }

    fn times(&self, o: &Poly) -> Poly {
        let mut out = Poly::default();
        for (&(m1, n1), &c1) in &self.terms {
            for (&(m2, n2), &c2) in &o.terms {
                out.add(m1 + m2, n1 + n2, c1 * c2);
            }
        }
        out
    }

    fn scale(&self, s: f64) -> Poly {
        self.map(|m, n, c| Some((m, n, c * s)))
    }

    fn truncate(&self, max_degree: u32) -> Poly {
        self.map(|m, n, c| (m + n <= max_degree).then_some((m, n, c)))
    }

    pub fn max_abs_diff(&self, o: &Poly) -> f64 {
        self.plus(o, -1.0).terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

fn check_budget(needed: u32, budget: u32) -> Result<()> {
    if needed > budget {
        return Err(Error::Budget { needed: needed as u64, budget: budget as u64 });
    }
    Ok(())
}

/// K f via the conjugated derivatives.
pub fn koopman_apply(f: &Poly, omega: f64, hbar_ef: f64, budget: u32) -> Result<Poly> {
    check_budget(f.degree() + 2, budget)?;
    let dstar = f.d_astar().plus(&f.mul_a(), 1.0);
    let d = f.d_a().plus(&f.mul_astar(), 1.0);
    Ok(dstar.mul_astar().plus(&d.mul_a(), -1.0).scale(hbar_ef * omega))
}

fn exp_series(order: u32, sign: f64) -> Poly {
    let mut p = Poly::default();
    let mut c = 1.0;
    for j in 0..=order {
        p.add(j, j, Complex64::new(c, 0.0));
        c *= sign / (j + 1) as f64;
    }
    p
}

/// K f with e^{+-|a|^2} replaced by series truncated at order `order`, derivatives
/// taken on the plain product; terms above degree deg f + 2 order + 1 are dropped
/// (they carry the truncation error).
pub fn koopman_apply_bruteforce(f: &Poly, omega: f64, hbar_ef: f64, order: u32, budget: u32) -> Result<Poly> {
    check_budget(f.degree() + 4 * order + 2, budget)?;
    let g = exp_series(order, 1.0).times(f);
    let u = g.d_astar().mul_astar().plus(&g.d_a().mul_a(), -1.0);
    let k = exp_series(order, -1.0).times(&u).truncate(f.degree() + 2 * order + 1);
    Ok(k.scale(hbar_ef * omega))
}

/// Eigenvalue of K on a*^m a^n; errors if the image is not proportional.
pub fn koopman_oscillator_eigen(m: u32, n: u32, omega: f64, hbar_ef: f64) -> Result<f64> {
    let f = Poly::monomial(m, n, Complex64::new(1.0, 0.0));
    let k = koopman_apply(&f, omega, hbar_ef, DEFAULT_DEGREE_BUDGET)?;
    match k.terms.len() {
        0 => Ok(0.0),
        1 if k.terms.contains_key(&(m, n)) => {
            let c = k.terms[&(m, n)];
            if c.im != 0.0 {
                return Err(Error::Invalid(format!("complex Koopman eigenvalue {c}")));
            }
            Ok(c.re)
        }
        _ => Err(Error::Invalid(format!("a*^{m} a^{n} is not a Koopman eigenfunction"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_modulus() {
        assert_eq!(koopman_oscillator_eigen(3, 3, 1.7, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn budget_enforced() {
        assert!(matches!(koopman_oscillator_eigen(40, 30, 1.0, 1.0), Err(Error::Budget { .. })));
    }
}
