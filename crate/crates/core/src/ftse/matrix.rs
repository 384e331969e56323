use crate::error::{Error, Result};
use crate::fracops::caputo_l1_weights;
use crate::specfun::{gamma_r, mittag_leffler};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianMatrix {
    m: DMatrix<Complex64>,
}

impl HamiltonianMatrix {
    /// Row-major entries; rejects anything further than 1e-12 from Hermitian.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::Invalid(format!("need {} entries for dim {dim}, got {}", dim * dim, entries.len())));
        }
        let m = DMatrix::from_row_slice(dim, dim, &entries);
        let dev = (&m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if !(dev <= 1e-12) {
            return Err(Error::Invalid(format!("matrix is not Hermitian (max |H - H^+| = {dev:e})")));
        }
        Ok(HamiltonianMatrix { m })
    }

    /// Finite-difference -(hbar^2 / 2 m_beta) d^2/dx^2 + V on interior points
    /// of [x0, x1] with Dirichlet ends.
    pub fn discretized<V: Fn(f64) -> f64>(x0: f64, x1: f64, n: usize, mass: f64, hbar_ef: f64, v: V) -> Result<Self> {
        if n < 2 || !(x1 > x0) || !(mass > 0.0) {
            return Err(Error::Invalid("discretized Hamiltonian needs n >= 2, x1 > x0, mass > 0".into()));
        }
        let h = (x1 - x0) / (n + 1) as f64;
        let t = hbar_ef * hbar_ef / (2.0 * mass * h * h);
        let mut e = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            e[i * n + i] = Complex64::new(2.0 * t + v(x0 + (i + 1) as f64 * h), 0.0);
            if i + 1 < n {
                e[i * n + i + 1] = Complex64::new(-t, 0.0);
                e[(i + 1) * n + i] = Complex64::new(-t, 0.0);
            }
        }
        Self::new(n, e)
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }

    /// Eigenvalues (ascending is not guaranteed) and orthonormal eigenvectors as columns.
    pub fn eigen(&self) -> Result<(Vec<f64>, DMatrix<Complex64>)> {
        let e = self
            .m
            .clone()
            .try_symmetric_eigen(1e-15, 10_000)
            .ok_or_else(|| Error::Eigen("Hermitian eigensolver did not converge".into()))?;
        Ok((e.eigenvalues.iter().copied().collect(), e.eigenvectors))
    }

    pub fn spectral_radius(&self) -> Result<f64> {
        Ok(self.eigen()?.0.iter().fold(0.0, |a: f64, l| a.max(l.abs())))
    }
}

fn check_state(h: &HamiltonianMatrix, psi0: &[Complex64]) -> Result<()> {
    if psi0.len() != h.dim() {
        return Err(Error::Invalid(format!("state has {} components, H has dim {}", psi0.len(), h.dim())));
    }
    Ok(())
}

/// psi(t) = U E_beta(-i Lambda t^beta / hbar) U^+ psi0, in one application from t = 0.
pub fn ml_evolution(h: &HamiltonianMatrix, psi0: &[Complex64], t: f64, beta: f64, hbar_ef: f64) -> Result<Vec<Complex64>> {
    check_state(h, psi0)?;
    if !(t >= 0.0) {
        return Err(Error::Invalid(format!("t = {t} must be >= 0")));
    }
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::Invalid(format!("beta = {beta} must lie in (0,1]")));
    }
    let (lam, u) = h.eigen()?;
    let c = u.adjoint() * DVector::from_column_slice(psi0);
    let tb = t.powf(beta);
    let mut d = DVector::zeros(lam.len());
    for (k, l) in lam.iter().enumerate() {
        let z = -I * (l * tb / hbar_ef);
        let e = if beta == 1.0 { z.exp() } else { mittag_leffler(beta, 1.0, z)? };
        d[k] = e * c[k];
    }
    Ok((u * d).iter().copied().collect())
}

/// Implicit L1 scheme; returns the state at every step including t = 0.
/// (i hbar b0 - H) psi_n = i hbar b0 psi_{n-1} - i hbar sum_{j>=1} b_j (psi_{n-j} - psi_{n-j-1}).
pub fn caputo_l1_evolution(
    h: &HamiltonianMatrix,
    psi0: &[Complex64],
    t_final: f64,
    dt: f64,
    beta: f64,
    hbar_ef: f64,
) -> Result<Vec<Vec<Complex64>>> {
    check_state(h, psi0)?;
    if !(dt > 0.0 && t_final >= 0.0) {
        return Err(Error::Invalid(format!("dt = {dt} must be positive")));
    }
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::Invalid(format!("beta = {beta} must lie in (0,1]")));
    }
    let steps = (t_final / dt).round() as usize;
    let b = caputo_l1_weights(beta, steps.max(1), dt);
    let ih = I * hbar_ef;
    let dim = h.dim();
    let a = DMatrix::<Complex64>::identity(dim, dim) * (ih * b[0]) - h.matrix();
    let lu = a.lu();
    if lu.determinant().norm() == 0.0 {
        return Err(Error::Singular("L1 step matrix is singular".into()));
    }
    let mut states: Vec<DVector<Complex64>> = vec![DVector::from_column_slice(psi0)];
    // increments d_k = psi_k - psi_{k-1}
    let mut incs: Vec<DVector<Complex64>> = Vec::with_capacity(steps);
    for n in 1..=steps {
        let mut rhs = &states[n - 1] * (ih * b[0]);
        for j in 1..n {
            rhs -= &incs[n - 1 - j] * (ih * b[j]);
        }
        let next = lu.solve(&rhs).ok_or_else(|| Error::Singular("L1 solve failed".into()))?;
        if next.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite { step: n });
        }
        incs.push(&next - &states[n - 1]);
        states.push(next);
    }
    Ok(states.into_iter().map(|v| v.iter().copied().collect()).collect())
}

/// Exponents k beta of the start-up expansion psi = sum_k c_k t^{k beta} that
/// the plain L1 stencil differentiates inexactly (non-integer, below 2).
fn singular_exponents(beta: f64, max: usize) -> Vec<f64> {
    (1..)
        .map(|k| k as f64 * beta)
        .take_while(|s| *s < 2.0)
        .filter(|s| (s - s.round()).abs() > 1e-9)
        .take(max)
        .collect()
}

/// Starting weights W[n][k] (in units of dt^-beta) making L1 + sum_k W (u_k - u_0)
/// exact on t^sigma for each sigma; one row per step n = 1..=steps.
fn starting_weights(beta: f64, sigmas: &[f64], steps: usize) -> Result<Vec<Vec<f64>>> {
    let m = sigmas.len();
    if m == 0 {
        return Ok(vec![Vec::new(); steps]);
    }
    let b = caputo_l1_weights(beta, steps.max(1), 1.0);
    let v = DMatrix::from_fn(m, m, |r, k| ((k + 1) as f64).powf(sigmas[r]));
    let lu = v.lu();
    let mut out = Vec::with_capacity(steps);
    for n in 1..=steps {
        let rhs = DVector::from_fn(m, |r, _| {
            let s = sigmas[r];
            let exact = gamma_r(s + 1.0) / gamma_r(s + 1.0 - beta) * (n as f64).powf(s - beta);
            let l1: f64 = (0..n).map(|j| b[j] * (((n - j) as f64).powf(s) - ((n - j - 1) as f64).powf(s))).sum();
            exact - l1
        });
        let w = lu.solve(&rhs).ok_or_else(|| Error::Singular("starting-weight system".into()))?;
        out.push(w.iter().copied().collect());
    }
    Ok(out)
}

/// L1 with Lubich-type starting corrections for the t^{k beta} terms of the
/// solution: the first `corrections` exponents k beta < 2 are differentiated
/// exactly, which removes the O(dt^beta) start-up error of the plain scheme.
/// The first m steps are solved as one coupled block.
pub fn caputo_l1_evolution_corrected(
    h: &HamiltonianMatrix,
    psi0: &[Complex64],
    t_final: f64,
    dt: f64,
    beta: f64,
    hbar_ef: f64,
    corrections: usize,
) -> Result<Vec<Vec<Complex64>>> {
    check_state(h, psi0)?;
    if !(dt > 0.0 && t_final >= 0.0) {
        return Err(Error::Invalid(format!("dt = {dt} must be positive")));
    }
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::Invalid(format!("beta = {beta} must lie in (0,1]")));
    }
    let steps = (t_final / dt).round() as usize;
    let mut sig = singular_exponents(beta, corrections);
    sig.truncate(steps);
    let m = sig.len();
    let scale = dt.powf(-beta);
    let w = starting_weights(beta, &sig, steps)?;
    let b = caputo_l1_weights(beta, steps.max(1), dt);
    let ih = I * hbar_ef;
    let dim = h.dim();
    let hm = h.matrix();
    let p0 = DVector::from_column_slice(psi0);
    let mut states: Vec<DVector<Complex64>> = vec![p0.clone()];

    if m > 0 {
        // block system for psi_1..psi_m
        let size = m * dim;
        let mut a = DMatrix::<Complex64>::zeros(size, size);
        let mut rhs = DVector::<Complex64>::zeros(size);
        for n in 1..=m {
            let row = (n - 1) * dim;
            // i hbar sum_j b_j (psi_{n-j} - psi_{n-j-1})
            for j in 0..n {
                let (hi, lo) = (n - j, n - j - 1);
                for d in 0..dim {
                    a[(row + d, (hi - 1) * dim + d)] += ih * b[j];
                    if lo == 0 {
                        rhs[row + d] += ih * b[j] * p0[d];
                    } else {
                        a[(row + d, (lo - 1) * dim + d)] -= ih * b[j];
                    }
                }
            }
            for (k, wk) in w[n - 1].iter().enumerate() {
                for d in 0..dim {
                    a[(row + d, k * dim + d)] += ih * wk * scale;
                    rhs[row + d] += ih * wk * scale * p0[d];
                }
            }
            for r in 0..dim {
                for c in 0..dim {
                    a[(row + r, (n - 1) * dim + c)] -= hm[(r, c)];
                }
            }
        }
        let sol = a.lu().solve(&rhs).ok_or_else(|| Error::Singular("corrected L1 start-up block".into()))?;
        for n in 0..m {
            states.push(sol.rows(n * dim, dim).into_owned());
        }
    }
    let lu = (DMatrix::<Complex64>::identity(dim, dim) * (ih * b[0]) - hm).lu();
    let mut incs: Vec<DVector<Complex64>> = (1..states.len()).map(|k| &states[k] - &states[k - 1]).collect();
    for n in m + 1..=steps {
        let mut r = &states[n - 1] * (ih * b[0]);
        for j in 1..n {
            r -= &incs[n - 1 - j] * (ih * b[j]);
        }
        for (k, wk) in w[n - 1].iter().enumerate() {
            r -= (&states[k + 1] - &p0) * (ih * wk * scale);
        }
        let next = lu.solve(&r).ok_or_else(|| Error::Singular("L1 solve failed".into()))?;
        if next.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite { step: n });
        }
        incs.push(&next - &states[n - 1]);
        states.push(next);
    }
    Ok(states.into_iter().map(|v| v.iter().copied().collect()).collect())
}

/// E_beta(i lambda (T - t)^beta) X0.
pub fn momentum_backward_evolution(x0: Complex64, lambda: f64, t_end: f64, t: f64, beta: f64) -> Result<Complex64> {
    if !(t >= 0.0 && t <= t_end) {
        return Err(Error::Invalid(format!("need 0 <= t <= T, got t = {t}, T = {t_end}")));
    }
    if t == t_end {
        return Ok(x0);
    }
    let z = I * (lambda * (t_end - t).powf(beta));
    let e = if beta == 1.0 { z.exp() } else { mittag_leffler(beta, 1.0, z)? };
    Ok(e * x0)
}
