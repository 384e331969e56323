//! Time-fractional Schrodinger dynamics, i hbar d^beta psi / dt^beta = H psi
//! (Caputo derivative), on finite Hermitian matrices; the fractional free
//! Green's function; the oscillator Koopman operator; and classical motion
//! with the fractional-action friction term.

mod action;
mod green;
mod koopman;
mod matrix;

pub use action::{fractional_action_trajectory, Trajectory};
pub use green::{effective_mass, frac_green, green_normalization, FracGreenQuery, Normalization};
pub use koopman::{koopman_apply, koopman_apply_bruteforce, koopman_oscillator_eigen, Poly, DEFAULT_DEGREE_BUDGET};
pub use matrix::{caputo_l1_evolution, caputo_l1_evolution_corrected, ml_evolution, momentum_backward_evolution, HamiltonianMatrix};
