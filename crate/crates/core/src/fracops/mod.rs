//! Grids, fields and discrete fractional operators.

mod caputo;
mod extension;
mod grid;
mod params;
mod riesz;

pub use caputo::{caputo_l1, caputo_l1_weights, frac_integral};
pub use extension::{
    extension_constant, extension_laplacian, extension_solve, neumann_limit, poisson_kernel_periodic,
};
pub use grid::{Grid1D, WaveField};
pub use params::FracParams;
pub use riesz::{
    apply_riesz, gl_riesz_oracle, gl_riesz_oracle_truncated, hilbert_difference_oracle, riesz_multiplier,
};
