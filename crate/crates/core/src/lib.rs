//! Solvers for fractional Schrodinger-type equations.
//!
//! Modules follow the physics: `specfun` (special functions and the free
//! fractional kernel), `fracops` (grids and fractional operators), `beams`
//! (beam propagation in a time-dependent metric and the slab solver),
//! `anderson` (disordered Levy lattice and mode oscillators), `sne`
//! (Schrodinger-Newton with fractional gravity), `ftse` (time-fractional
//! evolution, Green's functions and the Koopman picture).

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

pub mod anderson;
pub mod beams;
mod error;
pub mod fit;
pub mod fracops;
pub mod ftse;
pub mod rng;
pub mod sne;
pub mod specfun;

pub use error::{Error, Result};
pub use fracops::{FracParams, Grid1D, WaveField};
pub use num_complex::Complex64;
