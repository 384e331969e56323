//! Special functions: Gamma, Mittag-Leffler, Airy and the fractional free kernel.

mod airy;
mod gamma;
mod kernel;
mod mittag_leffler;
pub mod quad;

pub use airy::airy_ai;
pub(crate) use airy::airy_ai_ext;
pub use gamma::{cgamma, gamma, ln_gamma, rgamma};
pub(crate) use gamma::{cospi, gamma_r};
pub use kernel::{frac_free_kernel, frac_free_kernel_with, BandWindow, KernelOptions, KernelQuery};
pub use mittag_leffler::{mittag_leffler, mittag_leffler1, NU_MAX, NU_MIN, Z_MAX};
