//! Floating-point checks: mollified shifting deltas, scattering and bound
//! states of point interactions, and finite-difference spectra.

mod grid;
mod mollifier;
mod quadrature;
mod scattering;
mod weak;

pub use grid::{grid_eigenvalues, GridHamiltonian};
pub use mollifier::{mollifier, normalization, regularized_delta, MollifierFamily};
pub use quadrature::integrate;
pub use scattering::{bound_states, scattering, ScatteringData, KAPPA_MAX};
pub use weak::{errors_decrease, weak_limit_check, WeakLimitRow};
