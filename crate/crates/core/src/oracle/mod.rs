//! Independent numerical checks of the closed forms: a finite-difference
//! bound-state solver, the intertwiner on grid states, and a Numerov
//! scattering integrator.

mod grid;
mod intertwine;
mod scatter;
mod spectrum;
mod tridiag;

pub use grid::{trapezoid_dot, trapezoid_norm2, Grid};
pub use intertwine::{apply_intertwiner, derivative, IntertwinedState, DEGENERATE_NORM};
pub use scatter::{reflection_coefficient, Scattering, STEP_TOL};
pub use spectrum::{
    bound_spectrum, discrete_hamiltonian, hamiltonian_residual, sample, NumericSpectrum,
    SpectrumOptions,
};
pub use tridiag::SymTridiag;
