//! Supersymmetric partners of the modified Pöschl-Teller well
//! V(x) = -gα/(2cosh²αx) and of its α → ∞ limit, the δ-well -gδ(x).
//!
//! * [`specfun`]: Gamma and ₂F₁ on the real axis.
//! * [`susy`]: parameters, spectra, superpotentials, partner families,
//!   δ-limits and the second-order construction, all in closed form.
//! * [`oracle`]: grid eigensolver, intertwiner and scattering integrator used
//!   to check the closed forms independently.
//! * [`checks`]: the measurements the invariant suites threshold.

pub mod checks;
pub mod error;
pub mod oracle;
pub mod quad;
pub mod specfun;
pub mod susy;

pub use error::{Error, Result};
