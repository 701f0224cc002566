use super::grid::{trapezoid_norm2, Grid};
use crate::error::{Error, Result};

/// Image norms below this count as annihilation.
pub const DEGENERATE_NORM: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct IntertwinedState {
    /// (d/dx + β)ψ, renormalized to unit trapezoid norm.
    pub values: Vec<f64>,
    /// Trapezoid norm before renormalization.
    pub raw_norm: f64,
}

/// First derivative on a uniform grid: 5-point central stencil in the
/// interior, second-order stencils on the two outermost points per side.
pub fn derivative(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    assert!(n >= 5, "derivative needs at least 5 samples");
    let f = values;
    (0..n)
        .map(|i| match i {
            0 => (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h),
            i if i == n - 1 => (3.0 * f[i] - 4.0 * f[i - 1] + f[i - 2]) / (2.0 * h),
            i if i == 1 || i == n - 2 => (f[i + 1] - f[i - 1]) / (2.0 * h),
            i => (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h),
        })
        .collect()
}

/// Applies A = d/dx + β to a grid state. Fails with `Degenerate` if the raw
/// image norm is below `min_norm`.
pub fn apply_intertwiner<B>(beta: B, state: &[f64], grid: &Grid, min_norm: f64) -> Result<IntertwinedState>
where
    B: Fn(f64) -> Result<f64>,
{
    if state.len() != grid.len() {
        return Err(Error::Domain(format!(
            "state has {} samples, grid has {}",
            state.len(),
            grid.len()
        )));
    }
    let h = grid.h();
    let d = derivative(state, h);
    let mut values = grid
        .points()
        .zip(state.iter().zip(&d))
        .map(|(x, (psi, dpsi))| Ok(dpsi + beta(x)? * psi))
        .collect::<Result<Vec<f64>>>()?;
    let raw_norm = trapezoid_norm2(&values, h).sqrt();
    if !(raw_norm >= min_norm) {
        return Err(Error::Degenerate { norm: raw_norm });
    }
    values.iter_mut().for_each(|v| *v /= raw_norm);
    Ok(IntertwinedState { values, raw_norm })
}
