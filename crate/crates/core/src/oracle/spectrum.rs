//! Bound states of H = -d²/dx² + V on a Dirichlet box.
//!
//! H is discretized with the 3-point Laplacian on three nested grids
//! (h, h/2, h/4). Two Richardson steps cancel the O(h²) error; their
//! disagreement is the a-posteriori error estimate that gates the result.

use super::grid::{trapezoid_norm2, Grid};
use super::tridiag::SymTridiag;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    /// Accepted eigenvalue error, relative to max(1, |E|).
    pub tol: f64,
    /// Levels with |E| below this are flagged marginal.
    pub marginal_threshold: f64,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self {
            tol: 1e-6,
            marginal_threshold: 0.0,
        }
    }
}

impl SpectrumOptions {
    /// Marginal threshold 1e-4·α² for wells of inverse width α.
    pub fn for_alpha(alpha: f64) -> Self {
        Self {
            marginal_threshold: 1e-4 * alpha * alpha,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumericSpectrum {
    pub grid: Grid,
    /// Extrapolated negative eigenvalues, ascending.
    pub energies: Vec<f64>,
    /// Eigenvectors on `grid` (zero at both walls), unit trapezoid norm,
    /// sign fixed so the largest component is positive.
    pub states: Vec<Vec<f64>>,
    pub marginal: Vec<bool>,
    pub error_estimates: Vec<f64>,
}

impl NumericSpectrum {
    /// Energies of the levels not flagged marginal.
    pub fn firm_energies(&self) -> Vec<f64> {
        self.energies
            .iter()
            .zip(&self.marginal)
            .filter(|(_, m)| !**m)
            .map(|(e, _)| *e)
            .collect()
    }

    pub fn firm_count(&self) -> usize {
        self.marginal.iter().filter(|m| !**m).count()
    }
}

/// Samples V on every grid point, rejecting non-finite values.
pub fn sample<F: Fn(f64) -> f64>(v: &F, grid: &Grid) -> Result<Vec<f64>> {
    grid.points()
        .map(|x| {
            let y = v(x);
            if y.is_finite() {
                Ok(y)
            } else {
                Err(Error::Domain(format!("potential not finite at x = {x}")))
            }
        })
        .collect()
}

/// Interior (Dirichlet) Hamiltonian matrix from samples on all grid points.
pub fn discrete_hamiltonian(samples: &[f64], h: f64) -> SymTridiag {
    let n = samples.len();
    let k = 1.0 / (h * h);
    let diag = samples[1..n - 1].iter().map(|v| 2.0 * k + v).collect();
    SymTridiag::new(diag, vec![-k; n - 3])
}

/// (H - E)ψ on the interior points, with ψ given on all grid points.
pub fn hamiltonian_residual(samples: &[f64], h: f64, energy: f64, psi: &[f64]) -> Vec<f64> {
    let k = 1.0 / (h * h);
    (1..psi.len() - 1)
        .map(|i| -k * (psi[i - 1] - 2.0 * psi[i] + psi[i + 1]) + (samples[i] - energy) * psi[i])
        .collect()
}

fn negative_levels<F: Fn(f64) -> f64>(v: &F, grid: &Grid) -> Result<(Vec<f64>, SymTridiag)> {
    let samples = sample(v, grid)?;
    let t = discrete_hamiltonian(&samples, grid.h());
    Ok((t.eigenvalues_below(0.0), t))
}

pub fn bound_spectrum<F: Fn(f64) -> f64>(
    v: F,
    grid: &Grid,
    opts: &SpectrumOptions,
) -> Result<NumericSpectrum> {
    let (coarse, t) = negative_levels(&v, grid)?;
    let (mid, _) = negative_levels(&v, &grid.refined())?;
    let (fine, _) = negative_levels(&v, &grid.refined().refined())?;
    // coarse grids bind more strongly, so the finest grid sets the count
    let m = fine.len().min(mid.len()).min(coarse.len());

    let mut energies = Vec::with_capacity(m);
    let mut errors = Vec::with_capacity(m);
    for k in 0..m {
        let r1 = (4.0 * mid[k] - coarse[k]) / 3.0;
        let r2 = (4.0 * fine[k] - mid[k]) / 3.0;
        let err = (r2 - r1).abs();
        if err > opts.tol * r2.abs().max(1.0) {
            return Err(Error::Convergence(format!(
                "level {k}: extrapolations {r1} and {r2} differ by {err:e}"
            )));
        }
        energies.push(r2);
        errors.push(err);
    }
    // a level pushed above zero by extrapolation is not bound
    while energies.last().is_some_and(|e| *e >= 0.0) {
        energies.pop();
        errors.pop();
    }

    let h = grid.h();
    let states = coarse[..energies.len()]
        .iter()
        .map(|&ev| {
            let inner = t.eigenvector(ev);
            let mut psi = Vec::with_capacity(inner.len() + 2);
            psi.push(0.0);
            psi.extend(inner);
            psi.push(0.0);
            let norm = trapezoid_norm2(&psi, h).sqrt();
            let peak = psi.iter().copied().fold(0.0f64, |a, b| if b.abs() > a.abs() { b } else { a });
            let s = peak.signum() / norm;
            psi.iter_mut().for_each(|p| *p *= s);
            psi
        })
        .collect();

    let marginal = energies.iter().map(|e| e.abs() < opts.marginal_threshold).collect();
    Ok(NumericSpectrum {
        grid: *grid,
        energies,
        states,
        marginal,
        error_estimates: errors,
    })
}
