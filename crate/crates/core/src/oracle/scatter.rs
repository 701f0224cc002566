//! Stationary scattering by Numerov integration.
//!
//! The transmitted wave e^{iκx} is imposed at the right edge and integrated
//! leftwards; the left-edge solution splits into incident and reflected plane
//! waves. κ is the wavenumber of the discrete Numerov free solution, so
//! V ≡ 0 reflects exactly nothing.

use num_complex::Complex64;

use super::grid::Grid;
use crate::error::{Error, Result};

/// Largest accepted change of |R|² under step halving.
pub const STEP_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scattering {
    pub energy: f64,
    /// |R|²
    pub reflection: f64,
    /// |T|²
    pub transmission: f64,
}

fn numerov_pass<F: Fn(f64) -> f64>(v: &F, energy: f64, grid: &Grid) -> Result<Scattering> {
    let n = grid.len();
    let h = grid.h();
    let h2 = h * h / 12.0;
    let k2 = energy;
    let cos_kh = (1.0 - 5.0 * h2 * k2) / (1.0 + h2 * k2);
    if cos_kh.abs() >= 1.0 {
        return Err(Error::StepSize(format!("step {h} too coarse for E = {energy}")));
    }
    let kappa = cos_kh.acos() / h;
    let f: Vec<f64> = grid.points().map(|x| v(x) - energy).collect();
    if f.iter().any(|y| !y.is_finite()) {
        return Err(Error::Domain("potential not finite on the scattering grid".into()));
    }
    let w = |i: usize| 1.0 - h2 * f[i];
    let plane = |x: f64| Complex64::from_polar(1.0, kappa * x);

    let mut next = plane(grid.x(n - 1));
    let mut cur = plane(grid.x(n - 2));
    for i in (1..n - 1).rev() {
        let prev = (cur * (2.0 * (1.0 + 5.0 * h2 * f[i])) - next * w(i + 1)) / w(i - 1);
        next = cur;
        cur = prev;
    }
    let (psi0, psi1) = (cur, next);
    let (x0, x1) = (grid.x(0), grid.x(1));
    let det = Complex64::new(0.0, -2.0 * (kappa * (x1 - x0)).sin());
    let a = (psi0 * plane(-x1) - psi1 * plane(-x0)) / det;
    let b = (psi1 * plane(x0) - psi0 * plane(x1)) / det;
    let a2 = a.norm_sqr();
    Ok(Scattering {
        energy,
        reflection: b.norm_sqr() / a2,
        transmission: 1.0 / a2,
    })
}

/// |R|² and |T|² at energy E > 0 for a potential negligible outside `grid`.
pub fn reflection_coefficient<F: Fn(f64) -> f64>(v: F, energy: f64, grid: &Grid) -> Result<Scattering> {
    if !(energy > 0.0) {
        return Err(Error::Domain(format!("scattering energy must be positive, got {energy}")));
    }
    let coarse = numerov_pass(&v, energy, grid)?;
    let fine = numerov_pass(&v, energy, &grid.refined())?;
    let change = (fine.reflection - coarse.reflection).abs();
    if change > STEP_TOL {
        return Err(Error::StepSize(format!(
            "|R|^2 moved by {change:e} when the step was halved"
        )));
    }
    Ok(fine)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_particle_is_transparent() {
        let grid = Grid::symmetric(30.0, 601).unwrap();
        let s = reflection_coefficient(|_| 0.0, 0.7, &grid).unwrap();
        assert!(s.reflection < 1e-24);
        assert!((s.transmission - 1.0).abs() < 1e-12);
    }

    #[test]
    fn square_barrier() {
        // rectangular barrier of height 1 on [-1, 1], E = 2:
        // T = 1 / (1 + V² sin²(2qa) / (4E(E - V))) with q = √(E - V), a = 1
        let v = |x: f64| if x.abs() <= 1.0 { 1.0 } else { 0.0 };
        let (e, height) = (2.0f64, 1.0f64);
        let q = (e - height).sqrt();
        let t = 1.0 / (1.0 + height * height * (2.0 * q).sin().powi(2) / (4.0 * e * (e - height)));
        // 4000 intervals on [-10, 10] place ±1 exactly on nodes
        let grid = Grid::symmetric(10.0, 4001).unwrap();
        let s = numerov_pass(&v, e, &grid.refined().refined()).unwrap();
        assert!((s.transmission - t).abs() < 1e-3, "{} vs {t}", s.transmission);
        assert!((s.reflection + s.transmission - 1.0).abs() < 1e-10);
    }

    #[test]
    fn rejects_nonpositive_energy() {
        let grid = Grid::symmetric(10.0, 101).unwrap();
        assert!(reflection_coefficient(|_| 0.0, 0.0, &grid).is_err());
    }
}
