//! Measurements behind the invariant suites. Each function returns the raw
//! number; thresholds belong to the caller.

use crate::error::{Error, Result};
use crate::oracle::{bound_spectrum, trapezoid_dot, Grid, NumericSpectrum, SpectrumOptions};
use crate::quad::integrate;
use crate::susy::{
    analytic_spectrum, beta, m_function, missing_state, partner_from_beta, partner_potential,
    pt_potential, PTParams, SusyBranchConfig,
};

/// 5-point central difference of `f` at `x`.
pub fn central_derivative<F>(f: F, x: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    Ok((f(x - 2.0 * h)? - 8.0 * f(x - h)? + 8.0 * f(x + h)? - f(x + 2.0 * h)?) / (12.0 * h))
}

/// max |β² - β' - (V - ε)| over `xs`, β' by 5-point differences with step h.
pub fn riccati_residual(p: &PTParams, cfg: SusyBranchConfig, xs: &[f64], h: f64) -> Result<f64> {
    let eps = cfg.energy(p);
    xs.iter().try_fold(0.0f64, |acc, &x| {
        let b = beta(p, cfg, x)?;
        let db = central_derivative(|t| beta(p, cfg, t), x, h)?;
        Ok(acc.max((b * b - db - (pt_potential(p, x) - eps)).abs()))
    })
}

/// max |Ṽ - (V + 2β')| with β' analytic.
pub fn consistency_residual(p: &PTParams, cfg: SusyBranchConfig, xs: &[f64]) -> Result<f64> {
    xs.iter().try_fold(0.0f64, |acc, &x| {
        let d = partner_potential(p, cfg, x)? - partner_from_beta(p, cfg, x)?;
        Ok(acc.max(d.abs()))
    })
}

/// Largest deviation of the undeformed partners from PT(λ+1) and PT(λ-1).
pub fn shape_invariance_residual(p: &PTParams, xs: &[f64]) -> Result<(f64, f64)> {
    let a = p.alpha();
    let (l, lm1) = (p.lambda(), p.lambda_minus_one());
    let mut worst = (0.0f64, 0.0f64);
    for &x in xs {
        let s2 = (a * x).cosh().powi(-2);
        let up = -a * a * l * (l + 1.0) * s2;
        let down = -a * a * lm1 * (lm1 - 1.0) * s2;
        worst.0 = worst.0.max((partner_potential(p, SusyBranchConfig::plus(0.0), x)? - up).abs());
        worst.1 = worst.1.max((partner_potential(p, SusyBranchConfig::minus(0.0), x)? - down).abs());
    }
    Ok(worst)
}

/// Minimum of 1 - ζM(x) over `xs`.
pub fn plus_denominator_min(p: &PTParams, zeta: f64, xs: &[f64]) -> Result<f64> {
    xs.iter()
        .try_fold(f64::INFINITY, |acc, &x| Ok(acc.min(1.0 - zeta * m_function(p, x)?)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MissingStateReport {
    /// |∫φ² - 1| by adaptive quadrature.
    pub norm_error: f64,
    /// max |-φ' + βφ| over the sample points.
    pub annihilation_residual: f64,
    /// |⟨φ, ψ₀⟩| against the numeric ground state of the partner.
    pub overlap: f64,
}

/// Grid for the partner wells of PT(α, λ): wide enough for the shallowest
/// level of the original well and for the new level at ε⁺.
pub fn partner_grid(p: &PTParams, h_max: f64) -> Result<Grid> {
    let shallowest = analytic_spectrum(p).energies.last().copied();
    Grid::for_well(p.alpha(), shallowest, h_max)
}

/// Numeric spectrum of Ṽ for a nonsingular configuration.
pub fn partner_spectrum(p: &PTParams, cfg: SusyBranchConfig, grid: &Grid) -> Result<NumericSpectrum> {
    partner_spectrum_with(p, cfg, grid, &SpectrumOptions::for_alpha(p.alpha()))
}

pub fn partner_spectrum_with(
    p: &PTParams,
    cfg: SusyBranchConfig,
    grid: &Grid,
    opts: &SpectrumOptions,
) -> Result<NumericSpectrum> {
    // the spectrum oracle wants a plain evaluator; record the first failure
    let failure = std::cell::Cell::new(None);
    let v = |x: f64| match partner_potential(p, cfg, x) {
        Ok(v) => v,
        Err(e) => {
            failure.set(Some(format!("{e}")));
            f64::NAN
        }
    };
    let spec = bound_spectrum(v, grid, opts);
    match failure.take() {
        Some(msg) => Err(Error::Domain(format!("partner not evaluable on the grid: {msg}"))),
        None => spec,
    }
}

pub fn missing_state_report(p: &PTParams, zeta: f64, h_max: f64) -> Result<MissingStateReport> {
    let a = p.alpha();
    let reach = 60.0 / a;
    let phi2 = |x: f64| missing_state(p, zeta, x).map(|v| v * v).unwrap_or(f64::NAN);
    let norm = integrate(phi2, -reach, reach, 1e-13, 1e-13)?;

    let cfg = SusyBranchConfig::plus(zeta);
    let h = 1e-3 / a;
    let mut annihilation = 0.0f64;
    for i in -80..=80 {
        let x = i as f64 * 0.1 / a;
        let dphi = central_derivative(|t| missing_state(p, zeta, t), x, h)?;
        let r = -dphi + beta(p, cfg, x)? * missing_state(p, zeta, x)?;
        annihilation = annihilation.max(r.abs());
    }

    let grid = partner_grid(p, h_max)?;
    let spec = partner_spectrum(p, cfg, &grid)?;
    let psi0 = spec
        .states
        .first()
        .ok_or_else(|| Error::Convergence("partner has no numeric bound state".into()))?;
    let phi = grid
        .points()
        .map(|x| missing_state(p, zeta, x))
        .collect::<Result<Vec<f64>>>()?;
    let overlap = trapezoid_dot(&phi, psi0, grid.h()).abs();
    Ok(MissingStateReport {
        norm_error: (norm - 1.0).abs(),
        annihilation_residual: annihilation,
        overlap,
    })
}
