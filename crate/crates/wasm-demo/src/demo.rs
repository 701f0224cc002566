//! Plain-Rust side of the browser demo. Every sampler returns NaN where the
//! curve is undefined so the page can break the line there.

use susypt::checks::{partner_grid, partner_spectrum_with};
use susypt::oracle::SpectrumOptions;
use susypt::susy::{
    analytic_spectrum, delta_susy_potential_regular, factorization, m_function, make_params,
    partner_potential, pt_potential, singular_point, zeta_bound, PTParams, SusyBranchConfig,
};

pub fn params(alpha: f64, g: f64) -> Result<PTParams, String> {
    make_params(alpha, g).map_err(|e| e.to_string())
}

pub fn config(plus: bool, deformation: f64) -> SusyBranchConfig {
    if plus {
        SusyBranchConfig::plus(deformation)
    } else {
        SusyBranchConfig::minus(deformation)
    }
}

pub fn linspace(x_min: f64, x_max: f64, n: usize) -> Vec<f64> {
    if n < 2 {
        return vec![x_min; n];
    }
    let h = (x_max - x_min) / (n - 1) as f64;
    (0..n).map(|i| x_min + h * i as f64).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Potential,
    Partner,
    M,
}

impl Kind {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "v" => Ok(Kind::Potential),
            "partner" => Ok(Kind::Partner),
            "m" => Ok(Kind::M),
            other => Err(format!("unknown curve {other:?}")),
        }
    }
}

pub fn sample(p: &PTParams, kind: Kind, cfg: SusyBranchConfig, xs: &[f64]) -> Vec<f64> {
    xs.iter()
        .map(|&x| {
            let v = match kind {
                Kind::Potential => Ok(pt_potential(p, x)),
                Kind::Partner => partner_potential(p, cfg, x),
                Kind::M => m_function(p, x),
            };
            v.unwrap_or(f64::NAN)
        })
        .collect()
}

pub fn delta_regular(g: f64, xi: f64, xs: &[f64]) -> Vec<f64> {
    xs.iter()
        .map(|&x| delta_susy_potential_regular(g, xi, x).unwrap_or(f64::NAN))
        .collect()
}

/// Where the partner blows up, if anywhere.
pub fn singular_x(p: &PTParams, cfg: SusyBranchConfig) -> Option<f64> {
    singular_point(p, cfg).ok().flatten()
}

/// Levels the partner should have: ε⁺ added on the plus branch, E₀ removed
/// on the minus branch.
pub fn expected_partner_levels(p: &PTParams, plus: bool) -> Vec<f64> {
    let levels = analytic_spectrum(p).energies;
    if plus {
        std::iter::once(factorization(p).eps_plus).chain(levels).collect()
    } else {
        levels.into_iter().skip(1).collect()
    }
}

/// Partner levels from the finite-difference oracle on a coarse grid.
pub fn numeric_partner_levels(p: &PTParams, cfg: SusyBranchConfig) -> Result<Vec<f64>, String> {
    if let Some(x) = singular_x(p, cfg) {
        return Err(format!("partner is singular at x = {x:.4}"));
    }
    let grid = partner_grid(p, 0.1 / (p.alpha() * p.lambda())).map_err(|e| e.to_string())?;
    let mut opts = SpectrumOptions::for_alpha(p.alpha());
    opts.tol = 1e-5;
    partner_spectrum_with(p, cfg, &grid, &opts)
        .map(|s| s.energies)
        .map_err(|e| e.to_string())
}

pub fn plus_bound(p: &PTParams) -> f64 {
    zeta_bound(p)
}
