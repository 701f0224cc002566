//! The δ-well V = -gδ(x), its bound state, and its one-parameter family of
//! SUSY partners (the α → ∞ image of the minus branch).
//!
//! The +gδ(x) term of the partner is distributional and is never evaluated;
//! `delta_susy_potential_regular` returns only the regular part off the
//! origin.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaWell {
    pub g: f64,
    /// E_δ = -(g/2)²
    pub energy: f64,
    /// factorization energy σ = -(g/2)²
    pub sigma: f64,
}

pub fn delta_well(g: f64) -> Result<DeltaWell> {
    if !(g > 0.0 && g.is_finite()) {
        return Err(Error::Domain(format!("delta strength must be positive, got {g}")));
    }
    let e = -(0.5 * g).powi(2);
    Ok(DeltaWell { g, energy: e, sigma: e })
}

/// ψ_δ(x) = √(g/2) e^(-g|x|/2).
pub fn delta_ground_state(w: &DeltaWell, x: f64) -> f64 {
    (0.5 * w.g).sqrt() * (-0.5 * w.g * x.abs()).exp()
}

fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// 1 - ω (e^(g|x|) - 1)/g · sgn x
fn denominator(g: f64, omega: f64, x: f64) -> f64 {
    1.0 - omega * ((g * x.abs()).exp_m1() / g) * sgn(x)
}

/// β_ω(x) = (g/2) sgn x + ω e^(g|x|) / (1 - ω (e^(g|x|) - 1)/g · sgn x).
pub fn delta_susy_beta(g: f64, omega: f64, x: f64) -> Result<f64> {
    let base = 0.5 * g * sgn(x);
    if omega == 0.0 {
        return Ok(base);
    }
    let den = denominator(g, omega, x);
    if den == 0.0 {
        return Err(Error::Singular { x });
    }
    let v = base + omega * (g * x.abs()).exp() / den;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Singular { x })
    }
}

/// Regular part of the δ-limit partner for x ≠ 0:
/// 2gξ e^(g|x|) sgn x / D + 2ξ² e^(2g|x|) / D².
pub fn delta_susy_potential_regular(g: f64, xi: f64, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::Domain("regular part is undefined at the origin".into()));
    }
    if xi == 0.0 {
        return Ok(0.0);
    }
    let den = denominator(g, xi, x);
    if den == 0.0 {
        return Err(Error::Singular { x });
    }
    let e = (g * x.abs()).exp();
    let r = xi * e / den;
    let v = 2.0 * g * r * sgn(x) + 2.0 * r * r;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Singular { x })
    }
}

/// x_s = (sgn ξ / g) ln(1 + g/|ξ|); None for ξ = 0.
pub fn delta_singular_point(g: f64, xi: f64) -> Option<f64> {
    if xi == 0.0 {
        return None;
    }
    Some(sgn(xi) / g * (g / xi.abs()).ln_1p())
}
