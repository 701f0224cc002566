//! The two running integrals that carry the deformation parameters:
//! M(λ,α,x) = ∫₀ˣ cosh^(-2λ)(αy) dy (bounded) and
//! L(λ,α,x) = ∫₀ˣ cosh^(2(λ-1))(αy) dy (unbounded).
//!
//! Both are evaluated by adaptive quadrature in u = αy. The hypergeometric
//! closed forms are kept as an independent second route; they degenerate at
//! integer λ.

use std::f64::consts::PI;

use super::params::PTParams;
use crate::error::{Error, Result};
use crate::quad::integrate;
use crate::specfun::{gamma, gauss_2f1, ln_cosh, ln_gamma, rgamma, HypergeomTriple};

const ABS_TOL: f64 = 1e-15;
const REL_TOL: f64 = 1e-14;

/// Past this u the remaining tail of the M integrand is below 1e-18.
fn m_cutoff(lambda: f64) -> f64 {
    let tail = lambda * 4f64.ln() - (2.0 * lambda).ln() + 18.0 * 10f64.ln();
    (tail / (2.0 * lambda)).max(1.0)
}

/// M∞ = √π Γ(λ) / (2α Γ(λ + 1/2)).
pub fn m_infinity(p: &PTParams) -> f64 {
    let l = p.lambda();
    let ratio = (ln_gamma(l).unwrap_or(f64::NAN) - ln_gamma(l + 0.5).unwrap_or(f64::NAN)).exp();
    PI.sqrt() * ratio / (2.0 * p.alpha())
}

/// Largest |ζ| keeping the plus partner regular: 1/M∞.
pub fn zeta_bound(p: &PTParams) -> f64 {
    1.0 / m_infinity(p)
}

pub fn m_function(p: &PTParams, x: f64) -> Result<f64> {
    let alpha = p.alpha();
    let exponent = -2.0 * p.lambda();
    let u = alpha * x;
    let cut = m_cutoff(p.lambda());
    let upper = u.abs().min(cut);
    let v = integrate(|t| (exponent * ln_cosh(t)).exp(), 0.0, upper, ABS_TOL, REL_TOL)?;
    // quadrature rounding must not cross the plateau
    Ok((v / alpha).min(m_infinity(p)).copysign(u))
}

pub fn l_function(p: &PTParams, x: f64) -> Result<f64> {
    let alpha = p.alpha();
    let exponent = 2.0 * p.lambda_minus_one();
    let u = alpha * x;
    let v = integrate(|t| (exponent * ln_cosh(t)).exp(), 0.0, u.abs(), 0.0, REL_TOL)
        .map_err(|e| match e {
            Error::Overflow(_) => Error::Overflow(format!("L(x = {x}) exceeds f64 range")),
            other => other,
        })?;
    let out = v.copysign(u) / alpha;
    if out.is_finite() {
        Ok(out)
    } else {
        Err(Error::Overflow(format!("L(x = {x}) exceeds f64 range")))
    }
}

/// Closed form 2^(2λ) e^(2αλx)/(2αλ) ₂F₁(λ, 2λ; 1+λ; -e^(2αx)) - M∞.
pub fn m_hypergeometric(p: &PTParams, x: f64) -> Result<f64> {
    let (l, a) = (p.lambda(), p.alpha());
    let z = -(2.0 * a * x).exp();
    let f = gauss_2f1(HypergeomTriple::new(l, 2.0 * l, 1.0 + l), z)?;
    let pref = (2.0 * l * 2f64.ln() + 2.0 * a * l * x).exp() / (2.0 * a * l);
    Ok(pref * f - m_infinity(p))
}

/// Closed form of L; undefined at integer λ ≥ 2.
pub fn l_hypergeometric(p: &PTParams, x: f64) -> Result<f64> {
    let (l, a, lm1) = (p.lambda(), p.alpha(), p.lambda_minus_one());
    let z = -(2.0 * a * x).exp();
    let f = gauss_2f1(HypergeomTriple::new(1.0 - l, 2.0 - 2.0 * l, 2.0 - l), z)?;
    let pref = (-2.0 * a * lm1 * x - 2.0 * lm1 * 2f64.ln()).exp() / (2.0 * a * lm1);
    let constant = PI.sqrt() * gamma(2.0 - l)? * rgamma(1.5 - l) / (2.0 * a * lm1);
    Ok(-pref * f + constant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p3() -> PTParams {
        PTParams::from_lambda(0.1, 3.0).unwrap()
    }

    #[test]
    fn m_plateau() {
        let p = p3();
        assert_relative_eq!(m_infinity(&p), 16.0 / 3.0, max_relative = 1e-13);
        assert_relative_eq!(zeta_bound(&p), 0.1875, max_relative = 1e-13);
        assert_eq!(m_function(&p, 0.0).unwrap(), 0.0);
        assert_relative_eq!(m_function(&p, 500.0).unwrap(), 16.0 / 3.0, max_relative = 1e-13);
        assert_relative_eq!(m_function(&p, -500.0).unwrap(), -16.0 / 3.0, max_relative = 1e-13);
    }

    #[test]
    fn zeta_bound_is_linear_in_alpha() {
        let a = zeta_bound(&PTParams::from_lambda(0.3, 2.2).unwrap());
        let b = zeta_bound(&PTParams::from_lambda(1.2, 2.2).unwrap());
        assert_relative_eq!(b / a, 4.0, max_relative = 1e-12);
    }

    #[test]
    fn m_is_odd_and_increasing() {
        let p = PTParams::from_lambda(0.8, 1.7).unwrap();
        let m_inf = m_infinity(&p);
        let mut prev = -m_inf;
        for i in -60..=60 {
            let x = i as f64 * 0.1;
            let m = m_function(&p, x).unwrap();
            assert_eq!(m, -m_function(&p, -x).unwrap());
            assert!(m > prev || (i == -60 && m >= prev));
            assert!(m.abs() < m_inf);
            prev = m;
        }
    }

    #[test]
    fn l_elementary_case() {
        // λ = 2: L = x/2 + sinh(2αx)/(4α)
        let p = PTParams::from_lambda(0.7, 2.0).unwrap();
        for x in [-3.0, -0.4, 0.0, 0.25, 1.0, 6.0] {
            let exact = x / 2.0 + (2.0 * 0.7 * x as f64).sinh() / (4.0 * 0.7);
            let l = l_function(&p, x).unwrap();
            assert!((l - exact).abs() <= 1e-13 * exact.abs().max(1.0), "x={x}: {l} vs {exact}");
        }
    }

    #[test]
    fn l_large_alpha_limit() {
        let p = PTParams::new(50.0, 1.0).unwrap();
        let l = l_function(&p, 0.1).unwrap();
        let lim = 0.1f64.exp_m1();
        assert!((l / lim - 1.0).abs() < 0.02);
    }

    #[test]
    fn l_overflow_is_reported() {
        let p = PTParams::from_lambda(5.0, 8.0).unwrap();
        assert!(matches!(l_function(&p, 30.0), Err(Error::Overflow(_))));
    }

    #[test]
    fn closed_forms_match_quadrature() {
        for (alpha, lambda) in [(0.1, 2.5616), (1.9, 1.21635), (0.5, 3.3), (2.0, 1.5)] {
            let p = PTParams::from_lambda(alpha, lambda).unwrap();
            for s in [-3.0, -0.5, 0.5, 3.0] {
                let x = s / alpha;
                let mq = m_function(&p, x).unwrap();
                let mh = m_hypergeometric(&p, x).unwrap();
                assert!((mq - mh).abs() < 1e-10 * m_infinity(&p).max(1.0), "M λ={lambda} x={x}: {mq} vs {mh}");
                let lq = l_function(&p, x).unwrap();
                let lh = l_hypergeometric(&p, x).unwrap();
                assert!((lq - lh).abs() < 1e-10 * lq.abs().max(1.0), "L λ={lambda} x={x}: {lq} vs {lh}");
            }
        }
    }
}
