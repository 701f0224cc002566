//! General Riccati solutions at ε± and the partner potentials they generate.
//!
//! With u(x) = d·Ω(x) (d = ζ or ξ) the superpotential is
//! β = D tanh(αx) + u, and since Ω' = qα tanh(αx) Ω + dΩ² with
//! q = -2λ (plus) or 2(λ-1) (minus), its derivative is available in closed
//! form: β' = Dα sech²(αx) + qα tanh(αx) u + u².

use super::integrals::{l_function, m_function, m_infinity, zeta_bound};
use super::params::{factorization, pt_potential, sech2, PTParams};
use crate::error::{Error, Result};
use crate::specfun::ln_cosh;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// ε⁺ = -α²λ², deformation ζ.
    Plus,
    /// ε⁻ = E₀, deformation ξ.
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SusyBranchConfig {
    pub branch: Branch,
    pub deformation: f64,
}

impl SusyBranchConfig {
    pub fn plus(zeta: f64) -> Self {
        Self {
            branch: Branch::Plus,
            deformation: zeta,
        }
    }

    pub fn minus(xi: f64) -> Self {
        Self {
            branch: Branch::Minus,
            deformation: xi,
        }
    }

    /// Factorization energy this branch intertwines at.
    pub fn energy(&self, p: &PTParams) -> f64 {
        let f = factorization(p);
        match self.branch {
            Branch::Plus => f.eps_plus,
            Branch::Minus => f.eps_minus,
        }
    }
}

/// Pieces shared by β, β' and the partner at one point.
struct Local {
    tanh: f64,
    sech2: f64,
    /// D of β₀ = D tanh(αx)
    d: f64,
    /// exponent q of cosh in Ω
    q: f64,
    /// deformation times Ω
    u: f64,
}

fn denominator_is_zero(den: f64, scale: f64) -> bool {
    den.abs() <= 8.0 * f64::EPSILON * (1.0 + scale.abs())
}

fn local(p: &PTParams, cfg: SusyBranchConfig, x: f64) -> Result<Local> {
    let (alpha, lambda, lm1) = (p.alpha(), p.lambda(), p.lambda_minus_one());
    let y = alpha * x;
    let (d, q) = match cfg.branch {
        Branch::Plus => (-alpha * lambda, -2.0 * lambda),
        Branch::Minus => (alpha * lm1, 2.0 * lm1),
    };
    let dz = cfg.deformation;
    let u = if dz == 0.0 {
        0.0
    } else {
        let integral = match cfg.branch {
            Branch::Plus => m_function(p, x)?,
            Branch::Minus => l_function(p, x)?,
        };
        let den = 1.0 - dz * integral;
        if denominator_is_zero(den, dz * integral) {
            return Err(Error::Singular { x });
        }
        // Ω = cosh^q / den, kept in log form so neither factor overflows alone
        let omega = (q * ln_cosh(y) - den.abs().ln()).exp().copysign(den);
        dz * omega
    };
    if !u.is_finite() {
        return Err(Error::Overflow(format!("Ω at x = {x}")));
    }
    Ok(Local {
        tanh: y.tanh(),
        sech2: sech2(y),
        d,
        q,
        u,
    })
}

/// Ω±(x) = cosh^q(αx) / (1 - d·I(x)) with I = M or L.
pub fn omega(p: &PTParams, cfg: SusyBranchConfig, x: f64) -> Result<f64> {
    if cfg.deformation == 0.0 {
        let q = match cfg.branch {
            Branch::Plus => -2.0 * p.lambda(),
            Branch::Minus => 2.0 * p.lambda_minus_one(),
        };
        return Ok((q * ln_cosh(p.alpha() * x)).exp());
    }
    Ok(local(p, cfg, x)?.u / cfg.deformation)
}

/// Superpotential β±(x).
pub fn beta(p: &PTParams, cfg: SusyBranchConfig, x: f64) -> Result<f64> {
    let l = local(p, cfg, x)?;
    Ok(l.d * l.tanh + l.u)
}

/// Analytic β'(x).
pub fn beta_prime(p: &PTParams, cfg: SusyBranchConfig, x: f64) -> Result<f64> {
    let l = local(p, cfg, x)?;
    let alpha = p.alpha();
    Ok(l.d * alpha * l.sech2 + l.q * alpha * l.tanh * l.u + l.u * l.u)
}

/// Closed-form partner Ṽ±(x).
///
/// Plus:  -α²λ(λ+1) sech² - 4λα u tanh + 2u²
/// Minus: -α²(λ-1)(λ-2) sech² + 4α(λ-1) u tanh + 2u²
///
/// The sech² coefficients are the factored forms of
/// -α²(1 + g/2α ± √(1 + 2g/α)).
pub fn partner_potential(p: &PTParams, cfg: SusyBranchConfig, x: f64) -> Result<f64> {
    let l = local(p, cfg, x)?;
    let (alpha, lambda, lm1) = (p.alpha(), p.lambda(), p.lambda_minus_one());
    let a2 = alpha * alpha;
    let v = match cfg.branch {
        Branch::Plus => {
            -a2 * lambda * (lambda + 1.0) * l.sech2 - 4.0 * lambda * alpha * l.u * l.tanh
                + 2.0 * l.u * l.u
        }
        Branch::Minus => {
            -a2 * lm1 * (lm1 - 1.0) * l.sech2 + 4.0 * alpha * lm1 * l.u * l.tanh + 2.0 * l.u * l.u
        }
    };
    Ok(v)
}

/// Ṽ = V + 2β', the defining relation, for cross-checking the closed form.
pub fn partner_from_beta(p: &PTParams, cfg: SusyBranchConfig, x: f64) -> Result<f64> {
    Ok(pt_potential(p, x) + 2.0 * beta_prime(p, cfg, x)?)
}

/// Normalized missing state of the plus partner, the eigenfunction at ε⁺.
pub fn missing_state(p: &PTParams, zeta: f64, x: f64) -> Result<f64> {
    let bound = zeta_bound(p);
    if !(zeta.abs() < bound) {
        return Err(Error::Domain(format!(
            "missing state is not normalizable for |zeta| = {} >= {bound}",
            zeta.abs()
        )));
    }
    let m_inf = m_infinity(p);
    let norm = ((1.0 - zeta * zeta * m_inf * m_inf) / (2.0 * m_inf)).sqrt();
    let den = 1.0 - zeta * m_function(p, x)?;
    // cosh^λ · Ω⁺ = cosh^(-λ) / (1 - ζM)
    Ok(norm * (-p.lambda() * ln_cosh(p.alpha() * x)).exp() / den)
}

/// Converts a plus-branch deformation quoted for the integral taken from -∞
/// (M ranging over (0, 2M∞)) into the lower-limit-0 convention used here.
/// Both describe the same partner: 1 - ζ₋∞(M + M∞) = (1 - ζ₋∞M∞)(1 - ζM).
pub fn zeta_from_left_origin(p: &PTParams, zeta_left: f64) -> f64 {
    zeta_left / (1.0 - zeta_left * m_infinity(p))
}

/// Bisection root of 1 - c·I(s·t) = 0 for t > 0, where I(s·t) grows
/// monotonically in t. Returns None if no sign change is found before
/// `t_max`.
fn bisect_root<F>(integral: F, c: f64, t_start: f64, t_max: f64) -> Result<Option<f64>>
where
    F: Fn(f64) -> Result<f64>,
{
    let f = |t: f64| -> Result<f64> {
        match integral(t) {
            Ok(v) => Ok(1.0 - c * v.abs()),
            // past the overflow point the denominator is certainly negative
            Err(Error::Overflow(_)) => Ok(f64::NEG_INFINITY),
            Err(e) => Err(e),
        }
    };
    let mut lo = 0.0;
    let mut hi = t_start;
    while f(hi)? > 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > t_max {
            return Ok(None);
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}

/// The unique zero x_s of 1 - ξL(x); sgn(x_s) = sgn(ξ).
pub fn singular_point_minus(p: &PTParams, xi: f64) -> Result<f64> {
    if xi == 0.0 || !xi.is_finite() {
        return Err(Error::Domain(format!("xi must be nonzero, got {xi}")));
    }
    let s = xi.signum();
    let root = bisect_root(|t| l_function(p, s * t), xi.abs(), 1.0 / p.alpha(), f64::MAX)?;
    root.map(|t| s * t)
        .ok_or_else(|| Error::Convergence("no sign change of 1 - xi L".into()))
}

/// Zero of 1 - ζM(x) when |ζ| exceeds the regularity bound, otherwise None.
pub fn singular_point_plus(p: &PTParams, zeta: f64) -> Result<Option<f64>> {
    if zeta.abs() * m_infinity(p) <= 1.0 {
        return Ok(None);
    }
    let s = zeta.signum();
    let t_max = 1e3 / p.alpha();
    Ok(bisect_root(|t| m_function(p, s * t), zeta.abs(), 1.0 / p.alpha(), t_max)?.map(|t| s * t))
}

/// Singular point of whichever branch `cfg` selects, if any.
pub fn singular_point(p: &PTParams, cfg: SusyBranchConfig) -> Result<Option<f64>> {
    match cfg.branch {
        Branch::Plus => singular_point_plus(p, cfg.deformation),
        Branch::Minus if cfg.deformation == 0.0 => Ok(None),
        Branch::Minus => singular_point_minus(p, cfg.deformation).map(Some),
    }
}

/// Second-order partner V - 2 d/dx[(ε⁺ - ε⁻)/(β⁺_ζ - β⁻_ξ)].
pub fn two_susy_potential(p: &PTParams, zeta: f64, xi: f64, x: f64) -> Result<f64> {
    let plus = SusyBranchConfig::plus(zeta);
    let minus = SusyBranchConfig::minus(xi);
    let f = factorization(p);
    let diff = beta(p, plus, x)? - beta(p, minus, x)?;
    if diff == 0.0 || !(1.0 / diff).is_finite() {
        return Err(Error::Singular { x });
    }
    let diff_prime = beta_prime(p, plus, x)? - beta_prime(p, minus, x)?;
    Ok(pt_potential(p, x) + 2.0 * (f.eps_plus - f.eps_minus) * diff_prime / (diff * diff))
}

/// V₀,₀(x) = -gα/(2cosh²αx) + 2α²/sinh²αx.
pub fn two_susy_particular(p: &PTParams, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::Singular { x });
    }
    let a = p.alpha();
    Ok(pt_potential(p, x) + 2.0 * a * a / (a * x).sinh().powi(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::susy::params::make_params;
    use approx::assert_relative_eq;

    fn fig2() -> (PTParams, SusyBranchConfig) {
        (PTParams::from_lambda(0.1, 3.0).unwrap(), SusyBranchConfig::plus(0.0937))
    }

    #[test]
    fn particular_solutions() {
        let p = make_params(0.4, 2.0).unwrap();
        for x in [-2.0, 0.0, 0.3, 5.0] {
            let b = beta(&p, SusyBranchConfig::plus(0.0), x).unwrap();
            assert_relative_eq!(b, -0.4 * p.lambda() * (0.4 * x as f64).tanh(), epsilon = 1e-15);
        }
        assert_eq!(beta(&p, SusyBranchConfig::plus(0.0), 0.0).unwrap(), 0.0);
    }

    #[test]
    fn beta_at_origin_equals_deformation() {
        let (p, cfg) = fig2();
        assert_relative_eq!(beta(&p, cfg, 0.0).unwrap(), 0.0937, max_relative = 1e-15);
        let b = beta(&p, SusyBranchConfig::minus(-0.3), 0.0).unwrap();
        assert_relative_eq!(b, -0.3, max_relative = 1e-15);
    }

    #[test]
    fn closed_form_matches_v_plus_two_beta_prime() {
        let cases = [
            (PTParams::from_lambda(0.1, 3.0).unwrap(), SusyBranchConfig::plus(0.0937)),
            (make_params(1.9, 1.0).unwrap(), SusyBranchConfig::minus(-0.05)),
            (make_params(1.0, 8.0).unwrap(), SusyBranchConfig::plus(-1.1)),
            (make_params(3.0, 8.0).unwrap(), SusyBranchConfig::minus(0.0)),
        ];
        for (p, cfg) in cases {
            for i in -40..=40 {
                let x = i as f64 * 0.1 / p.alpha();
                let (Ok(a), Ok(b)) = (partner_potential(&p, cfg, x), partner_from_beta(&p, cfg, x)) else {
                    continue;
                };
                assert!((a - b).abs() <= 1e-10 * a.abs().max(1.0), "{cfg:?} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn zero_deformation_shape_invariance() {
        let p = PTParams::from_lambda(0.3, 2.7).unwrap();
        let up = PTParams::from_lambda(0.3, 3.7).unwrap();
        let down = PTParams::from_lambda(0.3, 1.7).unwrap();
        for i in -50..=50 {
            let x = i as f64 * 0.37;
            let vp = partner_potential(&p, SusyBranchConfig::plus(0.0), x).unwrap();
            let vm = partner_potential(&p, SusyBranchConfig::minus(0.0), x).unwrap();
            assert!((vp - pt_potential(&up, x)).abs() < 1e-12);
            assert!((vm - pt_potential(&down, x)).abs() < 1e-12);
        }
    }

    #[test]
    fn minus_partner_vanishes_at_quarter_g() {
        let g = 3.0;
        let p = make_params(g / 4.0, g).unwrap();
        for i in -20..=20 {
            let v = partner_potential(&p, SusyBranchConfig::minus(0.0), i as f64 * 0.5).unwrap();
            assert_eq!(v, 0.0);
        }
    }

    fn count_minima(p: &PTParams, cfg: SusyBranchConfig) -> usize {
        let vs: Vec<f64> = (0..=2000)
            .map(|i| partner_potential(p, cfg, -100.0 + 0.1 * i as f64).unwrap())
            .collect();
        assert!(vs.iter().all(|v| v.is_finite()));
        vs.windows(3).filter(|w| w[1] < w[0] && w[1] < w[2]).count()
    }

    #[test]
    fn fig2_partner_shape() {
        let (p, cfg) = fig2();
        // lower-limit-0 convention: one asymmetric well with a shoulder
        assert_eq!(count_minima(&p, cfg), 1);
        assert!((partner_potential(&p, cfg, 10.0).unwrap() - partner_potential(&p, cfg, -10.0).unwrap()).abs() > 1e-3);
        // the same ζ measured from -∞ is the double well
        let shifted = SusyBranchConfig::plus(zeta_from_left_origin(&p, 0.0937));
        assert!((shifted.deformation - 0.187_300_106_6).abs() < 1e-9);
        assert_eq!(count_minima(&p, shifted), 2);
    }

    #[test]
    fn left_origin_reparametrization_is_exact() {
        let p = PTParams::from_lambda(0.4, 2.3).unwrap();
        let zl = 0.3 / m_infinity(&p);
        let cfg = SusyBranchConfig::plus(zeta_from_left_origin(&p, zl));
        for x in [-4.0, -0.5, 0.0, 1.0, 6.0] {
            let m_left = m_function(&p, x).unwrap() + m_infinity(&p);
            let u = zl * (-2.0 * 2.3 * ln_cosh(0.4 * x)).exp() / (1.0 - zl * m_left);
            let b = -0.4 * 2.3 * (0.4 * x as f64).tanh() + u;
            assert_relative_eq!(beta(&p, cfg, x).unwrap(), b, max_relative = 1e-12, epsilon = 1e-14);
        }
    }

    #[test]
    fn missing_state_domain() {
        let p = PTParams::from_lambda(0.1, 3.0).unwrap();
        assert!(matches!(missing_state(&p, 0.1875, 0.0), Err(Error::Domain(_))));
        assert!(missing_state(&p, -0.18, 0.0).is_ok());
    }

    #[test]
    fn missing_state_at_zero_deformation() {
        let p = PTParams::from_lambda(0.5, 2.4).unwrap();
        let ratio0 = missing_state(&p, 0.0, 0.0).unwrap();
        for x in [0.3, 1.5, 4.0] {
            let v = missing_state(&p, 0.0, x).unwrap();
            assert_relative_eq!(v, missing_state(&p, 0.0, -x).unwrap(), max_relative = 1e-15);
            let shape = (0.5 * x as f64).cosh().powf(-2.4);
            assert_relative_eq!(v / ratio0, shape, max_relative = 1e-13);
        }
    }

    #[test]
    fn minus_singularity_sign_and_limit() {
        let p = make_params(1.9, 1.0).unwrap();
        let xs = singular_point_minus(&p, -0.05).unwrap();
        assert!(xs < 0.0);
        assert!((1.0 + 0.05 * l_function(&p, xs).unwrap()).abs() < 1e-12);
        let xs_pos = singular_point_minus(&p, 0.2).unwrap();
        assert!(xs_pos > 0.0);
        assert!(singular_point_minus(&p, 0.0).is_err());
        assert!(matches!(beta(&p, SusyBranchConfig::minus(-0.05), xs), Err(Error::Singular { .. })) || {
            // bisection may land one ulp off the pole; the value is then huge
            beta(&p, SusyBranchConfig::minus(-0.05), xs).unwrap().abs() > 1e8
        });
    }

    #[test]
    fn plus_singularity_only_beyond_bound() {
        let p = PTParams::from_lambda(0.1, 3.0).unwrap();
        assert_eq!(singular_point_plus(&p, 0.0937).unwrap(), None);
        let xs = singular_point_plus(&p, 0.19).unwrap().expect("root beyond bound");
        assert!(xs > 0.0);
        assert!((1.0 - 0.19 * m_function(&p, xs).unwrap()).abs() < 1e-12);
        let xs = singular_point_plus(&p, -0.25).unwrap().unwrap();
        assert!(xs < 0.0);
    }

    #[test]
    fn two_susy_particular_case() {
        let p = make_params(0.8, 5.0).unwrap();
        for i in 1..=40 {
            for s in [-1.0, 1.0] {
                let x = s * i as f64 * 0.15;
                let a = two_susy_potential(&p, 0.0, 0.0, x).unwrap();
                let b = two_susy_particular(&p, x).unwrap();
                assert!((a - b).abs() <= 1e-9 * b.abs().max(1.0), "x={x}: {a} vs {b}");
            }
        }
        assert!(matches!(two_susy_potential(&p, 0.0, 0.0, 0.0), Err(Error::Singular { .. })));
        let f = factorization(&p);
        assert_relative_eq!(
            f.eps_plus - f.eps_minus,
            -0.64 * (2.0 * p.lambda() - 1.0),
            max_relative = 1e-13
        );
    }

    #[test]
    fn two_susy_inverse_square_core() {
        let p = make_params(0.8, 5.0).unwrap();
        for x in [1e-3, 1e-4, -1e-5] {
            let v = two_susy_potential(&p, 0.0, 0.0, x).unwrap();
            assert!((v * x * x / 2.0 - 1.0).abs() < 10.0 * x.abs(), "x={x}");
        }
    }
}
