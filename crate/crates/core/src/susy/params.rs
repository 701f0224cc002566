use crate::error::{Error, Result};
use crate::specfun::{ln_cosh, ln_gamma};

/// Default tolerance on |λ - round(λ)| for the transparency test.
pub const TRANSPARENCY_TOL: f64 = 1e-9;

/// Parameters of the well V(x) = -gα / (2 cosh²(αx)).
///
/// λ is always derived from (α, g) through λ = (1 + √(1 + 2g/α)) / 2, so the
/// three equivalent depth forms U₀ = α²λ(λ-1) = gα/2 agree by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PTParams {
    alpha: f64,
    g: f64,
    lambda_minus_one: f64,
}

impl PTParams {
    pub fn new(alpha: f64, g: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::Domain(format!("alpha must be positive, got {alpha}")));
        }
        if !(g > 0.0 && g.is_finite()) {
            return Err(Error::Domain(format!("g must be positive, got {g}")));
        }
        let s = (1.0 + 2.0 * g / alpha).sqrt();
        // (s - 1)/2 rewritten to avoid cancellation when g/α is small
        let lambda_minus_one = (g / alpha) / (s + 1.0);
        Ok(Self {
            alpha,
            g,
            lambda_minus_one,
        })
    }

    /// Builds the parameters from (α, λ) via g = 2αλ(λ-1).
    pub fn from_lambda(alpha: f64, lambda: f64) -> Result<Self> {
        if !(lambda > 1.0 && lambda.is_finite()) {
            return Err(Error::Domain(format!("lambda must exceed 1, got {lambda}")));
        }
        Self::new(alpha, 2.0 * alpha * lambda * (lambda - 1.0))
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn lambda(&self) -> f64 {
        1.0 + self.lambda_minus_one
    }

    pub fn lambda_minus_one(&self) -> f64 {
        self.lambda_minus_one
    }

    /// U₀ = gα/2.
    pub fn depth(&self) -> f64 {
        0.5 * self.g * self.alpha
    }

    /// E₀ = -α²(λ-1)², shared by the spectrum and the minus factorization.
    pub fn ground_energy(&self) -> f64 {
        -(self.alpha * self.lambda_minus_one).powi(2)
    }
}

pub fn make_params(alpha: f64, g: f64) -> Result<PTParams> {
    PTParams::new(alpha, g)
}

/// V(α, x) = -gα / (2 cosh²(αx)).
pub fn pt_potential(p: &PTParams, x: f64) -> f64 {
    -p.depth() * sech2(p.alpha() * x)
}

pub(crate) fn sech2(y: f64) -> f64 {
    (-2.0 * ln_cosh(y)).exp()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    /// Ascending: E₀ < E₁ < …
    pub energies: Vec<f64>,
    pub count: usize,
    pub lambda_used: f64,
}

/// E_n = -α²(λ-1-n)² for 0 ≤ n < λ-1. At integer λ the threshold state
/// n = λ-1 (E = 0) is not a level, even when rounding leaves λ-1 a hair above
/// the integer.
pub fn analytic_spectrum(p: &PTParams) -> SpectrumReport {
    let lm1 = p.lambda_minus_one();
    let energies: Vec<f64> = (0..)
        .map(|n| n as f64)
        .take_while(|&n| n == 0.0 || lm1 - n > TRANSPARENCY_TOL * lm1)
        .map(|n| -(p.alpha() * (lm1 - n)).powi(2))
        .collect();
    SpectrumReport {
        count: energies.len(),
        energies,
        lambda_used: p.lambda(),
    }
}

/// ln C₀ where C₀² = α Γ(λ-1/2) / (√π Γ(λ-1)).
fn ln_ground_norm(p: &PTParams) -> f64 {
    let lm1 = p.lambda_minus_one();
    // both Gamma arguments are positive for λ > 1
    let ln_c2 = p.alpha().ln() + ln_gamma(lm1 + 0.5).unwrap_or(f64::NAN)
        - 0.5 * std::f64::consts::PI.ln()
        - ln_gamma(lm1).unwrap_or(f64::NAN);
    0.5 * ln_c2
}

/// Normalized ground state ψ₀(x) = C₀ cosh^(1-λ)(αx).
pub fn ground_state(p: &PTParams, x: f64) -> f64 {
    (ln_ground_norm(p) - p.lambda_minus_one() * ln_cosh(p.alpha() * x)).exp()
}

/// Constants of the two tanh-type Riccati solutions β = D tanh(αx).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorizationPair {
    pub d_plus: f64,
    pub d_minus: f64,
    pub eps_plus: f64,
    pub eps_minus: f64,
}

pub fn factorization(p: &PTParams) -> FactorizationPair {
    let d_plus = -p.alpha() * p.lambda();
    let d_minus = p.alpha() * p.lambda_minus_one();
    FactorizationPair {
        d_plus,
        d_minus,
        eps_plus: -d_plus * d_plus,
        eps_minus: p.ground_energy(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transparency {
    pub transparent: bool,
    /// Nearest k with λ ≈ k + 1.
    pub k: i64,
}

/// Reflectionless iff λ = k + 1 with k ≥ 1 (g = 2αk(k+1)).
pub fn is_transparent(p: &PTParams, tol: f64) -> Transparency {
    let lambda = p.lambda();
    let nearest = lambda.round();
    Transparency {
        transparent: nearest >= 2.0 && (lambda - nearest).abs() <= tol,
        k: nearest as i64 - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn lambda_from_alpha_and_g() {
        let p = make_params(1.9, 1.0).unwrap();
        assert!((p.lambda() - 1.216).abs() < 5e-4);
        let p = make_params(0.25, 1.0).unwrap();
        assert_eq!(p.lambda(), 2.0);
        let p = make_params(1.0, 8.0).unwrap();
        assert_relative_eq!(p.lambda(), (1.0 + 17f64.sqrt()) / 2.0, max_relative = 1e-15);
        assert!((p.lambda() - 2.562).abs() < 5e-4);
    }

    #[test]
    fn depth_forms_agree() {
        for (a, g) in [(0.1, 1.2), (1.9, 1.0), (200.0, 1.0), (3.0, 8.0), (1e-3, 50.0)] {
            let p = make_params(a, g).unwrap();
            let l = p.lambda();
            assert_relative_eq!(a * a * l * p.lambda_minus_one(), p.depth(), max_relative = 1e-12);
            assert!(l > 1.0);
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(make_params(0.0, 1.0).is_err());
        assert!(make_params(1.0, -1.0).is_err());
        assert!(PTParams::from_lambda(1.0, 1.0).is_err());
    }

    #[test]
    fn potential_values() {
        let p = make_params(1.0, 8.0).unwrap();
        assert_eq!(pt_potential(&p, 0.0), -4.0);
        assert_eq!(pt_potential(&p, 0.7), pt_potential(&p, -0.7));
        let p = PTParams::from_lambda(0.1, 3.0).unwrap();
        for x in [150.0, 300.0, 1e4] {
            assert!(pt_potential(&p, x).abs() < 1e-12);
        }
    }

    #[test]
    fn spectrum_levels() {
        let p = make_params(0.1, 1.2).unwrap();
        let s = analytic_spectrum(&p);
        assert_eq!(s.count, 2);
        assert_relative_eq!(s.energies[0], -0.04, max_relative = 1e-12);
        assert_relative_eq!(s.energies[1], -0.01, max_relative = 1e-12);

        let s = analytic_spectrum(&make_params(1.9, 1.0).unwrap());
        assert_eq!(s.count, 1);
        assert!((s.energies[0] + 0.16898).abs() < 1e-5);

        for g in [0.5, 1.0, 8.0] {
            for alpha in [g / 4.0, g / 3.0, 2.0 * g] {
                assert_eq!(analytic_spectrum(&make_params(alpha, g).unwrap()).count, 1);
            }
        }
    }

    #[test]
    fn level_count_brackets_alpha() {
        // 2g/((2N+3)² - 1) ≤ α < 2g/((2N+1)² - 1)
        let g = 8.0;
        for alpha in [0.05, 0.11, 0.3, 0.7, 1.0, 1.5, 3.0] {
            let s = analytic_spectrum(&make_params(alpha, g).unwrap());
            let n = (s.count - 1) as f64;
            let lo = 2.0 * g / ((2.0 * n + 3.0).powi(2) - 1.0);
            let hi = 2.0 * g / ((2.0 * n + 1.0).powi(2) - 1.0);
            assert!(lo <= alpha && (n == 0.0 || alpha < hi), "alpha {alpha} N {n}");
        }
    }

    #[test]
    fn ground_state_shape() {
        let p = make_params(0.7, 3.0).unwrap();
        for x in [0.1, 1.0, 4.0] {
            assert_eq!(ground_state(&p, x), ground_state(&p, -x));
            assert!(ground_state(&p, x) > 0.0);
        }
        // δ-limit: ψ₀(1) → √(1/2) e^{-1/2}
        let p = make_params(100.0, 1.0).unwrap();
        let target = 0.5f64.sqrt() * (-0.5f64).exp();
        assert!((ground_state(&p, 1.0) / target - 1.0).abs() < 0.02);
    }

    #[test]
    fn factorization_constants() {
        let f = factorization(&make_params(0.1, 1.2).unwrap());
        assert_relative_eq!(f.eps_plus, -0.09, max_relative = 1e-12);
        assert_relative_eq!(f.eps_minus, -0.04, max_relative = 1e-12);
        // closed form in (α, g)
        let (a, g) = (0.1f64, 1.2f64);
        let s = (1.0 + 2.0 * g / a).sqrt();
        assert_relative_eq!(f.eps_plus, -a * a / 2.0 * (1.0 + g / a + s), max_relative = 1e-12);
        assert_relative_eq!(f.eps_minus, -a * a / 2.0 * (1.0 + g / a - s), max_relative = 1e-12);

        let p = make_params(0.5, 2.0).unwrap();
        let f = factorization(&p);
        assert_eq!(f.eps_minus - analytic_spectrum(&p).energies[0], 0.0);
        assert_relative_eq!(f.eps_plus, -4.0 * 0.25, max_relative = 1e-14);
        assert_relative_eq!(f.eps_minus, -0.25, max_relative = 1e-14);
        assert!(f.eps_plus < f.eps_minus && f.eps_minus < 0.0);
    }

    #[test]
    fn transparency() {
        let t = is_transparent(&make_params(0.1, 1.2).unwrap(), TRANSPARENCY_TOL);
        assert_eq!(t, Transparency { transparent: true, k: 2 });
        let t = is_transparent(&make_params(1.0, 8.0).unwrap(), TRANSPARENCY_TOL);
        assert!(!t.transparent);
        for alpha in [0.3, 1.0, 17.0] {
            let t = is_transparent(&make_params(alpha, 4.0 * alpha).unwrap(), TRANSPARENCY_TOL);
            assert_eq!(t, Transparency { transparent: true, k: 1 });
        }
    }
}
