//! The invariant suites run by `susypt verify`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use susypt::checks::{
    consistency_residual, missing_state_report, partner_grid, partner_spectrum, plus_denominator_min,
    riccati_residual, shape_invariance_residual,
};
use susypt::oracle::{
    apply_intertwiner, bound_spectrum, hamiltonian_residual, reflection_coefficient, sample, Grid,
    SpectrumOptions, DEGENERATE_NORM,
};
use susypt::susy::*;
use susypt::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_result(name: &'static str, r: Result<(bool, String), Error>) -> Self {
        match r {
            Ok((passed, detail)) => Check { name, passed, detail },
            Err(e) => Check { name, passed: false, detail: format!("error: {e}") },
        }
    }
}

/// Tolerances of the default configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub eigen_rel: f64,
    pub isospectral: f64,
    pub riccati: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { eigen_rel: 1e-6, isospectral: 1e-5, riccati: 1e-8 }
    }
}

fn random_params(rng: &mut StdRng) -> PTParams {
    PTParams::from_lambda(rng.gen_range(0.1..3.0), rng.gen_range(1.1..6.0)).expect("valid range")
}

fn span(p: &PTParams, reach: f64, step: f64) -> Vec<f64> {
    let n = (reach / step).round() as i64;
    (-n..=n).map(|i| i as f64 * step / p.alpha()).collect()
}

/// Worst Riccati residual relative to max(1, |ε|) over `count` random
/// admissible configurations of one branch.
pub fn riccati_sweep(branch: Branch, count: usize, seed: u64) -> Result<f64, Error> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..count {
        let p = random_params(&mut rng);
        let h = 1e-3 / p.alpha();
        let (cfg, xs) = match branch {
            Branch::Plus => {
                let cfg = SusyBranchConfig::plus(rng.gen_range(-0.95..0.95) * zeta_bound(&p));
                (cfg, span(&p, 6.0, 0.1))
            }
            Branch::Minus => {
                let xi = rng.gen_range(-1.0..1.0) * p.alpha();
                let xs_sing = singular_point_minus(&p, xi)?;
                let xs = span(&p, 6.0, 0.1)
                    .into_iter()
                    .filter(|x| (x - xs_sing).abs() > 1.0 / p.alpha())
                    .collect();
                (SusyBranchConfig::minus(xi), xs)
            }
        };
        let r = riccati_residual(&p, cfg, &xs, h)? / cfg.energy(&p).abs().max(1.0);
        worst = worst.max(r);
    }
    Ok(worst)
}

/// Worst relative deviation between analytic and numeric levels over
/// `count` random wells, and whether the firm counts agree.
pub fn oracle_sweep(count: usize, seed: u64) -> Result<(f64, bool), Error> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut counts_agree = true;
    for _ in 0..count {
        let alpha: f64 = rng.gen_range(0.05..3.0);
        let lambda: f64 = rng.gen_range(1.05..6.0);
        let p = PTParams::from_lambda(alpha, lambda)?;
        let opts = SpectrumOptions::for_alpha(alpha);
        let exact: Vec<f64> = analytic_spectrum(&p)
            .energies
            .into_iter()
            .filter(|e| e.abs() >= opts.marginal_threshold)
            .collect();
        let grid = Grid::for_well_tail(alpha, exact.last().copied(), 0.025 / (alpha * lambda), 24.0)?;
        let s = bound_spectrum(|x| pt_potential(&p, x), &grid, &opts)?;
        let firm = s.firm_energies();
        counts_agree &= firm.len() == exact.len();
        for (e, n) in exact.iter().zip(&firm) {
            worst = worst.max(((n - e) / e).abs());
        }
    }
    Ok((worst, counts_agree))
}

/// Largest |numeric - expected| for the plus partner at each ζ.
pub fn plus_isospectrality(p: &PTParams, zetas: &[f64], h: f64) -> Result<(f64, bool), Error> {
    let mut want = vec![factorization(p).eps_plus];
    want.extend(analytic_spectrum(p).energies);
    let grid = partner_grid(p, h)?;
    let mut worst = 0.0f64;
    let mut counts = true;
    for &zeta in zetas {
        let s = partner_spectrum(p, SusyBranchConfig::plus(zeta), &grid)?;
        counts &= s.energies.len() == want.len();
        for (n, e) in s.energies.iter().zip(&want) {
            worst = worst.max((n - e).abs());
        }
    }
    Ok((worst, counts))
}

pub fn minus_isospectrality(p: &PTParams, h: f64) -> Result<(f64, bool), Error> {
    let exact = analytic_spectrum(p).energies;
    let grid = partner_grid(p, h)?;
    let s = partner_spectrum(p, SusyBranchConfig::minus(0.0), &grid)?;
    let firm = s.firm_energies();
    let worst = firm.iter().zip(&exact[1..]).map(|(n, e)| (n - e).abs()).fold(0.0, f64::max);
    Ok((worst, firm.len() + 1 == exact.len()))
}

/// sup over x ∈ [0.2, 3] of the finite-α minus partner's distance to the δ
/// form, for the potential and for β.
pub fn delta_limit_gap(alpha: f64, g: f64, xi: f64) -> Result<(f64, f64), Error> {
    let p = make_params(alpha, g)?;
    let cfg = SusyBranchConfig::minus(xi);
    let mut gap = (0.0f64, 0.0f64);
    for i in 0..=280 {
        let x = 0.2 + 0.01 * i as f64;
        let dv = partner_potential(&p, cfg, x)? - delta_susy_potential_regular(g, xi, x)?;
        let db = beta(&p, cfg, x)? - delta_susy_beta(g, xi, x)?;
        gap.0 = gap.0.max(dv.abs());
        gap.1 = gap.1.max(db.abs());
    }
    Ok(gap)
}

/// max |V₂ - V₀,₀| relative to max(1, |V₀,₀|) at points away from the origin.
pub fn two_susy_gap(p: &PTParams) -> Result<f64, Error> {
    let mut worst = 0.0f64;
    for u in [-4.0, -2.0, -1.0, -0.3, -0.05, 0.05, 0.2, 0.7, 1.5, 3.0] {
        let x = u / p.alpha();
        let want = two_susy_particular(p, x)?;
        let got = two_susy_potential(p, 0.0, 0.0, x)?;
        worst = worst.max((got - want).abs() / want.abs().max(1.0));
    }
    Ok(worst)
}

fn fmt_ok(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs every suite; `seed` drives the randomized configurations.
pub fn run_all(tol: &Tolerances, seed: u64) -> Vec<Check> {
    let fig = PTParams::from_lambda(0.1, 3.0).expect("valid");
    let mut out = Vec::new();

    out.push(Check::from_result("oracle vs formula, 20 random wells", (|| {
        let (worst, counts) = oracle_sweep(20, seed)?;
        Ok((worst <= tol.eigen_rel && counts, format!("worst rel {worst:.2e}, counts agree {}", fmt_ok(counts))))
    })()));

    for (name, branch, salt) in [
        ("Riccati residual, plus branch", Branch::Plus, 1),
        ("Riccati residual, minus branch", Branch::Minus, 2),
    ] {
        out.push(Check::from_result(name, (|| {
            let r = riccati_sweep(branch, 20, seed ^ salt)?;
            Ok((r <= tol.riccati, format!("max scaled residual {r:.2e}")))
        })()));
    }

    out.push(Check::from_result("partner equals V + 2β'", (|| {
        let mut rng = StdRng::seed_from_u64(seed ^ 3);
        let mut worst = 0.0f64;
        for _ in 0..10 {
            let p = random_params(&mut rng);
            let xs = span(&p, 5.0, 0.25);
            let plus = SusyBranchConfig::plus(rng.gen_range(-0.9..0.9) * zeta_bound(&p));
            worst = worst.max(consistency_residual(&p, plus, &xs)?);
            worst = worst.max(consistency_residual(&p, SusyBranchConfig::minus(0.0), &xs)?);
        }
        Ok((worst <= 1e-10, format!("max {worst:.2e}")))
    })()));

    out.push(Check::from_result("shape invariance at zero deformation", (|| {
        let (up, down) = shape_invariance_residual(&fig, &span(&fig, 8.0, 0.05))?;
        let p2 = make_params(0.5, 2.0)?;
        let flat = (-40..=40)
            .map(|i| partner_potential(&p2, SusyBranchConfig::minus(0.0), 0.1 * i as f64).map(f64::abs))
            .try_fold(0.0f64, |a, v| v.map(|v| a.max(v)))?;
        Ok((up <= 1e-12 && down <= 1e-12 && flat == 0.0, format!("λ+1 {up:.1e}, λ-1 {down:.1e}, α=g/4 {flat:.1e}")))
    })()));

    out.push(Check::from_result("M odd, increasing, bounded; closed form agrees", (|| {
        let p = make_params(1.0, 8.0)?;
        let mut ok = true;
        let mut prev = f64::NEG_INFINITY;
        let mut closed = 0.0f64;
        for i in -60..=60 {
            let x = 0.1 * i as f64;
            let m = m_function(&p, x)?;
            ok &= m_function(&p, -x)? == -m && m > prev - 8.0 * f64::EPSILON && m.abs() <= m_infinity(&p);
            prev = m;
            if i % 5 == 0 {
                closed = closed.max((m_hypergeometric(&p, x)? - m).abs());
            }
        }
        Ok((ok && closed <= 1e-10, format!("closed-form gap {closed:.1e}")))
    })()));

    out.push(Check::from_result("L odd, increasing, unbounded", (|| {
        let p = make_params(1.0, 8.0)?;
        let mut ok = true;
        let mut prev = f64::NEG_INFINITY;
        for i in -60..=60 {
            let x = 0.1 * i as f64;
            let l = l_function(&p, x)?;
            ok &= l_function(&p, -x)? == -l && l > prev;
            prev = l;
        }
        ok &= l_function(&p, 200.0)? > 1e100;
        Ok((ok, String::new()))
    })()));

    out.push(Check::from_result("ζ bound: 0.99 regular, 1.01 singular", (|| {
        let xs = span(&fig, 40.0, 0.05);
        let b = zeta_bound(&fig);
        let inside = plus_denominator_min(&fig, 0.99 * b, &xs)?.min(plus_denominator_min(&fig, -0.99 * b, &xs)?);
        let outside = plus_denominator_min(&fig, 1.01 * b, &xs)?.max(plus_denominator_min(&fig, -1.01 * b, &xs)?);
        Ok((inside >= 0.01 - 1e-12 && outside < 0.0, format!("min at 0.99: {inside:.4}, at 1.01: {outside:.4}")))
    })()));

    out.push(Check::from_result("plus isospectrality, 5 ζ", (|| {
        let b = zeta_bound(&fig);
        let (worst, counts) = plus_isospectrality(&fig, &[-0.9 * b, -0.3 * b, 0.0, 0.0937, 0.95 * b], 0.1)?;
        Ok((worst <= tol.isospectral && counts, format!("max dev {worst:.2e}")))
    })()));

    out.push(Check::from_result("minus ξ=0 deletes the ground level", (|| {
        let mut worst = 0.0f64;
        let mut counts = true;
        for (alpha, g) in [(0.1, 1.2), (1.0, 8.0), (0.3, 9.0)] {
            let (w, c) = minus_isospectrality(&make_params(alpha, g)?, 0.02 / alpha)?;
            worst = worst.max(w);
            counts &= c;
        }
        Ok((worst <= tol.isospectral && counts, format!("max dev {worst:.2e}")))
    })()));

    out.push(Check::from_result("missing state", (|| {
        let r = missing_state_report(&fig, 0.0937, 0.1)?;
        let ok = r.norm_error <= 1e-8 && r.annihilation_residual <= 1e-8 && r.overlap >= 1.0 - 1e-6;
        Ok((ok, format!("norm {:.1e}, residual {:.1e}, overlap {:.9}", r.norm_error, r.annihilation_residual, r.overlap)))
    })()));

    out.push(Check::from_result("intertwiners", (|| {
        let grid = Grid::for_well(0.1, Some(-0.01), 0.05)?;
        let psi0: Vec<f64> = grid.points().map(|x| ground_state(&fig, x)).collect();
        let minus = SusyBranchConfig::minus(0.0);
        let annihilated = matches!(
            apply_intertwiner(|x| beta(&fig, minus, x), &psi0, &grid, 1e-6),
            Err(Error::Degenerate { .. })
        );
        let s = bound_spectrum(|x| pt_potential(&fig, x), &grid, &SpectrumOptions::for_alpha(0.1))?;
        let plus = SusyBranchConfig::plus(0.0937);
        let image = apply_intertwiner(|x| beta(&fig, plus, x), &s.states[0], &grid, DEGENERATE_NORM)?;
        let vt = sample(&|x| partner_potential(&fig, plus, x).unwrap_or(f64::NAN), &grid)?;
        let r = hamiltonian_residual(&vt, grid.h(), s.energies[0], &image.values);
        let norm = (r.iter().map(|v| v * v).sum::<f64>() * grid.h()).sqrt();
        Ok((annihilated && norm < 1e-5, format!("minus annihilates {}, plus residual {norm:.1e}", fmt_ok(annihilated))))
    })()));

    out.push(Check::from_result("transparency and unitarity", (|| {
        let mut worst_r = 0.0f64;
        let mut unitarity = 0.0f64;
        let grid = Grid::symmetric(250.0, 25001)?;
        for e in [0.01, 0.05, 0.2] {
            let s = reflection_coefficient(|x| pt_potential(&fig, x), e, &grid)?;
            worst_r = worst_r.max(s.reflection);
            unitarity = unitarity.max((s.reflection + s.transmission - 1.0).abs());
        }
        let p = make_params(1.0, 8.0)?;
        let s = reflection_coefficient(|x| pt_potential(&p, x), 0.5, &Grid::symmetric(25.0, 2501)?)?;
        unitarity = unitarity.max((s.reflection + s.transmission - 1.0).abs());
        let ok = worst_r < 1e-4 && s.reflection > 1e-3 && unitarity <= 1e-6;
        Ok((ok, format!("λ=3 max |R|² {worst_r:.1e}, λ=2.5616 |R|² {:.6}, unitarity {unitarity:.1e}", s.reflection)))
    })()));

    out.push(Check::from_result("δ-limit of the minus branch", (|| {
        let gaps: Vec<f64> = [10.0, 50.0, 200.0]
            .into_iter()
            .map(|a| delta_limit_gap(a, 1.0, -0.05).map(|g| g.0))
            .collect::<Result<_, _>>()?;
        let p = make_params(200.0, 1.0)?;
        let pointwise = (beta(&p, SusyBranchConfig::minus(-0.05), 1.0)? - delta_susy_beta(1.0, -0.05, 1.0)?).abs();
        let xs = delta_singular_point(1.0, -0.05).unwrap_or(f64::NAN);
        let ok = gaps[0] > gaps[1] && gaps[1] > gaps[2] && pointwise < 1e-3 && (xs + 21f64.ln()).abs() <= 1e-10;
        Ok((ok, format!("sup gaps {:.2e} {:.2e} {:.2e}, β(1) gap {pointwise:.1e}", gaps[0], gaps[1], gaps[2])))
    })()));

    out.push(Check::from_result("plus-branch depth diverges with α", (|| {
        let depth = |a: f64| -> Result<f64, Error> {
            Ok(partner_potential(&make_params(a, 1.0)?, SusyBranchConfig::plus(0.0), 0.0)?.abs())
        };
        let d = [1.0, 10.0, 50.0, 200.0].map(depth);
        let d: Vec<f64> = d.into_iter().collect::<Result<_, _>>()?;
        Ok((d.windows(2).all(|w| w[1] > w[0]), format!("{:.3e} {:.3e} {:.3e} {:.3e}", d[0], d[1], d[2], d[3])))
    })()));

    out.push(Check::from_result("2-SUSY particular identity", (|| {
        let worst = two_susy_gap(&fig)?.max(two_susy_gap(&make_params(1.0, 8.0)?)?);
        let lead = two_susy_potential(&fig, 0.0, 0.0, 1e-4)? * 1e-8 / 2.0;
        Ok((worst <= 1e-9 && (lead - 1.0).abs() < 1e-4, format!("gap {worst:.1e}, x²V/2 at 1e-4: {lead:.8}")))
    })()));

    out
}
