use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use susypt::checks::{partner_grid, partner_spectrum_with};
use susypt::oracle::{bound_spectrum, reflection_coefficient, Grid, NumericSpectrum, SpectrumOptions};
use susypt::susy::*;

use crate::args::*;
use crate::curve::{branch_name, format_value, sample_curve, write_csv, Curve};
use crate::error::{CliError, CliResult};
use crate::presets;
use crate::verify::{self, Tolerances};

pub fn run<W: Write>(cli: Cli, out: &mut W) -> CliResult<()> {
    match cli.command {
        Command::Spectrum(a) => spectrum(&a, out),
        Command::Curve(a) => curve(&a, out),
        Command::Verify(a) => run_verify(&a, out),
        Command::DeltaLimit(a) => delta_limit(&a, out),
        Command::Scatter(a) => scatter(&a, out),
    }
}

pub fn well_params(w: &WellArgs) -> CliResult<PTParams> {
    let alpha = w.alpha.ok_or_else(|| CliError::Config("--alpha is required".into()))?;
    let p = match (w.g, w.lambda) {
        (Some(g), None) => make_params(alpha, g)?,
        (None, Some(l)) => PTParams::from_lambda(alpha, l)?,
        _ => return Err(CliError::Config("give exactly one of --g and --lambda".into())),
    };
    Ok(p)
}

fn branch_config(p: &PTParams, d: &DeformationArgs, default: BranchArg) -> CliResult<SusyBranchConfig> {
    let branch = d.branch.unwrap_or(default);
    if d.zeta_from_minus_infinity && branch != BranchArg::Plus {
        return Err(CliError::Config("--zeta-from-minus-infinity applies to the plus branch only".into()));
    }
    Ok(match branch {
        BranchArg::Plus if d.zeta_from_minus_infinity => {
            if d.deformation.abs() >= 0.5 * zeta_bound(p) {
                return Err(CliError::Config(format!(
                    "ζ measured from -∞ must stay below 1/(2M∞) = {}",
                    0.5 * zeta_bound(p)
                )));
            }
            SusyBranchConfig::plus(zeta_from_left_origin(p, d.deformation))
        }
        BranchArg::Plus => SusyBranchConfig::plus(d.deformation),
        BranchArg::Minus => SusyBranchConfig::minus(d.deformation),
    })
}

fn user_grid(g: &GridArgs) -> CliResult<Option<Grid>> {
    match (g.x_min, g.x_max, g.n) {
        (None, None, None) => Ok(None),
        (Some(a), Some(b), Some(n)) => Ok(Some(Grid::new(a, b, n)?)),
        _ => Err(CliError::Config("--x-min, --x-max and --n go together".into())),
    }
}

fn print_levels<W: Write>(out: &mut W, title: &str, expected: &[f64], numeric: &NumericSpectrum) -> CliResult<()> {
    writeln!(out, "# {title}")?;
    writeln!(out, "n,analytic,numeric,difference,marginal")?;
    let rows = expected.len().max(numeric.energies.len());
    let cell = |v: Option<&f64>| v.map(|e| format_value(*e)).unwrap_or_else(|| "-".into());
    for i in 0..rows {
        let (a, n) = (expected.get(i), numeric.energies.get(i));
        let diff = match (a, n) {
            (Some(a), Some(n)) => format!("{:.3e}", n - a),
            _ => "-".into(),
        };
        let marginal = numeric.marginal.get(i).map(|m| m.to_string()).unwrap_or_else(|| "-".into());
        writeln!(out, "{i},{},{},{diff},{marginal}", cell(a), cell(n))?;
    }
    writeln!(
        out,
        "# {} analytic, {} numeric ({} firm)",
        expected.len(),
        numeric.energies.len(),
        numeric.firm_count()
    )?;
    Ok(())
}

fn spectrum<W: Write>(a: &SpectrumArgs, out: &mut W) -> CliResult<()> {
    let p = well_params(&a.well)?;
    let cfg = branch_config(&p, &a.deformation, BranchArg::Minus)?;
    let mut opts = SpectrumOptions::for_alpha(p.alpha());
    if let Some(t) = a.tol {
        opts.tol = t;
    }
    let grid = match user_grid(&a.grid)? {
        Some(g) => g,
        None => partner_grid(&p, 0.05 / (p.alpha() * p.lambda()))?,
    };
    let exact = analytic_spectrum(&p).energies;
    let s = bound_spectrum(|x| pt_potential(&p, x), &grid, &opts)?;
    writeln!(out, "# alpha={} g={} lambda={}", p.alpha(), p.g(), p.lambda())?;
    print_levels(out, "V", &exact, &s)?;

    if let Some(x) = singular_point(&p, cfg)? {
        return Err(CliError::Singular { x, context: format!("{} partner is singular", branch_name(cfg.branch)) });
    }
    let expected: Vec<f64> = match cfg.branch {
        Branch::Plus => std::iter::once(factorization(&p).eps_plus).chain(exact.iter().copied()).collect(),
        Branch::Minus => exact[1..].to_vec(),
    };
    let ps = partner_spectrum_with(&p, cfg, &grid, &opts)?;
    let title = format!("partner {} deformation={}", branch_name(cfg.branch), cfg.deformation);
    print_levels(out, &title, &expected, &ps)
}

fn default_curve_grid(curve: &Curve) -> Grid {
    let reach = match curve {
        Curve::DeltaRegular { g, .. } => 3.0 / g,
        Curve::Potential(p)
        | Curve::Partner(p, _)
        | Curve::M(p)
        | Curve::L(p)
        | Curve::Beta(p, _)
        | Curve::MissingState(p, _)
        | Curve::TwoSusy { params: p, .. } => 6.0 / p.alpha(),
    };
    // even count: x = 0 is never a node
    Grid::symmetric(reach, 1000).expect("valid")
}

fn write_rows<W: Write>(path: Option<&Path>, rows: &[(f64, f64)], out: &mut W) -> CliResult<()> {
    match path {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path)?);
            write_csv(&mut f, "x,value", rows)?;
            f.flush()?;
        }
        None => write_csv(out, "x,value", rows)?,
    }
    Ok(())
}

fn curve<W: Write>(a: &CurveArgs, out: &mut W) -> CliResult<()> {
    if let Some(preset) = a.preset {
        std::fs::create_dir_all(&a.output_dir)?;
        for pc in presets::curves(preset) {
            let rows = sample_curve(&pc.curve, &pc.grid)?;
            let path = a.output_dir.join(&pc.file);
            write_rows(Some(&path), &rows, out)?;
            writeln!(out, "wrote {} ({} rows)", path.display(), rows.len())?;
        }
        return Ok(());
    }
    let quantity = a.quantity.ok_or_else(|| CliError::Config("give --quantity or --preset".into()))?;
    let curve = match quantity {
        Quantity::DeltaRegular => {
            let g = a.well.g.ok_or_else(|| CliError::Config("delta-regular needs --g".into()))?;
            delta_well(g)?;
            Curve::DeltaRegular { g, xi: a.deformation.deformation }
        }
        q => {
            let p = well_params(&a.well)?;
            let default = match q {
                Quantity::Partner | Quantity::Beta => BranchArg::Minus,
                _ => BranchArg::Plus,
            };
            let cfg = branch_config(&p, &a.deformation, default)?;
            match q {
                Quantity::V => Curve::Potential(p),
                Quantity::Partner => Curve::Partner(p, cfg),
                Quantity::M => Curve::M(p),
                Quantity::L => Curve::L(p),
                Quantity::Beta => Curve::Beta(p, cfg),
                Quantity::MissingState => {
                    if cfg.branch != Branch::Plus {
                        return Err(CliError::Config("the missing state belongs to the plus branch".into()));
                    }
                    if cfg.deformation.abs() >= zeta_bound(&p) {
                        return Err(CliError::Config(format!(
                            "|ζ| = {} is not below the bound {}",
                            cfg.deformation.abs(),
                            zeta_bound(&p)
                        )));
                    }
                    Curve::MissingState(p, cfg.deformation)
                }
                Quantity::TwoSusy => Curve::TwoSusy { params: p, zeta: cfg.deformation, xi: a.xi },
                Quantity::DeltaRegular => unreachable!(),
            }
        }
    };
    let grid = user_grid(&a.grid)?.unwrap_or_else(|| default_curve_grid(&curve));
    let rows = sample_curve(&curve, &grid)?;
    write_rows(a.output.as_deref(), &rows, out)
}

fn run_verify<W: Write>(a: &VerifyArgs, out: &mut W) -> CliResult<()> {
    let mut tol = Tolerances::default();
    if let Some(t) = a.tol {
        tol.eigen_rel = t;
    }
    let checks = verify::run_all(&tol, a.seed);
    for c in &checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{mark}  {}  {}", c.name, c.detail)?;
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} of {} checks passed", checks.len() - failed, checks.len())?;
    if failed > 0 {
        return Err(CliError::Verification { failed, total: checks.len() });
    }
    Ok(())
}

/// One row of the δ-limit sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub e0: f64,
    pub e0_numeric: f64,
    /// E₀ - E_δ
    pub e0_error: f64,
    pub psi0_rel_error: f64,
    pub beta_sup: f64,
    pub potential_sup: f64,
}

pub fn delta_sweep(g: f64, xi: f64, alphas: &[f64]) -> CliResult<Vec<SweepRow>> {
    let w = delta_well(g)?;
    alphas
        .iter()
        .map(|&alpha| {
            let p = make_params(alpha, g)?;
            let e0 = analytic_spectrum(&p).energies[0];
            let grid = Grid::for_well(alpha, Some(e0), 0.05 / (alpha * p.lambda()))?;
            let s = bound_spectrum(|x| pt_potential(&p, x), &grid, &SpectrumOptions::for_alpha(alpha))?;
            let e0_numeric = *s
                .energies
                .first()
                .ok_or_else(|| CliError::Numeric(susypt::Error::Convergence("no numeric level".into())))?;
            let psi0_rel_error = [0.5, 1.0, 2.0]
                .iter()
                .map(|&x| (ground_state(&p, x) / delta_ground_state(&w, x) - 1.0).abs())
                .fold(0.0, f64::max);
            let (potential_sup, beta_sup) = verify::delta_limit_gap(alpha, g, xi)?;
            Ok(SweepRow {
                alpha,
                e0,
                e0_numeric,
                e0_error: e0 - w.energy,
                psi0_rel_error,
                beta_sup,
                potential_sup,
            })
        })
        .collect()
}

fn delta_limit<W: Write>(a: &DeltaLimitArgs, out: &mut W) -> CliResult<()> {
    if a.alphas.iter().any(|x| !(*x > 0.0)) {
        return Err(CliError::Config("alphas must be positive".into()));
    }
    let rows = delta_sweep(a.g, a.xi, &a.alphas)?;
    let mut text = Vec::new();
    writeln!(text, "alpha,E0,E0_numeric,E0_minus_Edelta,alpha_times_gap,psi0_max_rel_error,beta_sup,potential_sup")?;
    for r in &rows {
        writeln!(
            text,
            "{},{},{},{},{},{},{},{}",
            format_value(r.alpha),
            format_value(r.e0),
            format_value(r.e0_numeric),
            format_value(r.e0_error),
            format_value(r.alpha * r.e0_error.abs()),
            format_value(r.psi0_rel_error),
            format_value(r.beta_sup),
            format_value(r.potential_sup)
        )?;
    }
    match &a.output {
        Some(path) => std::fs::write(path, &text)?,
        None => out.write_all(&text)?,
    }
    Ok(())
}

fn scatter<W: Write>(a: &ScatterArgs, out: &mut W) -> CliResult<()> {
    let p = well_params(&a.well)?;
    let grid = match user_grid(&a.grid)? {
        Some(g) => g,
        None => {
            let half = 25.0 / p.alpha();
            let e_max = a.energies.iter().copied().fold(0.0, f64::max);
            // resolve both the well and the shortest wavelength
            let h = (0.02 / p.alpha()).min(0.05 / e_max.sqrt().max(1e-12));
            Grid::symmetric(half, (2.0 * half / h).ceil() as usize + 1)?
        }
    };
    writeln!(out, "E,R2,T2")?;
    for &e in &a.energies {
        let s = reflection_coefficient(|x| pt_potential(&p, x), e, &grid)?;
        writeln!(out, "{},{},{}", format_value(e), format_value(s.reflection), format_value(s.transmission))?;
    }
    Ok(())
}
