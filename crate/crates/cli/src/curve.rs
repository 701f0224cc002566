//! Sampled curves and their CSV form.

use std::io::{BufRead, Write};

use susypt::oracle::Grid;
use susypt::susy::{
    beta, delta_singular_point, delta_susy_potential_regular, l_function, m_function,
    missing_state, partner_potential, pt_potential, singular_point, two_susy_potential,
    Branch, PTParams, SusyBranchConfig,
};

use crate::error::{CliError, CliResult};

/// One plottable function of x together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Curve {
    Potential(PTParams),
    Partner(PTParams, SusyBranchConfig),
    M(PTParams),
    L(PTParams),
    Beta(PTParams, SusyBranchConfig),
    MissingState(PTParams, f64),
    TwoSusy { params: PTParams, zeta: f64, xi: f64 },
    /// Regular part of the δ-well partner; the +gδ(x) term is left out.
    DeltaRegular { g: f64, xi: f64 },
}

impl Curve {
    pub fn eval(&self, x: f64) -> susypt::Result<f64> {
        match *self {
            Curve::Potential(p) => Ok(pt_potential(&p, x)),
            Curve::Partner(p, cfg) => partner_potential(&p, cfg, x),
            Curve::M(p) => m_function(&p, x),
            Curve::L(p) => l_function(&p, x),
            Curve::Beta(p, cfg) => beta(&p, cfg, x),
            Curve::MissingState(p, zeta) => missing_state(&p, zeta, x),
            Curve::TwoSusy { params, zeta, xi } => two_susy_potential(&params, zeta, xi, x),
            Curve::DeltaRegular { g, xi } => delta_susy_potential_regular(g, xi, x),
        }
    }

    /// Singular points of the curve that lie in [a, b].
    pub fn singularities_in(&self, a: f64, b: f64) -> CliResult<Vec<f64>> {
        let inside = |x: &f64| *x >= a && *x <= b;
        let found = match *self {
            Curve::Partner(p, cfg) | Curve::Beta(p, cfg) => singular_point(&p, cfg)?.into_iter().collect(),
            Curve::TwoSusy { params, zeta, xi } => {
                let mut v: Vec<f64> = [
                    singular_point(&params, SusyBranchConfig::plus(zeta))?,
                    singular_point(&params, SusyBranchConfig::minus(xi))?,
                ]
                .into_iter()
                .flatten()
                .collect();
                v.extend(two_susy_poles(&params, zeta, xi, a, b)?);
                v
            }
            Curve::DeltaRegular { g, xi } => delta_singular_point(g, xi).into_iter().collect(),
            _ => Vec::new(),
        };
        Ok(found.into_iter().filter(inside).collect())
    }
}

/// Zeros of β⁺ - β⁻ in [a, b], located by a scan and bisection.
fn two_susy_poles(p: &PTParams, zeta: f64, xi: f64, a: f64, b: f64) -> CliResult<Vec<f64>> {
    let diff = |x: f64| -> susypt::Result<f64> {
        Ok(beta(p, SusyBranchConfig::plus(zeta), x)? - beta(p, SusyBranchConfig::minus(xi), x)?)
    };
    let steps = 4000;
    let h = (b - a) / steps as f64;
    let mut poles = Vec::new();
    let mut prev = diff(a);
    for i in 1..=steps {
        let x = a + i as f64 * h;
        let cur = diff(x);
        if let (Ok(u), Ok(v)) = (&prev, &cur) {
            if *v == 0.0 {
                poles.push(x);
            } else if u.signum() != v.signum() && *u != 0.0 {
                let (mut lo, mut hi) = (x - h, x);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    match diff(mid) {
                        Ok(m) if m.signum() == u.signum() => lo = mid,
                        _ => hi = mid,
                    }
                }
                poles.push(0.5 * (lo + hi));
            }
        }
        prev = cur;
    }
    Ok(poles)
}

/// Samples `curve` on every grid point. A singularity inside the range is an
/// error carrying its location.
pub fn sample_curve(curve: &Curve, grid: &Grid) -> CliResult<Vec<(f64, f64)>> {
    if let Some(&x) = curve.singularities_in(grid.x_min(), grid.x_max())?.first() {
        return Err(CliError::Singular {
            x,
            context: format!("grid [{}, {}]", grid.x_min(), grid.x_max()),
        });
    }
    grid.points()
        .map(|x| {
            let y = curve.eval(x).map_err(|e| match e {
                susypt::Error::Domain(msg) if matches!(curve, Curve::DeltaRegular { .. }) && x == 0.0 => {
                    CliError::Config(format!("{msg}; choose a grid that avoids x = 0"))
                }
                other => CliError::from(other),
            })?;
            Ok((x, y))
        })
        .collect()
}

pub fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Plus => "plus",
        Branch::Minus => "minus",
    }
}

/// Locale-independent formatting with 17 significant digits, which
/// round-trips every f64.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv<W: Write>(out: &mut W, header: &str, rows: &[(f64, f64)]) -> std::io::Result<()> {
    writeln!(out, "{header}")?;
    for (x, y) in rows {
        writeln!(out, "{},{}", format_value(*x), format_value(*y))?;
    }
    Ok(())
}

/// Reads an `x,value` file written by [`write_csv`].
pub fn read_csv<R: BufRead>(input: R) -> CliResult<Vec<(f64, f64)>> {
    let mut rows = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if i == 0 || line.trim().is_empty() {
            continue;
        }
        let (x, y) = line
            .split_once(',')
            .ok_or_else(|| CliError::Config(format!("line {}: expected two columns", i + 1)))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| CliError::Config(format!("line {}: {e}", i + 1)))
        };
        rows.push((parse(x)?, parse(y)?));
    }
    Ok(rows)
}
