//! Figure presets and the shape features asserted on their output.

use std::str::FromStr;

use susypt::oracle::Grid;
use susypt::susy::{make_params, zeta_from_left_origin, PTParams, SusyBranchConfig};

use crate::curve::Curve;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fig1" => Ok(Preset::Fig1),
            "fig2" => Ok(Preset::Fig2),
            "fig3" => Ok(Preset::Fig3),
            "fig4" => Ok(Preset::Fig4),
            other => Err(format!("unknown preset {other:?} (expected fig1..fig4)")),
        }
    }
}

/// A curve to write into `file` on `grid`.
#[derive(Debug, Clone, PartialEq)]
pub struct PresetCurve {
    pub file: String,
    pub curve: Curve,
    pub grid: Grid,
}

/// Deformation of the fig2 preset, quoted with M measured from -∞.
pub const FIG2_ZETA_LEFT: f64 = 0.0937;
/// Common strength of the three fig3 wells.
pub const FIG3_G: f64 = 8.0;
pub const FIG3_ALPHAS: [f64; 3] = [1.0, 3.0, 6.0];
pub const FIG4: (f64, f64, f64) = (1.9, 1.0, -0.05);

fn params(alpha: f64, g: f64) -> PTParams {
    make_params(alpha, g).expect("preset parameters are valid")
}

fn grid(a: f64, b: f64, n: usize) -> Grid {
    Grid::new(a, b, n).expect("preset grid is valid")
}

pub fn fig2_params() -> (PTParams, SusyBranchConfig) {
    let p = PTParams::from_lambda(0.1, 3.0).expect("valid");
    (p, SusyBranchConfig::plus(zeta_from_left_origin(&p, FIG2_ZETA_LEFT)))
}

pub fn curves(preset: Preset) -> Vec<PresetCurve> {
    match preset {
        Preset::Fig1 => {
            let p = PTParams::from_lambda(0.1, 3.0).expect("valid");
            vec![PresetCurve { file: "fig1_m.csv".into(), curve: Curve::M(p), grid: grid(-60.0, 60.0, 1201) }]
        }
        Preset::Fig2 => {
            let (p, cfg) = fig2_params();
            vec![PresetCurve {
                file: "fig2_partner_plus.csv".into(),
                curve: Curve::Partner(p, cfg),
                grid: grid(-50.0, 50.0, 2001),
            }]
        }
        Preset::Fig3 => FIG3_ALPHAS
            .iter()
            .flat_map(|&alpha| {
                let p = params(alpha, FIG3_G);
                let g = grid(-3.0, 3.0, 1201);
                [
                    PresetCurve { file: format!("fig3_alpha{alpha}_v.csv"), curve: Curve::Potential(p), grid: g },
                    PresetCurve {
                        file: format!("fig3_alpha{alpha}_partner_minus.csv"),
                        curve: Curve::Partner(p, SusyBranchConfig::minus(0.0)),
                        grid: g,
                    },
                ]
            })
            .collect(),
        Preset::Fig4 => {
            let (alpha, g, xi) = FIG4;
            // an even point count keeps x = 0, the support of the δ term, off the grid
            let range = grid(-2.8, 3.0, 1160);
            vec![
                PresetCurve {
                    file: "fig4_finite_alpha.csv".into(),
                    curve: Curve::Partner(params(alpha, g), SusyBranchConfig::minus(xi)),
                    grid: range,
                },
                PresetCurve {
                    file: "fig4_delta_limit_regular.csv".into(),
                    curve: Curve::DeltaRegular { g, xi },
                    grid: range,
                },
            ]
        }
    }
}

/// Indices of strict interior local minima.
pub fn local_minima(values: &[f64]) -> Vec<usize> {
    (1..values.len().saturating_sub(1))
        .filter(|&i| values[i] < values[i - 1] && values[i] < values[i + 1])
        .collect()
}

/// Shape of an M curve on a grid symmetric about 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmoidReport {
    /// max |y(x) + y(-x)|
    pub odd_defect: f64,
    pub increasing: bool,
    /// convex on x < 0, concave on x > 0
    pub s_shaped: bool,
    pub left_plateau: f64,
    pub right_plateau: f64,
}

pub fn sigmoid_report(rows: &[(f64, f64)]) -> CliResult<SigmoidReport> {
    let n = rows.len();
    if n < 5 || (rows[0].0 + rows[n - 1].0).abs() > 1e-9 * rows[0].0.abs() {
        return Err(CliError::Config("sigmoid check needs a symmetric grid".into()));
    }
    let y: Vec<f64> = rows.iter().map(|r| r.1).collect();
    let odd_defect = (0..n).map(|i| (y[i] + y[n - 1 - i]).abs()).fold(0.0, f64::max);
    let increasing = y.windows(2).all(|w| w[1] >= w[0]) && y[n - 1] > y[0];
    // second differences below rounding count as flat
    let noise = 1e-12 * y[n - 1].abs().max(1.0);
    let s_shaped = (1..n - 1).all(|i| {
        let d2 = y[i - 1] - 2.0 * y[i] + y[i + 1];
        let x = rows[i].0;
        if x < 0.0 {
            d2 >= -noise
        } else if x > 0.0 {
            d2 <= noise
        } else {
            true
        }
    });
    Ok(SigmoidReport { odd_defect, increasing, s_shaped, left_plateau: y[0], right_plateau: y[n - 1] })
}
