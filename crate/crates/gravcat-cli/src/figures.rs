//! Preset sweep families.
//!
//! Each figure is a family of sweeps sharing one swept variable, with the
//! remaining inputs fixed and one input stepped through a small curve set.
//! Defaults below are the values used for the shipped data set; the step
//! count and the curve set are both overridable. Every preset keeps
//! omega = 0.05 and delta = 0.05 for figures 1 to 3, and B = b = T = 0.5
//! for figure 4, unless the curve variable replaces that slot.

use std::path::{Path, PathBuf};

use crate::emit::{emit_csv, emit_plot_script, CurveFile};
use crate::run::{run_sweep, BasePoint, RowOptions, SweepSpec, Variable};
use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FigureName {
    #[value(name = "fig1a")]
    Fig1a,
    #[value(name = "fig1b")]
    Fig1b,
    #[value(name = "fig2a")]
    Fig2a,
    #[value(name = "fig2b")]
    Fig2b,
    #[value(name = "fig3a")]
    Fig3a,
    #[value(name = "fig3b")]
    Fig3b,
    #[value(name = "fig4a")]
    Fig4a,
    #[value(name = "fig4b")]
    Fig4b,
}

impl FigureName {
    pub fn as_str(self) -> &'static str {
        match self {
            FigureName::Fig1a => "fig1a",
            FigureName::Fig1b => "fig1b",
            FigureName::Fig2a => "fig2a",
            FigureName::Fig2b => "fig2b",
            FigureName::Fig3a => "fig3a",
            FigureName::Fig3b => "fig3b",
            FigureName::Fig4a => "fig4a",
            FigureName::Fig4b => "fig4b",
        }
    }
}

/// Static shape of one preset: what is swept, what labels the curves, and
/// where the remaining inputs sit.
struct PresetShape {
    swept: Variable,
    start: f64,
    stop: f64,
    steps: usize,
    curve_variable: Variable,
    curve_values: &'static [f64],
    base: BasePoint,
}

// Shared default point: weak coupling and offset for figures 1 to 3, and
// B = b = T = 0.5 for figure 4. Swept and curve variables overwrite their
// slots, so the two families can share one base.
const DEFAULT_BASE: BasePoint = BasePoint {
    omega: 0.05,
    delta: 0.05,
    uniform_field: 0.5,
    imbalance: 0.5,
    temperature: 0.5,
};

const FIELD_CURVES: &[f64] = &[0.1, 0.5, 1.0, 2.0];
const TEMPERATURE_CURVES: &[f64] = &[0.1, 0.5, 1.0, 2.0];
const FIG3A_FIELD_CURVES: &[f64] = &[0.0, 0.5, 1.0, 2.0];
const OMEGA_CURVES: &[f64] = &[0.05, 0.5, 1.0, 2.0];
const DELTA_CURVES: &[f64] = &[0.1, 0.5, 1.0, 2.0];

fn shape(name: FigureName) -> PresetShape {
    match name {
        // Thermal profiles: LQU vs T. The grid starts at T = 0.01, not 0;
        // the zero-temperature limit is reachable through `point --T 0`.
        FigureName::Fig1a => PresetShape {
            swept: Variable::Temperature,
            start: 0.01,
            stop: 5.0,
            steps: 500,
            curve_variable: Variable::UniformField,
            curve_values: FIELD_CURVES,
            base: DEFAULT_BASE,
        },
        FigureName::Fig1b => PresetShape {
            swept: Variable::Temperature,
            start: 0.01,
            stop: 5.0,
            steps: 500,
            curve_variable: Variable::Imbalance,
            curve_values: FIELD_CURVES,
            base: DEFAULT_BASE,
        },
        // Uniform-field profiles: LQU vs B.
        FigureName::Fig2a => PresetShape {
            swept: Variable::UniformField,
            start: -3.0,
            stop: 3.0,
            steps: 601,
            curve_variable: Variable::Imbalance,
            curve_values: FIELD_CURVES,
            base: DEFAULT_BASE,
        },
        FigureName::Fig2b => PresetShape {
            swept: Variable::UniformField,
            start: -3.0,
            stop: 3.0,
            steps: 601,
            curve_variable: Variable::Temperature,
            curve_values: TEMPERATURE_CURVES,
            base: DEFAULT_BASE,
        },
        // Imbalance profiles: LQU vs b, symmetric about b = 0.
        FigureName::Fig3a => PresetShape {
            swept: Variable::Imbalance,
            start: -2.0,
            stop: 2.0,
            steps: 401,
            curve_variable: Variable::UniformField,
            curve_values: FIG3A_FIELD_CURVES,
            base: DEFAULT_BASE,
        },
        FigureName::Fig3b => PresetShape {
            swept: Variable::Imbalance,
            start: -2.0,
            stop: 2.0,
            steps: 401,
            curve_variable: Variable::Temperature,
            curve_values: TEMPERATURE_CURVES,
            base: DEFAULT_BASE,
        },
        // Coupling profiles: LQU vs delta, and vs the energy offset omega.
        FigureName::Fig4a => PresetShape {
            swept: Variable::Delta,
            start: -3.0,
            stop: 3.0,
            steps: 601,
            curve_variable: Variable::Omega,
            curve_values: OMEGA_CURVES,
            base: DEFAULT_BASE,
        },
        FigureName::Fig4b => PresetShape {
            swept: Variable::Omega,
            start: 0.0,
            stop: 5.0,
            steps: 501,
            curve_variable: Variable::Delta,
            curve_values: DELTA_CURVES,
            base: DEFAULT_BASE,
        },
    }
}

/// One curve of a preset figure.
#[derive(Debug, Clone)]
pub struct FigureCurve {
    /// Legend label, e.g. `B=0.5`.
    pub label: String,
    /// CSV file stem, e.g. `fig1a_B_0.5`.
    pub file_stem: String,
    pub spec: SweepSpec,
}

/// Expand a preset into its sweep specs. `steps` and `curves` override the
/// preset defaults for every curve; the swept range is part of the preset.
pub fn preset(
    name: FigureName,
    steps: Option<usize>,
    curves: Option<&[f64]>,
) -> Result<Vec<FigureCurve>> {
    let shape = shape(name);
    let curve_values: Vec<f64> = match curves {
        Some(values) => values.to_vec(),
        None => shape.curve_values.to_vec(),
    };
    if curve_values.len() < 2 {
        return Err(CliError::usage(format!(
            "figure {} needs at least 2 curves (got {})",
            name.as_str(),
            curve_values.len()
        )));
    }

    let steps = steps.unwrap_or(shape.steps);
    let mut out = Vec::with_capacity(curve_values.len());
    for value in curve_values {
        let spec = SweepSpec::new(
            shape.swept,
            shape.start,
            shape.stop,
            steps,
            shape.base.with(shape.curve_variable, value),
            RowOptions::default(),
        )?;
        let var = shape.curve_variable.column_name();
        out.push(FigureCurve {
            label: format!("{var}={value}"),
            file_stem: format!("{}_{var}_{value}", name.as_str()),
            spec,
        });
    }
    Ok(out)
}

/// Compute a figure and write one CSV per curve plus a gnuplot script into
/// `out_dir`. Returns the written paths, script last. Identical inputs
/// produce byte-identical files.
pub fn write_figure(
    name: FigureName,
    out_dir: &Path,
    workers: usize,
    steps: Option<usize>,
    curves: Option<&[f64]>,
) -> Result<Vec<PathBuf>> {
    let curves = preset(name, steps, curves)?;
    std::fs::create_dir_all(out_dir).map_err(|source| CliError::Io {
        path: out_dir.to_path_buf(),
        source,
    })?;

    let mut written = Vec::with_capacity(curves.len() + 1);
    let mut curve_files = Vec::with_capacity(curves.len());
    let mut swept = None;
    for curve in &curves {
        let rows = run_sweep(&curve.spec, workers)?;
        let bytes = emit_csv(&rows)?;
        let csv_name = format!("{}.csv", curve.file_stem);
        let path = out_dir.join(&csv_name);
        std::fs::write(&path, bytes).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        written.push(path);
        curve_files.push(CurveFile {
            label: curve.label.clone(),
            csv: csv_name,
        });
        swept = Some(curve.spec.variable);
    }

    let script = emit_plot_script(name.as_str(), swept.expect("at least 2 curves"), &curve_files)?;
    let script_path = out_dir.join(format!("{}.plt", name.as_str()));
    std::fs::write(&script_path, script).map_err(|source| CliError::Io {
        path: script_path.clone(),
        source,
    })?;
    written.push(script_path);
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_expands_with_at_least_two_curves() {
        let names = [
            FigureName::Fig1a,
            FigureName::Fig1b,
            FigureName::Fig2a,
            FigureName::Fig2b,
            FigureName::Fig3a,
            FigureName::Fig3b,
            FigureName::Fig4a,
            FigureName::Fig4b,
        ];
        for name in names {
            let curves = preset(name, None, None).unwrap();
            assert!(curves.len() >= 2, "{} has too few curves", name.as_str());
            for curve in &curves {
                assert!(curve.spec.steps >= 2);
                assert!(curve.spec.start < curve.spec.stop);
            }
        }
    }

    #[test]
    fn temperature_presets_start_strictly_above_zero() {
        for name in [FigureName::Fig1a, FigureName::Fig1b] {
            for curve in preset(name, None, None).unwrap() {
                assert_eq!(curve.spec.start, 0.01);
            }
        }
    }

    #[test]
    fn fig3a_curves_vary_the_uniform_field() {
        let curves = preset(FigureName::Fig3a, Some(5), None).unwrap();
        let fields: Vec<f64> = curves.iter().map(|c| c.spec.base.uniform_field).collect();
        assert_eq!(fields, vec![0.0, 0.5, 1.0, 2.0]);
        assert_eq!(curves[0].label, "B=0");
        assert_eq!(curves[1].file_stem, "fig3a_B_0.5");
        for curve in &curves {
            assert_eq!(curve.spec.base.omega, 0.05);
            assert_eq!(curve.spec.base.delta, 0.05);
            assert_eq!(curve.spec.base.temperature, 0.5);
        }
    }

    #[test]
    fn overrides_replace_steps_and_curves() {
        let curves = preset(FigureName::Fig4b, Some(11), Some(&[0.3, 0.7])).unwrap();
        assert_eq!(curves.len(), 2);
        assert_eq!(curves[0].spec.steps, 11);
        assert_eq!(curves[0].spec.base.delta, 0.3);
        assert_eq!(curves[1].label, "delta=0.7");
        assert!(preset(FigureName::Fig4b, None, Some(&[0.3])).is_err());
    }

    #[test]
    fn figure_files_are_reproducible() {
        let dir = std::env::temp_dir().join(format!("gravcat-figtest-{}", std::process::id()));
        let first = write_figure(FigureName::Fig3a, &dir, 2, Some(9), Some(&[0.5, 1.0])).unwrap();
        let bytes_first: Vec<Vec<u8>> = first.iter().map(|p| std::fs::read(p).unwrap()).collect();
        let second = write_figure(FigureName::Fig3a, &dir, 1, Some(9), Some(&[0.5, 1.0])).unwrap();
        let bytes_second: Vec<Vec<u8>> = second.iter().map(|p| std::fs::read(p).unwrap()).collect();
        assert_eq!(first, second);
        assert_eq!(bytes_first, bytes_second);
        assert_eq!(first.len(), 3);
        assert!(first[2].ends_with("fig3a.plt"));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
