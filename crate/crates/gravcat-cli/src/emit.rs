//! CSV and plot-script emission.
//!
//! Everything here is deterministic: fixed header, fixed column order,
//! 17-significant-digit scientific floats (lossless f64 round trip), LF
//! line endings, no locale. Emitting the same rows twice yields the same
//! bytes.

use gravcat_core::Branch;

use crate::run::{SweepRow, Variable};
use crate::{CliError, Result};

/// Column order of every emitted CSV.
pub const CSV_HEADER: &str =
    "omega,delta,B,b,T,Z,lqu_exact,lqu_paper,branch_exact,w1,w3,concurrence,oracle_min,purity";

/// Emission-time recheck of the defining identity of each row.
pub const ROW_INVARIANT_TOL: f64 = 1e-14;

/// Scientific notation with 16 fractional digits: 17 significant digits,
/// enough for `f64` to round-trip exactly. Infinities print as `inf`.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn optional_cell(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

pub fn branch_label(branch: Branch) -> &'static str {
    match branch {
        Branch::W1 => "W1",
        Branch::W3 => "W3",
    }
}

/// Render rows to CSV bytes.
///
/// Rejects an empty row set, and rechecks `lqu_exact = 1 - max(w1, w3)`
/// on every row before anything is written.
pub fn emit_csv(rows: &[SweepRow]) -> Result<Vec<u8>> {
    if rows.is_empty() {
        return Err(CliError::usage("refusing to emit a CSV with no rows"));
    }
    for (index, row) in rows.iter().enumerate() {
        let deviation = (row.lqu_exact - (1.0 - row.w1.max(row.w3))).abs();
        // The comparison is false for NaN, so a poisoned row is rejected too.
        let in_tolerance = deviation <= ROW_INVARIANT_TOL;
        if !in_tolerance {
            return Err(CliError::RowInvariant { index, deviation });
        }
    }

    let mut out = String::with_capacity((rows.len() + 1) * 300);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let cells = [
            format_float(row.omega),
            format_float(row.delta),
            format_float(row.uniform_field),
            format_float(row.imbalance),
            format_float(row.temperature),
            format_float(row.partition),
            format_float(row.lqu_exact),
            format_float(row.lqu_paper),
            branch_label(row.branch_exact).to_string(),
            format_float(row.w1),
            format_float(row.w3),
            optional_cell(row.concurrence),
            optional_cell(row.oracle_min),
            format_float(row.purity),
        ];
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    Ok(out.into_bytes())
}

/// One curve of a figure: legend label plus the CSV file (relative to the
/// script) holding its rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFile {
    pub label: String,
    pub csv: String,
}

/// Render a gnuplot script plotting LQU against the swept variable, one
/// pair of series per curve: the exact value solid, the
/// density-substituted variant dashed. The script reads the CSV files
/// sitting next to it.
pub fn emit_plot_script(name: &str, swept: Variable, curves: &[CurveFile]) -> Result<String> {
    if curves.is_empty() {
        return Err(CliError::usage(format!(
            "figure {name} has no curves to plot"
        )));
    }
    let x = swept.column_index();
    let mut out = String::new();
    out.push_str(&format!("# {name}: local quantum uncertainty vs {}\n", swept.column_name()));
    out.push_str("# Generated data; regenerating with the same inputs reproduces this file.\n");
    out.push_str("set datafile separator \",\"\n");
    out.push_str("set key top right\n");
    out.push_str(&format!("set xlabel \"{}\"\n", swept.column_name()));
    out.push_str("set ylabel \"LQU\"\n");
    out.push_str(&format!("set output \"{name}.png\"\n"));
    out.push_str("set terminal pngcairo size 900,600\n");
    out.push_str("plot \\\n");
    let mut lines = Vec::with_capacity(curves.len() * 2);
    for curve in curves {
        lines.push(format!(
            "  \"{}\" using {x}:7 with lines lw 2 dt 1 title \"{} exact\"",
            curve.csv, curve.label
        ));
        lines.push(format!(
            "  \"{}\" using {x}:8 with lines lw 2 dt 2 title \"{} substituted\"",
            curve.csv, curve.label
        ));
    }
    out.push_str(&lines.join(", \\\n"));
    out.push('\n');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::run::{run_point, BasePoint, RowOptions};

    fn sample_row() -> SweepRow {
        run_point(
            BasePoint {
                omega: 0.05,
                delta: 0.05,
                uniform_field: 0.5,
                imbalance: 0.5,
                temperature: 0.5,
            },
            &RowOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn floats_round_trip_through_the_formatter() {
        let cases = [
            0.0,
            -0.0,
            0.5,
            1.0 / 3.0,
            6.4471112281657978,
            f64::MIN_POSITIVE,
            1e300,
            -2.2250738585072014e-308,
            f64::INFINITY,
        ];
        for x in cases {
            let parsed: f64 = format_float(x).parse().unwrap();
            assert_eq!(parsed.to_bits(), x.to_bits(), "{x} failed to round-trip");
        }
    }

    #[test]
    fn csv_has_fixed_header_and_lf_endings() {
        let bytes = emit_csv(&[sample_row()]).unwrap();
        let text = String::from_utf8(bytes).unwrap();
        assert!(text.starts_with(CSV_HEADER));
        assert!(!text.contains('\r'));
        assert_eq!(text.lines().count(), 2);
        let row = text.lines().nth(1).unwrap();
        assert_eq!(row.split(',').count(), CSV_HEADER.split(',').count());
        assert!(row.contains(",W1,"));
    }

    #[test]
    fn optional_cells_are_empty_when_absent() {
        let mut row = sample_row();
        row.oracle_min = None;
        row.concurrence = None;
        let text = String::from_utf8(emit_csv(&[row]).unwrap()).unwrap();
        let cells: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(cells[11], "");
        assert_eq!(cells[12], "");
    }

    #[test]
    fn empty_row_set_is_rejected() {
        match emit_csv(&[]) {
            Err(CliError::Usage { .. }) => {}
            other => panic!("expected a usage error, got {other:?}"),
        }
    }

    #[test]
    fn corrupted_row_fails_the_emission_recheck() {
        let mut row = sample_row();
        row.lqu_exact += 1e-9;
        match emit_csv(&[row]) {
            Err(CliError::RowInvariant { index: 0, deviation }) => {
                assert!(deviation > 1e-10);
            }
            other => panic!("expected an invariant failure, got {other:?}"),
        }
    }

    #[test]
    fn plot_script_is_deterministic_and_references_curves() {
        let curves = vec![
            CurveFile {
                label: "B=0.5".into(),
                csv: "fig1a_B_0.5.csv".into(),
            },
            CurveFile {
                label: "B=1".into(),
                csv: "fig1a_B_1.csv".into(),
            },
        ];
        let a = emit_plot_script("fig1a", Variable::Temperature, &curves).unwrap();
        let b = emit_plot_script("fig1a", Variable::Temperature, &curves).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("fig1a_B_0.5.csv"));
        assert!(a.contains("using 5:7"));
        assert!(a.contains("using 5:8"));
        assert!(emit_plot_script("fig1a", Variable::Temperature, &[]).is_err());
    }
}
