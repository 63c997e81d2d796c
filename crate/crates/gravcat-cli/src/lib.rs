//! Command-line layer over `gravcat-core`.
//!
//! Four entry points, mirrored by the `gravcat` binary's subcommands:
//!
//! * [`run::run_point`]: every measure at one parameter point.
//! * [`run::run_sweep`]: one variable swept over an inclusive linear grid.
//! * [`figures::write_figure`]: preset sweep families written as CSV plus a
//!   gnuplot script.
//! * [`selfcheck::run_all`]: the deterministic verification suite.
//!
//! All numeric output goes through [`emit`], which fixes the CSV schema and
//! the float formatting so that regenerated artifacts are byte-identical.

#![forbid(unsafe_code)]
// Frozen fixtures keep all 17 digits exactly as emitted.
#![cfg_attr(test, allow(clippy::excessive_precision))]

pub mod emit;
pub mod figures;
pub mod run;
pub mod selfcheck;

pub use emit::{emit_csv, emit_plot_script, format_float, CurveFile, CSV_HEADER};
pub use figures::{preset, write_figure, FigureCurve, FigureName};
pub use run::{linspace, run_point, run_sweep, BasePoint, RowOptions, SweepRow, SweepSpec, Variable};
pub use selfcheck::{render_report, run_all, suite_passed, CheckReport};

/// Errors surfaced by the CLI layer.
///
/// `exit_code` maps each variant onto the process exit convention:
/// 0 success, 1 check or computation failure, 2 usage error.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// A core computation failed at a single point; the full parameter set
    /// is echoed so the point can be reproduced.
    #[error("{source} (at omega={omega}, delta={delta}, B={uniform_field}, b={imbalance}, T={temperature})")]
    Point {
        omega: f64,
        delta: f64,
        uniform_field: f64,
        imbalance: f64,
        temperature: f64,
        source: gravcat_core::Error,
    },

    /// A sweep aborted; `index` is the failing position in grid order.
    #[error("sweep aborted at grid index {index} ({variable} = {value}): {source}")]
    Sweep {
        index: usize,
        variable: &'static str,
        value: f64,
        source: Box<CliError>,
    },

    /// Invalid request shape (bad grid bounds, empty row set, ...).
    #[error("usage: {what}")]
    Usage { what: String },

    /// Filesystem failure, tagged with the path being written.
    #[error("{}: {source}", path.display())]
    Io {
        path: std::path::PathBuf,
        source: std::io::Error,
    },

    /// A row failed the schema-level recheck `lqu_exact = 1 - max(w1, w3)`.
    #[error("row {index} violates lqu_exact = 1 - max(w1, w3) by {deviation:.3e}")]
    RowInvariant { index: usize, deviation: f64 },

    #[error(transparent)]
    Core(#[from] gravcat_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage { .. } => 2,
            _ => 1,
        }
    }

    pub(crate) fn usage(what: impl Into<String>) -> Self {
        CliError::Usage { what: what.into() }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
