//! Point evaluation and grid sweeps.
//!
//! A sweep is defined by a [`SweepSpec`]: one [`Variable`] swept over an
//! inclusive linear grid, the other four model inputs held at a
//! [`BasePoint`]. Rows come back in grid order regardless of how many
//! workers computed them, so identical specs yield identical CSV bytes.

use gravcat_core::{
    compare_measures, gibbs_state, minimize_skew, partition_function, Branch, MinimizeConfig,
    ModelParams, ThermalPoint,
};
use rayon::prelude::*;

use crate::{CliError, Result};

/// The model input a sweep varies. Value names are case-sensitive on the
/// command line: `B` is the uniform field, `b` the field imbalance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Variable {
    #[value(name = "T")]
    Temperature,
    #[value(name = "B")]
    UniformField,
    #[value(name = "b")]
    Imbalance,
    #[value(name = "delta")]
    Delta,
    #[value(name = "omega")]
    Omega,
}

impl Variable {
    /// Header spelling in the CSV schema.
    pub fn column_name(self) -> &'static str {
        match self {
            Variable::Temperature => "T",
            Variable::UniformField => "B",
            Variable::Imbalance => "b",
            Variable::Delta => "delta",
            Variable::Omega => "omega",
        }
    }

    /// 1-based CSV column index, for plot scripts.
    pub fn column_index(self) -> usize {
        match self {
            Variable::Omega => 1,
            Variable::Delta => 2,
            Variable::UniformField => 3,
            Variable::Imbalance => 4,
            Variable::Temperature => 5,
        }
    }
}

/// The five scalar inputs of one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasePoint {
    pub omega: f64,
    pub delta: f64,
    pub uniform_field: f64,
    pub imbalance: f64,
    pub temperature: f64,
}

impl BasePoint {
    /// The same point with one variable replaced.
    pub fn with(mut self, variable: Variable, value: f64) -> BasePoint {
        match variable {
            Variable::Temperature => self.temperature = value,
            Variable::UniformField => self.uniform_field = value,
            Variable::Imbalance => self.imbalance = value,
            Variable::Delta => self.delta = value,
            Variable::Omega => self.omega = value,
        }
        self
    }

    pub fn value_of(&self, variable: Variable) -> f64 {
        match variable {
            Variable::Temperature => self.temperature,
            Variable::UniformField => self.uniform_field,
            Variable::Imbalance => self.imbalance,
            Variable::Delta => self.delta,
            Variable::Omega => self.omega,
        }
    }
}

/// Optional per-row quantities.
#[derive(Debug, Clone, Copy)]
pub struct RowOptions {
    /// Run the brute-force skew minimizer and record its minimum.
    pub with_oracle: bool,
    /// Record the concurrence column (cheap; on everywhere by default).
    pub with_concurrence: bool,
    /// Minimizer settings used when `with_oracle` is set.
    pub oracle_config: MinimizeConfig,
}

impl Default for RowOptions {
    fn default() -> Self {
        RowOptions {
            with_oracle: false,
            with_concurrence: true,
            oracle_config: MinimizeConfig::default(),
        }
    }
}

/// One evaluated grid point, in CSV column order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub omega: f64,
    pub delta: f64,
    pub uniform_field: f64,
    pub imbalance: f64,
    pub temperature: f64,
    /// Partition function; `inf` at T = 0 where only the ground sector
    /// survives.
    pub partition: f64,
    pub lqu_exact: f64,
    pub lqu_paper: f64,
    pub branch_exact: Branch,
    pub w1: f64,
    pub w3: f64,
    pub concurrence: Option<f64>,
    pub oracle_min: Option<f64>,
    pub purity: f64,
}

/// A sweep request. Invariants are enforced by [`SweepSpec::new`]:
/// `steps >= 2`, finite `start < stop`, and a temperature sweep must not
/// start below zero.
#[derive(Debug, Clone, Copy)]
pub struct SweepSpec {
    pub variable: Variable,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
    /// Held-fixed inputs; the swept variable's slot is ignored and
    /// overwritten at each grid point.
    pub base: BasePoint,
    pub options: RowOptions,
}

impl SweepSpec {
    pub fn new(
        variable: Variable,
        start: f64,
        stop: f64,
        steps: usize,
        base: BasePoint,
        options: RowOptions,
    ) -> Result<SweepSpec> {
        if !start.is_finite() || !stop.is_finite() {
            return Err(CliError::usage(format!(
                "sweep bounds must be finite (got {start} .. {stop})"
            )));
        }
        if start >= stop {
            return Err(CliError::usage(format!(
                "sweep start must be strictly below stop (got {start} .. {stop})"
            )));
        }
        if steps < 2 {
            return Err(CliError::usage(format!(
                "a sweep needs at least 2 grid points (got {steps})"
            )));
        }
        if variable == Variable::Temperature && start < 0.0 {
            return Err(CliError::usage(format!(
                "temperature sweeps must start at or above zero (got {start})"
            )));
        }
        Ok(SweepSpec {
            variable,
            start,
            stop,
            steps,
            base,
            options,
        })
    }

    /// The inclusive evaluation grid, in emission order.
    pub fn grid(&self) -> Vec<f64> {
        linspace(self.start, self.stop, self.steps)
    }
}

/// Inclusive linear grid with both endpoints exact.
pub fn linspace(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    debug_assert!(steps >= 2);
    let step = (stop - start) / (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i == steps - 1 {
                stop
            } else {
                start + i as f64 * step
            }
        })
        .collect()
}

/// Evaluate every measure at one point.
///
/// T = 0 routes to the ground sector (pure state, or the even mixture on an
/// exact crossing) and reports an infinite partition function.
pub fn run_point(point: BasePoint, options: &RowOptions) -> Result<SweepRow> {
    let attach = |source: gravcat_core::Error| CliError::Point {
        omega: point.omega,
        delta: point.delta,
        uniform_field: point.uniform_field,
        imbalance: point.imbalance,
        temperature: point.temperature,
        source,
    };

    let params = ModelParams::new(
        point.omega,
        point.delta,
        point.uniform_field,
        point.imbalance,
    )
    .map_err(attach)?;
    let at = ThermalPoint::from_temperature(point.temperature).map_err(attach)?;

    let state = gibbs_state(&params, at).map_err(attach)?;
    let partition = if at.is_zero_temperature() {
        f64::INFINITY
    } else {
        partition_function(&params, at).map_err(attach)?
    };

    let measures = compare_measures(&state).map_err(attach)?;
    let oracle_min = if options.with_oracle {
        Some(
            minimize_skew(&state, options.oracle_config)
                .map_err(attach)?
                .min_value,
        )
    } else {
        None
    };
    let concurrence = options.with_concurrence.then_some(measures.concurrence);

    Ok(SweepRow {
        omega: point.omega,
        delta: point.delta,
        uniform_field: point.uniform_field,
        imbalance: point.imbalance,
        temperature: point.temperature,
        partition,
        lqu_exact: measures.lqu_exact.value,
        lqu_paper: measures.lqu_paper.value,
        branch_exact: measures.lqu_exact.branch,
        w1: measures.lqu_exact.w.w1,
        w3: measures.lqu_exact.w.w3,
        concurrence,
        oracle_min,
        purity: state.purity(),
    })
}

/// Run a sweep, returning rows in grid order.
///
/// `workers = 0` uses the global thread pool's default width; any other
/// value builds a dedicated pool of that size. The schedule never affects
/// the output: each grid point is independent and rows are collected by
/// index, so CSV bytes are identical for every worker count.
pub fn run_sweep(spec: &SweepSpec, workers: usize) -> Result<Vec<SweepRow>> {
    let grid = spec.grid();
    let evaluate = |(index, value): (usize, &f64)| {
        run_point(spec.base.with(spec.variable, *value), &spec.options).map_err(|source| {
            CliError::Sweep {
                index,
                variable: spec.variable.column_name(),
                value: *value,
                source: Box::new(source),
            }
        })
    };

    let results: Vec<Result<SweepRow>> = if workers == 1 {
        grid.iter().enumerate().map(evaluate).collect()
    } else if workers == 0 {
        grid.par_iter().enumerate().map(evaluate).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| CliError::usage(format!("cannot build a {workers}-worker pool: {e}")))?;
        pool.install(|| grid.par_iter().enumerate().map(evaluate).collect())
    };

    // First failure in grid order wins, independent of schedule.
    results.into_iter().collect()
}
