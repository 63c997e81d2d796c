//! The deterministic verification suite behind `gravcat selfcheck`.
//!
//! Nine checks, one per shipped guarantee. Eight are blocking: a failure
//! means the numerics are wrong. The figure-shape check is advisory: it
//! confirms qualitative features of the preset figures and is reported
//! without gating the suite. The suite takes no seeds and no environment:
//! two consecutive runs print byte-identical reports, and every random
//! draw comes from a fixed-seed counter RNG declared below.

use std::time::Instant;

use gravcat_core::{
    concurrence, dense_eigh, hamiltonian, lqu, minimize_skew, partition_function, spectrum,
    thermal_state, thermal_state_definitional, w_closed_form, w_numeric, MinimizeConfig,
    ModelParams, ThermalPoint, XState,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::emit::emit_csv;
use crate::run::{run_point, run_sweep, BasePoint, RowOptions, SweepSpec, Variable};
use crate::{CliError, Result};

/// Closed form vs brute-force minimizer, per state.
pub const TOL_ORACLE: f64 = 2e-6;
/// Wall-clock budget for the oracle comparison.
pub const ORACLE_BUDGET_SECONDS: f64 = 30.0;
/// Numeric W matrix vs closed form, and its off-diagonal magnitudes.
pub const TOL_W_MATRIX: f64 = 1e-10;
/// Entrywise agreement of the two Gibbs-state routes.
pub const TOL_GIBBS_ROUTES: f64 = 1e-10;
/// Relative three-way agreement of the partition function.
pub const TOL_PARTITION_REL: f64 = 1e-12;
/// Exact limits: maximally mixed, Bell, decoupled thermal states.
pub const TOL_EXACT_LIMITS: f64 = 1e-12;
/// Pure-superposition fixture (value and concurrence).
pub const TOL_PURE_LIMITS: f64 = 1e-10;
/// Parameter symmetries (delta parity, b swap).
pub const TOL_SYMMETRY: f64 = 1e-12;
/// Mirror symmetry of w3 along the imbalance sweeps.
pub const TOL_W3_MIRROR: f64 = 1e-10;
/// Slack allowed in the w1 >= w2 ordering.
pub const TOL_ORDERING: f64 = 1e-12;
/// High-temperature tail of the exact LQU at T = 1e6.
pub const TOL_HIGH_T: f64 = 1e-6;
/// Random draws for the Gibbs consistency check.
pub const GIBBS_DRAWS: usize = 500;
/// Fixed RNG seed for those draws.
pub const GIBBS_SEED: u64 = 0x6772_6176_6361_7431;

/// The coarse parameter grid every grid-based check draws from.
const GRID_VALUES: [f64; 6] = [-1.0, -0.3, 0.0, 0.05, 0.3, 1.0];
const GRID_TEMPERATURES: [f64; 4] = [0.1, 0.5, 2.0, 10.0];
/// Strided selection: every 25th point of the full nested grid, first 200.
const GRID_STRIDE: usize = 25;
const GRID_TAKE: usize = 200;

/// Magnitudes used for the paired-sign symmetry checks.
const SIGNED_MAGNITUDES: [f64; 3] = [0.05, 0.3, 1.0];

/// One check's outcome. `detail` is deterministic whenever the check
/// passes, so repeated reports are byte-identical.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    /// Advisory checks report without gating the suite.
    pub blocking: bool,
    pub detail: String,
}

fn on_pool<R: Send>(pool: Option<&rayon::ThreadPool>, f: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

fn scalar_dev(a: gravcat_core::ComplexScalar, b: gravcat_core::ComplexScalar) -> f64 {
    (a.re() - b.re()).hypot(a.im() - b.im())
}

/// The 200-state acceptance grid: all four couplings over the coarse
/// values (outermost omega, innermost temperature), subsampled at a fixed
/// stride so the selection spans the whole range.
fn acceptance_grid() -> Vec<BasePoint> {
    let mut full = Vec::with_capacity(GRID_VALUES.len().pow(4) * GRID_TEMPERATURES.len());
    for &omega in &GRID_VALUES {
        for &delta in &GRID_VALUES {
            for &uniform_field in &GRID_VALUES {
                for &imbalance in &GRID_VALUES {
                    for &temperature in &GRID_TEMPERATURES {
                        full.push(BasePoint {
                            omega,
                            delta,
                            uniform_field,
                            imbalance,
                            temperature,
                        });
                    }
                }
            }
        }
    }
    full.into_iter().step_by(GRID_STRIDE).take(GRID_TAKE).collect()
}

fn grid_state(point: &BasePoint) -> Result<XState> {
    let params = ModelParams::new(
        point.omega,
        point.delta,
        point.uniform_field,
        point.imbalance,
    )?;
    Ok(thermal_state(
        &params,
        ThermalPoint::from_temperature(point.temperature)?,
    )?)
}

/// Criterion 1: the closed-form LQU matches an independent brute-force
/// minimization of the skew information over site observables, on every
/// grid state, inside the wall-clock budget.
fn check_oracle_equivalence(pool: Option<&rayon::ThreadPool>) -> Result<CheckReport> {
    let grid = acceptance_grid();
    let started = Instant::now();
    let deviations: Vec<Result<f64>> = on_pool(pool, || {
        grid.par_iter()
            .map(|point| {
                let state = grid_state(point)?;
                // Closed form wants the phase-normalized representative;
                // the minimizer runs on the state as built.
                let closed = lqu(&state.remove_phases())?.value;
                let oracle = minimize_skew(&state, MinimizeConfig::default())?.min_value;
                Ok((closed - oracle).abs())
            })
            .collect()
    });
    let elapsed = started.elapsed().as_secs_f64();
    let mut max_dev: f64 = 0.0;
    for dev in deviations {
        max_dev = max_dev.max(dev?);
    }

    let in_budget = elapsed <= ORACLE_BUDGET_SECONDS;
    let passed = max_dev <= TOL_ORACLE && in_budget;
    let detail = if passed {
        format!(
            "max |closed - oracle| = {max_dev:.3e} over {} thermal states (tol {TOL_ORACLE:e}); finished within the {ORACLE_BUDGET_SECONDS:.0} s budget",
            grid.len()
        )
    } else {
        format!(
            "max |closed - oracle| = {max_dev:.3e} over {} thermal states (tol {TOL_ORACLE:e}); took {elapsed:.1} s (budget {ORACLE_BUDGET_SECONDS:.0} s)",
            grid.len()
        )
    };
    Ok(CheckReport {
        name: "oracle equivalence",
        passed,
        blocking: true,
        detail,
    })
}

/// Criterion 2: the numerically assembled W matrix is diagonal and its
/// diagonal matches the closed-form eigenvalues, on every grid state.
fn check_w_matrix(pool: Option<&rayon::ThreadPool>) -> Result<CheckReport> {
    let grid = acceptance_grid();
    let deviations: Vec<Result<(f64, f64)>> = on_pool(pool, || {
        grid.par_iter()
            .map(|point| {
                let state = grid_state(point)?;
                let closed = w_closed_form(&state.remove_phases())?;
                let numeric = w_numeric(&state)?;
                let m = numeric.matrix;
                let diag_dev = (m[0][0] - closed.w1)
                    .abs()
                    .max((m[1][1] - closed.w2).abs())
                    .max((m[2][2] - closed.w3).abs());
                let off_dev = m[0][1]
                    .abs()
                    .max(m[0][2].abs())
                    .max(m[1][2].abs())
                    .max(m[1][0].abs())
                    .max(m[2][0].abs())
                    .max(m[2][1].abs());
                Ok((diag_dev, off_dev))
            })
            .collect()
    });
    let mut max_diag: f64 = 0.0;
    let mut max_off: f64 = 0.0;
    for dev in deviations {
        let (diag, off) = dev?;
        max_diag = max_diag.max(diag);
        max_off = max_off.max(off);
    }
    Ok(CheckReport {
        name: "W matrix equivalence",
        passed: max_diag <= TOL_W_MATRIX && max_off <= TOL_W_MATRIX,
        blocking: true,
        detail: format!(
            "max diagonal dev = {max_diag:.3e}, max off-diagonal = {max_off:.3e} over {} states (tol {TOL_W_MATRIX:e})",
            grid.len()
        ),
    })
}

/// Criterion 3: the closed-form Gibbs state matches the definitional
/// eigendecomposition route entrywise, and the partition function agrees
/// three ways (hyperbolic form, spectrum sum, dense eigenvalue sum), on
/// fixed-seed random draws.
fn check_gibbs_consistency() -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(GIBBS_SEED);
    let mut max_state_dev: f64 = 0.0;
    let mut max_partition_rel: f64 = 0.0;
    for _ in 0..GIBBS_DRAWS {
        let params = ModelParams::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        )?;
        let at = ThermalPoint::from_temperature(rng.gen_range(0.1..10.0))?;

        let closed = thermal_state(&params, at)?;
        let dense = thermal_state_definitional(&params, at)?;
        let dc = closed.diag();
        let dd = dense.diag();
        let mut dev: f64 = 0.0;
        for k in 0..4 {
            dev = dev.max((dc[k] - dd[k]).abs());
        }
        dev = dev.max(scalar_dev(closed.a14(), dense.a14()));
        dev = dev.max(scalar_dev(closed.a23(), dense.a23()));
        max_state_dev = max_state_dev.max(dev);

        let z_cosh = partition_function(&params, at)?;
        let beta = at.beta();
        let z_spectrum: f64 = spectrum(&params)
            .energies
            .iter()
            .map(|e| (-beta * e).exp())
            .sum();
        let z_dense: f64 = dense_eigh(&hamiltonian(&params))?
            .values
            .iter()
            .map(|e| (-beta * e).exp())
            .sum();
        let rel = ((z_cosh - z_spectrum).abs() / z_cosh).max((z_cosh - z_dense).abs() / z_cosh);
        max_partition_rel = max_partition_rel.max(rel);
    }
    Ok(CheckReport {
        name: "Gibbs route agreement",
        passed: max_state_dev <= TOL_GIBBS_ROUTES && max_partition_rel <= TOL_PARTITION_REL,
        blocking: true,
        detail: format!(
            "max entrywise state dev = {max_state_dev:.3e} (tol {TOL_GIBBS_ROUTES:e}), max relative partition dev = {max_partition_rel:.3e} (tol {TOL_PARTITION_REL:e}) over {GIBBS_DRAWS} draws"
        ),
    })
}

/// Criterion 4: exact limits. The maximally mixed state and the Bell state
/// hit 0 and 1; every decoupled (delta = 0) thermal state has zero LQU;
/// the pure superposition fixture hits 3/4 with concurrence sqrt(3)/2.
fn check_exact_limits() -> Result<CheckReport> {
    let mixed = XState::from_real([0.25; 4], 0.0, 0.0)?;
    let mixed_dev = lqu(&mixed)?.value.abs();

    let bell = XState::from_real([0.5, 0.0, 0.0, 0.5], 0.5, 0.0)?;
    let bell_dev = (lqu(&bell)?.value - 1.0).abs();

    let mut decoupled_max: f64 = 0.0;
    for &omega in &GRID_VALUES {
        for &uniform_field in &GRID_VALUES {
            for &imbalance in &GRID_VALUES {
                for &temperature in &GRID_TEMPERATURES {
                    let state = grid_state(&BasePoint {
                        omega,
                        delta: 0.0,
                        uniform_field,
                        imbalance,
                        temperature,
                    })?;
                    decoupled_max = decoupled_max.max(lqu(&state.remove_phases())?.value.abs());
                }
            }
        }
    }
    let decoupled_count = GRID_VALUES.len().pow(3) * GRID_TEMPERATURES.len();

    let (s, c) = (std::f64::consts::PI / 6.0).sin_cos();
    let pure = XState::from_real([c * c, 0.0, 0.0, s * s], s * c, 0.0)?;
    let pure_dev = (lqu(&pure)?.value - 0.75)
        .abs()
        .max((concurrence(&pure) - 0.75f64.sqrt()).abs());

    let passed = mixed_dev <= TOL_EXACT_LIMITS
        && bell_dev <= TOL_EXACT_LIMITS
        && decoupled_max <= TOL_EXACT_LIMITS
        && pure_dev <= TOL_PURE_LIMITS;
    Ok(CheckReport {
        name: "exact limits",
        passed,
        blocking: true,
        detail: format!(
            "maximally mixed dev = {mixed_dev:.1e}, Bell dev = {bell_dev:.1e}, max over {decoupled_count} decoupled thermal states = {decoupled_max:.3e} (tol {TOL_EXACT_LIMITS:e}), pure fixture dev = {pure_dev:.3e} (tol {TOL_PURE_LIMITS:e})"
        ),
    })
}

fn quick_row(point: BasePoint) -> Result<crate::run::SweepRow> {
    run_point(point, &RowOptions::default())
}

/// Criterion 5: parameter symmetries. Flipping the sign of delta changes
/// no emitted quantity; flipping the sign of b swaps the two inner
/// populations; w3 is mirror-symmetric about b = 0 along the imbalance
/// sweeps.
fn check_symmetries(pool: Option<&rayon::ThreadPool>) -> Result<CheckReport> {
    // Paired-sign points for the parity and swap comparisons.
    let mut pairs = Vec::new();
    for &omega in &GRID_VALUES {
        for &uniform_field in &GRID_VALUES {
            for &imbalance in &GRID_VALUES {
                for &magnitude in &SIGNED_MAGNITUDES {
                    for &temperature in &GRID_TEMPERATURES {
                        pairs.push((omega, uniform_field, imbalance, magnitude, temperature));
                    }
                }
            }
        }
    }

    let parity_devs: Vec<Result<f64>> = on_pool(pool, || {
        pairs
            .par_iter()
            .map(|&(omega, uniform_field, imbalance, delta, temperature)| {
                let base = BasePoint {
                    omega,
                    delta,
                    uniform_field,
                    imbalance,
                    temperature,
                };
                let plus = quick_row(base)?;
                let minus = quick_row(base.with(Variable::Delta, -delta))?;
                let mut dev = (plus.partition - minus.partition).abs();
                dev = dev.max((plus.lqu_exact - minus.lqu_exact).abs());
                dev = dev.max((plus.lqu_paper - minus.lqu_paper).abs());
                dev = dev.max((plus.w1 - minus.w1).abs());
                dev = dev.max((plus.w3 - minus.w3).abs());
                dev = dev.max((plus.purity - minus.purity).abs());
                dev = dev.max(
                    (plus.concurrence.unwrap_or(0.0) - minus.concurrence.unwrap_or(0.0)).abs(),
                );
                if plus.branch_exact != minus.branch_exact {
                    dev = dev.max(1.0);
                }
                Ok(dev)
            })
            .collect()
    });
    let mut max_parity: f64 = 0.0;
    for dev in parity_devs {
        max_parity = max_parity.max(dev?);
    }

    let swap_devs: Vec<Result<f64>> = on_pool(pool, || {
        pairs
            .par_iter()
            .map(|&(omega, uniform_field, delta_slot, imbalance, temperature)| {
                // Reuse the pair list with the roles of b and delta swapped.
                let delta = delta_slot;
                let params_plus = ModelParams::new(omega, delta, uniform_field, imbalance)?;
                let params_minus = ModelParams::new(omega, delta, uniform_field, -imbalance)?;
                let at = ThermalPoint::from_temperature(temperature)?;
                let plus = thermal_state(&params_plus, at)?;
                let minus = thermal_state(&params_minus, at)?;
                let dp = plus.diag();
                let dm = minus.diag();
                let mut dev = (dp[0] - dm[0]).abs().max((dp[3] - dm[3]).abs());
                dev = dev.max((dp[1] - dm[2]).abs()).max((dp[2] - dm[1]).abs());
                dev = dev.max(scalar_dev(plus.a14(), minus.a14()));
                dev = dev.max(scalar_dev(plus.a23(), minus.a23()));
                Ok(dev)
            })
            .collect()
    });
    let mut max_swap: f64 = 0.0;
    for dev in swap_devs {
        max_swap = max_swap.max(dev?);
    }

    // Mirror symmetry of w3 about b = 0 along the imbalance sweeps.
    let mut max_mirror: f64 = 0.0;
    for &uniform_field in &[0.0, 0.5, 1.0, 2.0] {
        let spec = SweepSpec::new(
            Variable::Imbalance,
            -2.0,
            2.0,
            101,
            BasePoint {
                omega: 0.05,
                delta: 0.05,
                uniform_field,
                imbalance: 0.0,
                temperature: 0.5,
            },
            RowOptions::default(),
        )?;
        let rows = run_sweep(&spec, 1)?;
        let n = rows.len();
        for i in 0..n / 2 {
            max_mirror = max_mirror.max((rows[i].w3 - rows[n - 1 - i].w3).abs());
        }
    }

    let passed =
        max_parity <= TOL_SYMMETRY && max_swap <= TOL_SYMMETRY && max_mirror <= TOL_W3_MIRROR;
    Ok(CheckReport {
        name: "parameter symmetries",
        passed,
        blocking: true,
        detail: format!(
            "max delta-parity dev = {max_parity:.3e}, max b-swap dev = {max_swap:.3e} (tol {TOL_SYMMETRY:e}); max w3 mirror dev = {max_mirror:.3e} (tol {TOL_W3_MIRROR:e})"
        ),
    })
}

/// Criterion 6: the ordering w1 >= w2 holds on every state the other
/// checks touch (grid, decoupled, and signed-pair states).
fn check_w_ordering(pool: Option<&rayon::ThreadPool>) -> Result<CheckReport> {
    let mut points = acceptance_grid();
    for &omega in &GRID_VALUES {
        for &uniform_field in &GRID_VALUES {
            for &imbalance in &GRID_VALUES {
                for &temperature in &GRID_TEMPERATURES {
                    points.push(BasePoint {
                        omega,
                        delta: 0.0,
                        uniform_field,
                        imbalance,
                        temperature,
                    });
                    for &delta in &SIGNED_MAGNITUDES {
                        points.push(BasePoint {
                            omega,
                            delta,
                            uniform_field,
                            imbalance,
                            temperature,
                        });
                        points.push(BasePoint {
                            omega,
                            delta: -delta,
                            uniform_field,
                            imbalance,
                            temperature,
                        });
                    }
                }
            }
        }
    }

    let margins: Vec<Result<f64>> = on_pool(pool, || {
        points
            .par_iter()
            .map(|point| {
                let w = w_closed_form(&grid_state(point)?.remove_phases())?;
                Ok(w.w1 - w.w2)
            })
            .collect()
    });
    let mut min_margin = f64::INFINITY;
    for margin in margins {
        min_margin = min_margin.min(margin?);
    }
    Ok(CheckReport {
        name: "w1 >= w2 ordering",
        passed: min_margin >= -TOL_ORDERING,
        blocking: true,
        detail: format!(
            "min(w1 - w2) = {min_margin:.3e} over {} states (slack {TOL_ORDERING:e})",
            points.len()
        ),
    })
}

/// Criterion 7: along the first thermal preset pushed to T = 1e6, the
/// exact LQU has decayed below 1e-6.
fn check_high_temperature_tail() -> Result<CheckReport> {
    let mut max_tail: f64 = 0.0;
    for &uniform_field in &[0.1, 0.5, 1.0, 2.0] {
        let row = quick_row(BasePoint {
            omega: 0.05,
            delta: 0.05,
            uniform_field,
            imbalance: 0.5,
            temperature: 1e6,
        })?;
        max_tail = max_tail.max(row.lqu_exact.abs());
    }
    Ok(CheckReport {
        name: "high-temperature tail",
        passed: max_tail <= TOL_HIGH_T,
        blocking: true,
        detail: format!("max exact LQU at T = 1e6 = {max_tail:.3e} (tol {TOL_HIGH_T:e})"),
    })
}

fn strict_local_maxima(series: &[f64]) -> usize {
    series
        .windows(3)
        .filter(|w| w[1] > w[0] && w[1] > w[2])
        .count()
}

/// Criterion 8 (advisory): qualitative figure shapes. The substituted
/// measure along the imbalance sweep shows exactly two interior peaks for
/// the mid-range uniform fields, and the offset sweep decays toward zero:
/// a non-increasing final quarter ending below half the curve maximum.
fn check_figure_shapes() -> Result<CheckReport> {
    let mut peak_counts = Vec::new();
    for &uniform_field in &[0.5, 1.0] {
        let spec = SweepSpec::new(
            Variable::Imbalance,
            -2.0,
            2.0,
            201,
            BasePoint {
                omega: 0.05,
                delta: 0.05,
                uniform_field,
                imbalance: 0.0,
                temperature: 0.5,
            },
            RowOptions::default(),
        )?;
        let series: Vec<f64> = run_sweep(&spec, 1)?.iter().map(|r| r.lqu_paper).collect();
        peak_counts.push(strict_local_maxima(&series));
    }
    let peaks_ok = peak_counts.iter().all(|&n| n == 2);

    let mut decay_ok = true;
    let mut end_ratios = Vec::new();
    for &delta in &[0.1, 0.5, 1.0, 2.0] {
        let spec = SweepSpec::new(
            Variable::Omega,
            0.0,
            5.0,
            101,
            BasePoint {
                omega: 0.0,
                delta,
                uniform_field: 0.5,
                imbalance: 0.5,
                temperature: 0.5,
            },
            RowOptions::default(),
        )?;
        let series: Vec<f64> = run_sweep(&spec, 1)?.iter().map(|r| r.lqu_paper).collect();
        let tail_start = series.len() - series.len() / 4;
        let tail_monotone = series[tail_start - 1..]
            .windows(2)
            .all(|w| w[1] <= w[0] + 1e-9);
        let max = series.iter().cloned().fold(0.0f64, f64::max);
        let ratio = series.last().unwrap() / max;
        end_ratios.push(ratio);
        decay_ok = decay_ok && tail_monotone && ratio <= 0.5;
    }

    let ratio_text: Vec<String> = end_ratios.iter().map(|r| format!("{r:.2}")).collect();
    Ok(CheckReport {
        name: "figure shapes",
        passed: peaks_ok && decay_ok,
        blocking: false,
        detail: format!(
            "imbalance-sweep interior peaks = {peak_counts:?} (want [2, 2]); offset-sweep end/max ratios = [{}] with non-increasing tails (want <= 0.50)",
            ratio_text.join(", ")
        ),
    })
}

/// Criterion 9: emission determinism. The same sweep run on 1 worker,
/// 4 workers, and 1 worker again yields byte-identical CSV.
fn check_determinism() -> Result<CheckReport> {
    let spec = SweepSpec::new(
        Variable::Imbalance,
        -2.0,
        2.0,
        41,
        BasePoint {
            omega: 0.05,
            delta: 0.05,
            uniform_field: 0.5,
            imbalance: 0.0,
            temperature: 0.5,
        },
        RowOptions::default(),
    )?;
    let serial = emit_csv(&run_sweep(&spec, 1)?)?;
    let parallel = emit_csv(&run_sweep(&spec, 4)?)?;
    let repeat = emit_csv(&run_sweep(&spec, 1)?)?;
    let identical = serial == parallel && serial == repeat;
    Ok(CheckReport {
        name: "deterministic emission",
        passed: identical,
        blocking: true,
        detail: if identical {
            format!(
                "{}-row sweep byte-identical across 1 and 4 workers and across repeated runs",
                spec.steps
            )
        } else {
            "CSV bytes differ between runs or worker counts".to_string()
        },
    })
}

/// Run the whole suite. `workers = 0` uses the global pool; any other
/// value runs the parallel sections on a dedicated pool of that size. The
/// report content is identical either way.
pub fn run_all(workers: usize) -> Result<Vec<CheckReport>> {
    let pool = match workers {
        0 => None,
        n => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::usage(format!("cannot build a {n}-worker pool: {e}")))?,
        ),
    };
    let pool = pool.as_ref();
    Ok(vec![
        check_oracle_equivalence(pool)?,
        check_w_matrix(pool)?,
        check_gibbs_consistency()?,
        check_exact_limits()?,
        check_symmetries(pool)?,
        check_w_ordering(pool)?,
        check_high_temperature_tail()?,
        check_figure_shapes()?,
        check_determinism()?,
    ])
}

/// True when every blocking check passed.
pub fn suite_passed(checks: &[CheckReport]) -> bool {
    checks.iter().all(|c| c.passed || !c.blocking)
}

/// Fixed-format report: one line per check plus a summary line.
pub fn render_report(checks: &[CheckReport]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for check in checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        let kind = if check.blocking { "        " } else { "advisory" };
        out.push_str(&format!(
            "{status} {kind} {:width$}  {}\n",
            check.name, check.detail
        ));
    }
    let blocking = checks.iter().filter(|c| c.blocking).count();
    let blocking_passed = checks.iter().filter(|c| c.blocking && c.passed).count();
    let advisory = checks.len() - blocking;
    let advisory_passed = checks.iter().filter(|c| !c.blocking && c.passed).count();
    out.push_str(&format!(
        "{blocking_passed}/{blocking} blocking checks passed, {advisory_passed}/{advisory} advisory\n"
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_selection_is_200_points_spanning_the_range() {
        let grid = acceptance_grid();
        assert_eq!(grid.len(), GRID_TAKE);
        assert_eq!(grid[0].omega, -1.0);
        // The stride walks the full nested enumeration, so the selection
        // reaches deep into the omega range rather than stalling early.
        assert!(grid.last().unwrap().omega > 0.0);
        let temps: std::collections::BTreeSet<u64> =
            grid.iter().map(|p| p.temperature.to_bits()).collect();
        assert_eq!(temps.len(), GRID_TEMPERATURES.len());
    }

    #[test]
    fn peak_finder_counts_interior_maxima() {
        assert_eq!(strict_local_maxima(&[0.0, 1.0, 0.0, 2.0, 0.0]), 2);
        assert_eq!(strict_local_maxima(&[0.0, 1.0, 2.0, 3.0]), 0);
        assert_eq!(strict_local_maxima(&[3.0, 2.0, 1.0]), 0);
    }

    #[test]
    fn report_rendering_is_stable() {
        let checks = vec![
            CheckReport {
                name: "alpha",
                passed: true,
                blocking: true,
                detail: "dev = 1.0e-12".into(),
            },
            CheckReport {
                name: "beta",
                passed: false,
                blocking: false,
                detail: "shape off".into(),
            },
        ];
        let text = render_report(&checks);
        assert!(text.contains("PASS"));
        assert!(text.contains("FAIL advisory"));
        assert!(text.ends_with("1/1 blocking checks passed, 0/1 advisory\n"));
        assert!(suite_passed(&checks));
    }
}
