//! Shared fixtures for the criterion benchmarks.
//!
//! Every benchmark measures the same physical configurations so that numbers
//! stay comparable across runs: a mid-temperature reference point where all
//! couplings matter, and a cold near-pure point that stresses the matrix
//! square root hardest.

#![forbid(unsafe_code)]

use gravcat_core::{thermal_state, ModelParams, ThermalPoint, XState};

/// Couplings used by all benchmarks: every term of the Hamiltonian active.
pub fn reference_params() -> ModelParams {
    ModelParams::new(0.05, 0.5, 0.5, 0.5).expect("reference couplings are finite")
}

/// Mid-temperature point: the state is well mixed, no branch dominates.
pub fn reference_point() -> ThermalPoint {
    ThermalPoint::from_temperature(0.5).expect("positive temperature")
}

/// Thermal state at the reference point.
pub fn reference_state() -> XState {
    thermal_state(&reference_params(), reference_point()).expect("reference state")
}

/// Cold near-pure state: the smallest Boltzmann weight is ~1e-20, which is
/// the regime where the square root and the W assembly earn their keep.
pub fn cold_state() -> XState {
    let params = ModelParams::new(1.0, 1.0, 1.0, 1.0).expect("cold couplings are finite");
    let at = ThermalPoint::from_temperature(0.1).expect("positive temperature");
    thermal_state(&params, at).expect("cold state")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build_valid_states() {
        let trace = |s: &XState| s.diag().iter().sum::<f64>();
        assert!((trace(&reference_state()) - 1.0).abs() < 1e-14);
        assert!((trace(&cold_state()) - 1.0).abs() < 1e-14);
    }
}
