#![forbid(unsafe_code)]
// Indexed loops mirror the 4x4 matrix algebra they implement.
#![allow(clippy::needless_range_loop)]
// Frozen fixtures keep all 17 digits exactly as emitted.
#![cfg_attr(test, allow(clippy::excessive_precision))]

//! Thermal quantum correlations of two coupled two-level systems in an
//! inhomogeneous magnetic field.
//!
//! The model Hamiltonian, written in the computational basis
//! {|00>, |01>, |10>, |11>}, is
//!
//! ```text
//!     [ B + w    0      0     -D  ]
//!     [   0     -b     -D      0  ]
//!     [   0     -D      b      0  ]
//!     [  -D      0      0   -B-w  ]
//! ```
//!
//! with w the energy gap, D the coupling strength, B the uniform field and
//! b its inhomogeneity (hbar = k_B = 1, every parameter dimensionless).
//! Its Gibbs states are X-structured, so the local quantum uncertainty
//! (LQU) and the concurrence admit closed forms. This crate computes those
//! closed forms and, independently, brute-force oracles that verify them:
//! a dense Jacobi eigensolver with no X shortcuts, and a direct
//! minimization of the Wigner-Yanase skew information over the Bloch
//! sphere of local observables.
//!
//! Layout:
//! - [`xstate`]: X-structured density matrices, blockwise square root,
//!   Fano-Bloch components.
//! - [`dense`]: dense 4x4 Hermitian eigendecomposition and eigenbasis
//!   matrix square root (the definitional route).
//! - [`model`]: Hamiltonian, spectrum, Gibbs states.
//! - [`lqu`]: closed-form LQU (plus a density-substituted variant kept for
//!   comparison with common printed forms) and concurrence.
//! - [`oracle`]: skew information, its Bloch-sphere minimization, and the
//!   correlation matrix W evaluated from its definition.

pub mod dense;
pub mod lqu;
pub mod model;
pub mod oracle;
pub mod xstate;

pub use dense::{dense_eigh, dense_sqrt, DenseHermitian4, EigenDecomposition};
pub use lqu::{
    compare_measures, concurrence, lqu, lqu_paper_mode, w_closed_form, Branch, LquResult,
    MeasureComparison, Mode, WEigenvalues,
};
pub use model::{
    boltzmann_weights, gibbs_state, ground_state, hamiltonian, log_partition_function,
    partition_function, spectrum, thermal_state, thermal_state_definitional, BoltzmannWeights,
    ModelParams, Spectrum, ThermalPoint,
};
pub use oracle::{
    fibonacci_lattice, minimize_skew, skew_information, variance, w_numeric, BlochVector,
    MinimizeConfig, SkewResult, WNumeric,
};
pub use xstate::{ComplexScalar, FanoBloch, ValidationReport, Violation, XRoot, XState};

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong constructing or evaluating a state.
///
/// Validation of density-matrix invariants (trace, positivity) is soft and
/// reported through [`xstate::ValidationReport`]; the hard errors below are
/// reserved for inputs no routine can make sense of.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A constructor received NaN or an infinity.
    #[error("non-finite value {value} for {what}")]
    NonFinite { what: &'static str, value: f64 },

    /// A matrix claimed Hermitian deviates from its conjugate transpose.
    #[error("matrix is not Hermitian (max asymmetry {asymmetry:.3e})")]
    NotHermitian { asymmetry: f64 },

    /// A dense matrix has weight outside the X positions.
    #[error("matrix is not X-structured: entry ({row},{col}) has magnitude {magnitude:.3e}")]
    NotXStructured {
        row: usize,
        col: usize,
        magnitude: f64,
    },

    /// A 2x2 block of a claimed density matrix is negative beyond tolerance.
    #[error("{block} block is not positive semidefinite (det {det:.3e}, trace {trace:.3e})")]
    BlockNotPsd {
        block: &'static str,
        det: f64,
        trace: f64,
    },

    /// An eigenvalue of a claimed PSD matrix is negative beyond tolerance.
    #[error("matrix is not positive semidefinite (eigenvalue {value:.3e})")]
    NegativeEigenvalue { value: f64 },

    /// The Jacobi iteration did not reach the off-diagonal tolerance.
    #[error("eigensolver did not converge (off-diagonal residual {residual:.3e})")]
    NoConvergence { residual: f64 },

    /// The closed forms need real nonnegative off-diagonals; the state must
    /// be phase-normalized (see [`xstate::XState::remove_phases`]) first.
    #[error("state is not phase-normalized (offending component {offender})")]
    NotPhaseNormalized { offender: &'static str },

    /// Gibbs evaluation needs T > 0; zero temperature is served by
    /// [`model::ground_state`].
    #[error("temperature {value} is outside the Gibbs domain (T > 0)")]
    InvalidTemperature { value: f64 },

    /// A Bloch vector is not unit length within tolerance.
    #[error("Bloch vector norm {norm} deviates from 1 beyond tolerance")]
    InvalidBlochVector { norm: f64 },

    /// A minimizer configuration that cannot work.
    #[error("invalid minimizer configuration: {what}")]
    InvalidConfig { what: &'static str },

    /// Two redundant internal routes disagreed; indicates a bug, not bad input.
    #[error("internal consistency check failed: {what} (deviation {deviation:.3e})")]
    InternalConsistency { what: &'static str, deviation: f64 },
}
