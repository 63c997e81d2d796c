//! The two-qubit model: Hamiltonian, spectrum, and Gibbs states.
//!
//! In the computational basis |00>, |01>, |10>, |11> the Hamiltonian is
//!
//! ```text
//!     [  A    .    .   -D ]
//!     [  .   -b   -D    . ]            A = B + omega
//!     [  .   -D    b    . ]            D = delta
//!     [ -D    .    .   -A ]
//! ```
//!
//! so it splits into an outer block on {|00>, |11>} driven by A and an inner
//! block on {|01>, |10>} driven by the field imbalance b. Both blocks are
//! 2x2 real symmetric with off-diagonal -D, hence the spectrum is
//! +-sqrt(b^2 + D^2) and +-sqrt(A^2 + D^2) with eigenvectors parametrized by
//! one mixing angle each. Gibbs states of this Hamiltonian are X states.

use num_complex::Complex64;

use crate::dense::{dense_eigh, DenseHermitian4, M4_ZERO};
use crate::xstate::XState;
use crate::{Error, Result};

/// Model parameters. Constructed once, immutable, finite by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    omega: f64,
    delta: f64,
    uniform: f64,
    imbalance: f64,
}

impl ModelParams {
    /// `omega`: level splitting of each qubit; `delta`: tunneling coupling
    /// between them; `uniform`: field strength B acting on the pair;
    /// `imbalance`: field difference b between the two sites.
    pub fn new(omega: f64, delta: f64, uniform: f64, imbalance: f64) -> Result<Self> {
        let named = [
            ("omega", omega),
            ("delta", delta),
            ("uniform field", uniform),
            ("field imbalance", imbalance),
        ];
        for (what, value) in named {
            if !value.is_finite() {
                return Err(Error::NonFinite { what, value });
            }
        }
        Ok(Self {
            omega,
            delta,
            uniform,
            imbalance,
        })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn uniform_field(&self) -> f64 {
        self.uniform
    }

    pub fn imbalance(&self) -> f64 {
        self.imbalance
    }

    /// A = B + omega, the effective field on the outer block.
    pub fn outer_field(&self) -> f64 {
        self.uniform + self.omega
    }
}

/// An inverse-temperature point. Keeps beta and T = 1/beta consistent,
/// including the closed ends: beta = 0 <=> T = inf and beta = inf <=> T = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalPoint {
    beta: f64,
    temperature: f64,
}

impl ThermalPoint {
    pub fn from_temperature(temperature: f64) -> Result<Self> {
        if temperature.is_nan() || temperature < 0.0 {
            return Err(Error::InvalidTemperature { value: temperature });
        }
        let beta = if temperature == 0.0 {
            f64::INFINITY
        } else {
            1.0 / temperature
        };
        Ok(Self {
            beta,
            temperature: temperature.max(0.0),
        })
    }

    pub fn from_beta(beta: f64) -> Result<Self> {
        if beta.is_nan() || beta < 0.0 {
            return Err(Error::InvalidTemperature { value: beta });
        }
        let temperature = if beta == 0.0 { f64::INFINITY } else { 1.0 / beta };
        Ok(Self {
            beta: beta.max(0.0),
            temperature,
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn is_zero_temperature(&self) -> bool {
        self.beta.is_infinite()
    }
}

/// Eigensystem of the Hamiltonian in closed form.
///
/// Canonical order (not sorted): index 0, 1 is the inner block with energies
/// -+ sqrt(b^2 + D^2), index 2, 3 the outer block with -+ sqrt(A^2 + D^2).
/// `angles[k]` is the mixing angle of eigenvector k within its block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    pub energies: [f64; 4],
    pub angles: [f64; 4],
}

impl Spectrum {
    /// Eigenvector `k` in the computational basis. Inner vectors are
    /// cos(theta) |01> + sin(theta) |10>, outer ones
    /// cos(theta) |00> + sin(theta) |11>; all real.
    pub fn eigenvector(&self, k: usize) -> [f64; 4] {
        let (c, s) = (self.angles[k].cos(), self.angles[k].sin());
        match k {
            0 | 1 => [0.0, c, s, 0.0],
            2 | 3 => [c, 0.0, 0.0, s],
            _ => panic!("eigenvector index {k} out of range"),
        }
    }
}

/// Dense layout of the Hamiltonian, for the definitional route.
pub fn hamiltonian(params: &ModelParams) -> DenseHermitian4 {
    let a = params.outer_field();
    let b = params.imbalance();
    let d = params.delta();
    let mut m = M4_ZERO;
    m[0][0] = Complex64::new(a, 0.0);
    m[1][1] = Complex64::new(-b, 0.0);
    m[2][2] = Complex64::new(b, 0.0);
    m[3][3] = Complex64::new(-a, 0.0);
    m[0][3] = Complex64::new(-d, 0.0);
    m[1][2] = Complex64::new(-d, 0.0);
    DenseHermitian4::from_upper(m)
}

/// Closed-form eigensystem.
///
/// The mixing angle with tan(theta) = D / (x + sqrt(x^2 + D^2)) is exactly
/// the half angle of atan2(D, x), which sidesteps the catastrophic
/// cancellation the naive quotient has for x < 0 and keeps every D -> 0
/// limit without branching: atan2(0, x) is 0 or pi as x is positive or
/// negative, and atan2(0, 0) = 0 picks a valid eigenbasis for a degenerate
/// zero block.
pub fn spectrum(params: &ModelParams) -> Spectrum {
    let a = params.outer_field();
    let b = params.imbalance();
    let d = params.delta();
    let r_in = b.hypot(d);
    let r_out = a.hypot(d);
    // tan(t1) = D/(b + r_in), tan(t2) = D/(b - r_in) and the outer pair the
    // same with b replaced by -A; each is +-half of one atan2.
    let angles = [
        0.5 * d.atan2(b),
        -0.5 * d.atan2(-b),
        0.5 * d.atan2(-a),
        -0.5 * d.atan2(a),
    ];
    Spectrum {
        energies: [-r_in, r_in, -r_out, r_out],
        angles,
    }
}

/// Z = 2 cosh(beta r_in) + 2 cosh(beta r_out). Errors at T = 0, where the
/// Gibbs weights are no longer defined through Z.
pub fn partition_function(params: &ModelParams, at: ThermalPoint) -> Result<f64> {
    if at.is_zero_temperature() {
        return Err(Error::InvalidTemperature { value: 0.0 });
    }
    let sp = spectrum(params);
    let r_in = sp.energies[1];
    let r_out = sp.energies[3];
    Ok(2.0 * (at.beta() * r_in).cosh() + 2.0 * (at.beta() * r_out).cosh())
}

/// ln Z evaluated with the ground energy factored out, so it stays finite
/// where Z itself overflows.
pub fn log_partition_function(params: &ModelParams, at: ThermalPoint) -> Result<f64> {
    if at.is_zero_temperature() {
        return Err(Error::InvalidTemperature { value: 0.0 });
    }
    let sp = spectrum(params);
    let beta = at.beta();
    let emin = sp.energies.iter().cloned().fold(f64::INFINITY, f64::min);
    let sum: f64 = sp.energies.iter().map(|&e| (-beta * (e - emin)).exp()).sum();
    Ok(-beta * emin + sum.ln())
}

/// Normalized Gibbs weights, one per canonical spectrum index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoltzmannWeights {
    pub weights: [f64; 4],
}

/// Weights e^(-beta E_k) / Z with the ground energy shifted out before
/// exponentiating, so no overflow occurs for any finite beta.
pub fn boltzmann_weights(sp: &Spectrum, at: ThermalPoint) -> Result<BoltzmannWeights> {
    if at.is_zero_temperature() {
        return Err(Error::InvalidTemperature { value: 0.0 });
    }
    for &e in &sp.energies {
        if !e.is_finite() {
            return Err(Error::NonFinite {
                what: "energy",
                value: e,
            });
        }
    }
    let beta = at.beta();
    let emin = sp.energies.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut weights = [0.0; 4];
    let mut sum = 0.0;
    for (w, &e) in weights.iter_mut().zip(sp.energies.iter()) {
        *w = (-beta * (e - emin)).exp();
        sum += *w;
    }
    for w in &mut weights {
        *w /= sum;
    }
    Ok(BoltzmannWeights { weights })
}

/// Thermal state through the closed-form spectrum: rho = sum_k w_k P_k with
/// the projectors assembled blockwise from the mixing angles. Errors at
/// T = 0; use [`gibbs_state`] or [`ground_state`] there.
pub fn thermal_state(params: &ModelParams, at: ThermalPoint) -> Result<XState> {
    let sp = spectrum(params);
    let w = boltzmann_weights(&sp, at)?.weights;
    let mut c = [0.0; 4];
    let mut s = [0.0; 4];
    for k in 0..4 {
        c[k] = sp.angles[k].cos();
        s[k] = sp.angles[k].sin();
    }
    let d1 = w[2] * c[2] * c[2] + w[3] * c[3] * c[3];
    let d2 = w[0] * c[0] * c[0] + w[1] * c[1] * c[1];
    let d3 = w[0] * s[0] * s[0] + w[1] * s[1] * s[1];
    let d4 = w[2] * s[2] * s[2] + w[3] * s[3] * s[3];
    let a14 = w[2] * s[2] * c[2] + w[3] * s[3] * c[3];
    let a23 = w[0] * s[0] * c[0] + w[1] * s[1] * c[1];
    XState::from_real([d1, d2, d3, d4], a14, a23)
}

/// Thermal state through the dense eigensolver, sharing no algebra with
/// [`thermal_state`]: diagonalize H numerically, exponentiate the shifted
/// eigenvalues, reassemble, and read the X structure back out.
pub fn thermal_state_definitional(params: &ModelParams, at: ThermalPoint) -> Result<XState> {
    if at.is_zero_temperature() {
        return Err(Error::InvalidTemperature { value: 0.0 });
    }
    let eig = dense_eigh(&hamiltonian(params))?;
    let beta = at.beta();
    let emin = eig.values[0];
    let mut w = [0.0; 4];
    let mut sum = 0.0;
    for (wk, &e) in w.iter_mut().zip(eig.values.iter()) {
        *wk = (-beta * (e - emin)).exp();
        sum += *wk;
    }
    let mut m = M4_ZERO;
    for k in 0..4 {
        let wk = w[k] / sum;
        for i in 0..4 {
            for j in i..4 {
                m[i][j] += wk * eig.vectors[k][i] * eig.vectors[k][j].conj();
            }
        }
    }
    XState::from_dense(&DenseHermitian4::from_upper(m))
}

/// T = 0 limit: projector onto the ground block's lowest eigenvector, or the
/// even mixture of both blocks' lowest when the two ground energies tie
/// exactly in f64.
pub fn ground_state(params: &ModelParams) -> XState {
    let sp = spectrum(params);
    let r_in = sp.energies[1];
    let r_out = sp.energies[3];
    let (c1, s1) = (sp.angles[0].cos(), sp.angles[0].sin());
    let (c3, s3) = (sp.angles[2].cos(), sp.angles[2].sin());
    let inner = |scale: f64| ([0.0, scale * c1 * c1, scale * s1 * s1, 0.0], 0.0, scale * s1 * c1);
    let outer = |scale: f64| ([scale * c3 * c3, 0.0, 0.0, scale * s3 * s3], scale * s3 * c3, 0.0);
    let (d, a14, a23) = if r_in > r_out {
        inner(1.0)
    } else if r_out > r_in {
        outer(1.0)
    } else {
        let (di, _, a23) = inner(0.5);
        let (do_, a14, _) = outer(0.5);
        ([do_[0], di[1], di[2], do_[3]], a14, a23)
    };
    XState::from_real(d, a14, a23).expect("cos/sin are finite")
}

/// Gibbs state at any temperature: dispatches to [`ground_state`] at T = 0
/// and to [`thermal_state`] otherwise.
pub fn gibbs_state(params: &ModelParams, at: ThermalPoint) -> Result<XState> {
    if at.is_zero_temperature() {
        Ok(ground_state(params))
    } else {
        thermal_state(params, at)
    }
}
