//! Closed-form correlation measures for X states: local quantum uncertainty
//! (LQU) and concurrence.
//!
//! The LQU of a bipartite state is the skew information
//! I(rho, K) = -1/2 tr([sqrt(rho), K]^2) minimized over all single-site
//! observables K = n.sigma x 1 with |n| = 1. Writing sqrt(rho) in the
//! correlation (Fano-Bloch) representation, I(rho, K) = 1 - n^T W n for a
//! 3x3 matrix W that is diagonal whenever the root is a phase-normalized X
//! matrix, so the minimum is 1 - max(w1, w3) with
//!
//! ```text
//!   w1 = 1/4 (r00^2 - r33^2 + r03^2 - r30^2 + r11^2 - r22^2)
//!   w2 = 1/4 (r00^2 - r33^2 + r03^2 - r30^2 - r11^2 + r22^2)
//!   w3 = 1/4 (r00^2 + r33^2 + r03^2 + r30^2 - r11^2 - r22^2)
//! ```
//!
//! evaluated on the components of sqrt(rho). w1 >= w2 always holds there
//! (their gap is 8 t14 t23 with nonnegative off-diagonals), so w2 never
//! attains the maximum. The derivation is spelled out in
//! `docs/w-eigenvalues.md`; the brute-force check lives in [`crate::oracle`].
//!
//! [`lqu_paper_mode`] evaluates the same three forms on the components of
//! rho itself instead of its root. That variant is cheaper (no square root)
//! and coincides with the exact LQU on pure states, but on mixed states it
//! is a different quantity; both are computed so they can be compared.

use crate::xstate::{FanoBloch, XState};
use crate::{Error, Result};

/// Which matrix the quadratic forms were evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Forms on sqrt(rho): the true minimized skew information.
    Exact,
    /// Forms on rho itself: the density-substituted variant.
    Paper,
}

/// Which of the two candidate W eigenvalues attained the maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    W1,
    W3,
}

/// The three diagonal entries of W in x, y, z order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WEigenvalues {
    pub w1: f64,
    pub w2: f64,
    pub w3: f64,
}

impl WEigenvalues {
    pub fn max_relevant(&self) -> f64 {
        self.w1.max(self.w3)
    }
}

/// One LQU evaluation: the value 1 - max(w1, w3) (not clamped), the three
/// W eigenvalues behind it, the branch that won (ties report W3), and the
/// mode it was computed in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LquResult {
    pub value: f64,
    pub w: WEigenvalues,
    pub branch: Branch,
    pub mode: Mode,
}

/// Both measures on one state, phase-normalized once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureComparison {
    pub lqu_exact: LquResult,
    pub lqu_paper: LquResult,
    pub concurrence: f64,
}

fn quadratic_forms(fb: &FanoBloch) -> WEigenvalues {
    let diag_even = fb.r00 * fb.r00 + fb.r33 * fb.r33 + fb.r03 * fb.r03 + fb.r30 * fb.r30;
    let diag_odd = fb.r00 * fb.r00 - fb.r33 * fb.r33 + fb.r03 * fb.r03 - fb.r30 * fb.r30;
    let off = fb.r11 * fb.r11 - fb.r22 * fb.r22;
    WEigenvalues {
        w1: 0.25 * (diag_odd + off),
        w2: 0.25 * (diag_odd - off),
        w3: 0.25 * (diag_even - (fb.r11 * fb.r11 + fb.r22 * fb.r22)),
    }
}

fn require_phase_normalized(state: &XState) -> Result<()> {
    if state.a14().im() != 0.0 || state.a14().re() < 0.0 {
        return Err(Error::NotPhaseNormalized { offender: "a14" });
    }
    if state.a23().im() != 0.0 || state.a23().re() < 0.0 {
        return Err(Error::NotPhaseNormalized { offender: "a23" });
    }
    Ok(())
}

fn pick(w: WEigenvalues, mode: Mode) -> LquResult {
    // Ties go to W3 so the branch label is stable where the two surfaces
    // cross.
    let branch = if w.w1 > w.w3 { Branch::W1 } else { Branch::W3 };
    LquResult {
        value: 1.0 - w.max_relevant(),
        w,
        branch,
        mode,
    }
}

/// W eigenvalues on sqrt(rho). Requires a phase-normalized state (use
/// [`XState::remove_phases`]; the measures are invariant under it).
pub fn w_closed_form(state: &XState) -> Result<WEigenvalues> {
    require_phase_normalized(state)?;
    let root = state.sqrt()?;
    Ok(quadratic_forms(&root.fano_bloch()))
}

/// Local quantum uncertainty through the closed form.
pub fn lqu(state: &XState) -> Result<LquResult> {
    Ok(pick(w_closed_form(state)?, Mode::Exact))
}

/// The density-substituted variant: same quadratic forms, evaluated on the
/// state's own correlation components (no square root). Agrees with [`lqu`]
/// on pure states; on mixed states it is a distinct quantity (e.g. 3/4, not
/// 0, on the maximally mixed state) and is reported alongside the exact
/// value rather than instead of it.
pub fn lqu_paper_mode(state: &XState) -> Result<LquResult> {
    require_phase_normalized(state)?;
    Ok(pick(quadratic_forms(&state.fano_bloch()), Mode::Paper))
}

/// Concurrence of an X state:
/// 2 max(0, |a14| - sqrt(d2 d3), |a23| - sqrt(d1 d4)). Phases drop out, so
/// any X state is accepted. Tiny negative diagonal products (rounding) clip
/// to zero under the root.
pub fn concurrence(state: &XState) -> f64 {
    let d = state.diag();
    let from_outer = state.a14().modulus() - (d[1] * d[2]).max(0.0).sqrt();
    let from_inner = state.a23().modulus() - (d[0] * d[3]).max(0.0).sqrt();
    2.0 * from_outer.max(from_inner).max(0.0)
}

/// Phase-normalizes once and evaluates all measures.
pub fn compare_measures(state: &XState) -> Result<MeasureComparison> {
    let normalized = state.remove_phases();
    Ok(MeasureComparison {
        lqu_exact: lqu(&normalized)?,
        lqu_paper: lqu_paper_mode(&normalized)?,
        concurrence: concurrence(state),
    })
}
