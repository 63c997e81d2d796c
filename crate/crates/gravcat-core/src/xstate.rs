//! X-structured two-qubit density matrices.
//!
//! An X state carries weight only on the diagonal and the anti-diagonal:
//!
//! ```text
//!     [ d1   .    .   a14 ]
//!     [ .    d2  a23   .  ]
//!     [ .   a23*  d3   .  ]
//!     [ a14* .    .   d4  ]
//! ```
//!
//! The two 2x2 blocks (outer: rows/cols 1 and 4, inner: 2 and 3) evolve
//! independently under the square root, which is what makes the closed-form
//! correlation measures in [`crate::lqu`] possible. Every routine here works
//! blockwise; the dense cross-checks live in [`crate::dense`].

use num_complex::Complex64;

use crate::dense::{DenseHermitian4, M4, M4_ZERO};
use crate::{Error, Result};

/// Off-X magnitudes above this reject a dense matrix in [`XState::from_dense`].
pub const X_STRUCTURE_TOL: f64 = 1e-12;
/// Soft tolerance used by [`XState::validate`] for trace, diagonal sign and
/// block positivity.
pub const VALIDATE_TOL: f64 = 1e-12;
/// A block with determinant or trace below -BLOCK_REJECT cannot be rooted.
pub const BLOCK_REJECT: f64 = 1e-10;

/// A complex scalar whose components are finite by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexScalar {
    re: f64,
    im: f64,
}

impl ComplexScalar {
    pub const ZERO: ComplexScalar = ComplexScalar { re: 0.0, im: 0.0 };

    /// Rejects NaN and infinities; this is the only public way in.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() {
            return Err(Error::NonFinite {
                what: "complex real part",
                value: re,
            });
        }
        if !im.is_finite() {
            return Err(Error::NonFinite {
                what: "complex imaginary part",
                value: im,
            });
        }
        Ok(Self { re, im })
    }

    pub fn real(re: f64) -> Result<Self> {
        Self::new(re, 0.0)
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    pub(crate) fn from_c64(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }

    pub(crate) fn to_c64(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// One invariant an [`XState`] fails to satisfy, with its magnitude.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// Trace deviates from one by this much (signed).
    Trace { deviation: f64 },
    /// Diagonal entry `index` (0-based) is negative beyond tolerance.
    NegativeDiagonal { index: usize, value: f64 },
    /// |a|^2 exceeds the product of the block's diagonal entries by `deficit`.
    BlockNotPsd { block: &'static str, deficit: f64 },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Trace { deviation } => write!(f, "trace deviates by {deviation:.3e}"),
            Violation::NegativeDiagonal { index, value } => {
                write!(f, "diagonal entry {index} is negative ({value:.3e})")
            }
            Violation::BlockNotPsd { block, deficit } => {
                write!(f, "{block} block violates positivity by {deficit:.3e}")
            }
        }
    }
}

/// Outcome of [`XState::validate`]: never panics, just lists what is broken.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The six nonvanishing correlation components of a phase-normalized X
/// matrix m (not necessarily unit trace):
///
/// ```text
///   r00 = tr m                      r33 = m11 - m22 - m33 + m44
///   r03 = m11 - m22 + m33 - m44     r30 = m11 + m22 - m33 - m44
///   r11 = 2 (m23 + m14)             r22 = 2 (m23 - m14)
/// ```
///
/// r11 >= r22 holds whenever the off-diagonals are nonnegative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FanoBloch {
    pub r00: f64,
    pub r03: f64,
    pub r30: f64,
    pub r11: f64,
    pub r22: f64,
    pub r33: f64,
}

fn fano_of(d: [f64; 4], a14: f64, a23: f64) -> FanoBloch {
    FanoBloch {
        r00: d[0] + d[1] + d[2] + d[3],
        r03: d[0] - d[1] + d[2] - d[3],
        r30: d[0] + d[1] - d[2] - d[3],
        r11: 2.0 * (a23 + a14),
        r22: 2.0 * (a23 - a14),
        r33: d[0] - d[1] - d[2] + d[3],
    }
}

/// An X-structured density matrix. Constructors only reject non-finite
/// input; physical invariants (unit trace, positivity) are checked softly by
/// [`XState::validate`] so that callers can inspect broken states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    d: [f64; 4],
    a14: ComplexScalar,
    a23: ComplexScalar,
}

impl XState {
    pub fn new(d: [f64; 4], a14: ComplexScalar, a23: ComplexScalar) -> Result<Self> {
        for (i, &x) in d.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFinite {
                    what: ["d1", "d2", "d3", "d4"][i],
                    value: x,
                });
            }
        }
        Ok(Self { d, a14, a23 })
    }

    /// Convenience for the common all-real case.
    pub fn from_real(d: [f64; 4], a14: f64, a23: f64) -> Result<Self> {
        Self::new(d, ComplexScalar::real(a14)?, ComplexScalar::real(a23)?)
    }

    pub fn diag(&self) -> [f64; 4] {
        self.d
    }

    pub fn a14(&self) -> ComplexScalar {
        self.a14
    }

    pub fn a23(&self) -> ComplexScalar {
        self.a23
    }

    /// Soft invariant check: unit trace, nonnegative diagonal, block
    /// positivity, all to [`VALIDATE_TOL`]. Reports instead of failing.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let tr = self.d.iter().sum::<f64>();
        if (tr - 1.0).abs() > VALIDATE_TOL {
            violations.push(Violation::Trace { deviation: tr - 1.0 });
        }
        for (i, &x) in self.d.iter().enumerate() {
            if x < -VALIDATE_TOL {
                violations.push(Violation::NegativeDiagonal { index: i, value: x });
            }
        }
        let outer = self.a14.modulus().powi(2) - self.d[0] * self.d[3];
        if outer > VALIDATE_TOL {
            violations.push(Violation::BlockNotPsd {
                block: "outer",
                deficit: outer,
            });
        }
        let inner = self.a23.modulus().powi(2) - self.d[1] * self.d[2];
        if inner > VALIDATE_TOL {
            violations.push(Violation::BlockNotPsd {
                block: "inner",
                deficit: inner,
            });
        }
        ValidationReport { violations }
    }

    /// Strips the off-diagonal phases: a14 -> |a14|, a23 -> |a23|. This is a
    /// local unitary on each block, so spectra, LQU and concurrence are
    /// unchanged while every closed form below becomes real algebra.
    pub fn remove_phases(&self) -> XState {
        XState {
            d: self.d,
            a14: ComplexScalar {
                re: self.a14.modulus(),
                im: 0.0,
            },
            a23: ComplexScalar {
                re: self.a23.modulus(),
                im: 0.0,
            },
        }
    }

    /// Blockwise principal square root.
    ///
    /// Each 2x2 PSD block M maps to (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)),
    /// the unique PSD root (Cayley-Hamilton). A zero block roots to zero.
    /// Blocks with det or trace below -[`BLOCK_REJECT`] are rejected;
    /// small negatives are rounding residue and clip to zero.
    pub fn sqrt(&self) -> Result<XRoot> {
        let (t11, t44, t14) = block_sqrt(self.d[0], self.d[3], self.a14, "outer")?;
        let (t22, t33, t23) = block_sqrt(self.d[1], self.d[2], self.a23, "inner")?;
        Ok(XRoot {
            d: [t11, t22, t33, t44],
            a14: t14,
            a23: t23,
        })
    }

    /// Correlation components of the state itself. Requires a
    /// phase-normalized state (real nonnegative off-diagonals); apply
    /// [`XState::remove_phases`] first. The imaginary parts are ignored.
    pub fn fano_bloch(&self) -> FanoBloch {
        debug_assert!(
            self.a14.im == 0.0 && self.a14.re >= 0.0,
            "fano_bloch needs a phase-normalized state"
        );
        debug_assert!(self.a23.im == 0.0 && self.a23.re >= 0.0);
        fano_of(self.d, self.a14.re, self.a23.re)
    }

    /// tr(rho^2) evaluated blockwise.
    pub fn purity(&self) -> f64 {
        self.d.iter().map(|x| x * x).sum::<f64>()
            + 2.0 * (self.a14.re * self.a14.re + self.a14.im * self.a14.im)
            + 2.0 * (self.a23.re * self.a23.re + self.a23.im * self.a23.im)
    }

    /// Lays the state out as a dense Hermitian matrix (exact embedding).
    pub fn to_dense(&self) -> DenseHermitian4 {
        let mut m = M4_ZERO;
        for i in 0..4 {
            m[i][i] = Complex64::new(self.d[i], 0.0);
        }
        m[0][3] = self.a14.to_c64();
        m[1][2] = self.a23.to_c64();
        DenseHermitian4::from_upper(m)
    }

    /// Reads an X state back out of a dense matrix. Rejects matrices with
    /// weight beyond [`X_STRUCTURE_TOL`] outside the X positions, reporting
    /// the largest offender.
    pub fn from_dense(h: &DenseHermitian4) -> Result<XState> {
        let m: &M4 = h.raw();
        let mut worst = (0usize, 0usize, 0.0f64);
        for &(i, j) in &[(0usize, 1usize), (0, 2), (1, 3), (2, 3)] {
            let mag = m[i][j].norm();
            if mag > worst.2 {
                worst = (i, j, mag);
            }
        }
        if worst.2 > X_STRUCTURE_TOL {
            return Err(Error::NotXStructured {
                row: worst.0,
                col: worst.1,
                magnitude: worst.2,
            });
        }
        Ok(XState {
            d: [m[0][0].re, m[1][1].re, m[2][2].re, m[3][3].re],
            a14: ComplexScalar::from_c64(m[0][3]),
            a23: ComplexScalar::from_c64(m[1][2]),
        })
    }
}

/// Square root of an X state: same structure, diagonal nonnegative, and the
/// off-diagonals carry the phases of the original blocks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XRoot {
    d: [f64; 4],
    a14: ComplexScalar,
    a23: ComplexScalar,
}

impl XRoot {
    pub fn diag(&self) -> [f64; 4] {
        self.d
    }

    pub fn a14(&self) -> ComplexScalar {
        self.a14
    }

    pub fn a23(&self) -> ComplexScalar {
        self.a23
    }

    /// Correlation components of the root; same phase-normalization
    /// precondition as [`XState::fano_bloch`].
    pub fn fano_bloch(&self) -> FanoBloch {
        debug_assert!(
            self.a14.im == 0.0 && self.a14.re >= 0.0,
            "fano_bloch needs a phase-normalized root"
        );
        debug_assert!(self.a23.im == 0.0 && self.a23.re >= 0.0);
        fano_of(self.d, self.a14.re, self.a23.re)
    }

    pub fn to_dense(&self) -> DenseHermitian4 {
        let mut m = M4_ZERO;
        for i in 0..4 {
            m[i][i] = Complex64::new(self.d[i], 0.0);
        }
        m[0][3] = self.a14.to_c64();
        m[1][2] = self.a23.to_c64();
        DenseHermitian4::from_upper(m)
    }
}

/// det(M) = p q - |a|^2 for the block [[p, a], [a*, q]], evaluated with the
/// fused-multiply-add compensation so cancellation keeps full relative
/// accuracy. Tiny determinants are real here: near-pure Gibbs states have
/// det ~ product of two Boltzmann weights, far below eps * p q, and the
/// naive expression would wipe them out.
fn block_det(p: f64, q: f64, r: f64) -> f64 {
    let w = r * r;
    let e = f64::mul_add(r, r, -w);
    f64::mul_add(p, q, -w) - e
}

fn block_sqrt(p: f64, q: f64, a: ComplexScalar, block: &'static str) -> Result<(f64, f64, ComplexScalar)> {
    let r = a.modulus();
    let tr = p + q;
    let det = block_det(p, q, r);
    if det < -BLOCK_REJECT || tr < -BLOCK_REJECT {
        return Err(Error::BlockNotPsd { block, det, trace: tr });
    }
    // Determinants inside the rounding band of p q and r^2 are artifacts of
    // assembling the entries in f64 (a rank-1 block built from rounded
    // cos/sin lands here); treating them as exact zeros keeps pure states
    // exactly pure. Genuine near-pure thermal determinants sit orders of
    // magnitude above the band and pass through untouched.
    let band = 8.0 * f64::EPSILON * (p * q).abs().max(r * r);
    let det = if det <= band { 0.0 } else { det };
    let s = det.sqrt();
    let rr = tr.max(0.0) + 2.0 * s;
    if rr < 1e-300 {
        if p.abs() <= BLOCK_REJECT && q.abs() <= BLOCK_REJECT && r <= BLOCK_REJECT {
            return Ok((0.0, 0.0, ComplexScalar::ZERO));
        }
        return Err(Error::BlockNotPsd { block, det, trace: tr });
    }
    let denom = rr.sqrt();
    Ok((
        ((p + s) / denom).max(0.0),
        ((q + s) / denom).max(0.0),
        ComplexScalar {
            re: a.re / denom,
            im: a.im / denom,
        },
    ))
}
