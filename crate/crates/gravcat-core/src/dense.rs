//! Dense 4x4 Hermitian linear algebra: a cyclic Jacobi eigensolver and the
//! eigenbasis matrix square root.
//!
//! This is the definitional route. Nothing here knows about X structure,
//! blocks, or closed forms; the blockwise machinery in [`crate::xstate`] and
//! [`crate::lqu`] is validated against these routines, so the two sides must
//! not share algebra.

use num_complex::Complex64;

use crate::xstate::ComplexScalar;
use crate::{Error, Result};

/// Off-diagonal Frobenius norm at which the Jacobi iteration stops.
pub const JACOBI_TOL: f64 = 1e-14;
/// Hard cap on Jacobi sweeps. A 4x4 Hermitian matrix needs about six.
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Largest tolerated deviation from Hermiticity on construction.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Eigenvalues below -PSD_REJECT fail the PSD square root; eigenvalues in
/// [-PSD_REJECT, 0) are rounding residue and clip to zero.
pub const PSD_REJECT: f64 = 1e-10;

pub(crate) type M4 = [[Complex64; 4]; 4];

pub(crate) const M4_ZERO: M4 = [[Complex64::new(0.0, 0.0); 4]; 4];

pub(crate) fn mat_mul(a: &M4, b: &M4) -> M4 {
    let mut out = M4_ZERO;
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i][k];
            if aik == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..4 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// A 4x4 Hermitian matrix. The stored entries satisfy m[i][j] = conj(m[j][i])
/// exactly: construction mirrors the upper triangle and drops the imaginary
/// part of the diagonal after checking the input was Hermitian to
/// [`HERMITICITY_TOL`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DenseHermitian4 {
    m: M4,
}

impl DenseHermitian4 {
    /// Builds from 16 entries (row major). Rejects input whose asymmetry
    /// exceeds [`HERMITICITY_TOL`]; smaller asymmetry is averaged away.
    pub fn from_rows(rows: [[ComplexScalar; 4]; 4]) -> Result<Self> {
        let mut raw = M4_ZERO;
        for (i, row) in rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                raw[i][j] = Complex64::new(e.re(), e.im());
            }
        }
        let mut asym: f64 = 0.0;
        for i in 0..4 {
            for j in i..4 {
                asym = asym.max((raw[i][j] - raw[j][i].conj()).norm());
            }
        }
        if asym > HERMITICITY_TOL {
            return Err(Error::NotHermitian { asymmetry: asym });
        }
        let mut m = M4_ZERO;
        for i in 0..4 {
            m[i][i] = Complex64::new(raw[i][i].re, 0.0);
            for j in (i + 1)..4 {
                m[i][j] = 0.5 * (raw[i][j] + raw[j][i].conj());
                m[j][i] = m[i][j].conj();
            }
        }
        Ok(Self { m })
    }

    /// Internal constructor for matrices that are Hermitian by build, e.g.
    /// the Hamiltonian or an X state laid out densely. Mirrors the upper
    /// triangle so the invariant holds bit for bit.
    pub(crate) fn from_upper(m: M4) -> Self {
        let mut out = M4_ZERO;
        for i in 0..4 {
            out[i][i] = Complex64::new(m[i][i].re, 0.0);
            for j in (i + 1)..4 {
                out[i][j] = m[i][j];
                out[j][i] = m[i][j].conj();
            }
        }
        Self { m: out }
    }

    pub fn entry(&self, row: usize, col: usize) -> ComplexScalar {
        ComplexScalar::from_c64(self.m[row][col])
    }

    pub(crate) fn raw(&self) -> &M4 {
        &self.m
    }
}

/// Result of [`dense_eigh`]: `values[k]` (ascending) pairs with the
/// orthonormal eigenvector `vectors[k]`.
///
/// Sign convention: each vector is rotated by a global phase so that its
/// largest-magnitude component (lowest index on ties) is real and positive.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub values: [f64; 4],
    pub vectors: [[Complex64; 4]; 4],
}

/// Full eigendecomposition by cyclic Jacobi rotations, iterated until the
/// off-diagonal Frobenius norm drops below [`JACOBI_TOL`] (at most
/// [`JACOBI_MAX_SWEEPS`] sweeps, 4x4 converges in a handful).
pub fn dense_eigh(h: &DenseHermitian4) -> Result<EigenDecomposition> {
    let mut a: M4 = *h.raw();
    let mut v: M4 = M4_ZERO;
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off < JACOBI_TOL {
            break;
        }
        if sweeps >= JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { residual: off });
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    // Sort ascending; ties keep the lower pre-sort index so the output is a
    // pure function of the input bits.
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| a[i][i].re.partial_cmp(&a[j][j].re).unwrap().then(i.cmp(&j)));

    let mut values = [0.0; 4];
    let mut vectors = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (k, &idx) in order.iter().enumerate() {
        values[k] = a[idx][idx].re;
        for i in 0..4 {
            vectors[k][i] = v[i][idx];
        }
        fix_phase(&mut vectors[k]);
    }
    Ok(EigenDecomposition { values, vectors })
}

/// PSD square root through the eigenbasis: clips eigenvalues in
/// [-[`PSD_REJECT`], 0) to zero, rejects anything more negative.
pub fn dense_sqrt(h: &DenseHermitian4) -> Result<DenseHermitian4> {
    let eig = dense_eigh(h)?;
    let mut roots = [0.0; 4];
    for (r, &lambda) in roots.iter_mut().zip(eig.values.iter()) {
        if lambda < -PSD_REJECT {
            return Err(Error::NegativeEigenvalue { value: lambda });
        }
        *r = lambda.max(0.0).sqrt();
    }
    let mut m = M4_ZERO;
    for i in 0..4 {
        for j in i..4 {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..4 {
                s += roots[k] * eig.vectors[k][i] * eig.vectors[k][j].conj();
            }
            m[i][j] = s;
        }
    }
    Ok(DenseHermitian4::from_upper(m))
}

fn off_norm(a: &M4) -> f64 {
    let mut s = 0.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            s += a[i][j].norm_sqr();
        }
    }
    (2.0 * s).sqrt()
}

/// One Jacobi rotation annihilating the (p, q) pivot of the Hermitian
/// matrix `a`, accumulated into `v` (as V <- V R, columns are eigenvectors).
///
/// With h_pq = r e^{i phi}, alpha = a_pp, beta = a_qq, the plane rotation
///
/// ```text
///   R_pp = c,  R_pq = -s e^{i phi},  R_qp = s e^{-i phi},  R_qq = c
/// ```
///
/// zeroes the pivot when t = s/c solves t^2 - 2 theta t - 1 = 0 with
/// theta = (beta - alpha) / (2 r); the smaller root keeps |t| <= 1 so the
/// rotation angle never exceeds pi/4. Diagonal updates: alpha + t r and
/// beta - t r.
fn rotate(a: &mut M4, v: &mut M4, p: usize, q: usize) {
    let pivot = a[p][q];
    let r = pivot.norm();
    if r == 0.0 {
        return;
    }
    let phase = pivot / r;
    let alpha = a[p][p].re;
    let beta = a[q][q].re;
    let theta = (beta - alpha) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        // theta^2 would overflow; the small root is asymptotically -1/(2 theta).
        -0.5 / theta
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        -sign / (theta.abs() + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    a[p][p] = Complex64::new(alpha + t * r, 0.0);
    a[q][q] = Complex64::new(beta - t * r, 0.0);
    a[p][q] = Complex64::new(0.0, 0.0);
    a[q][p] = Complex64::new(0.0, 0.0);

    for j in 0..4 {
        if j == p || j == q {
            continue;
        }
        let gjp = a[j][p];
        let gjq = a[j][q];
        a[j][p] = c * gjp + s * phase.conj() * gjq;
        a[j][q] = -s * phase * gjp + c * gjq;
        a[p][j] = a[j][p].conj();
        a[q][j] = a[j][q].conj();
    }
    for row in v.iter_mut() {
        let gjp = row[p];
        let gjq = row[q];
        row[p] = c * gjp + s * phase.conj() * gjq;
        row[q] = -s * phase * gjp + c * gjq;
    }
}

/// Rotates a vector by a global phase so its largest-magnitude component
/// (lowest index on ties) is real positive. Leaves the bits alone when the
/// component already is, so repeated runs are identical.
fn fix_phase(vec: &mut [Complex64; 4]) {
    let mut imax = 0;
    let mut best = vec[0].norm_sqr();
    for (i, x) in vec.iter().enumerate().skip(1) {
        let n = x.norm_sqr();
        if n > best {
            best = n;
            imax = i;
        }
    }
    let lead = vec[imax];
    if lead.im == 0.0 && lead.re >= 0.0 {
        return;
    }
    let factor = lead.conj() / lead.norm();
    for x in vec.iter_mut() {
        *x *= factor;
    }
    vec[imax] = Complex64::new(vec[imax].re, 0.0);
}
