//! Brute-force verification oracles for the closed forms in [`crate::lqu`].
//!
//! Everything here goes through the dense eigensolver route: skew
//! information evaluated from its definition, minimized over the Bloch
//! sphere by a Fibonacci lattice scan plus alternating golden-section
//! refinement, and the full 3x3 W matrix assembled entry by entry. None of
//! it shares algebra with the blockwise closed forms, which is the point.
//!
//! Determinism: no randomness anywhere. The lattice is a fixed sequence,
//! ties keep the lowest index, and the refinement is a fixed iteration.

use num_complex::Complex64;

use crate::dense::{dense_sqrt, mat_mul, M4, M4_ZERO};
use crate::xstate::XState;
use crate::{Error, Result};

/// Lattice size used by [`MinimizeConfig::default`].
pub const DEFAULT_COARSE_POINTS: usize = 512;
/// Refinement bracket tolerance used by [`MinimizeConfig::default`].
pub const DEFAULT_REFINE_TOL: f64 = 1e-9;

const INVPHI: f64 = 0.618_033_988_749_894_9;

/// A unit vector on the Bloch sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    n: [f64; 3],
}

impl BlochVector {
    /// Accepts a vector within 1e-12 of unit norm and rescales it exactly
    /// onto the sphere.
    pub fn new(n: [f64; 3]) -> Result<Self> {
        for &x in &n {
            if !x.is_finite() {
                return Err(Error::NonFinite {
                    what: "bloch component",
                    value: x,
                });
            }
        }
        let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidBlochVector { norm });
        }
        Ok(Self {
            n: [n[0] / norm, n[1] / norm, n[2] / norm],
        })
    }

    /// Spherical parametrization: theta from the +z pole, azimuth phi.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (st, ct) = (theta.sin(), theta.cos());
        Self {
            n: [st * phi.cos(), st * phi.sin(), ct],
        }
    }

    pub fn components(&self) -> [f64; 3] {
        self.n
    }
}

/// Controls for [`minimize_skew`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimizeConfig {
    /// Fibonacci lattice size for the coarse scan (at least 4).
    pub coarse_points: usize,
    /// Golden-section bracket width at which a line search stops.
    pub refine_tol: f64,
}

impl Default for MinimizeConfig {
    fn default() -> Self {
        Self {
            coarse_points: DEFAULT_COARSE_POINTS,
            refine_tol: DEFAULT_REFINE_TOL,
        }
    }
}

/// Outcome of [`minimize_skew`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewResult {
    pub min_value: f64,
    pub argmin: BlochVector,
    /// Total objective evaluations (lattice plus refinement).
    pub evaluations: usize,
}

/// The numeric W matrix and its eigenvalues, ascending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WNumeric {
    pub matrix: [[f64; 3]; 3],
    pub eigenvalues: [f64; 3],
}

/// (sigma . n) x 1 in the computational basis: the first qubit carries the
/// observable, the second is untouched.
fn site_observable(n: [f64; 3]) -> M4 {
    let mut k = M4_ZERO;
    let up = Complex64::new(n[0], -n[1]);
    let dn = Complex64::new(n[0], n[1]);
    let z = Complex64::new(n[2], 0.0);
    k[0][0] = z;
    k[1][1] = z;
    k[2][2] = -z;
    k[3][3] = -z;
    k[0][2] = up;
    k[1][3] = up;
    k[2][0] = dn;
    k[3][1] = dn;
    k
}

fn commutator_skew(root: &M4, k: &M4) -> f64 {
    // I(rho, K) = -1/2 tr([sqrt(rho), K]^2). The commutator C is
    // anti-Hermitian, so -tr(C^2) = ||C||_F^2 and the result is nonnegative
    // by construction.
    let ak = mat_mul(root, k);
    let ka = mat_mul(k, root);
    let mut frob = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            frob += (ak[i][j] - ka[i][j]).norm_sqr();
        }
    }
    0.5 * frob
}

/// Skew information of the state with respect to (sigma . n) x 1, straight
/// from the definition through the dense square root. Recomputes the root on
/// every call; [`minimize_skew`] amortizes it.
pub fn skew_information(state: &XState, n: &BlochVector) -> Result<f64> {
    let root = dense_sqrt(&state.to_dense())?;
    Ok(commutator_skew(root.raw(), &site_observable(n.components())))
}

/// Variance of (sigma . n) x 1 in the state: tr(rho K^2) - tr(rho K)^2.
/// Upper-bounds the skew information, with equality on pure states.
pub fn variance(state: &XState, n: &BlochVector) -> Result<f64> {
    let rho = state.to_dense();
    let k = site_observable(n.components());
    let rk = mat_mul(rho.raw(), &k);
    let rkk = mat_mul(&rk, &k);
    let mut tr_rk = Complex64::new(0.0, 0.0);
    let mut tr_rkk = Complex64::new(0.0, 0.0);
    for i in 0..4 {
        tr_rk += rk[i][i];
        tr_rkk += rkk[i][i];
    }
    Ok(tr_rkk.re - tr_rk.re * tr_rk.re)
}

/// The standard equal-area lattice: z descends in 2/n steps, azimuth
/// advances by the golden angle. Deterministic in n.
pub fn fibonacci_lattice(n: usize) -> Vec<BlochVector> {
    let golden_angle = std::f64::consts::PI * (3.0 - 5.0_f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
            let s = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden_angle * i as f64;
            BlochVector {
                n: [s * phi.cos(), s * phi.sin(), z],
            }
        })
        .collect()
}

fn golden_min<F: FnMut(f64) -> f64>(f: &mut F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a) > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Minimizes the skew information over the Bloch sphere: coarse Fibonacci
/// scan (strict improvement keeps the earliest point, so ties are stable),
/// then up to 50 rounds of alternating golden-section line searches in theta
/// and phi with a bracket that halves each round down to 100x the tolerance.
/// The best value ever seen is returned, so refinement can only improve on
/// the lattice.
pub fn minimize_skew(state: &XState, config: MinimizeConfig) -> Result<SkewResult> {
    if config.coarse_points < 4 {
        return Err(Error::InvalidConfig {
            what: "coarse_points must be at least 4",
        });
    }
    if !(config.refine_tol.is_finite() && config.refine_tol > 0.0) {
        return Err(Error::InvalidConfig {
            what: "refine_tol must be positive and finite",
        });
    }

    let root = dense_sqrt(&state.to_dense())?;
    let root = *root.raw();
    let mut evaluations = 0usize;
    let mut eval_n = |n: [f64; 3]| {
        evaluations += 1;
        commutator_skew(&root, &site_observable(n))
    };

    let lattice = fibonacci_lattice(config.coarse_points);
    let mut best_n = lattice[0].n;
    let mut best = eval_n(best_n);
    for p in &lattice[1..] {
        let v = eval_n(p.n);
        if v < best {
            best = v;
            best_n = p.n;
        }
    }

    let mut theta = best_n[2].clamp(-1.0, 1.0).acos();
    let mut phi = best_n[1].atan2(best_n[0]);
    let mut eval_angles =
        |t: f64, p: f64| eval_n([t.sin() * p.cos(), t.sin() * p.sin(), t.cos()]);

    // Initial bracket half-width: twice the lattice cell diameter.
    let floor = 100.0 * config.refine_tol;
    let mut h = 2.0 * (4.0 * std::f64::consts::PI / config.coarse_points as f64).sqrt();
    let mut best_angles = (theta, phi);
    for _ in 0..50 {
        let before = best;
        let (t, ft) = golden_min(
            &mut |t| eval_angles(t, phi),
            (theta - h).max(0.0),
            (theta + h).min(std::f64::consts::PI),
            config.refine_tol,
        );
        theta = t;
        if ft < best {
            best = ft;
            best_angles = (theta, phi);
        }
        let (p, fp) = golden_min(&mut |p| eval_angles(theta, p), phi - h, phi + h, config.refine_tol);
        phi = p;
        if fp < best {
            best = fp;
            best_angles = (theta, phi);
        }
        h = (h / 2.0).max(floor);
        if before - best < 0.01 * config.refine_tol && h <= floor {
            break;
        }
    }

    Ok(SkewResult {
        min_value: best,
        argmin: BlochVector::from_angles(best_angles.0, best_angles.1),
        evaluations,
    })
}

/// W_lk = tr(sqrt(rho) sigma_l x 1 sqrt(rho) sigma_k x 1), assembled
/// numerically as dense trace products of the phase-normalized root. The
/// root itself comes from the blockwise closed form: near-pure states have
/// eigenvalues far below machine epsilon, where an eigendecomposition root
/// would inject O(sqrt(eps)) noise and the block form stays exact. The
/// matrix is real symmetric for any Hermitian root; residual imaginary
/// parts or asymmetry beyond 1e-12 indicate a broken invariant and error
/// out. Eigenvalues come from a small cyclic Jacobi iteration, ascending.
pub fn w_numeric(state: &XState) -> Result<WNumeric> {
    let normalized = state.remove_phases();
    let root = normalized.sqrt()?.to_dense();
    let axes: [[f64; 3]; 3] = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let sig: Vec<M4> = axes.iter().map(|&n| site_observable(n)).collect();
    let mut w = [[0.0f64; 3]; 3];
    for l in 0..3 {
        let left = mat_mul(root.raw(), &sig[l]);
        for k in 0..3 {
            let right = mat_mul(root.raw(), &sig[k]);
            let mut tr = Complex64::new(0.0, 0.0);
            for i in 0..4 {
                for j in 0..4 {
                    tr += left[i][j] * right[j][i];
                }
            }
            if tr.im.abs() > 1e-12 {
                return Err(Error::InternalConsistency {
                    what: "numeric W entry has an imaginary part",
                    deviation: tr.im.abs(),
                });
            }
            w[l][k] = tr.re;
        }
    }
    for l in 0..3 {
        for k in (l + 1)..3 {
            let asym = (w[l][k] - w[k][l]).abs();
            if asym > 1e-12 {
                return Err(Error::InternalConsistency {
                    what: "numeric W is not symmetric",
                    deviation: asym,
                });
            }
            let avg = 0.5 * (w[l][k] + w[k][l]);
            w[l][k] = avg;
            w[k][l] = avg;
        }
    }
    Ok(WNumeric {
        matrix: w,
        eigenvalues: sym3_eigenvalues(w),
    })
}

/// Eigenvalues of a 3x3 real symmetric matrix by cyclic Jacobi, ascending.
fn sym3_eigenvalues(mut a: [[f64; 3]; 3]) -> [f64; 3] {
    for _ in 0..64 {
        let off = (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]).sqrt();
        if off < 1e-15 {
            break;
        }
        for p in 0..2 {
            for q in (p + 1)..3 {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    -0.5 / theta
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    -sign / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let (app, aqq) = (a[p][p], a[q][q]);
                a[p][p] = app + t * apq;
                a[q][q] = aqq - t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for j in 0..3 {
                    if j == p || j == q {
                        continue;
                    }
                    let (ajp, ajq) = (a[j][p], a[j][q]);
                    a[j][p] = c * ajp + s * ajq;
                    a[j][q] = -s * ajp + c * ajq;
                    a[p][j] = a[j][p];
                    a[q][j] = a[j][q];
                }
            }
        }
    }
    let mut ev = [a[0][0], a[1][1], a[2][2]];
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lqu::{lqu, w_closed_form};
    use crate::model::{thermal_state, ModelParams, ThermalPoint};

    fn thermal(omega: f64, delta: f64, uniform: f64, imbalance: f64, t: f64) -> XState {
        let p = ModelParams::new(omega, delta, uniform, imbalance).unwrap();
        thermal_state(&p, ThermalPoint::from_temperature(t).unwrap())
            .unwrap()
            .remove_phases()
    }

    fn bell() -> XState {
        XState::from_real([0.5, 0.0, 0.0, 0.5], 0.5, 0.0).unwrap()
    }

    fn directions() -> Vec<BlochVector> {
        vec![
            BlochVector::new([1.0, 0.0, 0.0]).unwrap(),
            BlochVector::new([0.0, 1.0, 0.0]).unwrap(),
            BlochVector::new([0.0, 0.0, 1.0]).unwrap(),
            BlochVector::from_angles(1.1, -2.3),
            BlochVector::from_angles(2.7, 0.4),
        ]
    }

    #[test]
    fn bloch_vector_validation() {
        assert!(BlochVector::new([0.6, 0.8, 0.0]).is_ok());
        assert!(matches!(
            BlochVector::new([0.5, 0.5, 0.5]),
            Err(Error::InvalidBlochVector { .. })
        ));
        assert!(BlochVector::new([f64::NAN, 0.0, 1.0]).is_err());
        let n = BlochVector::from_angles(0.7, 1.9).components();
        let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        assert!((norm - 1.0).abs() < 1e-15);
    }

    #[test]
    fn skew_on_bell_state_is_one_for_every_direction() {
        for n in directions() {
            let s = skew_information(&bell(), &n).unwrap();
            assert!((s - 1.0).abs() < 1e-11, "skew {s} along {n:?}");
        }
    }

    #[test]
    fn skew_equals_variance_on_pure_states() {
        let th = 0.9f64;
        let (c, s) = (th.cos(), th.sin());
        let pure = XState::from_real([c * c, 0.0, 0.0, s * s], c * s, 0.0).unwrap();
        for n in directions() {
            let skew = skew_information(&pure, &n).unwrap();
            let var = variance(&pure, &n).unwrap();
            assert!((skew - var).abs() < 1e-12, "skew {skew} vs var {var}");
        }
    }

    #[test]
    fn skew_is_bounded_by_variance_on_mixed_states() {
        let rho = thermal(0.05, 0.3, 0.5, 0.2, 0.15);
        for n in directions() {
            let skew = skew_information(&rho, &n).unwrap();
            let var = variance(&rho, &n).unwrap();
            assert!(skew >= 0.0);
            assert!(skew <= var + 1e-12, "skew {skew} above var {var}");
        }
    }

    #[test]
    fn lattice_is_deterministic_and_unit() {
        let a = fibonacci_lattice(128);
        let b = fibonacci_lattice(128);
        assert_eq!(a.len(), 128);
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.n, y.n);
            let n = x.n;
            let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
            assert!((norm - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn minimizer_matches_closed_form() {
        for (om, de, bu, bi, t) in [
            (0.05, 0.05, 0.5, 0.5, 0.5),
            (0.05, 0.05, 0.0, 0.3, 0.25),
            (1.0, -0.3, 0.3, -1.0, 2.0),
            (0.05, 0.3, 0.5, 0.2, 0.15),
        ] {
            let rho = thermal(om, de, bu, bi, t);
            let closed = lqu(&rho).unwrap().value;
            let r = minimize_skew(&rho, MinimizeConfig::default()).unwrap();
            assert!(
                (r.min_value - closed).abs() < 1e-7,
                "oracle {} vs closed {closed} at ({om},{de},{bu},{bi},{t})",
                r.min_value
            );
            assert!(r.evaluations >= DEFAULT_COARSE_POINTS);
        }
    }

    #[test]
    fn minimizer_is_deterministic() {
        let rho = thermal(0.05, 0.05, 0.5, 0.5, 0.5);
        let a = minimize_skew(&rho, MinimizeConfig::default()).unwrap();
        let b = minimize_skew(&rho, MinimizeConfig::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn minimizer_rejects_bad_config() {
        let rho = thermal(0.05, 0.05, 0.5, 0.5, 0.5);
        assert!(matches!(
            minimize_skew(&rho, MinimizeConfig { coarse_points: 3, refine_tol: 1e-9 }),
            Err(Error::InvalidConfig { .. })
        ));
        assert!(minimize_skew(
            &rho,
            MinimizeConfig {
                coarse_points: 64,
                refine_tol: 0.0
            }
        )
        .is_err());
    }

    #[test]
    fn numeric_w_is_diagonal_and_matches_closed_form() {
        for (om, de, bu, bi, t) in [
            (0.05, 0.05, 0.5, 0.5, 0.5),
            (0.05, 0.3, 0.5, 0.2, 0.15),
            (1.0, -0.3, 0.3, -1.0, 2.0),
        ] {
            let rho = thermal(om, de, bu, bi, t);
            let w = w_numeric(&rho).unwrap();
            for l in 0..3 {
                for k in 0..3 {
                    if l != k {
                        assert!(
                            w.matrix[l][k].abs() < 1e-10,
                            "off-diagonal {} at ({l},{k})",
                            w.matrix[l][k]
                        );
                    }
                }
            }
            let closed = w_closed_form(&rho).unwrap();
            assert!((w.matrix[0][0] - closed.w1).abs() < 1e-10);
            assert!((w.matrix[1][1] - closed.w2).abs() < 1e-10);
            assert!((w.matrix[2][2] - closed.w3).abs() < 1e-10);
            let lmax = w.eigenvalues[2];
            let exact = lqu(&rho).unwrap().value;
            assert!((1.0 - lmax - exact).abs() < 1e-10);
        }
    }

    #[test]
    fn eigenvalues_of_known_3x3() {
        let ev = sym3_eigenvalues([[2.0, 1.0, 0.0], [1.0, 2.0, 0.0], [0.0, 0.0, 5.0]]);
        assert!((ev[0] - 1.0).abs() < 1e-14);
        assert!((ev[1] - 3.0).abs() < 1e-14);
        assert!((ev[2] - 5.0).abs() < 1e-14);
    }
}
