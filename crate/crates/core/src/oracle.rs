//! Ground-truth dense Hermitian eigensolver.
//!
//! A cyclic-by-row Jacobi iteration with complex rotations: each step picks
//! an off-diagonal pair (p, q), factors out the phase of `a_pq`, and applies
//! a real 2x2 rotation that zeroes the pair exactly. Every bound in this
//! crate is checked against the spectra this solver produces, so it is
//! written from scratch on purpose and kept deliberately simple; it is
//! quadratically convergent and robust at the dense desk scale this crate
//! targets.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hermitian::HermitianMatrix;

/// Default convergence tolerance, relative to the input Frobenius norm.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Default sweep budget.
pub const DEFAULT_MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Hermitian matrix, ascending, with convergence metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    sweeps_used: usize,
    offdiag_norm_final: f64,
}

impl Spectrum {
    /// Eigenvalues in ascending order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Smallest eigenvalue.
    pub fn min(&self) -> f64 {
        self.values[0]
    }

    /// Largest eigenvalue.
    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// Number of full sweeps performed before convergence.
    pub fn sweeps_used(&self) -> usize {
        self.sweeps_used
    }

    /// Off-diagonal Frobenius norm at the final state.
    pub fn offdiag_norm_final(&self) -> f64 {
        self.offdiag_norm_final
    }

    /// Sum of the r smallest eigenvalues, `1 <= r <= n`.
    pub fn partial_sum(&self, r: usize) -> Result<f64> {
        if r < 1 || r > self.values.len() {
            return Err(Error::IndexOutOfRange {
                index: r,
                n: self.values.len(),
            });
        }
        Ok(self.values[..r].iter().sum())
    }
}

/// Computes all eigenvalues of `h` by cyclic Jacobi rotations.
///
/// Converged when the off-diagonal Frobenius norm drops to
/// `tol * frobenius(h)`. Pairs with `|a_pq| <= tol * frobenius(h) / n^2`
/// are skipped; if every pair is skippable the matrix is already below the
/// threshold, so the skip rule cannot stall convergence.
pub fn jacobi_eigenvalues(h: &HermitianMatrix, tol: f64, max_sweeps: usize) -> Result<Spectrum> {
    assert!(tol > 0.0, "tolerance must be positive");
    assert!(max_sweeps >= 1, "sweep budget must be at least 1");

    let n = h.n();
    let threshold = tol * h.frobenius_norm();
    let skip = threshold / (n * n) as f64;

    // Private working copy; rotations keep it exactly Hermitian, with the
    // diagonal stored as exactly real values.
    let mut w = h.rows().concat();

    let mut sweeps_used = 0;
    let mut off = offdiag_norm(&w, n);
    while off > threshold {
        if sweeps_used == max_sweeps {
            return Err(Error::NoConvergence {
                sweeps: sweeps_used,
                offdiag_norm: off,
                threshold,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut w, n, p, q, skip);
            }
        }
        sweeps_used += 1;
        off = offdiag_norm(&w, n);
    }

    let mut values: Vec<f64> = (0..n).map(|i| w[i * n + i].re).collect();
    values.sort_unstable_by(f64::total_cmp);
    Ok(Spectrum {
        values,
        sweeps_used,
        offdiag_norm_final: off,
    })
}

/// One Jacobi step on the pair (p, q): a unitary similarity that zeroes
/// `a_pq` exactly. Writing `a_pq = |b| e^{i phi}`, conjugating by
/// `diag(1, e^{i phi})` reduces the 2x2 block to the real symmetric case,
/// which a classic rotation with `tan(2 theta) = 2|b| / (a_qq - a_pp)`
/// diagonalizes; the tangent is computed from the stable root of
/// `t^2 + 2 tau t - 1 = 0`.
fn rotate(w: &mut [Complex64], n: usize, p: usize, q: usize, skip: f64) {
    let apq = w[p * n + q];
    let abs_b = apq.norm();
    if abs_b <= skip {
        return;
    }
    let phase = apq / abs_b;

    let alpha = w[p * n + p].re;
    let gamma = w[q * n + q].re;
    let tau = (gamma - alpha) / (2.0 * abs_b);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Closed-form 2x2 block update: the trace is preserved and the pair is
    // annihilated exactly.
    w[p * n + p] = Complex64::new(alpha - t * abs_b, 0.0);
    w[q * n + q] = Complex64::new(gamma + t * abs_b, 0.0);
    w[p * n + q] = Complex64::new(0.0, 0.0);
    w[q * n + p] = Complex64::new(0.0, 0.0);

    for j in 0..n {
        if j == p || j == q {
            continue;
        }
        let ajp = w[j * n + p];
        let ajq = w[j * n + q];
        let njp = ajp * c - ajq * (phase.conj() * s);
        let njq = ajp * (phase * s) + ajq * c;
        w[j * n + p] = njp;
        w[p * n + j] = njp.conj();
        w[j * n + q] = njq;
        w[q * n + j] = njq.conj();
    }
}

fn offdiag_norm(w: &[Complex64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            sum += w[p * n + q].norm_sqr();
        }
    }
    (2.0 * sum).sqrt()
}

/// Checks the interlacing property of a principal submatrix: the j-th
/// smallest eigenvalue of the full matrix never exceeds the j-th smallest
/// eigenvalue of the submatrix. `indices` are 0-based and strictly
/// increasing; `full` must be the spectrum of `h`. A `false` return signals
/// a solver bug, since the property is a theorem.
pub fn interlacing_check(
    h: &HermitianMatrix,
    indices: &[usize],
    full: &Spectrum,
    tol: f64,
) -> Result<bool> {
    if full.len() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            actual: full.len(),
        });
    }
    let sub = h.principal_submatrix(indices)?;
    let sub_spectrum = jacobi_eigenvalues(&sub, DEFAULT_TOL, DEFAULT_MAX_SWEEPS)?;
    Ok(sub_spectrum
        .values()
        .iter()
        .zip(full.values())
        .all(|(&sub_v, &full_v)| full_v <= sub_v + tol))
}
