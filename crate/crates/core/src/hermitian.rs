//! Validated Hermitian matrices in canonical diagonal order.
//!
//! Construction goes through [`HermitianMatrix::validate`], which checks
//! conjugate symmetry against a tolerance, symmetrizes the entries so the
//! stored matrix is *exactly* Hermitian, and applies a permutation
//! similarity so the diagonal is ascending. Everything downstream (bounds,
//! eigensolver, verification) assumes that canonical form.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default absolute tolerance for the Hermitian symmetry check.
pub const DEFAULT_HERMITICITY_TOL: f64 = 1e-9;

/// An n×n complex Hermitian matrix with ascending diagonal.
///
/// Invariants held after construction:
/// - `entry(i, j) == entry(j, i).conj()` exactly;
/// - diagonal entries are real (imaginary parts are exactly zero);
/// - `diagonal(0) <= diagonal(1) <= ... <= diagonal(n-1)`;
/// - `permutation()` records where each row/column came from in the input.
///
/// The value is immutable; all operations on it are pure functions, so it
/// can be shared freely across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    /// Row-major storage, exactly Hermitian.
    entries: Vec<Complex64>,
    /// `permutation[i]` is the 0-based input index now sitting at row i.
    permutation: Vec<usize>,
    hermiticity_tol: f64,
}

/// Off-diagonal row sums of a Hermitian matrix: for each row, the sum of
/// absolute values and the sum of squared absolute values of the
/// off-diagonal entries.
#[derive(Debug, Clone, PartialEq)]
pub struct RowQuantities {
    /// `abs_sums[i]` = sum over j != i of |a_ij|.
    pub abs_sums: Vec<f64>,
    /// `sq_sums[i]` = sum over j != i of |a_ij|^2.
    pub sq_sums: Vec<f64>,
}

impl HermitianMatrix {
    /// Validates a raw square complex array as a Hermitian matrix.
    ///
    /// Checks that every entry is finite, that `|raw[i][j] - conj(raw[j][i])|`
    /// does not exceed `tol` (and |Im raw[i][i]| <= tol on the diagonal),
    /// then symmetrizes each pair as `(raw[i][j] + conj(raw[j][i])) / 2` and
    /// zeroes the diagonal imaginary parts, so the result is exactly
    /// Hermitian. Finally rows and columns are reordered by a permutation
    /// similarity so the diagonal is ascending; ties keep their input order.
    pub fn validate(raw: &[Vec<Complex64>], tol: f64) -> Result<Self> {
        assert!(tol >= 0.0, "hermiticity tolerance must be nonnegative");
        let n = raw.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        for row in raw {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: row.len(),
                });
            }
        }
        for (i, row) in raw.iter().enumerate() {
            for (j, z) in row.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }

        // Symmetry check before any rewriting, so the reported deviation
        // refers to the caller's data.
        for i in 0..n {
            let diag_im = raw[i][i].im.abs();
            if diag_im > tol {
                return Err(Error::NotHermitian {
                    row: i + 1,
                    col: i + 1,
                    asymmetry: diag_im,
                    tol,
                });
            }
            for j in (i + 1)..n {
                let asymmetry = (raw[i][j] - raw[j][i].conj()).norm();
                if asymmetry > tol {
                    return Err(Error::NotHermitian {
                        row: i + 1,
                        col: j + 1,
                        asymmetry,
                        tol,
                    });
                }
            }
        }

        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            entries[i * n + i] = Complex64::new(raw[i][i].re, 0.0);
            for j in (i + 1)..n {
                let v = (raw[i][j] + raw[j][i].conj()) * 0.5;
                entries[i * n + j] = v;
                entries[j * n + i] = v.conj();
            }
        }

        let (entries, permutation) = canonical_order(entries, n);
        Ok(Self {
            n,
            entries,
            permutation,
            hermiticity_tol: tol,
        })
    }

    /// Validates a real symmetric array (imaginary parts zero).
    pub fn from_real(raw: &[Vec<f64>], tol: f64) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = raw
            .iter()
            .map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::validate(&rows, tol)
    }

    /// Dimension of the matrix.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based position (i, j).
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    /// Diagonal entry at 0-based row i (exactly real by construction).
    pub fn diagonal(&self, i: usize) -> f64 {
        self.entries[i * self.n + i].re
    }

    /// The diagonal as a vector, ascending by construction.
    pub fn diagonal_values(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.diagonal(i)).collect()
    }

    /// For each current row i, the 0-based input index it came from.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Tolerance the input was validated against.
    pub fn hermiticity_tol(&self) -> f64 {
        self.hermiticity_tol
    }

    /// The entries as row vectors (a copy).
    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Sum of the diagonal.
    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.diagonal(i)).sum()
    }

    /// Frobenius norm, sqrt of the sum of all squared entry moduli.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// True when every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| i == j || self.entry(i, j) == Complex64::new(0.0, 0.0))
        })
    }

    /// Off-diagonal absolute and squared row sums.
    ///
    /// Squared moduli are accumulated as `re^2 + im^2` directly, without an
    /// intermediate square root.
    pub fn row_quantities(&self) -> RowQuantities {
        let n = self.n;
        let mut abs_sums = vec![0.0; n];
        let mut sq_sums = vec![0.0; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let z = self.entry(i, j);
                    abs_sums[i] += z.norm();
                    sq_sums[i] += z.norm_sqr();
                }
            }
        }
        RowQuantities { abs_sums, sq_sums }
    }

    /// The principal submatrix on a strictly increasing set of 0-based row
    /// numbers, in the given order (no re-sorting).
    ///
    /// Since the parent diagonal is ascending and the index set is strictly
    /// increasing, the result is again in canonical order; its permutation
    /// is the identity.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<HermitianMatrix> {
        if indices.is_empty() {
            return Err(Error::InvalidIndices {
                reason: "index set is empty".into(),
            });
        }
        for pair in indices.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::InvalidIndices {
                    reason: format!(
                        "index set must be strictly increasing, got {} before {}",
                        pair[0] + 1,
                        pair[1] + 1
                    ),
                });
            }
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfRange {
                index: bad + 1,
                n: self.n,
            });
        }

        let k = indices.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in indices {
            for &j in indices {
                entries.push(self.entry(i, j));
            }
        }
        Ok(HermitianMatrix {
            n: k,
            entries,
            permutation: (0..k).collect(),
            hermiticity_tol: self.hermiticity_tol,
        })
    }
}

/// Sorts rows and columns by diagonal value (stable in the original index)
/// and returns the permuted entries together with the permutation.
fn canonical_order(entries: Vec<Complex64>, n: usize) -> (Vec<Complex64>, Vec<usize>) {
    let mut order: Vec<usize> = (0..n).collect();
    // Stable sort; ties keep the input order, which matters because the
    // bounds depend on where off-diagonal entries sit when diagonals tie.
    order.sort_by(|&a, &b| entries[a * n + a].re.total_cmp(&entries[b * n + b].re));

    if order.iter().enumerate().all(|(i, &p)| i == p) {
        return (entries, order);
    }
    let mut permuted = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            permuted[i * n + j] = entries[order[i] * n + order[j]];
        }
    }
    (permuted, order)
}
