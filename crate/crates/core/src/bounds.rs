//! Upper bounds on partial sums of the smallest eigenvalues.
//!
//! For a Hermitian matrix in canonical (ascending-diagonal) order, the Schur
//! majorisation inequality bounds the sum of the r smallest eigenvalues by
//! the sum of the r smallest diagonal entries. This module computes that
//! baseline plus two families of strictly sharper bounds, both of which
//! subtract a nonnegative correction built from off-diagonal entries:
//!
//! - **variance bounds**: for an outside row t, the off-diagonal mass of
//!   row t over the leading block, divided by a Gershgorin-style spread of
//!   the principal submatrix on rows `1..=r` and `t`;
//! - **pair bounds**: the amount by which the top eigenvalue of the 2x2
//!   principal submatrix on rows `k` (inside the block) and `t` (outside)
//!   exceeds its largest diagonal entry, known in closed form.
//!
//! The same machinery sharpens the corner estimates: an upper bound on the
//! smallest eigenvalue below `a_11` and a lower bound on the largest above
//! `a_nn`. [`best_bounds`] enumerates every admissible parameter choice and
//! keeps the strongest bound per r.
//!
//! Row numbers in function arguments (`t`, `k`) are 0-based; the `r` in a
//! partial sum is a count, not an index. Reported parameters
//! ([`BoundParams`]) are 1-based to match written matrix notation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hermitian::HermitianMatrix;

/// Absolute threshold below which a correction denominator is treated as
/// zero. Near-zero denominators would blow up the correction, so the bound
/// degenerates to its unsharpened value instead; soundness over sharpness.
pub const DEGENERACY_EPS: f64 = 1e-12;

/// Which estimate produced a bound value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundSource {
    /// Partial sum of the diagonal, no correction.
    Schur,
    /// Sharpened upper bound on the smallest eigenvalue.
    MinUpper,
    /// Sharpened lower bound on the largest eigenvalue.
    MaxLower,
    /// Variance correction from an outside row over the leading block.
    Variance,
    /// Eigenvalue excess of a 2x2 principal submatrix.
    Pair,
}

impl std::fmt::Display for BoundSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundSource::Schur => "schur",
            BoundSource::MinUpper => "min-upper",
            BoundSource::MaxLower => "max-lower",
            BoundSource::Variance => "variance",
            BoundSource::Pair => "pair",
        };
        f.write_str(s)
    }
}

/// Free indices a parametrized bound was evaluated at, 1-based for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundParams {
    /// Number of leading eigenvalues in the bounded partial sum.
    pub r: usize,
    /// 1-based row number of the outside row.
    pub t: usize,
    /// 1-based row number inside the leading block (pair bounds only).
    pub k: Option<usize>,
}

/// A single bound value with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundValue {
    pub value: f64,
    pub source: BoundSource,
    /// Present exactly for `Variance` and `Pair` bounds.
    pub params: Option<BoundParams>,
}

/// Outcome of a sharpened bound whose correction has a denominator: either
/// a proper bound, or a degenerate case where the denominator vanished and
/// the unsharpened value stands in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Sharpened {
    Bound(BoundValue),
    Degenerate { fallback: f64 },
}

impl Sharpened {
    /// The reportable value: the bound itself, or the fallback.
    pub fn value(&self) -> f64 {
        match self {
            Sharpened::Bound(b) => b.value,
            Sharpened::Degenerate { fallback } => *fallback,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, Sharpened::Degenerate { .. })
    }

    /// The bound value when not degenerate.
    pub fn bound(&self) -> Option<&BoundValue> {
        match self {
            Sharpened::Bound(b) => Some(b),
            Sharpened::Degenerate { .. } => None,
        }
    }
}

/// Every bound the engine produces for one matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    /// `schur[r-1]` = sum of the r smallest diagonal entries; the last entry
    /// is the trace, where the majorisation inequality is an equality.
    pub schur: Vec<f64>,
    /// For each r in `1..=n-1`, the strongest bound over all sources and
    /// parameters (ties prefer Schur, then variance, then pair, then the
    /// smallest `(t, k)`).
    pub per_r_best: Vec<BoundValue>,
    pub lambda_min_upper: Sharpened,
    pub lambda_max_lower: Sharpened,
    /// Interval guaranteed to contain the whole spectrum.
    pub gershgorin: (f64, f64),
}

/// Partial sums of the (ascending) diagonal: `out[r-1]` bounds the sum of
/// the r smallest eigenvalues.
pub fn schur_bounds(h: &HermitianMatrix) -> Vec<f64> {
    let mut acc = 0.0;
    (0..h.n())
        .map(|i| {
            acc += h.diagonal(i);
            acc
        })
        .collect()
}

/// The spectrum-enclosing interval from the disk theorem:
/// `lo = min_i (a_ii - r_i)`, `hi = max_i (a_ii + r_i)` with `r_i` the
/// off-diagonal absolute row sum.
pub fn gershgorin_interval(h: &HermitianMatrix) -> (f64, f64) {
    let rq = h.row_quantities();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..h.n() {
        lo = lo.min(h.diagonal(i) - rq.abs_sums[i]);
        hi = hi.max(h.diagonal(i) + rq.abs_sums[i]);
    }
    (lo, hi)
}

/// Sharpened upper bound on the smallest eigenvalue:
/// `a_11 - q_1 / (hi - a_11)` where `q_1` is the squared off-diagonal mass
/// of the first row and `hi` the upper Gershgorin endpoint. Always at most
/// `a_11`. Degenerates (to `a_11`) when the denominator vanishes, which
/// happens exactly for scalar matrices.
pub fn smallest_eigenvalue_upper(h: &HermitianMatrix) -> Sharpened {
    let rq = h.row_quantities();
    let a11 = h.diagonal(0);
    let (_, hi) = gershgorin_interval(h);
    let denom = hi - a11;
    if denom <= DEGENERACY_EPS {
        return Sharpened::Degenerate { fallback: a11 };
    }
    Sharpened::Bound(BoundValue {
        value: a11 - rq.sq_sums[0] / denom,
        source: BoundSource::MinUpper,
        params: None,
    })
}

/// Sharpened lower bound on the largest eigenvalue:
/// `a_nn + q_n / (a_nn - lo)` with `lo` the lower Gershgorin endpoint.
/// Always at least `a_nn`; degenerates (to `a_nn`) for scalar matrices.
pub fn largest_eigenvalue_lower(h: &HermitianMatrix) -> Sharpened {
    let rq = h.row_quantities();
    let n = h.n();
    let ann = h.diagonal(n - 1);
    let (lo, _) = gershgorin_interval(h);
    let denom = ann - lo;
    if denom <= DEGENERACY_EPS {
        return Sharpened::Degenerate { fallback: ann };
    }
    Sharpened::Bound(BoundValue {
        value: ann + rq.sq_sums[n - 1] / denom,
        source: BoundSource::MaxLower,
        params: None,
    })
}

fn check_r_t(n: usize, r: usize, t: usize) -> Result<()> {
    if r < 1 || r + 1 > n {
        return Err(Error::InvalidIndices {
            reason: format!("r must satisfy 1 <= r <= n-1, got r={r} with n={n}"),
        });
    }
    if t < r || t >= n {
        return Err(Error::InvalidIndices {
            reason: format!(
                "outside row must lie past the leading block: expected {} <= t <= {}, got t={}",
                r + 1,
                n,
                t + 1
            ),
        });
    }
    Ok(())
}

/// Variance bound on the sum of the r smallest eigenvalues, using outside
/// row `t` (0-based, `r <= t < n`).
///
/// Over the principal submatrix P on rows `0..r` and `t`, the Schur partial
/// sum is reduced by `num / d`, where `num` is the squared off-diagonal mass
/// of row t inside the leading block and
/// `d = a_tt - min_{i in P} (a_ii - sum_{s in P, s != i} |a_is|)`,
/// the distance from `a_tt` to P's lower Gershgorin endpoint. Degenerates
/// (to the Schur value) when `d` vanishes, i.e. when P is essentially
/// scalar.
pub fn variance_bound(h: &HermitianMatrix, r: usize, t: usize) -> Result<Sharpened> {
    check_r_t(h.n(), r, t)?;

    let schur_r: f64 = (0..r).map(|i| h.diagonal(i)).sum();
    let numerator: f64 = (0..r).map(|s| h.entry(t, s).norm_sqr()).sum();

    // Lower Gershgorin endpoint of the submatrix on rows {0..r-1, t}.
    let mut low = f64::INFINITY;
    let members = (0..r).chain(std::iter::once(t));
    for i in members.clone() {
        let row_sum: f64 = members
            .clone()
            .filter(|&s| s != i)
            .map(|s| h.entry(i, s).norm())
            .sum();
        low = low.min(h.diagonal(i) - row_sum);
    }

    let denom = h.diagonal(t) - low;
    if denom <= DEGENERACY_EPS {
        return Ok(Sharpened::Degenerate { fallback: schur_r });
    }
    Ok(Sharpened::Bound(BoundValue {
        value: schur_r - numerator / denom,
        source: BoundSource::Variance,
        params: Some(BoundParams {
            r,
            t: t + 1,
            k: None,
        }),
    }))
}

/// Pair bound on the sum of the r smallest eigenvalues, using inside row
/// `k` (0-based, `k < r`) and outside row `t` (0-based, `r <= t < n`).
///
/// The correction is the excess of the top eigenvalue of the 2x2 principal
/// submatrix on rows k and t over `a_tt`:
/// `(sqrt((a_tt - a_kk)^2 + 4 |a_tk|^2) - (a_tt - a_kk)) / 2`.
/// In canonical order `a_tt >= a_kk`, so the correction is nonnegative and
/// the expression is always defined.
pub fn pair_bound(h: &HermitianMatrix, r: usize, k: usize, t: usize) -> Result<BoundValue> {
    check_r_t(h.n(), r, t)?;
    if k >= r {
        return Err(Error::InvalidIndices {
            reason: format!(
                "inside row must lie in the leading block: expected 1 <= k <= {}, got k={}",
                r,
                k + 1
            ),
        });
    }

    let schur_r: f64 = (0..r).map(|i| h.diagonal(i)).sum();
    let gap = h.diagonal(t) - h.diagonal(k);
    let correction = ((gap * gap + 4.0 * h.entry(t, k).norm_sqr()).sqrt() - gap) / 2.0;
    Ok(BoundValue {
        value: schur_r - correction,
        source: BoundSource::Pair,
        params: Some(BoundParams {
            r,
            t: t + 1,
            k: Some(k + 1),
        }),
    })
}

/// Both eigenvalues of the Hermitian 2x2 matrix `[[a, b], [conj(b), d]]`,
/// as `(lo, hi)`. Satisfies `lo <= min(a, d) <= max(a, d) <= hi`.
pub fn two_by_two_extremes(a: f64, d: f64, b: Complex64) -> (f64, f64) {
    let half_trace = 0.5 * (a + d);
    let radius = 0.5 * ((a - d) * (a - d) + 4.0 * b.norm_sqr()).sqrt();
    (half_trace - radius, half_trace + radius)
}

/// Computes every bound for the matrix and keeps the strongest one per r.
///
/// For each r the candidates are the Schur value, all variance bounds over
/// `t`, and all pair bounds over `(t, k)`; degenerate variance bounds are
/// excluded rather than clamped. Ties prefer Schur, then variance, then
/// pair, then the smallest `(t, k)` lexicographically, so the enumeration
/// order is deterministic and the result does not depend on evaluation
/// order.
pub fn best_bounds(h: &HermitianMatrix) -> BoundReport {
    let n = h.n();
    let schur = schur_bounds(h);

    let mut per_r_best = Vec::with_capacity(n.saturating_sub(1));
    for r in 1..n {
        let mut best = BoundValue {
            value: schur[r - 1],
            source: BoundSource::Schur,
            params: None,
        };
        for t in r..n {
            if let Sharpened::Bound(b) = variance_bound(h, r, t).expect("valid (r, t)") {
                if b.value < best.value {
                    best = b;
                }
            }
        }
        for t in r..n {
            for k in 0..r {
                let b = pair_bound(h, r, k, t).expect("valid (r, k, t)");
                if b.value < best.value {
                    best = b;
                }
            }
        }
        per_r_best.push(best);
    }

    BoundReport {
        n,
        schur,
        per_r_best,
        lambda_min_upper: smallest_eigenvalue_upper(h),
        lambda_max_lower: largest_eigenvalue_lower(h),
        gershgorin: gershgorin_interval(h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::tests::{real_rows, sample_a, sample_b};
    use approx::assert_abs_diff_eq;

    fn diag123() -> HermitianMatrix {
        HermitianMatrix::from_real(
            &real_rows(&[&[1.0, 0.0, 0.0], &[0.0, 2.0, 0.0], &[0.0, 0.0, 3.0]]),
            0.0,
        )
        .unwrap()
    }

    #[test]
    fn schur_bounds_examples() {
        assert_eq!(schur_bounds(&sample_a()), vec![2.0, 4.0, 7.0]);
        assert_eq!(schur_bounds(&sample_b()), vec![1.0, 2.0, 3.0]);
        let eye = HermitianMatrix::from_real(
            &real_rows(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]),
            0.0,
        )
        .unwrap();
        assert_eq!(schur_bounds(&eye), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn gershgorin_examples() {
        assert_eq!(gershgorin_interval(&sample_a()), (0.0, 5.0));
        assert_eq!(gershgorin_interval(&diag123()), (1.0, 3.0));
        assert_eq!(gershgorin_interval(&sample_b()), (-6.0, 8.0));
    }

    #[test]
    fn smallest_eigenvalue_upper_example() {
        let b = smallest_eigenvalue_upper(&sample_a());
        assert!(!b.is_degenerate());
        // a_11 - q_1 / (hi - a_11) = 2 - 2/3
        assert_abs_diff_eq!(b.value(), 4.0 / 3.0, epsilon = 1e-15);
        assert_eq!(b.bound().unwrap().source, BoundSource::MinUpper);
        assert_eq!(b.bound().unwrap().params, None);
    }

    #[test]
    fn smallest_eigenvalue_upper_degenerates_on_scalar() {
        let scalar = HermitianMatrix::from_real(
            &real_rows(&[&[2.5, 0.0], &[0.0, 2.5]]),
            0.0,
        )
        .unwrap();
        let b = smallest_eigenvalue_upper(&scalar);
        assert!(b.is_degenerate());
        assert_eq!(b.value(), 2.5);
    }

    #[test]
    fn smallest_eigenvalue_upper_diagonal_is_exact() {
        let d = HermitianMatrix::from_real(&real_rows(&[&[1.0, 0.0], &[0.0, 2.0]]), 0.0).unwrap();
        let b = smallest_eigenvalue_upper(&d);
        assert!(!b.is_degenerate());
        assert_eq!(b.value(), 1.0);
    }

    #[test]
    fn largest_eigenvalue_lower_examples() {
        let b = largest_eigenvalue_lower(&sample_a());
        // a_33 + q_3 / (a_33 - lo) = 3 + 2/3
        assert_abs_diff_eq!(b.value(), 11.0 / 3.0, epsilon = 1e-15);
        assert_eq!(b.bound().unwrap().source, BoundSource::MaxLower);

        let scalar =
            HermitianMatrix::from_real(&real_rows(&[&[-1.0, 0.0], &[0.0, -1.0]]), 0.0).unwrap();
        assert!(largest_eigenvalue_lower(&scalar).is_degenerate());
        assert_eq!(largest_eigenvalue_lower(&scalar).value(), -1.0);

        let d = HermitianMatrix::from_real(&real_rows(&[&[1.0, 0.0], &[0.0, 2.0]]), 0.0).unwrap();
        assert_eq!(largest_eigenvalue_lower(&d).value(), 2.0);
    }

    #[test]
    fn variance_bound_examples() {
        // Leading block {1, 2}, outside row 3 (0-based t = 2).
        let b = variance_bound(&sample_a(), 2, 2).unwrap();
        assert_abs_diff_eq!(b.value(), 10.0 / 3.0, epsilon = 1e-15);
        let bv = b.bound().unwrap();
        assert_eq!(bv.source, BoundSource::Variance);
        assert_eq!(bv.params, Some(BoundParams { r: 2, t: 3, k: None }));

        let b = variance_bound(&sample_b(), 2, 2).unwrap();
        assert_abs_diff_eq!(b.value(), -11.0 / 7.0, epsilon = 1e-15);

        // Diagonal matrix: zero numerator, bound reduces to the Schur value.
        let b = variance_bound(&diag123(), 1, 1).unwrap();
        assert!(!b.is_degenerate());
        assert_eq!(b.value(), 1.0);
    }

    #[test]
    fn variance_bound_degenerates_on_scalar() {
        let scalar = HermitianMatrix::from_real(
            &real_rows(&[&[2.0, 0.0, 0.0], &[0.0, 2.0, 0.0], &[0.0, 0.0, 2.0]]),
            0.0,
        )
        .unwrap();
        let b = variance_bound(&scalar, 2, 2).unwrap();
        assert!(b.is_degenerate());
        assert_eq!(b.value(), 4.0);
    }

    #[test]
    fn variance_bound_rejects_bad_indices() {
        let a = sample_a();
        assert!(variance_bound(&a, 0, 1).is_err());
        assert!(variance_bound(&a, 3, 2).is_err());
        assert!(variance_bound(&a, 2, 1).is_err());
        assert!(variance_bound(&a, 1, 3).is_err());
    }

    #[test]
    fn pair_bound_examples() {
        // (r=2, k=1, t=3) in 1-based terms.
        let b = pair_bound(&sample_a(), 2, 0, 2).unwrap();
        assert_abs_diff_eq!(b.value, (9.0 - 5.0f64.sqrt()) / 2.0, epsilon = 1e-15);
        assert_eq!(b.source, BoundSource::Pair);
        assert_eq!(b.params, Some(BoundParams { r: 2, t: 3, k: Some(1) }));

        // (r=2, k=2, t=3): diagonals tie, correction is |a_tk| exactly.
        let b = pair_bound(&sample_b(), 2, 1, 2).unwrap();
        assert_eq!(b.value, -2.0);
    }

    #[test]
    fn pair_bound_zero_offdiagonal_reduces_to_schur() {
        let d = HermitianMatrix::from_real(
            &real_rows(&[&[1.0, 0.0, 0.0], &[0.0, 2.0, 0.0], &[0.0, 0.0, 4.0]]),
            0.0,
        )
        .unwrap();
        let b = pair_bound(&d, 2, 0, 2).unwrap();
        assert_eq!(b.value, 3.0);
    }

    #[test]
    fn pair_bound_rejects_bad_indices() {
        let a = sample_a();
        assert!(pair_bound(&a, 2, 2, 2).is_err());
        assert!(pair_bound(&a, 1, 0, 0).is_err());
    }

    #[test]
    fn two_by_two_examples() {
        assert_eq!(
            two_by_two_extremes(0.0, 0.0, Complex64::new(1.0, 0.0)),
            (-1.0, 1.0)
        );
        assert_eq!(
            two_by_two_extremes(3.0, -1.0, Complex64::new(0.0, 0.0)),
            (-1.0, 3.0)
        );
        let (lo, hi) = two_by_two_extremes(2.0, 3.0, Complex64::new(1.0, 0.0));
        assert_abs_diff_eq!(lo, (5.0 - 5.0f64.sqrt()) / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(hi, (5.0 + 5.0f64.sqrt()) / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn best_bounds_prefers_variance_on_sample_a() {
        let report = best_bounds(&sample_a());
        assert_eq!(report.schur, vec![2.0, 4.0, 7.0]);

        // r = 2: the variance bound with t = 3 wins.
        let best = &report.per_r_best[1];
        assert_abs_diff_eq!(best.value, 10.0 / 3.0, epsilon = 1e-15);
        assert_eq!(best.source, BoundSource::Variance);
        assert_eq!(best.params, Some(BoundParams { r: 2, t: 3, k: None }));

        // r = 1: variance (t = 2) and pair (k = 1, t = 2) tie at 1; the
        // tie-break prefers the variance bound.
        let best = &report.per_r_best[0];
        assert_eq!(best.value, 1.0);
        assert_eq!(best.source, BoundSource::Variance);
        assert_eq!(best.params, Some(BoundParams { r: 1, t: 2, k: None }));
    }

    #[test]
    fn best_bounds_prefers_pair_on_sample_b() {
        let report = best_bounds(&sample_b());
        let best = &report.per_r_best[1];
        assert_eq!(best.value, -2.0);
        assert_eq!(best.source, BoundSource::Pair);
        assert_eq!(best.params, Some(BoundParams { r: 2, t: 3, k: Some(2) }));

        // r = 1: variance (t = 3) and pair (k = 1, t = 3) tie at -2; the
        // variance bound wins the tie.
        let best = &report.per_r_best[0];
        assert_eq!(best.value, -2.0);
        assert_eq!(best.source, BoundSource::Variance);
        assert_eq!(best.params, Some(BoundParams { r: 1, t: 3, k: None }));
    }

    #[test]
    fn best_bounds_on_diagonal_equals_schur() {
        let report = best_bounds(&diag123());
        assert_eq!(report.per_r_best.len(), 2);
        assert_eq!(report.per_r_best[0].value, 1.0);
        assert_eq!(report.per_r_best[1].value, 3.0);
        for b in &report.per_r_best {
            assert_eq!(b.source, BoundSource::Schur);
            assert_eq!(b.params, None);
        }
    }

    #[test]
    fn best_bounds_one_by_one() {
        let h = HermitianMatrix::from_real(&real_rows(&[&[5.0]]), 0.0).unwrap();
        let report = best_bounds(&h);
        assert!(report.per_r_best.is_empty());
        assert_eq!(report.schur, vec![5.0]);
        assert!(report.lambda_min_upper.is_degenerate());
        assert!(report.lambda_max_lower.is_degenerate());
        assert_eq!(report.lambda_min_upper.value(), 5.0);
        assert_eq!(report.lambda_max_lower.value(), 5.0);
        assert_eq!(report.gershgorin, (5.0, 5.0));
    }
}
