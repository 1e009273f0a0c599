//! Cross-checks every bound against an oracle spectrum.
//!
//! Each check becomes a [`Verdict`] with a uniform convention: `holds` iff
//! `gap >= -verify_tol`, where the gap is oriented so that a correct result
//! is nonnegative (upper bound minus true value for upper bounds, true
//! value minus bound for lower bounds). A failed verdict therefore signals
//! a bug, not a property of the input matrix.

use crate::bounds::{pair_bound, variance_bound, BoundParams, BoundReport, Sharpened};
use crate::error::{Error, Result};
use crate::hermitian::HermitianMatrix;
use crate::oracle::Spectrum;

/// Default absolute tolerance for verdicts: far above the oracle tolerance,
/// so roundoff cannot fail a mathematically true inequality.
pub const DEFAULT_VERIFY_TOL: f64 = 1e-8;

/// What a verdict checked. Declaration order is the report sort order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictSource {
    Schur,
    MinUpper,
    MaxLower,
    Variance,
    Pair,
    GershgorinLow,
    GershgorinHigh,
}

impl std::fmt::Display for VerdictSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            VerdictSource::Schur => "schur",
            VerdictSource::MinUpper => "min-upper",
            VerdictSource::MaxLower => "max-lower",
            VerdictSource::Variance => "variance",
            VerdictSource::Pair => "pair",
            VerdictSource::GershgorinLow => "gershgorin-low",
            VerdictSource::GershgorinHigh => "gershgorin-high",
        };
        f.write_str(s)
    }
}

/// Outcome of checking one bound against the oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verdict {
    pub source: VerdictSource,
    /// Length of the partial sum being bounded; 1 for smallest-eigenvalue
    /// checks and n for largest-eigenvalue checks.
    pub r: usize,
    /// Free indices for variance and pair bounds, 1-based.
    pub params: Option<BoundParams>,
    pub bound: f64,
    pub true_value: f64,
    /// Oriented slack; nonnegative when the bound is correct.
    pub gap: f64,
    pub holds: bool,
}

/// Per-row variance-versus-envelope diagnostic.
///
/// For the positive unital functional that evaluates a matrix at diagonal
/// position i, the variance `q_i` never exceeds the envelope
/// `(lambda_max - a_ii)(a_ii - lambda_min)`. Nonnegative slack for every
/// row is another oracle-backed correctness signal.
#[derive(Debug, Clone, PartialEq)]
pub struct BhatiaDavisDiagnostic {
    pub per_row: Vec<BhatiaDavisRow>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BhatiaDavisRow {
    /// Squared off-diagonal mass of the row.
    pub variance: f64,
    /// `(lambda_max - a_ii) * (a_ii - lambda_min)`.
    pub envelope: f64,
    /// `envelope - variance`; nonnegative up to verification tolerance.
    pub slack: f64,
}

/// Gap statistics for one bound family across a verdict list.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapStats {
    pub source: VerdictSource,
    pub count: usize,
    pub min_gap: f64,
    pub max_gap: f64,
    pub mean_gap: f64,
}

/// Checks every bound in (and implied by) the report against the spectrum.
///
/// Covers the Schur value at every r, the two eigenvalue-end bounds, every
/// non-degenerate variance bound over `(r, t)`, every pair bound over
/// `(r, k, t)`, and both Gershgorin endpoints. The best-per-r bounds of the
/// report are among these by construction. Output is sorted by
/// `(r, source, t, k)`.
pub fn verify_bounds(
    h: &HermitianMatrix,
    report: &BoundReport,
    spectrum: &Spectrum,
    verify_tol: f64,
) -> Result<Vec<Verdict>> {
    assert!(verify_tol > 0.0, "verification tolerance must be positive");
    let n = h.n();
    if report.n != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: report.n,
        });
    }
    if spectrum.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: spectrum.len(),
        });
    }

    let mut prefix = Vec::with_capacity(n);
    let mut acc = 0.0;
    for &v in spectrum.values() {
        acc += v;
        prefix.push(acc);
    }

    let upper = |source, r: usize, params, bound: f64, true_value: f64| {
        let gap = bound - true_value;
        Verdict {
            source,
            r,
            params,
            bound,
            true_value,
            gap,
            holds: gap >= -verify_tol,
        }
    };
    let lower = |source, r: usize, bound: f64, true_value: f64| {
        let gap = true_value - bound;
        Verdict {
            source,
            r,
            params: None,
            bound,
            true_value,
            gap,
            holds: gap >= -verify_tol,
        }
    };

    let mut verdicts = Vec::new();
    for r in 1..=n {
        verdicts.push(upper(
            VerdictSource::Schur,
            r,
            None,
            report.schur[r - 1],
            prefix[r - 1],
        ));
    }

    verdicts.push(upper(
        VerdictSource::MinUpper,
        1,
        None,
        report.lambda_min_upper.value(),
        spectrum.min(),
    ));
    verdicts.push(lower(
        VerdictSource::MaxLower,
        n,
        report.lambda_max_lower.value(),
        spectrum.max(),
    ));

    for r in 1..n {
        for t in r..n {
            if let Sharpened::Bound(b) = variance_bound(h, r, t)? {
                verdicts.push(upper(
                    VerdictSource::Variance,
                    r,
                    b.params,
                    b.value,
                    prefix[r - 1],
                ));
            }
            for k in 0..r {
                let b = pair_bound(h, r, k, t)?;
                verdicts.push(upper(
                    VerdictSource::Pair,
                    r,
                    b.params,
                    b.value,
                    prefix[r - 1],
                ));
            }
        }
    }

    verdicts.push(lower(
        VerdictSource::GershgorinLow,
        1,
        report.gershgorin.0,
        spectrum.min(),
    ));
    verdicts.push(upper(
        VerdictSource::GershgorinHigh,
        n,
        None,
        report.gershgorin.1,
        spectrum.max(),
    ));

    verdicts.sort_by_key(|v| {
        (
            v.r,
            v.source,
            v.params.map_or(0, |p| p.t),
            v.params.and_then(|p| p.k).unwrap_or(0),
        )
    });
    Ok(verdicts)
}

/// Evaluates the variance-versus-envelope diagnostic for every row.
pub fn bhatia_davis_diagnostic(
    h: &HermitianMatrix,
    spectrum: &Spectrum,
) -> Result<BhatiaDavisDiagnostic> {
    let n = h.n();
    if spectrum.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: spectrum.len(),
        });
    }
    let rq = h.row_quantities();
    let (lambda_min, lambda_max) = (spectrum.min(), spectrum.max());
    let per_row = (0..n)
        .map(|i| {
            let a = h.diagonal(i);
            let variance = rq.sq_sums[i];
            let envelope = (lambda_max - a) * (a - lambda_min);
            BhatiaDavisRow {
                variance,
                envelope,
                slack: envelope - variance,
            }
        })
        .collect();
    Ok(BhatiaDavisDiagnostic { per_row })
}

/// Aggregates verdict gaps per source. Useful for comparing how sharp the
/// bound families are on a given matrix (neither dominates the other in
/// general); restrict the verdict slice to a single r to compare at fixed
/// partial-sum length.
pub fn tightness_summary(verdicts: &[Verdict]) -> Result<Vec<GapStats>> {
    if verdicts.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut stats: Vec<GapStats> = Vec::new();
    for v in verdicts {
        match stats.iter_mut().find(|s| s.source == v.source) {
            Some(s) => {
                s.count += 1;
                s.min_gap = s.min_gap.min(v.gap);
                s.max_gap = s.max_gap.max(v.gap);
                s.mean_gap += v.gap;
            }
            None => stats.push(GapStats {
                source: v.source,
                count: 1,
                min_gap: v.gap,
                max_gap: v.gap,
                mean_gap: v.gap,
            }),
        }
    }
    for s in &mut stats {
        s.mean_gap /= s.count as f64;
    }
    stats.sort_by_key(|s| s.source);
    Ok(stats)
}
