//! Limit laws for preferential-attachment trees and the energy constants
//! derived from them.
//!
//! Rational laws are exact (`Ratio<i128>`); the irrational series are summed
//! in floating point with a certified truncation bound.

use num_rational::Ratio;
use thiserror::Error;

use crate::bounds::PAIR_MERGE_SAVING;

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AsymptoticsError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("could not bracket the root: F(s) still positive at s = {upper}")]
    Bracketing { upper: f64 },
    #[error("d_max = {d_max} too small: mass beyond it is {tail:e} > tol = {tol:e}")]
    InsufficientDMax { d_max: usize, tail: f64, tol: f64 },
}

/// A truncated series with a certified bound on the omitted remainder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub truncation_bound: f64,
    pub terms_used: usize,
}

/// Limit fraction of degree-`d` vertices in a linear preferential-attachment
/// tree: `4 / (d (d+1) (d+2))`.
pub fn degree_fraction_limit(d: u64) -> Result<Rational, AsymptoticsError> {
    if d < 1 {
        return Err(AsymptoticsError::InvalidArgument(
            "degree must be at least 1".into(),
        ));
    }
    let d = d as i128;
    Ok(Rational::new(4, d * (d + 1) * (d + 2)))
}

/// Limit fraction of vertices with degree above `m`: `2 / ((m+1)(m+2))`.
pub fn degree_tail(m: u64) -> Rational {
    let m = m as i128;
    Rational::new(2, (m + 1) * (m + 2))
}

/// Limit fraction (per vertex) of edges joining degrees `k <= l`.
pub fn edge_pair_limit(k: u64, l: u64) -> Result<Rational, AsymptoticsError> {
    if k < 1 || k > l {
        return Err(AsymptoticsError::InvalidArgument(format!(
            "need 1 <= k <= l, got k = {k}, l = {l}"
        )));
    }
    let (k, l) = (k as i128, l as i128);
    let s = k + l;
    let a = Rational::new(4 * (l - 1), k * (k + 1) * s * (s + 1) * (s + 2));
    let b = Rational::new(12 * (l - 1), k * (s - 1) * s * (s + 1) * (s + 2));
    Ok(a + b)
}

fn series_term(d: usize) -> f64 {
    let df = d as f64;
    8.0 * (df - 1.0).sqrt() / (df * (df + 1.0) * (df + 2.0))
}

// Each term satisfies 8 sqrt(d-1) / (d(d+1)(d+2)) < 8 d^{-5/2}, and since x^{-5/2}
// is decreasing, d^{-5/2} <= int_{d-1}^{d} x^{-5/2} dx. Summing over d > M:
//   sum_{d>M} term(d) < 8 int_M^inf x^{-5/2} dx = 16 / (3 M^{3/2}).
fn series_tail_bound(m: usize) -> f64 {
    16.0 / (3.0 * (m as f64).powf(1.5))
}

fn terms_for(tol: f64) -> Result<usize, AsymptoticsError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(AsymptoticsError::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut m = (16.0 / (3.0 * tol)).powf(2.0 / 3.0).ceil().max(1.0) as usize;
    while series_tail_bound(m) > tol {
        m += 1;
    }
    Ok(m)
}

/// Limit of `(sum_i 2 sqrt(d_i - 1)) / n` over linear preferential-attachment
/// trees: `sum_d 4/(d(d+1)(d+2)) * 2 sqrt(d-1)`.
pub fn series_constant(tol: f64) -> Result<SeriesValue, AsymptoticsError> {
    let m = terms_for(tol)?;
    // smallest terms first
    let value = (1..=m).rev().map(series_term).sum();
    Ok(SeriesValue {
        value,
        truncation_bound: series_tail_bound(m),
        terms_used: m,
    })
}

/// Savings from merging degree-2 pairs: `(4 - 2 sqrt 2) / 135`, i.e. one
/// merge per three of the `n/45` degree-(2,2) edges.
pub fn pair_merge_correction() -> f64 {
    PAIR_MERGE_SAVING / 135.0
}

/// [`series_constant`] minus [`pair_merge_correction`].
pub fn corrected_constant(tol: f64) -> Result<SeriesValue, AsymptoticsError> {
    let s = series_constant(tol)?;
    Ok(SeriesValue {
        value: s.value - pair_merge_correction(),
        ..s
    })
}

/// Limit degree law of sublinear preferential attachment (`0 < alpha < 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeLaw {
    pub alpha: f64,
    pub s: f64,
    /// `q[d - 1]` is the limit fraction of degree-`d` vertices.
    pub q: Vec<f64>,
}

// p[d-1] = prod_{i<=d} i^a / (s + i^a)
fn survival(alpha: f64, s: f64, d_max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(d_max);
    let mut p = 1.0;
    for i in 1..=d_max {
        let w = (i as f64).powf(alpha);
        p *= w / (s + w);
        out.push(p);
    }
    out
}

/// `F(s) = sum_{d=1}^{d_max} prod_{i<=d} i^a/(s + i^a) - 1`; every product
/// decreases strictly in `s`, hence so does `F`.
pub fn sublinear_balance(alpha: f64, s: f64, d_max: usize) -> f64 {
    survival(alpha, s, d_max).iter().sum::<f64>() - 1.0
}

/// Degree law `q(d) = (s / d^a) prod_{i<=d} i^a / (s + i^a)` for attachment
/// weight `d^a`, `0 < a < 1`.
///
/// The products telescope: `sum_{d<=D} q(d) = 1 - prod_{i<=D} i^a/(s+i^a)` for
/// every `s > 0`, so normalization alone does not pin `s`. It is fixed by the
/// growth-rate condition `sum_d prod_{i<=d} i^a/(s+i^a) = 1` (the mean
/// attachment weight per vertex equals `s`), found by bisection on
/// [`sublinear_balance`]. At `a = 1` this gives `s = 2` and the law
/// `4/(d(d+1)(d+2))`; at `a = 0` it gives `s = 1` and `q(d) = 2^{-d}`.
///
/// Errors if the mass beyond `d_max` exceeds `tol`.
pub fn sublinear_degree_law(
    alpha: f64,
    d_max: usize,
    tol: f64,
) -> Result<DegreeLaw, AsymptoticsError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(AsymptoticsError::InvalidArgument(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(AsymptoticsError::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if d_max < 2 {
        return Err(AsymptoticsError::InvalidArgument(
            "d_max must be at least 2".into(),
        ));
    }
    let f = |s: f64| sublinear_balance(alpha, s, d_max);
    let mut lo = 1e-6;
    let mut hi = 2.0;
    if f(lo) <= 0.0 {
        return Err(AsymptoticsError::InvalidArgument(format!(
            "F is not positive at s = {lo}"
        )));
    }
    while f(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e6 {
            return Err(AsymptoticsError::Bracketing { upper: hi });
        }
    }
    let stop = tol.min(1e-12 * hi);
    for _ in 0..200 {
        if hi - lo <= stop {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let s = 0.5 * (lo + hi);
    let p = survival(alpha, s, d_max);
    let tail = p[d_max - 1];
    if tail > tol {
        return Err(AsymptoticsError::InsufficientDMax { d_max, tail, tol });
    }
    let mut q = Vec::with_capacity(d_max);
    let mut prev = 1.0;
    for (i, &pd) in p.iter().enumerate() {
        let w = ((i + 1) as f64).powf(alpha);
        q.push(s * prev / (s + w));
        prev = pd;
    }
    Ok(DegreeLaw { alpha, s, q })
}
