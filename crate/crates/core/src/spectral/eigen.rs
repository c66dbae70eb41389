//! Eigenvalues of dense real symmetric matrices.
//!
//! Householder reduction to tridiagonal form followed by implicit-shift QL
//! iteration on the tridiagonal. Only eigenvalues are produced; the
//! orthogonal transforms are never accumulated.
//!
//! The reduction only touches the lower triangle. Row `i` of the trailing
//! block is read as one contiguous slice, and the matrix-vector product uses
//! the symmetric "dot plus axpy" sweep so that the upper triangle is never
//! needed.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EigenError {
    #[error("matrix data has length {len}, expected {n}x{n}")]
    Shape { n: usize, len: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("matrix contains a non-finite entry")]
    NonFinite,
    #[error("QL iteration did not converge for eigenvalue {index}")]
    NoConvergence { index: usize },
}

const MAX_QL_SWEEPS: usize = 60;

/// Dense square matrix in row-major order. Only the lower triangle
/// (`j <= i`) is consulted by [`SymmetricMatrix::eigenvalues`].
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Takes a full row-major matrix and checks exact symmetry.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self, EigenError> {
        if data.len() != n * n {
            return Err(EigenError::Shape { n, len: data.len() });
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(EigenError::NonFinite);
        }
        for i in 0..n {
            for j in 0..i {
                if data[i * n + j] != data[j * n + i] {
                    return Err(EigenError::NotSymmetric { i, j });
                }
            }
        }
        Ok(SymmetricMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (r, c) = if j <= i { (i, j) } else { (j, i) };
        self.data[r * self.n + c]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
    }

    /// All eigenvalues, sorted descending. Consumes the matrix, which is
    /// overwritten by the reduction.
    pub fn eigenvalues(self) -> Result<Vec<f64>, EigenError> {
        let n = self.n;
        let (mut diag, mut off) = tridiagonalize(self);
        if diag.iter().chain(&off).any(|x| !x.is_finite()) {
            return Err(EigenError::NonFinite);
        }
        tridiagonal_ql(&mut diag, &mut off)?;
        debug_assert_eq!(diag.len(), n);
        diag.sort_unstable_by(|a, b| b.total_cmp(a));
        Ok(diag)
    }
}

/// Reduces `a` to tridiagonal form `(diag, off)` where `off[i]` couples
/// rows `i` and `i + 1`; `off` has length `n` with a trailing zero.
fn tridiagonalize(a: SymmetricMatrix) -> (Vec<f64>, Vec<f64>) {
    let SymmetricMatrix { n, data: mut a } = a;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    if n == 0 {
        return (diag, off);
    }
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];
    // A column whose tail is below eps * |A| is already reduced to working
    // precision; reflecting it anyway lets the tails shrink geometrically
    // until 2 / |v|^2 overflows.
    let negligible = f64::EPSILON * a.iter().fold(0.0f64, |m, x| m.max(x.abs()));

    for k in 0..n.saturating_sub(1) {
        diag[k] = a[k * n + k];
        let lo = k + 1;
        let len = n - lo;

        // v <- column k below the diagonal
        let mut tail_sq = 0.0;
        for (t, i) in (lo..n).enumerate() {
            let x = a[i * n + k];
            v[t] = x;
            if t > 0 {
                tail_sq += x * x;
            }
        }
        let x0 = v[0];
        if tail_sq.sqrt() <= negligible {
            off[k] = x0;
            continue;
        }
        let norm = (x0 * x0 + tail_sq).sqrt();
        let beta = if x0 >= 0.0 { -norm } else { norm };
        off[k] = beta;
        v[0] = x0 - beta;
        // H = I - tau v v^T with tau = 2 / |v|^2
        let vnorm_sq = v[0] * v[0] + tail_sq;
        let tau = 2.0 / vnorm_sq;

        // p <- tau * B v over the trailing block B, reading only its lower triangle
        let (vs, ps) = (&v[..len], &mut p[..len]);
        ps.fill(0.0);
        for r in 0..len {
            let row = &a[(lo + r) * n + lo..(lo + r) * n + lo + r];
            let vr = vs[r];
            let mut dot = 0.0;
            for ((&arc, pc), &vc) in row.iter().zip(ps[..r].iter_mut()).zip(&vs[..r]) {
                dot += arc * vc;
                *pc += arc * vr;
            }
            ps[r] += dot + a[(lo + r) * n + lo + r] * vr;
        }
        let mut pv = 0.0;
        for (pc, &vc) in ps.iter_mut().zip(vs) {
            *pc *= tau;
            pv += *pc * vc;
        }
        // w = p - (tau/2)(p^T v) v, stored in p
        let half = 0.5 * tau * pv;
        for (pc, &vc) in ps.iter_mut().zip(vs) {
            *pc -= half * vc;
        }
        // B <- B - v w^T - w v^T on the lower triangle
        for r in 0..len {
            let (vr, wr) = (vs[r], ps[r]);
            let row = &mut a[(lo + r) * n + lo..(lo + r) * n + lo + r + 1];
            for ((arc, &vc), &wc) in row.iter_mut().zip(&vs[..=r]).zip(&ps[..=r]) {
                *arc -= vr * wc + wr * vc;
            }
        }
    }
    diag[n - 1] = a[(n - 1) * n + n - 1];
    off[n - 1] = 0.0;
    (diag, off)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues are
/// left in `diag` (unsorted). `off[i]` couples `i` and `i + 1`.
fn tridiagonal_ql(diag: &mut [f64], off: &mut [f64]) -> Result<(), EigenError> {
    let n = diag.len();
    if n < 2 {
        return Ok(());
    }
    off[n - 1] = 0.0;
    // Deflation is judged against the matrix scale, not only the neighbouring
    // diagonal: with many zero eigenvalues both d_m and d_{m+1} shrink towards
    // 0 and a purely relative test never fires. Row sums bound the spectrum.
    let scale = (0..n)
        .map(|i| diag[i].abs() + off[i].abs() + if i > 0 { off[i - 1].abs() } else { 0.0 })
        .fold(0.0, f64::max);
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            // find a negligible off-diagonal element at or after l
            let mut m = l;
            while m < n - 1 {
                if off[m].abs() <= f64::EPSILON * scale {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_QL_SWEEPS {
                return Err(EigenError::NoConvergence { index: l });
            }
            // Wilkinson-style shift from the leading 2x2 block
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated_early = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated_early = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated_early {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[f64]]) -> SymmetricMatrix {
        let n = rows.len();
        SymmetricMatrix::from_row_major(n, rows.iter().flat_map(|r| r.iter().copied()).collect())
            .unwrap()
    }

    #[test]
    fn trivial_sizes() {
        assert!(SymmetricMatrix::zeros(0).eigenvalues().unwrap().is_empty());
        assert_eq!(from_rows(&[&[3.5]]).eigenvalues().unwrap(), vec![3.5]);
    }

    #[test]
    fn two_by_two() {
        let ev = from_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).eigenvalues().unwrap();
        assert!((ev[0] - 3.0).abs() < 1e-14);
        assert!((ev[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn diagonal_matrix_is_sorted() {
        let ev = from_rows(&[&[1.0, 0.0, 0.0], &[0.0, -4.0, 0.0], &[0.0, 0.0, 2.5]])
            .eigenvalues()
            .unwrap();
        assert_eq!(ev, vec![2.5, 1.0, -4.0]);
    }

    #[test]
    fn known_3x3() {
        // eigenvalues 2 - sqrt(2), 2, 2 + sqrt(2)
        let ev = from_rows(&[&[2.0, -1.0, 0.0], &[-1.0, 2.0, -1.0], &[0.0, -1.0, 2.0]])
            .eigenvalues()
            .unwrap();
        let s = 2f64.sqrt();
        for (a, b) in ev.iter().zip([2.0 + s, 2.0, 2.0 - s]) {
            assert!((a - b).abs() < 1e-14, "{a} vs {b}");
        }
    }

    #[test]
    fn all_ones_matrix() {
        let n = 7;
        let ev = SymmetricMatrix::from_row_major(n, vec![1.0; n * n])
            .unwrap()
            .eigenvalues()
            .unwrap();
        assert!((ev[0] - n as f64).abs() < 1e-13);
        assert!(ev[1..].iter().all(|x| x.abs() < 1e-13));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            SymmetricMatrix::from_row_major(2, vec![0.0; 3]),
            Err(EigenError::Shape { .. })
        ));
        assert!(matches!(
            SymmetricMatrix::from_row_major(2, vec![0.0, 1.0, 2.0, 0.0]),
            Err(EigenError::NotSymmetric { i: 1, j: 0 })
        ));
        assert!(matches!(
            SymmetricMatrix::from_row_major(1, vec![f64::NAN]),
            Err(EigenError::NonFinite)
        ));
    }
}
