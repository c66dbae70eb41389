//! Adjacency spectra, graph energy, and closed-form energies of named families.

mod eigen;

use std::f64::consts::PI;

use thiserror::Error;

use crate::graph::Graph;

pub use eigen::{EigenError, SymmetricMatrix};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("closed form undefined: {0}")]
    Domain(String),
    #[error(transparent)]
    Eigen(#[from] EigenError),
}

/// Eigenvalues of a symmetric matrix, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// Largest absolute entry of the source matrix.
    pub norm_scale: f64,
}

impl Spectrum {
    pub fn of_matrix(m: SymmetricMatrix) -> Result<Self, EigenError> {
        let norm_scale = m.max_abs();
        let values = m.eigenvalues()?;
        Ok(Spectrum { values, norm_scale })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sum of absolute eigenvalues (trace norm).
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn second_moment(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
    }
}

/// Dense adjacency matrix of `g`, built on demand.
pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    let mut a = SymmetricMatrix::zeros(g.vertex_count());
    for (i, j) in g.edges() {
        a.set(i, j, 1.0);
    }
    a
}

pub fn adjacency_spectrum(g: &Graph) -> Spectrum {
    Spectrum::of_matrix(adjacency_matrix(g))
        .expect("adjacency matrices are finite and symmetric; QL converges on them")
}

/// Graph energy: the sum of the absolute values of the adjacency eigenvalues.
pub fn energy(g: &Graph) -> f64 {
    if g.edge_count() == 0 {
        return 0.0;
    }
    adjacency_spectrum(g).energy()
}

/// `E(S_n) = 2 sqrt(n - 1)`.
pub fn energy_star(n: usize) -> Result<f64, SpectralError> {
    if n < 2 {
        return Err(SpectralError::Domain(format!("star needs n >= 2, got {n}")));
    }
    Ok(2.0 * ((n - 1) as f64).sqrt())
}

/// Closed-form energy of the path `P_n`.
///
/// For `n = 2k`: `2 / sin(pi / (4k + 2)) - 2`.
/// For `n = 2k + 1`: `2 cot(pi / (4k + 4)) - 2`.
pub fn energy_path(n: usize) -> Result<f64, SpectralError> {
    if n < 2 {
        return Err(SpectralError::Domain(format!("path needs n >= 2, got {n}")));
    }
    let k = (n / 2) as f64;
    Ok(if n % 2 == 0 {
        2.0 / (PI / (4.0 * k + 2.0)).sin() - 2.0
    } else {
        let t = PI / (4.0 * k + 4.0);
        2.0 * t.cos() / t.sin() - 2.0
    })
}

fn double_star_params(p: usize, q: usize) -> Result<(f64, f64), SpectralError> {
    if p < 1 || q < 1 || p + q < 3 {
        return Err(SpectralError::Domain(format!(
            "double star needs p, q >= 1 and p + q >= 3, got ({p}, {q})"
        )));
    }
    let (pf, qf) = (p as f64, q as f64);
    let s = pf + qf - 1.0;
    // (p+q+1)^2 - 4(pq+1) = (p-q)^2 + 2(p+q) - 3 >= 0 for p + q >= 3
    let disc = (pf - qf).powi(2) + 2.0 * (pf + qf) - 3.0;
    Ok((s, disc.sqrt()))
}

/// The four (possibly zero) nonzero-candidate eigenvalues of `S_{p,q}`,
/// `±sqrt((p+q-1 ± R) / 2)` with `R = sqrt((p+q+1)^2 - 4(pq+1))`, descending.
pub fn double_star_nonzero_eigenvalues(p: usize, q: usize) -> Result<[f64; 4], SpectralError> {
    let (s, r) = double_star_params(p, q)?;
    let hi = ((s + r) / 2.0).sqrt();
    let lo = ((s - r).max(0.0) / 2.0).sqrt();
    Ok([hi, lo, -lo, -hi])
}

/// `sqrt(2) (sqrt(p+q-1+R) + sqrt(p+q-1-R))`.
pub fn energy_double_star(p: usize, q: usize) -> Result<f64, SpectralError> {
    let (s, r) = double_star_params(p, q)?;
    Ok(2f64.sqrt() * ((s + r).sqrt() + (s - r).max(0.0).sqrt()))
}
