//! Normalized-Laplacian spectra and the RMS spectral distance between graphs.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

const EIGEN_EPS: f64 = 1e-14;
const EIGEN_MAX_SWEEPS: usize = 10_000;

/// Eigenvalues of `I − D^{-1/2} A D^{-1/2}`, ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

/// Isolated nodes get an all-zero row and column.
pub fn normalized_laplacian(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let inv_sqrt: Vec<f64> = g
        .degrees()
        .map(|d| if d == 0 { 0.0 } else { 1.0 / (d as f64).sqrt() })
        .collect();
    let mut l = DMatrix::zeros(n, n);
    for v in 0..n {
        if g.degree(v) > 0 {
            l[(v, v)] = 1.0;
        }
    }
    for &(a, b) in g.edges() {
        let w = -inv_sqrt[a] * inv_sqrt[b];
        l[(a, b)] = w;
        l[(b, a)] = w;
    }
    l
}

pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    let n = g.n();
    let l = normalized_laplacian(g);
    let eig = l
        .try_symmetric_eigen(EIGEN_EPS, EIGEN_MAX_SWEEPS)
        .ok_or(Error::ConvergenceFailure(n))?;
    let mut eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum { eigenvalues })
}

/// `sqrt(Σ (λ_i − λ'_i)² / N)` over the sorted spectra.
pub fn spectral_distance(a: &Spectrum, b: &Spectrum) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    if a.is_empty() {
        return Ok(0.0);
    }
    let sq: f64 = a
        .eigenvalues
        .iter()
        .zip(&b.eigenvalues)
        .map(|(x, y)| (x - y) * (x - y))
        .sum();
    Ok((sq / a.len() as f64).sqrt())
}

/// Full symmetric matrix of pairwise distances.
pub fn distance_matrix(specs: &[Spectrum]) -> Result<Vec<Vec<f64>>> {
    let l = specs.len();
    let mut d = vec![vec![0.0; l]; l];
    for i in 0..l {
        for j in i + 1..l {
            let x = spectral_distance(&specs[i], &specs[j])?;
            d[i][j] = x;
            d[j][i] = x;
        }
    }
    Ok(d)
}

/// Mean spectral distance over all unordered pairs.
pub fn ensemble_diversity(specs: &[Spectrum]) -> Result<f64> {
    let l = specs.len();
    if l < 2 {
        return Err(Error::TooFewGraphs(l));
    }
    let mut sum = 0.0;
    for i in 0..l {
        for j in i + 1..l {
            sum += spectral_distance(&specs[i], &specs[j])?;
        }
    }
    Ok(sum / (l * (l - 1) / 2) as f64)
}
