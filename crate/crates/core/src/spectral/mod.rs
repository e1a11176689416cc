//! Spectral decomposition of the adjacency matrix and local spectra.

mod jacobi;
mod matrix;

pub use jacobi::{symmetric_eigen, SymmetricEigen};
pub use matrix::DenseMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{count, lit, Real, Tolerances};

/// Distinct eigenvalues `λ0 > λ1 > .. > λd`, their multiplicities, the
/// orthogonal projectors onto the eigenspaces, and the Perron vector scaled to
/// squared norm `n`.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition<T> {
    pub eigenvalues: Vec<T>,
    pub multiplicities: Vec<usize>,
    pub idempotents: Vec<DenseMatrix<T>>,
    pub perron: Vec<T>,
}

impl<T: Real> SpectralDecomposition<T> {
    pub fn n(&self) -> usize {
        self.perron.len()
    }

    /// Number of distinct eigenvalues minus one.
    pub fn d(&self) -> usize {
        self.eigenvalues.len() - 1
    }

    pub fn lambda0(&self) -> T {
        self.eigenvalues[0]
    }

    /// `m_u(λ_i) = (E_i)_uu`, before any clamping.
    pub fn raw_local_multiplicity(&self, u: usize, i: usize) -> T {
        self.idempotents[i][(u, u)]
    }
}

/// Splits a decreasing sequence into runs of numerically equal values.
///
/// Gaps at most `threshold / 10` join, gaps above `10 * threshold` split,
/// anything in between is ambiguous. Each run must also span at most
/// `threshold`.
fn group_eigenvalues<T: Real>(values: &[T], threshold: T) -> Result<Vec<std::ops::Range<usize>>> {
    let ten = lit::<T>(10.0);
    let mut groups = Vec::new();
    let mut start = 0;
    for k in 1..=values.len() {
        let split = if k == values.len() {
            true
        } else {
            let gap = values[k - 1] - values[k];
            if gap > threshold * ten {
                true
            } else if gap <= threshold / ten {
                false
            } else {
                return Err(Error::GroupingAmbiguity {
                    gap: gap.to_f64().unwrap_or(f64::NAN),
                    threshold: threshold.to_f64().unwrap_or(f64::NAN),
                });
            }
        };
        if split {
            let spread = values[start] - values[k - 1];
            if spread > threshold {
                return Err(Error::GroupingAmbiguity {
                    gap: spread.to_f64().unwrap_or(f64::NAN),
                    threshold: threshold.to_f64().unwrap_or(f64::NAN),
                });
            }
            groups.push(start..k);
            start = k;
        }
    }
    Ok(groups)
}

/// Eigendecomposition of the adjacency matrix of a connected graph.
pub fn decompose<T: Real>(g: &Graph, tol: &Tolerances<T>) -> Result<SpectralDecomposition<T>> {
    g.ensure_connected()?;
    let n = g.n();
    let eig = symmetric_eigen(&DenseMatrix::adjacency(g))?;
    let threshold = tol.group_threshold(eig.values[0]);
    let groups = group_eigenvalues(&eig.values, threshold)?;

    let mut eigenvalues = Vec::with_capacity(groups.len());
    let mut multiplicities = Vec::with_capacity(groups.len());
    let mut idempotents = Vec::with_capacity(groups.len());
    for range in &groups {
        let m = range.len();
        eigenvalues.push(eig.values[range.clone()].iter().copied().sum::<T>() / count(m));
        multiplicities.push(m);
        let mut e = DenseMatrix::zeros(n);
        for k in range.clone() {
            e.add_outer(&eig.vectors.column(k), T::one());
        }
        e.symmetrize();
        idempotents.push(e);
    }

    if multiplicities[0] != 1 {
        return Err(Error::PerronNotSimple { multiplicity: multiplicities[0] });
    }
    let mut perron = eig.vectors.column(0);
    if perron[0] < T::zero() {
        perron.iter_mut().for_each(|x| *x = -*x);
    }
    let norm = perron.iter().map(|&x| x * x).sum::<T>().sqrt();
    let scale = count::<T>(n).sqrt() / norm;
    perron.iter_mut().for_each(|x| *x *= scale);
    if let Some(vertex) = perron.iter().position(|&x| x <= T::zero()) {
        return Err(Error::PerronNotPositive {
            vertex,
            value: perron[vertex].to_f64().unwrap_or(f64::NAN),
        });
    }

    Ok(SpectralDecomposition { eigenvalues, multiplicities, idempotents, perron })
}

/// The spectrum of a graph as seen from one vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalSpectrum<T> {
    pub vertex: usize,
    /// All distinct eigenvalues of the graph, decreasing.
    pub eigenvalues: Vec<T>,
    /// `m_u(λ_i)` for every distinct eigenvalue; tiny values are exactly zero.
    pub local_mults: Vec<T>,
    /// Indices of eigenvalues with nonzero local multiplicity.
    pub support: Vec<usize>,
}

impl<T: Real> LocalSpectrum<T> {
    /// The local eigenvalues `μ0 > .. > μ_{d_u}`.
    pub fn values(&self) -> Vec<T> {
        self.support.iter().map(|&i| self.eigenvalues[i]).collect()
    }

    pub fn weights(&self) -> Vec<T> {
        self.support.iter().map(|&i| self.local_mults[i]).collect()
    }

    /// Local degree `d_u`.
    pub fn d_u(&self) -> usize {
        self.support.len() - 1
    }

    /// `Σ_i m_u(λ_i) λ_i^l`.
    pub fn moment(&self, l: u32) -> T {
        self.support.iter().map(|&i| self.local_mults[i] * self.eigenvalues[i].powi(l as i32)).sum()
    }
}

pub fn local_spectrum<T: Real>(dec: &SpectralDecomposition<T>, u: usize, tol: &Tolerances<T>) -> Result<LocalSpectrum<T>> {
    if u >= dec.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: dec.n() });
    }
    let local_mults: Vec<T> = (0..=dec.d())
        .map(|i| {
            let m = dec.raw_local_multiplicity(u, i);
            if m < tol.mult {
                T::zero()
            } else {
                m
            }
        })
        .collect();
    let support = (0..local_mults.len()).filter(|&i| local_mults[i] > T::zero()).collect();
    Ok(LocalSpectrum { vertex: u, eigenvalues: dec.eigenvalues.clone(), local_mults, support })
}

/// `m_uv(λ_i) = (E_i)_uv`.
pub fn crossed_multiplicity<T: Real>(dec: &SpectralDecomposition<T>, u: usize, v: usize, i: usize) -> T {
    dec.idempotents[i][(u, v)]
}

/// Walks of length `l` between `u` and `v`, from the spectral expansion
/// `Σ_i m_uv(λ_i) λ_i^l`.
pub fn walk_count<T: Real>(
    dec: &SpectralDecomposition<T>,
    u: usize,
    v: usize,
    l: u32,
    tol: &Tolerances<T>,
) -> Result<T> {
    if l > tol.walk_cap {
        return Err(Error::WalkCapExceeded { l, cap: tol.walk_cap });
    }
    for w in [u, v] {
        if w >= dec.n() {
            return Err(Error::VertexOutOfRange { vertex: w, n: dec.n() });
        }
    }
    Ok((0..=dec.d())
        .map(|i| crossed_multiplicity(dec, u, v, i) * dec.eigenvalues[i].powi(l as i32))
        .sum())
}
