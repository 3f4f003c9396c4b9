use std::ops::Range;

use nalgebra::DMatrix;

use super::eigen::{inf_norm, sym_eigen};
use super::group_sorted;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Local multiplicities at or below this are treated as zero.
pub const LOCAL_CUTOFF: f64 = 1e-9;

/// Relative gap used to cluster eigenvalues into eigenspaces.
const GROUP_REL_GAP: f64 = 1e-6;

/// The eigenspaces of a symmetric matrix, grouped by distinct eigenvalue.
///
/// Distinct eigenvalues are stored in decreasing order `θ_0 > θ_1 > ..`,
/// each with the range of eigenvector columns that spans its eigenspace.
#[derive(Clone, Debug)]
pub struct Eigenspaces {
    distinct: Vec<f64>,
    ranges: Vec<Range<usize>>,
    vectors: DMatrix<f64>,
}

impl Eigenspaces {
    pub fn new(m: &DMatrix<f64>) -> Result<Self> {
        let eig = sym_eigen(m)?;
        let values = eig.eigenvalues_vec();
        let gap = GROUP_REL_GAP * inf_norm(m).max(1.0);
        let mut groups = group_sorted(&values, gap);
        groups.reverse();
        let distinct = groups
            .iter()
            .map(|r| values[r.clone()].iter().sum::<f64>() / r.len() as f64)
            .collect();
        Ok(Eigenspaces {
            distinct,
            ranges: groups,
            vectors: eig.eigenvectors,
        })
    }

    pub fn of_adjacency(g: &Graph) -> Result<Self> {
        Self::new(&g.adjacency_matrix())
    }

    /// Distinct eigenvalues, decreasing.
    pub fn distinct(&self) -> &[f64] {
        &self.distinct
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.ranges.iter().map(|r| r.len()).collect()
    }

    /// The principal idempotent `E_i = U_i U_iᵀ`.
    pub fn projector(&self, i: usize) -> DMatrix<f64> {
        let u = self.vectors.columns_range(self.ranges[i].clone());
        u * u.transpose()
    }

    /// `m_u(θ_i) = (E_i)_{uu}`.
    pub fn local_multiplicity(&self, u: usize, i: usize) -> f64 {
        self.ranges[i]
            .clone()
            .map(|c| self.vectors[(u, c)].powi(2))
            .sum()
    }

    /// `m_u(θ_i)` for every distinct eigenvalue, in the order of `distinct()`.
    pub fn local_multiplicities(&self, u: usize) -> Vec<f64> {
        (0..self.distinct.len())
            .map(|i| self.local_multiplicity(u, i))
            .collect()
    }

    pub fn local_spectrum(&self, u: usize) -> Result<LocalSpectrum> {
        let n = self.vectors.nrows();
        if u >= n {
            return Err(Error::VertexOutOfRange { vertex: u, n });
        }
        let all = self.local_multiplicities(u);
        let total = all.iter().sum();
        let pairs = self
            .distinct
            .iter()
            .zip(&all)
            .filter(|(_, &m)| m > LOCAL_CUTOFF)
            .map(|(&t, &m)| (t, m))
            .collect();
        Ok(LocalSpectrum {
            vertex: u,
            pairs,
            total,
        })
    }

    /// `Σ_i m_u(θ_i) θ_i^ℓ`.
    pub fn closed_walks(&self, u: usize, length: u32) -> f64 {
        self.distinct
            .iter()
            .enumerate()
            .map(|(i, t)| self.local_multiplicity(u, i) * t.powi(length as i32))
            .sum()
    }
}

/// The eigenvalues seen from a vertex: `(μ_j, m_u(μ_j))` with nonzero local
/// multiplicity, `μ_0 > μ_1 > ..`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalSpectrum {
    pub vertex: usize,
    pub pairs: Vec<(f64, f64)>,
    /// Sum of all local multiplicities before the cutoff; 1 up to round-off.
    pub total: f64,
}

impl LocalSpectrum {
    /// The local mesh `ev_u G`, decreasing.
    pub fn mesh(&self) -> Vec<f64> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    /// `d_u = |ev_u G| − 1`
    pub fn mesh_size(&self) -> usize {
        self.pairs.len().saturating_sub(1)
    }
}

pub fn local_spectrum(g: &Graph, u: usize) -> Result<LocalSpectrum> {
    if u >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: g.order(),
        });
    }
    Eigenspaces::of_adjacency(g)?.local_spectrum(u)
}
