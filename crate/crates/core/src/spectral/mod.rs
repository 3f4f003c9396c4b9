//! Dense eigendecomposition, tolerance-aware spectra, local spectra and
//! closed-walk counting.

mod eigen;
mod local;
mod spectrum;
mod walks;

pub use eigen::{inf_norm, sym_eigen, sym_eigenvalues, EigenDecomposition};
pub use local::{local_spectrum, Eigenspaces, LocalSpectrum, LOCAL_CUTOFF};
pub use spectrum::{Containment, Spectrum, SpectrumKind, DEFAULT_REL_TOL};
pub use walks::{
    closed_walk_count, closed_walks_exact, power_radius_estimate, walk_regularity,
    PowerRadiusEstimate, WalkRegularity,
};

pub(crate) use spectrum::group_sorted;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Eigenvalues of `A` or `L = D − A`.
pub fn spectrum(g: &Graph, kind: SpectrumKind) -> Result<Spectrum> {
    let m = match kind {
        SpectrumKind::Adjacency => g.adjacency_matrix(),
        SpectrumKind::Laplacian => g.laplacian_matrix(),
    };
    let mut values = sym_eigenvalues(&m)?;
    if kind == SpectrumKind::Laplacian {
        // L is positive semidefinite; round-off can leave -1e-16 on the kernel
        for v in &mut values {
            if *v < 0.0 && *v > -1e-9 {
                *v = 0.0;
            }
        }
    }
    Ok(Spectrum::new(values, kind))
}

/// Largest adjacency eigenvalue `ρ(G)`; 0 for the empty graph.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    Ok(spectrum(g, SpectrumKind::Adjacency)?.max().unwrap_or(0.0))
}

/// Largest Laplacian eigenvalue `ρ_L(G)`.
pub fn laplacian_radius(g: &Graph) -> Result<f64> {
    Ok(spectrum(g, SpectrumKind::Laplacian)?.max().unwrap_or(0.0))
}

/// Second-smallest Laplacian eigenvalue `α(G) = λ_2`.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::TooSmall {
            needed: 2,
            n: g.order(),
        });
    }
    Ok(spectrum(g, SpectrumKind::Laplacian)?.values()[1])
}
