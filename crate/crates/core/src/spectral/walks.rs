use nalgebra::{DMatrix, DVector};

use super::local::Eigenspaces;
use super::{spectrum, SpectrumKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Closed walks of length `length` at `u`, from the local-spectrum expansion
/// `a_uu^(ℓ) = Σ_i m_u(θ_i) θ_i^ℓ`.
pub fn closed_walk_count(g: &Graph, u: usize, length: u32) -> Result<f64> {
    if u >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: g.order(),
        });
    }
    Ok(Eigenspaces::of_adjacency(g)?.closed_walks(u, length))
}

/// `diag(A^ℓ)` for `ℓ = 0..=max_len` by exact integer matrix powers.
/// Returns `None` if a count overflows `u128`.
pub fn closed_walks_exact(g: &Graph, max_len: u32) -> Option<Vec<Vec<u128>>> {
    let n = g.order();
    let mut power: Vec<u128> = (0..n * n).map(|i| u128::from(i / n == i % n)).collect();
    let mut out = Vec::with_capacity(max_len as usize + 1);
    for len in 0..=max_len {
        if len > 0 {
            // power <- power · A, using the neighbour lists of A
            let mut next = vec![0u128; n * n];
            for r in 0..n {
                for c in 0..n {
                    let mut acc: u128 = 0;
                    for &w in g.neighbors(c) {
                        acc = acc.checked_add(power[r * n + w])?;
                    }
                    next[r * n + c] = acc;
                }
            }
            power = next;
        }
        out.push((0..n).map(|u| power[u * n + u]).collect());
    }
    Some(out)
}

/// Root estimates `s_ℓ = (a_uu^(ℓ))^{1/ℓ}` on even lengths, converging to ρ(G).
#[derive(Clone, Debug, PartialEq)]
pub struct PowerRadiusEstimate {
    pub lengths: Vec<u32>,
    pub estimates: Vec<f64>,
    /// Whether the estimates never decrease; observed, not assumed.
    pub monotone: bool,
}

impl PowerRadiusEstimate {
    pub fn last(&self) -> f64 {
        self.estimates.last().copied().unwrap_or(0.0)
    }
}

/// Estimates ρ(G) from closed walks at `u` of even length up to `max_len`.
///
/// `a_uu^(2m) = ‖A^m e_u‖²` is computed by repeated matrix–vector products,
/// independent of any eigendecomposition. Odd lengths are skipped because
/// they vanish on bipartite graphs.
pub fn power_radius_estimate(g: &Graph, u: usize, max_len: u32) -> Result<PowerRadiusEstimate> {
    let n = g.order();
    if u >= n {
        return Err(Error::VertexOutOfRange { vertex: u, n });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if max_len < 4 || !max_len.is_multiple_of(2) {
        return Err(Error::BadParameters {
            family: "power_radius_estimate".into(),
            reason: format!("max length must be even and >= 4, got {max_len}"),
        });
    }
    let a = g.adjacency_matrix();
    let mut x = DVector::zeros(n);
    x[u] = 1.0;
    let mut lengths = Vec::new();
    let mut estimates = Vec::new();
    for m in 1..=max_len / 2 {
        x = &a * x;
        let len = 2 * m;
        lengths.push(len);
        estimates.push(x.norm_squared().powf(1.0 / len as f64));
    }
    let monotone = estimates.windows(2).all(|w| w[1] >= w[0] - 1e-12);
    Ok(PowerRadiusEstimate {
        lengths,
        estimates,
        monotone,
    })
}

/// The three equivalent walk-regularity flags, computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkRegularity {
    /// `diag(A^ℓ)` constant for `ℓ = 0..n−1`.
    pub walk_regular: bool,
    /// All vertices share the same local spectrum.
    pub spectrally_regular: bool,
    /// All vertex-deleted subgraphs are cospectral.
    pub vertex_deleted_cospectral: bool,
}

impl WalkRegularity {
    pub fn all(&self) -> bool {
        self.walk_regular && self.spectrally_regular && self.vertex_deleted_cospectral
    }
}

const WALK_REL_TOL: f64 = 1e-7;

/// Classifies `g` three ways and cross-checks that the answers agree.
pub fn walk_regularity(g: &Graph) -> Result<WalkRegularity> {
    let n = g.order();
    let max_len = n.saturating_sub(1) as u32;

    let walk_regular = match closed_walks_exact(g, max_len) {
        Some(diags) => diags.iter().all(|d| d.windows(2).all(|w| w[0] == w[1])),
        None => {
            // counts beyond u128: compare floating powers relatively
            let a = g.adjacency_matrix();
            let mut p = DMatrix::<f64>::identity(n, n);
            let mut ok = true;
            for _ in 0..=max_len {
                let d0 = p[(0, 0)];
                ok &= (0..n).all(|u| (p[(u, u)] - d0).abs() <= 1e-12 * d0.abs().max(1.0));
                p = &p * &a;
            }
            ok
        }
    };

    let spectrally_regular = if n == 0 {
        true
    } else {
        let es = Eigenspaces::of_adjacency(g)?;
        let first = es.local_multiplicities(0);
        (1..n).all(|u| {
            es.local_multiplicities(u)
                .iter()
                .zip(&first)
                .all(|(a, b)| (a - b).abs() <= WALK_REL_TOL)
        })
    };

    let vertex_deleted_cospectral = if n <= 1 {
        true
    } else {
        let spectra = (0..n)
            .map(|u| spectrum(&g.delete_vertices(&[u])?, SpectrumKind::Adjacency))
            .collect::<Result<Vec<_>>>()?;
        let tol = spectra[0].tol();
        spectra[1..].iter().all(|s| s.approx_eq(&spectra[0], tol))
    };

    let out = WalkRegularity {
        walk_regular,
        spectrally_regular,
        vertex_deleted_cospectral,
    };
    if walk_regular != spectrally_regular || walk_regular != vertex_deleted_cospectral {
        return Err(Error::NumericHealth(format!(
            "walk-regularity characterisations disagree: {out:?}"
        )));
    }
    Ok(out)
}
