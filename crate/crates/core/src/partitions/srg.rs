use nalgebra::DMatrix;
use serde::Serialize;

use super::drg::{drg_intersection_array, DrgVerdict, IntersectionArray};
use super::equitable::quotient_eigenvalues;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::spectral_radius;
use crate::token::token_graph;

/// Strongly regular parameters `(n, d, a, c)`: `d`-regular on `n` vertices,
/// adjacent pairs with `a` common neighbours, non-adjacent pairs with `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub d: usize,
    pub a: usize,
    pub c: usize,
}

impl SrgParams {
    /// Requires `d(d−a−1) = (n−d−1)c`, `a < d`, `1 <= c <= d < n−1`.
    pub fn new(n: usize, d: usize, a: usize, c: usize) -> Result<Self> {
        let p = SrgParams { n, d, a, c };
        let ok = d + 1 < n && a < d && c >= 1 && c <= d && d * (d - a - 1) == (n - d - 1) * c;
        if !ok {
            return Err(Error::InfeasibleSrg { n, d, a, c });
        }
        Ok(p)
    }

    /// The diameter-2 array `{d, d−a−1; 1, c}`.
    pub fn intersection_array(&self) -> Result<IntersectionArray> {
        IntersectionArray::new(vec![self.d, self.d - self.a - 1], vec![1, self.c])
    }

    /// Reads the parameters off a diameter-2 intersection array.
    pub fn from_array(ia: &IntersectionArray) -> Result<Self> {
        if ia.diameter() != 2 {
            return Err(Error::InvalidIntersectionArray(format!(
                "strongly regular graphs have diameter 2, got {}",
                ia.diameter()
            )));
        }
        SrgParams::new(ia.order(), ia.degree(), ia.a(1), ia.c(2))
    }
}

/// Parameters of `g` when it is strongly regular (connected, diameter 2).
pub fn srg_parameters(g: &Graph) -> Result<Option<SrgParams>> {
    match drg_intersection_array(g)? {
        DrgVerdict::DistanceRegular(ia) if ia.diameter() == 2 => {
            Ok(Some(SrgParams::from_array(&ia)?))
        }
        _ => Ok(None),
    }
}

/// The 2 × 2 quotients of `F_2(G)` for a strongly regular `G`, with cells
/// ordered by token distance (1, 2), and their closed forms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SrgQuotients {
    pub params: SrgParams,
    /// `[[2a, 2d−2a−2], [2c, 2d−2c]]`
    pub q_a: [[f64; 2]; 2],
    /// `[[2d−2−2a, −(2d−2a−2)], [−2c, 2c]]`
    pub q_l: [[f64; 2]; 2],
    /// `θ_{1,2} = d + (a−c) ± √((d−(a−c))² − 4c)`
    pub theta: (f64, f64),
    /// `2(d−1) − 2(a−c)`, the nonzero eigenvalue of `q_l`.
    pub laplacian_bound: f64,
    /// Eigenvalues of `q_a` computed numerically, ascending.
    pub q_a_eigenvalues: [f64; 2],
    /// `ρ_A(F_2(G))` of the explicit graph when one was supplied.
    pub explicit_radius: Option<f64>,
}

pub const SRG_RADIUS_TOL: f64 = 1e-7;

/// Closed forms for the strongly regular case. With `g`, checks that `g`
/// has the given parameters and that `θ_1 = ρ_A(F_2(g))`.
pub fn srg_quotients(p: SrgParams, g: Option<&Graph>) -> Result<SrgQuotients> {
    let p = SrgParams::new(p.n, p.d, p.a, p.c)?;
    let (d, a, c) = (p.d as f64, p.a as f64, p.c as f64);
    let q_a = [
        [2.0 * a, 2.0 * d - 2.0 * a - 2.0],
        [2.0 * c, 2.0 * d - 2.0 * c],
    ];
    let q_l = [
        [2.0 * d - 2.0 - 2.0 * a, -(2.0 * d - 2.0 * a - 2.0)],
        [-2.0 * c, 2.0 * c],
    ];
    let disc = (d - (a - c)).powi(2) - 4.0 * c;
    if disc < 0.0 {
        return Err(Error::InfeasibleSrg {
            n: p.n,
            d: p.d,
            a: p.a,
            c: p.c,
        });
    }
    let theta = (d + (a - c) + disc.sqrt(), d + (a - c) - disc.sqrt());
    let laplacian_bound = 2.0 * (d - 1.0) - 2.0 * (a - c);

    // |C_1| = nd/2 adjacent pairs, |C_2| = n(n−1−d)/2 non-adjacent pairs
    let sizes = [p.n * p.d / 2, p.n * (p.n - 1 - p.d) / 2];
    let m = DMatrix::from_row_slice(2, 2, &[q_a[0][0], q_a[0][1], q_a[1][0], q_a[1][1]]);
    let ev = quotient_eigenvalues(&m, &sizes)?;
    let q_a_eigenvalues = [ev[0], ev[1]];

    let explicit_radius = match g {
        None => None,
        Some(g) => {
            match srg_parameters(g)? {
                Some(found) if found == p => {}
                other => {
                    return Err(Error::CheckFailed(format!(
                        "graph has SRG parameters {other:?}, expected {p:?}"
                    )))
                }
            }
            let rho = spectral_radius(token_graph(g, 2)?.graph())?;
            if (rho - theta.0).abs() > SRG_RADIUS_TOL * rho.max(1.0) {
                return Err(Error::CheckFailed(format!(
                    "theta_1 = {} differs from rho_A(F_2) = {rho}",
                    theta.0
                )));
            }
            Some(rho)
        }
    };

    Ok(SrgQuotients {
        params: p,
        q_a,
        q_l,
        theta,
        laplacian_bound,
        q_a_eigenvalues,
        explicit_radius,
    })
}
