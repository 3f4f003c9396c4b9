use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partitions::{drg_f2_quotient_spectra, drg_intersection_array, DrgVerdict};
use crate::report::{scaled_tol, BoundsReport, CheckRecord, Grade, Relation};
use crate::spectral::{algebraic_connectivity, laplacian_radius};
use crate::subsets::binomial;

use super::kparams::k_params;

pub const COMPLEMENT_TOL: f64 = 1e-6;

/// `α_k(G) + ρ_k(Ḡ) = k(n−k+1)` with the bounds `α_k(G), ρ_k(Ḡ) <= k(n−k+1)`
/// and the classical `α(G) = n − ρ_L(Ḡ)`. Graded not-applicable unless
/// both `G` and `Ḡ` are connected.
pub fn complement_identity(g: &Graph, k: usize) -> Result<BoundsReport> {
    let n = g.order();
    if k == 0 || k > n / 2 {
        return Err(Error::BadParameters {
            family: "complement identity".into(),
            reason: format!("need 1 <= k <= floor(n/2), got k = {k}, n = {n}"),
        });
    }
    let h = g.complement();
    let grade = if g.is_connected() && h.is_connected() {
        Grade::Theorem
    } else {
        Grade::NotApplicable
    };
    let alpha = k_params(g, k)?.rows[k - 1].alpha;
    let rho_bar = k_params(&h, k)?.rows[k - 1].rho;
    let target = (k * (n - k + 1)) as f64;
    let tol = scaled_tol(COMPLEMENT_TOL, &[target]);
    let key = "complement-identity";
    let mut r = BoundsReport::new();
    r.push(CheckRecord::new(
        format!("alpha_{k}(G) + rho_{k}(complement) = k(n-k+1)"),
        alpha + rho_bar,
        Relation::Eq,
        target,
        tol,
        grade,
        key,
    ));
    r.push(CheckRecord::new(
        format!("alpha_{k}(G) <= k(n-k+1)"),
        alpha,
        Relation::Le,
        target,
        tol,
        grade,
        key,
    ));
    r.push(CheckRecord::new(
        format!("rho_{k}(complement) <= k(n-k+1)"),
        rho_bar,
        Relation::Le,
        target,
        tol,
        grade,
        key,
    ));
    r.push(CheckRecord::new(
        "alpha(G) = n - rho_L(complement)",
        algebraic_connectivity(g)?,
        Relation::Eq,
        n as f64 - laplacian_radius(&h)?,
        scaled_tol(COMPLEMENT_TOL, &[n as f64]),
        Grade::Theorem,
        key,
    ));
    Ok(r)
}

/// For a bipartite distance-regular `G`:
/// `α_2(Ḡ) = 2(n−1) − ρ_L(F_2/π)`. Also reports the variant with `C(n,2)`
/// in place of `2(n−1)`. Graded not-applicable for non-bipartite DRGs.
pub fn bipartite_drg_corollary(g: &Graph) -> Result<BoundsReport> {
    let ia = match drg_intersection_array(g)? {
        DrgVerdict::DistanceRegular(ia) => ia,
        DrgVerdict::NotDistanceRegular { u, v, distance } => {
            return Err(Error::CheckFailed(format!(
                "not distance-regular: pair ({u},{v}) at distance {distance}"
            )))
        }
    };
    let n = g.order();
    let (_, ql) = drg_f2_quotient_spectra(&ia)?;
    let rho_q = ql.last().copied().unwrap_or(0.0);
    let alpha2_bar = k_params(&g.complement(), 2)?.rows[1].alpha;
    let grade = if g.is_bipartite() {
        Grade::Theorem
    } else {
        Grade::NotApplicable
    };
    let corrected = 2.0 * (n as f64 - 1.0) - rho_q;
    let variant = binomial(n, 2) as f64 - rho_q;
    let tol = scaled_tol(COMPLEMENT_TOL, &[corrected]);
    let mut r = BoundsReport::new();
    r.push(CheckRecord::new(
        "alpha_2(complement) = 2(n-1) - rho_L(F_2/pi)",
        alpha2_bar,
        Relation::Eq,
        corrected,
        tol,
        grade,
        "complement-corollary",
    ));
    r.push(CheckRecord::new(
        "alpha_2(complement) = C(n,2) - rho_L(F_2/pi)",
        alpha2_bar,
        Relation::Eq,
        variant,
        tol,
        Grade::Reported,
        "complement-corollary",
    ));
    Ok(r)
}
