use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{scaled_tol, BoundsReport, CheckRecord, Grade, Relation};
use crate::spectral::{spectrum, Spectrum, SpectrumKind};
use crate::subsets::binomial;
use crate::token::token_graph;

/// `α_k` and `ρ_k`: the extremes of `spec L(F_k) ∖ spec L(F_{k−1})`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KParamRow {
    pub k: usize,
    pub alpha: f64,
    pub rho: f64,
    /// `C(n,k) − C(n,k−1)`
    pub new_count: usize,
    /// Largest pairing gap when matching `spec F_{k−1}` into `spec F_k`.
    pub containment_gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KParamTable {
    pub n: usize,
    pub rows: Vec<KParamRow>,
    /// Laplacian spectra of `F_0, .., F_{k_max}`.
    #[serde(skip)]
    pub spectra: Vec<Spectrum>,
    /// `spec L(F_k) ∖ spec L(F_{k−1})` for `k = 1..=k_max` (index `k − 1`).
    #[serde(skip)]
    pub new_eigenvalues: Vec<Spectrum>,
}

impl KParamTable {
    pub fn alphas(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.alpha).collect()
    }

    pub fn rhos(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.rho).collect()
    }

    pub fn row(&self, k: usize) -> Option<&KParamRow> {
        self.rows.iter().find(|r| r.k == k)
    }
}

fn check_k_range(n: usize, k_max: usize) -> Result<()> {
    if k_max > n / 2 {
        return Err(Error::BadParameters {
            family: "k range".into(),
            reason: format!("k = {k_max} exceeds floor(n/2) = {} for n = {n}", n / 2),
        });
    }
    Ok(())
}

/// Computes `α_k, ρ_k` for `k = 1..=k_max`, verifying the inclusion
/// `spec L(F_{k−1}) ⊆ spec L(F_k)` at every step.
pub fn k_params(g: &Graph, k_max: usize) -> Result<KParamTable> {
    let n = g.order();
    check_k_range(n, k_max)?;
    let mut spectra = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        spectra.push(spectrum(
            token_graph(g, k)?.graph(),
            SpectrumKind::Laplacian,
        )?);
    }
    let mut rows = Vec::with_capacity(k_max);
    let mut new_eigenvalues = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let (big, small) = (&spectra[k], &spectra[k - 1]);
        let gap = match big.contains(small)? {
            crate::spectral::Containment::Contained { max_gap, .. } => max_gap,
            crate::spectral::Containment::Unmatched { witness, gap } => {
                return Err(Error::ContainmentFailure {
                    witness,
                    gap,
                    tol: big.tol(),
                })
            }
        };
        let diff = big.difference(small)?;
        let expected = (binomial(n, k) - binomial(n, k - 1)) as usize;
        if diff.len() != expected {
            return Err(Error::NumericHealth(format!(
                "F_{k} contributes {} new eigenvalues, expected {expected}",
                diff.len()
            )));
        }
        rows.push(KParamRow {
            k,
            alpha: diff.min().expect("k <= n/2 gives new eigenvalues"),
            rho: diff.max().expect("k <= n/2 gives new eigenvalues"),
            new_count: expected,
            containment_gap: gap,
        });
        new_eigenvalues.push(diff);
    }
    Ok(KParamTable {
        n,
        rows,
        spectra,
        new_eigenvalues,
    })
}

/// Theorem-grade records for the inclusion chain of a computed table.
pub fn inclusion_records(table: &KParamTable) -> BoundsReport {
    let mut report = BoundsReport::new();
    for r in &table.rows {
        let tol = table.spectra[r.k].tol();
        report.push(CheckRecord::new(
            format!("inclusion F_{} in F_{} (max pairing gap)", r.k - 1, r.k),
            r.containment_gap,
            Relation::Le,
            tol,
            0.0,
            Grade::Theorem,
            "token-inclusion-chain",
        ));
    }
    report
}

pub const LEW_REL_TOL: f64 = 1e-7;

/// `k(λ_2 − k + 1) <= λ <= kλ_n` for every new eigenvalue `λ` of `F_k`,
/// recorded at the extremes `α_k` and `ρ_k`.
pub fn lew_records(table: &KParamTable, k: usize) -> Result<BoundsReport> {
    let row = table.row(k).ok_or(Error::BadParameters {
        family: "Lew bounds".into(),
        reason: format!("k = {k} not in the table"),
    })?;
    let spec_g = &table.spectra[1];
    if spec_g.len() < 2 {
        return Err(Error::TooSmall {
            needed: 2,
            n: spec_g.len(),
        });
    }
    let lambda2 = spec_g.values()[1];
    let lambda_n = spec_g.max().unwrap_or(0.0);
    let kf = k as f64;
    let lower = kf * (lambda2 - kf + 1.0);
    let upper = kf * lambda_n;
    let tol = scaled_tol(LEW_REL_TOL, &[lower, upper, row.alpha, row.rho]);
    let mut report = BoundsReport::new();
    report.push(CheckRecord::new(
        format!("lew lower k={k}: k(lambda_2-k+1) <= alpha_{k}"),
        lower,
        Relation::Le,
        row.alpha,
        tol,
        Grade::Theorem,
        "lew-bounds",
    ));
    report.push(CheckRecord::new(
        format!("lew upper k={k}: rho_{k} <= k lambda_n"),
        row.rho,
        Relation::Le,
        upper,
        tol,
        Grade::Theorem,
        "lew-bounds",
    ));
    Ok(report)
}

pub fn lew_bounds_check(g: &Graph, k: usize) -> Result<BoundsReport> {
    if k == 0 {
        return Err(Error::BadParameters {
            family: "Lew bounds".into(),
            reason: "k must be at least 1".into(),
        });
    }
    let table = k_params(g, k)?;
    lew_records(&table, k)
}
