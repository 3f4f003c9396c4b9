use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::spectral::algebraic_connectivity;

use super::kparams::k_params;

/// Relative tolerance for monotonicity ties and the Aldous equality.
pub const SCAN_REL_TOL: f64 = 1e-7;

fn tie_tol(rel: f64, v: f64) -> f64 {
    rel * v.abs().max(1.0)
}

/// Verdicts for one corpus graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRow {
    pub index: usize,
    pub name: String,
    pub n: usize,
    pub k_max: usize,
    pub alphas: Vec<f64>,
    pub rhos: Vec<f64>,
    /// `α_1 <= α_2 <= ..` up to ties; `None` with fewer than two terms.
    pub alpha_monotone: Option<bool>,
    pub rho_monotone: Option<bool>,
    /// `min_k (α_{k+1} − α_k)`.
    pub alpha_margin: Option<f64>,
    pub rho_margin: Option<f64>,
    /// `α(F_k(G)) = α(G)` for every `k <= k_max`.
    pub aldous_holds: Option<bool>,
    pub aldous_max_deviation: Option<f64>,
    /// `min(α_2, ..) >= α_1`.
    pub alpha_min_holds: Option<bool>,
    pub error: Option<String>,
}

impl ScanRow {
    fn empty(index: usize, g: &Graph) -> Self {
        ScanRow {
            index,
            name: g
                .name()
                .map(str::to_owned)
                .unwrap_or_else(|| format!("#{index}")),
            n: g.order(),
            k_max: 0,
            alphas: vec![],
            rhos: vec![],
            alpha_monotone: None,
            rho_monotone: None,
            alpha_margin: None,
            rho_margin: None,
            aldous_holds: None,
            aldous_max_deviation: None,
            alpha_min_holds: None,
            error: None,
        }
    }

    /// A theorem-grade failure (Aldous equality, `α_1` minimality) or an error.
    pub fn has_violation(&self) -> bool {
        self.error.is_some()
            || self.aldous_holds == Some(false)
            || self.alpha_min_holds == Some(false)
    }
}

/// A consecutive pair that breaks a monotonicity conjecture.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Candidate {
    pub index: usize,
    pub name: String,
    /// `"alpha-monotone"` or `"rho-monotone"`.
    pub conjecture: &'static str,
    /// The pair `(k, k+1)` with `value(k+1) < value(k)`.
    pub k: usize,
    pub margin: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ScanSummary {
    pub graphs: usize,
    pub errors: usize,
    pub aldous_violations: usize,
    pub alpha_min_violations: usize,
    pub alpha_monotone_violations: usize,
    pub rho_monotone_violations: usize,
    pub worst_alpha_margin: Option<f64>,
    pub worst_rho_margin: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    /// Sorted by margin, most negative first; ties by input index.
    pub candidates: Vec<Candidate>,
    pub summary: ScanSummary,
}

impl ScanReport {
    pub fn theorems_hold(&self) -> bool {
        self.summary.errors == 0
            && self.summary.aldous_violations == 0
            && self.summary.alpha_min_violations == 0
    }
}

fn monotone(values: &[f64], rel: f64) -> (Option<bool>, Option<f64>, Vec<(usize, f64)>) {
    if values.len() < 2 {
        return (None, None, vec![]);
    }
    let mut margin = f64::INFINITY;
    let mut breaks = vec![];
    for (i, w) in values.windows(2).enumerate() {
        let m = w[1] - w[0];
        margin = margin.min(m);
        if m < -tie_tol(rel, w[0]) {
            breaks.push((i + 1, m));
        }
    }
    (Some(breaks.is_empty()), Some(margin), breaks)
}

fn scan_one(index: usize, g: &Graph, k_max: usize, rel: f64) -> (ScanRow, Vec<Candidate>) {
    let mut row = ScanRow::empty(index, g);
    let k_max = k_max.min(g.order() / 2);
    row.k_max = k_max;
    let run = || -> Result<(ScanRow, Vec<Candidate>)> {
        let mut row = row.clone();
        let table = k_params(g, k_max)?;
        row.alphas = table.alphas();
        row.rhos = table.rhos();
        let (am, amar, abreaks) = monotone(&row.alphas, rel);
        let (rm, rmar, rbreaks) = monotone(&row.rhos, rel);
        row.alpha_monotone = am;
        row.alpha_margin = amar;
        row.rho_monotone = rm;
        row.rho_margin = rmar;

        if k_max >= 1 {
            let alpha = algebraic_connectivity(g)?;
            let mut dev = 0.0f64;
            let mut ok = true;
            for k in 1..=k_max {
                // second-smallest Laplacian eigenvalue of F_k
                let ak = table.spectra[k].values()[1];
                dev = dev.max((ak - alpha).abs());
                ok &= (ak - alpha).abs() <= tie_tol(rel, alpha);
            }
            row.aldous_holds = Some(ok);
            row.aldous_max_deviation = Some(dev);
            let a1 = row.alphas[0];
            row.alpha_min_holds = Some(row.alphas[1..].iter().all(|&a| a >= a1 - tie_tol(rel, a1)));
        }

        let name = row.name.clone();
        let mut cands: Vec<Candidate> = abreaks
            .into_iter()
            .map(|(k, margin)| Candidate {
                index,
                name: name.clone(),
                conjecture: "alpha-monotone",
                k,
                margin,
            })
            .collect();
        cands.extend(rbreaks.into_iter().map(|(k, margin)| Candidate {
            index,
            name: name.clone(),
            conjecture: "rho-monotone",
            k,
            margin,
        }));
        Ok((row, cands))
    };
    match run() {
        Ok(out) => out,
        Err(e) => {
            row.error = Some(e.to_string());
            (row, vec![])
        }
    }
}

/// Scans a corpus with `k <= min(k_max, n/2)`. Rows come back in input
/// order whatever the number of worker threads (`jobs = 0` uses all cores).
pub fn conjecture_scan(corpus: &[Graph], k_max: usize, jobs: usize) -> Result<ScanReport> {
    conjecture_scan_with_tol(corpus, k_max, jobs, SCAN_REL_TOL)
}

/// [`conjecture_scan`] with a relative tie tolerance in place of [`SCAN_REL_TOL`].
pub fn conjecture_scan_with_tol(
    corpus: &[Graph],
    k_max: usize,
    jobs: usize,
    rel_tol: f64,
) -> Result<ScanReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| crate::error::Error::NumericHealth(format!("thread pool: {e}")))?;
    let results: Vec<(ScanRow, Vec<Candidate>)> = pool.install(|| {
        corpus
            .par_iter()
            .enumerate()
            .map(|(i, g)| scan_one(i, g, k_max, rel_tol))
            .collect()
    });

    let mut report = ScanReport::default();
    for (row, cands) in results {
        report.candidates.extend(cands);
        report.rows.push(row);
    }
    report.candidates.sort_by(|a, b| {
        a.margin
            .total_cmp(&b.margin)
            .then(a.index.cmp(&b.index))
            .then(a.k.cmp(&b.k))
    });

    let s = &mut report.summary;
    s.graphs = report.rows.len();
    for row in &report.rows {
        s.errors += usize::from(row.error.is_some());
        s.aldous_violations += usize::from(row.aldous_holds == Some(false));
        s.alpha_min_violations += usize::from(row.alpha_min_holds == Some(false));
        s.alpha_monotone_violations += usize::from(row.alpha_monotone == Some(false));
        s.rho_monotone_violations += usize::from(row.rho_monotone == Some(false));
        if let Some(m) = row.alpha_margin {
            s.worst_alpha_margin = Some(s.worst_alpha_margin.map_or(m, |w| w.min(m)));
        }
        if let Some(m) = row.rho_margin {
            s.worst_rho_margin = Some(s.worst_rho_margin.map_or(m, |w| w.min(m)));
        }
    }
    Ok(report)
}
