use serde_json::json;
use token_spectra::analysis::{
    bipartite_drg_corollary, complement_identity, deleted_radii, deleted_radius_sandwich,
    heawood_case_study, inclusion_records, johnson_check, k_params, lew_records, table1,
    token_radius_bounds,
};
use token_spectra::partitions::{
    conjugate_polynomial_check, distance_pair_partition, distance_partition, distance_polynomials,
    drg_f2_cross_check, drg_interlacing, drg_intersection_array, is_equitable, quotient_matrices,
    srg_parameters, srg_quotients, verify_distance_polynomials, verify_quotient, DrgVerdict,
    QuotientCheck, CONJUGATE_TOL, QUOTIENT_IDENTITY_TOL, QUOTIENT_PINV_TOL, SRG_RADIUS_TOL,
};
use token_spectra::report::{scaled_tol, BoundsReport, CheckRecord, Grade, Relation};
use token_spectra::spectral::{laplacian_radius, spectrum, DEFAULT_REL_TOL};
use token_spectra::token::{verify_commutation, COMMUTATION_TOL, PSEUDO_INVERSE_TOL};
use token_spectra::{generate, token_graph, Error as CoreError, Family, Graph, SpectrumKind};

use crate::args::{Check, VerifyArgs};
use crate::commands::par_map;
use crate::error::{severity, CliError, Exit, Severity};
use crate::input::{display_name, load};
use crate::output::{to_row, Report, Row};

const DEFAULT_KMAX: usize = 3;
const JOHNSON_N_MAX: usize = 8;
const JOHNSON_K_MAX: usize = 4;

fn check_name(c: Check) -> &'static str {
    match c {
        Check::Table1 => "table1",
        Check::Heawood => "heawood",
        Check::Inclusion => "inclusion",
        Check::Lew => "lew",
        Check::Radius => "radius",
        Check::Complement => "complement",
        Check::Quotient => "quotient",
        Check::Commutation => "commutation",
        Check::Srg => "srg",
        Check::Johnson => "johnson",
    }
}

/// The k values a per-graph checker visits, with `lo <= k <= cap`.
fn k_values(args: &VerifyArgs, lo: usize, cap: usize) -> Vec<usize> {
    match args.k {
        Some(k) => vec![k],
        None => (lo..=args.kmax.unwrap_or(DEFAULT_KMAX).min(cap)).collect(),
    }
}

fn push_eq(
    r: &mut BoundsReport,
    name: String,
    deviation: f64,
    tol: f64,
    grade: Grade,
    key: &'static str,
) {
    r.push(CheckRecord::new(
        name,
        deviation,
        Relation::Eq,
        0.0,
        tol,
        grade,
        key,
    ));
}

fn quotient_records(
    r: &mut BoundsReport,
    label: &str,
    g: &Graph,
    q: &QuotientCheck,
) -> token_spectra::Result<()> {
    let key = "equitable-quotient";
    let th = Grade::Theorem;
    push_eq(
        r,
        format!("{label}: A S = S Q_A"),
        q.adjacency_intertwining,
        QUOTIENT_IDENTITY_TOL,
        th,
        key,
    );
    push_eq(
        r,
        format!("{label}: L S = S Q_L"),
        q.laplacian_intertwining,
        QUOTIENT_IDENTITY_TOL,
        th,
        key,
    );
    push_eq(
        r,
        format!("{label}: Q_A = (S^T S)^-1 S^T A S"),
        q.adjacency_pinv,
        QUOTIENT_PINV_TOL,
        th,
        key,
    );
    push_eq(
        r,
        format!("{label}: Q_L = (S^T S)^-1 S^T L S"),
        q.laplacian_pinv,
        QUOTIENT_PINV_TOL,
        th,
        key,
    );
    let ta = spectrum(g, SpectrumKind::Adjacency)?.tol();
    let tl = spectrum(g, SpectrumKind::Laplacian)?.tol();
    r.push(CheckRecord::new(
        format!("{label}: spec Q_A in spec A (max pairing gap)"),
        q.adjacency_containment_gap,
        Relation::Le,
        ta,
        0.0,
        th,
        key,
    ));
    r.push(CheckRecord::new(
        format!("{label}: spec Q_L in spec L (max pairing gap)"),
        q.laplacian_containment_gap,
        Relation::Le,
        tl,
        0.0,
        th,
        key,
    ));
    Ok(())
}

fn not_applicable(r: &mut BoundsReport, name: String, key: &'static str) {
    r.push(CheckRecord::new(
        name,
        0.0,
        Relation::Eq,
        0.0,
        0.0,
        Grade::NotApplicable,
        key,
    ));
}

fn quotient_check(g: &Graph) -> token_spectra::Result<BoundsReport> {
    let mut r = BoundsReport::new();
    if g.order() == 0 {
        return Ok(r);
    }
    let pi = distance_partition(g, 0)?;
    if is_equitable(g, &pi)?.holds() {
        let q = quotient_matrices(g, &pi)?;
        quotient_records(
            &mut r,
            "distance partition of G",
            g,
            &verify_quotient(g, &pi, &q)?,
        )?;
    } else {
        not_applicable(
            &mut r,
            "distance partition of G from vertex 0 is not equitable".into(),
            "equitable-quotient",
        );
    }

    let verdict = if g.order() >= 2 && g.is_connected() && g.is_regular() {
        drg_intersection_array(g)?
    } else {
        not_applicable(
            &mut r,
            "G is not distance-regular".into(),
            "drg-token-quotient",
        );
        return Ok(r);
    };
    let ia = match verdict {
        DrgVerdict::DistanceRegular(ia) => ia,
        DrgVerdict::NotDistanceRegular { u, v, distance } => {
            not_applicable(
                &mut r,
                format!("G is not distance-regular (pair {u},{v} at distance {distance})"),
                "drg-token-quotient",
            );
            return Ok(r);
        }
    };
    let q = drg_f2_cross_check(g, &ia)?;
    let f2 = token_graph(g, 2)?;
    let pi2 = distance_pair_partition(&f2)?;
    quotient_records(
        &mut r,
        "distance-pair partition of F_2",
        f2.graph(),
        &verify_quotient(f2.graph(), &pi2, &q)?,
    )?;

    let polys = distance_polynomials(&ia);
    push_eq(
        &mut r,
        "p_i(A) = A_i for every distance (max entry gap)".into(),
        verify_distance_polynomials(g, &polys),
        1e-7 * (ia.degree().max(1) as f64).powi(ia.diameter() as i32),
        Grade::Theorem,
        "distance-polynomials",
    );
    for row in drg_interlacing(&ia)? {
        let tol = scaled_tol(DEFAULT_REL_TOL, &[row.lower, row.upper]);
        r.push(CheckRecord::new(
            format!("2 theta_{} <= mu_{}", row.i + 1, row.i),
            row.lower,
            Relation::Le,
            row.mu,
            tol,
            Grade::Theorem,
            "drg-quotient-interlacing",
        ));
        r.push(CheckRecord::new(
            format!("mu_{} <= 2 theta_{}", row.i, row.i),
            row.mu,
            Relation::Le,
            row.upper,
            tol,
            Grade::Theorem,
            "drg-quotient-interlacing",
        ));
    }
    match conjugate_polynomial_check(&ia, &ia.eigenvalues()?) {
        Ok(c) => push_eq(
            &mut r,
            "roots of the conjugate polynomial = eigenvalues of A(F_2/pi)/2".into(),
            c.max_deviation,
            CONJUGATE_TOL,
            Grade::Theorem,
            "conjugate-polynomial",
        ),
        Err(CoreError::VanishingDistancePolynomial(t)) => not_applicable(
            &mut r,
            format!("conjugate polynomial undefined: p_d vanishes at {t}"),
            "conjugate-polynomial",
        ),
        Err(e) => return Err(e),
    }
    r.extend(bipartite_drg_corollary(g)?);
    Ok(r)
}

fn srg_check(g: &Graph) -> token_spectra::Result<BoundsReport> {
    let mut r = BoundsReport::new();
    let key = "srg-token-quotient";
    let Some(p) = srg_parameters(g)? else {
        not_applicable(&mut r, "G is not strongly regular".into(), key);
        return Ok(r);
    };
    let s = srg_quotients(p, Some(g))?;
    let rho = s.explicit_radius.unwrap_or(f64::NAN);
    let tol = SRG_RADIUS_TOL * rho.max(1.0);
    r.push(CheckRecord::new(
        "theta_1 = rho_A(F_2)",
        s.theta.0,
        Relation::Eq,
        rho,
        tol,
        Grade::Theorem,
        key,
    ));
    r.push(CheckRecord::new(
        "largest eigenvalue of Q_A = theta_1",
        s.q_a_eigenvalues[1],
        Relation::Eq,
        s.theta.0,
        tol,
        Grade::Theorem,
        key,
    ));
    r.push(CheckRecord::new(
        "smallest eigenvalue of Q_A = theta_2",
        s.q_a_eigenvalues[0],
        Relation::Eq,
        s.theta.1,
        tol,
        Grade::Theorem,
        key,
    ));
    let f2 = token_graph(g, 2)?;
    let sl = spectrum(f2.graph(), SpectrumKind::Laplacian)?;
    let gap = sl
        .values()
        .iter()
        .map(|v| (v - s.laplacian_bound).abs())
        .fold(f64::INFINITY, f64::min);
    push_eq(
        &mut r,
        "2(d-1) - 2(a-c) is a Laplacian eigenvalue of F_2 (nearest gap)".into(),
        gap,
        sl.tol(),
        Grade::Theorem,
        key,
    );
    r.push(CheckRecord::new(
        "2(d-1) - 2(a-c) <= rho_L(F_2)",
        s.laplacian_bound,
        Relation::Le,
        laplacian_radius(f2.graph())?,
        sl.tol(),
        Grade::Theorem,
        key,
    ));
    Ok(r)
}

fn per_graph(check: Check, g: &Graph, args: &VerifyArgs) -> token_spectra::Result<BoundsReport> {
    let n = g.order();
    let mut r = BoundsReport::new();
    match check {
        Check::Inclusion => {
            let kmax = args.k.or(args.kmax).unwrap_or(DEFAULT_KMAX).min(n / 2);
            let table = k_params(g, kmax)?;
            r.extend(inclusion_records(&table));
            for row in &table.rows {
                r.push(CheckRecord::new(
                    format!("alpha_{k} <= rho_{k}", k = row.k),
                    row.alpha,
                    Relation::Le,
                    row.rho,
                    scaled_tol(DEFAULT_REL_TOL, &[row.rho]),
                    Grade::Reported,
                    "token-inclusion-chain",
                ));
            }
        }
        Check::Lew => {
            let ks = k_values(args, 1, n / 2);
            if let Some(&top) = ks.iter().max() {
                let table = k_params(g, top)?;
                for k in ks {
                    r.extend(lew_records(&table, k)?);
                }
            }
        }
        Check::Radius => {
            let kappa = g.vertex_connectivity();
            for k in k_values(args, 2, n) {
                r.extend(token_radius_bounds(g, k)?);
                if k >= 2 && k - 1 < kappa {
                    r.extend(deleted_radius_sandwich(g, &deleted_radii(g, k - 1)?)?);
                }
            }
        }
        Check::Complement => {
            for k in k_values(args, 1, n / 2) {
                r.extend(complement_identity(g, k)?);
            }
        }
        Check::Commutation => {
            let top = args
                .k
                .or(args.kmax)
                .unwrap_or(DEFAULT_KMAX.min(n / 2))
                .min(n);
            let key = "binomial-commutation";
            for k in 2..=top {
                for h in 1..k {
                    match verify_commutation(g, h, k) {
                        Ok(c) => {
                            let th = Grade::Theorem;
                            push_eq(
                                &mut r,
                                format!("h={h} k={k}: L_k S_b = S_b L_h"),
                                c.commutation,
                                COMMUTATION_TOL,
                                th,
                                key,
                            );
                            push_eq(
                                &mut r,
                                format!("h={h} k={k}: L_h = (S_b^T S_b)^-1 S_b^T L_k S_b"),
                                c.pseudo_inverse,
                                PSEUDO_INVERSE_TOL,
                                th,
                                key,
                            );
                            push_eq(
                                &mut r,
                                format!("h={h} k={k}: L_k P = P L_k P"),
                                c.invariance,
                                PSEUDO_INVERSE_TOL,
                                th,
                                key,
                            );
                        }
                        Err(CoreError::SingularGram) => not_applicable(
                            &mut r,
                            format!("h={h} k={k}: S_b^T S_b is singular"),
                            key,
                        ),
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        Check::Quotient => r.extend(quotient_check(g)?),
        Check::Srg => r.extend(srg_check(g)?),
        Check::Table1 | Check::Heawood | Check::Johnson => unreachable!("handled without input"),
    }
    Ok(r)
}

fn apply_tol(rec: &mut CheckRecord, tol: Option<f64>) {
    if let Some(t) = tol {
        if rec.relation != Relation::Lt {
            rec.tol = scaled_tol(t, &[rec.left, rec.right]);
        }
    }
}

fn record_row(graph: Option<(usize, &Graph)>, rec: &CheckRecord) -> Row {
    let mut row = Row::new();
    if let Some((i, g)) = graph {
        row.insert("graph".into(), json!(i));
        row.insert("name".into(), json!(display_name(g, i)));
    }
    row.insert("check".into(), json!(rec.name));
    for (k, v) in to_row(rec) {
        if k != "name" {
            row.insert(k, v);
        }
    }
    row
}

#[derive(Default)]
struct Tally {
    checks: usize,
    passed: usize,
    theorem_failures: usize,
    reported_failures: usize,
    not_applicable: usize,
    skipped: usize,
    min_inequality_slack: Option<f64>,
}

impl Tally {
    fn add(&mut self, rec: &CheckRecord) {
        self.checks += 1;
        match rec.grade {
            Grade::NotApplicable => self.not_applicable += 1,
            _ if rec.passed() => self.passed += 1,
            Grade::Theorem => self.theorem_failures += 1,
            _ => self.reported_failures += 1,
        }
        if rec.grade == Grade::Theorem && rec.relation != Relation::Eq {
            let s = rec.slack();
            self.min_inequality_slack = Some(self.min_inequality_slack.map_or(s, |m| m.min(s)));
        }
    }

    fn write(&self, summary: &mut Row) {
        summary.insert("checks".into(), json!(self.checks));
        summary.insert("passed".into(), json!(self.passed));
        summary.insert("theorem_failures".into(), json!(self.theorem_failures));
        summary.insert("reported_failures".into(), json!(self.reported_failures));
        summary.insert("not_applicable".into(), json!(self.not_applicable));
        summary.insert("skipped".into(), json!(self.skipped));
        summary.insert(
            "min_inequality_slack".into(),
            json!(self.min_inequality_slack),
        );
    }
}

fn push_report(
    report: &mut Report,
    tally: &mut Tally,
    graph: Option<(usize, &Graph)>,
    mut r: BoundsReport,
    tol: Option<f64>,
) {
    for rec in &mut r.checks {
        apply_tol(rec, tol);
        tally.add(rec);
        report.rows.push(record_row(graph, rec));
    }
    if !r.theorems_hold() {
        report.raise(Exit::Theorem);
    }
}

fn reject_input(args: &VerifyArgs) -> Result<(), CliError> {
    if !args.input.is_empty() {
        return Err(CliError::Usage(format!(
            "verify {} takes no input graph",
            check_name(args.check)
        )));
    }
    Ok(())
}

fn table1_report(args: &VerifyArgs, report: &mut Report) -> Result<(), CliError> {
    let (rows, records) = table1()?;
    let mut typos = Vec::new();
    let mut failures = 0;
    for row in &rows {
        let mut out = to_row(row);
        let identities: Vec<CheckRecord> = records
            .checks
            .iter()
            .filter(|c| c.grade == Grade::Theorem && c.name.starts_with(&format!("n={}:", row.n)))
            .cloned()
            .map(|mut c| {
                apply_tol(&mut c, args.output.tol);
                c
            })
            .collect();
        let ok = identities.iter().all(|c| c.passed());
        failures += usize::from(!ok);
        let typo = row.reference_match == Some(false);
        if typo {
            typos.push(row.n);
        }
        out.insert("identity_passed".into(), json!(ok));
        out.insert("suspected_typo".into(), json!(typo));
        out.insert("citation".into(), json!("cycle-token-table"));
        report.rows.push(out);
    }
    report.summary.insert("rows".into(), json!(rows.len()));
    report
        .summary
        .insert("identity_failures".into(), json!(failures));
    report
        .summary
        .insert("suspected_typos".into(), json!(typos));
    if failures > 0 {
        report.raise(Exit::Theorem);
    }
    Ok(())
}

fn srg_defaults() -> token_spectra::Result<Vec<Graph>> {
    [
        (Family::Cycle, vec![5]),
        (Family::Petersen, vec![]),
        (Family::Shrikhande, vec![]),
        (Family::Rook, vec![4, 4]),
        (Family::Johnson, vec![6, 2]),
        (Family::Kneser, vec![6, 2]),
    ]
    .into_iter()
    .map(|(f, p)| generate(f, &p))
    .collect()
}

pub fn verify_cmd(args: &VerifyArgs) -> Result<Report, CliError> {
    let tol = args.output.tol;
    let mut report = Report::new(
        format!("verify {}", check_name(args.check)),
        tol.unwrap_or(DEFAULT_REL_TOL),
    );
    let mut tally = Tally::default();
    match args.check {
        Check::Table1 => {
            reject_input(args)?;
            table1_report(args, &mut report)?;
            return Ok(report);
        }
        Check::Heawood => {
            reject_input(args)?;
            push_report(&mut report, &mut tally, None, heawood_case_study()?, tol);
        }
        Check::Johnson => {
            reject_input(args)?;
            let kmax = args.k.or(args.kmax).unwrap_or(JOHNSON_K_MAX);
            push_report(
                &mut report,
                &mut tally,
                None,
                johnson_check(JOHNSON_N_MAX, kmax)?,
                tol,
            );
        }
        check => {
            let graphs = match (load(&args.input)?, check) {
                (Some(g), _) => g,
                (None, Check::Srg) => srg_defaults()?,
                (None, _) => {
                    return Err(CliError::Usage(format!(
                        "verify {} needs an input graph (--gen, --gen-range, --graph6-file or --json-file)",
                        check_name(check)
                    )))
                }
            };
            let results = par_map(args.output.jobs, &graphs, |_, g| per_graph(check, g, args))?;
            let single = graphs.len() == 1;
            for (i, (g, res)) in graphs.iter().zip(results).enumerate() {
                match res {
                    Ok(r) => push_report(&mut report, &mut tally, Some((i, g)), r, tol),
                    Err(e) => {
                        let sev = severity(&e);
                        if single && sev == Severity::Skip {
                            return Err(e.into());
                        }
                        let mut row = Row::new();
                        row.insert("graph".into(), json!(i));
                        row.insert("name".into(), json!(display_name(g, i)));
                        row.insert("check".into(), json!(check_name(check)));
                        row.insert("error".into(), json!(e.to_string()));
                        report.rows.push(row);
                        match sev {
                            Severity::Skip => tally.skipped += 1,
                            Severity::Guard => report.raise(Exit::Guard),
                            Severity::Invariant => {
                                tally.theorem_failures += 1;
                                report.raise(Exit::Theorem)
                            }
                        }
                    }
                }
            }
            report.summary.insert("graphs".into(), json!(graphs.len()));
        }
    }
    tally.write(&mut report.summary);
    Ok(report)
}
