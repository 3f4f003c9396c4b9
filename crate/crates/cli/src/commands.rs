use rayon::prelude::*;
use serde_json::{json, Value};
use token_spectra::analysis::{conjecture_scan_with_tol, SCAN_REL_TOL};
use token_spectra::io::encode_graph6;
use token_spectra::io::GRAPH6_MAX_ORDER;
use token_spectra::spectral::{spectrum, Eigenspaces, DEFAULT_REL_TOL};
use token_spectra::token::check_guard;
use token_spectra::{token_graph, Graph, Spectrum, SpectrumKind};

use crate::args::{Emit, KindArg, ScanArgs, SpectrumArgs, TokenArgs};
use crate::error::{CliError, Exit};
use crate::input::{display_name, require};
use crate::output::{fmt_num, to_row, Report, Row};

/// Maps `f` over `items` on `jobs` threads (0 = all cores), keeping input order.
pub fn par_map<T, R, F>(jobs: usize, items: &[T], f: F) -> Result<Vec<R>, CliError>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    Ok(pool.install(|| items.par_iter().enumerate().map(|(i, x)| f(i, x)).collect()))
}

/// `value^multiplicity` pairs, ascending.
pub fn distinct_text(s: &Spectrum, rel: f64) -> String {
    let gap = rel * s.values().iter().fold(1.0f64, |m, v| m.max(v.abs()));
    s.grouped(gap)
        .into_iter()
        .map(|(v, m)| format!("{}^{m}", fmt_num(if v.abs() <= gap { 0.0 } else { v }, 10)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn graph_header(index: usize, g: &Graph) -> Row {
    let mut row = Row::new();
    row.insert("graph".into(), json!(index));
    row.insert("name".into(), json!(display_name(g, index)));
    row.insert("n".into(), json!(g.order()));
    row.insert("m".into(), json!(g.size()));
    row
}

fn spectrum_rows(
    index: usize,
    g: &Graph,
    args: &SpectrumArgs,
    rel: f64,
) -> token_spectra::Result<Vec<Row>> {
    let kinds: &[SpectrumKind] = match args.kind {
        KindArg::Adjacency => &[SpectrumKind::Adjacency],
        KindArg::Laplacian => &[SpectrumKind::Laplacian],
        KindArg::Both => &[SpectrumKind::Adjacency, SpectrumKind::Laplacian],
    };
    let mut rows = Vec::new();
    for &kind in kinds {
        let s = spectrum(g, kind)?;
        let mut row = graph_header(index, g);
        row.insert("kind".into(), json!(kind));
        row.insert("radius".into(), json!(s.max().unwrap_or(0.0)));
        if kind == SpectrumKind::Laplacian {
            row.insert(
                "alpha".into(),
                json!(s.values().get(1).copied().unwrap_or(0.0)),
            );
        }
        row.insert("distinct".into(), json!(distinct_text(&s, rel)));
        row.insert("eigenvalues".into(), json!(s.values()));
        rows.push(row);
    }
    if args.local && g.order() > 0 {
        let es = Eigenspaces::of_adjacency(g)?;
        for u in 0..g.order() {
            let ls = es.local_spectrum(u)?;
            let mut row = graph_header(index, g);
            row.insert("kind".into(), json!("local"));
            row.insert("vertex".into(), json!(u));
            row.insert("mesh_size".into(), json!(ls.mesh_size()));
            let text = ls
                .pairs
                .iter()
                .map(|(t, m)| format!("{}^{}", fmt_num(*t, 10), fmt_num(*m, 10)))
                .collect::<Vec<_>>()
                .join(" ");
            row.insert("distinct".into(), json!(text));
            rows.push(row);
        }
    }
    Ok(rows)
}

fn collect_rows(
    report: &mut Report,
    results: Vec<token_spectra::Result<Vec<Row>>>,
) -> Result<(), CliError> {
    for r in results {
        report.rows.extend(r?);
    }
    Ok(())
}

pub fn spectrum_cmd(args: &SpectrumArgs) -> Result<Report, CliError> {
    let graphs = require(&args.input)?;
    let rel = args.output.tol.unwrap_or(DEFAULT_REL_TOL);
    let mut report = Report::new("spectrum", rel);
    let results = par_map(args.output.jobs, &graphs, |i, g| {
        spectrum_rows(i, g, args, rel)
    })?;
    collect_rows(&mut report, results)?;
    report.summary.insert("graphs".into(), json!(graphs.len()));
    Ok(report)
}

fn edge_text(g: &Graph) -> String {
    g.edges()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn token_row(index: usize, g: &Graph, args: &TokenArgs, rel: f64) -> token_spectra::Result<Row> {
    let t = token_graph(g, args.k)?;
    let f = t.graph();
    let mut row = Row::new();
    row.insert("graph".into(), json!(index));
    row.insert("name".into(), json!(display_name(g, index)));
    row.insert("n".into(), json!(g.order()));
    row.insert("k".into(), json!(args.k));
    row.insert("order".into(), json!(f.order()));
    row.insert("size".into(), json!(f.size()));
    row.insert("regular_degree".into(), json!(f.regular_degree()));
    row.insert("connected".into(), json!(f.is_connected()));
    let emit = match args.emit {
        Emit::Auto if f.order() <= GRAPH6_MAX_ORDER => Emit::Graph6,
        Emit::Auto => Emit::Edges,
        e => e,
    };
    match emit {
        Emit::Graph6 => {
            row.insert("graph6".into(), json!(encode_graph6(f)?));
        }
        Emit::Edges => {
            row.insert("edges".into(), json!(edge_text(f)));
        }
        _ => {}
    }
    if args.spectra || args.compare.is_some() {
        let sa = spectrum(f, SpectrumKind::Adjacency)?;
        let sl = spectrum(f, SpectrumKind::Laplacian)?;
        if args.spectra {
            row.insert("adjacency".into(), json!(distinct_text(&sa, rel)));
            row.insert("laplacian".into(), json!(distinct_text(&sl, rel)));
        }
        if let Some(spec) = &args.compare {
            let h = spec.build()?;
            let ha = spectrum(&h, SpectrumKind::Adjacency)?;
            let hl = spectrum(&h, SpectrumKind::Laplacian)?;
            let scale = |a: &Spectrum, b: &Spectrum| {
                rel * a
                    .values()
                    .iter()
                    .chain(b.values())
                    .fold(1.0f64, |m, v| m.max(v.abs()))
            };
            row.insert("compare".into(), json!(spec.to_string()));
            row.insert(
                "adjacency_cospectral".into(),
                json!(sa.approx_eq(&ha, scale(&sa, &ha))),
            );
            row.insert(
                "laplacian_cospectral".into(),
                json!(sl.approx_eq(&hl, scale(&sl, &hl))),
            );
            row.insert("adjacency_deviation".into(), json!(sa.max_deviation(&ha)));
            row.insert("laplacian_deviation".into(), json!(sl.max_deviation(&hl)));
        }
    }
    Ok(row)
}

pub fn token_cmd(args: &TokenArgs) -> Result<Report, CliError> {
    let graphs = require(&args.input)?;
    let rel = args.output.tol.unwrap_or(DEFAULT_REL_TOL);
    let mut report = Report::new("token", rel);
    for g in &graphs {
        check_guard(g.order(), args.k)?;
    }
    let results = par_map(args.output.jobs, &graphs, |i, g| {
        token_row(i, g, args, rel).map(|r| vec![r])
    })?;
    collect_rows(&mut report, results)?;
    report.summary.insert("graphs".into(), json!(graphs.len()));
    Ok(report)
}

pub fn scan_cmd(args: &ScanArgs) -> Result<Report, CliError> {
    let graphs = require(&args.input)?;
    let rel = args.output.tol.unwrap_or(SCAN_REL_TOL);
    for g in &graphs {
        check_guard(g.order(), args.kmax.min(g.order() / 2))?;
    }
    let scan = conjecture_scan_with_tol(&graphs, args.kmax, args.output.jobs, rel)?;
    let mut report = Report::new("scan", rel);
    for row in &scan.rows {
        let mut r = to_row(row);
        r.insert("citation".into(), json!("k-parameter-conjectures"));
        report.rows.push(r);
    }
    report.summary = to_row(&scan.summary);
    report.summary.insert(
        "candidates".into(),
        Value::Array(
            scan.candidates
                .iter()
                .map(|c| Value::Object(to_row(c)))
                .collect(),
        ),
    );
    if !scan.theorems_hold() {
        report.raise(Exit::Theorem);
    }
    Ok(report)
}
