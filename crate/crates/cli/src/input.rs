use std::fs;
use std::str::FromStr;

use token_spectra::io::{read_edge_list_json, read_graph6_corpus};
use token_spectra::{generate, Error, Family, Graph};

use crate::args::InputArgs;
use crate::error::CliError;

/// `family:a..b`, both ends inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeSpec {
    pub family: Family,
    pub from: usize,
    pub to: usize,
}

impl FromStr for RangeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |reason: &str| Error::BadParameters {
            family: s.to_string(),
            reason: reason.to_string(),
        };
        let (name, range) = s
            .split_once(':')
            .ok_or_else(|| bad("expected `family:a..b`"))?;
        let family: Family = name.parse()?;
        let (a, b) = range
            .split_once("..")
            .ok_or_else(|| bad("expected `a..b`"))?;
        let from = a
            .trim()
            .parse()
            .map_err(|_| bad("range start is not an integer"))?;
        let to = b
            .trim()
            .parse()
            .map_err(|_| bad("range end is not an integer"))?;
        if from > to {
            return Err(bad("empty range"));
        }
        Ok(RangeSpec { family, from, to })
    }
}

fn read(path: &std::path::Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Loads the input graphs in a stable order. `None` when no source was given.
pub fn load(input: &InputArgs) -> Result<Option<Vec<Graph>>, CliError> {
    if let Some(spec) = &input.gen {
        return Ok(Some(vec![spec.build()?]));
    }
    if let Some(r) = &input.gen_range {
        let graphs = (r.from..=r.to)
            .map(|p| generate(r.family, &[p]))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Some(graphs));
    }
    if let Some(path) = &input.graph6_file {
        return Ok(Some(read_graph6_corpus(&read(path)?)?));
    }
    if let Some(path) = &input.json_file {
        let graphs = read_edge_list_json(&read(path)?)?;
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        return Ok(Some(
            graphs
                .into_iter()
                .enumerate()
                .map(|(i, g)| {
                    if g.name().is_some() {
                        g
                    } else {
                        g.with_name(format!("{stem}#{i}"))
                    }
                })
                .collect(),
        ));
    }
    Ok(None)
}

pub fn require(input: &InputArgs) -> Result<Vec<Graph>, CliError> {
    load(input)?.ok_or_else(|| {
        CliError::Usage(
            "an input source is required: --gen, --gen-range, --graph6-file or --json-file".into(),
        )
    })
}

pub fn display_name(g: &Graph, index: usize) -> String {
    g.name()
        .map(str::to_owned)
        .unwrap_or_else(|| format!("#{index}"))
}
