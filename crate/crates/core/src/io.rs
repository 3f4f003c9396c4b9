//! Corpus ingestion: graph6 lines and edge-list JSON.
//!
//! graph6 here covers the single-byte size field only, so `n <= 62`. The
//! upper triangle of the adjacency matrix is read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ..`), six bits per printable character
//! offset by 63, most significant bit first.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_MAX_ORDER: usize = 62;
const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line (surrounding whitespace ignored).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!(
            "size byte {first} outside the printable range 63..=126"
        )));
    }
    let n = (first - 63) as usize;
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Graph6(
            "multi-byte size field (n > 62) is not supported".into(),
        ));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    if let Some(&c) = body.iter().find(|c| !(63..=126).contains(*c)) {
        return Err(Error::Graph6(format!(
            "data byte {c} outside the printable range 63..=126"
        )));
    }
    let bit = |i: usize| ((body[i / 6] - 63) >> (5 - i % 6)) & 1 == 1;
    let pad = expected * 6 - bits;
    if pad > 0 && (bits..bits + pad).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Graph6(format!(
            "n = {n} exceeds the single-byte size field"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                data[i / 6] |= 1 << (5 - i % 6);
            }
            i += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// Parses a graph6 file: one graph per line, blank lines and an optional
/// `>>graph6<<` header skipped. Each graph is named by its graph6 string.
pub fn read_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim().trim_start_matches(GRAPH6_HEADER);
        if line.is_empty() {
            continue;
        }
        let g =
            parse_graph6(line).map_err(|e| Error::Graph6(format!("line {}: {e}", lineno + 1)))?;
        out.push(g.with_name(line.to_string()));
    }
    Ok(out)
}

/// `{"n": int, "edges": [[u, v], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl EdgeList {
    pub fn from_graph(g: &Graph) -> Self {
        EdgeList {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            name: g.name().map(str::to_string),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let g = Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))?;
        Ok(match &self.name {
            Some(name) => g.with_name(name.clone()),
            None => g,
        })
    }
}

/// Accepts a single edge-list object or an array of them.
pub fn read_edge_list_json(text: &str) -> Result<Vec<Graph>> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum OneOrMany {
        One(EdgeList),
        Many(Vec<EdgeList>),
    }
    let parsed: OneOrMany =
        serde_json::from_str(text).map_err(|e| Error::EdgeListJson(e.to_string()))?;
    let lists = match parsed {
        OneOrMany::One(e) => vec![e],
        OneOrMany::Many(v) => v,
    };
    lists.iter().map(EdgeList::to_graph).collect()
}
