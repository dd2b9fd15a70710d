//! Edge-list text format: a header line `n m`, then `m` lines `u v`
//! (0-based, whitespace separated, LF line endings).

use std::fmt::Write as _;
use std::path::Path;

use super::{catalog, Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| GraphError::Parse("empty input".into()))?;
    let (n, m) = parse_pair(header).ok_or_else(|| GraphError::Parse(format!("bad header `{header}`")))?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let e = parse_pair(line).ok_or_else(|| GraphError::Parse(format!("bad edge line `{line}`")))?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(GraphError::Parse(format!(
            "header announces {m} edges but {} follow",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").expect("writing to a String");
    }
    s
}

/// Loads a graph from a path, or from the builtin catalog when `spec` names
/// no existing file.
pub fn load(spec: &str) -> Result<Graph, GraphError> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| GraphError::Parse(format!("{spec}: {e}")))?;
        parse_edge_list(&text)
    } else {
        catalog::builtin(spec)
    }
}
