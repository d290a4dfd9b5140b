//! Plain-text graph files.
//!
//! ```text
//! # comment lines anywhere
//! n k
//! u v        one line per edge, 0-based, u < v, repeated for multiplicity
//! ```

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use super::{GraphError, RegularGraph};

/// A parsed graph file: the graph plus its comment lines (without `#`).
#[derive(Debug, Clone)]
pub struct GraphFile {
    pub graph: RegularGraph,
    pub comments: Vec<String>,
}

const LABEL_KEY: &str = "label:";

/// Write `g` with a `# label:` comment followed by `comments`.
pub fn write_graph<W: Write>(g: &RegularGraph, comments: &[String], out: &mut W) -> std::io::Result<()> {
    let mut buf = String::with_capacity(16 * g.edge_count() + 64);
    writeln!(buf, "# {LABEL_KEY} {}", g.label()).unwrap();
    for c in comments {
        writeln!(buf, "# {c}").unwrap();
    }
    writeln!(buf, "{} {}", g.n(), g.k()).unwrap();
    for (u, v) in g.edges() {
        writeln!(buf, "{u} {v}").unwrap();
    }
    out.write_all(buf.as_bytes())
}

pub fn parse_graph(text: &str) -> Result<GraphFile, GraphError> {
    let mut comments = Vec::new();
    let mut header: Option<(usize, u32)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.trim().to_string());
            continue;
        }
        let err = |message: String| GraphError::Parse { line: line_no, message };
        let mut fields = line.split_whitespace();
        let (a, b) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(err(format!("expected two integers, found {line:?}"))),
        };
        let a: usize = a.parse().map_err(|e| err(format!("{a:?}: {e}")))?;
        let b: usize = b.parse().map_err(|e| err(format!("{b:?}: {e}")))?;
        match header {
            None => {
                let k = u32::try_from(b).map_err(|e| err(format!("degree {b}: {e}")))?;
                header = Some((a, k));
            }
            Some((n, _)) => {
                if a >= b {
                    return Err(err(format!("edge {a} {b} must satisfy u < v")));
                }
                if b >= n {
                    return Err(err(format!("vertex {b} out of range for n = {n}")));
                }
                edges.push((a, b));
            }
        }
    }
    let (n, k) = header.ok_or(GraphError::Parse {
        line: 0,
        message: "missing `n k` header".into(),
    })?;
    let label = comments
        .iter()
        .find_map(|c| c.strip_prefix(LABEL_KEY))
        .map(|l| l.trim().to_string())
        .unwrap_or_else(|| "file".to_string());
    let graph = RegularGraph::from_edges(n, k, edges, label)?;
    Ok(GraphFile { graph, comments })
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<GraphFile, GraphError> {
    parse_graph(&std::fs::read_to_string(path)?)
}

/// One eigenvalue per line with 17 significant digits.
pub fn format_spectrum(values: &[f64]) -> String {
    let mut s = String::with_capacity(values.len() * 26);
    for v in values {
        writeln!(s, "{v:.16e}").unwrap();
    }
    s
}
