//! Plain-text edge lists: one `u v` pair per line, `#` starts a comment, and an
//! optional `n=<count>` line fixes the order (otherwise it is one more than the
//! largest vertex mentioned).

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let bad = |msg: String| Error::EdgeList(format!("line {}: {msg}", lineno + 1));
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(count) = line.strip_prefix("n=") {
            if n.is_some() || !edges.is_empty() {
                return Err(bad("the order header must precede every edge and appear once".into()));
            }
            n = Some(count.trim().parse::<usize>().map_err(|_| bad(format!("bad order `{count}`")))?);
            continue;
        }
        let mut fields = line.split_whitespace();
        let mut vertex = || -> Result<usize> {
            let f = fields.next().ok_or_else(|| bad("expected two vertices".into()))?;
            f.parse().map_err(|_| bad(format!("bad vertex `{f}`")))
        };
        let (u, v) = (vertex()?, vertex()?);
        if fields.next().is_some() {
            return Err(bad("expected exactly two vertices".into()));
        }
        edges.push((u, v));
    }
    let n = match n {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().ok_or_else(|| Error::EdgeList("no edges and no order header".into()))?,
    };
    Graph::new(n, &edges)
}

/// Writes the `n=` header followed by the sorted edges.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
