//! graph6 encoding for graphs of order at most 62.
//!
//! Byte 0 is `n + 63`. The upper-triangle bits `x(0,1), x(0,2), x(1,2),
//! x(0,3), …` (for `j = 1..n`, `i = 0..j`) follow, packed big-endian into
//! 6-bit groups, zero-padded, each group written as `group + 63`.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

fn bad<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Graph6(msg.into()))
}

/// Decodes one graph6 line. A single trailing `\n` (or `\r\n`) is accepted.
pub fn parse_graph6(line: &[u8]) -> Result<Graph> {
    let line = line.strip_suffix(b"\n").unwrap_or(line);
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    let Some((&head, payload)) = line.split_first() else {
        return bad("empty input");
    };
    if !(63..=126).contains(&head) {
        return bad(format!("bad header byte {head:#04x}"));
    }
    if head == 126 {
        return bad("orders above 62 are not supported");
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return bad("graph with no vertices");
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if payload.len() < need {
        return bad(format!("truncated payload: expected {need} bytes, found {}", payload.len()));
    }
    if payload.len() > need {
        return bad(format!("{} bytes of trailing garbage", payload.len() - need));
    }
    let mut groups = Vec::with_capacity(need);
    for &b in payload {
        if !(63..=126).contains(&b) {
            return bad(format!("byte {b:#04x} outside the graph6 range"));
        }
        groups.push(b - 63);
    }
    let bit = |pos: usize| groups[pos / 6] >> (5 - pos % 6) & 1 == 1;
    for pos in nbits..need * 6 {
        if bit(pos) {
            return bad("non-zero padding bits");
        }
    }
    let mut rows = vec![0u64; n];
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            pos += 1;
        }
    }
    Graph::from_rows(rows)
}

/// Encodes `g` without a trailing newline.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_GRAPH6_ORDER });
    }
    let mut out = Vec::with_capacity(1 + (n * n).div_ceil(12));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses every non-blank line of a graph6 stream.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(line.trim_end().as_bytes())
            .map_err(|e| Error::Graph6(format!("line {}: {e}", lineno + 1)))?;
        out.push(g);
    }
    Ok(out)
}
