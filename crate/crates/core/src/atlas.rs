//! Named graphs and graph operators.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return invalid(format!("cycle needs at least 3 vertices, got {n}"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return invalid("complete graph needs at least 1 vertex");
    }
    Ok(Graph::empty(n)?.complement())
}

/// Complete multipartite graph; part `p` occupies a contiguous label range.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return invalid("every part needs at least one vertex");
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// `Q_m`: vertices are `m`-bit strings, adjacent at Hamming distance 1.
pub fn hypercube(m: usize) -> Result<Graph> {
    if !(1..=4).contains(&m) {
        return invalid(format!("hypercube dimension must be 1..=4, got {m}"));
    }
    let n = 1 << m;
    let mut edges = Vec::new();
    for u in 0..n {
        for b in 0..m {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Cycle `0..n` with the antipodal chords `i ~ i + n/2`.
pub fn mobius_ladder(n: usize) -> Result<Graph> {
    if n < 6 || n % 2 == 1 {
        return invalid(format!("Möbius ladder needs an even order of at least 6, got {n}"));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n / 2).map(|i| (i, i + n / 2)));
    Graph::new(n, &edges)
}

/// `C_n □ K_2`: outer cycle `0..n`, inner cycle `n..2n`, spokes `i ~ n + i`.
pub fn prism(n: usize) -> Result<Graph> {
    if n < 3 {
        return invalid(format!("prism needs a cycle of length at least 3, got {n}"));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        edges.push((i, j));
        edges.push((n + i, n + j));
        edges.push((i, n + i));
    }
    Graph::new(2 * n, &edges)
}

/// Paley graph on GF(9) = GF(3)[x]/(x²+1); element `a + bx` is vertex `a + 3b`.
pub fn paley9() -> Graph {
    let mul = |p: usize, q: usize| {
        let (a, b, c, d) = (p % 3, p / 3, q % 3, q / 3);
        // (a + bx)(c + dx) = (ac - bd) + (ad + bc)x
        let re = (a * c + 2 * b * d) % 3;
        let im = (a * d + b * c) % 3;
        re + 3 * im
    };
    let sub = |p: usize, q: usize| {
        let re = (p % 3 + 3 - q % 3) % 3;
        let im = (p / 3 + 3 - q / 3) % 3;
        re + 3 * im
    };
    let squares: Vec<usize> = (1..9).map(|z| mul(z, z)).collect();
    let mut edges = Vec::new();
    for u in 0..9 {
        for v in u + 1..9 {
            if squares.contains(&sub(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(9, &edges).expect("valid construction")
}

/// Petersen graph as the Kneser graph K(5,2): 2-subsets of {0..4} in
/// lexicographic order, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<u8> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (1u8 << a) | (1u8 << b))).collect();
    let mut edges = Vec::new();
    for (i, &p) in pairs.iter().enumerate() {
        for (j, &q) in pairs.iter().enumerate().skip(i + 1) {
            if p & q == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(10, &edges).expect("valid construction")
}

/// Icosahedron: apex 0, upper pentagon 1..=5, lower pentagon 6..=10, apex 11.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
        let (lo, lo_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, up), (up, up_next), (lo, lo_next), (lo, 11), (up, lo), (up_next, lo)]);
    }
    Graph::new(12, &edges).expect("valid construction")
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in sorted order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let es = g.edges();
    if es.is_empty() {
        return Err(Error::Edgeless);
    }
    if es.len() > MAX_ORDER {
        return Err(Error::OrderTooLarge { n: es.len(), max: MAX_ORDER });
    }
    let mut edges = Vec::new();
    for (i, &(a, b)) in es.iter().enumerate() {
        for (j, &(c, d)) in es.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(es.len(), &edges)
}

/// Valency, diameter and `γ` a named graph is known to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub k: usize,
    pub d: usize,
    pub gamma: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasEntry {
    pub name: String,
    pub graph: Graph,
    pub expected: Option<Expected>,
}

fn entry(name: &str, graph: Graph, k: usize, d: usize) -> AtlasEntry {
    AtlasEntry { name: name.to_string(), graph, expected: Some(Expected { k, d, gamma: d + 1 }) }
}

/// The regular NDB graphs with `γ = d + 1`, with `K_{t×3}` for each `t` in `ts`.
pub fn theorem_family(ts: RangeInclusive<usize>) -> Vec<AtlasEntry> {
    let mut out = vec![
        entry("petersen", petersen(), 3, 2),
        entry("petersen-complement", petersen().complement(), 6, 2),
    ];
    for t in ts {
        if t < 2 || 3 * t > MAX_ORDER {
            continue;
        }
        let g = complete_multipartite(&vec![3; t]).expect("valid parts");
        out.push(entry(&format!("k{t}x3"), g, 3 * (t - 1), 2));
    }
    let q3 = hypercube(3).expect("valid dimension");
    out.push(entry("mobius8", mobius_ladder(8).expect("valid order"), 3, 2));
    out.push(entry("paley9", paley9(), 4, 2));
    out.push(entry("lq3", line_graph(&q3).expect("has edges"), 4, 3));
    out.push(entry("q3", q3, 3, 3));
    out.push(entry("icosahedron", icosahedron(), 5, 3));
    out
}

/// Names accepted by [`by_name`] that need no size parameter.
pub const FIXED_NAMES: &[&str] =
    &["petersen", "petersen-complement", "mobius8", "paley9", "q3", "lq3", "lmobius8", "icosahedron"];

/// Parameterised name patterns accepted by [`by_name`].
pub const FAMILY_PATTERNS: &[&str] =
    &["cycle-N", "complete-N", "prism-N", "mobius-N", "q-M (1..=4)", "kTxS (T parts of size S)"];

/// Every fixed name plus the theorem family members for `t = 2..=4`.
pub fn list() -> Vec<String> {
    let mut names: Vec<String> = FIXED_NAMES.iter().map(|s| s.to_string()).collect();
    for t in 2..=4 {
        names.push(format!("k{t}x3"));
    }
    names.sort();
    names
}

/// Resolves a stable atlas identifier.
pub fn by_name(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownAtlasName(name.to_string());
    let num = |rest: &str| rest.parse::<usize>().map_err(|_| unknown());
    match name {
        "petersen" => return Ok(petersen()),
        "petersen-complement" => return Ok(petersen().complement()),
        "mobius8" => return mobius_ladder(8),
        "paley9" => return Ok(paley9()),
        "q3" => return hypercube(3),
        "lq3" => return line_graph(&hypercube(3)?),
        "lmobius8" => return line_graph(&mobius_ladder(8)?),
        "icosahedron" => return Ok(icosahedron()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("cycle-") {
        return cycle(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix("complete-") {
        return complete(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix("prism-") {
        return prism(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix("mobius-") {
        return mobius_ladder(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix("q-") {
        return hypercube(num(rest)?);
    }
    if let Some((t, s)) = name.strip_prefix('k').and_then(|r| r.split_once('x')) {
        let (t, s) = (num(t)?, num(s)?);
        if t == 0 || t * s > MAX_ORDER {
            return Err(unknown());
        }
        return complete_multipartite(&vec![s; t]);
    }
    Err(unknown())
}
