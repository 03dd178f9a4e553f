//! Test-only oracles that share no code with the library internals.
#![allow(dead_code)]

use ndb::graph::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected(n: usize, extra: f64, rng: &mut StdRng) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push((order[rng.gen_range(0..i)], order[i]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random k-regular graph: a circulant start mixed by double-edge swaps.
/// `None` if `n * k` is odd or `k >= n`.
pub fn random_regular(n: usize, k: usize, rng: &mut StdRng) -> Option<Graph> {
    if n * k % 2 == 1 || k >= n {
        return None;
    }
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        let mut join = |j: usize| {
            adj[i][j] = true;
            adj[j][i] = true;
        };
        for s in 1..=k / 2 {
            join((i + s) % n);
        }
        if k % 2 == 1 {
            join((i + n / 2) % n);
        }
    }
    let mut edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]).collect();
    for _ in 0..20 * edges.len() {
        let (i, j) = (rng.gen_range(0..edges.len()), rng.gen_range(0..edges.len()));
        let ((a, b), (mut c, mut d)) = (edges[i], edges[j]);
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut c, &mut d);
        }
        // ab, cd -> ac, bd
        if a == c || b == d || a == d || b == c || adj[a][c] || adj[b][d] {
            continue;
        }
        for (x, y, on) in [(a, b, false), (c, d, false), (a, c, true), (b, d, true)] {
            adj[x][y] = on;
            adj[y][x] = on;
        }
        edges[i] = (a.min(c), a.max(c));
        edges[j] = (b.min(d), b.max(d));
    }
    Some(Graph::new(n, &edges).unwrap())
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = Some(1);
            }
        }
    }
    for m in 0..n {
        for u in 0..n {
            for v in 0..n {
                if let (Some(a), Some(b)) = (d[u][m], d[m][v]) {
                    if d[u][v].is_none_or(|c| a + b < c) {
                        d[u][v] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.order()).map(|u| (0..g.order()).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// Tries every bijection, extending partial maps only while they preserve adjacency.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (aa, bb) = (adjacency(a), adjacency(b));
    fn extend(i: usize, map: &mut Vec<usize>, used: &mut Vec<bool>, aa: &[Vec<bool>], bb: &[Vec<bool>]) -> bool {
        let n = aa.len();
        if i == n {
            return true;
        }
        for t in 0..n {
            if used[t] || (0..i).any(|j| aa[i][j] != bb[t][map[j]]) {
                continue;
            }
            used[t] = true;
            map.push(t);
            if extend(i + 1, map, used, aa, bb) {
                return true;
            }
            map.pop();
            used[t] = false;
        }
        false
    }
    extend(0, &mut Vec::new(), &mut vec![false; n], &aa, &bb)
}

/// Every labelled k-regular graph on n vertices, by plain backtracking over
/// vertex pairs.
pub fn labelled_regular(n: usize, k: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut deg = vec![0; n];
    let mut chosen = Vec::new();
    fn walk(
        i: usize,
        pairs: &[(usize, usize)],
        k: usize,
        n: usize,
        deg: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Graph>,
    ) {
        if i == pairs.len() {
            if deg.iter().all(|&d| d == k) {
                out.push(Graph::new(n, chosen).unwrap());
            }
            return;
        }
        let (u, v) = pairs[i];
        let last_for_u = v == n - 1;
        if deg[u] < k && deg[v] < k {
            deg[u] += 1;
            deg[v] += 1;
            chosen.push((u, v));
            if !last_for_u || deg[u] == k {
                walk(i + 1, pairs, k, n, deg, chosen, out);
            }
            chosen.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        if !last_for_u || deg[u] == k {
            walk(i + 1, pairs, k, n, deg, chosen, out);
        }
    }
    walk(0, &pairs, k, n, &mut deg, &mut chosen, &mut out);
    out
}

/// Isomorphism classes of `graphs`, one representative each, by pairwise
/// brute-force comparison within degree-sequence-and-triangle buckets.
pub fn brute_force_classes(graphs: &[Graph]) -> Vec<Graph> {
    let key = |g: &Graph| {
        let mut degs: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        degs.sort();
        let tri: usize = g.edges().iter().map(|&(u, v)| (g.neighbors(u) & g.neighbors(v)).count_ones() as usize).sum();
        (degs, tri)
    };
    let mut reps: Vec<(_, Graph)> = Vec::new();
    for g in graphs {
        let kg = key(g);
        if !reps.iter().any(|(k, r)| *k == kg && brute_force_isomorphic(r, g)) {
            reps.push((kg, g.clone()));
        }
    }
    reps.into_iter().map(|(_, g)| g).collect()
}
