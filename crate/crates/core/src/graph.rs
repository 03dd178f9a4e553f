//! Simple undirected graphs stored as adjacency bitrows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold: one `u64` word per adjacency row.
pub const MAX_ORDER: usize = 64;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Row `u` of the adjacency has bit `v` set iff `u ~ v`. Rows are symmetric
/// and irreflexive; every constructor upholds this.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { n, rows })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// Builds a graph from raw rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        let mask = full_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange { vertex: 63 - (row & !mask).leading_zeros() as usize, n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::Loop(u));
            }
            for v in bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    // Callers guarantee the invariants (used on hot paths in enumeration).
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Self::from_rows(rows.clone()).is_ok());
        Graph { n: rows.len(), rows }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Neighbourhood of `u` as a bitmask.
    #[inline]
    pub fn neighbors(&self, u: usize) -> u64 {
        self.rows[u]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.rows[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Vertex set `0..n` as a bitmask.
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// The common valency if every vertex has the same degree.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == k).then_some(k)
    }

    /// Mask of the connected component containing `src`.
    pub fn component_of(&self, src: usize) -> u64 {
        let mut seen = 1u64 << src;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.rows[u];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    pub fn component_count(&self) -> usize {
        let mut left = self.vertex_mask();
        let mut count = 0;
        while left != 0 {
            left &= !self.component_of(left.trailing_zeros() as usize);
            count += 1;
        }
        count
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        // BFS from every vertex; a non-tree edge met at depth `d` closes a
        // cycle of length 2d+1 (same layer) or 2d+2 (next layer).
        let n = self.n;
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = Vec::with_capacity(n);
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            queue.clear();
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for w in bits(self.rows[u]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let rows = (0..self.n).map(|u| !self.rows[u] & mask & !(1 << u)).collect();
        Graph { n: self.n, rows }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n;
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::NotAPermutation);
            }
            seen |= 1 << p;
        }
        if perm.len() != n {
            return Err(Error::NotAPermutation);
        }
        let mut rows = vec![0u64; n];
        for u in 0..n {
            for v in bits(self.rows[u]) {
                rows[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Graph { n, rows })
    }

    /// Subgraph induced on the vertices of `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Result<Graph> {
        let verts: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut edges = Vec::new();
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(verts.len(), &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bit positions of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
