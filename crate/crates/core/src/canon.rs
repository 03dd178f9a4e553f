//! Canonical labelling by colour refinement and individualisation.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle bitstring (graph6 column order: `x01, x02, x12, x03, …`)
//! over the leaves of an individualisation-refinement search tree. Refinement
//! and cell selection depend only on the ordered partition, so the set of leaf
//! graphs, and therefore the minimum, is a relabelling invariant. Subtrees are
//! skipped when an automorphism already found maps them onto an explored
//! sibling, or when their fixed prefix already exceeds the best leaf.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest order accepted by [`canonical_form`]; the bitstring fits one `u128`.
pub const MAX_CANON_ORDER: usize = 16;

/// Relabelling-invariant representative of an isomorphism class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Upper-triangle bitstring, first bit (`x01`) most significant.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The canonically labelled graph this form encodes.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = n * (n - 1) / 2;
        let mut rows = vec![0u64; n];
        let mut pos = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - pos) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                pos += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Hex rendering used in reports and certificates: `n:bits`.
    pub fn to_hex(&self) -> String {
        format!("{}:{:x}", self.n, self.bits)
    }

    /// Inverse of [`CanonicalForm::to_hex`]. Only checks the encoding, not minimality.
    pub fn from_hex(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("bad canonical form `{s}`"));
        let (n, hex) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        let bits = u128::from_str_radix(hex, 16).map_err(|_| bad())?;
        if n == 0 || n > MAX_CANON_ORDER || (n < MAX_CANON_ORDER && bits >> (n * (n - 1) / 2) != 0) {
            return Err(bad());
        }
        Ok(CanonicalForm { n: n as u8, bits })
    }
}

/// Canonical form of `g`, which must have at most [`MAX_CANON_ORDER`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form together with the labelling realising it: vertex `v` of `g`
/// becomes vertex `labeling[v]` of `form.to_graph()`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_CANON_ORDER });
    }
    let mut search = Search::new(g);
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    search.descend(cells);
    let order = search.best_order;
    let mut labeling = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        labeling[v] = label;
    }
    Ok((CanonicalForm { n: n as u8, bits: search.best_bits }, labeling))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        // Still enforce the order bound so misuse is reported consistently.
        for g in [a, b] {
            if g.order() > MAX_CANON_ORDER {
                return Err(Error::OrderTooLarge { n: g.order(), max: MAX_CANON_ORDER });
            }
        }
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Refines an ordered partition (cells as bitmasks) to the coarsest equitable
/// partition finer than it. Each cell splits by the vector of neighbour counts
/// into every cell, pieces ordered by that vector.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let n = g.order();
    debug_assert!(n <= MAX_CANON_ORDER);
    let mut sig = [0u128; MAX_CANON_ORDER];
    loop {
        let ncells = cells.len();
        for v in 0..n {
            sig[v] = signature(g.neighbors(v), cells);
        }
        let mut next = Vec::with_capacity(n);
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                next.push(cell);
                continue;
            }
            let mut members: Vec<usize> = bits(cell).collect();
            members.sort_by_key(|&v| sig[v]);
            let mut piece = 0u64;
            let mut last = sig[members[0]];
            for v in members {
                if sig[v] != last {
                    next.push(piece);
                    piece = 0;
                    last = sig[v];
                }
                piece |= 1 << v;
            }
            next.push(piece);
        }
        let done = next.len() == ncells;
        *cells = next;
        if done {
            return;
        }
    }
}

#[inline]
fn signature(row: u64, cells: &[u64]) -> u128 {
    // Five bits per cell, first cell most significant; at most 16 vertices so
    // at most 16 cells and counts <= 15.
    let mut s = 0u128;
    for &c in cells {
        s = s << 5 | (row & c).count_ones() as u128;
    }
    s
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: usize,
    best_bits: u128,
    best_order: Vec<usize>,
    have_best: bool,
    // Automorphisms found so far, as vertex maps.
    automorphisms: Vec<Vec<u8>>,
    fixed: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Search {
            g,
            n,
            total_bits: n * (n - 1) / 2,
            best_bits: 0,
            best_order: Vec::new(),
            have_best: false,
            automorphisms: Vec::new(),
            fixed: Vec::new(),
        }
    }

    /// Bits of the relabelled graph restricted to the first `m` labels.
    fn prefix_bits(&self, order: &[usize]) -> u128 {
        let mut b = 0u128;
        for j in 1..order.len() {
            let row = self.g.neighbors(order[j]);
            for &oi in &order[..j] {
                b = b << 1 | (row >> oi & 1) as u128;
            }
        }
        b
    }

    /// Vertices of the leading singleton cells, in cell order.
    fn singleton_prefix(cells: &[u64]) -> Vec<usize> {
        cells
            .iter()
            .take_while(|c| *c & (*c - 1) == 0)
            .map(|c| c.trailing_zeros() as usize)
            .collect()
    }

    fn descend(&mut self, cells: Vec<u64>) {
        let prefix = Self::singleton_prefix(&cells);
        if self.have_best && prefix.len() >= 2 {
            let m = prefix.len();
            let pbits = m * (m - 1) / 2;
            let mine = self.prefix_bits(&prefix);
            let theirs = self.best_bits >> (self.total_bits - pbits);
            if mine > theirs {
                return;
            }
        }
        if prefix.len() == self.n {
            self.leaf(prefix);
            return;
        }
        let target_idx = cells.iter().position(|c| c & (c - 1) != 0).unwrap();
        let target = cells[target_idx];
        let mut tried: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !tried.is_empty() && self.same_orbit_as_tried(v, &tried) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            refine(self.g, &mut child);
            self.fixed.push(v);
            self.descend(child);
            self.fixed.pop();
        }
    }

    /// Whether `v` lies in the orbit of an already explored sibling under the
    /// known automorphisms that fix the current individualised vertices.
    fn same_orbit_as_tried(&self, v: usize, tried: &[usize]) -> bool {
        let mut parent: [u8; 64] = [0; 64];
        for (i, p) in parent.iter_mut().enumerate().take(self.n) {
            *p = i as u8;
        }
        fn find(parent: &mut [u8; 64], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut any = false;
        for aut in &self.automorphisms {
            if self.fixed.iter().all(|&f| aut[f] as usize == f) {
                any = true;
                for x in 0..self.n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, aut[x] as usize));
                    if a != b {
                        parent[a] = b as u8;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let b = self.prefix_bits(&order);
        if !self.have_best || b < self.best_bits {
            self.best_bits = b;
            self.best_order = order;
            self.have_best = true;
        } else if b == self.best_bits {
            // Both orders produce the same labelled graph: their composition
            // is an automorphism mapping this leaf's vertices onto the best's.
            let mut aut = vec![0u8; self.n];
            for (label, &v) in order.iter().enumerate() {
                aut[v] = self.best_order[label] as u8;
            }
            if aut.iter().enumerate().any(|(i, &a)| a as usize != i) {
                self.automorphisms.push(aut);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn c4_relabelled_is_equal() {
        let a = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = Graph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn k4_differs_from_c4() {
        let k4 = Graph::empty(4).unwrap().complement();
        assert_ne!(canonical_form(&k4).unwrap(), canonical_form(&cycle(4)).unwrap());
    }

    #[test]
    fn complete_graphs_are_fast() {
        let k16 = Graph::empty(16).unwrap().complement();
        let f = canonical_form(&k16).unwrap();
        assert_eq!(f.bits().count_ones(), 120);
    }

    #[test]
    fn labeling_realises_form() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (2, 5)]).unwrap();
        let (form, lab) = canonical_labeling(&g).unwrap();
        assert_eq!(g.relabel(&lab).unwrap(), form.to_graph());
    }

    #[test]
    fn order_bound() {
        let g = Graph::empty(17).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::OrderTooLarge { .. })));
        assert!(is_isomorphic(&g, &Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn c5_self_complementary() {
        assert!(is_isomorphic(&cycle(5), &cycle(5).complement()).unwrap());
    }
}
