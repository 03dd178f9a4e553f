//! Hop distances, eccentricities and distance spheres.

use serde::{Deserialize, Serialize};

use crate::graph::{bits, Graph, MAX_ORDER};

/// Distance marker for vertex pairs in different components.
///
/// Strictly larger than any distance a graph of order [`MAX_ORDER`] can realise.
pub const UNREACHABLE: usize = MAX_ORDER;

/// Shortest-path hop counts from `src`, with [`UNREACHABLE`] where no path exists.
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<usize> {
    assert!(src < g.order(), "source vertex {src} out of range");
    let mut dist = vec![UNREACHABLE; g.order()];
    for (depth, layer) in bfs_layers(g, src).into_iter().enumerate() {
        for v in bits(layer) {
            dist[v] = depth;
        }
    }
    dist
}

/// The spheres `Γ_0(src), Γ_1(src), …` as bitmasks, up to the eccentricity of `src`.
pub fn bfs_layers(g: &Graph, src: usize) -> Vec<u64> {
    let mut seen = 1u64 << src;
    let mut layers = vec![seen];
    loop {
        let mut next = 0;
        for u in bits(*layers.last().unwrap()) {
            next |= g.neighbors(u);
        }
        next &= !seen;
        if next == 0 {
            return layers;
        }
        seen |= next;
        layers.push(next);
    }
}

/// All-pairs distances of a graph together with eccentricities and diameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<usize>,
    ecc: Vec<usize>,
    diameter: usize,
    // spheres[u][i] = Γ_i(u)
    spheres: Vec<Vec<u64>>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut dist = vec![UNREACHABLE; n * n];
        let mut ecc = vec![0; n];
        let mut spheres = Vec::with_capacity(n);
        let mut connected = true;
        for u in 0..n {
            let layers = bfs_layers(g, u);
            let reached: u64 = layers.iter().fold(0, |a, l| a | l);
            if reached != g.vertex_mask() {
                connected = false;
                ecc[u] = UNREACHABLE;
            } else {
                ecc[u] = layers.len() - 1;
            }
            for (i, &layer) in layers.iter().enumerate() {
                for v in bits(layer) {
                    dist[u * n + v] = i;
                }
            }
            spheres.push(layers);
        }
        let diameter = if connected { ecc.iter().copied().max().unwrap_or(0) } else { UNREACHABLE };
        DistanceMatrix { n, dist, ecc, diameter, spheres }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Eccentricity of each vertex; [`UNREACHABLE`] when the graph is disconnected.
    pub fn eccentricities(&self) -> &[usize] {
        &self.ecc
    }

    /// Largest eccentricity, or [`UNREACHABLE`] for a disconnected graph.
    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn is_connected(&self) -> bool {
        self.diameter != UNREACHABLE
    }

    /// `Γ_i(u)` as a bitmask (empty beyond the reach of `u`).
    #[inline]
    pub fn sphere(&self, u: usize, i: usize) -> u64 {
        self.spheres[u].get(i).copied().unwrap_or(0)
    }

    /// Sum of distances from `u` to every vertex.
    pub fn transmission(&self, u: usize) -> usize {
        self.row(u).iter().sum()
    }
}
