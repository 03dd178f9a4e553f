//! W-sets, D-cell partitions and the distance-balance deciders.
//!
//! For an edge `uv`, `W(u,v)` is the set of vertices strictly closer to `u`
//! than to `v`, and `D(i,j)` is the set of vertices at distance `i` from `u`
//! and `j` from `v`. A graph is distance-balanced (DB) when `|W(u,v)| = |W(v,u)|`
//! for every edge, and nicely distance-balanced (NDB) when that common value
//! `γ` is the same for every edge.

mod conditions;
mod geodesic;

use serde::{Deserialize, Serialize};

pub use conditions::{necessary_conditions, Audit, ConditionResult};
pub use geodesic::{
    diametral_geodesics, ell_spectrum, geodesic_profile, profile_along, structural_witness, GeodesicProfile,
    StructuralWitness,
};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// `x ∈ W(u,v)` iff `d(x,u) < d(x,v)`, computed straight from the definition.
pub fn w_set(g: &Graph, u: usize, v: usize) -> Result<u64> {
    let dm = connected_metric(g)?;
    check_edge(g, u, v)?;
    Ok(w_set_in(&dm, u, v))
}

pub(crate) fn w_set_in(dm: &DistanceMatrix, u: usize, v: usize) -> u64 {
    let (du, dv) = (dm.row(u), dm.row(v));
    (0..dm.order()).filter(|&x| du[x] < dv[x]).fold(0, |m, x| m | 1 << x)
}

fn connected_metric(g: &Graph) -> Result<DistanceMatrix> {
    let dm = DistanceMatrix::new(g);
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(dm)
}

fn check_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    for x in [u, v] {
        if x >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.order() });
        }
    }
    if !g.has_edge(u, v) {
        return Err(Error::NotAdjacent(u, v));
    }
    Ok(())
}

/// One cell `D(i,j)` of the partition around an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    /// Distance to the first endpoint.
    pub i: usize,
    /// Distance to the second endpoint.
    pub j: usize,
    pub members: u64,
}

impl Cell {
    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }
}

/// The D-cell partition of the vertex set around the edge `uv`.
///
/// `cells` holds every key `(i-1,i)`, `(i,i)`, `(i,i-1)` for `1 ≤ i ≤ d`,
/// empty or not; `D(0,1) = {u}` and `D(1,0) = {v}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBalanceProfile {
    pub u: usize,
    pub v: usize,
    pub diameter: usize,
    pub w_uv_size: usize,
    pub w_vu_size: usize,
    /// Vertices equidistant from `u` and `v`.
    pub tie_count: usize,
    pub cells: Vec<Cell>,
}

impl EdgeBalanceProfile {
    /// Members of `D(i,j)`; empty for keys outside the partition.
    pub fn cell(&self, i: usize, j: usize) -> u64 {
        self.cells.iter().find(|c| c.i == i && c.j == j).map_or(0, |c| c.members)
    }

    pub fn cell_size(&self, i: usize, j: usize) -> usize {
        self.cell(i, j).count_ones() as usize
    }

    /// `Σ_{i=1..d} |D(i-1,i)|`, the size of `W(u,v)` read off the cells.
    pub fn near_u_sum(&self) -> usize {
        (1..=self.diameter).map(|i| self.cell_size(i - 1, i)).sum()
    }

    /// `Σ_{i=1..d} |D(i,i-1)|`, the size of `W(v,u)` read off the cells.
    pub fn near_v_sum(&self) -> usize {
        (1..=self.diameter).map(|i| self.cell_size(i, i - 1)).sum()
    }

    /// Both W-sets have exactly `d + 1` vertices.
    pub fn is_balanced(&self) -> bool {
        self.w_uv_size == self.diameter + 1 && self.w_vu_size == self.diameter + 1
    }

    pub fn summary(&self) -> EdgeSummary {
        EdgeSummary {
            u: self.u,
            v: self.v,
            w_uv: self.w_uv_size,
            w_vu: self.w_vu_size,
            ties: self.tie_count,
            balanced: self.is_balanced(),
        }
    }
}

pub fn d_cell_partition(g: &Graph, u: usize, v: usize) -> Result<EdgeBalanceProfile> {
    let dm = connected_metric(g)?;
    check_edge(g, u, v)?;
    Ok(profile_in(&dm, u, v))
}

pub(crate) fn profile_in(dm: &DistanceMatrix, u: usize, v: usize) -> EdgeBalanceProfile {
    let d = dm.diameter();
    let mut cells = Vec::with_capacity(3 * d);
    for i in 1..=d {
        for (a, b) in [(i - 1, i), (i, i), (i, i - 1)] {
            cells.push(Cell { i: a, j: b, members: dm.sphere(u, a) & dm.sphere(v, b) });
        }
    }
    let w_uv_size = w_set_in(dm, u, v).count_ones() as usize;
    let w_vu_size = w_set_in(dm, v, u).count_ones() as usize;
    let tie_count = (0..dm.order()).filter(|&x| dm.dist(x, u) == dm.dist(x, v)).count();
    EdgeBalanceProfile { u, v, diameter: d, w_uv_size, w_vu_size, tie_count, cells }
}

/// Neighbourhood containments between cells and prefix non-emptiness of the
/// outer cell chains, checked for every vertex around the edge `uv`.
///
/// These hold in every connected graph; `false` means a distance bug.
pub fn check_cell_adjacency(g: &Graph, u: usize, v: usize) -> Result<bool> {
    let dm = connected_metric(g)?;
    check_edge(g, u, v)?;
    Ok(cell_adjacency_in(g, &dm, u, v))
}

pub(crate) fn cell_adjacency_in(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> bool {
    let key = |x: usize| (dm.dist(x, u) as isize, dm.dist(x, v) as isize);
    for w in 0..g.order() {
        let (a, b) = key(w);
        if (a - b).abs() > 1 {
            return false;
        }
        let allowed: Vec<(isize, isize)> = if a == b {
            let i = a;
            vec![(i - 1, i - 1), (i - 1, i), (i, i - 1), (i, i), (i, i + 1), (i + 1, i), (i + 1, i + 1)]
        } else if a == b + 1 {
            let i = a;
            vec![(i - 1, i - 2), (i - 1, i - 1), (i - 1, i), (i, i - 1), (i, i), (i + 1, i)]
        } else {
            let i = b;
            vec![(i - 2, i - 1), (i - 1, i - 1), (i - 1, i), (i, i - 1), (i, i), (i, i + 1)]
        };
        if bits(g.neighbors(w)).any(|x| !allowed.contains(&key(x))) {
            return false;
        }
    }
    // A non-empty outer cell forces every inner cell of the same chain.
    let d = dm.diameter();
    for (near, far) in [(u, v), (v, u)] {
        let mut seen_empty = false;
        for j in 0..d {
            let nonempty = dm.sphere(near, j) & dm.sphere(far, j + 1) != 0;
            if nonempty && seen_empty {
                return false;
            }
            seen_empty |= !nonempty;
        }
    }
    true
}

/// Per-edge line of an [`NdbReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSummary {
    pub u: usize,
    pub v: usize,
    pub w_uv: usize,
    pub w_vu: usize,
    pub ties: usize,
    pub balanced: bool,
}

/// Graph-level distance-balance verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NdbReport {
    pub order: usize,
    pub edges: usize,
    pub connected: bool,
    pub valency: Option<usize>,
    pub diameter: usize,
    pub is_db: bool,
    pub is_ndb: bool,
    pub gamma: Option<usize>,
    pub edge_regular_lambda: Option<usize>,
    pub self_median: bool,
    pub per_edge: Vec<EdgeSummary>,
}

impl NdbReport {
    /// NDB with `γ = d + 1`.
    pub fn is_gamma_d_plus_one(&self) -> bool {
        self.is_ndb && self.gamma == Some(self.diameter + 1)
    }

    /// NDB with `γ = d`.
    pub fn is_gamma_d(&self) -> bool {
        self.is_ndb && self.gamma == Some(self.diameter)
    }
}

/// Full distance-balance analysis of a connected graph.
///
/// `K1` has no edges: it is reported DB and NDB vacuously, with no `γ`.
pub fn analyze(g: &Graph) -> Result<NdbReport> {
    let dm = connected_metric(g)?;
    Ok(analyze_in(g, &dm))
}

pub(crate) fn analyze_in(g: &Graph, dm: &DistanceMatrix) -> NdbReport {
    let per_edge: Vec<EdgeSummary> = g.edges().into_iter().map(|(u, v)| edge_summary(dm, u, v)).collect();
    let is_db = per_edge.iter().all(|e| e.w_uv == e.w_vu);
    let common = per_edge.first().map(|e| e.w_uv);
    let is_ndb = is_db && per_edge.iter().all(|e| Some(e.w_uv) == common);
    let valency = g.regularity();
    let transmissions: Vec<usize> = (0..g.order()).map(|x| dm.transmission(x)).collect();
    NdbReport {
        order: g.order(),
        edges: per_edge.len(),
        connected: true,
        valency,
        diameter: dm.diameter(),
        is_db,
        is_ndb,
        gamma: if is_ndb { common } else { None },
        edge_regular_lambda: valency.and_then(|_| lambda_in(g)),
        self_median: transmissions.windows(2).all(|w| w[0] == w[1]),
        per_edge,
    }
}

fn edge_summary(dm: &DistanceMatrix, u: usize, v: usize) -> EdgeSummary {
    let (du, dv) = (dm.row(u), dm.row(v));
    let (mut w_uv, mut w_vu, mut ties) = (0, 0, 0);
    for x in 0..dm.order() {
        match du[x].cmp(&dv[x]) {
            std::cmp::Ordering::Less => w_uv += 1,
            std::cmp::Ordering::Greater => w_vu += 1,
            std::cmp::Ordering::Equal => ties += 1,
        }
    }
    let d = dm.diameter();
    EdgeSummary { u, v, w_uv, w_vu, ties, balanced: w_uv == d + 1 && w_vu == d + 1 }
}

/// `γ` recomputed from the cell sums `Σ|D(i,i-1)|` and `Σ|D(i-1,i)|` of every
/// edge rather than from the W-sets. `None` unless the graph is NDB.
pub fn gamma_from_cells(g: &Graph) -> Result<Option<usize>> {
    let dm = connected_metric(g)?;
    let mut gamma = None;
    for (u, v) in g.edges() {
        let p = profile_in(&dm, u, v);
        let (a, b) = (p.near_u_sum(), p.near_v_sum());
        if a != b || gamma.is_some_and(|x| x != a) {
            return Ok(None);
        }
        gamma = Some(a);
    }
    Ok(gamma)
}

/// `λ` of an edge-regular graph: the common number of common neighbours of
/// adjacent vertices. `None` if that number varies or there are no edges.
pub fn edge_regular_lambda(g: &Graph) -> Result<Option<usize>> {
    if g.regularity().is_none() {
        return Err(Error::NotRegular);
    }
    Ok(lambda_in(g))
}

fn lambda_in(g: &Graph) -> Option<usize> {
    let mut lambda = None;
    for (u, v) in g.edges() {
        let c = (g.neighbors(u) & g.neighbors(v)).count_ones() as usize;
        if lambda.is_some_and(|l| l != c) {
            return None;
        }
        lambda = Some(c);
    }
    lambda
}

/// Distance sums per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transmissions {
    pub per_vertex: Vec<usize>,
    /// All transmissions coincide.
    pub self_median: bool,
}

pub fn transmissions(g: &Graph) -> Result<Transmissions> {
    let dm = connected_metric(g)?;
    let per_vertex: Vec<usize> = (0..g.order()).map(|x| dm.transmission(x)).collect();
    let self_median = per_vertex.windows(2).all(|w| w[0] == w[1]);
    Ok(Transmissions { per_vertex, self_median })
}
