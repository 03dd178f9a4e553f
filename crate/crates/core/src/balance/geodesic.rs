//! Diametral geodesics in NDB graphs with `γ = d + 1`.
//!
//! For a geodesic `x0, x1, …, xd` of length `d`, the vertices `x1..xd` all lie
//! in `W(x1,x0)`, which has `d + 1` elements; the one remaining vertex `u`
//! lies in `D(ℓ-1,ℓ)` around `(x1, x0)` for some `2 ≤ ℓ ≤ d`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{analyze_in, check_edge, connected_metric, w_set_in};
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeodesicProfile {
    /// `x0, x1, …, xd`.
    pub geodesic: Vec<usize>,
    /// Index `ℓ` of the cell `D(ℓ-1,ℓ)` holding `u_extra`.
    pub ell: usize,
    /// The vertex of `W(x1,x0)` off the geodesic tail.
    pub u_extra: usize,
}

impl GeodesicProfile {
    pub fn x(&self, i: usize) -> usize {
        self.geodesic[i]
    }

    pub fn diameter(&self) -> usize {
        self.geodesic.len() - 1
    }
}

fn require_gamma_d_plus_one(g: &Graph) -> Result<DistanceMatrix> {
    let dm = connected_metric(g)?;
    let report = analyze_in(g, &dm);
    if !report.is_gamma_d_plus_one() || dm.diameter() < 2 {
        return Err(Error::NotGammaDPlusOne);
    }
    Ok(dm)
}

/// Profile along the lexicographically smallest diametral geodesic that starts
/// with the edge `x0 x1`.
pub fn geodesic_profile(g: &Graph, x0: usize, x1: usize) -> Result<GeodesicProfile> {
    check_edge(g, x0, x1)?;
    let dm = require_gamma_d_plus_one(g)?;
    let geo = smallest_geodesic(g, &dm, x0, x1)?;
    profile_in(&dm, geo)
}

/// Profile along a caller-chosen geodesic of length `d`.
pub fn profile_along(g: &Graph, geodesic: &[usize]) -> Result<GeodesicProfile> {
    let dm = require_gamma_d_plus_one(g)?;
    let d = dm.diameter();
    if geodesic.len() != d + 1 || geodesic.iter().any(|&x| x >= g.order()) {
        return Err(Error::Precondition(format!("expected {} geodesic vertices", d + 1)));
    }
    let x0 = geodesic[0];
    if geodesic.iter().enumerate().any(|(i, &x)| dm.dist(x0, x) != i)
        || geodesic.windows(2).any(|w| !g.has_edge(w[0], w[1]))
    {
        return Err(Error::Precondition("not a geodesic".into()));
    }
    profile_in(&dm, geodesic.to_vec())
}

fn profile_in(dm: &DistanceMatrix, geodesic: Vec<usize>) -> Result<GeodesicProfile> {
    let d = dm.diameter();
    let (x0, x1) = (geodesic[0], geodesic[1]);
    let w = w_set_in(dm, x1, x0);
    if w.count_ones() as usize != d + 1 {
        return Err(Error::NotGammaDPlusOne);
    }
    let tail = geodesic[1..].iter().fold(0u64, |m, &x| m | 1 << x);
    let rest = w & !tail;
    if rest.count_ones() != 1 {
        return Err(Error::Precondition("geodesic tail does not leave exactly one W-set vertex".into()));
    }
    let u_extra = rest.trailing_zeros() as usize;
    let ell = dm.dist(u_extra, x0);
    debug_assert_eq!(dm.dist(u_extra, x1) + 1, ell);
    Ok(GeodesicProfile { geodesic, ell, u_extra })
}

fn smallest_geodesic(g: &Graph, dm: &DistanceMatrix, x0: usize, x1: usize) -> Result<Vec<usize>> {
    let d = dm.diameter();
    let far = dm.sphere(x0, d);
    let no_path = || Error::NoDiametralGeodesic { x0, x1, diameter: d };
    // y at distance i from x0 extends to length d iff some far vertex is d-i from y.
    let extends = |y: usize, i: usize| far & dm.sphere(y, d - i) != 0;
    if !extends(x1, 1) {
        return Err(no_path());
    }
    let mut path = vec![x0, x1];
    for i in 2..=d {
        let last = *path.last().unwrap();
        let next = bits(g.neighbors(last) & dm.sphere(x0, i)).find(|&y| extends(y, i)).ok_or_else(no_path)?;
        path.push(next);
    }
    Ok(path)
}

/// Every geodesic of length `d` starting with `x0, x1`, in lexicographic order.
pub fn diametral_geodesics(g: &Graph, x0: usize, x1: usize) -> Result<Vec<Vec<usize>>> {
    check_edge(g, x0, x1)?;
    let dm = connected_metric(g)?;
    Ok(geodesics_in(g, &dm, x0, x1))
}

fn geodesics_in(g: &Graph, dm: &DistanceMatrix, x0: usize, x1: usize) -> Vec<Vec<usize>> {
    let d = dm.diameter();
    let mut out = Vec::new();
    if d == 0 || dm.dist(x0, x1) != 1 {
        return out;
    }
    let mut path = vec![x0, x1];
    fn walk(g: &Graph, dm: &DistanceMatrix, d: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = path.len() - 1;
        if i == d {
            out.push(path.clone());
            return;
        }
        let x0 = path[0];
        for y in bits(g.neighbors(path[i]) & dm.sphere(x0, i + 1)) {
            path.push(y);
            walk(g, dm, d, path, out);
            path.pop();
        }
    }
    walk(g, dm, d, &mut path, &mut out);
    out
}

/// Every `ℓ` realised by some diametral geodesic of the graph.
pub fn ell_spectrum(g: &Graph) -> Result<BTreeSet<usize>> {
    let dm = require_gamma_d_plus_one(g)?;
    let mut out = BTreeSet::new();
    for (a, b) in g.edges() {
        for (x0, x1) in [(a, b), (b, a)] {
            for geo in geodesics_in(g, &dm, x0, x1) {
                out.insert(profile_in(&dm, geo)?.ell);
            }
        }
    }
    Ok(out)
}

/// The sets `A`, `B` and `Γ(u) ∩ (D(ℓ,ℓ) ∪ D(ℓ,ℓ-1))` around the edge `(x1, x0)`,
/// together with the constraints an NDB graph with `γ = d + 1` places on them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralWitness {
    pub profile: GeodesicProfile,
    /// `∪_{i=2..d} Γ(x_i) ∩ D(i,i)`.
    pub set_a: u64,
    /// `(Γ(x2) ∩ D(2,1)) ∪ (Γ(xd) ∩ D(d,d-1))`.
    pub set_b: u64,
    /// Present when `ℓ ≥ 3`.
    pub u_cell_neighbors: Option<u64>,
    /// No `x_i` (3 ≤ i ≤ d-1) has a neighbour in `D(i,i-1) ∪ D(i-1,i-1)`.
    pub no_back_edges: bool,
    /// `|Γ(x2) ∩ (D(1,1) ∪ D(2,1))| ≤ 1`.
    pub x2_side_at_most_one: bool,
    /// `|A ∪ B| ≤ 2`.
    pub a_union_b_at_most_two: bool,
    /// When `ℓ ≥ 3`: `|A ∪ B ∪ Γ(u) ∩ (D(ℓ,ℓ) ∪ D(ℓ,ℓ-1))| = 1`. Vacuously true otherwise.
    pub with_u_exactly_one: bool,
}

impl StructuralWitness {
    pub fn holds(&self) -> bool {
        self.no_back_edges && self.x2_side_at_most_one && self.a_union_b_at_most_two && self.with_u_exactly_one
    }
}

pub fn structural_witness(g: &Graph, profile: &GeodesicProfile) -> Result<StructuralWitness> {
    let dm = require_gamma_d_plus_one(g)?;
    let d = dm.diameter();
    if d < 3 {
        return Err(Error::Precondition("structural witness needs diameter at least 3".into()));
    }
    // Recompute the profile so the caller cannot pass a stale one.
    let fresh = profile_along(g, &profile.geodesic)?;
    if &fresh != profile {
        return Err(Error::Precondition("profile does not match the graph".into()));
    }
    Ok(witness_in(g, &dm, fresh))
}

fn witness_in(g: &Graph, dm: &DistanceMatrix, profile: GeodesicProfile) -> StructuralWitness {
    let d = dm.diameter();
    let x = |i: usize| profile.geodesic[i];
    let (x0, x1) = (x(0), x(1));
    // D(i,j) around (x1, x0).
    let cell = |i: usize, j: usize| dm.sphere(x1, i) & dm.sphere(x0, j);
    let nb = |v: usize| g.neighbors(v);

    let set_a = (2..=d).fold(0u64, |m, i| m | (nb(x(i)) & cell(i, i)));
    let set_b = (nb(x(2)) & cell(2, 1)) | (nb(x(d)) & cell(d, d - 1));
    let ell = profile.ell;
    let u_cell_neighbors = (ell >= 3).then(|| nb(profile.u_extra) & (cell(ell, ell) | cell(ell, ell - 1)));

    let no_back_edges = (3..d).all(|i| nb(x(i)) & (cell(i, i - 1) | cell(i - 1, i - 1)) == 0);
    let x2_side_at_most_one = (nb(x(2)) & (cell(1, 1) | cell(2, 1))).count_ones() <= 1;
    let ab = set_a | set_b;
    let a_union_b_at_most_two = ab.count_ones() <= 2;
    let with_u_exactly_one = u_cell_neighbors.is_none_or(|uc| (ab | uc).count_ones() == 1);

    StructuralWitness {
        profile,
        set_a,
        set_b,
        u_cell_neighbors,
        no_back_edges,
        x2_side_at_most_one,
        a_union_b_at_most_two,
        with_u_exactly_one,
    }
}

/// Witnesses for every diametral geodesic of the graph.
pub(crate) fn all_witnesses(g: &Graph, dm: &DistanceMatrix) -> Vec<StructuralWitness> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        for (x0, x1) in [(a, b), (b, a)] {
            for geo in geodesics_in(g, dm, x0, x1) {
                if let Ok(p) = profile_in(dm, geo) {
                    out.push(witness_in(g, dm, p));
                }
            }
        }
    }
    out
}
