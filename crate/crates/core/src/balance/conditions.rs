//! Necessary conditions satisfied by every regular NDB graph with `γ = d + 1`.

use serde::{Deserialize, Serialize};

use super::geodesic::all_witnesses;
use super::{analyze_in, profile_in};
use crate::distance::DistanceMatrix;
use crate::graph::{bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub name: String,
    pub passed: bool,
}

/// Outcome of [`necessary_conditions`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Audit {
    /// The graph is not a connected regular NDB graph with `γ = d + 1`.
    NotApplicable(String),
    Evaluated(Vec<ConditionResult>),
}

impl Audit {
    /// True for `NotApplicable` and for an evaluation with no failures.
    pub fn passed(&self) -> bool {
        match self {
            Audit::NotApplicable(_) => true,
            Audit::Evaluated(rs) => rs.iter().all(|r| r.passed),
        }
    }

    pub fn is_applicable(&self) -> bool {
        matches!(self, Audit::Evaluated(_))
    }

    pub fn results(&self) -> &[ConditionResult] {
        match self {
            Audit::NotApplicable(_) => &[],
            Audit::Evaluated(rs) => rs,
        }
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.results().iter().find(|r| r.name == name).map(|r| r.passed)
    }
}

/// Evaluates every condition that applies to the graph's `(k, d)`.
///
/// Out-of-hypothesis inputs (disconnected, irregular, not NDB, `γ ≠ d + 1`)
/// yield [`Audit::NotApplicable`] instead of an error.
pub fn necessary_conditions(g: &Graph) -> Audit {
    let dm = DistanceMatrix::new(g);
    if !dm.is_connected() {
        return Audit::NotApplicable("disconnected".into());
    }
    let Some(k) = g.regularity() else {
        return Audit::NotApplicable("not regular".into());
    };
    let report = analyze_in(g, &dm);
    if !report.is_gamma_d_plus_one() {
        return Audit::NotApplicable("not NDB with gamma = d + 1".into());
    }
    let d = dm.diameter();
    let mut out = Vec::new();
    let mut check = |name: &str, passed: bool| out.push(ConditionResult { name: name.to_string(), passed });

    // Oriented profiles around every edge.
    let profiles: Vec<_> =
        g.edges().into_iter().flat_map(|(a, b)| [profile_in(&dm, a, b), profile_in(&dm, b, a)]).collect();

    check("inner-cells-equal", profiles.iter().all(|p| p.cell_size(1, 2) == p.cell_size(2, 1)));

    if d >= 3 {
        check("valency-in-3-4-5", (3..=5).contains(&k));
        let allowed: &[usize] = match k {
            3 => &[3, 4, 5],
            4 => &[3, 4],
            5 => &[3],
            _ => &[],
        };
        check("diameter-bound-for-valency", allowed.contains(&d));
        check("structural-witness", all_witnesses(g, &dm).iter().all(|w| w.holds()));
    }

    if d == 3 {
        check("all-eccentricities-3", dm.eccentricities().iter().all(|&e| e == 3));
        check(
            "outer-cells-nonempty-equal",
            profiles.iter().all(|p| p.cell_size(2, 3) == p.cell_size(3, 2) && p.cell_size(2, 3) != 0),
        );
        if (3..=5).contains(&k) {
            check("inner-cells-two", profiles.iter().all(|p| p.cell_size(1, 2) == 2 && p.cell_size(2, 1) == 2));
        }
        match k {
            3 => {
                check("triangle-free", report.edge_regular_lambda == Some(0));
                check("no-far-tie-cell", profiles.iter().all(|p| p.cell(3, 3) == 0));
            }
            4 => check("edge-regular-lambda-1", report.edge_regular_lambda == Some(1)),
            5 => {
                check("edge-regular-lambda-2", report.edge_regular_lambda == Some(2));
                check("local-five-cycle", (0..g.order()).all(|x| induces_five_cycle(g, g.neighbors(x))));
            }
            _ => {}
        }
    }
    Audit::Evaluated(out)
}

fn induces_five_cycle(g: &Graph, nbhd: u64) -> bool {
    if nbhd.count_ones() != 5 {
        return false;
    }
    let two_regular = bits(nbhd).all(|v| (g.neighbors(v) & nbhd).count_ones() == 2);
    let first = nbhd.trailing_zeros() as usize;
    // Connected 2-regular on five vertices is C5.
    let mut seen = 1u64 << first;
    let mut frontier = seen;
    while frontier != 0 {
        let next = bits(frontier).fold(0, |m, v| m | g.neighbors(v)) & nbhd & !seen;
        seen |= next;
        frontier = next;
    }
    two_regular && seen == nbhd
}
