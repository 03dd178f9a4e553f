//! Chained structural filters over a stream of graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::balance::{analyze_in, NdbReport};
use crate::canon::{canonical_form, CanonicalForm};
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A census filter. Textual forms: `diameter=D`, `girth>=G`, `all-ecc=E`,
/// `lambda=L`, `db`, `ndb`, `gamma=d+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Predicate {
    Diameter(usize),
    MinGirth(usize),
    AllEccentricities(usize),
    EdgeRegularLambda(usize),
    DistanceBalanced,
    NicelyDistanceBalanced,
    GammaDPlusOne,
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Diameter(d) => write!(f, "diameter={d}"),
            Predicate::MinGirth(g) => write!(f, "girth>={g}"),
            Predicate::AllEccentricities(e) => write!(f, "all-ecc={e}"),
            Predicate::EdgeRegularLambda(l) => write!(f, "lambda={l}"),
            Predicate::DistanceBalanced => f.write_str("db"),
            Predicate::NicelyDistanceBalanced => f.write_str("ndb"),
            Predicate::GammaDPlusOne => f.write_str("gamma=d+1"),
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownPredicate(s.to_string());
        let num = |v: &str| v.trim().parse::<usize>().map_err(|_| unknown());
        let s = s.trim();
        match s {
            "db" => return Ok(Predicate::DistanceBalanced),
            "ndb" => return Ok(Predicate::NicelyDistanceBalanced),
            "gamma=d+1" => return Ok(Predicate::GammaDPlusOne),
            _ => {}
        }
        if let Some(v) = s.strip_prefix("diameter=") {
            Ok(Predicate::Diameter(num(v)?))
        } else if let Some(v) = s.strip_prefix("girth>=") {
            Ok(Predicate::MinGirth(num(v)?))
        } else if let Some(v) = s.strip_prefix("all-ecc=") {
            Ok(Predicate::AllEccentricities(num(v)?))
        } else if let Some(v) = s.strip_prefix("lambda=") {
            Ok(Predicate::EdgeRegularLambda(num(v)?))
        } else {
            Err(unknown())
        }
    }
}

impl Predicate {
    pub fn holds(&self, g: &Graph) -> bool {
        let dm = DistanceMatrix::new(g);
        self.holds_in(g, &dm, &mut None)
    }

    fn holds_in(&self, g: &Graph, dm: &DistanceMatrix, report: &mut Option<NdbReport>) -> bool {
        let mut rep = |g: &Graph| -> Option<NdbReport> {
            if !dm.is_connected() {
                return None;
            }
            Some(report.get_or_insert_with(|| analyze_in(g, dm)).clone())
        };
        match *self {
            Predicate::Diameter(d) => dm.diameter() == d,
            // Forests have infinite girth.
            Predicate::MinGirth(min) => g.girth().is_none_or(|x| x >= min),
            Predicate::AllEccentricities(e) => dm.eccentricities().iter().all(|&x| x == e),
            Predicate::EdgeRegularLambda(l) => {
                g.regularity().is_some() && rep(g).is_some_and(|r| r.edge_regular_lambda == Some(l))
            }
            Predicate::DistanceBalanced => rep(g).is_some_and(|r| r.is_db),
            Predicate::NicelyDistanceBalanced => rep(g).is_some_and(|r| r.is_ndb),
            Predicate::GammaDPlusOne => rep(g).is_some_and(|r| r.is_gamma_d_plus_one()),
        }
    }
}

/// Result of [`filter_census`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusResult {
    pub total: usize,
    /// Survivors after each successive predicate.
    pub chain: Vec<(String, usize)>,
    /// Canonical forms passing every predicate, ascending.
    pub survivors: Vec<CanonicalForm>,
}

impl CensusResult {
    pub fn final_count(&self) -> usize {
        self.survivors.len()
    }
}

/// Applies `predicates` in order and counts what remains after each.
pub fn filter_census<I>(stream: I, predicates: &[Predicate]) -> Result<CensusResult>
where
    I: IntoIterator<Item = Graph>,
{
    let mut total = 0;
    let mut counts = vec![0usize; predicates.len()];
    let mut survivors = Vec::new();
    for g in stream {
        total += 1;
        let dm = DistanceMatrix::new(&g);
        let mut report = None;
        let mut passed_all = true;
        for (i, p) in predicates.iter().enumerate() {
            if !p.holds_in(&g, &dm, &mut report) {
                passed_all = false;
                break;
            }
            counts[i] += 1;
        }
        if passed_all {
            survivors.push(canonical_form(&g)?);
        }
    }
    survivors.sort();
    survivors.dedup();
    let chain = predicates.iter().zip(counts).map(|(p, c)| (p.to_string(), c)).collect();
    Ok(CensusResult { total, chain, survivors })
}
