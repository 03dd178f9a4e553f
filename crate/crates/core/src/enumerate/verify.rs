//! Exhaustive classification sweeps and their certificates.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::{check_request, RegularCatalog};
use super::graph6::{emit_graph6, read_graph6};
use crate::atlas::{theorem_family, AtlasEntry};
use crate::balance::{analyze_in, necessary_conditions, Audit, NdbReport};
use crate::canon::{canonical_form, CanonicalForm, MAX_CANON_ORDER};
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Identifies the generation algorithm in certificates.
pub const GENERATOR_VERSION: &str = "rowclass-1";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Valencies {
    /// Every `k` in `2..n`.
    All,
    Set(BTreeSet<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Builtin,
    Graph6File(PathBuf),
}

/// What to sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub n: usize,
    pub valencies: Valencies,
    pub connected_only: bool,
    pub source: Source,
    /// Worker threads for generation; `0` uses the default pool. Not recorded,
    /// since it cannot change the result.
    #[serde(skip)]
    pub jobs: usize,
}

impl SweepSpec {
    pub fn all(n: usize) -> Self {
        SweepSpec { n, valencies: Valencies::All, connected_only: true, source: Source::Builtin, jobs: 0 }
    }

    pub fn valency(n: usize, k: usize) -> Self {
        SweepSpec { valencies: Valencies::Set([k].into()), ..Self::all(n) }
    }

    pub fn requested(&self) -> Vec<usize> {
        match &self.valencies {
            Valencies::All => (2..self.n).collect(),
            Valencies::Set(s) => s.iter().copied().collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_CANON_ORDER {
            return check_request(self.n, 0);
        }
        Ok(())
    }
}

/// Per-valency generation tally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValencyCount {
    pub valency: usize,
    pub generated: usize,
    /// Why the valency was skipped, if it was.
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    /// Canonical form, `n:hexbits`.
    pub canon: String,
    pub graph6: String,
    pub valency: usize,
    pub report: NdbReport,
    /// Atlas name, or `None` when no theorem member matches.
    pub atlas_match: Option<String>,
    pub audit: Audit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertificateStatus {
    Ok,
    /// A survivor matches no theorem member.
    Unmatched,
    /// A survivor fails one of its necessary conditions.
    Inconsistent,
    /// A theorem member of this order and a swept valency was not found.
    Incomplete,
}

/// Record of one exhaustive sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationCertificate {
    pub schema_version: u32,
    pub generator_version: String,
    pub spec: SweepSpec,
    pub generated: Vec<ValencyCount>,
    /// Ascending by canonical form.
    pub survivors: Vec<Survivor>,
    /// Theorem members expected in this sweep but absent from the survivors.
    pub missing_members: Vec<String>,
    pub status: CertificateStatus,
}

impl ClassificationCertificate {
    pub fn is_ok(&self) -> bool {
        self.status == CertificateStatus::Ok
    }

    pub fn survivor_names(&self) -> Vec<String> {
        self.survivors.iter().map(|s| s.atlas_match.clone().unwrap_or_else(|| "UNMATCHED".into())).collect()
    }

    pub fn generated_for(&self, k: usize) -> Option<usize> {
        self.generated.iter().find(|c| c.valency == k && c.note.is_none()).map(|c| c.generated)
    }

    /// One JSON object per survivor, plus one per valency without survivors.
    pub fn to_json_lines(&self) -> Result<String> {
        let mut out = String::new();
        for line in self.lines() {
            out.push_str(&serde_json::to_string(&line).map_err(|e| Error::Io(e.to_string()))?);
            out.push('\n');
        }
        Ok(out)
    }

    fn lines(&self) -> Vec<CertificateLine> {
        let mut out = Vec::new();
        for count in &self.generated {
            let base = CertificateLine {
                schema_version: SCHEMA_VERSION,
                generator_version: self.generator_version.clone(),
                order: self.spec.n,
                valency: count.valency,
                generated: count.generated,
                note: count.note.clone(),
                survivor_canon: None,
                graph6: None,
                report: None,
                atlas_match: None,
                audit: None,
            };
            let mine: Vec<&Survivor> = self.survivors.iter().filter(|s| s.valency == count.valency).collect();
            if mine.is_empty() {
                out.push(base.clone());
            }
            for s in mine {
                out.push(CertificateLine {
                    survivor_canon: Some(s.canon.clone()),
                    graph6: Some(s.graph6.clone()),
                    report: Some(s.report.clone()),
                    atlas_match: Some(s.atlas_match.clone().unwrap_or_else(|| "UNMATCHED".into())),
                    audit: Some(s.audit.clone()),
                    ..base.clone()
                });
            }
        }
        out
    }
}

/// One line of a JSON-lines certificate file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateLine {
    pub schema_version: u32,
    pub generator_version: String,
    pub order: usize,
    pub valency: usize,
    pub generated: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub survivor_canon: Option<String>,
    #[serde(default)]
    pub graph6: Option<String>,
    pub report: Option<NdbReport>,
    pub atlas_match: Option<String>,
    pub audit: Option<Audit>,
}

/// Theorem members for every `t` whose `K_{t×3}` fits the canonical-form bound.
pub fn theorem_members() -> Vec<AtlasEntry> {
    theorem_family(2..=MAX_CANON_ORDER / 3)
}

/// Runs a sweep: generate (or ingest), analyse, match survivors, audit.
pub fn verify_classification(spec: &SweepSpec) -> Result<ClassificationCertificate> {
    spec.validate()?;
    let per_k = match &spec.source {
        Source::Builtin => {
            let mut catalog = RegularCatalog::new(spec.n, spec.jobs)?;
            let mut out = Vec::new();
            for k in spec.requested() {
                match check_request(spec.n, k) {
                    Ok(()) => out.push((k, Ok(catalog.forms(k, spec.connected_only)?))),
                    Err(e) => out.push((k, Err(e.to_string()))),
                }
            }
            out
        }
        Source::Graph6File(path) => ingest(spec, &read_graph6(BufReader::new(File::open(path)?))?)?,
    };
    Ok(certify(spec, per_k))
}

/// Groups an external corpus by valency, keeping connected regular graphs of
/// the sweep order and deduplicating by canonical form.
pub fn ingest(spec: &SweepSpec, graphs: &[Graph]) -> Result<PerValency> {
    let mut by_k: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
    for g in graphs {
        if g.order() != spec.n {
            continue;
        }
        let Some(k) = g.regularity() else { continue };
        if spec.connected_only && !g.is_connected() {
            continue;
        }
        by_k.entry(k).or_default().insert(canonical_form(g)?);
    }
    let mut out = Vec::new();
    for k in spec.requested() {
        match check_request(spec.n, k) {
            Ok(()) => out.push((k, Ok(by_k.remove(&k).unwrap_or_default().into_iter().collect()))),
            Err(e) => out.push((k, Err(e.to_string()))),
        }
    }
    Ok(out)
}

type PerValency = Vec<(usize, std::result::Result<Vec<CanonicalForm>, String>)>;

fn certify(spec: &SweepSpec, per_k: PerValency) -> ClassificationCertificate {
    let members: Vec<(CanonicalForm, AtlasEntry)> = theorem_members()
        .into_iter()
        .filter(|e| e.graph.order() == spec.n)
        .map(|e| (canonical_form(&e.graph).expect("members fit the bound"), e))
        .collect();

    let mut generated = Vec::new();
    let mut survivors = Vec::new();
    for (k, forms) in per_k {
        let forms = match forms {
            Ok(f) => f,
            Err(note) => {
                generated.push(ValencyCount { valency: k, generated: 0, note: Some(note) });
                continue;
            }
        };
        generated.push(ValencyCount { valency: k, generated: forms.len(), note: None });
        let found: Vec<Survivor> = forms
            .par_iter()
            .filter_map(|f| {
                let g = f.to_graph();
                let dm = DistanceMatrix::new(&g);
                if !dm.is_connected() {
                    return None;
                }
                let report = analyze_in(&g, &dm);
                if !report.is_gamma_d_plus_one() {
                    return None;
                }
                let atlas_match = members.iter().find(|(m, _)| m == f).map(|(_, e)| e.name.clone());
                Some(Survivor {
                    canon: f.to_hex(),
                    graph6: emit_graph6(&g).expect("order checked"),
                    valency: k,
                    report,
                    atlas_match,
                    audit: necessary_conditions(&g),
                })
            })
            .collect();
        survivors.extend(found);
    }
    finalize(spec, generated, survivors)
}

/// Sorts, checks for missing theorem members and sets the status.
fn finalize(spec: &SweepSpec, mut generated: Vec<ValencyCount>, mut survivors: Vec<Survivor>) -> ClassificationCertificate {
    generated.sort_by_key(|c| c.valency);
    survivors.sort_by_key(|s| CanonicalForm::from_hex(&s.canon).ok());
    let swept: BTreeSet<usize> = generated.iter().filter(|c| c.note.is_none()).map(|c| c.valency).collect();
    let missing_members: Vec<String> = theorem_members()
        .into_iter()
        .filter(|e| e.graph.order() == spec.n && e.expected.is_some_and(|x| swept.contains(&x.k)))
        .filter(|e| !survivors.iter().any(|s| s.atlas_match.as_deref() == Some(&e.name)))
        .map(|e| e.name)
        .collect();
    let status = if survivors.iter().any(|s| !s.audit.passed()) {
        CertificateStatus::Inconsistent
    } else if survivors.iter().any(|s| s.atlas_match.is_none()) {
        CertificateStatus::Unmatched
    } else if !missing_members.is_empty() {
        CertificateStatus::Incomplete
    } else {
        CertificateStatus::Ok
    };
    ClassificationCertificate {
        schema_version: SCHEMA_VERSION,
        generator_version: GENERATOR_VERSION.to_string(),
        spec: spec.clone(),
        generated,
        survivors,
        missing_members,
        status,
    }
}

/// Like [`verify_classification`], but reuses the lines already present in
/// the certificate file at `path` for the `(order, valency, generator)` keys
/// it holds, and appends lines for the valencies it had to sweep.
pub fn verify_resumable(spec: &SweepSpec, path: &Path) -> Result<ClassificationCertificate> {
    spec.validate()?;
    let mut existing: BTreeMap<usize, Vec<CertificateLine>> = BTreeMap::new();
    if path.exists() {
        for (i, line) in BufReader::new(File::open(path)?).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: CertificateLine = serde_json::from_str(&line)
                .map_err(|e| Error::Io(format!("{}:{}: {e}", path.display(), i + 1)))?;
            if rec.order == spec.n && rec.generator_version == GENERATOR_VERSION {
                existing.entry(rec.valency).or_default().push(rec);
            }
        }
    }
    let todo: BTreeSet<usize> = spec.requested().into_iter().filter(|k| !existing.contains_key(k)).collect();
    let mut generated = Vec::new();
    let mut survivors = Vec::new();
    if !todo.is_empty() {
        let fresh = verify_classification(&SweepSpec { valencies: Valencies::Set(todo), ..spec.clone() })?;
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        file.write_all(fresh.to_json_lines()?.as_bytes())?;
        generated.extend(fresh.generated);
        survivors.extend(fresh.survivors);
    }
    for k in spec.requested() {
        let Some(lines) = existing.remove(&k) else { continue };
        let first = &lines[0];
        generated.push(ValencyCount { valency: k, generated: first.generated, note: first.note.clone() });
        for l in lines {
            if let (Some(canon), Some(report), Some(audit)) = (l.survivor_canon, l.report, l.audit) {
                survivors.push(Survivor {
                    canon,
                    graph6: l.graph6.unwrap_or_default(),
                    valency: k,
                    report,
                    atlas_match: l.atlas_match.filter(|m| m != "UNMATCHED"),
                    audit,
                });
            }
        }
    }
    Ok(finalize(spec, generated, survivors))
}
