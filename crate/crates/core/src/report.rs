//! Command results and their text, JSON and CSV renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::balance::{EdgeBalanceProfile, GeodesicProfile, NdbReport};
use crate::enumerate::verify::ClassificationCertificate;
use crate::error::{Error, Result};
use crate::graph::bits;

/// Version of the JSON envelope written by [`ReportDocument::render`].
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Output of `analyze`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub input: String,
    pub report: NdbReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cells: Option<Vec<EdgeBalanceProfile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geodesics: Option<Geodesics>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Geodesics {
    /// One profile per oriented edge that starts a diametral geodesic.
    pub profiles: Vec<GeodesicProfile>,
    /// Every `ℓ` over all diametral geodesics.
    pub ell_spectrum: Vec<usize>,
    /// Set instead of the profiles when the graph is outside their hypothesis.
    pub note: Option<String>,
}

/// Output of `census`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTable {
    pub order: usize,
    pub valency: usize,
    pub source: String,
    pub generated: usize,
    pub chain: Vec<(String, usize)>,
    pub survivors: Vec<CensusSurvivor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSurvivor {
    pub canon: String,
    pub graph6: String,
}

/// Output of `atlas list`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasListing {
    pub names: Vec<String>,
    pub patterns: Vec<String>,
}

/// Output of `check-lemmas`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub scope: String,
    pub graphs: usize,
    pub checks: Vec<LemmaTally>,
    /// Observations that are reported but never fail the run.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaTally {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Payload {
    Analysis(Analysis),
    Certificate(ClassificationCertificate),
    Census(CensusTable),
    AtlasList(AtlasListing),
    Lemmas(LemmaReport),
}

#[derive(Serialize, Deserialize)]
struct Envelope {
    schema_version: u32,
    #[serde(flatten)]
    payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportDocument {
    pub format: Format,
    pub payload: Payload,
}

impl ReportDocument {
    pub fn new(format: Format, payload: Payload) -> Self {
        ReportDocument { format, payload }
    }

    /// Renders the document; always ends with a newline.
    pub fn render(&self) -> String {
        match self.format {
            Format::Json => {
                let env = Envelope { schema_version: REPORT_SCHEMA_VERSION, payload: self.payload.clone() };
                let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => text(&self.payload),
            Format::Csv => csv(&self.payload),
        }
    }

    /// Parses a JSON rendering back, rejecting other schema versions.
    pub fn parse_json(s: &str) -> Result<Payload> {
        let value: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Io(e.to_string()))?;
        match value.get("schema_version").and_then(|v| v.as_u64()) {
            Some(v) if v == REPORT_SCHEMA_VERSION as u64 => {}
            other => return Err(Error::Precondition(format!("unsupported schema_version {other:?}"))),
        }
        let env: Envelope = serde_json::from_value(value).map_err(|e| Error::Io(e.to_string()))?;
        Ok(env.payload)
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn members(mask: u64) -> String {
    let vs: Vec<String> = bits(mask).map(|v| v.to_string()).collect();
    format!("{{{}}}", vs.join(","))
}

fn text(p: &Payload) -> String {
    let mut s = String::new();
    match p {
        Payload::Analysis(a) => {
            let r = &a.report;
            let rows = [
                ("graph", a.input.clone()),
                ("order", r.order.to_string()),
                ("edges", r.edges.to_string()),
                ("valency", opt(r.valency)),
                ("diameter", r.diameter.to_string()),
                ("distance-balanced", yes(r.is_db).into()),
                ("nicely distance-balanced", yes(r.is_ndb).into()),
                ("gamma", opt(r.gamma)),
                ("gamma = d+1", yes(r.is_gamma_d_plus_one()).into()),
                ("edge-regular lambda", opt(r.edge_regular_lambda)),
                ("self-median", yes(r.self_median).into()),
            ];
            for (k, v) in rows {
                writeln!(s, "{k:<26}{v}").unwrap();
            }
            writeln!(s, "\n{:<8}{:>7}{:>7}{:>6}  balanced", "edge", "W(u,v)", "W(v,u)", "ties").unwrap();
            for e in &r.per_edge {
                let name = format!("{}-{}", e.u, e.v);
                writeln!(s, "{name:<8}{:>7}{:>7}{:>6}  {}", e.w_uv, e.w_vu, e.ties, yes(e.balanced)).unwrap();
            }
            if let Some(cells) = &a.cells {
                for p in cells {
                    writeln!(s, "\ncells around {}-{}", p.u, p.v).unwrap();
                    for c in &p.cells {
                        writeln!(s, "  D({},{}) {:>3}  {}", c.i, c.j, c.len(), members(c.members)).unwrap();
                    }
                }
            }
            if let Some(g) = &a.geodesics {
                writeln!(s, "\ndiametral geodesics").unwrap();
                if let Some(note) = &g.note {
                    writeln!(s, "  {note}").unwrap();
                }
                for p in &g.profiles {
                    let path: Vec<String> = p.geodesic.iter().map(|x| x.to_string()).collect();
                    writeln!(s, "  {}  ell={} u={}", path.join(" "), p.ell, p.u_extra).unwrap();
                }
                if g.note.is_none() {
                    let ells: Vec<String> = g.ell_spectrum.iter().map(|x| x.to_string()).collect();
                    writeln!(s, "  ell spectrum: {}", ells.join(" ")).unwrap();
                }
            }
        }
        Payload::Certificate(c) => {
            writeln!(s, "order {}", c.spec.n).unwrap();
            writeln!(s, "generator {}", c.generator_version).unwrap();
            writeln!(s, "\n{:<9}{:>10}  note", "valency", "generated").unwrap();
            for g in &c.generated {
                let line = format!("{:<9}{:>10}  {}", g.valency, g.generated, g.note.as_deref().unwrap_or(""));
                writeln!(s, "{}", line.trim_end()).unwrap();
            }
            writeln!(s, "\nsurvivors {}", c.survivors.len()).unwrap();
            for sv in &c.survivors {
                writeln!(
                    s,
                    "  {:<20} k={} d={} gamma={}  audit {}  {}",
                    sv.atlas_match.as_deref().unwrap_or("UNMATCHED"),
                    sv.valency,
                    sv.report.diameter,
                    opt(sv.report.gamma),
                    if sv.audit.passed() { "pass" } else { "FAIL" },
                    sv.graph6
                )
                .unwrap();
            }
            if !c.missing_members.is_empty() {
                writeln!(s, "missing {}", c.missing_members.join(" ")).unwrap();
            }
            writeln!(s, "status {}", status_name(c)).unwrap();
        }
        Payload::Census(t) => {
            writeln!(s, "order {} valency {} ({})", t.order, t.valency, t.source).unwrap();
            writeln!(s, "{:<24}{:>8}", "generated", t.generated).unwrap();
            for (name, count) in &t.chain {
                writeln!(s, "{name:<24}{count:>8}").unwrap();
            }
            for sv in &t.survivors {
                writeln!(s, "  {}", sv.graph6).unwrap();
            }
        }
        Payload::AtlasList(l) => {
            for n in &l.names {
                writeln!(s, "{n}").unwrap();
            }
            for p in &l.patterns {
                writeln!(s, "{p}").unwrap();
            }
        }
        Payload::Lemmas(l) => {
            writeln!(s, "{} ({} graphs)", l.scope, l.graphs).unwrap();
            writeln!(s, "{:<28}{:>9}{:>8}", "check", "checked", "failed").unwrap();
            for c in &l.checks {
                writeln!(s, "{:<28}{:>9}{:>8}", c.name, c.checked, c.failed).unwrap();
            }
            for n in &l.notes {
                writeln!(s, "note: {n}").unwrap();
            }
            writeln!(s, "{}", if l.passed() { "PASS" } else { "FAIL" }).unwrap();
        }
    }
    s
}

fn status_name(c: &ClassificationCertificate) -> String {
    serde_json::to_value(c.status).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
}

fn csv(p: &Payload) -> String {
    let mut s = String::new();
    match p {
        Payload::Analysis(a) => match &a.cells {
            Some(cells) => {
                s.push_str("u,v,i,j,size,members\n");
                for p in cells {
                    for c in &p.cells {
                        let m: Vec<String> = bits(c.members).map(|v| v.to_string()).collect();
                        writeln!(s, "{},{},{},{},{},{}", p.u, p.v, c.i, c.j, c.len(), m.join(" ")).unwrap();
                    }
                }
            }
            None => {
                s.push_str("u,v,w_uv,w_vu,ties,balanced\n");
                for e in &a.report.per_edge {
                    writeln!(s, "{},{},{},{},{},{}", e.u, e.v, e.w_uv, e.w_vu, e.ties, e.balanced).unwrap();
                }
            }
        },
        Payload::Certificate(c) => {
            s.push_str("canon,graph6,valency,diameter,gamma,atlas_match,audit\n");
            for sv in &c.survivors {
                writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    sv.canon,
                    sv.graph6,
                    sv.valency,
                    sv.report.diameter,
                    opt(sv.report.gamma),
                    sv.atlas_match.as_deref().unwrap_or("UNMATCHED"),
                    if sv.audit.passed() { "pass" } else { "fail" }
                )
                .unwrap();
            }
        }
        Payload::Census(t) => {
            s.push_str("stage,count\n");
            writeln!(s, "generated,{}", t.generated).unwrap();
            for (name, count) in &t.chain {
                writeln!(s, "{name},{count}").unwrap();
            }
        }
        Payload::AtlasList(l) => {
            s.push_str("name\n");
            for n in &l.names {
                writeln!(s, "{n}").unwrap();
            }
        }
        Payload::Lemmas(l) => {
            s.push_str("check,checked,failed\n");
            for c in &l.checks {
                writeln!(s, "{},{},{}", c.name, c.checked, c.failed).unwrap();
            }
        }
    }
    s
}
