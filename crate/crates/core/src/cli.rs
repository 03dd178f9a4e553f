//! The `ndb` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::atlas;
use crate::balance::{
    analyze, analyze_in, cell_adjacency_in, ell_spectrum, gamma_from_cells, geodesic_profile, necessary_conditions,
    profile_in,
};
use crate::canon::canonical_form;
use crate::distance::DistanceMatrix;
use crate::edgelist::{emit_edge_list, parse_edge_list};
use crate::enumerate::census::{filter_census, Predicate};
use crate::enumerate::generate::{generate_regular_with, GenOptions};
use crate::enumerate::graph6::{emit_graph6, parse_graph6, read_graph6};
use crate::enumerate::verify::{ingest, verify_classification, verify_resumable, Source, SweepSpec, Valencies};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{
    Analysis, AtlasListing, CensusSurvivor, CensusTable, Format, Geodesics, LemmaReport, LemmaTally, Payload,
    ReportDocument,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ndb", version, about = "Distance-balance analysis and exhaustive regular-graph sweeps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance-balance report for one graph.
    Analyze(AnalyzeArgs),
    /// Exhaustive sweep of one order; exits 2 unless the certificate is OK.
    Verify(VerifyArgs),
    /// Counts regular graphs surviving a chain of filters.
    Census(CensusArgs),
    /// Lists or dumps the named graphs.
    #[command(subcommand)]
    Atlas(AtlasCommand),
    /// Re-checks the cell lemmas and necessary conditions; exits 2 on any failure.
    CheckLemmas(LemmaArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Atlas name or path to an edge-list file.
    #[arg(required_unless_present = "graph6")]
    pub input: Option<String>,
    /// A graph6 string instead of a name or file.
    #[arg(long, conflicts_with = "input")]
    pub graph6: Option<String>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Include the D-cell partition around every edge.
    #[arg(long)]
    pub cells: bool,
    /// Include diametral geodesic profiles.
    #[arg(long)]
    pub geodesics: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub order: usize,
    /// Valency to sweep; repeatable.
    #[arg(long, required_unless_present = "all_valencies")]
    pub valency: Vec<usize>,
    /// Sweep every valency 2..order-1.
    #[arg(long, conflicts_with = "valency")]
    pub all_valencies: bool,
    /// Take the graphs from a graph6 corpus instead of generating them.
    #[arg(long)]
    pub from_graph6: Option<PathBuf>,
    /// Append the certificate as JSON lines to this file, reusing lines already there.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Generation workers (0 = all cores).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub order: usize,
    #[arg(long)]
    pub valency: usize,
    #[arg(long)]
    pub diameter: Option<usize>,
    #[arg(long)]
    pub min_girth: Option<usize>,
    #[arg(long)]
    pub all_ecc: Option<usize>,
    #[arg(long)]
    pub edge_regular_lambda: Option<usize>,
    /// Further filters such as `db`, `ndb`, `gamma=d+1`; applied after the flags above.
    #[arg(long = "predicate")]
    pub predicates: Vec<String>,
    /// Take the graphs from a graph6 corpus instead of generating them.
    #[arg(long)]
    pub from_graph6: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum AtlasCommand {
    /// Every fixed name and the parameterised patterns.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Prints one named graph.
    Dump {
        name: String,
        #[arg(long, value_enum, default_value_t = DumpFormat::Graph6)]
        format: DumpFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DumpFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    /// Atlas name or edge-list file; omit to check a generated family.
    #[arg(conflicts_with_all = ["graph6", "order", "from_graph6"])]
    pub input: Option<String>,
    #[arg(long, conflicts_with_all = ["order", "from_graph6"])]
    pub graph6: Option<String>,
    /// Check every connected regular graph of this order.
    #[arg(long, requires = "valency")]
    pub order: Option<usize>,
    #[arg(long)]
    pub valency: Option<usize>,
    /// Check every graph in a graph6 corpus.
    #[arg(long)]
    pub from_graph6: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs a parsed command, returning the rendered output and exit code.
pub fn execute(command: Command) -> Result<(String, i32)> {
    match command {
        Command::Analyze(a) => {
            let doc = cmd_analyze(&a)?;
            Ok((doc.render(), EXIT_OK))
        }
        Command::Verify(a) => {
            let doc = cmd_verify(&a)?;
            let ok = matches!(&doc.payload, Payload::Certificate(c) if c.is_ok());
            Ok((doc.render(), if ok { EXIT_OK } else { EXIT_FAILED }))
        }
        Command::Census(a) => Ok((cmd_census(&a)?.render(), EXIT_OK)),
        Command::Atlas(a) => Ok((cmd_atlas(&a)?, EXIT_OK)),
        Command::CheckLemmas(a) => {
            let doc = cmd_check_lemmas(&a)?;
            let ok = matches!(&doc.payload, Payload::Lemmas(l) if l.passed());
            Ok((doc.render(), if ok { EXIT_OK } else { EXIT_FAILED }))
        }
    }
}

/// Resolves an atlas name, an edge-list path or a graph6 string.
pub fn resolve_input(input: Option<&str>, graph6: Option<&str>) -> Result<(String, Graph)> {
    if let Some(s) = graph6 {
        return Ok((s.to_string(), parse_graph6(s.as_bytes())?));
    }
    let name = input.ok_or_else(|| Error::InvalidArgument("no input graph given".into()))?;
    match atlas::by_name(name) {
        Ok(g) => Ok((name.to_string(), g)),
        Err(Error::UnknownAtlasName(_)) if fs::metadata(name).is_ok() => {
            Ok((name.to_string(), parse_edge_list(&fs::read_to_string(name)?)?))
        }
        Err(e) => Err(e),
    }
}

fn read_corpus(path: &PathBuf) -> Result<Vec<Graph>> {
    read_graph6(BufReader::new(File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?))
}

pub fn cmd_analyze(a: &AnalyzeArgs) -> Result<ReportDocument> {
    let (label, g) = resolve_input(a.input.input.as_deref(), a.input.graph6.as_deref())?;
    let report = analyze(&g)?;
    let dm = DistanceMatrix::new(&g);
    let cells = a.cells.then(|| {
        g.edges().into_iter().map(|(u, v)| profile_in(&dm, u, v)).collect()
    });
    let geodesics = a.geodesics.then(|| geodesic_section(&g));
    Ok(ReportDocument::new(a.format, Payload::Analysis(Analysis { input: label, report, cells, geodesics })))
}

fn geodesic_section(g: &Graph) -> Geodesics {
    let spectrum = match ell_spectrum(g) {
        Ok(s) => s,
        Err(e) => return Geodesics { profiles: Vec::new(), ell_spectrum: Vec::new(), note: Some(e.to_string()) },
    };
    let mut profiles = Vec::new();
    for (a, b) in g.edges() {
        for (x0, x1) in [(a, b), (b, a)] {
            if let Ok(p) = geodesic_profile(g, x0, x1) {
                profiles.push(p);
            }
        }
    }
    Geodesics { profiles, ell_spectrum: spectrum.into_iter().collect(), note: None }
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<ReportDocument> {
    let spec = SweepSpec {
        n: a.order,
        valencies: if a.all_valencies { Valencies::All } else { Valencies::Set(a.valency.iter().copied().collect()) },
        connected_only: true,
        source: a.from_graph6.clone().map_or(Source::Builtin, Source::Graph6File),
        jobs: a.jobs,
    };
    let cert = match &a.out {
        Some(path) => verify_resumable(&spec, path)?,
        None => verify_classification(&spec)?,
    };
    Ok(ReportDocument::new(a.format, Payload::Certificate(cert)))
}

pub fn cmd_census(a: &CensusArgs) -> Result<ReportDocument> {
    let mut predicates = Vec::new();
    predicates.extend(a.diameter.map(Predicate::Diameter));
    predicates.extend(a.min_girth.map(Predicate::MinGirth));
    predicates.extend(a.all_ecc.map(Predicate::AllEccentricities));
    predicates.extend(a.edge_regular_lambda.map(Predicate::EdgeRegularLambda));
    for p in &a.predicates {
        predicates.push(p.parse()?);
    }
    let (source, graphs) = match &a.from_graph6 {
        Some(path) => {
            let spec = SweepSpec::valency(a.order, a.valency);
            let (_, forms) = ingest(&spec, &read_corpus(path)?)?.remove(0);
            let forms = forms.map_err(|reason| Error::BadSweep { n: a.order, k: a.valency, reason })?;
            (path.display().to_string(), forms.iter().map(|f| f.to_graph()).collect())
        }
        None => {
            let opts = GenOptions { jobs: a.jobs, ..GenOptions::default() };
            ("generated".to_string(), generate_regular_with(a.order, a.valency, opts)?)
        }
    };
    let generated = graphs.len();
    let result = filter_census(graphs, &predicates)?;
    let survivors = result
        .survivors
        .iter()
        .map(|f| CensusSurvivor { canon: f.to_hex(), graph6: emit_graph6(&f.to_graph()).expect("order fits") })
        .collect();
    Ok(ReportDocument::new(
        a.format,
        Payload::Census(CensusTable { order: a.order, valency: a.valency, source, generated, chain: result.chain, survivors }),
    ))
}

pub fn cmd_atlas(a: &AtlasCommand) -> Result<String> {
    match a {
        AtlasCommand::List { format } => {
            let listing = AtlasListing {
                names: atlas::list(),
                patterns: atlas::FAMILY_PATTERNS.iter().map(|s| s.to_string()).collect(),
            };
            Ok(ReportDocument::new(*format, Payload::AtlasList(listing)).render())
        }
        AtlasCommand::Dump { name, format } => {
            let g = atlas::by_name(name)?;
            Ok(match format {
                DumpFormat::Graph6 => emit_graph6(&g)? + "\n",
                DumpFormat::Edgelist => emit_edge_list(&g),
            })
        }
    }
}

pub fn cmd_check_lemmas(a: &LemmaArgs) -> Result<ReportDocument> {
    let (scope, graphs) = if let (Some(n), Some(k)) = (a.order, a.valency) {
        let opts = GenOptions { jobs: a.jobs, ..GenOptions::default() };
        (format!("connected {k}-regular graphs of order {n}"), generate_regular_with(n, k, opts)?)
    } else if let Some(path) = &a.from_graph6 {
        (path.display().to_string(), read_corpus(path)?)
    } else {
        let (label, g) = resolve_input(a.input.as_deref(), a.graph6.as_deref())?;
        (label, vec![g])
    };
    Ok(ReportDocument::new(a.format, Payload::Lemmas(check_lemmas(scope, &graphs))))
}

/// Cell containment, the inner-cell equality, the two routes to `γ` and the
/// necessary conditions, tallied over `graphs`. Disconnected graphs are skipped.
pub fn check_lemmas(scope: String, graphs: &[Graph]) -> LemmaReport {
    const NAMES: [&str; 4] = ["cell-adjacency", "inner-cells-equal", "gamma-two-routes", "necessary-conditions"];
    let mut tallies: Vec<LemmaTally> =
        NAMES.iter().map(|n| LemmaTally { name: n.to_string(), checked: 0, failed: 0 }).collect();
    let mut record = |idx: usize, ok: bool| {
        tallies[idx].checked += 1;
        tallies[idx].failed += usize::from(!ok);
    };
    let mut skipped = 0;
    let mut db_not_self_median = BTreeSet::new();
    for g in graphs {
        let dm = DistanceMatrix::new(g);
        if !dm.is_connected() || g.edge_count() == 0 {
            skipped += 1;
            continue;
        }
        for (u, v) in g.edges() {
            record(0, cell_adjacency_in(g, &dm, u, v) && cell_adjacency_in(g, &dm, v, u));
            if g.regularity().is_some() {
                let (p, q) = (profile_in(&dm, u, v), profile_in(&dm, v, u));
                record(1, p.cell_size(1, 2) == p.cell_size(2, 1) && q.cell_size(1, 2) == q.cell_size(2, 1));
            }
        }
        let report = analyze_in(g, &dm);
        if report.is_ndb {
            record(2, gamma_from_cells(g).ok().flatten() == report.gamma);
        }
        let audit = necessary_conditions(g);
        if audit.is_applicable() {
            record(3, audit.passed());
        }
        if report.is_db != report.self_median {
            if let Ok(f) = canonical_form(g) {
                db_not_self_median.insert(f.to_hex());
            } else {
                db_not_self_median.insert(format!("graph of order {}", g.order()));
            }
        }
    }
    let mut notes = Vec::new();
    if skipped > 0 {
        notes.push(format!("{skipped} disconnected or edgeless graphs skipped"));
    }
    for g in db_not_self_median {
        notes.push(format!("distance-balance and self-median disagree on {g}"));
    }
    LemmaReport { scope, graphs: graphs.len(), checks: tallies, notes }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("ndb").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_1() {
        assert_eq!(run_str(&[]).0, EXIT_USAGE);
        assert_eq!(run_str(&["analyze"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        let (code, _, err) = run_str(&["analyze", "nosuch"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("unknown atlas name"), "{err}");
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn analyze_k2() {
        let (code, out, _) = run_str(&["analyze", "--graph6", "A_", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let Payload::Analysis(a) = ReportDocument::parse_json(&out).unwrap() else { panic!() };
        assert_eq!(a.report.gamma, Some(1));
    }

    #[test]
    fn disconnected_is_reported() {
        let (code, _, err) = run_str(&["analyze", "--graph6", "C?"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("disconnected"), "{err}");
    }

    #[test]
    fn lemma_failures_are_impossible_on_atlas() {
        for name in ["q3", "icosahedron", "lq3", "petersen", "prism-5"] {
            let (code, out, _) = run_str(&["check-lemmas", name]);
            assert_eq!(code, EXIT_OK, "{name}: {out}");
        }
    }
}
