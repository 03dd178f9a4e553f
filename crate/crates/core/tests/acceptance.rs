//! Acceptance criteria 1-7, one printed PASS/FAIL line each.
//!
//! The lines go straight to stderr, so they show without `--nocapture`.

mod common;

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::{brute_force_isomorphic, random_connected, random_graph, random_regular};
use ndb::atlas;
use ndb::balance::{
    analyze, check_cell_adjacency, d_cell_partition, diametral_geodesics, gamma_from_cells, necessary_conditions,
    profile_along, structural_witness,
};
use ndb::canon::{canonical_form, is_isomorphic, CanonicalForm};
use ndb::enumerate::census::{filter_census, Predicate};
use ndb::enumerate::generate::generate_regular;
use ndb::enumerate::graph6::{emit_graph6, parse_graph6, read_graph6};
use ndb::enumerate::verify::{ingest, verify_classification, SweepSpec};
use ndb::graph::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure!(elapsed < limit, "{what} took {elapsed:?}, limit {limit:?}");
    Ok(())
}

fn form(g: &Graph) -> CanonicalForm {
    canonical_form(g).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    // (name, k, d); gamma must be d + 1.
    let mut expected = vec![
        ("petersen", 3, 2),
        ("petersen-complement", 6, 2),
        ("mobius8", 3, 2),
        ("paley9", 4, 2),
        ("lq3", 4, 3),
        ("q3", 3, 3),
        ("icosahedron", 5, 3),
    ];
    let multipartite: Vec<String> = (2..=4).map(|t| format!("k{t}x3")).collect();
    for (t, name) in (2..=4).zip(&multipartite) {
        expected.push((name.as_str(), 3 * (t - 1), 2));
    }
    for (name, k, d) in &expected {
        let g = atlas::by_name(name).map_err(|e| e.to_string())?;
        let r = analyze(&g).map_err(|e| e.to_string())?;
        ensure!(g.is_connected(), "{name} is disconnected");
        ensure!(r.valency == Some(*k), "{name}: valency {:?}, want {k}", r.valency);
        ensure!(r.diameter == *d, "{name}: diameter {}, want {d}", r.diameter);
        ensure!(r.is_ndb && r.gamma == Some(d + 1), "{name}: ndb {} gamma {:?}", r.is_ndb, r.gamma);
    }
    within(start.elapsed(), Duration::from_secs(1), "membership checks")?;
    Ok(format!("{} graphs, {:?}", expected.len(), start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let members = |names: &[&str]| -> BTreeSet<CanonicalForm> {
        names.iter().map(|n| form(&atlas::by_name(n).unwrap())).collect()
    };
    let mut summary = Vec::new();
    for n in 1..=12 {
        let want = match n {
            6 => members(&["k2x3"]),
            8 => members(&["mobius8", "q3"]),
            9 => members(&["paley9", "k3x3"]),
            10 => members(&["petersen", "petersen-complement"]),
            12 => members(&["lq3", "icosahedron", "k4x3"]),
            _ => BTreeSet::new(),
        };
        let cert = verify_classification(&SweepSpec::all(n)).map_err(|e| e.to_string())?;
        let got: BTreeSet<CanonicalForm> =
            cert.survivors.iter().map(|s| CanonicalForm::from_hex(&s.canon).unwrap()).collect();
        ensure!(got == want, "order {n}: survivors {:?}", cert.survivor_names());
        ensure!(cert.is_ok(), "order {n}: status {:?}", cert.status);
        for s in &cert.survivors {
            ensure!(s.valency != 2, "order {n}: a cycle survived");
            ensure!(s.report.gamma.unwrap() >= s.report.diameter, "order {n}: gamma below diameter");
        }
        if !want.is_empty() {
            summary.push(format!("n={n}: {}", cert.survivor_names().join(",")));
        }
    }
    Ok(format!("{}; {:?}", summary.join("; "), start.elapsed()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let cubic = generate_regular(10, 3).map_err(|e| e.to_string())?;
    ensure!(cubic.len() == 19, "{} cubic graphs on 10 vertices", cubic.len());
    let first = filter_census(cubic, &[Predicate::Diameter(3), Predicate::MinGirth(4)]).map_err(|e| e.to_string())?;
    ensure!(first.final_count() == 5, "diameter 3 and girth >= 4: {}", first.final_count());
    let rest: Vec<Graph> = first.survivors.iter().map(|f| f.to_graph()).collect();
    let second = filter_census(rest, &[Predicate::AllEccentricities(3)]).map_err(|e| e.to_string())?;
    ensure!(second.final_count() == 4, "all eccentricities 3: {}", second.final_count());
    within(start.elapsed(), Duration::from_secs(10), "cubic census")?;
    Ok(format!("19 -> 5 -> 4, {:?}", start.elapsed()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let quartic = generate_regular(12, 4).map_err(|e| e.to_string())?;
    ensure!(quartic.len() == 1544, "{} connected 4-regular graphs on 12 vertices", quartic.len());
    let census = filter_census(quartic, &[Predicate::EdgeRegularLambda(1)]).map_err(|e| e.to_string())?;
    ensure!(census.final_count() == 2, "edge-regular with lambda 1: {}", census.final_count());
    let lq3 = atlas::line_graph(&atlas::hypercube(3).unwrap()).unwrap();
    let lm8 = atlas::line_graph(&atlas::mobius_ladder(8).unwrap()).unwrap();
    let graphs: Vec<Graph> = census.survivors.iter().map(|f| f.to_graph()).collect();
    let db: Vec<&Graph> = graphs.iter().filter(|g| analyze(g).unwrap().is_db).collect();
    ensure!(db.len() == 1, "{} of them are distance-balanced", db.len());
    ensure!(is_isomorphic(db[0], &lq3).unwrap(), "the balanced one is not L(Q3)");
    let other = graphs.iter().find(|g| !analyze(g).unwrap().is_db).unwrap();
    ensure!(is_isomorphic(other, &lm8).unwrap(), "the other one is not L(M8)");
    within(start.elapsed(), Duration::from_secs(300), "edge-regular census")?;
    Ok(format!("1544 -> 2, L(Q3) balanced, L(M8) not, {:?}", start.elapsed()))
}

fn criterion_5() -> Outcome {
    for n in 2..=8 {
        let r = analyze(&atlas::complete(n).unwrap()).unwrap();
        ensure!(r.diameter == 1 && r.gamma == Some(1), "K{n}: d {} gamma {:?}", r.diameter, r.gamma);
    }
    for d in 2..=6 {
        for n in [2 * d, 2 * d + 1] {
            let r = analyze(&atlas::cycle(n).unwrap()).unwrap();
            ensure!(r.diameter == d && r.gamma == Some(d), "C{n}: d {} gamma {:?}", r.diameter, r.gamma);
        }
    }
    for n in [3, 5, 7] {
        let r = analyze(&atlas::prism(n).unwrap()).unwrap();
        ensure!(r.is_db && !r.is_ndb, "prism({n}): db {} ndb {}", r.is_db, r.is_ndb);
    }
    Ok("K2..K8, C4..C13, prism 3/5/7".into())
}

fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    let mut graphs = Vec::new();
    while graphs.len() < 500 {
        let n = rng.gen_range(3..=12);
        if graphs.len() % 2 == 0 {
            graphs.push(random_connected(n, rng.gen_range(0.0..0.5), &mut rng));
        } else if let Some(g) = random_regular(n, rng.gen_range(2..n), &mut rng) {
            if g.is_connected() {
                graphs.push(g);
            }
        }
    }
    for n in 4..=10 {
        for k in 2..n {
            if n * k % 2 == 0 {
                graphs.extend(generate_regular(n, k).unwrap());
            }
        }
    }
    let mut oriented = 0;
    let mut ndb_graphs = 0;
    for g in &graphs {
        for (a, b) in g.edges() {
            for (u, v) in [(a, b), (b, a)] {
                ensure!(check_cell_adjacency(g, u, v).unwrap(), "cell containment fails on {g:?} at {u}-{v}");
                if g.regularity().is_some() {
                    let p = d_cell_partition(g, u, v).unwrap();
                    ensure!(p.cell_size(1, 2) == p.cell_size(2, 1), "inner cells differ on {g:?} at {u}-{v}");
                }
                oriented += 1;
            }
        }
        let r = analyze(g).unwrap();
        if r.is_ndb {
            ndb_graphs += 1;
            ensure!(gamma_from_cells(g).unwrap() == r.gamma, "gamma routes disagree on {g:?}");
        }
    }
    let mut geodesics = 0;
    for name in ["q3", "lq3", "icosahedron"] {
        let g = atlas::by_name(name).unwrap();
        for (a, b) in g.edges() {
            for (x0, x1) in [(a, b), (b, a)] {
                for geo in diametral_geodesics(&g, x0, x1).unwrap() {
                    let w = structural_witness(&g, &profile_along(&g, &geo).unwrap()).unwrap();
                    ensure!(w.holds(), "{name}: witness fails along {geo:?}");
                    geodesics += 1;
                }
            }
        }
        let audit = necessary_conditions(&g);
        ensure!(audit.is_applicable() && audit.passed(), "{name}: {audit:?}");
    }
    let c5 = necessary_conditions(&atlas::icosahedron()).get("local-five-cycle");
    ensure!(c5 == Some(true), "icosahedron local five-cycle: {c5:?}");
    Ok(format!("{} graphs, {oriented} oriented edges, {ndb_graphs} NDB, {geodesics} geodesics", graphs.len()))
}

fn criterion_7() -> Outcome {
    let cubic = generate_regular(10, 3).unwrap();
    for g in &cubic {
        let s = emit_graph6(g).unwrap();
        ensure!(emit_graph6(&parse_graph6(s.as_bytes()).unwrap()).unwrap() == s, "round trip fails on {s}");
        ensure!(&parse_graph6(s.as_bytes()).unwrap() == g, "adjacency changes on {s}");
    }

    let mut rng = StdRng::seed_from_u64(77);
    let mut corpus = Vec::new();
    while corpus.len() < 200 {
        let n = rng.gen_range(1..=7);
        let g = random_graph(n, rng.gen_range(0.2..0.8), rng.gen());
        if rng.gen_bool(0.3) {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            corpus.push(g.relabel(&perm).unwrap());
        }
        corpus.push(g);
    }
    corpus.truncate(200);
    let mut pairs = 0;
    for (i, a) in corpus.iter().enumerate() {
        for b in &corpus[i..] {
            ensure!(is_isomorphic(a, b).unwrap() == brute_force_isomorphic(a, b), "{a:?} vs {b:?}");
            pairs += 1;
        }
    }

    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let mut corpora = Vec::new();
    for (file, n, k) in [("regular_8_3.g6", 8, 3), ("regular_9_4.g6", 9, 4)] {
        let path = data.join(file);
        let Ok(f) = File::open(&path) else {
            corpora.push(format!("{file} not provided"));
            continue;
        };
        let graphs = read_graph6(BufReader::new(f)).map_err(|e| e.to_string())?;
        let (_, forms) = ingest(&SweepSpec::valency(n, k), &graphs).unwrap().remove(0);
        let forms = forms.unwrap();
        let generated: Vec<CanonicalForm> = generate_regular(n, k).unwrap().iter().map(form).collect();
        ensure!(forms == generated, "{file}: {} classes vs {} generated", forms.len(), generated.len());
        corpora.push(format!("{file} {} lines -> {}", graphs.len(), forms.len()));
    }
    Ok(format!("19 round trips, {pairs} pairs, {}", corpora.join(", ")))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 7] = [
        ("theorem members", criterion_1),
        ("exhaustive sweeps n <= 12", criterion_2),
        ("cubic census on 10 vertices", criterion_3),
        ("edge-regular census on 12 vertices", criterion_4),
        ("gamma = d boundary cases", criterion_5),
        ("property suites", criterion_6),
        ("infrastructure oracles", criterion_7),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => writeln!(err, "criterion {} ({name}): PASS  {detail}", i + 1).unwrap(),
            Err(why) => {
                writeln!(err, "criterion {} ({name}): FAIL  {why}", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
