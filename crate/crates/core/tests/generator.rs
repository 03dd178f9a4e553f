//! Completeness and isomorph-freeness of the regular-graph generator.

mod common;

use std::collections::BTreeSet;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use common::{brute_force_classes, brute_force_isomorphic, labelled_regular};
use ndb::atlas;
use ndb::canon::{canonical_form, is_isomorphic};
use ndb::enumerate::generate::{generate_forms, generate_regular, generate_regular_with, GenOptions};
use ndb::enumerate::graph6::read_graph6;
use ndb::enumerate::verify::{ingest, SweepSpec};
use ndb::error::Error;

/// Connected k-regular graphs on n vertices, for the published table.
const KNOWN: &[(usize, usize, usize)] = &[
    (4, 2, 1),
    (4, 3, 1),
    (5, 2, 1),
    (5, 4, 1),
    (6, 2, 1),
    (6, 3, 2),
    (6, 4, 1),
    (6, 5, 1),
    (7, 2, 1),
    (7, 4, 2),
    (7, 6, 1),
    (8, 3, 5),
    (8, 4, 6),
    (8, 5, 3),
    (8, 6, 1),
    (9, 4, 16),
    (9, 6, 4),
    (10, 3, 19),
    (10, 4, 59),
    (10, 5, 60),
    (10, 6, 21),
    (10, 7, 5),
    (11, 4, 265),
    (11, 6, 266),
    (11, 8, 6),
    (12, 3, 85),
    (12, 4, 1544),
];

#[test]
fn counts_match_known_table() {
    for &(n, k, want) in KNOWN {
        assert_eq!(generate_regular(n, k).unwrap().len(), want, "({n},{k})");
    }
}

#[test]
fn small_cases_match_brute_force() {
    let k33 = atlas::complete_multipartite(&[3, 3]).unwrap();
    let prism = atlas::prism(3).unwrap();
    let six_three = generate_regular(6, 3).unwrap();
    assert_eq!(six_three.len(), 2);
    assert!(six_three.iter().any(|g| brute_force_isomorphic(g, &k33)));
    assert!(six_three.iter().any(|g| brute_force_isomorphic(g, &prism)));

    for n in 3..=7 {
        for k in 0..n {
            if n * k % 2 == 1 {
                continue;
            }
            let connected: Vec<_> = labelled_regular(n, k).into_iter().filter(|g| g.is_connected()).collect();
            let want = brute_force_classes(&connected).len();
            assert_eq!(generate_regular(n, k).unwrap().len(), want, "({n},{k})");
        }
    }
    let cubic8: Vec<_> = labelled_regular(8, 3).into_iter().filter(|g| g.is_connected()).collect();
    assert_eq!(cubic8.len(), 19355 - 35, "labelled connected cubic graphs on 8 vertices");
    assert_eq!(brute_force_classes(&cubic8).len(), generate_regular(8, 3).unwrap().len());
}

#[test]
fn output_is_isomorph_free() {
    for n in 3..=10 {
        for k in 2..n {
            if n * k % 2 == 1 {
                continue;
            }
            let graphs = generate_regular(n, k).unwrap();
            let forms: BTreeSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
            assert_eq!(forms.len(), graphs.len(), "({n},{k})");
            for g in &graphs {
                assert!(g.is_connected() && g.regularity() == Some(k));
            }
            if n <= 8 {
                for (i, a) in graphs.iter().enumerate() {
                    for b in &graphs[i + 1..] {
                        assert!(!brute_force_isomorphic(a, b));
                    }
                }
            }
        }
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let base = generate_regular_with(10, 4, GenOptions { jobs: 1, ..GenOptions::default() }).unwrap();
    for jobs in [2, 3, 0] {
        let other = generate_regular_with(10, 4, GenOptions { jobs, ..GenOptions::default() }).unwrap();
        assert_eq!(other, base, "jobs = {jobs}");
    }
}

#[test]
fn complement_shortcut_agrees_with_direct_search() {
    for (n, k) in [(8, 5), (9, 6), (10, 6), (10, 7)] {
        let direct = GenOptions { complement_shortcut: false, ..GenOptions::default() };
        assert_eq!(generate_forms(n, k, direct).unwrap(), generate_forms(n, k, GenOptions::default()).unwrap());
    }
}

#[test]
fn disconnected_graphs_on_request() {
    let all = GenOptions { connected_only: false, ..GenOptions::default() };
    let graphs = generate_regular_with(8, 3, all).unwrap();
    assert_eq!(graphs.len(), 6);
    let two_k4 = atlas::complete(4).unwrap();
    let two_k4 = ndb::graph::Graph::new(
        8,
        &two_k4.edges().into_iter().flat_map(|(u, v)| [(u, v), (u + 4, v + 4)]).collect::<Vec<_>>(),
    )
    .unwrap();
    assert!(graphs.iter().any(|g| is_isomorphic(g, &two_k4).unwrap()));
}

#[test]
fn rejects_bad_requests() {
    assert!(matches!(generate_regular(9, 3), Err(Error::BadSweep { .. })));
    assert!(matches!(generate_regular(5, 5), Err(Error::BadSweep { .. })));
    assert!(matches!(generate_regular(17, 2), Err(Error::BadSweep { .. })));
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// The fixtures come from an unrelated toolchain (see `tests/data/make_corpus.py`).
#[test]
fn external_corpora_dedupe_to_generated_counts() {
    for (file, n, k) in [("regular_8_3.g6", 8, 3), ("regular_9_4.g6", 9, 4)] {
        let corpus = read_graph6(BufReader::new(File::open(fixture(file)).unwrap())).unwrap();
        let spec = SweepSpec::valency(n, k);
        let (_, forms) = ingest(&spec, &corpus).unwrap().remove(0);
        let forms = forms.unwrap();
        assert!(corpus.len() > forms.len(), "{file} should contain duplicates");
        let generated: Vec<_> = generate_regular(n, k).unwrap().iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms, generated, "{file}");
    }
}
