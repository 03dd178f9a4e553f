//! Infrastructure checked against slow, obviously-correct reimplementations.

mod common;

use common::{brute_force_isomorphic, floyd_warshall, random_graph};
use ndb::atlas;
use ndb::canon::{canonical_form, is_isomorphic};
use ndb::distance::{DistanceMatrix, UNREACHABLE};
use ndb::enumerate::generate::generate_regular;
use ndb::enumerate::graph6::{emit_graph6, parse_graph6};
use ndb::graph::Graph;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bfs_matches_floyd_warshall(n in 1usize..=14, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let dm = DistanceMatrix::new(&g);
        let fw = floyd_warshall(&g);
        for u in 0..n {
            for v in 0..n {
                let want = fw[u][v].unwrap_or(UNREACHABLE);
                prop_assert_eq!(dm.dist(u, v), want);
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels(n in 1usize..=16, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed ^ 0x5eed));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &canonical_form(&g).unwrap().to_graph()).unwrap());
    }

    #[test]
    fn complement_is_an_involution(n in 1usize..=20, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), n * (n - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn girth_is_none_exactly_for_forests(n in 1usize..=14, p in 0.0f64..0.4, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let forest = g.edge_count() + g.component_count() == n;
        prop_assert_eq!(g.girth().is_none(), forest);
        if let Some(len) = g.girth() {
            prop_assert!(len >= 3);
            prop_assert_eq!(Some(len), shortest_cycle(&g));
        }
    }
}

/// Shortest cycle by deleting each edge and measuring the detour.
fn shortest_cycle(g: &Graph) -> Option<usize> {
    let mut best = None;
    for (u, v) in g.edges() {
        let others: Vec<_> = g.edges().into_iter().filter(|&e| e != (u, v)).collect();
        let h = Graph::new(g.order(), &others).unwrap();
        if let Some(d) = floyd_warshall(&h)[u][v] {
            best = Some(best.map_or(d + 1, |b: usize| b.min(d + 1)));
        }
    }
    best
}

#[test]
fn canonical_form_survives_many_relabelings() {
    let mut rng = StdRng::seed_from_u64(100);
    let mut samples: Vec<Graph> = (0..20).map(|i| random_graph(6 + i % 11, 0.4, rng.gen())).collect();
    samples.extend(["petersen", "icosahedron", "lq3", "paley9", "q-4"].map(|n| atlas::by_name(n).unwrap()));
    for g in &samples {
        let want = canonical_form(g).unwrap();
        let mut perm: Vec<usize> = (0..g.order()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabel(&perm).unwrap()).unwrap(), want);
        }
    }
}

#[test]
fn isomorphism_agrees_with_permutation_search() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut corpus = Vec::new();
    while corpus.len() < 200 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(n, p, rng.gen());
        // Relabelled copies give the corpus plenty of isomorphic pairs.
        if rng.gen_bool(0.3) {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            corpus.push(g.relabel(&perm).unwrap());
        }
        corpus.push(g);
    }
    corpus.truncate(200);
    let mut positives = 0;
    for (i, a) in corpus.iter().enumerate() {
        for b in &corpus[i..] {
            let want = brute_force_isomorphic(a, b);
            assert_eq!(is_isomorphic(a, b).unwrap(), want, "{a:?} vs {b:?}");
            positives += usize::from(want);
        }
    }
    assert!(positives > 200 + 20, "corpus should contain non-trivial isomorphic pairs");
}

#[test]
fn graph6_round_trips_the_cubic_census() {
    let graphs = generate_regular(10, 3).unwrap();
    assert_eq!(graphs.len(), 19);
    for g in &graphs {
        let text = emit_graph6(g).unwrap();
        let back = parse_graph6(text.as_bytes()).unwrap();
        assert_eq!(&back, g);
        assert_eq!(emit_graph6(&back).unwrap(), text);
    }
}

#[test]
fn graph6_matches_hand_encoding() {
    // C4 on 0-1-2-3: bits x01 x02 x12 x03 x13 x23 = 1 0 1 1 0 1 = 45, 45 + 63 = 'l'.
    let c4 = atlas::cycle(4).unwrap();
    assert_eq!(emit_graph6(&c4).unwrap(), "Cl");
}
