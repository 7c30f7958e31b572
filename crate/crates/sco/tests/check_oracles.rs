//! Cross-examination of the three independent single-connectivity
//! deciders (path-counting DFS, vertex-split max-flow, and the test-side
//! exhaustive path enumeration), witness replay, and the long-cycle
//! elimination rewrite.

mod common;

use common::{has_long_cycle, random_digraph, rng, singly_connected_by_enumeration};
use sco::check::{
    check_singly_connected, eliminate_long_cycles, eliminate_long_cycles_detailed, is_sc_bitmask,
    oracle_singly_connected_flow, verify_witness,
};
use sco::graph::{DirectedGraph, GraphFormat};

fn out_masks(d: &DirectedGraph) -> Vec<u64> {
    let mut masks = vec![0u64; d.n()];
    for &(u, v) in d.arcs() {
        masks[u] |= 1 << v;
    }
    masks
}

#[test]
fn all_deciders_agree_on_every_three_vertex_digraph() {
    // 6 ordered pairs on 3 vertices: all 64 digraphs.
    let pairs = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)];
    for mask in 0u32..64 {
        let arcs: Vec<(usize, usize)> = (0..6)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let d = DirectedGraph::new(3, &arcs).unwrap();
        let brute = singly_connected_by_enumeration(&d);
        assert_eq!(check_singly_connected(&d).is_singly_connected(), brute);
        assert_eq!(oracle_singly_connected_flow(&d), brute);
        assert_eq!(is_sc_bitmask(&out_masks(&d)), brute);
    }
}

#[test]
fn deciders_agree_on_seeded_digraphs() {
    let mut r = rng(0xC0FFEE);
    for trial in 0..400 {
        let n = 4 + trial % 4;
        let max_arcs = n * (n - 1);
        let m = 1 + (trial * 7) % max_arcs;
        let d = random_digraph(&mut r, n, m);
        let brute = singly_connected_by_enumeration(&d);
        let verdict = check_singly_connected(&d);
        assert_eq!(verdict.is_singly_connected(), brute, "{d:?}");
        assert_eq!(oracle_singly_connected_flow(&d), brute, "{d:?}");
        assert_eq!(is_sc_bitmask(&out_masks(&d)), brute, "{d:?}");
        if let Some(w) = verdict.witness() {
            assert!(verify_witness(&d, w), "witness must replay: {w:?}");
        }
    }
}

#[test]
fn witnesses_name_two_distinct_paths_with_shared_endpoints() {
    let mut r = rng(0xBEEF);
    let mut refuted = 0;
    for _ in 0..300 {
        let n = 5;
        let d = random_digraph(&mut r, n, 12);
        if let Some(w) = check_singly_connected(&d).witness().cloned() {
            refuted += 1;
            assert_ne!(w.path1, w.path2);
            assert_eq!(w.path1.first(), Some(&w.s));
            assert_eq!(w.path2.first(), Some(&w.s));
            assert_eq!(w.path1.last(), Some(&w.t));
            assert_eq!(w.path2.last(), Some(&w.t));
            assert!(verify_witness(&d, &w));
            // Corrupting a path must be caught.
            let mut bad = w.clone();
            bad.path1 = vec![w.s, w.t];
            if !d.has_arc(w.s, w.t) {
                assert!(!verify_witness(&d, &bad));
            }
        }
    }
    assert!(refuted > 100, "dense 5-vertex digraphs should mostly fail");
}

#[test]
fn elimination_rewrites_preserve_single_connectivity() {
    let mut r = rng(0xACE);
    let mut rewritten = 0;
    for trial in 0..200 {
        let cycles = [4 + trial % 4];
        let d = common::random_cyclic_cactus(&mut r, &cycles, trial % 5);
        assert!(oracle_singly_connected_flow(&d), "cactus generator is sc");
        assert!(has_long_cycle(&d));
        let (rewired, steps) = eliminate_long_cycles_detailed(&d).unwrap();
        assert!(steps > 0);
        rewritten += steps;
        assert!(check_singly_connected(&rewired).is_singly_connected());
        assert!(oracle_singly_connected_flow(&rewired));
        assert!(!has_long_cycle(&rewired));
        // Same underlying graph, different directions only.
        assert_eq!(
            rewired.underlying().unwrap().edges(),
            d.underlying().unwrap().edges()
        );
    }
    assert!(rewritten >= 200);
}

#[test]
fn elimination_is_idempotent_and_rejects_bad_input() {
    let mut r = rng(0x1DE);
    for trial in 0..100 {
        let d = common::random_cyclic_cactus(&mut r, &[5, 4], trial % 4);
        let first = eliminate_long_cycles(&d).unwrap();
        let (second, steps) = eliminate_long_cycles_detailed(&first).unwrap();
        assert_eq!(steps, 0, "no long cycle survives the first pass");
        assert_eq!(second.arcs(), first.arcs());
    }
    // Two antiparallel 2-paths between a pair: not singly connected.
    let bad = DirectedGraph::new(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
    let err = eliminate_long_cycles(&bad).unwrap_err();
    assert!(verify_witness(&bad, &err.0));
}

#[test]
fn digraph_text_round_trips() {
    let mut r = rng(0x7E57);
    for _ in 0..50 {
        let d = random_digraph(&mut r, 6, 14);
        let text = sco::graph::to_digraph_text(&d);
        let back = sco::graph::parse_digraph(&text).unwrap();
        assert_eq!(back.n(), d.n());
        assert_eq!(back.arcs(), d.arcs());
    }
}

#[test]
fn graph6_round_trips_on_seeded_graphs() {
    let mut r = rng(0x6666);
    for trial in 0..200 {
        let n = 1 + trial % 12;
        let g = common::random_graph(&mut r, n, trial % 20);
        let line = sco::graph::to_graph6(&g);
        let back = sco::graph::parse_graph(&line, GraphFormat::Graph6).unwrap();
        assert_eq!(back.n(), g.n());
        assert_eq!(back.edges(), g.edges());
    }
}
