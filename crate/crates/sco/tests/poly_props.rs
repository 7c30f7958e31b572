//! Properties of the polynomial orientation strategies: coloring-based
//! orientations are always acyclic and are singly connected under the
//! girth bound; near-bipartite partitions orient cycles and the Petersen
//! graph; the block strategy tracks the structural classification.

mod common;

use common::{is_acyclic, random_graph, rng};
use rand::Rng;
use sco::check::check_singly_connected;
use sco::forge::{make_named_graph, NamedGraph};
use sco::graph::coloring::verify_coloring;
use sco::graph::enumerate::enumerate_connected_graphs;
use sco::graph::{chromatic_number, girth, ColoringOutcome, UndirectedGraph};
use sco::poly::{
    build_sdh, classify_dh, find_independent_fvs, orient_by_blocks, orient_by_coloring,
    orient_near_bipartite, orient_strongly_dh, parse_sdh_script, BlockKind, NearBipartitePartition,
    SdhStep,
};

fn petersen() -> UndirectedGraph {
    UndirectedGraph::new(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )
    .unwrap()
}

fn exact_coloring(g: &UndirectedGraph) -> sco::graph::Coloring {
    match chromatic_number(g, g.n().max(1)) {
        ColoringOutcome::Colored(c) => c,
        ColoringOutcome::Exceeded => unreachable!("bound covers every graph"),
    }
}

#[test]
fn coloring_orientations_are_acyclic_on_every_small_graph() {
    for n in 1..=6 {
        for g in enumerate_connected_graphs(n) {
            let c = exact_coloring(&g);
            assert!(verify_coloring(&g, &c));
            let o = orient_by_coloring(&g, &c).unwrap();
            let d = o.to_digraph(&g);
            assert!(is_acyclic(&d), "{:?}", g.edges());
        }
    }
}

#[test]
fn coloring_orientations_meet_the_girth_bound_cases() {
    let mut covered = 0;
    for g in [
        make_named_graph(&NamedGraph::Cycle { len: 5 }).unwrap(),
        make_named_graph(&NamedGraph::Cycle { len: 7 }).unwrap(),
        petersen(),
        make_named_graph(&NamedGraph::Grid { rows: 3, cols: 4 }).unwrap(),
        make_named_graph(&NamedGraph::Cycle { len: 9 }).unwrap(),
    ] {
        let c = exact_coloring(&g);
        let bound_ok = match girth(&g) {
            None => true,
            Some(girth) => c.k <= 1 || girth >= 2 * c.k - 1,
        };
        assert!(bound_ok, "chosen cases satisfy the precondition");
        covered += 1;
        let o = orient_by_coloring(&g, &c).unwrap();
        assert!(check_singly_connected(&o.to_digraph(&g)).is_singly_connected());
    }
    assert_eq!(covered, 5);
}

#[test]
fn coloring_orientation_rejects_improper_colorings() {
    let g = make_named_graph(&NamedGraph::Cycle { len: 5 }).unwrap();
    let mut c = exact_coloring(&g);
    c.colors[0] = c.colors[1];
    assert!(orient_by_coloring(&g, &c).is_err());
}

#[test]
fn near_bipartite_partitions_orient_odd_cycles_and_petersen() {
    let mut graphs: Vec<UndirectedGraph> = (5..=9)
        .map(|len| make_named_graph(&NamedGraph::Cycle { len }).unwrap())
        .collect();
    graphs.push(petersen());
    for g in graphs {
        let independent = find_independent_fvs(&g).expect("these graphs admit one");
        // Independence and the feedback property, checked directly.
        for &u in &independent {
            for &v in &independent {
                assert!(u == v || !g.has_edge(u, v));
            }
        }
        let keep: Vec<usize> = (0..g.n()).filter(|v| !independent.contains(v)).collect();
        let (forest, _) = g.induced_subgraph(&keep);
        assert_eq!(girth(&forest), None, "the complement must be acyclic");

        let partition = NearBipartitePartition::from_independent(g.n(), &independent);
        let o = orient_near_bipartite(&g, &partition).unwrap();
        assert!(check_singly_connected(&o.to_digraph(&g)).is_singly_connected());
    }
}

#[test]
fn near_bipartite_rejects_invalid_partitions_and_k4() {
    let k4 = UndirectedGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(find_independent_fvs(&k4).is_none(), "K4 has no independent fvs");

    let c5 = make_named_graph(&NamedGraph::Cycle { len: 5 }).unwrap();
    // Adjacent vertices cannot both sit in the independent side.
    let bad = NearBipartitePartition::from_independent(c5.n(), &[0, 1]);
    assert!(orient_near_bipartite(&c5, &bad).is_err());
    // A cycle left whole inside the forest part is rejected too.
    let whole = NearBipartitePartition::from_independent(c5.n(), &[]);
    assert!(orient_near_bipartite(&c5, &whole).is_err());
}

#[test]
fn block_orientation_follows_the_classification() {
    let cases: Vec<(UndirectedGraph, bool)> = vec![
        (
            make_named_graph(&NamedGraph::Grid { rows: 2, cols: 4 }).unwrap(),
            true,
        ),
        (make_named_graph(&NamedGraph::Cycle { len: 3 }).unwrap(), true),
        (make_named_graph(&NamedGraph::Cycle { len: 6 }).unwrap(), true),
        (make_named_graph(&NamedGraph::Cycle { len: 5 }).unwrap(), false),
        (petersen(), false),
    ];
    for (g, supported) in cases {
        let result = orient_by_blocks(&g);
        assert_eq!(result.is_ok(), supported, "{:?}", g.edges());
        if let Ok(o) = result {
            assert!(check_singly_connected(&o.to_digraph(&g)).is_singly_connected());
            let cls = classify_dh(&g);
            assert!(cls
                .per_block
                .iter()
                .all(|k| matches!(k, BlockKind::Bipartite | BlockKind::Triangle)));
        }
    }
}

#[test]
fn classification_flags_the_canonical_obstructions() {
    let k23 = UndirectedGraph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    let named: Vec<(UndirectedGraph, bool, bool, &str)> = vec![
        (make_named_graph(&NamedGraph::House).unwrap(), false, false, "house"),
        (make_named_graph(&NamedGraph::Gem).unwrap(), false, false, "gem"),
        (make_named_graph(&NamedGraph::Domino).unwrap(), false, false, "domino"),
        // The diamond is distance-hereditary, yet its block is neither
        // bipartite nor a triangle.
        (make_named_graph(&NamedGraph::Diamond).unwrap(), true, false, "diamond"),
        (k23, true, true, "K2,3"),
        (make_named_graph(&NamedGraph::Cycle { len: 4 }).unwrap(), true, true, "C4"),
        (make_named_graph(&NamedGraph::Cycle { len: 3 }).unwrap(), true, true, "C3"),
    ];
    for (g, dh, strong, label) in named {
        let cls = classify_dh(&g);
        assert_eq!(cls.is_distance_hereditary, dh, "{label}");
        assert_eq!(cls.is_strongly_dh, strong, "{label}");
        assert_eq!(cls.obstruction.is_none(), strong, "{label}");
        assert_eq!(orient_strongly_dh(&g).is_ok(), strong, "{label}");
    }
    // C5 is a hole: distance-hereditary fails, and the obstruction says so.
    let c5 = make_named_graph(&NamedGraph::Cycle { len: 5 }).unwrap();
    let cls = classify_dh(&c5);
    assert!(!cls.is_distance_hereditary);
    assert!(matches!(
        cls.obstruction,
        Some(sco::poly::DhObstruction::InducedHole(_))
    ));
}

#[test]
fn random_construction_scripts_stay_strongly_dh() {
    let mut r = rng(0x5D11);
    for trial in 0..150 {
        let len = 2 + trial % 9;
        // Grow a valid script by tracking the graph alongside, so every
        // step's side condition holds by choice rather than by luck.
        let mut adj: Vec<Vec<usize>> = vec![Vec::new()];
        let mut steps: Vec<SdhStep> = Vec::new();
        for _ in 0..len {
            let n = adj.len();
            let mut candidates: Vec<SdhStep> = (0..n).map(SdhStep::Pendant).collect();
            for u in 0..n {
                if adj[u].len() == 1 {
                    candidates.push(SdhStep::TrueTwin(u));
                }
                let nb = &adj[u];
                let independent = nb
                    .iter()
                    .enumerate()
                    .all(|(x, &a)| nb[x + 1..].iter().all(|&b| !adj[a].contains(&b)));
                if !nb.is_empty() && independent {
                    candidates.push(SdhStep::FalseTwin(u));
                }
            }
            let step = candidates[r.gen_range(0..candidates.len())];
            let new = n;
            let attach: Vec<usize> = match step {
                SdhStep::Pendant(u) => vec![u],
                SdhStep::TrueTwin(u) => vec![adj[u][0], u],
                SdhStep::FalseTwin(u) => adj[u].clone(),
            };
            adj.push(Vec::new());
            for w in attach {
                adj[w].push(new);
                adj[new].push(w);
            }
            steps.push(step);
        }
        let g = build_sdh(&steps).unwrap();
        let cls = classify_dh(&g);
        assert!(cls.is_strongly_dh, "{steps:?}");
        let o = orient_strongly_dh(&g).unwrap();
        assert!(check_singly_connected(&o.to_digraph(&g)).is_singly_connected());
    }
}

#[test]
fn builder_rejects_broken_side_conditions() {
    // True twin of a degree-2 vertex.
    let err = build_sdh(&[
        SdhStep::Pendant(0),
        SdhStep::Pendant(1),
        SdhStep::TrueTwin(1),
    ])
    .unwrap_err();
    assert_eq!(err.step, 2);
    // False twin across an edge of a triangle.
    let err = build_sdh(&[
        SdhStep::Pendant(0),
        SdhStep::TrueTwin(1),
        SdhStep::FalseTwin(0),
    ])
    .unwrap_err();
    assert_eq!(err.step, 2);
    // Forward reference.
    assert!(build_sdh(&[SdhStep::Pendant(7)]).is_err());
}

#[test]
fn script_parser_accepts_both_token_styles() {
    let spaced = parse_sdh_script("P 0; T 1").unwrap();
    let joined = parse_sdh_script("P0,T1").unwrap();
    assert_eq!(spaced, joined);
    assert_eq!(spaced, vec![SdhStep::Pendant(0), SdhStep::TrueTwin(1)]);
    assert!(parse_sdh_script("Q 0").is_err());
    assert!(parse_sdh_script("P").is_err());
}

#[test]
fn random_near_bipartite_cases_verify_at_girth_five() {
    let mut r = rng(0xFB5);
    let mut oriented = 0;
    for trial in 0..3000 {
        let n = 5 + trial % 4;
        let g = random_graph(&mut r, n, n + trial % 3);
        if girth(&g).is_some_and(|x| x < 5) {
            continue;
        }
        if let Some(independent) = find_independent_fvs(&g) {
            let partition = NearBipartitePartition::from_independent(g.n(), &independent);
            let o = orient_near_bipartite(&g, &partition).unwrap();
            oriented += 1;
            assert!(check_singly_connected(&o.to_digraph(&g)).is_singly_connected());
        }
    }
    assert!(
        oriented > 40,
        "the sweep should produce many orientations, got {oriented}"
    );
}
