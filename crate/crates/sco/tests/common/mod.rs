//! Shared helpers for the integration suites: seeded generators plus
//! small brute-force detectors written independently of the library's
//! own algorithms, so the suites can cross-examine them.

#![allow(dead_code)]

use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sco::graph::{DirectedGraph, UndirectedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniform simple graph on `n` vertices with `m` distinct edges.
pub fn random_graph(r: &mut ChaCha8Rng, n: usize, m: usize) -> UndirectedGraph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = m.min(pairs.len());
    let edges: Vec<(usize, usize)> = sample(r, pairs.len(), m).iter().map(|i| pairs[i]).collect();
    UndirectedGraph::new(n, &edges).expect("distinct pairs form a simple graph")
}

/// A uniform digraph on `n` vertices with `m` distinct arcs (no loops;
/// antiparallel pairs allowed).
pub fn random_digraph(r: &mut ChaCha8Rng, n: usize, m: usize) -> DirectedGraph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let m = m.min(pairs.len());
    let arcs: Vec<(usize, usize)> = sample(r, pairs.len(), m).iter().map(|i| pairs[i]).collect();
    DirectedGraph::new(n, &arcs).expect("distinct ordered pairs form a digraph")
}

fn count_paths_up_to(
    d: &DirectedGraph,
    u: usize,
    t: usize,
    cap: usize,
    seen: &mut [bool],
    found: &mut usize,
) {
    if *found >= cap {
        return;
    }
    if u == t {
        *found += 1;
        return;
    }
    seen[u] = true;
    for &v in d.out(u) {
        if !seen[v] {
            count_paths_up_to(d, v, t, cap, seen, found);
        }
    }
    seen[u] = false;
}

/// Brute-force reference: a digraph is singly connected when no ordered
/// pair of distinct vertices has two simple directed paths. Exponential;
/// for tiny graphs only.
pub fn singly_connected_by_enumeration(d: &DirectedGraph) -> bool {
    let mut seen = vec![false; d.n()];
    for s in 0..d.n() {
        for t in 0..d.n() {
            if s == t {
                continue;
            }
            let mut found = 0;
            count_paths_up_to(d, s, t, 2, &mut seen, &mut found);
            if found > 1 {
                return false;
            }
        }
    }
    true
}

fn long_cycle_dfs(d: &DirectedGraph, s: usize, u: usize, depth: usize, seen: &mut [bool]) -> bool {
    if depth >= 3 && d.has_arc(u, s) {
        return true;
    }
    for &v in d.out(u) {
        if v > s && !seen[v] {
            seen[v] = true;
            if long_cycle_dfs(d, s, v, depth + 1, seen) {
                return true;
            }
            seen[v] = false;
        }
    }
    false
}

/// True when the digraph contains a simple directed cycle of length at
/// least four. Exhaustive search over simple paths whose smallest vertex
/// is the start; meant for sparse test instances.
pub fn has_long_cycle(d: &DirectedGraph) -> bool {
    let mut seen = vec![false; d.n()];
    for s in 0..d.n() {
        seen[s] = true;
        if long_cycle_dfs(d, s, s, 0, &mut seen) {
            return true;
        }
        seen[s] = false;
    }
    false
}

/// True when the digraph has no directed cycle at all (Kahn peeling).
pub fn is_acyclic(d: &DirectedGraph) -> bool {
    let mut indeg = vec![0usize; d.n()];
    for &(_, v) in d.arcs() {
        indeg[v] += 1;
    }
    let mut stack: Vec<usize> = (0..d.n()).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(u) = stack.pop() {
        removed += 1;
        for &v in d.out(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                stack.push(v);
            }
        }
    }
    removed == d.n()
}

/// Adjacency bitmasks; panics beyond 64 vertices.
pub fn adjacency_masks(g: &UndirectedGraph) -> Vec<u64> {
    assert!(g.n() <= 64, "bitmask helpers cover at most 64 vertices");
    let mut masks = vec![0u64; g.n()];
    for &(u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

/// Some triangle of `g`, by direct common-neighbour scanning.
pub fn some_triangle(g: &UndirectedGraph) -> Option<[usize; 3]> {
    let masks = adjacency_masks(g);
    for &(u, v) in g.edges() {
        let common = masks[u] & masks[v];
        if common != 0 {
            let w = common.trailing_zeros() as usize;
            let mut tri = [u, v, w];
            tri.sort_unstable();
            return Some(tri);
        }
    }
    None
}

/// True when `g` contains K4 as a subgraph: some edge whose endpoints
/// share two adjacent common neighbours.
pub fn has_k4(g: &UndirectedGraph) -> bool {
    let masks = adjacency_masks(g);
    for &(u, v) in g.edges() {
        let mut common = masks[u] & masks[v];
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            common &= common - 1;
            if masks[w] & common != 0 {
                return true;
            }
        }
    }
    false
}

/// True when `g` contains a diamond as a subgraph, i.e. two triangles
/// sharing an edge: some edge whose endpoints share two common neighbours.
pub fn has_diamond_subgraph(g: &UndirectedGraph) -> bool {
    let masks = adjacency_masks(g);
    g.edges()
        .iter()
        .any(|&(u, v)| (masks[u] & masks[v]).count_ones() >= 2)
}

/// True when `g` contains a house as a subgraph: a triangle {a, b, t}
/// whose base edge {a, b} also closes a 4-cycle a-c-d-b avoiding t.
pub fn has_house_subgraph(g: &UndirectedGraph) -> bool {
    let masks = adjacency_masks(g);
    for &(a, b) in g.edges() {
        let mut apexes = masks[a] & masks[b];
        while apexes != 0 {
            let t = apexes.trailing_zeros() as usize;
            apexes &= apexes - 1;
            let forbid = 1u64 << a | 1 << b | 1 << t;
            let mut cs = masks[a] & !forbid;
            while cs != 0 {
                let c = cs.trailing_zeros() as usize;
                cs &= cs - 1;
                if masks[c] & masks[b] & !forbid & !(1 << c) != 0 {
                    return true;
                }
            }
        }
    }
    false
}

fn connected_within(masks: &[u64], set: u64) -> bool {
    let start = set.trailing_zeros() as usize;
    let mut reached = 1u64 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= masks[v] & set & !reached;
        }
        reached |= next;
        frontier = next;
    }
    reached == set
}

/// True when some vertex subset induces a chordless cycle of length five
/// or more (a long hole). Subset enumeration; for at most ~20 vertices.
pub fn has_long_induced_cycle(g: &UndirectedGraph) -> bool {
    let n = g.n();
    assert!(n <= 20, "subset enumeration covers at most 20 vertices");
    let masks = adjacency_masks(g);
    for set in 0u64..(1u64 << n) {
        if set.count_ones() < 5 {
            continue;
        }
        let mut degrees_ok = true;
        let mut s = set;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            if (masks[v] & set).count_ones() != 2 {
                degrees_ok = false;
                break;
            }
        }
        if degrees_ok && connected_within(&masks, set) {
            return true;
        }
    }
    false
}

fn induced_stats(masks: &[u64], set: u64) -> (usize, Vec<u32>, bool, Vec<usize>) {
    let mut edges2 = 0;
    let mut degs = Vec::new();
    let mut triangle = false;
    let mut deg3 = Vec::new();
    let mut s = set;
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        s &= s - 1;
        let inside = masks[v] & set;
        let d = inside.count_ones();
        edges2 += d as usize;
        degs.push(d);
        if d == 3 {
            deg3.push(v);
        }
        let mut t = inside;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            if masks[w] & inside != 0 {
                triangle = true;
            }
        }
    }
    degs.sort_unstable();
    (edges2 / 2, degs, triangle, deg3)
}

/// True when `g` contains an induced house: five vertices inducing six
/// edges with degree multiset {2,2,2,3,3}, a triangle, and the two
/// degree-3 vertices adjacent (the only such graph is the house; the
/// non-adjacent variant is K2,3, which is triangle-free).
pub fn has_induced_house(g: &UndirectedGraph) -> bool {
    let n = g.n();
    assert!(n <= 20);
    let masks = adjacency_masks(g);
    for set in 0u64..(1u64 << n) {
        if set.count_ones() != 5 {
            continue;
        }
        let (m, degs, triangle, deg3) = induced_stats(&masks, set);
        if m == 6
            && degs == [2, 2, 2, 3, 3]
            && triangle
            && masks[deg3[0]] >> deg3[1] & 1 == 1
        {
            return true;
        }
    }
    false
}

/// True when `g` contains an induced domino: six vertices inducing seven
/// edges with degree multiset {2,2,2,2,3,3}, no triangle, and the two
/// degree-3 vertices adjacent (deleting that edge leaves C6, and the
/// triangle-free chord placement is unique up to isomorphism).
pub fn has_induced_domino(g: &UndirectedGraph) -> bool {
    let n = g.n();
    assert!(n <= 20);
    let masks = adjacency_masks(g);
    for set in 0u64..(1u64 << n) {
        if set.count_ones() != 6 {
            continue;
        }
        let (m, degs, triangle, deg3) = induced_stats(&masks, set);
        if m == 7
            && degs == [2, 2, 2, 2, 3, 3]
            && !triangle
            && masks[deg3[0]] >> deg3[1] & 1 == 1
        {
            return true;
        }
    }
    false
}

/// A cactus digraph: `cycles.len()` directed cycles (each oriented one
/// way around), chained together by randomly oriented bridge paths, plus
/// random pendant trees. Every block is a single cycle or a bridge, so
/// the digraph is singly connected by construction, and every cycle of
/// length at least four survives as a long directed cycle.
pub fn random_cyclic_cactus(
    r: &mut ChaCha8Rng,
    cycles: &[usize],
    pendants: usize,
) -> DirectedGraph {
    assert!(!cycles.is_empty());
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut n = 0usize;
    let mut anchors: Vec<usize> = Vec::new();
    for &len in cycles {
        assert!(len >= 3);
        let base = n;
        for i in 0..len {
            arcs.push((base + i, base + (i + 1) % len));
        }
        n += len;
        if let Some(&prev) = anchors.last() {
            // Bridge path of one or two edges, arbitrary directions.
            let here = base + r.gen_range(0..len);
            if r.gen_bool(0.5) {
                let mid = n;
                n += 1;
                push_random_dir(r, &mut arcs, prev, mid);
                push_random_dir(r, &mut arcs, mid, here);
            } else {
                push_random_dir(r, &mut arcs, prev, here);
            }
        }
        anchors.push(base + r.gen_range(0..len));
    }
    for _ in 0..pendants {
        let attach = r.gen_range(0..n);
        let leaf = n;
        n += 1;
        push_random_dir(r, &mut arcs, attach, leaf);
    }
    DirectedGraph::new(n, &arcs).expect("construction emits distinct arcs")
}

fn push_random_dir(r: &mut ChaCha8Rng, arcs: &mut Vec<(usize, usize)>, a: usize, b: usize) {
    if r.gen_bool(0.5) {
        arcs.push((a, b));
    } else {
        arcs.push((b, a));
    }
}
