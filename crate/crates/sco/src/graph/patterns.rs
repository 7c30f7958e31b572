//! Search for fixed patterns as subgraphs or induced subgraphs.

use super::UndirectedGraph;

/// The patterns the searcher knows. `Hole(k)` is a chordless cycle of
/// length exactly `k >= 5` (any k-cycle in subgraph mode); `Grid(r, c)` is
/// the r-by-c grid with vertex `i` at row `i / c`, column `i % c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternKind {
    Triangle,
    Diamond,
    House,
    Gem,
    Domino,
    Hole(usize),
    Grid(usize, usize),
}

/// A pattern occurrence: `vertices[i]` is the host vertex playing pattern
/// vertex `i` (for holes, in cycle order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub kind: PatternKind,
    pub vertices: Vec<usize>,
    pub induced: bool,
}

/// The pattern itself as a graph, with the vertex numbering used by
/// [`Embedding`].
pub fn pattern_graph(kind: PatternKind) -> UndirectedGraph {
    match kind {
        PatternKind::Triangle => UndirectedGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap(),
        // Two triangles sharing the edge {0, 1}.
        PatternKind::Diamond => {
            UndirectedGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
        }
        // Square 0-1-2-3 with roof apex 4 over the edge {0, 1}.
        PatternKind::House => {
            UndirectedGraph::new(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)]).unwrap()
        }
        // Path 0-1-2-3 plus dominating apex 4.
        PatternKind::Gem => UndirectedGraph::new(
            5,
            &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap(),
        PatternKind::Domino => pattern_graph(PatternKind::Grid(2, 3)),
        PatternKind::Hole(k) => {
            assert!(k >= 5, "holes have length at least 5");
            let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            UndirectedGraph::new(k, &edges).unwrap()
        }
        PatternKind::Grid(r, c) => {
            assert!(r >= 1 && c >= 1, "grid dimensions must be positive");
            let mut edges = Vec::new();
            for i in 0..r {
                for j in 0..c {
                    let v = i * c + j;
                    if j + 1 < c {
                        edges.push((v, v + 1));
                    }
                    if i + 1 < r {
                        edges.push((v, v + c));
                    }
                }
            }
            UndirectedGraph::new(r * c, &edges).unwrap()
        }
    }
}

/// Finds one occurrence of `kind` in `g`, as an induced subgraph when
/// `induced` is set, else as an arbitrary subgraph.
pub fn find_pattern(g: &UndirectedGraph, kind: PatternKind, induced: bool) -> Option<Embedding> {
    let vertices = match kind {
        PatternKind::Triangle => find_triangle(g).map(|t| t.to_vec()),
        PatternKind::Hole(k) => {
            assert!(k >= 5, "holes have length at least 5");
            find_cycle_of_length(g, k, induced)
        }
        _ => embed(g, &pattern_graph(kind), induced),
    };
    vertices.map(|vertices| Embedding {
        kind,
        vertices,
        induced,
    })
}

/// Checks that an embedding really maps the pattern into `g`.
pub fn verify_embedding(g: &UndirectedGraph, emb: &Embedding) -> bool {
    let p = pattern_graph(emb.kind);
    if emb.vertices.len() != p.n() {
        return false;
    }
    let mut sorted = emb.vertices.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != p.n() || sorted.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for a in 0..p.n() {
        for b in a + 1..p.n() {
            let host = g.has_edge(emb.vertices[a], emb.vertices[b]);
            if p.has_edge(a, b) && !host {
                return false;
            }
            if emb.induced && !p.has_edge(a, b) && host {
                return false;
            }
        }
    }
    true
}

/// Fast triangle scan: for each edge, intersect the endpoint adjacencies.
pub fn find_triangle(g: &UndirectedGraph) -> Option<[usize; 3]> {
    for &(u, v) in g.edges() {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (g.adj(u), g.adj(v));
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some([u, v, a[i]]),
            }
        }
    }
    None
}

/// Generic backtracking embedding. Pattern vertices are placed in a greedy
/// static order (most already-placed neighbors first); host candidates are
/// filtered by degree and by (non)adjacency to all placed images.
fn embed(g: &UndirectedGraph, p: &UndirectedGraph, induced: bool) -> Option<Vec<usize>> {
    let np = p.n();
    if np == 0 {
        return Some(Vec::new());
    }
    if g.n() < np {
        return None;
    }
    let order = placement_order(p);
    let mut image = vec![usize::MAX; np];
    let mut used = vec![false; g.n()];
    if embed_rec(g, p, induced, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// Static order: start at a maximum-degree vertex, then repeatedly take the
/// unplaced vertex with the most placed neighbors (ties: higher degree,
/// then lower id). All our patterns are connected, so from the second step
/// on every chosen vertex has a placed neighbor.
fn placement_order(p: &UndirectedGraph) -> Vec<usize> {
    let np = p.n();
    let mut order = Vec::with_capacity(np);
    let mut placed = vec![false; np];
    for step in 0..np {
        let mut best: Option<(usize, usize)> = None; // (vertex, placed neighbors)
        for v in 0..np {
            if placed[v] {
                continue;
            }
            let anchored = p.adj(v).iter().filter(|&&w| placed[w]).count();
            let better = match best {
                None => true,
                Some((bv, ba)) => {
                    anchored > ba || (anchored == ba && p.degree(v) > p.degree(bv))
                }
            };
            if better {
                best = Some((v, anchored));
            }
        }
        let (v, _) = best.expect("pattern vertex remains");
        placed[v] = true;
        order.push(v);
        let _ = step;
    }
    order
}

fn embed_rec(
    g: &UndirectedGraph,
    p: &UndirectedGraph,
    induced: bool,
    order: &[usize],
    depth: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    // Enumerate candidates from a placed neighbor's adjacency when
    // possible, else from all host vertices.
    let anchor = p.adj(pv).iter().find(|&&w| image[w] != usize::MAX);
    let candidates: Vec<usize> = match anchor {
        Some(&w) => g.adj(image[w]).to_vec(),
        None => (0..g.n()).collect(),
    };
    'candidates: for cand in candidates {
        if used[cand] || g.degree(cand) < p.degree(pv) {
            continue;
        }
        for prev in 0..p.n() {
            if image[prev] == usize::MAX {
                continue;
            }
            let need = p.has_edge(prev, pv);
            let have = g.has_edge(image[prev], cand);
            if need && !have || induced && !need && have {
                continue 'candidates;
            }
        }
        image[pv] = cand;
        used[cand] = true;
        if embed_rec(g, p, induced, order, depth + 1, image, used) {
            return true;
        }
        image[pv] = usize::MAX;
        used[cand] = false;
    }
    false
}

/// Finds a cycle of length exactly `k` (chordless when `induced`), returned
/// in cycle order. Canonical search: the first vertex is the cycle minimum
/// and the second is smaller than the last, so each cycle is tried once.
fn find_cycle_of_length(g: &UndirectedGraph, k: usize, induced: bool) -> Option<Vec<usize>> {
    let mut path = Vec::with_capacity(k);
    let mut used = vec![false; g.n()];
    for s in 0..g.n() {
        path.push(s);
        used[s] = true;
        if cycle_rec(g, k, induced, false, &mut path, &mut used) {
            return Some(path);
        }
        used[s] = false;
        path.pop();
    }
    None
}

/// Finds a chordless cycle of length at least `min_len`, in cycle order.
pub fn find_any_hole(g: &UndirectedGraph, min_len: usize) -> Option<Vec<usize>> {
    assert!(min_len >= 4, "short holes collide with triangles");
    let mut path = Vec::with_capacity(min_len);
    let mut used = vec![false; g.n()];
    for s in 0..g.n() {
        path.push(s);
        used[s] = true;
        if cycle_rec(g, min_len, true, true, &mut path, &mut used) {
            return Some(path);
        }
        used[s] = false;
        path.pop();
    }
    None
}

/// Extends a path all of whose vertices exceed `path[0]`; `induced` keeps
/// the path chordless. With `open_length` the cycle may close at any length
/// >= `k`, otherwise at exactly `k`.
///
/// Canonicity: each cycle is reported once, started at its minimum vertex
/// and traversed toward the smaller of that vertex's two cycle neighbors.
fn cycle_rec(
    g: &UndirectedGraph,
    k: usize,
    induced: bool,
    open_length: bool,
    path: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let len = path.len();
    let s = path[0];
    let last = *path.last().unwrap();
    let long_enough = if open_length { len >= k } else { len == k };
    if len >= 3 && long_enough && g.has_edge(last, s) && path[1] < last {
        return true;
    }
    if !open_length && len == k {
        return false;
    }
    // Chordless paths may touch the start only at the first edge or at the
    // pending closure, so once the last vertex sees the start, extension
    // would freeze in a chord: closing was the only option.
    if induced && len >= 3 && g.has_edge(last, s) {
        return false;
    }
    'next: for &w in g.adj(last) {
        if w <= s || used[w] {
            continue;
        }
        if induced && len >= 2 {
            // No chord from w to an interior vertex; edges to the start are
            // resolved by the close-or-die rule above after pushing.
            for &q in &path[1..len - 1] {
                if g.has_edge(w, q) {
                    continue 'next;
                }
            }
        }
        path.push(w);
        used[w] = true;
        if cycle_rec(g, k, induced, open_length, path, used) {
            return true;
        }
        used[w] = false;
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::UndirectedGraph;

    fn k(n: usize) -> UndirectedGraph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .collect();
        UndirectedGraph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> UndirectedGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        UndirectedGraph::new(n, &edges).unwrap()
    }

    #[test]
    fn pattern_graphs_have_expected_shape() {
        assert_eq!(pattern_graph(PatternKind::Triangle).m(), 3);
        assert_eq!(pattern_graph(PatternKind::Diamond).m(), 5);
        assert_eq!(pattern_graph(PatternKind::House).m(), 6);
        assert_eq!(pattern_graph(PatternKind::Gem).m(), 7);
        assert_eq!(pattern_graph(PatternKind::Domino).m(), 7);
        assert_eq!(pattern_graph(PatternKind::Hole(6)).m(), 6);
        let grid = pattern_graph(PatternKind::Grid(3, 4));
        assert_eq!(grid.n(), 12);
        assert_eq!(grid.m(), 17);
    }

    #[test]
    fn triangle_detection() {
        assert_eq!(find_triangle(&cycle(4)), None);
        assert_eq!(find_triangle(&k(3)), Some([0, 1, 2]));
        let found = find_pattern(&k(5), PatternKind::Triangle, true).unwrap();
        assert!(verify_embedding(&k(5), &found));
    }

    #[test]
    fn diamond_in_k4_subgraph_but_not_induced() {
        let k4 = k(4);
        let sub = find_pattern(&k4, PatternKind::Diamond, false).unwrap();
        assert!(verify_embedding(&k4, &sub));
        assert!(find_pattern(&k4, PatternKind::Diamond, true).is_none());
        let diamond = pattern_graph(PatternKind::Diamond);
        let ind = find_pattern(&diamond, PatternKind::Diamond, true).unwrap();
        assert!(verify_embedding(&diamond, &ind));
    }

    #[test]
    fn house_and_gem_detection() {
        let house = pattern_graph(PatternKind::House);
        let emb = find_pattern(&house, PatternKind::House, true).unwrap();
        assert!(verify_embedding(&house, &emb));
        assert!(find_pattern(&house, PatternKind::Gem, false).is_none());
        let gem = pattern_graph(PatternKind::Gem);
        assert!(find_pattern(&gem, PatternKind::Gem, true).is_some());
        // The gem contains a diamond: apex, two path ends, and their common
        // path neighbor induce one.
        let emb = find_pattern(&gem, PatternKind::Diamond, true).unwrap();
        assert!(verify_embedding(&gem, &emb));
        // K5 contains a house as a subgraph but not induced.
        assert!(find_pattern(&k(5), PatternKind::House, false).is_some());
        assert!(find_pattern(&k(5), PatternKind::House, true).is_none());
    }

    #[test]
    fn holes_exact_and_any_length() {
        let c6 = cycle(6);
        let emb = find_pattern(&c6, PatternKind::Hole(6), true).unwrap();
        assert!(verify_embedding(&c6, &emb));
        assert!(find_pattern(&c6, PatternKind::Hole(5), true).is_none());
        // K5 has 5-cycles but none chordless.
        assert!(find_pattern(&k(5), PatternKind::Hole(5), false).is_some());
        assert!(find_pattern(&k(5), PatternKind::Hole(5), true).is_none());
        assert_eq!(find_any_hole(&k(5), 5), None);
        let hole = find_any_hole(&c6, 5).unwrap();
        assert_eq!(hole.len(), 6);
        // C9 has an induced cycle of length >= 5 and also >= 9, not >= 10.
        let c9 = cycle(9);
        assert_eq!(find_any_hole(&c9, 5).unwrap().len(), 9);
        assert_eq!(find_any_hole(&c9, 9).unwrap().len(), 9);
        assert_eq!(find_any_hole(&c9, 10), None);
    }

    #[test]
    fn domino_and_grid_embeddings() {
        let domino = pattern_graph(PatternKind::Domino);
        let emb = find_pattern(&domino, PatternKind::Domino, true).unwrap();
        assert!(verify_embedding(&domino, &emb));
        // A domino contains no house, gem, or diamond even as subgraphs.
        for kind in [PatternKind::House, PatternKind::Gem, PatternKind::Diamond] {
            assert!(find_pattern(&domino, kind, false).is_none());
        }
        // 3x3 grid contains 2x3 and 3x2 grids, induced.
        let g33 = pattern_graph(PatternKind::Grid(3, 3));
        for kind in [PatternKind::Grid(2, 3), PatternKind::Grid(3, 2)] {
            let emb = find_pattern(&g33, kind, true).unwrap();
            assert!(verify_embedding(&g33, &emb));
        }
        assert!(find_pattern(&g33, PatternKind::Grid(4, 2), false).is_none());
        // The domino sits in the 3x3 grid, but not in C6.
        assert!(find_pattern(&g33, PatternKind::Domino, false).is_some());
        assert!(find_pattern(&cycle(6), PatternKind::Domino, false).is_none());
    }

    #[test]
    fn induced_embeddings_are_subgraph_embeddings() {
        // Whenever an induced copy exists, subgraph search must find one too.
        let g33 = pattern_graph(PatternKind::Grid(3, 3));
        let hosts = [k(6), g33, pattern_graph(PatternKind::House), cycle(7)];
        let kinds = [
            PatternKind::Triangle,
            PatternKind::Diamond,
            PatternKind::House,
            PatternKind::Gem,
            PatternKind::Domino,
            PatternKind::Hole(5),
            PatternKind::Hole(7),
            PatternKind::Grid(2, 2),
        ];
        for host in &hosts {
            for &kind in &kinds {
                if let Some(emb) = find_pattern(host, kind, true) {
                    assert!(verify_embedding(host, &emb));
                    let sub = find_pattern(host, kind, false).expect("induced implies subgraph");
                    assert!(verify_embedding(host, &sub));
                }
            }
        }
    }

    #[test]
    fn hole_search_matches_brute_force_on_random_small_graphs() {
        // Deterministic xorshift for edge masks over n = 7.
        let mut state = 0x2545F4914F6CDD1Du64;
        let pairs: Vec<(usize, usize)> = (0..7)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .collect();
        for _ in 0..300 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let mask = state & (1 << 21) - 1;
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = UndirectedGraph::new(7, &edges).unwrap();
            for k in 5..=7 {
                for induced in [false, true] {
                    let got = find_pattern(&g, PatternKind::Hole(k), induced);
                    let want = brute_cycle_exists(&g, k, induced);
                    assert_eq!(got.is_some(), want, "k={k} induced={induced} mask={mask:#x}");
                    if let Some(emb) = got {
                        assert!(verify_embedding(&g, &emb));
                    }
                }
            }
        }
    }

    /// Brute force: scan all vertex sequences for a (chordless) k-cycle.
    fn brute_cycle_exists(g: &UndirectedGraph, k: usize, induced: bool) -> bool {
        fn rec(g: &UndirectedGraph, k: usize, induced: bool, path: &mut Vec<usize>) -> bool {
            if path.len() == k {
                let ok = g.has_edge(path[k - 1], path[0]);
                return ok;
            }
            for v in 0..g.n() {
                if path.contains(&v) {
                    continue;
                }
                if !g.has_edge(*path.last().unwrap(), v) {
                    continue;
                }
                if induced {
                    let bad = path[..path.len() - 1]
                        .iter()
                        .enumerate()
                        .any(|(i, &q)| {
                            // A chord is any adjacency except the predecessor
                            // and the future closing edge to path[0].
                            let closing = i == 0 && path.len() + 1 == k;
                            !closing && g.has_edge(q, v)
                        });
                    if bad {
                        continue;
                    }
                }
                path.push(v);
                if rec(g, k, induced, path) {
                    return true;
                }
                path.pop();
            }
            false
        }
        for s in 0..g.n() {
            let mut path = vec![s];
            if rec(g, k, induced, &mut path) {
                return true;
            }
        }
        false
    }
}
