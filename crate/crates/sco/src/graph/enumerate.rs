//! Canonical forms and exhaustive enumeration of small graphs up to
//! isomorphism.

use super::UndirectedGraph;
use std::collections::HashSet;

/// A label-invariant key: two graphs get equal keys iff they are
/// isomorphic. Computed by color refinement with individualization, taking
/// the lexicographically least relabeled adjacency bitstring over all
/// discrete refinements.
pub fn canonical_key(g: &UndirectedGraph) -> Vec<u64> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<u64>> = None;
    search(g, vec![0; n], &mut best);
    best.expect("refinement reaches a discrete coloring")
}

fn search(g: &UndirectedGraph, mut colors: Vec<usize>, best: &mut Option<Vec<u64>>) {
    refine(g, &mut colors);
    let n = g.n();
    let class_count = colors.iter().max().unwrap() + 1;
    if class_count == n {
        let key = key_under(g, &colors);
        if best.as_ref().map_or(true, |b| key < *b) {
            *best = Some(key);
        }
        return;
    }
    // Individualize every member of the first non-singleton class.
    let mut counts = vec![0usize; class_count];
    for &c in &colors {
        counts[c] += 1;
    }
    let target = counts.iter().position(|&c| c >= 2).unwrap();
    for v in 0..n {
        if colors[v] == target {
            let mut branched = colors.clone();
            branched[v] = n; // fresh maximal color, normalized by refine
            search(g, branched, best);
        }
    }
}

/// Iterated signature refinement: recolor by (own color, sorted multiset of
/// neighbor colors) until the class count stabilizes.
fn refine(g: &UndirectedGraph, colors: &mut Vec<usize>) {
    let n = g.n();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.adj(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort();
        let before = colors.iter().collect::<HashSet<_>>().len();
        let mut next = 0usize;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                next += 1;
            }
            colors[sigs[i].2] = next;
        }
        if next + 1 == before {
            return;
        }
    }
}

/// Adjacency bitstring under the discrete coloring (color = new label),
/// packed in upper-triangle column-major order.
fn key_under(g: &UndirectedGraph, colors: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut old_of = vec![0usize; n];
    for v in 0..n {
        old_of[colors[v]] = v;
    }
    let bits = n * (n - 1) / 2;
    let mut key = vec![0u64; bits.div_ceil(64).max(1)];
    let mut t = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(old_of[u], old_of[v]) {
                key[t / 64] |= 1u64 << (t % 64);
            }
            t += 1;
        }
    }
    key
}

/// All graphs on `n` vertices up to isomorphism, built by extending the
/// `(n-1)`-vertex census with every neighborhood of a new vertex.
pub fn enumerate_graphs(n: usize) -> Vec<UndirectedGraph> {
    if n == 0 {
        return vec![UndirectedGraph::empty(0)];
    }
    let mut level = vec![UndirectedGraph::empty(1)];
    for k in 2..=n {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut next_level = Vec::new();
        for g in &level {
            let base = g.edges().to_vec();
            for mask in 0u64..1 << (k - 1) {
                let mut edges = base.clone();
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        edges.push((u, k - 1));
                    }
                }
                let candidate = UndirectedGraph::new(k, &edges).unwrap();
                if seen.insert(canonical_key(&candidate)) {
                    next_level.push(candidate);
                }
            }
        }
        level = next_level;
    }
    level
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn enumerate_connected_graphs(n: usize) -> Vec<UndirectedGraph> {
    enumerate_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}
