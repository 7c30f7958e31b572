//! Girth (length of a shortest cycle) via per-root breadth-first search.

use super::UndirectedGraph;
use std::collections::VecDeque;

/// Length of a shortest cycle of `g`, or `None` if `g` is a forest.
///
/// For every root r, BFS reports `dist[u] + dist[w] + 1` whenever the scan
/// meets an already-visited neighbor w of u over a non-tree edge. Each such
/// value bounds a real cycle length from above (the two tree paths plus the
/// edge contain a cycle at most that long), and a root lying on a shortest
/// cycle attains it exactly, so the minimum over roots is the girth.
pub fn girth(g: &UndirectedGraph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if best == Some(3) {
            break;
        }
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // Any edge at u reaches depth >= dist[u] - 1, closing a
                // cycle of length >= 2 * dist[u]; deeper layers only grow.
                if 2 * dist[u] >= b {
                    break;
                }
            }
            for &w in g.adj(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w && parent[w] != u {
                    let candidate = dist[u] + dist[w] + 1;
                    if best.map_or(true, |b| candidate < b) {
                        best = Some(candidate);
                    }
                }
            }
        }
    }
    best
}
