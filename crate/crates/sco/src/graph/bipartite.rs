//! Bipartiteness test with a constructive certificate either way.

use super::UndirectedGraph;
use std::collections::VecDeque;

/// A proper 2-coloring: `side[v]` is 0 or 1 and every edge joins the sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<u8>,
}

impl Bipartition {
    /// Vertices on the given side, ascending.
    pub fn part(&self, which: u8) -> Vec<usize> {
        self.side
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s == which)
            .map(|(v, _)| v)
            .collect()
    }
}

/// An odd cycle as a vertex sequence; consecutive vertices (cyclically) are
/// adjacent and no vertex repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    pub vertices: Vec<usize>,
}

/// 2-colors `g` or exhibits an odd cycle.
///
/// BFS layering per component (roots ascending); a same-side edge (u, w)
/// closes an odd cycle formed by the two tree paths up to their lowest
/// common ancestor plus that edge.
pub fn bipartition(g: &UndirectedGraph) -> Result<Bipartition, OddCycle> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.adj(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Err(odd_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    Ok(Bipartition { side })
}

fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> OddCycle {
    // Walk both tree paths up to the common ancestor.
    let (mut a, mut b) = (u, w);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        up_a.push(a);
        b = parent[b];
        up_b.push(b);
    }
    // up_a ends at the ancestor; drop it from one side and reverse the other
    // so the cycle reads u .. ancestor .. w, closed by the edge (w, u).
    up_a.pop();
    up_b.reverse();
    let mut vertices = up_a;
    vertices.extend(up_b);
    OddCycle { vertices }
}

/// Checks that `cycle` really is an odd cycle of `g`.
pub fn verify_odd_cycle(g: &UndirectedGraph, cycle: &OddCycle) -> bool {
    let k = cycle.vertices.len();
    if k < 3 || k % 2 == 0 {
        return false;
    }
    let mut sorted = cycle.vertices.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    (0..k).all(|i| g.has_edge(cycle.vertices[i], cycle.vertices[(i + 1) % k]))
}
