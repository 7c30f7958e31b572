//! Verification of single connectivity.
//!
//! A digraph is *singly connected* when every ordered vertex pair (s, t)
//! with s != t has at most one directed simple path from s to t. Directed
//! cycles are allowed; what is forbidden is a genuine branching reunion.

use crate::graph::DirectedGraph;
use std::collections::VecDeque;
use std::fmt;

/// Two distinct directed simple paths from `s` to `t`, as vertex sequences
/// including both endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScWitness {
    pub s: usize,
    pub t: usize,
    pub path1: Vec<usize>,
    pub path2: Vec<usize>,
}

/// Outcome of [`check_singly_connected`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    SinglyConnected,
    NotSinglyConnected(ScWitness),
}

impl Verdict {
    pub fn is_singly_connected(&self) -> bool {
        matches!(self, Verdict::SinglyConnected)
    }

    pub fn witness(&self) -> Option<&ScWitness> {
        match self {
            Verdict::SinglyConnected => None,
            Verdict::NotSinglyConnected(w) => Some(w),
        }
    }
}

/// Error carrying the offending path pair when an operation requires a
/// singly connected input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotSinglyConnected(pub ScWitness);

impl fmt::Display for NotSinglyConnected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "two directed paths from {} to {}",
            self.0.s, self.0.t
        )
    }
}

impl std::error::Error for NotSinglyConnected {}

/// Decides single connectivity in O(n (n + m)) time.
///
/// One depth-first search per source: a scanned arc into a finished (black)
/// vertex is a forward or cross arc, and exactly those arcs merge two
/// distinct paths from the source — the tree path to the arc's head versus
/// the tree path to its tail plus the arc. Arcs into gray vertices are back
/// arcs; the cycles they close never add a second path between a pair.
pub fn check_singly_connected(d: &DirectedGraph) -> Verdict {
    let n = d.n();
    // Colors: 0 white, 1 gray (on stack), 2 black (finished).
    let mut color = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        color.iter_mut().for_each(|c| *c = 0);
        color[s] = 1;
        parent[s] = usize::MAX;
        let mut stack: Vec<(usize, usize)> = vec![(s, 0)];
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if *next == d.out(u).len() {
                color[u] = 2;
                stack.pop();
                continue;
            }
            let v = d.out(u)[*next];
            *next += 1;
            match color[v] {
                0 => {
                    color[v] = 1;
                    parent[v] = u;
                    stack.push((v, 0));
                }
                1 => {} // back arc: allowed
                _ => {
                    // Forward or cross arc (u, v): two paths s -> v.
                    let path1 = tree_path(&parent, s, v);
                    let mut path2 = tree_path(&parent, s, u);
                    path2.push(v);
                    return Verdict::NotSinglyConnected(ScWitness {
                        s,
                        t: v,
                        path1,
                        path2,
                    });
                }
            }
        }
    }
    Verdict::SinglyConnected
}

fn tree_path(parent: &[usize], s: usize, v: usize) -> Vec<usize> {
    let mut path = vec![v];
    let mut cur = v;
    while cur != s {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Checks that a witness is two genuinely distinct simple s-to-t paths.
pub fn verify_witness(d: &DirectedGraph, w: &ScWitness) -> bool {
    let ok_path = |p: &[usize]| {
        if p.len() < 2 || p[0] != w.s || *p.last().unwrap() != w.t {
            return false;
        }
        let mut sorted = p.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == p.len() && p.windows(2).all(|ab| d.has_arc(ab[0], ab[1]))
    };
    w.s != w.t && w.path1 != w.path2 && ok_path(&w.path1) && ok_path(&w.path2)
}

/// Independent oracle: single connectivity via bounded maximum flow.
///
/// If some pair has two distinct paths, follow both until they first
/// diverge (x) and take the first vertex after x that the diverging
/// segments share again (y): the two x-to-y segments are internally
/// vertex-disjoint. Hence the digraph fails single connectivity iff some
/// ordered pair admits two internally vertex-disjoint paths, which is
/// exactly a vertex-capacitated max flow of at least 2. Each vertex w is
/// split into w_in -> w_out of capacity 1; flow is sent from x_out to
/// y_in, leaving the endpoints uncapped.
pub fn oracle_singly_connected_flow(d: &DirectedGraph) -> bool {
    let n = d.n();
    for s in 0..n {
        for t in 0..n {
            if s != t && split_flow_at_least_two(d, s, t) {
                return false;
            }
        }
    }
    true
}

fn split_flow_at_least_two(d: &DirectedGraph, s: usize, t: usize) -> bool {
    // Node ids: in(w) = 2w, out(w) = 2w + 1. Arcs hold residual capacity;
    // each has its reverse at index ^ 1.
    let n = d.n();
    let mut cap: Vec<u32> = Vec::new();
    let mut head: Vec<usize> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let push_arc = |adj: &mut Vec<Vec<usize>>,
                        cap: &mut Vec<u32>,
                        head: &mut Vec<usize>,
                        a: usize,
                        b: usize,
                        c: u32| {
        adj[a].push(cap.len());
        head.push(b);
        cap.push(c);
        adj[b].push(cap.len());
        head.push(a);
        cap.push(0);
    };
    for w in 0..n {
        push_arc(&mut adj, &mut cap, &mut head, 2 * w, 2 * w + 1, 1);
    }
    for &(a, b) in d.arcs() {
        push_arc(&mut adj, &mut cap, &mut head, 2 * a + 1, 2 * b, 1);
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    while flow < 2 {
        // BFS for an augmenting path in the residual network.
        let mut pred: Vec<usize> = vec![usize::MAX; 2 * n]; // arc used to reach node
        let mut seen = vec![false; 2 * n];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        'bfs: while let Some(u) = queue.pop_front() {
            for &e in &adj[u] {
                if cap[e] > 0 && !seen[head[e]] {
                    seen[head[e]] = true;
                    pred[head[e]] = e;
                    if head[e] == sink {
                        break 'bfs;
                    }
                    queue.push_back(head[e]);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut v = sink;
        while v != source {
            let e = pred[v];
            cap[e] -= 1;
            cap[e ^ 1] += 1;
            v = head[e ^ 1];
        }
        flow += 1;
    }
    true
}

/// Mask-based single-connectivity test for digraphs on at most 64 vertices,
/// given per-vertex out-neighbor bitmasks. Same DFS criterion as
/// [`check_singly_connected`], tuned for exhaustive enumeration loops.
pub fn is_sc_bitmask(out: &[u64]) -> bool {
    let n = out.len();
    debug_assert!(n <= 64);
    let mut stack = [(0usize, 0u64); 64];
    for s in 0..n {
        let mut gray: u64 = 1 << s;
        let mut black: u64 = 0;
        let mut sp = 1;
        stack[0] = (s, out[s]);
        while sp > 0 {
            let (u, rem) = &mut stack[sp - 1];
            if *rem == 0 {
                gray &= !(1u64 << *u);
                black |= 1u64 << *u;
                sp -= 1;
                continue;
            }
            let v = rem.trailing_zeros() as usize;
            *rem &= *rem - 1;
            if black >> v & 1 == 1 {
                return false;
            }
            if gray >> v & 1 == 1 {
                continue;
            }
            gray |= 1 << v;
            stack[sp] = (v, out[v]);
            sp += 1;
        }
    }
    true
}

/// Rewrites a singly connected digraph until no directed cycle of length
/// at least 4 remains, preserving single connectivity throughout.
///
/// While a long cycle v1 v2 ... vk (k >= 4) exists, reversing the arcs
/// (v1, v2) and (v3, v4) keeps the digraph singly connected and strictly
/// decreases the number of directed cycles, so the loop terminates. The
/// rewritten cycle is chosen deterministically: among all cycles (each
/// rotated to start at its minimum vertex), the lexicographically least
/// (length, vertex sequence).
pub fn eliminate_long_cycles(d: &DirectedGraph) -> Result<DirectedGraph, NotSinglyConnected> {
    eliminate_long_cycles_detailed(d).map(|(g, _)| g)
}

/// As [`eliminate_long_cycles`], also reporting the number of cycle
/// rewrites performed.
pub fn eliminate_long_cycles_detailed(
    d: &DirectedGraph,
) -> Result<(DirectedGraph, usize), NotSinglyConnected> {
    if let Verdict::NotSinglyConnected(w) = check_singly_connected(d) {
        return Err(NotSinglyConnected(w));
    }
    let mut current = d.clone();
    let mut rewrites = 0usize;
    while let Some(cycle) = least_long_cycle(&current) {
        let (v1, v2) = (cycle[0], cycle[1]);
        let (v3, v4) = (cycle[2], cycle[3]);
        let arcs: Vec<(usize, usize)> = current
            .arcs()
            .iter()
            .map(|&(a, b)| {
                if (a, b) == (v1, v2) || (a, b) == (v3, v4) {
                    (b, a)
                } else {
                    (a, b)
                }
            })
            .collect();
        // In a singly connected digraph the reversed arcs lie on a cycle of
        // length >= 3, so their antiparallel twins cannot already exist.
        current = DirectedGraph::new(current.n(), &arcs)
            .expect("reversal cannot duplicate an arc here");
        rewrites += 1;
        debug_assert!(check_singly_connected(&current).is_singly_connected());
    }
    Ok((current, rewrites))
}

/// The least (length, sequence) directed cycle of length >= 4, rotated to
/// start at its minimum vertex. In a singly connected digraph every arc
/// lies on at most one cycle: the arc (u, v) plus the unique v-to-u path.
fn least_long_cycle(d: &DirectedGraph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for &(u, v) in d.arcs() {
        if let Some(mut path) = bfs_path(d, v, u) {
            // path = v .. u has as many vertices as the cycle u -> v -> .. -> u.
            if path.len() < 4 {
                continue; // cycle length < 4
            }
            path.pop(); // drop u
            let mut cycle = vec![u];
            cycle.extend(path);
            let rot = canonical_rotation(&cycle);
            let better = match &best {
                None => true,
                Some(b) => (rot.len(), &rot) < (b.len(), b),
            };
            if better {
                best = Some(rot);
            }
        }
    }
    best
}

fn canonical_rotation(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    (0..k).map(|i| cycle[(start + i) % k]).collect()
}

fn bfs_path(d: &DirectedGraph, from: usize, to: usize) -> Option<Vec<usize>> {
    let n = d.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in d.out(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}
