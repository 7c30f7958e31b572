//! Exact decision procedures for sc-orientability.
//!
//! Pipeline of [`decide_sc_orientable`]:
//! 1. [`preprocess`]: refuse graphs with a diamond or house subgraph and
//!    contract triangles until none remain, recording a transcript.
//! 2. Orient each biconnected block of the reduced graph independently by
//!    backtracking over acyclic orientations with an exact
//!    single-connectivity prune.
//! 3. [`lift_orientation`]: replay the transcript backwards, restoring each
//!    contracted triangle as a directed 3-cycle.
//!
//! Block independence: an orientation of a graph is singly connected iff
//! its restriction to every biconnected block is. Restrictions of singly
//! connected digraphs are singly connected; conversely two distinct
//! directed s-t paths traverse the same cut vertices in the same order, so
//! they must differ between two consecutive ones — inside a single block.
//!
//! Acyclic completeness: rewriting long directed cycles (see
//! `check::eliminate_long_cycles`) only reverses arcs, so whenever a
//! triangle-free block has an sc-orientation at all, it also has one whose
//! digraph is acyclic (cycle lengths 1..3 are impossible there). Searching
//! acyclic orientations only is therefore complete after preprocessing.

use crate::check::{check_singly_connected, is_sc_bitmask};
use crate::graph::patterns::{find_pattern, find_triangle, PatternKind};
use crate::graph::{biconnected_blocks, contract, Orientation, UndirectedGraph};
use std::fmt;

// ---- preprocessing ----

/// A subgraph certifying that no sc-orientation exists.
///
/// Single connectivity is inherited by sub-digraphs (two equal-endpoint
/// paths in an oriented subgraph are two such paths in the supergraph), and
/// neither the diamond nor the house admits an sc-orientation, so finding
/// either as a subgraph — induced or not — refutes the whole graph. (K4
/// contains a diamond subgraph but no induced one, and K4 indeed has no
/// sc-orientation.)
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// Two triangles sharing an edge: vertices as in the diamond pattern.
    Diamond([usize; 4]),
    /// A square with a roof triangle: vertices as in the house pattern.
    House([usize; 5]),
}

/// One triangle contraction applied during preprocessing.
#[derive(Debug, Clone)]
pub struct ContractionRecord {
    pub graph_before: UndirectedGraph,
    /// The contracted triangle, ascending.
    pub triangle: [usize; 3],
    /// Vertex map of the contraction (old id to new id).
    pub map: Vec<usize>,
}

/// Result of [`preprocess`].
#[derive(Debug, Clone)]
pub struct PreprocessResult {
    pub transcript: Vec<ContractionRecord>,
    pub status: PreprocessStatus,
}

#[derive(Debug, Clone)]
pub enum PreprocessStatus {
    /// A diamond or house subgraph was found, so no sc-orientation exists.
    /// The obstruction vertices refer to `graph`, the state reached after
    /// applying `transcript`; refusing there refutes the input as well,
    /// because each earlier contraction preserved sc-orientability.
    EarlyNo {
        graph: UndirectedGraph,
        obstruction: Obstruction,
    },
    /// `graph` is triangle-free and diamond/house-subgraph-free, and is
    /// sc-orientable iff the input is.
    Reduced { graph: UndirectedGraph },
}

impl PreprocessResult {
    pub fn is_early_no(&self) -> bool {
        matches!(self.status, PreprocessStatus::EarlyNo { .. })
    }
}

/// Shrinks a graph for the exact search.
///
/// Contracting a triangle of a diamond/house-subgraph-free graph preserves
/// sc-orientability in both directions; the subgraph-freeness guarantees
/// that no outside vertex touches two triangle corners, which keeps the
/// reverse replay unambiguous. Each round first scans for the two
/// obstructions (contraction can create new ones) and then contracts some
/// triangle, so the loop ends in a refusal or a triangle-free graph.
pub fn preprocess(g: &UndirectedGraph) -> PreprocessResult {
    let mut current = g.clone();
    let mut transcript = Vec::new();
    loop {
        if let Some(emb) = find_pattern(&current, PatternKind::Diamond, false) {
            let vertices: [usize; 4] = emb.vertices[..].try_into().unwrap();
            return PreprocessResult {
                transcript,
                status: PreprocessStatus::EarlyNo {
                    graph: current,
                    obstruction: Obstruction::Diamond(vertices),
                },
            };
        }
        if let Some(emb) = find_pattern(&current, PatternKind::House, false) {
            let vertices: [usize; 5] = emb.vertices[..].try_into().unwrap();
            return PreprocessResult {
                transcript,
                status: PreprocessStatus::EarlyNo {
                    graph: current,
                    obstruction: Obstruction::House(vertices),
                },
            };
        }
        let Some(mut tri) = find_triangle(&current) else {
            return PreprocessResult {
                transcript,
                status: PreprocessStatus::Reduced { graph: current },
            };
        };
        tri.sort_unstable();
        let (next, map) = contract(&current, &tri).expect("a triangle is connected");
        transcript.push(ContractionRecord {
            graph_before: current,
            triangle: tri,
            map,
        });
        current = next;
    }
}

// ---- transcript replay ----

/// The transcript does not match the graphs or orientation it is applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InconsistentTranscript {
    pub reason: String,
}

impl fmt::Display for InconsistentTranscript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inconsistent contraction transcript: {}", self.reason)
    }
}

impl std::error::Error for InconsistentTranscript {}

fn inconsistent<T>(reason: impl Into<String>) -> Result<T, InconsistentTranscript> {
    Err(InconsistentTranscript {
        reason: reason.into(),
    })
}

/// Replays a contraction transcript backwards, turning an orientation of
/// the fully reduced graph into one of the original graph. Every restored
/// triangle is oriented as the directed cycle min -> mid -> max -> min;
/// all other edges copy the direction of their contracted image.
pub fn lift_orientation(
    transcript: &[ContractionRecord],
    reduced: &UndirectedGraph,
    orientation: &Orientation,
) -> Result<Orientation, InconsistentTranscript> {
    if orientation.len() != reduced.m() {
        return inconsistent("orientation does not fit the reduced graph");
    }
    let mut graph = reduced.clone();
    let mut o = orientation.clone();
    for rec in transcript.iter().rev() {
        (graph, o) = lift_one(rec, &graph, &o)?;
    }
    Ok(o)
}

fn lift_one(
    rec: &ContractionRecord,
    after: &UndirectedGraph,
    o: &Orientation,
) -> Result<(UndirectedGraph, Orientation), InconsistentTranscript> {
    let before = &rec.graph_before;
    let mut tri = rec.triangle;
    tri.sort_unstable();
    let [x, y, z] = tri;
    if z >= before.n()
        || !(before.has_edge(x, y) && before.has_edge(y, z) && before.has_edge(x, z))
    {
        return inconsistent("marked vertices do not form a triangle");
    }
    let (expected_after, map) = match contract(before, &tri) {
        Ok(pair) => pair,
        Err(e) => return inconsistent(format!("contraction replay failed: {e}")),
    };
    if map != rec.map {
        return inconsistent("contraction map differs from the recorded one");
    }
    if &expected_after != after {
        return inconsistent("contracted graph differs from the recorded one");
    }
    // A vertex adjacent to two triangle corners would make two old edges
    // collapse onto one contracted edge, leaving the lift ambiguous.
    for v in 0..before.n() {
        if v == x || v == y || v == z {
            continue;
        }
        let hits = [x, y, z].iter().filter(|&&t| before.has_edge(v, t)).count();
        if hits >= 2 {
            return inconsistent("a vertex outside the triangle touches two of its corners");
        }
    }
    let mut flips = vec![false; before.m()];
    for (i, &(a, b)) in before.edges().iter().enumerate() {
        let (na, nb) = (map[a], map[b]);
        if na == nb {
            // Triangle edge; cycle x -> y -> z -> x flips exactly (x, z).
            flips[i] = (a, b) == (x, z);
        } else {
            let Some(e) = after.edge_index(na, nb) else {
                return inconsistent("an edge is missing from the contracted graph");
            };
            let (tail, _) = o.arc(after, e);
            flips[i] = nb == tail;
        }
    }
    Ok((before.clone(), Orientation::from_flips(flips)))
}

// ---- exact decision ----

/// Search effort counters: `nodes` counts branching decisions, `prunes`
/// counts rejected arc directions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub prunes: u64,
}

#[derive(Debug, Clone)]
pub enum DecideOutcome {
    /// A verified sc-orientation of the input graph.
    Orientable {
        orientation: Orientation,
        stats: SolveStats,
    },
    NotOrientable { stats: SolveStats },
}

impl DecideOutcome {
    pub fn is_orientable(&self) -> bool {
        matches!(self, DecideOutcome::Orientable { .. })
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            DecideOutcome::Orientable { orientation, .. } => Some(orientation),
            DecideOutcome::NotOrientable { .. } => None,
        }
    }

    pub fn stats(&self) -> SolveStats {
        match self {
            DecideOutcome::Orientable { stats, .. } => *stats,
            DecideOutcome::NotOrientable { stats } => *stats,
        }
    }
}

/// Decides whether `g` has an sc-orientation, returning a verified one if
/// so. Exact for every input.
pub fn decide_sc_orientable(g: &UndirectedGraph) -> DecideOutcome {
    let mut stats = SolveStats::default();
    let pre = preprocess(g);
    let reduced = match pre.status {
        PreprocessStatus::EarlyNo { .. } => return DecideOutcome::NotOrientable { stats },
        PreprocessStatus::Reduced { graph } => graph,
    };
    let decomposition = biconnected_blocks(&reduced);
    let mut flips = vec![false; reduced.m()];
    for block in &decomposition.blocks {
        if block.len() < 2 {
            continue;
        }
        let (local, back) = reduced.induced_subgraph(block);
        let Some(arcs) = solve_block(&local, &mut stats) else {
            return DecideOutcome::NotOrientable { stats };
        };
        for (tail, head) in arcs {
            let (gt, gh) = (back[tail], back[head]);
            let ge = reduced
                .edge_index(gt, gh)
                .expect("block edges exist in the reduced graph");
            flips[ge] = gt > gh;
        }
    }
    let reduced_orientation = Orientation::from_flips(flips);
    let orientation = lift_orientation(&pre.transcript, &reduced, &reduced_orientation)
        .expect("preprocessing produces a consistent transcript");
    let oriented = orientation.to_digraph(g);
    assert!(
        check_singly_connected(&oriented).is_singly_connected(),
        "internal error: solver produced an unverifiable orientation"
    );
    DecideOutcome::Orientable { orientation, stats }
}

// ---- per-block search ----

/// Finds an acyclic sc-orientation of a connected triangle-free block, as
/// (tail, head) per local edge index, or proves there is none.
fn solve_block(local: &UndirectedGraph, stats: &mut SolveStats) -> Option<Vec<(usize, usize)>> {
    let mut searcher = BlockSearch::new(local, stats);
    if !searcher.run() {
        return None;
    }
    Some(
        (0..local.m())
            .map(|e| searcher.assigned[e].expect("search assigned every edge"))
            .collect(),
    )
}

struct TrailEntry {
    edge: usize,
    reach_rows: Vec<(usize, Vec<u64>)>,
    coreach_rows: Vec<(usize, Vec<u64>)>,
}

struct BlockSearch<'a> {
    /// reach[v] = bitset of vertices reachable from v (including v).
    reach: Vec<Vec<u64>>,
    /// coreach[v] = bitset of vertices that reach v (including v).
    coreach: Vec<Vec<u64>>,
    /// Decision order of edge indices (breadth-first closure order).
    order: Vec<usize>,
    /// Edge endpoints, earlier BFS vertex first.
    pair: Vec<(usize, usize)>,
    assigned: Vec<Option<(usize, usize)>>,
    touched: Vec<u32>,
    trail: Vec<TrailEntry>,
    stats: &'a mut SolveStats,
}

impl<'a> BlockSearch<'a> {
    fn new(g: &'a UndirectedGraph, stats: &'a mut SolveStats) -> Self {
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut reach = vec![vec![0u64; words]; n];
        let mut coreach = vec![vec![0u64; words]; n];
        for v in 0..n {
            set_bit(&mut reach[v], v);
            set_bit(&mut coreach[v], v);
        }
        // Breadth-first order from the least vertex, neighbors ascending:
        // sorting edges by (later endpoint, earlier endpoint) then makes
        // every prefix a connected subgraph, so forcing cascades stay local.
        let mut bfs_index = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        bfs_index[0] = 0;
        let mut next_index = 1;
        while let Some(u) = queue.pop_front() {
            for &w in g.adj(u) {
                if bfs_index[w] == usize::MAX {
                    bfs_index[w] = next_index;
                    next_index += 1;
                    queue.push_back(w);
                }
            }
        }
        debug_assert!(bfs_index.iter().all(|&i| i != usize::MAX), "block connected");
        let mut order: Vec<usize> = (0..g.m()).collect();
        let key = |e: usize| {
            let (u, v) = g.edges()[e];
            let (a, b) = (bfs_index[u], bfs_index[v]);
            (a.max(b), a.min(b))
        };
        order.sort_by_key(|&e| key(e));
        let pair: Vec<(usize, usize)> = (0..g.m())
            .map(|e| {
                let (u, v) = g.edges()[e];
                if bfs_index[u] < bfs_index[v] {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect();
        BlockSearch {
            reach,
            coreach,
            order,
            pair,
            assigned: vec![None; g.m()],
            touched: vec![0; n],
            trail: Vec::new(),
            stats,
        }
    }

    /// Adding arc (tail, head) keeps the state an acyclic prefix of an
    /// sc-orientation iff head does not already reach tail (no directed
    /// cycle) and no vertex reaching tail already reaches any vertex that
    /// head reaches (no second path). The two sides are vertex-disjoint
    /// once the cycle test passes, which makes the rule exact.
    fn arc_allowed(&mut self, tail: usize, head: usize) -> bool {
        if test_bit(&self.reach[head], tail) {
            self.stats.prunes += 1;
            return false;
        }
        for s in iter_ones(&self.coreach[tail]) {
            if intersects(&self.reach[s], &self.reach[head]) {
                self.stats.prunes += 1;
                return false;
            }
        }
        true
    }

    fn commit(&mut self, e: usize, tail: usize, head: usize) {
        let head_reach = self.reach[head].clone();
        let tail_coreach = self.coreach[tail].clone();
        let mut entry = TrailEntry {
            edge: e,
            reach_rows: Vec::new(),
            coreach_rows: Vec::new(),
        };
        for s in iter_ones(&tail_coreach) {
            let row = &mut self.reach[s];
            if !covers(row, &head_reach) {
                entry.reach_rows.push((s, row.clone()));
                or_into(row, &head_reach);
            }
        }
        for t in iter_ones(&head_reach) {
            let row = &mut self.coreach[t];
            if !covers(row, &tail_coreach) {
                entry.coreach_rows.push((t, row.clone()));
                or_into(row, &tail_coreach);
            }
        }
        self.assigned[e] = Some((tail, head));
        self.touched[tail] += 1;
        self.touched[head] += 1;
        self.trail.push(entry);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let entry = self.trail.pop().unwrap();
            for (s, row) in entry.reach_rows {
                self.reach[s] = row;
            }
            for (t, row) in entry.coreach_rows {
                self.coreach[t] = row;
            }
            let (tail, head) = self.assigned[entry.edge]
                .take()
                .expect("trail entry for an assigned edge");
            self.touched[tail] -= 1;
            self.touched[head] -= 1;
        }
    }

    /// Commits every edge whose direction is forced, looping to a fixpoint.
    /// Only edges with both endpoints already incident to an assigned edge
    /// are inspected. Rejecting a direction is sound forever (added arcs
    /// only add paths), so a doubly-rejected edge refutes the whole branch.
    fn propagate(&mut self) -> bool {
        loop {
            let mut progressed = false;
            for i in 0..self.order.len() {
                let e = self.order[i];
                if self.assigned[e].is_some() {
                    continue;
                }
                let (p, q) = self.pair[e];
                if self.touched[p] == 0 || self.touched[q] == 0 {
                    continue;
                }
                let forward = self.arc_allowed(p, q);
                let backward = self.arc_allowed(q, p);
                match (forward, backward) {
                    (false, false) => return false,
                    (true, false) => {
                        self.commit(e, p, q);
                        progressed = true;
                    }
                    (false, true) => {
                        self.commit(e, q, p);
                        progressed = true;
                    }
                    (true, true) => {}
                }
            }
            if !progressed {
                return true;
            }
        }
    }

    fn run(&mut self) -> bool {
        let Some(&e0) = self.order.first() else {
            return true;
        };
        // Reversing the whole block maps sc-orientations to
        // sc-orientations, so the first edge's direction can be fixed.
        let (p, q) = self.pair[e0];
        if !self.arc_allowed(p, q) {
            return false;
        }
        self.commit(e0, p, q);
        if !self.propagate() {
            return false;
        }
        self.search()
    }

    fn search(&mut self) -> bool {
        let next = self
            .order
            .iter()
            .copied()
            .find(|&e| self.assigned[e].is_none());
        let Some(e) = next else {
            return true;
        };
        let (p, q) = self.pair[e];
        self.stats.nodes += 1;
        for (tail, head) in [(p, q), (q, p)] {
            let mark = self.trail.len();
            if self.arc_allowed(tail, head) {
                self.commit(e, tail, head);
                if self.propagate() && self.search() {
                    return true;
                }
            }
            self.undo_to(mark);
        }
        false
    }
}

// ---- bitset helpers ----

fn test_bit(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Does `a` already contain every bit of `b`?
fn covers(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| y & !x == 0)
}

fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

fn iter_ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &bits)| {
        std::iter::successors((bits != 0).then_some(bits), |&b| {
            let rest = b & (b - 1);
            (rest != 0).then_some(rest)
        })
        .map(move |b| w * 64 + b.trailing_zeros() as usize)
    })
}

// ---- exhaustive baseline ----

/// Edge budget for the exhaustive enumerators.
pub const NAIVE_EDGE_LIMIT: usize = 24;

/// The graph exceeds the exhaustive-enumeration budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TooLarge {
    pub edges: usize,
    pub limit: usize,
}

impl fmt::Display for TooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph has {} edges; exhaustive enumeration is capped at {}",
            self.edges, self.limit
        )
    }
}

impl std::error::Error for TooLarge {}

/// Brute-force baseline: tries orientations exhaustively (up to reversal)
/// and returns the first sc-orientation found, if any.
pub fn naive_sc_orientable(g: &UndirectedGraph) -> Result<Option<Orientation>, TooLarge> {
    enumerate_sc(g).map(|(first, _)| first)
}

/// Counts all sc-orientations of `g` exhaustively. The edgeless graph has
/// exactly one (empty) orientation.
pub fn count_sc_orientations(g: &UndirectedGraph) -> Result<u64, TooLarge> {
    enumerate_sc(g).map(|(_, count)| count)
}

/// Visits every sc-orientation of `g` exactly once, in mask order over the
/// half-space with bit 0 clear, each immediately followed by its reversal.
/// Same budget guard as the other exhaustive operations.
pub(crate) fn for_each_sc_orientation(
    g: &UndirectedGraph,
    mut f: impl FnMut(&Orientation),
) -> Result<(), TooLarge> {
    let m = g.m();
    if m > NAIVE_EDGE_LIMIT {
        return Err(TooLarge {
            edges: m,
            limit: NAIVE_EDGE_LIMIT,
        });
    }
    if m == 0 {
        f(&Orientation::forward(0));
        return Ok(());
    }
    let all = if m == 64 { u64::MAX } else { (1 << m) - 1 };
    scan_sc_masks(g, |mask| {
        f(&Orientation::from_mask(m, mask));
        f(&Orientation::from_mask(m, mask ^ all));
    });
    Ok(())
}

/// Shared enumeration core. Reversal maps sc-orientations onto
/// sc-orientations and flips every bit, so the masks with bit 0 clear hit
/// exactly one of each reversal pair: scanning half the space and doubling
/// the tally is exact, and any hit proves orientability.
fn enumerate_sc(g: &UndirectedGraph) -> Result<(Option<Orientation>, u64), TooLarge> {
    let m = g.m();
    if m > NAIVE_EDGE_LIMIT {
        return Err(TooLarge {
            edges: m,
            limit: NAIVE_EDGE_LIMIT,
        });
    }
    if m == 0 {
        return Ok((Some(Orientation::forward(0)), 1));
    }
    let mut first: Option<u64> = None;
    let mut count = 0u64;
    scan_sc_masks(g, |mask| {
        count += 2;
        if first.is_none() {
            first = Some(mask);
        }
    });
    Ok((first.map(|mask| Orientation::from_mask(m, mask)), count))
}

/// Walks the orientation masks of `g` with bit 0 clear (one per reversal
/// pair) and reports those whose digraph is singly connected. Requires
/// `1 <= m <= 64`.
fn scan_sc_masks(g: &UndirectedGraph, mut report: impl FnMut(u64)) {
    let m = g.m();
    // Isolated vertices never matter; compact the rest below 64 ids.
    let active: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in active.iter().enumerate() {
        local[v] = i;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (local[u], local[v]))
        .collect();
    let mut out = vec![0u64; active.len()];
    for &(u, v) in &edges {
        out[u] |= 1 << v;
    }
    let mut prev = 0u64;
    for half in 0u64..1 << (m - 1) {
        let mask = half << 1;
        let mut delta = mask ^ prev;
        prev = mask;
        while delta != 0 {
            let i = delta.trailing_zeros() as usize;
            delta &= delta - 1;
            let (u, v) = edges[i];
            if mask >> i & 1 == 1 {
                out[u] &= !(1 << v);
                out[v] |= 1 << u;
            } else {
                out[v] &= !(1 << u);
                out[u] |= 1 << v;
            }
        }
        if is_sc_bitmask(&out) {
            report(mask);
        }
    }
}
