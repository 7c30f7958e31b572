//! Structured instance generators: a catalog of named graphs, the
//! triangle-replacement transform, coupling gadgets with cyclic gluing,
//! and a 3-SAT-to-orientability reduction (see [`reduce`]).

pub mod cnf;
pub mod reduce;

pub use cnf::{parse_dimacs, to_dimacs, ClauseOrder, CnfError, CnfFormula};
pub use reduce::{
    decode_assignment, orient_from_assignment, reduce_3sat, ClauseEdges, NetworkId, Parity,
    ReduceParams, ReductionArtifacts,
};

use crate::graph::coloring::{chromatic_number, is_k_colorable, ColoringOutcome};
use crate::graph::patterns::{pattern_graph, PatternKind};
use crate::graph::UndirectedGraph;
use crate::solve::{for_each_sc_orientation, TooLarge};
use std::fmt;

/// A generator parameter outside its documented range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadParameter {
    pub reason: String,
}

impl BadParameter {
    pub(crate) fn new(reason: impl Into<String>) -> Self {
        BadParameter {
            reason: reason.into(),
        }
    }
}

impl fmt::Display for BadParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad parameter: {}", self.reason)
    }
}

impl std::error::Error for BadParameter {}

/// The catalog of named graphs the generator knows how to build.
///
/// `Ladder { rungs }` is the 2-by-`rungs` grid with rung `i` on vertices
/// `(2i, 2i + 1)`. `ExtendedLadder` attaches one extra square per listed
/// `(step, twist)` pair onto that rung: fresh vertices `p, q` (numbered in
/// listing order after the ladder) carry the new step edge `p-q`, with `p`
/// over the even rung endpoint when untwisted and over the odd one when
/// twisted. `LadderCycle { len }` is the cylinder on two `len`-rings
/// `0..len` and `len..2 * len` joined by spokes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedGraph {
    Diamond,
    House,
    Gem,
    Domino,
    Grid { rows: usize, cols: usize },
    Cycle { len: usize },
    Ladder { rungs: usize },
    ExtendedLadder { rungs: usize, attachments: Vec<(usize, bool)> },
    LadderCycle { len: usize },
}

/// Builds a graph from the catalog, validating size parameters.
pub fn make_named_graph(spec: &NamedGraph) -> Result<UndirectedGraph, BadParameter> {
    match spec {
        NamedGraph::Diamond => Ok(pattern_graph(PatternKind::Diamond)),
        NamedGraph::House => Ok(pattern_graph(PatternKind::House)),
        NamedGraph::Gem => Ok(pattern_graph(PatternKind::Gem)),
        NamedGraph::Domino => Ok(pattern_graph(PatternKind::Domino)),
        NamedGraph::Grid { rows, cols } => {
            if *rows == 0 || *cols == 0 {
                return Err(BadParameter::new("grid dimensions must be positive"));
            }
            Ok(pattern_graph(PatternKind::Grid(*rows, *cols)))
        }
        NamedGraph::Cycle { len } => {
            if *len < 3 {
                return Err(BadParameter::new("a cycle needs at least 3 vertices"));
            }
            let edges: Vec<(usize, usize)> = (0..*len).map(|i| (i, (i + 1) % len)).collect();
            Ok(UndirectedGraph::new(*len, &edges).unwrap())
        }
        NamedGraph::Ladder { rungs } => {
            if *rungs < 2 {
                return Err(BadParameter::new("a ladder needs at least 2 rungs"));
            }
            Ok(pattern_graph(PatternKind::Grid(*rungs, 2)))
        }
        NamedGraph::ExtendedLadder { rungs, attachments } => {
            let base = make_named_graph(&NamedGraph::Ladder { rungs: *rungs })?;
            let mut edges = base.edges().to_vec();
            for (j, &(step, twist)) in attachments.iter().enumerate() {
                if step >= *rungs {
                    return Err(BadParameter::new(format!(
                        "attachment step {step} out of range for {rungs} rungs"
                    )));
                }
                let (u, w) = (2 * step, 2 * step + 1);
                let (p, q) = (2 * rungs + 2 * j, 2 * rungs + 2 * j + 1);
                edges.push((p, q));
                if twist {
                    edges.push((u, q));
                    edges.push((p, w));
                } else {
                    edges.push((u, p));
                    edges.push((q, w));
                }
            }
            UndirectedGraph::new(2 * rungs + 2 * attachments.len(), &edges)
                .map_err(|e| BadParameter::new(format!("attachments collide: {e}")))
        }
        NamedGraph::LadderCycle { len } => {
            if *len < 3 {
                return Err(BadParameter::new(
                    "a ladder cycle needs rings of at least 3 vertices",
                ));
            }
            let mut edges = Vec::with_capacity(3 * len);
            for j in 0..*len {
                let next = (j + 1) % len;
                edges.push((j, next));
                edges.push((len + j, len + next));
                edges.push((j, len + j));
            }
            Ok(UndirectedGraph::new(2 * len, &edges).unwrap())
        }
    }
}

/// The marked step edges of `LadderCycle { len }` for even `len`: the
/// alternate first-ring arcs `(0,1), (2,3), ...`. Their orientations move
/// in lockstep across every sc-orientation of the cylinder.
pub fn laddercycle_steps(len: usize) -> Result<Vec<(usize, usize)>, BadParameter> {
    if len < 4 || len % 2 != 0 {
        return Err(BadParameter::new(
            "marked steps need an even ring of at least 4 vertices",
        ));
    }
    Ok((0..len / 2).map(|i| (2 * i, 2 * i + 1)).collect())
}

/// Replaces every edge `{u, v}` (with `u` the smaller endpoint) by a path
/// `u - w - v` plus a triangle `u, w, w'` on fresh vertices `w = n + 2i`,
/// `w' = n + 2i + 1` for edge index `i`.
///
/// The result has the same sc-orientability verdict as the input: the
/// fresh triangles are the only triangles, each collapses back onto `u` by
/// the triangle-contraction step of the solver's preprocessing, and the
/// full sequence of collapses restores the input graph exactly. With at
/// least one edge the result is 3-chromatic with clique number 3.
pub fn perfectify(g: &UndirectedGraph) -> UndirectedGraph {
    let n = g.n();
    let mut edges = Vec::with_capacity(4 * g.m());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let w = n + 2 * i;
        let w2 = n + 2 * i + 1;
        edges.push((u, w));
        edges.push((w, v));
        edges.push((u, w2));
        edges.push((w, w2));
    }
    UndirectedGraph::new(n + 2 * g.m(), &edges).expect("fresh midpoints cannot collide")
}

/// Errors from coupling-gadget construction and gluing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GlueError {
    /// A marked pair that is not an edge of the gadget graph.
    NotAnEdge { pair: (usize, usize) },
    /// The two marked edges share the vertex reported.
    OverlappingMarkedEdges { shared: usize },
    /// Cyclic gluing needs at least two copies.
    TooFewCopies { copies: usize },
    /// The girth target must be at least 3.
    BadGirthTarget { girth: usize },
}

impl fmt::Display for GlueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlueError::NotAnEdge { pair: (a, b) } => {
                write!(f, "marked pair ({a}, {b}) is not an edge")
            }
            GlueError::OverlappingMarkedEdges { shared } => {
                write!(f, "marked edges share vertex {shared}")
            }
            GlueError::TooFewCopies { copies } => {
                write!(f, "cyclic gluing needs at least 2 copies, got {copies}")
            }
            GlueError::BadGirthTarget { girth } => {
                write!(f, "girth target must be at least 3, got {girth}")
            }
        }
    }
}

impl std::error::Error for GlueError {}

/// A graph with two ordered marked edges `(a1, b1)` and `(a2, b2)`. The
/// orientations of the marked edges are *coupled* when every
/// sc-orientation either directs both `a -> b` or both `b -> a`; the order
/// within each pair therefore matters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplingGadget {
    graph: UndirectedGraph,
    pair1: (usize, usize),
    pair2: (usize, usize),
}

impl CouplingGadget {
    /// Validates that both pairs are edges and share no vertex.
    pub fn new(
        graph: UndirectedGraph,
        pair1: (usize, usize),
        pair2: (usize, usize),
    ) -> Result<Self, GlueError> {
        for pair in [pair1, pair2] {
            if !graph.has_edge(pair.0, pair.1) {
                return Err(GlueError::NotAnEdge { pair });
            }
        }
        for a in [pair1.0, pair1.1] {
            if a == pair2.0 || a == pair2.1 {
                return Err(GlueError::OverlappingMarkedEdges { shared: a });
            }
        }
        Ok(CouplingGadget {
            graph,
            pair1,
            pair2,
        })
    }

    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    pub fn pair1(&self) -> (usize, usize) {
        self.pair1
    }

    pub fn pair2(&self) -> (usize, usize) {
        self.pair2
    }
}

/// Glues `copies` copies of the gadget in a cycle: the second marked edge
/// of copy `i` is identified with the first marked edge of copy `i + 1`
/// (`a` with `a`, `b` with `b`), and the closing identification back onto
/// copy 0 is straight when `twist` is false or crossed (`a` with `b`) when
/// true. Identified marked edges merge into a single edge, so the result
/// has `copies * (n - 2)` vertices and `copies * (m - 1)` edges. Vertices
/// are renumbered by first appearance in copy-major order.
pub fn glue_cycle(
    h: &CouplingGadget,
    copies: usize,
    twist: bool,
) -> Result<UndirectedGraph, GlueError> {
    if copies < 2 {
        return Err(GlueError::TooFewCopies { copies });
    }
    let n = h.graph.n();
    let slot = |copy: usize, v: usize| copy * n + v;
    let mut parent: Vec<usize> = (0..copies * n).collect();
    fn root(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let (a1, b1) = h.pair1;
    let (a2, b2) = h.pair2;
    for i in 0..copies {
        let j = (i + 1) % copies;
        let (ta, tb) = if i + 1 == copies && twist {
            (b1, a1)
        } else {
            (a1, b1)
        };
        let ra = root(&mut parent, slot(i, a2));
        let rb = root(&mut parent, slot(j, ta));
        parent[ra] = rb;
        let ra = root(&mut parent, slot(i, b2));
        let rb = root(&mut parent, slot(j, tb));
        parent[ra] = rb;
    }
    let mut compact = vec![usize::MAX; copies * n];
    let mut next_id = 0;
    for s in 0..copies * n {
        let r = root(&mut parent, s);
        if compact[r] == usize::MAX {
            compact[r] = next_id;
            next_id += 1;
        }
        compact[s] = compact[r];
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(copies * h.graph.m());
    for i in 0..copies {
        for &(u, v) in h.graph.edges() {
            let (x, y) = (compact[slot(i, u)], compact[slot(i, v)]);
            assert_ne!(x, y, "disjoint marked edges cannot merge to a loop");
            edges.push((x.min(y), x.max(y)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(UndirectedGraph::new(next_id, &edges).expect("identification leaves a simple graph"))
}

/// Builds the non-sc-orientable witness for a coupling gadget: the target
/// girth rounded up to an odd count of copies, glued in a cycle with the
/// one twisted identification.
pub fn glue_coupling_cycle(
    h: &CouplingGadget,
    girth_target: usize,
) -> Result<UndirectedGraph, GlueError> {
    if girth_target < 3 {
        return Err(GlueError::BadGirthTarget {
            girth: girth_target,
        });
    }
    let copies = if girth_target % 2 == 1 {
        girth_target
    } else {
        girth_target + 1
    };
    glue_cycle(h, copies, true)
}

/// Outcome of [`verify_coupling_gadget`]: the gadget's chromatic number
/// and its three defining properties, each checked exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplingReport {
    /// Exact chromatic number of the gadget graph.
    pub chromatic: usize,
    /// Property 1: every sc-orientation directs the two marked edges the
    /// same way relative to their pair order.
    pub forced_agreement: bool,
    /// Property 2: some sc-orientation admits no directed path between the
    /// endpoint sets of the two marked edges, in either direction.
    pub separable: bool,
    /// Property 3: the graph admits optimal colorings realizing both
    /// boundary patterns — one with `c(a1) = c(a2), c(b1) = c(b2)` and one
    /// with `c(a1) = c(b2), c(b1) = c(a2)`.
    pub recolorable: bool,
}

impl CouplingReport {
    pub fn is_coupling_gadget(&self) -> bool {
        self.forced_agreement && self.separable && self.recolorable
    }
}

/// Errors from [`verify_coupling_gadget`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyGadgetError {
    /// The gadget exceeds the exhaustive-enumeration budget.
    TooLarge(TooLarge),
    /// The gadget graph has no sc-orientation at all, so the coupling
    /// properties are vacuous; such graphs are rejected outright.
    NotScOrientable,
}

impl fmt::Display for VerifyGadgetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyGadgetError::TooLarge(t) => t.fmt(f),
            VerifyGadgetError::NotScOrientable => {
                write!(f, "the gadget graph is not sc-orientable")
            }
        }
    }
}

impl std::error::Error for VerifyGadgetError {}

/// Checks the three coupling-gadget properties by enumerating every
/// sc-orientation (properties 1 and 2) and by exact constrained coloring
/// (property 3, via vertex identification at the gadget's chromatic
/// number).
pub fn verify_coupling_gadget(h: &CouplingGadget) -> Result<CouplingReport, VerifyGadgetError> {
    let g = &h.graph;
    let e1 = g
        .edge_index(h.pair1.0, h.pair1.1)
        .expect("validated at construction");
    let e2 = g
        .edge_index(h.pair2.0, h.pair2.1)
        .expect("validated at construction");
    let mut any = false;
    let mut forced_agreement = true;
    let mut separable = false;
    for_each_sc_orientation(g, |o| {
        any = true;
        // `arc` yields (tail, head); compare against the pair order.
        let toward_b1 = o.arc(g, e1) == h.pair1;
        let toward_b2 = o.arc(g, e2) == h.pair2;
        if toward_b1 != toward_b2 {
            forced_agreement = false;
        }
        if !separable {
            let d = o.to_digraph(g);
            let set1 = [h.pair1.0, h.pair1.1];
            let set2 = [h.pair2.0, h.pair2.1];
            if !reaches_any(&d, &set1, &set2) && !reaches_any(&d, &set2, &set1) {
                separable = true;
            }
        }
    })
    .map_err(VerifyGadgetError::TooLarge)?;
    if !any {
        return Err(VerifyGadgetError::NotScOrientable);
    }
    let chromatic = match chromatic_number(g, g.n().max(1)) {
        ColoringOutcome::Colored(c) => c.k,
        ColoringOutcome::Exceeded => unreachable!("n colors always suffice"),
    };
    let straight = identify_vertices(g, &[(h.pair1.0, h.pair2.0), (h.pair1.1, h.pair2.1)]);
    let crossed = identify_vertices(g, &[(h.pair1.0, h.pair2.1), (h.pair1.1, h.pair2.0)]);
    let colorable = |merged: Option<UndirectedGraph>| {
        merged.is_some_and(|m| is_k_colorable(&m, chromatic).is_some())
    };
    let recolorable = colorable(straight) && colorable(crossed);
    Ok(CouplingReport {
        chromatic,
        forced_agreement,
        separable,
        recolorable,
    })
}

/// Whether any vertex of `to` is reachable from any vertex of `from` along
/// at least one arc.
fn reaches_any(d: &crate::graph::DirectedGraph, from: &[usize], to: &[usize]) -> bool {
    let mut seen = vec![false; d.n()];
    let mut stack: Vec<usize> = Vec::new();
    for &s in from {
        for &w in d.out(s) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    while let Some(v) = stack.pop() {
        if to.contains(&v) {
            return true;
        }
        for &w in d.out(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    to.iter().any(|&t| seen[t])
}

/// Merges each listed vertex pair into one vertex (equal-color
/// constraints become identifications). Returns `None` when a pair is
/// adjacent, since the merge would demand a self-loop — an infeasible
/// constraint. Surviving vertices are renumbered by first appearance.
fn identify_vertices(
    g: &UndirectedGraph,
    pairs: &[(usize, usize)],
) -> Option<UndirectedGraph> {
    let mut target: Vec<usize> = (0..g.n()).collect();
    for &(a, b) in pairs {
        if g.has_edge(a, b) {
            return None;
        }
        let (keep, gone) = (a.min(b), a.max(b));
        for t in target.iter_mut() {
            if *t == gone {
                *t = keep;
            }
        }
    }
    let mut compact = vec![usize::MAX; g.n()];
    let mut next_id = 0;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(g.m());
    for v in 0..g.n() {
        let t = target[v];
        if compact[t] == usize::MAX {
            compact[t] = next_id;
            next_id += 1;
        }
    }
    for &(u, v) in g.edges() {
        let (x, y) = (compact[target[u]], compact[target[v]]);
        if x == y {
            return None;
        }
        edges.push((x.min(y), x.max(y)));
    }
    edges.sort_unstable();
    edges.dedup();
    Some(UndirectedGraph::new(next_id, &edges).expect("identification leaves a simple graph"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::check_singly_connected;
    use crate::graph::enumerate::canonical_key;
    use crate::graph::girth;
    use crate::graph::Orientation;
    use crate::solve::{count_sc_orientations, decide_sc_orientable, naive_sc_orientable};

    fn named(spec: NamedGraph) -> UndirectedGraph {
        make_named_graph(&spec).unwrap()
    }

    #[test]
    fn catalog_matches_fixed_patterns() {
        assert_eq!(named(NamedGraph::Diamond), pattern_graph(PatternKind::Diamond));
        assert_eq!(named(NamedGraph::House), pattern_graph(PatternKind::House));
        assert_eq!(named(NamedGraph::Gem), pattern_graph(PatternKind::Gem));
        assert_eq!(
            named(NamedGraph::Grid { rows: 2, cols: 3 }),
            named(NamedGraph::Domino)
        );
        let c5 = named(NamedGraph::Cycle { len: 5 });
        assert_eq!(c5.edges(), &[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        // A 3-rung ladder is a domino under a different labeling.
        assert_eq!(
            canonical_key(&named(NamedGraph::Ladder { rungs: 3 })),
            canonical_key(&named(NamedGraph::Domino))
        );
        assert_eq!(
            canonical_key(&named(NamedGraph::Ladder { rungs: 2 })),
            canonical_key(&named(NamedGraph::Cycle { len: 4 }))
        );
    }

    #[test]
    fn size_parameters_are_validated() {
        for bad in [
            NamedGraph::Cycle { len: 2 },
            NamedGraph::Grid { rows: 0, cols: 3 },
            NamedGraph::Ladder { rungs: 1 },
            NamedGraph::LadderCycle { len: 2 },
            NamedGraph::ExtendedLadder {
                rungs: 3,
                attachments: vec![(3, false)],
            },
        ] {
            assert!(make_named_graph(&bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn extended_ladder_attaches_squares() {
        let g = named(NamedGraph::ExtendedLadder {
            rungs: 3,
            attachments: vec![(1, false), (1, true)],
        });
        assert_eq!(g.n(), 10);
        assert_eq!(g.m(), 7 + 6);
        // Untwisted square over rung (2, 3): p = 6 continues the even rail.
        assert!(g.has_edge(2, 6) && g.has_edge(6, 7) && g.has_edge(7, 3));
        // Twisted square: p = 8 sits over the odd endpoint.
        assert!(g.has_edge(2, 9) && g.has_edge(8, 9) && g.has_edge(8, 3));
        // Each attachment forms a square with its rung, so the whole graph
        // stays sc-orientable.
        assert!(decide_sc_orientable(&g).is_orientable());
    }

    #[test]
    fn laddercycle_shape_and_steps() {
        let g = named(NamedGraph::LadderCycle { len: 6 });
        assert_eq!(g.n(), 12);
        assert_eq!(g.m(), 18);
        assert_eq!(girth(&g), Some(4));
        assert_eq!(
            laddercycle_steps(6).unwrap(),
            vec![(0, 1), (2, 3), (4, 5)]
        );
        assert!(laddercycle_steps(5).is_err());
        assert!(laddercycle_steps(2).is_err());
    }

    #[test]
    fn even_laddercycles_have_exactly_two_orientations() {
        // The cylinder's squares chain around sharing spokes, which forces
        // every sc-orientation onto the bipartition; even rings admit both
        // classes and nothing else.
        for len in [4, 6] {
            let g = named(NamedGraph::LadderCycle { len });
            assert_eq!(count_sc_orientations(&g).unwrap(), 2, "len {len}");
        }
        // Odd rings are non-bipartite, so the forcing leaves nothing.
        let odd = named(NamedGraph::LadderCycle { len: 5 });
        assert_eq!(count_sc_orientations(&odd).unwrap(), 0);
        assert!(!decide_sc_orientable(&odd).is_orientable());
    }

    #[test]
    fn laddercycle_steps_move_in_lockstep() {
        let g = named(NamedGraph::LadderCycle { len: 6 });
        let steps = laddercycle_steps(6).unwrap();
        let step_indices: Vec<usize> = steps
            .iter()
            .map(|&(u, v)| g.edge_index(u, v).unwrap())
            .collect();
        let mut patterns: Vec<Vec<bool>> = Vec::new();
        for mask in 0u64..1 << g.m() {
            let o = Orientation::from_mask(g.m(), mask);
            if check_singly_connected(&o.to_digraph(&g)).is_singly_connected() {
                let pat: Vec<bool> = step_indices.iter().map(|&i| o.is_flipped(i)).collect();
                if !patterns.contains(&pat) {
                    patterns.push(pat);
                }
            }
        }
        patterns.sort();
        assert_eq!(patterns, vec![vec![false; 3], vec![true; 3]]);
    }

    #[test]
    fn perfectify_single_edge() {
        let g = UndirectedGraph::new(2, &[(0, 1)]).unwrap();
        let p = perfectify(&g);
        assert_eq!(p.n(), 4);
        assert_eq!(
            p.edges(),
            &[(0, 2), (0, 3), (1, 2), (2, 3)],
        );
        assert!(decide_sc_orientable(&p).is_orientable());
        match chromatic_number(&p, 4) {
            ColoringOutcome::Colored(c) => assert_eq!(c.k, 3),
            ColoringOutcome::Exceeded => panic!("tiny graph"),
        }
    }

    #[test]
    fn perfectify_keeps_the_verdict() {
        let cases = [
            named(NamedGraph::Cycle { len: 4 }),
            named(NamedGraph::Cycle { len: 5 }),
            named(NamedGraph::Diamond),
            named(NamedGraph::House),
            named(NamedGraph::Domino),
            UndirectedGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
        ];
        for g in cases {
            let p = perfectify(&g);
            assert_eq!(p.n(), g.n() + 2 * g.m());
            assert_eq!(p.m(), 4 * g.m());
            assert_eq!(
                decide_sc_orientable(&p).is_orientable(),
                decide_sc_orientable(&g).is_orientable(),
            );
        }
    }

    #[test]
    fn perfectify_leaves_no_forbidden_subgraphs() {
        let k4 = UndirectedGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = perfectify(&k4);
        use crate::graph::find_pattern;
        assert!(find_pattern(&p, PatternKind::Diamond, false).is_none());
        assert!(find_pattern(&p, PatternKind::House, false).is_none());
        // Triangles exist but no 4-clique: clique number is exactly 3.
        assert!(find_pattern(&p, PatternKind::Triangle, false).is_some());
        let n = p.n();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let clique = p.has_edge(a, b)
                            && p.has_edge(a, c)
                            && p.has_edge(a, d)
                            && p.has_edge(b, c)
                            && p.has_edge(b, d)
                            && p.has_edge(c, d);
                        assert!(!clique);
                    }
                }
            }
        }
    }

    /// The domino as a 3-rung ladder on its side: end rungs (0, 3) and
    /// (2, 5) marked in parallel order; the rungs sit at even distance,
    /// so their orientations agree in both sc-orientations.
    fn domino_gadget() -> CouplingGadget {
        CouplingGadget::new(named(NamedGraph::Domino), (0, 3), (2, 5)).unwrap()
    }

    #[test]
    fn gadget_construction_validates_marks() {
        let domino = named(NamedGraph::Domino);
        assert!(matches!(
            CouplingGadget::new(domino.clone(), (0, 5), (1, 4)),
            Err(GlueError::NotAnEdge { pair: (0, 5) })
        ));
        assert!(matches!(
            CouplingGadget::new(domino.clone(), (0, 1), (1, 4)),
            Err(GlueError::OverlappingMarkedEdges { shared: 1 })
        ));
        assert!(CouplingGadget::new(domino, (0, 3), (2, 5)).is_ok());
    }

    #[test]
    fn glue_cycle_counts_and_verdicts() {
        let h = domino_gadget();
        assert!(matches!(
            glue_cycle(&h, 1, true),
            Err(GlueError::TooFewCopies { copies: 1 })
        ));
        // Twisted odd cycles of dominoes destroy orientability; an even
        // untwisted cycle is the plain cylinder, which keeps it.
        let twisted3 = glue_cycle(&h, 3, true).unwrap();
        assert_eq!(twisted3.n(), 3 * 4);
        assert_eq!(twisted3.m(), 3 * 6);
        assert!(!decide_sc_orientable(&twisted3).is_orientable());
        assert_eq!(naive_sc_orientable(&twisted3).unwrap(), None);
        let straight4 = glue_cycle(&h, 4, false).unwrap();
        assert_eq!(straight4.n(), 4 * 4);
        assert_eq!(straight4.m(), 4 * 6);
        assert!(decide_sc_orientable(&straight4).is_orientable());
        // The even untwisted cylinder is exactly a ladder cycle.
        assert_eq!(
            canonical_key(&straight4),
            canonical_key(&named(NamedGraph::LadderCycle { len: 8 }))
        );
    }

    #[test]
    fn glue_coupling_cycle_rounds_to_odd() {
        let h = domino_gadget();
        assert_eq!(
            glue_coupling_cycle(&h, 4).unwrap(),
            glue_cycle(&h, 5, true).unwrap()
        );
        assert_eq!(
            glue_coupling_cycle(&h, 3).unwrap(),
            glue_cycle(&h, 3, true).unwrap()
        );
        assert!(matches!(
            glue_coupling_cycle(&h, 2),
            Err(GlueError::BadGirthTarget { girth: 2 })
        ));
        assert!(!decide_sc_orientable(&glue_coupling_cycle(&h, 4).unwrap()).is_orientable());
    }

    #[test]
    fn domino_fails_only_the_coloring_property() {
        let report = verify_coupling_gadget(&domino_gadget()).unwrap();
        assert_eq!(report.chromatic, 2);
        assert!(report.forced_agreement);
        assert!(report.separable);
        // Crossed identification forces a K4 minor onto 2 colors.
        assert!(!report.recolorable);
        assert!(!report.is_coupling_gadget());
    }

    #[test]
    fn grid_with_triangle_is_a_coupling_gadget() {
        // 4-rung ladder (rungs (0,1) .. (6,7)) plus a disjoint triangle on
        // 8, 9, 10. End rungs sit at odd distance, so the top pair must be
        // declared in reversed order for the orientations to agree; the
        // triangle lifts the chromatic number to 3, which unlocks both
        // boundary colorings.
        let mut edges = pattern_graph(PatternKind::Grid(4, 2)).edges().to_vec();
        edges.extend_from_slice(&[(8, 9), (8, 10), (9, 10)]);
        let g = UndirectedGraph::new(11, &edges).unwrap();
        let h = CouplingGadget::new(g, (0, 1), (7, 6)).unwrap();
        let report = verify_coupling_gadget(&h).unwrap();
        assert_eq!(report.chromatic, 3);
        assert!(report.forced_agreement);
        assert!(report.separable);
        assert!(report.recolorable);
        assert!(report.is_coupling_gadget());
    }

    #[test]
    fn anti_ordered_marks_fail_agreement() {
        // Swapping one pair's order flips the coupling relative to the
        // declared order, so agreement must fail.
        let h = CouplingGadget::new(named(NamedGraph::Domino), (0, 3), (5, 2)).unwrap();
        let report = verify_coupling_gadget(&h).unwrap();
        assert!(!report.forced_agreement);
    }

    #[test]
    fn verify_rejects_unorientable_and_oversized_gadgets() {
        let diamond = named(NamedGraph::Diamond);
        let h = CouplingGadget::new(diamond, (0, 2), (1, 3)).unwrap();
        assert_eq!(
            verify_coupling_gadget(&h),
            Err(VerifyGadgetError::NotScOrientable)
        );
        let big = named(NamedGraph::Grid { rows: 5, cols: 5 });
        let h = CouplingGadget::new(big, (0, 1), (23, 24)).unwrap();
        assert!(matches!(
            verify_coupling_gadget(&h),
            Err(VerifyGadgetError::TooLarge(_))
        ));
    }
}
