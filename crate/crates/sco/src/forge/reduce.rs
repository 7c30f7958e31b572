//! Compiles a width-3 CNF formula into a graph whose sc-orientability
//! coincides with the formula's satisfiability.
//!
//! The instance is a union of edge-disjoint *networks*, one per variable
//! plus one shared *universal* network. Each network is bipartite and
//! rigid: interlocking 4-cycles force every sc-orientation to direct all
//! of a network's edges from one color class to the other, leaving exactly
//! one boolean of freedom per network. Each clause contributes a block
//! whose long cycle threads one edge of each of its three literals'
//! networks; the block geometry is arranged so that two directed paths
//! between a fixed vertex pair appear exactly when all three literal edges
//! point the wrong way — that is, when the clause is falsified.

use super::cnf::{ClauseOrder, CnfFormula};
use super::BadParameter;
use crate::check::{check_singly_connected, NotSinglyConnected, Verdict};
use crate::graph::{Orientation, UndirectedGraph};
use std::fmt;

/// Tuning knobs for [`reduce_3sat`]. The defaults give the smallest
/// instances this generator produces for formulas with two or more
/// clauses; a single-clause formula needs `gadget_gap` of at least 5.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReduceParams {
    /// Rungs in each literal-connector ladder, counting the two shared end
    /// rungs. Must be odd and at least 3; a negated literal gets one extra
    /// rung, which flips how the literal edge couples to its ring.
    pub connector_rungs: usize,
    /// Rail edges between consecutive clause blocks. Must be odd so the
    /// color classes keep alternating across the join, and wide enough
    /// that the clause count times `gadget_gap - 1` is at least 4. The
    /// width matters because the bottom rails carry one cycle through
    /// every block's two stub-coupled literal edges and every join: its
    /// only guaranteed sources and sinks sit at join-interior vertices,
    /// `gadget_gap - 1` per join, and with fewer than four in total there
    /// are variable values — even satisfying ones — that leave exactly
    /// one source and one sink on it, i.e. a pair of directed paths.
    pub gadget_gap: usize,
    /// Extra half-steps added to every variable ring beyond the minimum
    /// needed for its occurrences.
    pub extra_ring_steps: usize,
}

impl Default for ReduceParams {
    fn default() -> Self {
        ReduceParams {
            connector_rungs: 3,
            gadget_gap: 3,
            extra_ring_steps: 0,
        }
    }
}

/// Whether a literal couples to its variable ring directly (even) or
/// through one extra rung (odd); odd exactly for negated literals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Which rigid network an edge belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetworkId {
    /// The shared ladder ring through all clause blocks.
    Universal,
    /// The ring and connectors of one variable (by variable index).
    Variable(usize),
}

impl fmt::Display for NetworkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetworkId::Universal => write!(f, "universal"),
            NetworkId::Variable(x) => write!(f, "variable {x}"),
        }
    }
}

/// The annotated edges of one clause block, as endpoint pairs with the
/// smaller vertex first. `in_rung`/`out_rung` are the rungs where the
/// shared ladder enters and leaves. The violation cycle runs
/// `in_rung`, `literal_edges[0]`, `e2`, `literal_edges[1]`, `out_rung`,
/// `literal_edges[2]`, `e4`, and is chorded by `e5`, the one-edge path of
/// every violation witness. The cycle length is structural: along the long
/// path, edges of the shared network alternate with literal edges, because
/// a rigid bipartite network never contains a directed path of length two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseEdges {
    pub in_rung: (usize, usize),
    pub out_rung: (usize, usize),
    pub e2: (usize, usize),
    pub e4: (usize, usize),
    pub e5: (usize, usize),
    pub literal_edges: [(usize, usize); 3],
}

/// A reduction instance plus the annotations needed to translate between
/// assignments and orientations.
#[derive(Debug, Clone)]
pub struct ReductionArtifacts {
    pub graph: UndirectedGraph,
    /// The reference edge of the universal network (the entry rung of the
    /// block at position 0); its orientation is the universal bit.
    pub universal_step0: (usize, usize),
    /// Per variable, the reference edge of its ring; agreeing with the
    /// universal bit encodes the value true.
    pub var_step0: Vec<(usize, usize)>,
    /// Annotated block edges, indexed by clause.
    pub clause_edges: Vec<ClauseEdges>,
    /// Per clause and literal slot, the coupling parity (odd = negated).
    pub literal_parity: Vec<[Parity; 3]>,
    /// Owning network of each edge, parallel to `graph.edges()`.
    pub edge_network: Vec<NetworkId>,
    /// Human-readable construction summary.
    pub notes: String,
}

/// Vertex ids of one clause block: two rails of twelve vertices joined by
/// twelve rungs, a two-vertex roof over top rails 6 and 7, and two stubs
/// hanging under bottom rails 4 and 5. Blocks are contiguous, 28 vertices
/// each.
///
/// The spacing is load-bearing. Around any cycle, vertices whose two cycle
/// edges both follow the bipartite orientation are sources or sinks
/// ("switches"), and a pair of directed paths appears exactly when some
/// cycle has two switches. A cycle through one literal edge and a run of r
/// forced edges has r - 1 switches, so every unintended run between two
/// literal-edge endpoints must have length at least 5. That pushes the
/// stubs four rails in from the left anchors, the roof four rails in from
/// the right anchors, and keeps the two columns apart so no single rung
/// bridges them.
#[derive(Clone, Copy)]
struct Block {
    base: usize,
}

const BLOCK_SIZE: usize = 28;

impl Block {
    fn top(self, i: usize) -> usize {
        self.base + i
    }

    fn bot(self, i: usize) -> usize {
        self.base + 12 + i
    }

    fn roof_a(self) -> usize {
        self.base + 24
    }

    fn roof_b(self) -> usize {
        self.base + 25
    }

    fn stub(self, i: usize) -> usize {
        self.base + 26 + i
    }

    /// Literal-edge endpoints by slot, ordered (first, second): when the
    /// literal is false its edge is directed first -> second, extending
    /// the long path around the violation cycle.
    fn literal_targets(self) -> [(usize, usize); 3] {
        [
            (self.bot(0), self.stub(0)),
            (self.stub(1), self.bot(11)),
            (self.top(11), self.roof_b()),
        ]
    }
}

fn norm(pair: (usize, usize)) -> (usize, usize) {
    (pair.0.min(pair.1), pair.0.max(pair.1))
}

fn add(tri: &mut Vec<(usize, usize, NetworkId)>, u: usize, v: usize, net: NetworkId) {
    debug_assert_ne!(u, v);
    tri.push((u.min(v), u.max(v), net));
}

/// Builds the reduction instance for `f` with the clause blocks laid out
/// in the given order.
pub fn reduce_3sat(
    f: &CnfFormula,
    order: &ClauseOrder,
    params: &ReduceParams,
) -> Result<ReductionArtifacts, BadParameter> {
    if params.connector_rungs < 3 || params.connector_rungs % 2 == 0 {
        return Err(BadParameter::new(
            "connector_rungs must be odd and at least 3",
        ));
    }
    if params.gadget_gap % 2 == 0 {
        return Err(BadParameter::new("gadget_gap must be odd"));
    }
    if f.num_clauses() == 0 {
        return Err(BadParameter::new("the formula needs at least one clause"));
    }
    if f.num_clauses() * (params.gadget_gap - 1) < 4 {
        return Err(BadParameter::new(
            "gadget_gap too narrow: the stub cycle through every block needs at least four \
             forced switches across its joins, so the clause count times (gadget_gap - 1) \
             must be at least 4",
        ));
    }
    if order.len() != f.num_clauses() {
        return Err(BadParameter::new(format!(
            "clause order covers {} clauses, formula has {}",
            order.len(),
            f.num_clauses()
        )));
    }

    let m = f.num_clauses();
    let nv = f.num_vars();
    let gap = params.gadget_gap;
    let blocks: Vec<Block> = (0..m)
        .map(|p| Block {
            base: p * BLOCK_SIZE,
        })
        .collect();
    let join_width = 2 * (gap - 1);
    let ring_halves: Vec<usize> = (0..nv)
        .map(|x| f.occurrences(x).max(2) + params.extra_ring_steps)
        .collect();
    let mut cursor = m * BLOCK_SIZE + m * join_width;
    let mut ring_base = Vec::with_capacity(nv);
    for &k in &ring_halves {
        ring_base.push(cursor);
        cursor += 4 * k;
    }

    let mut tri: Vec<(usize, usize, NetworkId)> = Vec::new();
    let mut clause_edges: Vec<Option<ClauseEdges>> = vec![None; m];
    let mut literal_parity: Vec<Option<[Parity; 3]>> = vec![None; m];

    for p in 0..m {
        let c = order.clause_at(p);
        let b = blocks[p];
        for i in 0..11 {
            add(&mut tri, b.top(i), b.top(i + 1), NetworkId::Universal);
            add(&mut tri, b.bot(i), b.bot(i + 1), NetworkId::Universal);
        }
        for i in 0..12 {
            add(&mut tri, b.top(i), b.bot(i), NetworkId::Universal);
        }
        add(&mut tri, b.top(6), b.roof_a(), NetworkId::Universal);
        add(&mut tri, b.top(7), b.roof_b(), NetworkId::Universal);
        add(&mut tri, b.roof_a(), b.roof_b(), NetworkId::Universal);
        add(&mut tri, b.top(0), b.roof_a(), NetworkId::Universal);
        // The curve closes a 4-cycle with rail 5-6 and the left roof edge,
        // which chains the one-edge path's square into the rigid part of
        // the block.
        add(&mut tri, b.top(0), b.top(5), NetworkId::Universal);
        add(&mut tri, b.bot(4), b.stub(0), NetworkId::Universal);
        add(&mut tri, b.bot(5), b.stub(1), NetworkId::Universal);
        add(&mut tri, b.stub(0), b.stub(1), NetworkId::Universal);
        let targets = b.literal_targets();
        for (slot, &(first, second)) in targets.iter().enumerate() {
            let x = f.variable(c, slot);
            add(&mut tri, first, second, NetworkId::Variable(x));
        }
        clause_edges[c] = Some(ClauseEdges {
            in_rung: (b.top(0), b.bot(0)),
            out_rung: (b.top(11), b.bot(11)),
            e2: (b.stub(0), b.stub(1)),
            e4: (b.roof_a(), b.roof_b()),
            e5: (b.top(0), b.roof_a()),
            literal_edges: [norm(targets[0]), norm(targets[1]), norm(targets[2])],
        });
        literal_parity[c] = Some([0, 1, 2].map(|slot| {
            if f.negated(c, slot) {
                Parity::Odd
            } else {
                Parity::Even
            }
        }));
    }

    for p in 0..m {
        let q = (p + 1) % m;
        let (from_t, to_t) = (blocks[p].top(11), blocks[q].top(0));
        let (from_b, to_b) = (blocks[p].bot(11), blocks[q].bot(0));
        if gap == 1 {
            add(&mut tri, from_t, to_t, NetworkId::Universal);
            add(&mut tri, from_b, to_b, NetworkId::Universal);
        } else {
            let jb = m * BLOCK_SIZE + p * join_width;
            let jt = |k: usize| jb + 2 * k;
            let jo = |k: usize| jb + 2 * k + 1;
            add(&mut tri, from_t, jt(0), NetworkId::Universal);
            add(&mut tri, from_b, jo(0), NetworkId::Universal);
            for k in 0..gap - 2 {
                add(&mut tri, jt(k), jt(k + 1), NetworkId::Universal);
                add(&mut tri, jo(k), jo(k + 1), NetworkId::Universal);
            }
            add(&mut tri, jt(gap - 2), to_t, NetworkId::Universal);
            add(&mut tri, jo(gap - 2), to_b, NetworkId::Universal);
            for k in 0..gap - 1 {
                add(&mut tri, jt(k), jo(k), NetworkId::Universal);
            }
        }
    }

    for x in 0..nv {
        let len = 2 * ring_halves[x];
        let outer = ring_base[x];
        let inner = outer + len;
        for j in 0..len {
            let jn = (j + 1) % len;
            add(&mut tri, outer + j, outer + jn, NetworkId::Variable(x));
            add(&mut tri, inner + j, inner + jn, NetworkId::Variable(x));
            add(&mut tri, outer + j, inner + j, NetworkId::Variable(x));
        }
    }

    let mut occ_seen = vec![0usize; nv];
    for p in 0..m {
        let c = order.clause_at(p);
        let targets = blocks[p].literal_targets();
        for (slot, &(first, second)) in targets.iter().enumerate() {
            let x = f.variable(c, slot);
            let r = params.connector_rungs + f.negated(c, slot) as usize;
            let base_arc = ring_base[x] + 2 * occ_seen[x];
            occ_seen[x] += 1;
            let fresh = cursor;
            cursor += 2 * (r - 2);
            // Rung i endpoints: rung 0 is the ring arc, rung r-1 is the
            // literal edge, the rest are fresh.
            let side_a = |i: usize| match i {
                0 => base_arc,
                i if i == r - 1 => second,
                i => fresh + 2 * (i - 1),
            };
            let side_b = |i: usize| match i {
                0 => base_arc + 1,
                i if i == r - 1 => first,
                i => fresh + 2 * (i - 1) + 1,
            };
            for i in 0..r - 1 {
                add(&mut tri, side_a(i), side_a(i + 1), NetworkId::Variable(x));
                add(&mut tri, side_b(i), side_b(i + 1), NetworkId::Variable(x));
            }
            for i in 1..=r - 2 {
                add(&mut tri, side_a(i), side_b(i), NetworkId::Variable(x));
            }
        }
    }

    let pairs: Vec<(usize, usize)> = tri.iter().map(|&(u, v, _)| (u, v)).collect();
    let graph = UndirectedGraph::new(cursor, &pairs)
        .expect("the generator lays out disjoint simple pieces");
    let mut edge_network = vec![NetworkId::Universal; graph.m()];
    for &(u, v, net) in &tri {
        edge_network[graph.edge_index(u, v).expect("edge was just added")] = net;
    }

    let notes = format!(
        "{m} clause blocks in the given order joined into a ladder ring (gap {gap}); \
         {nv} variable rings; connector ladders of {} rungs (one more on negated \
         literals); ring slack {}.",
        params.connector_rungs, params.extra_ring_steps,
    );

    Ok(ReductionArtifacts {
        graph,
        universal_step0: (blocks[0].top(0), blocks[0].bot(0)),
        var_step0: (0..nv).map(|x| (ring_base[x], ring_base[x] + 1)).collect(),
        clause_edges: clause_edges.into_iter().map(Option::unwrap).collect(),
        literal_parity: literal_parity.into_iter().map(Option::unwrap).collect(),
        edge_network,
        notes,
    })
}

/// Orients the instance as the assignment dictates: every network is
/// oriented from one color class to the other, with the class chosen by
/// the universal bit (fixed) or the variable's value. The result passes
/// the singly-connected check exactly when `gamma` satisfies the formula.
pub fn orient_from_assignment(
    arts: &ReductionArtifacts,
    gamma: &[bool],
) -> Result<Orientation, BadParameter> {
    if gamma.len() != arts.var_step0.len() {
        return Err(BadParameter::new(format!(
            "assignment covers {} variables, instance has {}",
            gamma.len(),
            arts.var_step0.len()
        )));
    }
    let g = &arts.graph;
    let nets = 1 + arts.var_step0.len();
    let mut net_edges: Vec<Vec<usize>> = vec![Vec::new(); nets];
    for (e, net) in arts.edge_network.iter().enumerate() {
        let slot = match net {
            NetworkId::Universal => 0,
            NetworkId::Variable(x) => 1 + x,
        };
        net_edges[slot].push(e);
    }
    let mut flipped = vec![false; g.m()];
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    for (slot, edges) in net_edges.iter().enumerate() {
        let (root, reversed) = if slot == 0 {
            (arts.universal_step0.0, false)
        } else {
            // True means the ring runs the same way as the universal
            // network, which is not reversed.
            (arts.var_step0[slot - 1].0, !gamma[slot - 1])
        };
        // BFS 2-coloring over this network's edges only; `false` marks the
        // root's side.
        color.iter_mut().for_each(|c| *c = None);
        let mut adj: Vec<(usize, usize, usize)> = Vec::with_capacity(2 * edges.len());
        for &e in edges {
            let (u, v) = g.edges()[e];
            adj.push((u, v, e));
            adj.push((v, u, e));
        }
        adj.sort_unstable();
        let start = |w: usize| adj.partition_point(|&(u, _, _)| u < w);
        color[root] = Some(false);
        let mut queue = vec![root];
        while let Some(v) = queue.pop() {
            let side = color[v].unwrap();
            for &(_, w, _) in adj[start(v)..].iter().take_while(|&&(u, _, _)| u == v) {
                match color[w] {
                    Some(c) => debug_assert_ne!(c, side, "networks are bipartite"),
                    None => {
                        color[w] = Some(!side);
                        queue.push(w);
                    }
                }
            }
        }
        // An edge points away from the root's side normally, toward it
        // when the network is reversed.
        for &e in edges {
            let (u, _) = g.edges()[e];
            let u_on_root_side = !color[u].expect("network is connected");
            flipped[e] = u_on_root_side == reversed;
        }
    }
    Ok(Orientation::from_flips(flipped))
}

/// Reads an assignment back out of an sc-orientation: a variable is true
/// exactly when its ring's reference edge agrees with the universal
/// reference edge. Rejects orientations that are not singly connected.
/// The decoding is invariant under reversing the whole orientation.
pub fn decode_assignment(
    arts: &ReductionArtifacts,
    o: &Orientation,
) -> Result<Vec<bool>, NotSinglyConnected> {
    let g = &arts.graph;
    if let Verdict::NotSinglyConnected(w) = check_singly_connected(&o.to_digraph(g)) {
        return Err(NotSinglyConnected(w));
    }
    let forward = |pair: (usize, usize)| -> bool {
        let e = g.edge_index(pair.0, pair.1).expect("annotated edge exists");
        o.arc(g, e) == pair
    };
    let universal = forward(arts.universal_step0);
    Ok(arts
        .var_step0
        .iter()
        .map(|&pair| forward(pair) == universal)
        .collect())
}
