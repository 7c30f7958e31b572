//! Polynomial-time orientation strategies for structured graph classes.
//!
//! Each strategy builds an orientation whose single connectivity is
//! guaranteed by a structural precondition rather than by search:
//!
//! * [`orient_by_coloring`]: arcs point toward the higher color, so every
//!   directed path uses at most `k - 1` arcs. Two distinct equal-endpoint
//!   paths would close an undirected cycle of length at most `2k - 2`;
//!   if the girth is at least `2k - 1` no such cycle exists.
//! * [`orient_near_bipartite`]: an independent set becomes sources and the
//!   remaining forest is 2-colored with arcs toward the second class, so
//!   every directed path uses at most 2 arcs. Two distinct equal-endpoint
//!   paths would close a cycle of length at most 4; girth at least 5
//!   rules that out.
//! * [`orient_by_blocks`]: blocks that are bipartite get all arcs from one
//!   side to the other (directed paths of length 1); triangle blocks
//!   become directed 3-cycles. An orientation is singly connected iff its
//!   restriction to every biconnected block is, so the pieces compose.

use crate::graph::patterns::{find_any_hole, find_pattern, PatternKind};
use crate::graph::{biconnected_blocks, bipartition, Coloring, Orientation, UndirectedGraph};
use std::fmt;

// ---- coloring-driven orientation ----

/// The supplied coloring is not a proper coloring of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImproperColoring {
    pub reason: String,
}

impl fmt::Display for ImproperColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "improper coloring: {}", self.reason)
    }
}

impl std::error::Error for ImproperColoring {}

/// Orients every edge toward its higher-colored endpoint.
///
/// The result is always acyclic (colors strictly increase along arcs). It
/// is singly connected whenever the girth of `g` is at least `2k - 1` for
/// the number of colors `k` actually used; the function itself only
/// requires the coloring to be proper.
pub fn orient_by_coloring(
    g: &UndirectedGraph,
    coloring: &Coloring,
) -> Result<Orientation, ImproperColoring> {
    if coloring.colors.len() != g.n() {
        return Err(ImproperColoring {
            reason: format!(
                "coloring covers {} vertices but the graph has {}",
                coloring.colors.len(),
                g.n()
            ),
        });
    }
    if let Some(&(u, v)) = g
        .edges()
        .iter()
        .find(|&&(u, v)| coloring.colors[u] == coloring.colors[v])
    {
        return Err(ImproperColoring {
            reason: format!("edge ({u}, {v}) joins two vertices of the same color"),
        });
    }
    let flips = g
        .edges()
        .iter()
        .map(|&(u, v)| coloring.colors[u] > coloring.colors[v])
        .collect();
    Ok(Orientation::from_flips(flips))
}

// ---- near-bipartite orientation ----

/// A split of the vertices into an independent set and a forest-inducing
/// rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearBipartitePartition {
    pub independent: Vec<usize>,
    pub forest: Vec<usize>,
}

impl NearBipartitePartition {
    /// Builds the partition whose forest part is the complement of
    /// `independent` among `0..n`.
    pub fn from_independent(n: usize, independent: &[usize]) -> Self {
        let mut chosen = vec![false; n];
        for &v in independent {
            if v < n {
                chosen[v] = true;
            }
        }
        NearBipartitePartition {
            independent: independent.to_vec(),
            forest: (0..n).filter(|&v| !chosen[v]).collect(),
        }
    }
}

/// The supplied split is not an independent-set / forest partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidPartition {
    pub reason: String,
}

impl fmt::Display for InvalidPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid partition: {}", self.reason)
    }
}

impl std::error::Error for InvalidPartition {}

/// Orients `g` from an independent feedback vertex set: independent-set
/// vertices become sources, and each tree of the remaining forest is
/// 2-colored (breadth-first from its least vertex) with every tree edge
/// oriented from the first color class to the second.
///
/// Singly connected whenever the girth of `g` is at least 5.
pub fn orient_near_bipartite(
    g: &UndirectedGraph,
    partition: &NearBipartitePartition,
) -> Result<Orientation, InvalidPartition> {
    let n = g.n();
    let mut role = vec![0u8; n]; // 1 = independent, 2 = forest
    for &v in &partition.independent {
        if v >= n || role[v] != 0 {
            return Err(InvalidPartition {
                reason: "the parts do not partition the vertex set".into(),
            });
        }
        role[v] = 1;
    }
    for &v in &partition.forest {
        if v >= n || role[v] != 0 {
            return Err(InvalidPartition {
                reason: "the parts do not partition the vertex set".into(),
            });
        }
        role[v] = 2;
    }
    if role.iter().any(|&r| r == 0) {
        return Err(InvalidPartition {
            reason: "the parts do not partition the vertex set".into(),
        });
    }
    if let Some(&(u, v)) = g
        .edges()
        .iter()
        .find(|&&(u, v)| role[u] == 1 && role[v] == 1)
    {
        return Err(InvalidPartition {
            reason: format!("edge ({u}, {v}) joins two independent-set vertices"),
        });
    }
    // 2-color the forest part tree by tree; a revisited vertex is a cycle.
    let mut shade = vec![0u8; n]; // forest vertices get 1 or 2
    for root in 0..n {
        if role[root] != 2 || shade[root] != 0 {
            continue;
        }
        shade[root] = 1;
        let mut queue = std::collections::VecDeque::from([(root, usize::MAX)]);
        while let Some((u, parent)) = queue.pop_front() {
            for &w in g.adj(u) {
                if role[w] != 2 || w == parent {
                    continue;
                }
                if shade[w] != 0 {
                    return Err(InvalidPartition {
                        reason: "the forest part contains a cycle".into(),
                    });
                }
                shade[w] = 3 - shade[u];
                queue.push_back((w, u));
            }
        }
    }
    let flips = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            if role[u] == 1 {
                false // u is a source
            } else if role[v] == 1 {
                true // v is a source
            } else {
                shade[u] == 2 // within the forest: first shade to second
            }
        })
        .collect();
    Ok(Orientation::from_flips(flips))
}

/// Finds an independent feedback vertex set: an independent set whose
/// removal leaves a forest. Complete and deterministic — branches over the
/// vertices of some remaining cycle, never picking a vertex adjacent to an
/// earlier pick; exponential in the worst case, fine at gadget scale.
pub fn find_independent_fvs(g: &UndirectedGraph) -> Option<Vec<usize>> {
    fn cycle_avoiding(g: &UndirectedGraph, excluded: &[bool]) -> Option<Vec<usize>> {
        // Depth-first from each unexcluded root (ascending); the first back
        // edge closes a cycle along the current stack.
        let n = g.n();
        let mut state = vec![0u8; n]; // 0 fresh, 1 on stack, 2 done
        let mut path: Vec<usize> = Vec::new();
        for root in 0..n {
            if excluded[root] || state[root] != 0 {
                continue;
            }
            // stack of (vertex, parent, next neighbor position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            state[root] = 1;
            path.push(root);
            while let Some(&mut (u, parent, ref mut next)) = stack.last_mut() {
                let adj = g.adj(u);
                if *next >= adj.len() {
                    stack.pop();
                    path.pop();
                    state[u] = 2;
                    continue;
                }
                let w = adj[*next];
                *next += 1;
                if excluded[w] || w == parent {
                    continue;
                }
                match state[w] {
                    0 => {
                        state[w] = 1;
                        path.push(w);
                        stack.push((w, u, 0));
                    }
                    1 => {
                        let pos = path.iter().position(|&x| x == w).unwrap();
                        return Some(path[pos..].to_vec());
                    }
                    _ => {}
                }
            }
        }
        None
    }

    fn extend(g: &UndirectedGraph, chosen: &mut Vec<bool>) -> bool {
        let Some(cycle) = cycle_avoiding(g, chosen) else {
            return true;
        };
        for &v in &cycle {
            if g.adj(v).iter().any(|&w| chosen[w]) {
                continue;
            }
            chosen[v] = true;
            if extend(g, chosen) {
                return true;
            }
            chosen[v] = false;
        }
        false
    }

    let mut chosen = vec![false; g.n()];
    extend(g, &mut chosen).then(|| {
        (0..g.n()).filter(|&v| chosen[v]).collect()
    })
}

// ---- block-structured orientation ----

/// A biconnected block that is neither bipartite nor a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsupportedBlock {
    pub block: Vec<usize>,
}

impl fmt::Display for UnsupportedBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "block {:?} is neither bipartite nor a triangle",
            self.block
        )
    }
}

impl std::error::Error for UnsupportedBlock {}

/// Orients a graph whose biconnected blocks are all bipartite or
/// triangles: bipartite blocks send every arc from the side containing the
/// block's least vertex to the other side, triangles become the directed
/// cycle min -> mid -> max -> min. The result is always singly connected.
pub fn orient_by_blocks(g: &UndirectedGraph) -> Result<Orientation, UnsupportedBlock> {
    let decomposition = biconnected_blocks(g);
    let mut flips = vec![false; g.m()];
    for block in &decomposition.blocks {
        if block.len() < 2 {
            continue;
        }
        let (local, back) = g.induced_subgraph(block);
        if local.n() == 3 && local.m() == 3 {
            // back is ascending, so local 0 < 1 < 2 matches min < mid < max.
            let cycle_flips = [(0, 1, false), (1, 2, false), (0, 2, true)];
            for (a, b, flip) in cycle_flips {
                let e = g.edge_index(back[a], back[b]).expect("triangle edge");
                flips[e] = flip;
            }
            continue;
        }
        match bipartition(&local) {
            Ok(bip) => {
                let source_side = bip.side[0];
                for &(a, b) in local.edges() {
                    let e = g.edge_index(back[a], back[b]).expect("block edge");
                    // Arc from the least vertex's side to the other side.
                    flips[e] = bip.side[a] != source_side;
                }
            }
            Err(_) => {
                return Err(UnsupportedBlock {
                    block: block.clone(),
                })
            }
        }
    }
    Ok(Orientation::from_flips(flips))
}

// ---- distance-hereditary classification ----

/// Kind of a biconnected block, as used by [`orient_by_blocks`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Bipartite,
    Triangle,
    Other,
}

/// Why a graph fails the strongly distance-hereditary test. Vertex lists
/// index into the classified graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DhObstruction {
    InducedHouse([usize; 5]),
    InducedHole(Vec<usize>),
    InducedDomino([usize; 6]),
    InducedGem([usize; 5]),
    DiamondSubgraph([usize; 4]),
}

impl fmt::Display for DhObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DhObstruction::InducedHouse(v) => write!(f, "induced house on {v:?}"),
            DhObstruction::InducedHole(v) => write!(f, "induced {}-hole on {v:?}", v.len()),
            DhObstruction::InducedDomino(v) => write!(f, "induced domino on {v:?}"),
            DhObstruction::InducedGem(v) => write!(f, "induced gem on {v:?}"),
            DhObstruction::DiamondSubgraph(v) => write!(f, "diamond subgraph on {v:?}"),
        }
    }
}

/// Classification of a graph against the distance-hereditary hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhClassification {
    pub is_distance_hereditary: bool,
    pub is_strongly_dh: bool,
    /// One entry per biconnected block, in block order.
    pub per_block: Vec<BlockKind>,
    /// Present exactly when the graph is not strongly distance-hereditary.
    pub obstruction: Option<DhObstruction>,
}

/// Tests the two distance-hereditary properties.
///
/// Distance-hereditary means every induced house, hole (induced cycle of
/// length at least 5), domino, and gem is absent. The strong variant
/// additionally forbids the diamond as a subgraph — equivalently (and
/// cross-checked here) it requires every biconnected block to be bipartite
/// or a triangle. A gem contains a diamond subgraph, so the strong test
/// does not need to look for gems separately.
pub fn classify_dh(g: &UndirectedGraph) -> DhClassification {
    let house = find_pattern(g, PatternKind::House, true);
    let hole = find_any_hole(g, 5);
    let domino = find_pattern(g, PatternKind::Domino, true);
    let gem = find_pattern(g, PatternKind::Gem, true);
    let diamond = find_pattern(g, PatternKind::Diamond, false);
    let is_dh = house.is_none() && hole.is_none() && domino.is_none() && gem.is_none();
    let is_strongly = is_dh && diamond.is_none();

    let decomposition = biconnected_blocks(g);
    let per_block: Vec<BlockKind> = decomposition
        .blocks
        .iter()
        .map(|block| {
            let (local, _) = g.induced_subgraph(block);
            if local.n() == 3 && local.m() == 3 {
                BlockKind::Triangle
            } else if bipartition(&local).is_ok() {
                BlockKind::Bipartite
            } else {
                BlockKind::Other
            }
        })
        .collect();
    let blocks_fit = per_block.iter().all(|k| !matches!(k, BlockKind::Other));
    debug_assert_eq!(
        is_strongly,
        is_dh && blocks_fit,
        "the forbidden-pattern and block views of strongly-DH must agree"
    );

    let obstruction = if is_strongly {
        None
    } else if let Some(emb) = house {
        Some(DhObstruction::InducedHouse(
            emb.vertices[..].try_into().unwrap(),
        ))
    } else if let Some(cycle) = hole {
        Some(DhObstruction::InducedHole(cycle))
    } else if let Some(emb) = domino {
        Some(DhObstruction::InducedDomino(
            emb.vertices[..].try_into().unwrap(),
        ))
    } else if let Some(emb) = gem {
        Some(DhObstruction::InducedGem(
            emb.vertices[..].try_into().unwrap(),
        ))
    } else {
        let emb = diamond.expect("a non-strongly-DH graph without induced obstructions must contain a diamond subgraph");
        Some(DhObstruction::DiamondSubgraph(
            emb.vertices[..].try_into().unwrap(),
        ))
    };

    DhClassification {
        is_distance_hereditary: is_dh,
        is_strongly_dh: is_strongly,
        per_block,
        obstruction,
    }
}

/// Orients a strongly distance-hereditary graph via its block structure,
/// or reports the obstruction that disqualifies the graph.
pub fn orient_strongly_dh(g: &UndirectedGraph) -> Result<Orientation, DhObstruction> {
    let classification = classify_dh(g);
    match classification.obstruction {
        Some(obstruction) => Err(obstruction),
        None => Ok(orient_by_blocks(g)
            .expect("strongly-DH blocks are bipartite or triangles")),
    }
}

// ---- strongly-DH construction scripts ----

/// One growth step of a strongly distance-hereditary construction script.
/// Vertices are numbered in creation order starting from an initial vertex
/// 0; step `i` creates vertex `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdhStep {
    /// Add a new vertex adjacent to `u` only.
    Pendant(usize),
    /// Add a twin adjacent to `u` and to its single neighbor. Requires
    /// `u` to have degree exactly 1.
    TrueTwin(usize),
    /// Add a twin adjacent to exactly the neighbors of `u`. Requires the
    /// neighborhood of `u` to be an independent set.
    FalseTwin(usize),
}

/// A script step broke its side condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionViolated {
    /// Zero-based index of the offending step.
    pub step: usize,
    pub reason: String,
}

impl fmt::Display for RestrictionViolated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "script step {}: {}", self.step, self.reason)
    }
}

impl std::error::Error for RestrictionViolated {}

/// Grows a graph from a single vertex by pendant, restricted-true-twin and
/// restricted-false-twin steps. Exactly the strongly distance-hereditary
/// graphs arise this way, which makes the builder a generator of positive
/// instances for [`orient_strongly_dh`].
pub fn build_sdh(steps: &[SdhStep]) -> Result<UndirectedGraph, RestrictionViolated> {
    let mut n = 1usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new()];
    for (i, &step) in steps.iter().enumerate() {
        let fail = |reason: String| RestrictionViolated { step: i, reason };
        let target = match step {
            SdhStep::Pendant(u) | SdhStep::TrueTwin(u) | SdhStep::FalseTwin(u) => u,
        };
        if target >= n {
            return Err(fail(format!(
                "vertex {target} does not exist yet (graph has {n} vertices)"
            )));
        }
        let new = n;
        let mut attach: Vec<usize> = Vec::new();
        match step {
            SdhStep::Pendant(u) => attach.push(u),
            SdhStep::TrueTwin(u) => {
                if adj[u].len() != 1 {
                    return Err(fail(format!(
                        "true twin requires degree 1, but vertex {u} has degree {}",
                        adj[u].len()
                    )));
                }
                attach.push(adj[u][0]);
                attach.push(u);
            }
            SdhStep::FalseTwin(u) => {
                let nbrs = &adj[u];
                for (x, &a) in nbrs.iter().enumerate() {
                    for &b in &nbrs[x + 1..] {
                        if adj[a].contains(&b) {
                            return Err(fail(format!(
                                "false twin requires an independent neighborhood, \
                                 but {a} and {b} are adjacent"
                            )));
                        }
                    }
                }
                attach.extend(nbrs.iter().copied());
            }
        }
        adj.push(Vec::new());
        for &w in &attach {
            edges.push((w, new));
            adj[w].push(new);
            adj[new].push(w);
        }
        n += 1;
    }
    Ok(UndirectedGraph::new(n, &edges).expect("script growth never duplicates an edge"))
}

/// Parses a construction script: steps separated by whitespace, commas, or
/// semicolons, each an operation letter and a vertex number (`P3` or
/// `P 3`; also `T`, `F`; case-insensitive).
pub fn parse_sdh_script(text: &str) -> Result<Vec<SdhStep>, RestrictionViolated> {
    let mut steps = Vec::new();
    let mut pending: Option<char> = None;
    let tokens = text
        .split(|c: char| c.is_whitespace() || c == ',' || c == ';')
        .filter(|t| !t.is_empty());
    for token in tokens {
        let i = steps.len();
        let fail = |reason: String| RestrictionViolated { step: i, reason };
        let (op, num) = match pending.take() {
            Some(op) => (op, token),
            None => {
                let mut chars = token.chars();
                let op = chars.next().expect("token is non-empty");
                let rest = chars.as_str();
                if rest.is_empty() {
                    // A bare letter takes its vertex from the next token.
                    pending = Some(op);
                    continue;
                }
                (op, rest)
            }
        };
        let vertex: usize = num
            .parse()
            .map_err(|_| fail(format!("expected a vertex number, got {num:?}")))?;
        let step = match op.to_ascii_uppercase() {
            'P' => SdhStep::Pendant(vertex),
            'T' => SdhStep::TrueTwin(vertex),
            'F' => SdhStep::FalseTwin(vertex),
            other => return Err(fail(format!("unknown operation {other:?}"))),
        };
        steps.push(step);
    }
    if let Some(op) = pending {
        return Err(RestrictionViolated {
            step: steps.len(),
            reason: format!("operation {op:?} is missing its vertex number"),
        });
    }
    Ok(steps)
}
