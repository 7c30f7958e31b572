//! Biconnected blocks and cut vertices (iterative lowpoint algorithm).

use super::UndirectedGraph;

/// Decomposition of a graph into biconnected blocks.
///
/// Blocks are maximal sets of edges where any two edges lie on a common
/// simple cycle; a bridge forms a two-vertex block and an isolated vertex a
/// singleton block. Blocks are listed with sorted vertex sets, ordered
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// For each edge index of the input graph, the index into `blocks`.
    pub edge_to_block: Vec<usize>,
}

impl BlockDecomposition {
    /// Edge indices belonging to block `b`.
    pub fn block_edges(&self, b: usize) -> Vec<usize> {
        self.edge_to_block
            .iter()
            .enumerate()
            .filter(|&(_, &blk)| blk == b)
            .map(|(e, _)| e)
            .collect()
    }
}

struct Frame {
    u: usize,
    parent_edge: usize,
    next: usize,
}

pub fn biconnected_blocks(g: &UndirectedGraph) -> BlockDecomposition {
    let n = g.n();
    let m = g.m();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut raw_blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of_edge = vec![usize::MAX; m];

    let mut flush_block =
        |edge_stack: &mut Vec<usize>, up_to: usize, blocks: &mut Vec<Vec<usize>>| {
            let id = blocks.len();
            let mut members = Vec::new();
            loop {
                let e = edge_stack.pop().expect("tree edge present on edge stack");
                block_of_edge[e] = id;
                let (a, b) = g.edges()[e];
                members.push(a);
                members.push(b);
                if e == up_to {
                    break;
                }
            }
            members.sort_unstable();
            members.dedup();
            blocks.push(members);
        };

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            raw_blocks.push(vec![root]);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0usize;
        let mut stack = vec![Frame {
            u: root,
            parent_edge: usize::MAX,
            next: 0,
        }];
        while let Some(top) = stack.last_mut() {
            let u = top.u;
            if top.next < g.adj(u).len() {
                let w = g.adj(u)[top.next];
                top.next += 1;
                let e = g.edge_index(u, w).expect("adjacency lists match edges");
                if e == top.parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push(Frame {
                        u: w,
                        parent_edge: e,
                        next: 0,
                    });
                } else if disc[w] < disc[u] {
                    // Back edge; forward-pointing repeats are skipped.
                    edge_stack.push(e);
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                let finished = stack.pop().expect("frame exists");
                if let Some(parent) = stack.last() {
                    let p = parent.u;
                    low[p] = low[p].min(low[finished.u]);
                    if low[finished.u] >= disc[p] {
                        // p separates the finished subtree: close its block.
                        flush_block(&mut edge_stack, finished.parent_edge, &mut raw_blocks);
                        if p != root {
                            is_cut[p] = true;
                        }
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    debug_assert!(edge_stack.is_empty());
    debug_assert!(block_of_edge.iter().all(|&b| b != usize::MAX));

    // Canonical order: sort blocks lexicographically and remap edge ids.
    let mut order: Vec<usize> = (0..raw_blocks.len()).collect();
    order.sort_by(|&a, &b| raw_blocks[a].cmp(&raw_blocks[b]));
    let mut rank = vec![0usize; raw_blocks.len()];
    for (new_id, &old_id) in order.iter().enumerate() {
        rank[old_id] = new_id;
    }
    let mut blocks = vec![Vec::new(); raw_blocks.len()];
    for (old_id, members) in raw_blocks.into_iter().enumerate() {
        blocks[rank[old_id]] = members;
    }
    let edge_to_block = block_of_edge.iter().map(|&b| rank[b]).collect();
    let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();

    BlockDecomposition {
        blocks,
        cut_vertices,
        edge_to_block,
    }
}
