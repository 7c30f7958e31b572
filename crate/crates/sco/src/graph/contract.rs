//! Contraction of a connected vertex set into a single vertex.

use super::UndirectedGraph;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContractError {
    /// The set must induce a connected, nonempty subgraph.
    DisconnectedContractionSet,
}

impl fmt::Display for ContractError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContractError::DisconnectedContractionSet => {
                write!(f, "contraction set is empty or induces a disconnected subgraph")
            }
        }
    }
}

impl std::error::Error for ContractError {}

/// Merges the connected set `s` into one vertex, dropping arising loops and
/// parallel edges. The merged vertex takes the slot of `min(s)`; remaining
/// vertices keep their relative order. Returns the contracted graph and the
/// old-to-new vertex map.
pub fn contract(
    g: &UndirectedGraph,
    s: &[usize],
) -> Result<(UndirectedGraph, Vec<usize>), ContractError> {
    let mut set: Vec<usize> = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        return Err(ContractError::DisconnectedContractionSet);
    }
    assert!(
        *set.last().unwrap() < g.n(),
        "contraction set vertex out of range"
    );
    let (sub, _) = g.induced_subgraph(&set);
    if !sub.is_connected() {
        return Err(ContractError::DisconnectedContractionSet);
    }
    let anchor = set[0];
    let in_set = {
        let mut flags = vec![false; g.n()];
        for &v in &set {
            flags[v] = true;
        }
        flags
    };
    let mut map = vec![usize::MAX; g.n()];
    let mut next = 0;
    let mut anchor_new = usize::MAX;
    for v in 0..g.n() {
        if in_set[v] {
            if v == anchor {
                anchor_new = next;
                next += 1;
            }
            continue;
        }
        map[v] = next;
        next += 1;
    }
    for &v in &set {
        map[v] = anchor_new;
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| {
            let (nu, nv) = (map[u], map[v]);
            (nu != nv).then(|| (nu.min(nv), nu.max(nv)))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let h = UndirectedGraph::new(next, &edges).expect("deduplicated contraction is simple");
    Ok((h, map))
}
