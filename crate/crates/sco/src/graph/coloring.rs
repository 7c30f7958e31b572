//! Exact chromatic number with a proper-coloring certificate.

use super::{bipartition, UndirectedGraph};

/// A proper vertex coloring with colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

/// Result of [`chromatic_number`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringOutcome {
    /// The chromatic number together with an optimal coloring.
    Colored(Coloring),
    /// The chromatic number exceeds the permitted bound.
    Exceeded,
}

/// Checks that `c` colors every vertex of `g` properly within `1..=c.k`.
pub fn verify_coloring(g: &UndirectedGraph, c: &Coloring) -> bool {
    c.colors.len() == g.n()
        && c.colors.iter().all(|&x| (1..=c.k).contains(&x))
        && g.edges().iter().all(|&(u, v)| c.colors[u] != c.colors[v])
}

/// Computes the chromatic number of `g`, or `Exceeded` if it is larger
/// than `max_k`.
///
/// Strategy: dispatch the 0/1/2-chromatic cases directly, then squeeze the
/// answer between a greedy clique lower bound (at least 3 once the graph is
/// non-bipartite) and a saturation-greedy upper bound, deciding each
/// intermediate k by exact backtracking.
pub fn chromatic_number(g: &UndirectedGraph, max_k: usize) -> ColoringOutcome {
    let n = g.n();
    if n == 0 {
        return ColoringOutcome::Colored(Coloring {
            colors: Vec::new(),
            k: 0,
        });
    }
    if g.m() == 0 {
        if max_k < 1 {
            return ColoringOutcome::Exceeded;
        }
        return ColoringOutcome::Colored(Coloring {
            colors: vec![1; n],
            k: 1,
        });
    }
    if let Ok(b) = bipartition(g) {
        if max_k < 2 {
            return ColoringOutcome::Exceeded;
        }
        return ColoringOutcome::Colored(Coloring {
            colors: b.side.iter().map(|&s| s as usize + 1).collect(),
            k: 2,
        });
    }
    let lb = greedy_clique(g).len().max(3);
    let ub_coloring = dsatur(g);
    for k in lb..=ub_coloring.k {
        if k > max_k {
            return ColoringOutcome::Exceeded;
        }
        if k == ub_coloring.k {
            return ColoringOutcome::Colored(ub_coloring);
        }
        if let Some(c) = is_k_colorable(g, k) {
            return ColoringOutcome::Colored(c);
        }
    }
    unreachable!("the saturation-greedy coloring bounds the loop")
}

/// Decides k-colorability exactly, returning a witness coloring.
pub fn is_k_colorable(g: &UndirectedGraph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring {
            colors: Vec::new(),
            k,
        });
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![0usize; n];
    if color_rec(g, k, &mut colors, 0) {
        Some(Coloring { colors, k })
    } else {
        None
    }
}

/// Backtracking k-coloring: always extend the vertex with the most
/// distinctly colored neighbors (ties: higher degree, then lower id), and
/// allow at most one brand-new color per step.
fn color_rec(g: &UndirectedGraph, k: usize, colors: &mut Vec<usize>, used_max: usize) -> bool {
    let n = g.n();
    let mut pick: Option<(usize, usize)> = None; // (vertex, saturation)
    for v in 0..n {
        if colors[v] != 0 {
            continue;
        }
        let sat = saturation(g, colors, v).count_ones() as usize;
        let better = match pick {
            None => true,
            Some((best, best_sat)) => {
                sat > best_sat || (sat == best_sat && g.degree(v) > g.degree(best))
            }
        };
        if better {
            pick = Some((v, sat));
        }
    }
    let Some((v, _)) = pick else {
        return true;
    };
    let forbidden = saturation(g, colors, v);
    let limit = k.min(used_max + 1);
    for c in 1..=limit {
        if forbidden >> c & 1 == 0 {
            colors[v] = c;
            if color_rec(g, k, colors, used_max.max(c)) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

/// Bitmask (bit c set = some neighbor wears color c) of colors adjacent
/// to v. Colors are bounded by n in practice; 127 supported here.
fn saturation(g: &UndirectedGraph, colors: &[usize], v: usize) -> u128 {
    let mut mask = 0u128;
    for &w in g.adj(v) {
        if colors[w] != 0 {
            mask |= 1 << colors[w];
        }
    }
    mask
}

/// Greedy clique: seed at every vertex, absorb neighbors by descending
/// degree. A lower bound for the chromatic number.
fn greedy_clique(g: &UndirectedGraph) -> Vec<usize> {
    let mut by_degree: Vec<usize> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut best: Vec<usize> = Vec::new();
    for &seed in &by_degree {
        if g.degree(seed) + 1 <= best.len() {
            break;
        }
        let mut clique = vec![seed];
        let mut candidates: Vec<usize> = g.adj(seed).to_vec();
        candidates.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in candidates {
            if clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Saturation-greedy (no backtracking) upper-bound coloring.
fn dsatur(g: &UndirectedGraph) -> Coloring {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut k = 0;
    for _ in 0..n {
        let mut pick = None;
        for v in 0..n {
            if colors[v] != 0 {
                continue;
            }
            let sat = saturation(g, &colors, v).count_ones() as usize;
            let better = match pick {
                None => true,
                Some((best, best_sat)) => {
                    sat > best_sat || (sat == best_sat && g.degree(v) > g.degree(best))
                }
            };
            if better {
                pick = Some((v, sat));
            }
        }
        let (v, _) = pick.expect("an uncolored vertex remains");
        let forbidden = saturation(g, &colors, v);
        let c = (1..).find(|&c| forbidden >> c & 1 == 0).unwrap();
        colors[v] = c;
        k = k.max(c);
    }
    Coloring { colors, k }
}
