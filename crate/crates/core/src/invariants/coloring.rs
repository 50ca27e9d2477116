use crate::graph::Graph;
use crate::invariants::bipartite::is_bipartite;
use crate::invariants::clique::clique_number;
use crate::invariants::components::connected_components;

/// Exact chromatic number: the maximum over components.
pub fn chromatic_number(g: &Graph) -> usize {
    let comps = connected_components(g);
    (0..comps.count)
        .map(|c| component_chromatic_number(&g.induced_subgraph(&comps.members(c))))
        .max()
        .unwrap_or(0)
}

/// Exact chromatic number of a graph assumed connected (correct regardless,
/// only slower otherwise).
pub fn component_chromatic_number(g: &Graph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    if is_bipartite(g).bipartite {
        return 2;
    }
    let mut k = clique_number(g).max(3);
    loop {
        if color_with(g, k).is_some() {
            return k;
        }
        k += 1;
    }
}

/// A proper colouring with at most `k` colours, if one exists.
/// DSATUR-ordered backtracking, one component at a time so a failure never
/// backtracks into components that are already coloured.
pub fn color_with(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let comps = connected_components(g);
    let mut colors = vec![usize::MAX; g.vertex_count()];
    for c in 0..comps.count {
        let members = comps.members(c);
        let sub = g.induced_subgraph(&members);
        let mut local = vec![usize::MAX; members.len()];
        if !backtrack(&sub, k, &mut local, 0, 0) {
            return None;
        }
        for (&v, &col) in members.iter().zip(&local) {
            colors[v] = col;
        }
    }
    Some(colors)
}

fn backtrack(g: &Graph, k: usize, colors: &mut [usize], colored: usize, used: usize) -> bool {
    if colored == colors.len() {
        return true;
    }
    let v = pick_vertex(g, colors);
    let mut forbidden = vec![false; k];
    for &w in g.neighbors(v) {
        if colors[w] != usize::MAX {
            forbidden[colors[w]] = true;
        }
    }
    // A fresh colour is interchangeable with any other unused one.
    let limit = (used + 1).min(k);
    for (c, &blocked) in forbidden.iter().enumerate().take(limit) {
        if blocked {
            continue;
        }
        colors[v] = c;
        if backtrack(g, k, colors, colored + 1, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Uncoloured vertex of maximum saturation, then maximum degree, then lowest index.
fn pick_vertex(g: &Graph, colors: &[usize]) -> usize {
    let mut best = (0usize, 0usize, usize::MAX);
    let mut seen = Vec::new();
    for v in 0..colors.len() {
        if colors[v] != usize::MAX {
            continue;
        }
        seen.clear();
        seen.extend(
            g.neighbors(v)
                .iter()
                .map(|&w| colors[w])
                .filter(|&c| c != usize::MAX),
        );
        seen.sort_unstable();
        seen.dedup();
        let key = (seen.len(), g.degree(v));
        if best.2 == usize::MAX || key > (best.0, best.1) {
            best = (key.0, key.1, v);
        }
    }
    best.2
}

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.vertex_count() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_cayley_graph;
    use crate::{Limits, PolyRingSpec};

    fn chi(n: u64, d: u32) -> usize {
        let g = build_cayley_graph(PolyRingSpec::new(n, d).unwrap(), &Limits::default()).unwrap();
        chromatic_number(&g)
    }

    #[test]
    fn examples() {
        assert_eq!(chi(6, 1), 2);
        assert_eq!(chi(15, 0), 3);
        assert_eq!(chi(9, 1), 3);
        assert_eq!(chi(3, 0), 3);
    }

    #[test]
    fn generic_graphs() {
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
        assert_eq!(chromatic_number(&Graph::empty(3)), 1);
        // Wheel on a 5-cycle hub: chi = 4 with omega = 3.
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let w5 = Graph::from_edges(6, &edges);
        assert_eq!(chromatic_number(&w5), 4);
        let c = color_with(&w5, 4).unwrap();
        assert!(is_proper_coloring(&w5, &c));
        assert!(color_with(&w5, 3).is_none());
    }
}
