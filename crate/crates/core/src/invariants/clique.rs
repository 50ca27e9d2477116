use crate::graph::Graph;

/// A maximum clique, found by branch and bound over forward neighbourhoods.
/// Among maximum cliques the first one met in lowest-index-first order wins.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    let mut current = Vec::new();
    for v in 0..g.vertex_count() {
        let forward: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        if forward.len() < best.len() {
            continue;
        }
        current.push(v);
        expand(g, &mut current, &forward, &mut best);
        current.pop();
    }
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

fn expand(g: &Graph, current: &mut Vec<usize>, candidates: &[usize], best: &mut Vec<usize>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    for (i, &v) in candidates.iter().enumerate() {
        if current.len() + (candidates.len() - i) <= best.len() {
            return;
        }
        let next = intersect_sorted(&candidates[i + 1..], g.neighbors(v));
        current.push(v);
        expand(g, current, &next, best);
        current.pop();
    }
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_cayley_graph;
    use crate::{Limits, PolyRingSpec};

    fn omega(n: u64, d: u32) -> usize {
        let g = build_cayley_graph(PolyRingSpec::new(n, d).unwrap(), &Limits::default()).unwrap();
        clique_number(&g)
    }

    #[test]
    fn examples() {
        assert_eq!(omega(3, 2), 3);
        assert_eq!(omega(5, 1), 2);
        assert_eq!(omega(6, 1), 2);
    }

    #[test]
    fn generic_graphs() {
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        assert_eq!(clique_number(&Graph::empty(4)), 1);
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        edges.push((5, 0));
        let g = Graph::from_edges(6, &edges);
        assert_eq!(max_clique(&g), vec![0, 1, 2, 3, 4]);
        assert!(is_clique(&g, &max_clique(&g)));
    }
}
