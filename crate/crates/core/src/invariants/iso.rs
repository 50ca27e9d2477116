use crate::error::{check_cap, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// Isomorphism `g -> h` by backtracking over degree-compatible images, if any.
/// Meant for small graphs.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let order = search_order(g);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Highest degree first, then repeatedly the vertex with most placed neighbours.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            weight[w] += 1;
        }
    }
    order
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for image in 0..h.vertex_count() {
        if used[image] || h.degree(image) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], image));
        if !consistent {
            continue;
        }
        map[v] = image;
        used[image] = true;
        if extend(g, h, order, depth + 1, map, used) {
            return true;
        }
        used[image] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Isomorphic to its complement. Edge-count and degree-sequence necessary
/// conditions are decided at any size; only the final search is capped.
pub fn is_self_complementary(g: &Graph, limits: &Limits) -> Result<bool> {
    let n = g.vertex_count();
    if 4 * g.edge_count() != n * n.saturating_sub(1) {
        return Ok(false);
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut comp_deg: Vec<usize> = deg.iter().map(|&k| n - 1 - k).collect();
    deg.sort_unstable();
    comp_deg.sort_unstable();
    if deg != comp_deg {
        return Ok(false);
    }
    check_cap(
        "vertex count for self-complementarity",
        n as u64,
        limits.isomorphism_cap,
    )?;
    Ok(find_isomorphism(g, &g.complement()).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cayley_graph, tensor_product};
    use crate::PolyRingSpec;

    fn cayley(n: u64, d: u32) -> crate::CayleyGraph {
        build_cayley_graph(PolyRingSpec::new(n, d).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn examples() {
        let l = Limits::default();
        assert!(is_self_complementary(&cayley(5, 0), &l).unwrap());
        let k3 = cayley(3, 0);
        assert!(is_self_complementary(&tensor_product(&k3, &k3).unwrap(), &l).unwrap());
        assert!(!is_self_complementary(&cayley(4, 0), &l).unwrap());
    }

    #[test]
    fn isomorphism_map_is_valid() {
        let c5 = cayley(5, 0);
        let comp = c5.complement();
        let map = find_isomorphism(&c5, &comp).unwrap();
        for (u, v) in c5.edges() {
            assert!(comp.has_edge(map[u], map[v]));
        }
        // P4 is self-complementary; the 4-star is not isomorphic to P4.
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(is_self_complementary(&p4, &l()).unwrap());
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(find_isomorphism(&p4, &star).is_none());
    }

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn cap_only_after_necessary_conditions() {
        // 13-vertex Paley graph passes both filters and hits the cap.
        let residues: Vec<usize> = (1..13).map(|x| x * x % 13).collect();
        let mut e = Vec::new();
        for u in 0..13 {
            for v in u + 1..13 {
                if residues.contains(&(v - u)) {
                    e.push((u, v));
                }
            }
        }
        let paley = Graph::from_edges(13, &e);
        assert!(is_self_complementary(&paley, &l()).is_err());
        let wide = Limits {
            isomorphism_cap: 13,
            ..l()
        };
        assert!(is_self_complementary(&paley, &wide).unwrap());
        // A large graph with the wrong edge count is rejected without search.
        assert!(!is_self_complementary(&cayley(5, 2), &l()).unwrap());
    }
}
