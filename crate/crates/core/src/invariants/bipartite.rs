use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::PolyRingSpec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BipartiteCertificate {
    Bipartition(Bipartition),
    /// Vertex sequence of an odd cycle; consecutive entries and the last/first
    /// pair are adjacent.
    OddCycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartiteness {
    pub bipartite: bool,
    pub certificate: BipartiteCertificate,
}

/// BFS 2-colouring from the lowest vertex of each component, neighbours in
/// ascending order. The first monochromatic edge found yields the odd cycle.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Bipartiteness {
                        bipartite: false,
                        certificate: BipartiteCertificate::OddCycle(tree_cycle(
                            &parent, &depth, u, w,
                        )),
                    };
                }
            }
        }
    }
    let (side_a, side_b) = (0..n).partition(|&v| color[v] == 0);
    Bipartiteness {
        bipartite: true,
        certificate: BipartiteCertificate::Bipartition(Bipartition { side_a, side_b }),
    }
}

/// Cycle formed by the tree paths from `u` and `w` to their common ancestor
/// plus the edge `u - w`.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Split by the parity class of the constant term: side A holds the elements
/// whose constant coefficient lies in `2 Z_n`. Requires even `n`.
pub fn theorem_bipartition(spec: PolyRingSpec) -> Result<Bipartition> {
    if !spec.n.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "parity bipartition needs an even modulus, got {}",
            spec.n
        )));
    }
    // index mod n is the constant coefficient.
    let (side_a, side_b) =
        (0..spec.size() as usize).partition(|&v| (v as u64 % spec.n).is_multiple_of(2));
    Ok(Bipartition { side_a, side_b })
}

/// Both sides partition the vertex set and no edge stays inside a side.
pub fn is_proper_bipartition(g: &Graph, part: &Bipartition) -> bool {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    for (list, s) in [(&part.side_a, 0u8), (&part.side_b, 1u8)] {
        for &v in list {
            if v >= n || side[v] != u8::MAX {
                return false;
            }
            side[v] = s;
        }
    }
    side.iter().all(|&s| s != u8::MAX) && g.edges().all(|(u, v)| side[u] != side[v])
}

pub fn is_odd_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let mut distinct = cycle.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    k % 2 == 1
        && k >= 3
        && distinct.len() == k
        && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}
