use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

/// Length of a shortest cycle; `Infinite` for forests. Orders every finite
/// value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(k) => s.serialize_u64(*k as u64),
            Girth::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// Exact girth, BFS from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let roots: Vec<usize> = (0..g.vertex_count()).collect();
    girth_through(g, &roots)
}

/// Shortest cycle through any of `roots`. For a graph whose components are
/// vertex-transitive, one root per component gives the girth.
pub fn girth_through(g: &Graph, roots: &[usize]) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for &r in roots {
        for &v in &touched {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        touched.clear();
        dist[r] = 0;
        touched.push(r);
        queue.clear();
        queue.push_back(r);
        'bfs: while let Some(u) = queue.pop_front() {
            // Any cycle found from here on has length at least 2*dist[u] + 1.
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_cayley_graph;
    use crate::invariants::components::connected_components;
    use crate::{Limits, PolyRingSpec};

    fn cayley_girth(n: u64, d: u32) -> Girth {
        let g = build_cayley_graph(PolyRingSpec::new(n, d).unwrap(), &Limits::default()).unwrap();
        girth_through(&g, &connected_components(&g).representatives())
    }

    #[test]
    fn examples() {
        assert_eq!(cayley_girth(9, 1), Girth::Finite(9));
        assert_eq!(cayley_girth(2, 3), Girth::Infinite);
        assert_eq!(cayley_girth(12, 0), Girth::Finite(4));
        assert_eq!(cayley_girth(3, 0), Girth::Finite(3));
    }

    #[test]
    fn non_transitive_needs_all_roots() {
        // Triangle hanging off a path: a BFS from vertex 0 alone still finds it,
        // but from a single leaf of a long tail it must walk the tail.
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]);
        assert_eq!(girth(&g), Girth::Finite(3));
        let tree = Graph::from_edges(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]);
        assert_eq!(girth(&tree), Girth::Infinite);
        let two_cycles = Graph::from_edges(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 5),
            ],
        );
        assert_eq!(girth(&two_cycles), Girth::Finite(4));
    }

    #[test]
    fn ordering_and_json() {
        assert!(Girth::Finite(1000) < Girth::Infinite);
        assert_eq!(
            serde_json::to_string(&Girth::Infinite).unwrap(),
            "\"infinity\""
        );
        assert_eq!(serde_json::to_string(&Girth::Finite(4)).unwrap(), "4");
    }
}
