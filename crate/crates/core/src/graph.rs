//! Involutory Cayley graphs, tensor products and the CRT decomposition check.

use std::ops::Deref;

use crate::error::{check_cap, Error, Result};
use crate::limits::Limits;
use crate::poly::{involutions_closed_form, PolyRingSpec, TruncPoly};
use crate::ring::factorize;

/// Simple undirected graph on `0..vertex_count` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds from an edge list; loops and repeated edges are dropped.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            assert!(
                u < vertex_count && v < vertex_count,
                "edge ({u}, {v}) out of range"
            );
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    /// Adopts adjacency lists as given. Lists must already be sorted,
    /// symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Graph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, lexicographically ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph { adj }
    }

    /// Subgraph induced by `vertices`; vertex `k` of the result is `vertices[k]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in vertices.iter().enumerate() {
            pos[v] = k;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (pos[w] != usize::MAX).then_some(pos[w]))
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        Graph { adj }
    }

    pub fn is_symmetric_simple(&self) -> bool {
        self.adj.iter().enumerate().all(|(u, l)| {
            l.windows(2).all(|w| w[0] < w[1])
                && l.iter()
                    .all(|&v| v != u && v < self.adj.len() && self.has_edge(v, u))
        })
    }
}

/// Common degree of a regular graph; [`Error::NotRegular`] otherwise.
pub fn regular_degree(g: &Graph) -> Result<usize> {
    let expected = if g.vertex_count() == 0 {
        0
    } else {
        g.degree(0)
    };
    for v in 0..g.vertex_count() {
        if g.degree(v) != expected {
            return Err(Error::NotRegular {
                vertex: v,
                found: g.degree(v),
                expected,
            });
        }
    }
    Ok(expected)
}

/// Bijection between ring elements and vertex indices, `index(f) = sum a_i n^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexCodec {
    pub spec: PolyRingSpec,
}

impl VertexCodec {
    pub fn len(&self) -> usize {
        self.spec.size() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, f: &TruncPoly) -> Result<usize> {
        if f.spec() != self.spec {
            return Err(Error::domain(format!(
                "element of {} given to codec for {}",
                f.spec(),
                self.spec
            )));
        }
        Ok(f.index() as usize)
    }

    pub fn element(&self, index: usize) -> TruncPoly {
        self.spec.element(index as u64)
    }
}

/// `G(R)` for `R = Z_n[x]/(x^(d+1))`.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    pub spec: PolyRingSpec,
    pub codec: VertexCodec,
    /// The involutions of `R`, sorted by index.
    pub connection_set: Vec<TruncPoly>,
    pub degree: usize,
    graph: Graph,
}

impl CayleyGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn element(&self, v: usize) -> TruncPoly {
        self.codec.element(v)
    }

    pub fn index_of(&self, f: &TruncPoly) -> Result<usize> {
        self.codec.index(f)
    }
}

impl Deref for CayleyGraph {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.graph
    }
}

/// Vertex `v` is joined to `v + u` for each involution `u`; built by
/// translating the connection set, never by comparing all pairs.
pub fn build_cayley_graph(spec: PolyRingSpec, limits: &Limits) -> Result<CayleyGraph> {
    check_cap("vertex count", spec.size(), limits.vertex_cap)?;
    let connection_set = involutions_closed_form(spec, limits)?;
    let n = spec.size();
    let degree = connection_set.len();
    check_cap("edge count", n * degree as u64 / 2, limits.edge_cap)?;

    let modulus = spec.n;
    let len = spec.coeff_count();
    let shifts: Vec<&[u64]> = connection_set.iter().map(TruncPoly::coeffs).collect();
    let mut digits = vec![0u64; len];
    let mut adj = Vec::with_capacity(n as usize);
    for v in 0..n {
        let mut rest = v;
        for d in digits.iter_mut() {
            *d = rest % modulus;
            rest /= modulus;
        }
        let mut list: Vec<usize> = shifts
            .iter()
            .map(|u| {
                let mut idx = 0u64;
                for i in (0..len).rev() {
                    idx = idx * modulus + (digits[i] + u[i]) % modulus;
                }
                idx as usize
            })
            .collect();
        list.sort_unstable();
        adj.push(list);
    }
    Ok(CayleyGraph {
        spec,
        codec: VertexCodec { spec },
        connection_set,
        degree,
        graph: Graph::from_sorted_adjacency(adj),
    })
}

/// Direct (Kronecker) product: `(u1, u2) ~ (v1, v2)` iff `u1 ~ v1` and
/// `u2 ~ v2`. Vertex `(a, b)` gets index `a * |V(g2)| + b`.
pub fn tensor_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n2 = g2.vertex_count();
    let n = g1
        .vertex_count()
        .checked_mul(n2)
        .ok_or_else(|| Error::domain("tensor product vertex count overflows"))?;
    let mut adj = Vec::with_capacity(n);
    for a in 0..g1.vertex_count() {
        for b in 0..n2 {
            let mut list = Vec::with_capacity(g1.degree(a) * g2.degree(b));
            for &a2 in g1.neighbors(a) {
                for &b2 in g2.neighbors(b) {
                    list.push(a2 * n2 + b2);
                }
            }
            // Already sorted: a2 ascending, then b2 ascending.
            adj.push(list);
        }
    }
    Ok(Graph::from_sorted_adjacency(adj))
}

/// Result of comparing `G(Z_n[x]_d)` with the product of its prime-power factors.
#[derive(Debug, Clone)]
pub struct CrtIsomorphism {
    pub holds: bool,
    /// Prime-power moduli of the factors, in product order.
    pub factors: Vec<u64>,
    /// `mapping[v]` is the product-graph vertex of ring vertex `v`.
    pub mapping: Vec<usize>,
}

/// Checks that reducing every coefficient modulo each prime power is an
/// isomorphism from `G(Z_n[x]_d)` onto the tensor product of the
/// `G(Z_q[x]_d)`.
pub fn crt_isomorphism_check(n: u64, d: u32, limits: &Limits) -> Result<CrtIsomorphism> {
    let spec = PolyRingSpec::new(n, d)?;
    let whole = build_cayley_graph(spec, limits)?;
    let factors = factorize(n)?.prime_powers();

    let mut product: Option<Graph> = None;
    let mut factor_specs = Vec::new();
    for &q in &factors {
        let fs = PolyRingSpec::new(q, d)?;
        let g = build_cayley_graph(fs, limits)?.graph;
        product = Some(match product {
            None => g,
            Some(p) => tensor_product(&p, &g)?,
        });
        factor_specs.push(fs);
    }
    let product = product.expect("n >= 2 has at least one prime-power factor");

    let mapping: Vec<usize> = (0..whole.vertex_count())
        .map(|v| {
            let f = whole.element(v);
            factor_specs.iter().fold(0usize, |acc, fs| {
                let reduced: Vec<u64> = f.coeffs().iter().map(|&c| c % fs.n).collect();
                let local = fs.poly(&reduced).expect("same length").index() as usize;
                acc * fs.size() as usize + local
            })
        })
        .collect();

    let mut seen = vec![false; product.vertex_count()];
    let mut bijective = mapping.len() == product.vertex_count();
    for &m in &mapping {
        if m >= seen.len() || std::mem::replace(&mut seen[m], true) {
            bijective = false;
            break;
        }
    }
    // Same edge count plus every edge mapped onto an edge gives both directions.
    let holds = bijective
        && whole.edge_count() == product.edge_count()
        && whole
            .edges()
            .all(|(u, v)| product.has_edge(mapping[u], mapping[v]));
    Ok(CrtIsomorphism {
        holds,
        factors,
        mapping,
    })
}
