//! Planarity testing: cheap pre-filters followed by the left-right criterion
//! (Brandes' formulation of the de Fraysseix-Rosenstiehl test).

use serde::Serialize;

use crate::error::{check_cap, Result};
use crate::graph::Graph;
use crate::invariants::bipartite::is_bipartite;
use crate::limits::Limits;

/// Which test decided planarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanarityMethod {
    /// Maximum degree at most two: disjoint paths and cycles.
    MaxDegreeAtMostTwo,
    /// `e > 3v - 6`.
    EulerBound,
    /// Bipartite with `e > 2v - 4`.
    BipartiteEulerBound,
    LeftRight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Planarity {
    pub planar: bool,
    pub method: PlanarityMethod,
}

/// Some Euler-formula bound proves `g` nonplanar. The bounds hold for every
/// simple planar graph on at least three vertices, connected or not.
pub fn euler_bound_violation(g: &Graph) -> Option<PlanarityMethod> {
    let v = g.vertex_count();
    let e = g.edge_count();
    if v < 3 {
        return None;
    }
    if e > 3 * v - 6 {
        return Some(PlanarityMethod::EulerBound);
    }
    if e > 2 * v - 4 && is_bipartite(g).bipartite {
        return Some(PlanarityMethod::BipartiteEulerBound);
    }
    None
}

/// Pre-filters first; the full test only runs within the planarity edge cap.
pub fn planarity_test(g: &Graph, limits: &Limits) -> Result<Planarity> {
    if g.max_degree() <= 2 {
        return Ok(Planarity {
            planar: true,
            method: PlanarityMethod::MaxDegreeAtMostTwo,
        });
    }
    if let Some(method) = euler_bound_violation(g) {
        return Ok(Planarity {
            planar: false,
            method,
        });
    }
    check_cap(
        "edge count for planarity test",
        g.edge_count() as u64,
        limits.planarity_edge_cap,
    )?;
    Ok(Planarity {
        planar: lr_planarity(g),
        method: PlanarityMethod::LeftRight,
    })
}

/// Left-right planarity test. Linear time, iterative (no recursion on the
/// DFS depth).
pub fn lr_planarity(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n > 2 && m > 3 * n - 6 {
        return false;
    }
    LrState::new(g).run()
}

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: None,
        high: None,
    };

    fn edge(e: usize) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy)]
struct ConflictPair {
    id: usize,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }

    fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }
}

struct LrState {
    n: usize,
    /// Undirected adjacency as `(neighbour, edge id)`.
    adjs: Vec<Vec<(usize, usize)>>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    roots: Vec<usize>,
    reference: Vec<Option<usize>>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<Option<usize>>,
    stack: Vec<ConflictPair>,
    next_pair_id: usize,
}

impl LrState {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut adjs = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in g.edges() {
            adjs[u].push((v, m));
            adjs[v].push((u, m));
            m += 1;
        }
        LrState {
            n,
            adjs,
            src: vec![NONE; m],
            tgt: vec![NONE; m],
            oriented: vec![false; m],
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out_edges: vec![Vec::new(); n],
            roots: Vec::new(),
            reference: vec![None; m],
            lowpt_edge: vec![NONE; m],
            stack_bottom: vec![None; m],
            stack: Vec::new(),
            next_pair_id: 0,
        }
    }

    fn run(mut self) -> bool {
        for v in 0..self.n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.n {
            let depth = &self.nesting_depth;
            self.out_edges[v].sort_by_key(|&e| depth[e]);
        }
        let roots = std::mem::take(&mut self.roots);
        roots.into_iter().all(|r| self.test(r))
    }

    /// DFS orientation: heights, lowpoints and nesting depths.
    fn orient(&mut self, root: usize) {
        let mut ind = vec![0usize; self.n];
        let mut skip_init = vec![false; self.src.len()];
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            while ind[v] < self.adjs[v].len() {
                let (w, vw) = self.adjs[v][ind[v]];
                if self.oriented[vw] {
                    if self.src[vw] != v || !skip_init[vw] {
                        ind[v] += 1;
                        continue;
                    }
                    // Returning from the tree edge vw: fall through.
                } else {
                    self.oriented[vw] = true;
                    self.src[vw] = v;
                    self.tgt[vw] = w;
                    self.out_edges[v].push(vw);
                    self.lowpt[vw] = self.height[v];
                    self.lowpt2[vw] = self.height[v];
                    if self.height[w] == NONE {
                        self.parent_edge[w] = vw;
                        self.height[w] = self.height[v] + 1;
                        dfs.push(v);
                        dfs.push(w);
                        skip_init[vw] = true;
                        break;
                    }
                    self.lowpt[vw] = self.height[w];
                }

                self.nesting_depth[vw] = 2 * self.lowpt[vw];
                if self.lowpt2[vw] < self.height[v] {
                    // chordal
                    self.nesting_depth[vw] += 1;
                }

                if e != NONE {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn top_id(&self) -> Option<usize> {
        self.stack.last().map(|p| p.id)
    }

    fn new_pair(&mut self, left: Interval, right: Interval) -> ConflictPair {
        let id = self.next_pair_id;
        self.next_pair_id += 1;
        ConflictPair { id, left, right }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on the stack"),
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    /// DFS testing the left-right constraints.
    fn test(&mut self, root: usize) -> bool {
        let mut ind = vec![0usize; self.n];
        let mut skip_init = vec![false; self.src.len()];
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            let mut descended = false;
            while ind[v] < self.out_edges[v].len() {
                let ei = self.out_edges[v][ind[v]];
                let w = self.tgt[ei];
                if !skip_init[ei] {
                    self.stack_bottom[ei] = self.top_id();
                    if self.parent_edge[w] == ei {
                        dfs.push(v);
                        dfs.push(w);
                        skip_init[ei] = true;
                        descended = true;
                        break;
                    }
                    self.lowpt_edge[ei] = ei;
                    let pair = self.new_pair(Interval::EMPTY, Interval::edge(ei));
                    self.stack.push(pair);
                }

                if self.lowpt[ei] < self.height[v] {
                    if ei == self.out_edges[v][0] {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if !descended && e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = self.new_pair(Interval::EMPTY, Interval::EMPTY);
        // Merge the return edges of ei into p.right.
        loop {
            let mut q = self.stack.pop().expect("return edge of ei on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(l) = p.right.low {
                    self.reference[l] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q_low] = Some(self.lowpt_edge[e]);
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        // Merge conflicting return edges of earlier siblings into p.left.
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.reference[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(l) = p.left.low {
                self.reference[l] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !p.is_empty() {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.tgt[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.tgt[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(l) = p.right.low {
                    self.reference[l] = p.left.low;
                    p.right.low = None;
                }
            }
            if !p.is_empty() {
                self.stack.push(p);
            }
        }
        // The side of e follows a highest return edge.
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.reference[e] = match (hl, hr) {
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => hl,
                    (Some(_), None) => hl,
                    _ => hr,
                };
            }
        }
    }
}
