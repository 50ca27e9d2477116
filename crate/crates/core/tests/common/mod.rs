//! Naive reference implementations shared by the integration tests. Nothing
//! here calls into the library's algorithms; polynomials are plain coefficient
//! vectors, lowest degree first, indexed in mixed radix `sum a_i n^i`.

#![allow(dead_code)]

pub fn poly_of_index(mut index: usize, n: u64, d: u32) -> Vec<u64> {
    (0..=d)
        .map(|_| {
            let c = (index as u64) % n;
            index /= n as usize;
            c
        })
        .collect()
}

pub fn index_of_poly(coeffs: &[u64], n: u64) -> usize {
    coeffs
        .iter()
        .rev()
        .fold(0usize, |acc, &c| acc * n as usize + c as usize)
}

/// `f^2 == 1` with the full product, no truncation.
pub fn squares_to_one(f: &[u64], n: u64) -> bool {
    let mut sq = vec![0u64; 2 * f.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in f.iter().enumerate() {
            sq[i + j] = (sq[i + j] + a * b) % n;
        }
    }
    sq[0] == 1 % n && sq[1..].iter().all(|&c| c == 0)
}

pub fn ring_size(n: u64, d: u32) -> usize {
    (n as usize).pow(d + 1)
}

pub fn naive_involutions(n: u64, d: u32) -> Vec<Vec<u64>> {
    (0..ring_size(n, d))
        .map(|i| poly_of_index(i, n, d))
        .filter(|f| squares_to_one(f, n))
        .collect()
}

pub fn naive_zn_involutions(n: u64) -> Vec<u64> {
    (1..n).filter(|&u| u * u % n == 1).collect()
}

pub fn poly_sub(a: &[u64], b: &[u64], n: u64) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| (x + n - y) % n).collect()
}

pub fn adjacent(a: &[u64], b: &[u64], n: u64) -> bool {
    squares_to_one(&poly_sub(a, b, n), n)
}

/// Adjacency lists: each vertex translated by every naively found involution.
pub fn naive_adjacency(n: u64, d: u32) -> Vec<Vec<usize>> {
    let size = ring_size(n, d);
    let inv = naive_involutions(n, d);
    (0..size)
        .map(|v| {
            let f = poly_of_index(v, n, d);
            let mut out: Vec<usize> = inv
                .iter()
                .map(|u| {
                    let g: Vec<u64> = f.iter().zip(u).map(|(&a, &b)| (a + b) % n).collect();
                    index_of_poly(&g, n)
                })
                .collect();
            out.sort_unstable();
            out
        })
        .collect()
}

pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Component sizes, sorted.
pub fn component_sizes(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut uf = UnionFind::new(adj.len());
    for (v, ns) in adj.iter().enumerate() {
        for &w in ns {
            uf.union(v, w);
        }
    }
    let mut counts = std::collections::BTreeMap::new();
    for v in 0..adj.len() {
        *counts.entry(uf.find(v)).or_insert(0usize) += 1;
    }
    let mut sizes: Vec<usize> = counts.into_values().collect();
    sizes.sort_unstable();
    sizes
}

/// Largest independent set by scanning every subset. Only for `<= 20` vertices.
pub fn subset_scan_independence(adj: &[Vec<usize>]) -> usize {
    let v = adj.len();
    assert!(v <= 20);
    let masks: Vec<u32> = adj
        .iter()
        .map(|ns| ns.iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    (0u32..1 << v)
        .filter(|&s| (0..v).all(|i| s & (1 << i) == 0 || masks[i] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
