use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;

/// Connected-component labeling. Components are numbered in order of their
/// lowest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub labels: Vec<usize>,
    pub count: usize,
    pub sizes: Vec<usize>,
}

/// One entry of the component-size multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SizeClass {
    pub size: usize,
    pub count: usize,
}

impl Components {
    /// True when every component has the same size (always so for Cayley graphs).
    pub fn is_uniform(&self) -> bool {
        self.sizes.windows(2).all(|w| w[0] == w[1])
    }

    /// Lowest vertex of each component.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.count];
        for (v, &c) in self.labels.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = v;
            }
        }
        reps
    }

    pub fn members(&self, component: usize) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&v| self.labels[v] == component)
            .collect()
    }

    /// Size multiset as ascending `(size, count)` classes.
    pub fn size_classes(&self) -> Vec<SizeClass> {
        let mut sorted = self.sizes.clone();
        sorted.sort_unstable();
        let mut out: Vec<SizeClass> = Vec::new();
        for s in sorted {
            match out.last_mut() {
                Some(c) if c.size == s => c.count += 1,
                _ => out.push(SizeClass { size: s, count: 1 }),
            }
        }
        out
    }
}

pub fn connected_components(g: &Graph) -> Components {
    let n = g.vertex_count();
    let mut labels = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        let c = sizes.len();
        labels[start] = c;
        queue.push_back(start);
        let mut size = 0;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &w in g.neighbors(u) {
                if labels[w] == usize::MAX {
                    labels[w] = c;
                    queue.push_back(w);
                }
            }
        }
        sizes.push(size);
    }
    Components {
        labels,
        count: sizes.len(),
        sizes,
    }
}
