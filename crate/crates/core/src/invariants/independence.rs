use crate::error::{check_cap, Result};
use crate::graph::Graph;
use crate::invariants::components::Components;
use crate::limits::Limits;

/// Exact independence number. Graphs above the solver cap are split into
/// components, each of which must fit the cap.
pub fn independence_number(g: &Graph, components: &Components, limits: &Limits) -> Result<usize> {
    if g.vertex_count() as u64 <= limits.exact_solver_cap {
        return solve(g, limits);
    }
    let mut total = 0;
    for c in 0..components.count {
        check_cap(
            "component size for exact independence number",
            components.sizes[c] as u64,
            limits.exact_solver_cap,
        )?;
        total += solve(&g.induced_subgraph(&components.members(c)), limits)?;
    }
    Ok(total)
}

/// For a disjoint union of isomorphic components: solve the component of
/// vertex 0 and multiply by the component count.
pub fn independence_number_identical_components(
    g: &Graph,
    components: &Components,
    limits: &Limits,
) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let one = solve(
        &g.induced_subgraph(&components.members(components.labels[0])),
        limits,
    )?;
    Ok(one * components.count)
}

fn solve(g: &Graph, limits: &Limits) -> Result<usize> {
    let n = g.vertex_count();
    check_cap(
        "vertex count for exact independence number",
        n as u64,
        limits.exact_solver_cap.min(64),
    )?;
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1u64 << w)))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(mis(&adj, all) as usize)
}

/// Maximum independent set size within the vertex mask `p`.
fn mis(adj: &[u64], p: u64) -> u32 {
    if p == 0 {
        return 0;
    }
    let mut min_v = 0usize;
    let mut min_d = u32::MAX;
    let mut max_v = 0usize;
    let mut max_d = 0u32;
    let mut rest = p;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & p).count_ones();
        if d < min_d {
            min_d = d;
            min_v = v;
        }
        if d > max_d {
            max_d = d;
            max_v = v;
        }
    }
    // Some maximum independent set contains any vertex of degree at most one.
    if min_d <= 1 {
        return 1 + mis(adj, p & !(adj[min_v] | (1u64 << min_v)));
    }
    let with = 1 + mis(adj, p & !(adj[max_v] | (1u64 << max_v)));
    let without = mis(adj, p & !(1u64 << max_v));
    with.max(without)
}
