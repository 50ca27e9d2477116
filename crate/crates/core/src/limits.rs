use serde::{Deserialize, Serialize};

/// Size caps shared by every enumerator and solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Maximum ring size / vertex count of a built graph.
    pub vertex_cap: u64,
    pub edge_cap: u64,
    /// Maximum ring size for exhaustive polynomial involution search.
    pub brute_force_cap: u64,
    /// Maximum modulus for the plain Z_n scan.
    pub zn_brute_force_cap: u64,
    /// Maximum vertex count handed to the exact independent-set solver.
    pub exact_solver_cap: u64,
    /// Maximum edge count for the full planarity test (pre-filters run regardless).
    pub planarity_edge_cap: u64,
    /// Maximum vertex count for the self-complementarity isomorphism search.
    pub isomorphism_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertex_cap: 200_000,
            edge_cap: 2_000_000,
            brute_force_cap: 50_000,
            zn_brute_force_cap: 1_000_000,
            exact_solver_cap: 64,
            planarity_edge_cap: 5_000,
            isomorphism_cap: 12,
        }
    }
}
