//! Exact graph invariants, each with a checkable certificate where one exists.
//!
//! The NP-hard invariants are solved per component. Components of a Cayley
//! graph are translates of each other, so [`compute_report`] solves the
//! component of vertex 0 and scales.

pub mod bipartite;
pub mod clique;
pub mod coloring;
pub mod components;
pub mod girth;
pub mod independence;
pub mod iso;
pub mod planarity;
pub mod witness;

use serde::Serialize;

pub use bipartite::{
    is_bipartite, is_proper_bipartition, theorem_bipartition, BipartiteCertificate, Bipartition,
};
pub use clique::{clique_number, max_clique};
pub use coloring::{chromatic_number, component_chromatic_number};
pub use components::{connected_components, Components, SizeClass};
pub use girth::{girth, girth_through, Girth};
pub use independence::{independence_number, independence_number_identical_components};
pub use iso::{find_isomorphism, is_self_complementary};
pub use planarity::{lr_planarity, planarity_test, Planarity, PlanarityMethod};
pub use witness::{k33_witness_z4, monomial_independent_set_check, K33Witness};

use crate::error::Error;
use crate::graph::{regular_degree, CayleyGraph};
use crate::limits::Limits;
use crate::poly::PolyRingSpec;

/// An invariant that could not be computed within the configured caps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub invariant: &'static str,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub spec: PolyRingSpec,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub regular_degree: usize,
    pub component_count: usize,
    pub component_sizes: Vec<SizeClass>,
    pub bipartite: bool,
    pub bipartite_certificate: BipartiteCertificate,
    pub girth: Girth,
    pub clique_number: usize,
    pub max_clique: Vec<usize>,
    pub chromatic_number: usize,
    pub independence_number: Option<usize>,
    pub planar: Option<bool>,
    pub planarity_method: Option<PlanarityMethod>,
    pub k33_witness: Option<K33Witness>,
    pub self_complementary: Option<bool>,
    pub skipped: Vec<Skipped>,
}

impl InvariantReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn skip(skipped: &mut Vec<Skipped>, invariant: &'static str, err: Error) {
    skipped.push(Skipped {
        invariant,
        reason: err.to_string(),
    });
}

/// Every invariant of `g`. Resource limits only ever turn an invariant into
/// `None` plus an entry in `skipped`.
pub fn compute_report(g: &CayleyGraph, limits: &Limits) -> InvariantReport {
    let mut skipped = Vec::new();
    let comps = connected_components(g);
    let bip = is_bipartite(g);
    let girth = girth_through(g, &comps.representatives());
    let clique = max_clique(g);

    let home = g.induced_subgraph(&comps.members(comps.labels.first().copied().unwrap_or(0)));
    let chromatic = component_chromatic_number(&home);

    let independence = match independence_number_identical_components(g, &comps, limits) {
        Ok(a) => Some(a),
        Err(e) => {
            skip(&mut skipped, "independence_number", e);
            None
        }
    };
    // A graph is planar iff each component is, and all components are translates.
    let planarity = match planarity_test(&home, limits) {
        Ok(p) => Some(p),
        Err(e) => {
            skip(&mut skipped, "planar", e);
            None
        }
    };
    let k33 = if g.spec.n == 4 && g.spec.d >= 1 {
        k33_witness_z4(g.spec.d).ok().filter(|w| w.holds_in(g))
    } else {
        None
    };
    let self_complementary = match is_self_complementary(g, limits) {
        Ok(b) => Some(b),
        Err(e) => {
            skip(&mut skipped, "self_complementary", e);
            None
        }
    };

    InvariantReport {
        spec: g.spec,
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        regular_degree: regular_degree(g).expect("Cayley graphs are regular"),
        component_count: comps.count,
        component_sizes: comps.size_classes(),
        bipartite: bip.bipartite,
        bipartite_certificate: bip.certificate,
        girth,
        clique_number: clique.len(),
        max_clique: clique,
        chromatic_number: chromatic,
        independence_number: independence,
        planar: planarity.map(|p| p.planar),
        planarity_method: planarity.map(|p| p.method),
        k33_witness: k33,
        self_complementary,
        skipped,
    }
}
