//! Explicit certificates checked by ring arithmetic alone.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{is_involution, sub, PolyRingSpec, TruncPoly};

/// Two triples of `Z_4[x]_d` with all nine cross pairs adjacent and no edge
/// inside either triple: an induced `K_{3,3}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K33Witness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub left_labels: Vec<String>,
    pub right_labels: Vec<String>,
    pub cross_pairs_adjacent: bool,
    pub sides_independent: bool,
}

impl K33Witness {
    pub fn verified(&self) -> bool {
        self.cross_pairs_adjacent && self.sides_independent
    }

    /// Re-checks the witness against a built graph of the same ring.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let cross = self
            .left
            .iter()
            .all(|&a| self.right.iter().all(|&b| g.has_edge(a, b)));
        let inside = |side: &[usize]| {
            side.iter()
                .enumerate()
                .all(|(i, &a)| side[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
        };
        cross && inside(&self.left) && inside(&self.right)
    }
}

fn adjacent(a: &TruncPoly, b: &TruncPoly) -> bool {
    is_involution(&sub(a, b).expect("same ring"))
}

fn pairwise_independent(set: &[TruncPoly]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, a)| set[i + 1..].iter().all(|b| !adjacent(a, b)))
}

/// `{0, 2, 2x}` against `{1, 3, 1 + 2x}` in `Z_4[x]/(x^(d+1))`, `d >= 1`.
pub fn k33_witness_z4(d: u32) -> Result<K33Witness> {
    if d == 0 {
        return Err(Error::domain("the K_{3,3} witness needs degree at least 1"));
    }
    let spec = PolyRingSpec::new(4, d)?;
    let left = vec![spec.zero(), spec.constant(2), spec.poly(&[0, 2])?];
    let right = vec![spec.one(), spec.constant(3), spec.poly(&[1, 2])?];
    let cross_pairs_adjacent = left.iter().all(|a| right.iter().all(|b| adjacent(a, b)));
    let sides_independent = pairwise_independent(&left) && pairwise_independent(&right);
    Ok(K33Witness {
        left: left.iter().map(|f| f.index() as usize).collect(),
        right: right.iter().map(|f| f.index() as usize).collect(),
        left_labels: left.iter().map(ToString::to_string).collect(),
        right_labels: right.iter().map(ToString::to_string).collect(),
        cross_pairs_adjacent,
        sides_independent,
    })
}

/// `{1, x, ..., x^d}` is pairwise non-adjacent. Needs `d >= 1`.
pub fn monomial_independent_set_check(spec: PolyRingSpec) -> Result<bool> {
    if spec.d == 0 {
        return Err(Error::domain("the monomial set needs degree at least 1"));
    }
    let monomials: Vec<TruncPoly> = (0..spec.coeff_count()).map(|i| spec.monomial(i)).collect();
    Ok(pairwise_independent(&monomials))
}
