//! Closed-form predictions for every invariant, and the harness that compares
//! them with computed values.
//!
//! Claims about the infinite ring become statements about growth in `d`: the
//! component count `n^d` or `(n/2)^d` increases without bound, and the
//! monomials `1, x, ..., x^d` stay pairwise non-adjacent at every `d`.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::graph::build_cayley_graph;
use crate::invariants::{
    compute_report, connected_components, is_proper_bipartition, k33_witness_z4,
    monomial_independent_set_check, theorem_bipartition, Girth,
};
use crate::limits::Limits;
use crate::poly::{
    inv_count_formula, involutions_bruteforce, involutions_closed_form, PolyRingSpec,
};
use crate::ring::{factorize, Factorization};

/// Which ring family the caller asked about. Both share one implementation:
/// polynomials of degree at most `d` square identically in `Z_n[x]` and `Z_n[[x]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingFamily {
    #[default]
    ZnPoly,
    ZnPowerSeries,
}

impl std::str::FromStr for RingFamily {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "zn-poly" => Ok(RingFamily::ZnPoly),
            "zn-power-series" => Ok(RingFamily::ZnPowerSeries),
            other => Err(format!(
                "unknown ring `{other}` (expected zn-poly or zn-power-series)"
            )),
        }
    }
}

const POWER_SERIES_NOTE: &str = "power series of degree <= d square exactly as polynomials do, \
so Z_n[[x]] is computed on the polynomial code path";

/// Closed-form expectations for `G(Z_n[x])` restricted to degree `<= d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub spec: PolyRingSpec,
    pub inv_count: u64,
    pub bipartite: bool,
    pub chromatic: usize,
    pub clique: usize,
    pub girth: Girth,
    pub planar: bool,
    pub component_count: u64,
    /// Some iff `n = p^k` or `2 p^k`: every component is then an `n`-cycle.
    pub cycle_length: Option<u64>,
    pub independence: u64,
    pub self_complementary: bool,
}

/// Predictions for `spec`. Never fails for a valid spec.
pub fn predict(spec: PolyRingSpec) -> Prediction {
    let n = spec.n;
    let f = factorize(n).expect("spec guarantees n >= 2");
    let even = n.is_multiple_of(2);
    let cyclic = f.is_odd_prime_power_or_twice();
    let girth = if n == 2 {
        Girth::Infinite
    } else if cyclic {
        Girth::Finite(n as usize)
    } else {
        Girth::Finite(4)
    };
    let planar = n == 2 || cyclic || (spec.d == 0 && n == 4);
    Prediction {
        spec,
        inv_count: inv_count_formula(spec).expect("valid spec"),
        bipartite: even,
        chromatic: if even { 2 } else { 3 },
        clique: if n == 3 { 3 } else { 2 },
        girth,
        planar,
        component_count: predicted_component_count(spec),
        cycle_length: (cyclic && n > 2).then_some(n),
        independence: predicted_independence_number(spec, &f),
        self_complementary: spec.d == 0 && n == 5,
    }
}

/// Index of the subgroup generated by the involutions: `n^d` when
/// `r0 <= 1`, `(n/2)^d` when `r0 >= 2`.
pub fn predicted_component_count(spec: PolyRingSpec) -> u64 {
    let r0 = spec.n.trailing_zeros();
    let base = if r0 >= 2 { spec.n / 2 } else { spec.n };
    base.pow(spec.d)
}

/// Even `n`: the graph is regular bipartite with a perfect matching, so
/// `alpha = |V| / 2`. Odd `n`: `n^d` copies of `G(Z_n)`, whose independence
/// number is `(q - 1) n / (2q)` for the largest prime-power factor `q`.
fn predicted_independence_number(spec: PolyRingSpec, f: &Factorization) -> u64 {
    if spec.n.is_multiple_of(2) {
        return spec.size() / 2;
    }
    let q = f.prime_powers().into_iter().max().expect("n >= 2");
    spec.n.pow(spec.d) * (q - 1) * spec.n / (2 * q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    /// Overall status: any FAIL wins, then any SKIPPED.
    pub fn combine(statuses: impl IntoIterator<Item = Status>) -> Status {
        statuses
            .into_iter()
            .fold(Status::Pass, |acc, s| match (acc, s) {
                (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
                (Status::Skipped, _) | (_, Status::Skipped) => Status::Skipped,
                _ => Status::Pass,
            })
    }

    /// CLI exit code: 0 pass, 1 fail, 2 skipped.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Skipped => 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub invariant: &'static str,
    pub predicted: Value,
    pub computed: Value,
    pub paper_ref: &'static str,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub spec: PolyRingSpec,
    pub results: Vec<CheckResult>,
    pub overall: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn result(&self, invariant: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.invariant == invariant)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Rows(Vec<CheckResult>);

impl Rows {
    fn compare<T: Serialize + PartialEq>(
        &mut self,
        invariant: &'static str,
        predicted: T,
        computed: std::result::Result<T, String>,
        basis: &'static str,
    ) {
        let (computed, status) = match computed {
            Ok(c) => {
                let status = if c == predicted {
                    Status::Pass
                } else {
                    Status::Fail
                };
                (json!(c), status)
            }
            Err(reason) => (json!(format!("skipped: {reason}")), Status::Skipped),
        };
        self.0.push(CheckResult {
            invariant,
            predicted: json!(predicted),
            computed,
            paper_ref: basis,
            status,
        });
    }
}

/// Builds the graph, computes every invariant and compares each with
/// [`predict`]. Resource errors become SKIPPED rows; building the graph
/// itself must succeed.
pub fn verify(spec: PolyRingSpec, ring: RingFamily, limits: &Limits) -> Result<VerificationReport> {
    let pred = predict(spec);
    let g = build_cayley_graph(spec, limits)?;
    let report = compute_report(&g, limits);
    let comps = connected_components(&g);
    let mut rows = Rows(Vec::new());

    let brute = involutions_bruteforce(spec, limits);
    rows.compare(
        "inv_count",
        pred.inv_count,
        brute
            .as_ref()
            .map(|b| b.len() as u64)
            .map_err(ToString::to_string),
        "|inv| = 2^t for r0 <= 1; 2^(t+1+d) for r0 = 2; 2^(t+2+d) for r0 >= 3",
    );
    let closed = involutions_closed_form(spec, limits)?;
    rows.compare(
        "involutions_closed_form_equals_bruteforce",
        true,
        brute.map(|b| b == closed).map_err(|e| e.to_string()),
        "odd p^k: {1, -1}; 2: {1}; 2^k: a0 + 2^(k-1) g; combined by CRT",
    );
    rows.compare(
        "regular_degree",
        pred.inv_count as usize,
        Ok(report.regular_degree),
        "G(R) is |inv(R)|-regular",
    );
    rows.compare(
        "component_count",
        pred.component_count,
        Ok(report.component_count as u64),
        "index of the subgroup generated by inv: n^d for r0 <= 1, (n/2)^d for r0 >= 2",
    );
    rows.compare(
        "component_sizes_equal",
        true,
        Ok(comps.is_uniform()),
        "components of a Cayley graph are cosets",
    );
    if let Some(len) = pred.cycle_length {
        let all_cycles = report.regular_degree == 2 && comps.sizes.iter().all(|&s| s as u64 == len);
        rows.compare(
            "components_are_n_cycles",
            true,
            Ok(all_cycles),
            "n = p^k or 2p^k: disjoint cycles of length n",
        );
    }
    rows.compare(
        "bipartite",
        pred.bipartite,
        Ok(report.bipartite),
        "bipartite iff n is even",
    );
    if spec.n.is_multiple_of(2) {
        rows.compare(
            "constant_term_parity_bipartition",
            true,
            theorem_bipartition(spec)
                .map(|p| is_proper_bipartition(&g, &p))
                .map_err(|e| e.to_string()),
            "A = {f : f(0) in 2Z_n}, B = complement is a bipartition",
        );
    }
    rows.compare(
        "chromatic_number",
        pred.chromatic,
        Ok(report.chromatic_number),
        "chi = 2 for even n, 3 for odd n",
    );
    rows.compare(
        "clique_number",
        pred.clique,
        Ok(report.clique_number),
        "omega = 3 for n = 3, else 2",
    );
    rows.compare(
        "girth",
        pred.girth,
        Ok(report.girth),
        "girth = infinity for n = 2; n for n = p^k or 2p^k; else 4",
    );
    rows.compare(
        "independence_number",
        pred.independence,
        report
            .independence_number
            .map(|a| a as u64)
            .ok_or_else(|| skipped_error(&report, "independence_number")),
        "even n: |V|/2; odd n: n^d (q-1) n / (2q), q the largest prime-power factor",
    );
    if spec.d >= 1 {
        rows.compare(
            "monomial_independent_set",
            true,
            monomial_independent_set_check(spec).map_err(|e| e.to_string()),
            "{1, x, ..., x^d} is independent",
        );
    }
    rows.compare(
        "planar",
        pred.planar,
        report
            .planar
            .ok_or_else(|| skipped_error(&report, "planar")),
        "planar iff n = 2, p^k, 2p^k (also n = 4 when d = 0)",
    );
    if spec.n == 4 && spec.d >= 1 {
        rows.compare(
            "k33_witness",
            true,
            k33_witness_z4(spec.d)
                .map(|w| w.verified() && w.holds_in(&g))
                .map_err(|e| e.to_string()),
            "{0, 2, 2x} x {1, 3, 1 + 2x} induces K_{3,3}",
        );
    }
    rows.compare(
        "self_complementary",
        pred.self_complementary,
        report
            .self_complementary
            .ok_or_else(|| skipped_error(&report, "self_complementary")),
        "self-complementary only for Z_5; never once d >= 1",
    );

    let overall = Status::combine(rows.0.iter().map(|r| r.status));
    let mut notes = Vec::new();
    if ring == RingFamily::ZnPowerSeries {
        notes.push(POWER_SERIES_NOTE.to_string());
    }
    if let Some(w) = &report.k33_witness {
        notes.push(format!(
            "induced K_{{3,3}}: {{{}}} x {{{}}} (vertices {:?} x {:?})",
            w.left_labels.join(", "),
            w.right_labels.join(", "),
            w.left,
            w.right
        ));
    }
    Ok(VerificationReport {
        spec,
        results: rows.0,
        overall,
        notes,
    })
}

fn skipped_error(report: &crate::invariants::InvariantReport, name: &str) -> String {
    report
        .skipped
        .iter()
        .find(|s| s.invariant == name)
        .map(|s| s.reason.clone())
        .unwrap_or_else(|| "not computed".into())
}

#[derive(Debug, Clone, Serialize)]
pub struct GridReport {
    pub reports: Vec<VerificationReport>,
    pub overall: Status,
}

/// Runs [`verify`] for every `(n, d)` pair in parallel; reports keep grid
/// order (n major, d minor).
pub fn verify_grid(
    ns: impl IntoIterator<Item = u64>,
    ds: impl IntoIterator<Item = u32> + Clone,
    ring: RingFamily,
    limits: &Limits,
) -> Result<GridReport> {
    let specs: Vec<PolyRingSpec> = ns
        .into_iter()
        .flat_map(|n| ds.clone().into_iter().map(move |d| (n, d)))
        .map(|(n, d)| PolyRingSpec::new(n, d))
        .collect::<Result<_>>()?;
    let reports = specs
        .into_par_iter()
        .map(|s| verify(s, ring, limits))
        .collect::<Result<Vec<_>>>()?;
    let overall = Status::combine(reports.iter().map(|r| r.overall));
    Ok(GridReport { reports, overall })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthRow {
    pub d: u32,
    pub component_count: u64,
    pub predicted_component_count: u64,
    pub inv_count: u64,
    /// Size of the verified independent set `{1, x, ..., x^d}`.
    pub independent_set_lower_bound: u64,
}

/// Component count (union-find), involution count (exhaustive) and the
/// monomial independent set for `d = 0..=d_max`.
pub fn growth_scan(n: u64, d_max: u32, limits: &Limits) -> Result<Vec<GrowthRow>> {
    (0..=d_max)
        .map(|d| {
            let spec = PolyRingSpec::new(n, d)?;
            let g = build_cayley_graph(spec, limits)?;
            let independent = d == 0 || monomial_independent_set_check(spec)?;
            Ok(GrowthRow {
                d,
                component_count: connected_components(&g).count as u64,
                predicted_component_count: predicted_component_count(spec),
                inv_count: involutions_bruteforce(spec, limits)?.len() as u64,
                independent_set_lower_bound: if independent { d as u64 + 1 } else { 0 },
            })
        })
        .collect()
}

pub fn strictly_increasing(values: &[u64]) -> bool {
    values.windows(2).all(|w| w[0] < w[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: u64, d: u32) -> PolyRingSpec {
        PolyRingSpec::new(n, d).unwrap()
    }

    #[test]
    fn prediction_examples() {
        let p = predict(spec(4, 1));
        assert!(!p.planar && p.bipartite);
        assert_eq!((p.chromatic, p.clique, p.girth), (2, 2, Girth::Finite(4)));
        assert!(predict(spec(4, 0)).planar);
        let p = predict(spec(21, 2));
        assert!(!p.bipartite && !p.planar);
        assert_eq!((p.chromatic, p.clique, p.girth), (3, 2, Girth::Finite(4)));
        assert!(predict(spec(5, 0)).self_complementary);
        assert!(!predict(spec(5, 1)).self_complementary);
    }

    #[test]
    fn prediction_internal_consistency() {
        for n in 2..200 {
            for d in 0..3 {
                let p = predict(spec(n, d));
                if p.bipartite {
                    assert_eq!(p.chromatic, 2);
                    assert_eq!(p.clique, 2);
                }
                if n == 2 {
                    assert_eq!(p.girth, Girth::Infinite);
                }
                assert!(p.clique <= p.chromatic);
            }
        }
    }

    #[test]
    fn component_count_examples() {
        assert_eq!(predicted_component_count(spec(5, 2)), 25);
        assert_eq!(predicted_component_count(spec(4, 1)), 2);
        assert_eq!(predicted_component_count(spec(6, 1)), 6);
    }

    #[test]
    fn verify_examples() {
        let l = Limits::default();
        let r = verify(spec(9, 1), RingFamily::ZnPoly, &l).unwrap();
        assert_eq!(r.overall, Status::Pass, "{}", r.to_json());
        assert_eq!(r.result("girth").unwrap().computed, json!(9));

        let r = verify(spec(2, 3), RingFamily::ZnPoly, &l).unwrap();
        assert_eq!(r.overall, Status::Pass, "{}", r.to_json());
        assert_eq!(r.result("girth").unwrap().computed, json!("infinity"));
        assert_eq!(r.result("regular_degree").unwrap().computed, json!(1));

        let r = verify(spec(12, 1), RingFamily::ZnPoly, &l).unwrap();
        assert_eq!(r.overall, Status::Pass, "{}", r.to_json());
        assert_eq!(r.result("planar").unwrap().computed, json!(false));
    }

    #[test]
    fn resource_limits_skip_rows() {
        let l = Limits {
            brute_force_cap: 10,
            ..Limits::default()
        };
        let r = verify(spec(5, 1), RingFamily::ZnPowerSeries, &l).unwrap();
        assert_eq!(r.result("inv_count").unwrap().status, Status::Skipped);
        assert_eq!(r.overall, Status::Skipped);
        assert_eq!(r.overall.exit_code(), 2);
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn growth_examples() {
        let l = Limits::default();
        let counts = |n| -> Vec<u64> {
            growth_scan(n, 3, &l)
                .unwrap()
                .iter()
                .map(|r| r.component_count)
                .collect()
        };
        assert_eq!(counts(3), vec![1, 3, 9, 27]);
        assert_eq!(counts(4), vec![1, 2, 4, 8]);
        let inv: Vec<u64> = growth_scan(2, 2, &l)
            .unwrap()
            .iter()
            .map(|r| r.inv_count)
            .collect();
        assert_eq!(inv, vec![1, 1, 1]);
    }

    #[test]
    fn status_combination() {
        use Status::*;
        assert_eq!(Status::combine([Pass, Pass]), Pass);
        assert_eq!(Status::combine([Pass, Skipped]), Skipped);
        assert_eq!(Status::combine([Skipped, Fail, Pass]), Fail);
        assert_eq!(serde_json::to_string(&Skipped).unwrap(), "\"SKIPPED\"");
    }
}
