//! The full verification suite: every claim as a check with a stable dotted
//! id, grouped into sections that can be run selectively.

use crate::check::Check;
use crate::classify::{
    census_totals, order3_census, order4_census, order4_structure, order5_census, root_census,
};
use crate::coincidence::{ep_checks, np_checks, tilt_checks};
use crate::goldnum::Gold;
use crate::icosian::{enumerate_roots, reflection_census, reflection_of, GammaGroup, O1};
use crate::quat::ScalarConstants;
use crate::repthy::{
    algebra_dims, build_quat_lift, gauge_bookkeeping, tensor_identities, CharacterTable, Irrep, HYPERSPIN_CLAIMS,
};
use crate::spanalg::{dimension_report, neutrino_algebra_report, su2_u1_split_report};
use serde::{Deserialize, Serialize};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
    /// Topic and claim the check belongs to.
    pub anchor: String,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub elapsed_seconds: f64,
    pub summary: Summary,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    /// Aligned ASCII table followed by a summary line.
    pub fn render_text(&self) -> String {
        let w = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {:<w$}  {}\n", c.id, c.description));
            if !c.passed() {
                out.push_str(&format!("      {:<w$}  expected: {}\n", "", c.expected));
                out.push_str(&format!("      {:<w$}  actual:   {}\n", "", c.actual));
            }
        }
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("no check id matches {0:?}")]
    UnknownId(String),
}

/// Does `id` fall under the dotted prefix `p`?
pub fn id_matches(id: &str, p: &str) -> bool {
    id == p || (id.starts_with(p) && id.as_bytes().get(p.len()) == Some(&b'.'))
}

struct Section {
    prefix: &'static str,
    run: fn() -> Vec<CheckResult>,
}

const SECTIONS: &[Section] = &[
    Section { prefix: "group", run: group_checks },
    Section { prefix: "roots", run: root_checks },
    Section { prefix: "gamma", run: gamma_checks },
    Section { prefix: "chars", run: char_checks },
    Section { prefix: "hyperspin", run: hyperspin_checks },
    Section { prefix: "algebra", run: algebra_checks },
    Section { prefix: "orbits", run: orbit_checks },
    Section { prefix: "census", run: census_checks },
    Section { prefix: "gauge", run: gauge_checks },
    Section { prefix: "coincidence", run: coincidence_checks },
    Section { prefix: "props", run: property_checks },
];

/// Top-level id prefixes, one per section.
pub fn sections() -> Vec<&'static str> {
    SECTIONS.iter().map(|s| s.prefix).collect()
}

/// Run every check, or only those under `only`. Results are ordered by
/// section, then by the order checks are produced.
pub fn run(only: Option<&str>) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let mut checks = Vec::new();
    for s in SECTIONS {
        let relevant = match only {
            None => true,
            Some(p) => id_matches(p, s.prefix) || id_matches(s.prefix, p),
        };
        if relevant {
            checks.extend((s.run)());
        }
    }
    if let Some(p) = only {
        checks.retain(|c| id_matches(&c.id, p));
        if checks.is_empty() {
            return Err(VerifyError::UnknownId(p.to_string()));
        }
    }
    let passed = checks.iter().filter(|c| c.passed()).count();
    Ok(VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        elapsed_seconds: start.elapsed().as_secs_f64(),
        summary: Summary { total: checks.len(), passed, failed: checks.len() - passed },
        checks,
    })
}

fn result(id: impl Into<String>, anchor: &str, c: Check) -> CheckResult {
    CheckResult {
        id: id.into(),
        description: c.name,
        expected: c.expected,
        actual: c.actual,
        status: if c.pass { Status::Pass } else { Status::Fail },
        anchor: anchor.to_string(),
    }
}

/// Number a list of checks under a prefix: `prefix.01`, `prefix.02`, ...
fn numbered(prefix: &str, anchor: &str, checks: Vec<Check>) -> Vec<CheckResult> {
    checks
        .into_iter()
        .enumerate()
        .map(|(k, c)| result(format!("{prefix}.{:02}", k + 1), anchor, c))
        .collect()
}

fn named(prefix: &str, anchor: &str, names: &[&str], checks: Vec<Check>) -> Vec<CheckResult> {
    assert_eq!(names.len(), checks.len(), "one id per check under {prefix}");
    names
        .iter()
        .zip(checks)
        .map(|(n, c)| result(format!("{prefix}.{n}"), anchor, c))
        .collect()
}

const A_GROUP: &str = "reflection groups: order 120, maximal subgroup of order 12";
const A_RELATIONS: &str = "reflection groups: generator relations";
const A_ROOTS: &str = "reflection groups: 120 roots of norm 3";
const A_REFL: &str = "reflection groups: 20 reflections, remaining 100 elements products of two";
const A_GAMMA: &str = "Clifford algebras: gamma group of order 32 with ten reflections";
const A_CHARS: &str = "irreducible representations: nine irreducibles";
const A_FS: &str = "irreducible representations: integer hyperspin real, half-integer quaternionic";
const A_TENSOR: &str = "irreducible representations and the standard model: tensor products";
const A_HYPER: &str = "irreducible representations: hyperspin up to 7/2 covers all irreducibles";
const A_ALGEBRA: &str = "quantum fields: algebras generated by reflections and by g, h";
const A_ORDER4: &str = "quantum fields: orbits 3+6+6 on the 15 pairs of order-4 elements";
const A_ORDER3: &str = "elements of odd order: orbits 1+3+6 on order-3 elements";
const A_ORDER5: &str = "elements of odd order: six cyclic groups of order 5 modulo sign";
const A_CENSUS: &str = "classification of particles: ten classes of twelve roots";
const A_GAUGE: &str = "gauge groups: 37 dimensions reduced to 15";
const A_COINC: &str = "effective field theories: numerical coincidences";
const A_PROPS: &str = "structural invariants";

fn group_checks() -> Vec<CheckResult> {
    let o1 = O1::shared();
    let mut out = vec![
        result("group.order", A_GROUP, Check::eq("|<f,g,h>|", 120, o1.order())),
        result("group.order.diagonal", A_GROUP, Check::eq("|<g,h>|", 12, o1.diagonal.order())),
        result(
            "group.order.maximal",
            A_GROUP,
            Check::holds("<g,h> is maximal", o1.group.is_maximal(&o1.diagonal.members()) == Ok(true)),
        ),
    ];
    let ids = ["f2", "gh2", "h2", "g3", "fg3", "fh3"];
    let rel: Vec<Check> = o1.gens.relations().into_iter().map(|(n, ok)| Check::holds(n, ok)).collect();
    out.extend(named("group.relations", A_RELATIONS, &ids, rel));
    out
}

fn root_checks() -> Vec<CheckResult> {
    let o1 = O1::shared();
    let c = reflection_census(o1).expect("reflection census");
    let roots = enumerate_roots().expect("roots");
    let k = ScalarConstants::new();
    let scaling = roots.iter().all(|r| {
        let m = reflection_of(&r.spinor).expect("norm 3");
        reflection_of(&r.spinor.scale_left(&k.omega)).ok() == Some(m.clone())
            && reflection_of(&r.spinor.scale_left(&k.phi)).map(|p| &p * &m).ok()
                == Some(crate::QMat2::identity())
    });
    let non_products: Vec<String> =
        c.non_products_by_order.iter().map(|(o, n)| format!("{n} of order {o}")).collect();
    let products_actual = if non_products.is_empty() {
        c.two_reflection_products.to_string()
    } else {
        format!("{} (not products: {})", c.two_reflection_products, non_products.join(", "))
    };
    vec![
        result("roots.count", A_ROOTS, Check::eq("distinct roots", 120, c.roots)),
        result("roots.norm", A_ROOTS, Check::holds("every root has squared norm 3", c.all_norm_three)),
        result(
            "roots.reflections.count",
            A_REFL,
            Check::eq("distinct reflection matrices", 20, c.distinct_reflections),
        ),
        result("roots.reflections.order", A_REFL, Check::holds("each reflection has order 3", c.all_order_three)),
        result("roots.reflections.pairs", A_REFL, Check::eq("inverse pairs", 10, c.inverse_pairs)),
        result("roots.reflections.theta", A_REFL, Check::holds("reflection of (theta,0) is g", c.theta_root_gives_g)),
        result(
            "roots.reflections.generate",
            A_REFL,
            Check::holds("reflections generate the same group", c.reflection_group_equals_o1),
        ),
        result(
            "roots.reflections.detect",
            A_REFL,
            Check::holds(
                "order-3 elements with a fixed line are exactly the root reflections",
                c.detected_match_root_reflections,
            ),
        ),
        result(
            "roots.reflections.scaling",
            A_REFL,
            Check::holds("omega r gives the same reflection, phi r the inverse", scaling),
        ),
        result(
            "roots.reflections.products",
            A_REFL,
            Check {
                name: "non-reflections that are products of two reflections".to_string(),
                expected: "100".to_string(),
                actual: products_actual,
                pass: c.two_reflection_products == 100,
            },
        ),
    ]
}

fn gamma_checks() -> Vec<CheckResult> {
    let c = GammaGroup::build().expect("gamma group").census();
    vec![
        result("gamma.group", A_GAMMA, Check::eq("group order", 32, c.order)),
        result("gamma.group.anticommute", A_GAMMA, Check::holds("gammas pairwise anticommute", c.pairwise_anticommute)),
        result(
            "gamma.group.signature",
            A_GAMMA,
            Check::holds(
                "gamma0^2 = 1, gamma_k^2 = -1",
                c.gamma0_squares_to_one && c.spatial_square_to_minus_one,
            ),
        ),
        result("gamma.group.involutions", A_GAMMA, Check::eq("non-central square roots of 1", 10, c.involutions)),
        result(
            "gamma.group.reflections",
            A_GAMMA,
            Check::holds("they are +/-g0, +/-g0g1, +/-g0g2, +/-g0g3, +/-g1g2g3", c.listed_reflections_match),
        ),
    ]
}

fn labels(rs: &[Irrep]) -> String {
    rs.iter().map(|r| r.label()).collect::<Vec<_>>().join(",")
}

fn char_checks() -> Vec<CheckResult> {
    let t = CharacterTable::shared();
    let dims: Vec<String> = t.chars.iter().map(|c| c.degree().to_string()).collect();
    let mut sizes = t.classes.sizes.clone();
    sizes.sort_unstable();
    let orthonormal = Irrep::ALL.iter().all(|&a| {
        Irrep::ALL.iter().all(|&b| {
            let ip = t.inner_product(t.char(a), t.char(b));
            if a == b {
                ip == Gold::from_int(1)
            } else {
                num_traits::Zero::is_zero(&ip)
            }
        })
    });
    let sum_sq: i64 = t.chars.iter().filter_map(|c| c.degree().as_integer()).map(|d| d * d).sum();
    let mut out = vec![
        result("chars.table.dims", A_CHARS, Check::eq("dimensions", "1,2,2,3,3,4,4,5,6".to_string(), dims.join(","))),
        result("chars.table.orthonormal", A_CHARS, Check::holds("characters orthonormal", orthonormal)),
        result("chars.table.sum_squares", A_CHARS, Check::eq("sum of squared dimensions", 120, sum_sq)),
        result(
            "chars.table.classes",
            A_CHARS,
            Check::eq(
                "conjugacy class sizes",
                "1,1,12,12,12,12,20,20,30".to_string(),
                sizes.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
            ),
        ),
    ];
    let (mut real, mut quat, mut bad) = (Vec::new(), Vec::new(), false);
    for r in Irrep::ALL {
        match t.fs_indicator(t.char(r)) {
            Ok(1) => real.push(r),
            Ok(-1) => quat.push(r),
            _ => bad = true,
        }
    }
    out.push(result(
        "chars.fs.real",
        A_FS,
        Check::eq("indicator +1", "1,3a,3b,4a,5".to_string(), labels(&real)),
    ));
    out.push(result(
        "chars.fs.quaternionic",
        A_FS,
        Check::eq("indicator -1", "2a,2b,4b,6".to_string(), labels(&quat)),
    ));
    out.push(result("chars.fs.complex", A_FS, Check::holds("no indicator 0 or out of range", !bad)));
    let dims = algebra_dims(t).expect("indicators");
    out.push(result(
        "chars.algebras.real",
        A_FS,
        Check::eq("R + 2 M3(R) + M4(R) + M5(R) dimension", 60, dims.real_dim),
    ));
    out.push(result(
        "chars.algebras.quaternionic",
        A_FS,
        Check::eq("2 H + M2(H) + M3(H) real dimension", 60, dims.quaternionic_dim),
    ));
    let ids = tensor_identities(t).expect("genuine characters");
    for id in ids {
        let slug: String = id
            .name
            .split(" = ")
            .next()
            .unwrap_or("")
            .replace(['(', ')', '+', ' '], "");
        let c = Check { name: id.name, expected: id.expected, actual: id.actual, pass: id.holds };
        out.push(result(format!("chars.tensor.{slug}"), A_TENSOR, c));
    }
    out
}

fn hyperspin_checks() -> Vec<CheckResult> {
    let t = CharacterTable::shared();
    let rows = t.hyperspin_table(7).expect("hyperspin decomposes");
    let mut out: Vec<CheckResult> = rows
        .iter()
        .zip(HYPERSPIN_CLAIMS)
        .map(|(row, claim)| {
            let expected = crate::repthy::Decomposition::parse(claim).expect("valid claim");
            result(
                format!("hyperspin.table.{}", row.two_j),
                A_HYPER,
                Check::eq(format!("hyperspin {}", row.hyperspin()), expected.to_string(), row.decomposition.to_string()),
            )
        })
        .collect();
    let covered: std::collections::BTreeSet<Irrep> = rows.iter().flat_map(|r| r.decomposition.labels()).collect();
    out.push(result(
        "hyperspin.table.coverage",
        A_HYPER,
        Check::eq("irreducibles reached by 2j <= 7", 9, covered.len()),
    ));
    out
}

fn algebra_checks() -> Vec<CheckResult> {
    let o1 = O1::shared();
    let d = dimension_report(o1);
    let mut out = vec![
        result("algebra.dims.reflections", A_ALGEBRA, Check::eq("algebra generated by the 20 reflections", 16, d.reflections_algebra)),
        result("algebra.dims.group", A_ALGEBRA, Check::eq("span of all 120 elements", 16, d.group_span)),
        result("algebra.dims.gamma", A_ALGEBRA, Check::eq("span of 1 and the four gammas", 5, d.gamma_with_identity_span)),
    ];
    out.extend(numbered("algebra.dims.identities", A_ALGEBRA, neutrino_algebra_report().checks));
    out.extend(numbered("algebra.dims.split", A_ALGEBRA, su2_u1_split_report().checks));
    out
}

fn orbit_checks() -> Vec<CheckResult> {
    let o1 = O1::shared();
    let c4 = order4_census(o1);
    let s4 = order4_structure(o1, &c4);
    let mut out = named(
        "orbits.order4",
        A_ORDER4,
        &["elements", "pairs", "sizes", "list1", "list2", "list3"],
        c4.checks.clone(),
    );
    out.extend(named("orbits.order4", A_ORDER4, &["q8", "q8_normalised", "q8_union", "pairing"], s4.checks));
    let c3 = order3_census(o1);
    out.extend(named(
        "orbits.order3",
        A_ORDER3,
        &["elements", "pairs", "sizes", "fh_hf", "fixed", "triple", "six"],
        c3.checks,
    ));
    let c5 = order5_census(o1);
    out.extend(named(
        "orbits.order5",
        A_ORDER5,
        &["elements", "groups", "generator_orders", "distinct", "coverage"],
        c5.checks,
    ));
    out
}

fn census_checks() -> Vec<CheckResult> {
    let r = root_census().expect("root census");
    let mut out = named(
        "census.roots",
        A_CENSUS,
        &[
            "classes",
            "class_sizes",
            "distinct",
            "theta_class",
            "scalar_stable",
            "transitive",
            "neutrino",
            "quark",
            "electron",
            "scalar_group",
            "so3_order",
            "so3_nonabelian",
        ],
        r.checks,
    );
    out.push(result("census.orders", A_CENSUS, census_totals(O1::shared())));
    out
}

fn gauge_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for b in gauge_bookkeeping() {
        let v = match b.variant {
            crate::repthy::GaugeVariant::SpinOn2a => "spin_on_2a",
            crate::repthy::GaugeVariant::WeakOn2a => "weak_on_2a",
        };
        let checks = vec![
            Check::eq("total symplectic dimension", 37, b.total),
            Check::eq("kept dimension", 15, b.kept),
            Check::eq("lost dimension", 22, b.lost),
            Check::eq("split of lost parameters", "2+(1+3+3)+(1+6+6)".to_string(), b.split_string()),
            Check::holds("kept + lost = total", b.consistent()),
        ];
        out.extend(named(
            &format!("gauge.bookkeeping.{v}"),
            A_GAUGE,
            &["total", "kept", "lost", "split", "consistent"],
            checks,
        ));
    }
    out
}

fn coincidence_checks() -> Vec<CheckResult> {
    let mut out = named("coincidence.np", A_COINC, &["value", "ratio"], np_checks());
    out.extend(named("coincidence.ep", A_COINC, &["value", "ratio"], ep_checks()));
    out.extend(named("coincidence.tilt", A_COINC, &["sin", "degrees", "dms", "round_trip"], tilt_checks()));
    out
}

fn property_checks() -> Vec<CheckResult> {
    let t = CharacterTable::shared();
    let o1 = O1::shared();
    let galois_ok = t.galois_action().iter().all(|&(r, img)| {
        let want = match r {
            Irrep::TwoA => Irrep::TwoB,
            Irrep::TwoB => Irrep::TwoA,
            Irrep::ThreeA => Irrep::ThreeB,
            Irrep::ThreeB => Irrep::ThreeA,
            other => other,
        };
        img == Some(want)
    });
    let products_ok = Irrep::ALL.iter().all(|&a| {
        Irrep::ALL
            .iter()
            .all(|&b| t.tensor(&[a], &[b]).map(|d| d.dim() == a.dim() * b.dim()).unwrap_or(false))
    });
    let h = o1.diagonal.members();
    let stable = [order4_census(o1), order3_census(o1), order5_census(o1)].iter().all(|c| {
        let items: Vec<Vec<usize>> = c.orbits.iter().flat_map(|o| o.items.clone()).collect();
        o1.group.conjugation_orbits(&h, &items).is_ok()
    });
    let class_const = {
        let lift = &t.lift;
        t.classes.partition.classes.iter().all(|cl| {
            cl.iter().all(|&x| lift.images[x].re() == lift.images[cl[0]].re())
        })
    };
    vec![
        result("props.lift", A_PROPS, Check::holds("quaternion lift is multiplicative on all pairs", build_quat_lift(o1).is_ok())),
        result("props.class_functions", A_PROPS, Check::holds("characters constant on classes", class_const)),
        result("props.columns", A_PROPS, Check::holds("column orthogonality", t.column_orthogonality())),
        result("props.galois_labels", A_PROPS, Check::holds("Galois swaps 2a/2b and 3a/3b, fixes the rest", galois_ok)),
        result("props.products", A_PROPS, Check::holds("all 81 products decompose with non-negative integers", products_ok)),
        result("props.orbits_stable", A_PROPS, Check::holds("census item sets are conjugation-stable", stable)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_matching() {
        assert!(id_matches("roots.count", "roots"));
        assert!(id_matches("roots", "roots"));
        assert!(!id_matches("rootsx", "roots"));
        assert!(!id_matches("group.order", "group.ord"));
    }

    #[test]
    fn unknown_prefix() {
        assert_eq!(run(Some("nonsense")), Err(VerifyError::UnknownId("nonsense".into())));
        assert!(run(Some("roots.nope")).is_err());
    }

    #[test]
    fn filtered_run() {
        let r = run(Some("coincidence")).unwrap();
        assert!(r.all_pass());
        assert!(r.checks.iter().all(|c| c.id.starts_with("coincidence.")));
        assert_eq!(r.summary.total, 8);
    }

    #[test]
    fn ids_unique_and_ascii() {
        let r = run(None).unwrap();
        let ids: std::collections::BTreeSet<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), r.checks.len());
        assert!(r.render_text().is_ascii());
        let failing: Vec<&str> = r.checks.iter().filter(|c| !c.passed()).map(|c| c.id.as_str()).collect();
        assert_eq!(failing, vec!["roots.reflections.products", "orbits.order4.sizes"]);
    }
}
