//! Censuses of roots and of elements of orders 3, 4, 5 and 10 in O₁ under
//! conjugation by the diagonal subgroup `H = ⟨g, h⟩`.
//!
//! Exponents in words follow `x^y = y⁻¹ x y`. If a listed membership fails
//! under that convention, `y x y⁻¹` is tried and the outcome recorded.

use crate::check::Check;
use crate::icosian::{base_spinors, O1};
use crate::qmat2::Spinor;
use crate::quat::{scalar_group, so3_image, ScalarError};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// How `x^y` is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Exponent {
    /// `y⁻¹ x y`
    Right,
    /// `y x y⁻¹`
    Left,
}

impl O1 {
    /// `x^y` for words `x`, `y`.
    pub fn power_word(&self, x: &str, y: &str, conv: Exponent) -> usize {
        let (x, y) = (self.word(x), self.word(y));
        match conv {
            Exponent::Right => self.group.conj(x, y),
            Exponent::Left => self.group.conj(x, self.group.inv(y)),
        }
    }
}

fn pretty(w: &str) -> String {
    w.replace("gg", "g^2")
}

fn name_power(x: &str, y: &str) -> String {
    if y.is_empty() {
        x.to_string()
    } else if y.len() == 1 {
        format!("{x}^{y}")
    } else {
        format!("{x}^({})", pretty(y))
    }
}

/// Ten classes of twelve roots, one per base spinor.
#[derive(Clone, Debug, Serialize)]
pub struct RootClass {
    pub base_index: usize,
    pub label: &'static str,
    pub members: Vec<Spinor>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootCensus {
    pub classes: Vec<RootClass>,
    pub states_by_label: BTreeMap<&'static str, usize>,
    pub scalar_group_order: usize,
    pub so3_image_order: usize,
    pub so3_image_abelian: bool,
    pub checks: Vec<Check>,
}

/// Display tag for a base spinor. `(θ,0)` is the only root fixed by `g`
/// up to scalars; the three `((φ+1)ωᶜ, 1)` have the long coordinate first.
fn root_label(base: usize) -> &'static str {
    match base {
        0 => "neutrino-like",
        1..=3 => "electron-like",
        _ => "quark-like",
    }
}

pub fn root_census() -> Result<RootCensus, ScalarError> {
    let scalars = scalar_group()?;
    let classes: Vec<RootClass> = base_spinors()
        .into_iter()
        .enumerate()
        .map(|(i, b)| RootClass {
            base_index: i,
            label: root_label(i),
            members: scalars.iter().map(|s| b.scale_left(s)).collect(),
        })
        .collect();
    let mut states_by_label = BTreeMap::new();
    for c in &classes {
        *states_by_label.entry(c.label).or_insert(0) += c.members.len();
    }
    let all: BTreeSet<&Spinor> = classes.iter().flat_map(|c| &c.members).collect();
    let sets: Vec<BTreeSet<&Spinor>> = classes.iter().map(|c| c.members.iter().collect()).collect();
    let stable = sets.iter().all(|set| {
        set.iter().all(|r| scalars.iter().all(|s| set.contains(&r.scale_left(s))))
    });
    // the scalar group acts simply transitively on each class
    let transitive = sets.iter().all(|set| set.len() == scalars.len());
    let so3 = so3_image()?;
    let g_root = &classes[0];
    let checks = vec![
        Check::eq("root classes", 10, classes.len()),
        Check::holds("every class has 12 members", classes.iter().all(|c| c.members.len() == 12)),
        Check::eq("distinct roots", 120, all.len()),
        Check::holds(
            "class of (theta,0) has zero second coordinate",
            g_root.members.iter().all(|r| num_traits::Zero::is_zero(&r.c2)),
        ),
        Check::holds("classes stable under scalars", stable),
        Check::holds("scalars act transitively on each class", transitive),
        Check::eq("neutrino-like states", 12, states_by_label["neutrino-like"]),
        Check::eq("quark-like states", 72, states_by_label["quark-like"]),
        Check::eq("electron-like states", 36, states_by_label["electron-like"]),
        Check::eq("scalar group order", 12, scalars.len()),
        Check::eq("SO(3) image order", 6, so3.order),
        Check::holds("SO(3) image nonabelian", !so3.abelian),
    ];
    Ok(RootCensus {
        classes,
        states_by_label,
        scalar_group_order: scalars.len(),
        so3_image_order: so3.order,
        so3_image_abelian: so3.abelian,
        checks,
    })
}

/// What the orbit items are.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ItemKind {
    /// `{x, −x}` with `x` of order 4.
    SignPairOrder4,
    /// `{x, x⁻¹}` with `x` of order 3.
    InversePairOrder3,
    /// `⟨x⟩ ∪ −⟨x⟩` with `x` of order 5 or 10.
    CyclicOrder5,
}

#[derive(Clone, Debug, Serialize)]
pub struct Orbit {
    /// Each item as sorted element indices.
    pub items: Vec<Vec<usize>>,
    /// Generator word of a non-central element of the first item.
    pub representative: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitCensus {
    pub kind: ItemKind,
    pub item_count: usize,
    pub orbits: Vec<Orbit>,
    /// Orbit sizes in ascending order.
    pub sizes: Vec<usize>,
    pub convention: Exponent,
    pub checks: Vec<Check>,
}

impl OrbitCensus {
    pub fn sizes_string(&self) -> String {
        sizes_string(&self.sizes)
    }

    /// Orbit containing an element, by position.
    pub fn orbit_of(&self, x: usize) -> Option<usize> {
        self.orbits
            .iter()
            .position(|o| o.items.iter().any(|it| it.contains(&x)))
    }

    pub fn pass(&self) -> bool {
        crate::check::all_pass(&self.checks)
    }
}

fn sizes_string(s: &[usize]) -> String {
    s.iter().map(ToString::to_string).collect::<Vec<_>>().join("+")
}

fn build_orbits(o1: &O1, items: Vec<Vec<usize>>) -> Vec<Orbit> {
    let h = o1.diagonal.members();
    let raw = o1
        .group
        .conjugation_orbits(&h, &items)
        .expect("item sets are stable under conjugation");
    raw.into_iter()
        .map(|pos| {
            let items: Vec<Vec<usize>> = pos.iter().map(|&p| items[p].clone()).collect();
            let first = &items[0];
            let x = first
                .iter()
                .copied()
                .find(|&x| o1.group.element_order(x) > 2)
                .unwrap_or(first[0]);
            let representative = pretty(&o1.word_of(x));
            Orbit { items, representative }
        })
        .collect()
}

fn sorted_sizes(orbits: &[Orbit]) -> Vec<usize> {
    let mut s: Vec<usize> = orbits.iter().map(|o| o.items.len()).collect();
    s.sort_unstable();
    s
}

fn dedup_sets(items: impl IntoIterator<Item = Vec<usize>>) -> Vec<Vec<usize>> {
    let set: BTreeSet<Vec<usize>> = items
        .into_iter()
        .map(|mut v| {
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    set.into_iter().collect()
}

/// Orbit indices of the listed elements, or `None` if outside the census.
fn orbits_of(c: &OrbitCensus, xs: &[usize]) -> Vec<Option<usize>> {
    xs.iter().map(|&x| c.orbit_of(x)).collect()
}

fn single_orbit(c: &OrbitCensus, xs: &[usize]) -> Option<usize> {
    let os = orbits_of(c, xs);
    let first = os.first().copied().flatten()?;
    os.iter().all(|&o| o == Some(first)).then_some(first)
}

/// Words of the listed order-4 elements: `(x, y)` stands for `x^y`.
pub const ORDER4_LIST1: [(&str, &str); 3] = [("h", ""), ("gh", ""), ("hg", "")];
pub const ORDER4_LIST2: [(&str, &str); 6] =
    [("f", ""), ("f", "g"), ("f", "gg"), ("f", "h"), ("f", "gh"), ("f", "hg")];
pub const ORDER4_LIST3: [(&str, &str); 6] = [
    ("f", "ghf"),
    ("f", "hgf"),
    ("f", "ghfg"),
    ("f", "hgfg"),
    ("f", "ghfgg"),
    ("f", "hgfgg"),
];

fn eval_list(o1: &O1, list: &[(&str, &str)], conv: Exponent) -> Vec<usize> {
    list.iter().map(|(x, y)| o1.power_word(x, y, conv)).collect()
}

fn list_names(list: &[(&str, &str)]) -> String {
    list.iter().map(|(x, y)| name_power(x, y)).collect::<Vec<_>>().join(", ")
}

fn order4_items(o1: &O1) -> Vec<Vec<usize>> {
    dedup_sets(
        o1.group
            .elements_of_order(4)
            .into_iter()
            .map(|x| vec![x, o1.neg(x)]),
    )
}

/// Memberships for the order-4 lists; returns checks and whether they all
/// pass.
fn order4_memberships(o1: &O1, c: &OrbitCensus, conv: Exponent) -> (Vec<Check>, bool) {
    let l1 = eval_list(o1, &ORDER4_LIST1, conv);
    let l2 = eval_list(o1, &ORDER4_LIST2, conv);
    let l3 = eval_list(o1, &ORDER4_LIST3, conv);
    let size = |o: Option<usize>| o.map(|k| c.orbits[k].items.len());
    let o1_ = single_orbit(c, &l1);
    let o2_ = single_orbit(c, &l2);
    let pairs = |xs: &[usize]| -> BTreeSet<usize> { xs.iter().filter_map(|&x| c_item(c, x)).collect() };
    let (p1, p2, p3) = (pairs(&l1), pairs(&l2), pairs(&l3));
    let l3_orbits: BTreeSet<usize> = orbits_of(c, &l3).into_iter().flatten().collect();
    let l3_is_union = l3_orbits
        .iter()
        .all(|&k| c.orbits[k].items.iter().all(|it| p3.contains(&item_index(c, it))));
    let l3_split: Vec<usize> = {
        let mut s: Vec<usize> = l3_orbits.iter().map(|&k| c.orbits[k].items.len()).collect();
        s.sort_unstable();
        s
    };
    let list1_ok = size(o1_) == Some(3) && p1.len() == 3;
    let list2_ok = size(o2_) == Some(6) && p2.len() == 6;
    let list3_ok = p3.len() == 6 && p3.is_disjoint(&p1) && p3.is_disjoint(&p2) && l3_is_union;
    let checks = vec![
        Check::holds(format!("{} form an orbit of size 3", list_names(&ORDER4_LIST1)), list1_ok),
        Check::holds(format!("{} form an orbit of size 6", list_names(&ORDER4_LIST2)), list2_ok),
        Check {
            name: format!("{} are the remaining six pairs, closed under H", list_names(&ORDER4_LIST3)),
            expected: "true".to_string(),
            actual: format!("{list3_ok} (orbits {})", sizes_string(&l3_split)),
            pass: list3_ok,
        },
    ];
    let all = list1_ok && list2_ok && list3_ok;
    (checks, all)
}

fn item_index(c: &OrbitCensus, it: &[usize]) -> usize {
    c_item(c, it[0]).expect("item in census")
}

/// Global position of the item containing `x`, numbering items orbit by
/// orbit.
fn c_item(c: &OrbitCensus, x: usize) -> Option<usize> {
    let mut n = 0;
    for o in &c.orbits {
        for it in &o.items {
            if it.contains(&x) {
                return Some(n);
            }
            n += 1;
        }
    }
    None
}

pub fn order4_census(o1: &O1) -> OrbitCensus {
    let items = order4_items(o1);
    let orbits = build_orbits(o1, items.clone());
    let sizes = sorted_sizes(&orbits);
    let mut census = OrbitCensus {
        kind: ItemKind::SignPairOrder4,
        item_count: items.len(),
        orbits,
        sizes,
        convention: Exponent::Right,
        checks: Vec::new(),
    };
    let (mut member_checks, ok) = order4_memberships(o1, &census, Exponent::Right);
    if !ok {
        let (alt, alt_ok) = order4_memberships(o1, &census, Exponent::Left);
        if alt_ok {
            census.convention = Exponent::Left;
            member_checks = alt;
        }
    }
    let mut checks = vec![
        Check::eq("elements of order 4", 30, o1.group.elements_of_order(4).len()),
        Check::eq("sign pairs", 15, census.item_count),
        Check::eq("orbit sizes", "3+6+6".to_string(), census.sizes_string()),
    ];
    checks.append(&mut member_checks);
    census.checks = checks;
    census
}

/// Q₈ subgroups and the pairing claim for the order-4 elements.
#[derive(Clone, Debug, Serialize)]
pub struct Order4Structure {
    pub q8_subgroups: Vec<Vec<usize>>,
    pub normalised_by_g: Vec<usize>,
    pub list2_in_union: bool,
    /// Matchings of the third list's six pairs into three 2-sets whose
    /// products (some choice of sign, representative and order) lie in `H`.
    pub matchings: Vec<Vec<(String, String)>>,
    pub checks: Vec<Check>,
}

pub fn order4_structure(o1: &O1, census: &OrbitCensus) -> Order4Structure {
    let g = &o1.group;
    let ord4 = g.elements_of_order(4);
    let mut q8: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (k, &x) in ord4.iter().enumerate() {
        for &y in &ord4[k + 1..] {
            let s = g.closure_indices(&[x, y]);
            if s.len() == 8 {
                q8.insert(s);
            }
        }
    }
    let q8: Vec<Vec<usize>> = q8.into_iter().collect();
    let normalised_by_g: Vec<usize> = (0..q8.len()).filter(|&k| g.normalises(o1.g, &q8[k])).collect();
    let union: BTreeSet<usize> = normalised_by_g.iter().flat_map(|&k| q8[k].iter().copied()).collect();
    let l2 = eval_list(o1, &ORDER4_LIST2, census.convention);
    let list2_in_union = l2.iter().all(|x| union.contains(x));

    let l3 = eval_list(o1, &ORDER4_LIST3, census.convention);
    let names: Vec<String> = ORDER4_LIST3.iter().map(|(x, y)| name_power(x, y)).collect();
    let pair_of = |x: usize| [x, o1.neg(x)];
    let ok = |a: usize, b: usize| {
        pair_of(a).iter().any(|&p| {
            pair_of(b)
                .iter()
                .any(|&q| o1.diagonal.contains(g.mul(p, q)) || o1.diagonal.contains(g.mul(q, p)))
        })
    };
    let matchings: Vec<Vec<(String, String)>> = perfect_matchings(l3.len())
        .into_iter()
        .filter(|m| m.iter().all(|&(a, b)| ok(l3[a], l3[b])))
        .map(|m| m.into_iter().map(|(a, b)| (names[a].clone(), names[b].clone())).collect())
        .collect();
    let checks = vec![
        Check::eq("Q8 subgroups", 5, q8.len()),
        Check::eq("Q8 subgroups normalised by g", 2, normalised_by_g.len()),
        Check::holds(
            format!("{} lie in their union", list_names(&ORDER4_LIST2)),
            list2_in_union,
        ),
        Check::holds("pairing with products in H exists", !matchings.is_empty()),
    ];
    Order4Structure { q8_subgroups: q8, normalised_by_g, list2_in_union, matchings, checks }
}

/// All perfect matchings of `0..n` (n even).
fn perfect_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&a, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for (k, &b) in tail.iter().enumerate() {
            let remaining: Vec<usize> = tail.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x).collect();
            acc.push((a, b));
            go(&remaining, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(&(0..n).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    out
}

pub const ORDER3_FIXED: [(&str, &str); 2] = [("g", ""), ("gg", "")];
pub const ORDER3_LIST_TRIPLE: [(&str, &str); 3] = [("fh", ""), ("fh", "g"), ("fh", "gg")];
pub const ORDER3_LIST_TRIPLE_INV: [(&str, &str); 3] = [("hf", ""), ("hf", "g"), ("hf", "gg")];
pub const ORDER3_LIST_SIX: [(&str, &str); 6] =
    [("g", "f"), ("g", "fg"), ("g", "fgg"), ("g", "fh"), ("g", "fgh"), ("g", "fggh")];

fn order3_memberships(o1: &O1, c: &OrbitCensus, conv: Exponent) -> (Vec<Check>, bool) {
    let fixed = eval_list(o1, &ORDER3_FIXED, conv);
    let tri = eval_list(o1, &ORDER3_LIST_TRIPLE, conv);
    let tri_inv = eval_list(o1, &ORDER3_LIST_TRIPLE_INV, conv);
    let six = eval_list(o1, &ORDER3_LIST_SIX, conv);
    let size_of = |xs: &[usize]| single_orbit(c, xs).map(|k| c.orbits[k].items.len());
    let inverses = tri.iter().zip(&tri_inv).all(|(&a, &b)| o1.group.mul(a, b) == o1.group.identity());
    let distinct = |xs: &[usize]| {
        xs.iter().map(|&x| c_item(c, x)).collect::<BTreeSet<_>>().len() == xs.len()
    };
    let checks = vec![
        Check::holds("{g, g^2} is the fixed pair", size_of(&fixed) == Some(1)),
        Check::holds(
            format!("{} (with inverses {}) form the 3-orbit", list_names(&ORDER3_LIST_TRIPLE), list_names(&ORDER3_LIST_TRIPLE_INV)),
            size_of(&[tri.clone(), tri_inv].concat()) == Some(3) && distinct(&tri) && inverses,
        ),
        Check::holds(
            format!("{} form the 6-orbit", list_names(&ORDER3_LIST_SIX)),
            size_of(&six) == Some(6) && distinct(&six),
        ),
    ];
    let ok = checks.iter().all(|c| c.pass);
    (checks, ok)
}

pub fn order3_census(o1: &O1) -> OrbitCensus {
    let g = &o1.group;
    let ord3 = g.elements_of_order(3);
    let items = dedup_sets(ord3.iter().map(|&x| vec![x, g.inv(x)]));
    let orbits = build_orbits(o1, items.clone());
    let sizes = sorted_sizes(&orbits);
    let mut census = OrbitCensus {
        kind: ItemKind::InversePairOrder3,
        item_count: items.len(),
        orbits,
        sizes,
        convention: Exponent::Right,
        checks: Vec::new(),
    };
    let (mut member_checks, ok) = order3_memberships(o1, &census, Exponent::Right);
    if !ok {
        let (alt, alt_ok) = order3_memberships(o1, &census, Exponent::Left);
        if alt_ok {
            census.convention = Exponent::Left;
            member_checks = alt;
        }
    }
    let fh = o1.word("fh");
    let hf = o1.word("hf");
    let mut checks = vec![
        Check::eq("elements of order 3", 20, ord3.len()),
        Check::eq("inverse pairs", 10, census.item_count),
        Check::eq("orbit sizes", "1+3+6".to_string(), census.sizes_string()),
        Check::holds("(fh)(hf) = 1", g.mul(fh, hf) == g.identity()),
    ];
    checks.append(&mut member_checks);
    census.checks = checks;
    census
}

pub const ORDER5_GENERATORS: [&str; 6] = ["gfh", "fhg", "ghfg", "ghf", "hfg", "gfhg"];

/// Smallest `n > 0` with `x^n = ±1`.
pub fn order_mod_sign(o1: &O1, x: usize) -> usize {
    let g = &o1.group;
    let (id, m1) = (g.identity(), o1.minus_one());
    let mut p = x;
    let mut n = 1;
    while p != id && p != m1 {
        p = g.mul(p, x);
        n += 1;
    }
    n
}

/// `⟨x⟩ ∪ −⟨x⟩` as sorted indices.
fn signed_cyclic(o1: &O1, x: usize) -> Vec<usize> {
    let s = o1.group.closure_indices(&[x, o1.minus_one()]);
    let mut v = s;
    v.sort_unstable();
    v
}

pub fn order5_census(o1: &O1) -> OrbitCensus {
    let g = &o1.group;
    let mut elems = g.elements_of_order(5);
    elems.extend(g.elements_of_order(10));
    let items = dedup_sets(elems.iter().map(|&x| signed_cyclic(o1, x)));
    let orbits = build_orbits(o1, items.clone());
    let sizes = sorted_sizes(&orbits);
    let gens: Vec<usize> = ORDER5_GENERATORS.iter().map(|w| o1.word(w)).collect();
    let listed: BTreeSet<Vec<usize>> = gens.iter().map(|&x| signed_cyclic(o1, x)).collect();
    let sign_class = |x: usize| x.min(o1.neg(x));
    let all_classes: BTreeSet<usize> = elems.iter().map(|&x| sign_class(x)).collect();
    let covered: BTreeSet<usize> = listed
        .iter()
        .flatten()
        .filter(|&&x| x != g.identity() && x != o1.minus_one())
        .map(|&x| sign_class(x))
        .collect();
    let checks = vec![
        Check::eq("elements of order 5 or 10", 48, elems.len()),
        Check::eq("cyclic groups of order 5 modulo sign", 6, items.len()),
        Check::holds(
            format!("{} have order 5 modulo sign", ORDER5_GENERATORS.join(", ")),
            gens.iter().all(|&x| order_mod_sign(o1, x) == 5),
        ),
        Check::eq("distinct groups from the listed generators", 6, listed.len()),
        Check::eq("sign classes covered", format!("{}/24", all_classes.len()), format!("{}/24", covered.len())),
    ];
    OrbitCensus {
        kind: ItemKind::CyclicOrder5,
        item_count: items.len(),
        orbits,
        sizes,
        convention: Exponent::Right,
        checks,
    }
}

/// Element-order histogram of O₁ against `1+1+20+30+24+20+24`.
pub fn census_totals(o1: &O1) -> Check {
    let want = BTreeMap::from([(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)]);
    let fmt = |m: &BTreeMap<usize, usize>| {
        m.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
    };
    Check::eq("element orders", fmt(&want), fmt(&o1.group.order_histogram()))
}
