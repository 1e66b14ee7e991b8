//! The quaternionic reflection group O₁: generators, roots, reflections,
//! and the Dirac gamma group of order 32.
//!
//! Conventions follow [`crate::qmat2`]: row spinors, scalars on the left,
//! matrices on the right. With these, the reflection in a root `r` of norm 3
//! is
//!
//! ```text
//! x ↦ x − (x·r)(1−ω) r / 3,   i.e.   R_ij = δ_ij − r̄_i (1−ω) r_j / 3,
//! ```
//!
//! and replacing `r` by `ωr` leaves it unchanged while `φr` inverts it.

use crate::goldnum::Gold;
use crate::groupkit::{FiniteGroup, GroupError, Subgroup, DEFAULT_CAP};
use crate::qmat2::{QMat2, Spinor};
use crate::quat::{scalar_group, Quat, ScalarConstants, ScalarError};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

#[derive(Debug, thiserror::Error)]
pub enum IcosianError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("generator relation failed: {0}")]
    Relation(String),
    #[error("root has squared norm {0}, expected 3")]
    RootNorm(String),
    #[error("expected {expected} {what}, found {found}")]
    Count { what: &'static str, expected: usize, found: usize },
    #[error("{0}")]
    Mismatch(&'static str),
}

/// The generators `f`, `g`, `h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Generators {
    pub f: QMat2,
    pub g: QMat2,
    pub h: QMat2,
}

/// `((ω²−ω)/3) · [[1, ωφ−ω²], [ωφ−ω, ω²φ]]`, `diag(ω,1)`, `diag(φ,φ)`.
///
/// `f` is the familiar closed form with ω replaced by ω² throughout; with
/// ω as written the product `fg` has order 6, not 3. See [`printed_f`].
pub fn generators() -> Generators {
    let c = ScalarConstants::new();
    let w = c.omega2();
    f_from_omega(&w, &c.phi, &c)
}

fn f_from_omega(w: &Quat, phi: &Quat, c: &ScalarConstants) -> Generators {
    let w2 = w.clone() * w;
    let third = Gold::rational(1, 3);
    let scalar = (w.clone() - w2.clone()).scale(&third);
    let m = QMat2::new(
        Quat::one(),
        w2.clone() * phi - w.clone(),
        w2.clone() * phi - w2.clone(),
        w.clone() * phi,
    );
    Generators {
        f: m.left_scale(&scalar),
        g: QMat2::diag(c.omega.clone(), Quat::one()),
        h: QMat2::scalar(c.phi.clone()),
    }
}

/// The closed form with ω as written, `((ω−ω²)/3)·[[1, ω²φ−ω], [ω²φ−ω², ωφ]]`.
/// It lies in O₁ but fails `(fg)³ = 1`.
pub fn printed_f() -> QMat2 {
    let c = ScalarConstants::new();
    f_from_omega(&c.omega.clone(), &c.phi, &c).f
}

impl Generators {
    /// The six defining relations with their exact truth values.
    pub fn relations(&self) -> Vec<(&'static str, bool)> {
        let id = QMat2::identity();
        let m1 = -QMat2::identity();
        let (f, g, h) = (&self.f, &self.g, &self.h);
        vec![
            ("f^2 = -1", f.pow(2) == m1),
            ("(gh)^2 = -1", (g * h).pow(2) == m1),
            ("h^2 = -1", h.pow(2) == m1),
            ("g^3 = 1", g.pow(3) == id),
            ("(fg)^3 = 1", (f * g).pow(3) == id),
            ("(fh)^3 = 1", (f * h).pow(3) == id),
        ]
    }

    pub fn validate(&self) -> Result<(), IcosianError> {
        match self.relations().into_iter().find(|(_, ok)| !ok) {
            Some((name, _)) => Err(IcosianError::Relation(name.to_string())),
            None => Ok(()),
        }
    }

    pub fn as_array(&self) -> [QMat2; 3] {
        [self.f.clone(), self.g.clone(), self.h.clone()]
    }
}

/// The ten base spinors of squared norm 3: `(θ,0)`, `((φ+1)ωᶜ,1)`,
/// `(ωᶜ,(φ−1)ω)`, `(ωᶜ,(φ−1)ω²)` for `c = 0,1,2`.
pub fn base_spinors() -> Vec<Spinor> {
    let c = ScalarConstants::new();
    let w = &c.omega;
    let w2 = c.omega2();
    let pw = |n: u32| w.pow(n);
    let phi_p = c.phi.clone() + Quat::one();
    let phi_m = c.phi.clone() - Quat::one();
    let mut out = vec![Spinor::new(c.theta.clone(), Quat::zero())];
    out.extend((0..3).map(|k| Spinor::new(phi_p.clone() * pw(k), Quat::one())));
    out.extend((0..3).map(|k| Spinor::new(pw(k), phi_m.clone() * w)));
    out.extend((0..3).map(|k| Spinor::new(pw(k), phi_m.clone() * &w2)));
    out
}

/// A root with its base spinor and scalar multiplier.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub spinor: Spinor,
    pub base_index: usize,
    pub scalar_index: usize,
}

/// The 120 roots `s·b`, base spinor major, scalar minor (scalars in the
/// breadth-first order of [`scalar_group`]).
pub fn enumerate_roots() -> Result<Vec<Root>, IcosianError> {
    let scalars = scalar_group()?;
    let bases = base_spinors();
    for b in &bases {
        if b.norm2() != Gold::from_int(3) {
            return Err(IcosianError::RootNorm(b.norm2().to_string()));
        }
    }
    let roots: Vec<Root> = bases
        .iter()
        .enumerate()
        .flat_map(|(bi, b)| {
            scalars.iter().enumerate().map(move |(si, s)| Root {
                spinor: b.scale_left(s),
                base_index: bi,
                scalar_index: si,
            })
        })
        .collect();
    let distinct: BTreeSet<&Spinor> = roots.iter().map(|r| &r.spinor).collect();
    if distinct.len() != 120 {
        return Err(IcosianError::Count { what: "distinct roots", expected: 120, found: distinct.len() });
    }
    Ok(roots)
}

/// The order-3 reflection defined by a root of squared norm 3.
pub fn reflection_of(r: &Spinor) -> Result<QMat2, IcosianError> {
    let n = r.norm2();
    if n != Gold::from_int(3) {
        return Err(IcosianError::RootNorm(n.to_string()));
    }
    let c = ScalarConstants::new();
    let k = (Quat::one() - c.omega).scale(&Gold::rational(1, 3));
    let r = [&r.c1, &r.c2];
    let entry = |i: usize, j: usize| {
        let delta = if i == j { Quat::one() } else { Quat::zero() };
        delta - r[i].conj() * &k * r[j]
    };
    Ok(QMat2::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)))
}

/// A non-zero row vector `x` with `xN = 0`, if one exists.
pub fn left_kernel_vector(n: &QMat2) -> Option<Spinor> {
    let (a, b, c, d) = (&n.m11, &n.m12, &n.m21, &n.m22);
    if !a.is_zero() {
        // x1 = -x2 c a⁻¹, then x2 (d − c a⁻¹ b) = 0
        let ainv = a.inv()?;
        let schur = d.clone() - c.clone() * &ainv * b;
        return schur
            .is_zero()
            .then(|| Spinor::new(-(c.clone() * &ainv), Quat::one()));
    }
    if !c.is_zero() {
        // x2 c = 0 forces x2 = 0; then x1 b = 0
        return b.is_zero().then(|| Spinor::new(Quat::one(), Quat::zero()));
    }
    // first column vanishes: x1 b + x2 d = 0 always has a solution
    if b.is_zero() {
        Some(Spinor::new(Quat::one(), Quat::zero()))
    } else {
        Some(Spinor::new(-(d.clone() * b.inv()?), Quat::one()))
    }
}

/// Order 3 with a non-trivial fixed line.
pub fn is_reflection(m: &QMat2) -> bool {
    m.order(3) == Some(3) && left_kernel_vector(&(m.clone() - QMat2::identity())).is_some()
}

/// The group O₁ with its named elements.
#[derive(Clone, Debug)]
pub struct O1 {
    pub group: FiniteGroup<QMat2>,
    pub gens: Generators,
    pub f: usize,
    pub g: usize,
    pub h: usize,
    /// Reflections (order-3 elements fixing a line), by index.
    pub reflections: Vec<usize>,
    /// `⟨g, h⟩`.
    pub diagonal: Subgroup<QMat2>,
}

/// Names of the generator positions used in words.
pub const GENERATOR_NAMES: [char; 3] = ['f', 'g', 'h'];

impl O1 {
    pub fn build() -> Result<O1, IcosianError> {
        let gens = generators();
        gens.validate()?;
        let group = FiniteGroup::closure(&gens.as_array(), DEFAULT_CAP)?;
        if group.order() != 120 {
            return Err(IcosianError::Count { what: "group elements", expected: 120, found: group.order() });
        }
        let [f, g, h] = group.generators()[..] else { unreachable!() };
        let reflections: Vec<usize> = (0..group.order())
            .filter(|&i| is_reflection(group.element(i)))
            .collect();
        let diagonal = group.subgroup(&[g, h]);
        Ok(O1 { group, gens, f, g, h, reflections, diagonal })
    }

    /// Shared instance; construction is deterministic.
    pub fn shared() -> &'static O1 {
        static O1_CELL: OnceLock<O1> = OnceLock::new();
        O1_CELL.get_or_init(|| O1::build().expect("O1 construction"))
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Evaluate a word over `f`, `g`, `h` such as `"ghfg"`.
    pub fn word(&self, w: &str) -> usize {
        w.chars().fold(self.group.identity(), |acc, ch| {
            let x = match ch {
                'f' => self.f,
                'g' => self.g,
                'h' => self.h,
                other => panic!("unknown generator {other:?}"),
            };
            self.group.mul(acc, x)
        })
    }

    /// The stored generator word of an element, e.g. `"fgh"`, `"1"` for the
    /// identity.
    pub fn word_of(&self, i: usize) -> String {
        let w = self.group.word(i);
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter().map(|&k| GENERATOR_NAMES[k]).collect()
    }

    pub fn neg(&self, i: usize) -> usize {
        let m = -self.group.element(i).clone();
        self.group.index_of(&m).expect("O1 contains -1")
    }

    pub fn minus_one(&self) -> usize {
        self.group.index_of(&-QMat2::identity()).expect("O1 contains -1")
    }
}

/// Everything needed to certify the reflection structure of O₁.
#[derive(Clone, Debug, Serialize)]
pub struct ReflectionCensus {
    pub roots: usize,
    pub all_norm_three: bool,
    pub distinct_reflections: usize,
    pub all_order_three: bool,
    pub inverse_pairs: usize,
    pub root_to_reflection_fibre: Vec<usize>,
    pub theta_root_gives_g: bool,
    pub reflections_in_group: bool,
    pub reflection_group_order: usize,
    pub reflection_group_equals_o1: bool,
    pub detected_reflections: usize,
    pub detected_match_root_reflections: bool,
    pub two_reflection_products: usize,
    pub identity_is_product: bool,
    pub minus_identity_is_product: bool,
    /// Element-order histogram of the non-reflections that are not products.
    pub non_products_by_order: BTreeMap<usize, usize>,
}

pub fn reflection_census(o1: &O1) -> Result<ReflectionCensus, IcosianError> {
    let roots = enumerate_roots()?;
    let all_norm_three = roots.iter().all(|r| r.spinor.norm2() == Gold::from_int(3));
    let mats: Vec<QMat2> = roots
        .iter()
        .map(|r| reflection_of(&r.spinor))
        .collect::<Result<_, _>>()?;
    let mut distinct: Vec<QMat2> = Vec::new();
    let mut fibre: Vec<usize> = Vec::new();
    for m in &mats {
        match distinct.iter().position(|d| d == m) {
            Some(p) => fibre[p] += 1,
            None => {
                distinct.push(m.clone());
                fibre.push(1);
            }
        }
    }
    let all_order_three = distinct.iter().all(|m| m.order(3) == Some(3));
    let inverse_pairs = distinct
        .iter()
        .filter(|m| distinct.contains(&m.pow(2)))
        .count()
        / 2;
    let theta_root = Spinor::new(ScalarConstants::new().theta, Quat::zero());
    let theta_root_gives_g = reflection_of(&theta_root)? == o1.gens.g;
    let idx: Vec<Option<usize>> = distinct.iter().map(|m| o1.group.index_of(m)).collect();
    let reflections_in_group = idx.iter().all(Option::is_some);
    let refl_group = FiniteGroup::closure(&distinct, DEFAULT_CAP)?;
    let reflection_group_equals_o1 = refl_group.order() == o1.order()
        && refl_group.elements().iter().all(|e| o1.group.index_of(e).is_some());
    let root_set: BTreeSet<usize> = idx.iter().flatten().copied().collect();
    let detected: BTreeSet<usize> = o1.reflections.iter().copied().collect();
    let census = two_reflection_census(o1);
    let products = two_reflection_products(o1);
    Ok(ReflectionCensus {
        roots: roots.len(),
        all_norm_three,
        distinct_reflections: distinct.len(),
        all_order_three,
        inverse_pairs,
        root_to_reflection_fibre: fibre,
        theta_root_gives_g,
        reflections_in_group,
        reflection_group_order: refl_group.order(),
        reflection_group_equals_o1,
        detected_reflections: detected.len(),
        detected_match_root_reflections: reflections_in_group && root_set == detected,
        two_reflection_products: census,
        identity_is_product: products.contains(&o1.group.identity()),
        minus_identity_is_product: products.contains(&o1.minus_one()),
        non_products_by_order: non_products(o1, &products),
    })
}

fn two_reflection_products(o1: &O1) -> BTreeSet<usize> {
    let r = &o1.reflections;
    r.iter()
        .flat_map(|&a| r.iter().map(move |&b| o1.group.mul(a, b)))
        .collect()
}

fn non_products(o1: &O1, products: &BTreeSet<usize>) -> BTreeMap<usize, usize> {
    let refl: BTreeSet<usize> = o1.reflections.iter().copied().collect();
    let mut out = BTreeMap::new();
    for x in (0..o1.order()).filter(|x| !refl.contains(x) && !products.contains(x)) {
        *out.entry(o1.group.element_order(x)).or_insert(0) += 1;
    }
    out
}

/// Number of non-reflection elements expressible as a product of two
/// reflections.
pub fn two_reflection_census(o1: &O1) -> usize {
    let refl: BTreeSet<usize> = o1.reflections.iter().copied().collect();
    two_reflection_products(o1)
        .into_iter()
        .filter(|x| !refl.contains(x))
        .count()
}

/// The group generated by `γ₀ = diag(1,−1)`, `γ₁ = offdiag(i,i)`,
/// `γ₂ = offdiag(j,j)`, `γ₃ = offdiag(k,k)`.
#[derive(Clone, Debug)]
pub struct GammaGroup {
    pub group: FiniteGroup<QMat2>,
    pub gammas: [QMat2; 4],
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaCensus {
    pub order: usize,
    pub pairwise_anticommute: bool,
    pub gamma0_squares_to_one: bool,
    pub spatial_square_to_minus_one: bool,
    /// Non-central elements squaring to `+1`.
    pub involutions: usize,
    pub listed_reflections_match: bool,
}

impl GammaGroup {
    pub fn build() -> Result<GammaGroup, IcosianError> {
        let one = Quat::one();
        let gammas = [
            QMat2::diag(one.clone(), -one),
            QMat2::offdiag(Quat::i(), Quat::i()),
            QMat2::offdiag(Quat::j(), Quat::j()),
            QMat2::offdiag(Quat::k(), Quat::k()),
        ];
        let group = FiniteGroup::closure(&gammas, DEFAULT_CAP)?;
        Ok(GammaGroup { group, gammas })
    }

    /// `±γ₀, ±γ₀γ₁, ±γ₀γ₂, ±γ₀γ₃, ±γ₁γ₂γ₃`.
    pub fn listed_reflections(&self) -> Vec<QMat2> {
        let [g0, g1, g2, g3] = &self.gammas;
        let base = [g0.clone(), g0 * g1, g0 * g2, g0 * g3, (g1 * g2) * g3];
        base.iter().flat_map(|m| [m.clone(), -m.clone()]).collect()
    }

    pub fn census(&self) -> GammaCensus {
        let id = QMat2::identity();
        let g = &self.gammas;
        let mut anti = true;
        for a in 0..4 {
            for b in (a + 1)..4 {
                anti &= (&g[a] * &g[b]) + (&g[b] * &g[a]) == QMat2::zero();
            }
        }
        let central = |m: &QMat2| *m == id || *m == -id.clone();
        let invols: BTreeSet<usize> = (0..self.group.order())
            .filter(|&i| {
                let m = self.group.element(i);
                !central(m) && m.pow(2) == id
            })
            .collect();
        let listed: BTreeSet<usize> = self
            .listed_reflections()
            .iter()
            .filter_map(|m| self.group.index_of(m))
            .collect();
        GammaCensus {
            order: self.group.order(),
            pairwise_anticommute: anti,
            gamma0_squares_to_one: g[0].pow(2) == id,
            spatial_square_to_minus_one: g[1..].iter().all(|x| x.pow(2) == -id.clone()),
            involutions: invols.len(),
            listed_reflections_match: listed.len() == 10 && listed == invols,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Galois;

    #[test]
    fn relations_hold() {
        let gens = generators();
        for (name, ok) in gens.relations() {
            assert!(ok, "{name}");
        }
        assert_eq!(gens.f.pow(2), -QMat2::identity());
        assert_eq!((&gens.f * &gens.g).pow(3), QMat2::identity());
    }

    #[test]
    fn g_and_h_do_not_commute() {
        let gens = generators();
        // ωφ ≠ φω, so the diagonal matrices do not commute.
        assert_ne!(&gens.g * &gens.h, &gens.h * &gens.g);
    }

    #[test]
    fn printed_f_breaks_one_relation() {
        let gens = generators();
        let f = printed_f();
        assert_eq!(f.pow(2), -QMat2::identity());
        assert_eq!((&f * &gens.g).pow(3), -QMat2::identity());
        assert_eq!((&f * &gens.h).pow(3), QMat2::identity());
        assert!(O1::shared().group.index_of(&f).is_some());
    }

    #[test]
    fn base_spinors_have_norm_three() {
        let c = ScalarConstants::new();
        let b = Spinor::new(c.phi.clone() + Quat::one(), Quat::one());
        assert_eq!((c.phi.clone() + Quat::one()).norm2(), Gold::from_int(2));
        assert_eq!(b.norm2(), Gold::from_int(3));
        assert!(base_spinors().iter().all(|s| s.norm2() == Gold::from_int(3)));
    }

    #[test]
    fn roots() {
        let r = enumerate_roots().unwrap();
        assert_eq!(r.len(), 120);
    }

    #[test]
    fn theta_reflection_is_g() {
        let c = ScalarConstants::new();
        // θ(1−ω)θ = (−9+3θ)/2
        let lhs = c.theta.clone() * (Quat::one() - c.omega.clone()) * &c.theta;
        let rhs = (Quat::from_int(-9) + c.theta.scale(&Gold::from_int(3))).scale(&Gold::rational(1, 2));
        assert_eq!(lhs, rhs);
        let r = Spinor::new(c.theta.clone(), Quat::zero());
        assert_eq!(reflection_of(&r).unwrap(), generators().g);
    }

    #[test]
    fn scalar_multiples_of_roots() {
        let c = ScalarConstants::new();
        for root in enumerate_roots().unwrap().iter().step_by(7) {
            let r = reflection_of(&root.spinor).unwrap();
            let rw = reflection_of(&root.spinor.scale_left(&c.omega)).unwrap();
            let rp = reflection_of(&root.spinor.scale_left(&c.phi)).unwrap();
            let rm = reflection_of(&root.spinor.scale_left(&-Quat::one())).unwrap();
            assert_eq!(rw, r);
            assert_eq!(rm, r);
            assert_eq!(&rp * &r, QMat2::identity());
        }
    }

    #[test]
    fn reflections_fix_orthogonal_complement() {
        let c = ScalarConstants::new();
        for root in enumerate_roots().unwrap().iter().step_by(12) {
            let r = reflection_of(&root.spinor).unwrap();
            assert_eq!(r.pow(3), QMat2::identity());
            assert!(!r.is_identity());
            let x = if root.spinor.c2.is_zero() {
                Spinor::new(Quat::zero(), Quat::one())
            } else {
                // x1 r̄1 + x2 r̄2 = 0 with x1 = 1
                let x2 = -(root.spinor.c1.conj() * root.spinor.c2.conj().inv().unwrap());
                Spinor::new(Quat::one(), x2)
            };
            assert!(x.dot(&root.spinor).is_zero());
            assert_eq!(r.apply(&x), x);
            // and a root is moved by the primitive cube root of unity
            let moved = r.apply(&root.spinor);
            assert_eq!(moved, root.spinor.scale_left(&c.omega));
        }
    }

    #[test]
    fn o1_structure() {
        let o1 = O1::shared();
        assert_eq!(o1.order(), 120);
        assert_eq!(o1.reflections.len(), 20);
        assert_eq!(o1.diagonal.order(), 12);
        assert!(o1.diagonal.members().iter().all(|&i| o1.group.element(i).is_diagonal()));
        let diag_count = (0..120).filter(|&i| o1.group.element(i).is_diagonal()).count();
        assert_eq!(diag_count, 12);
        assert_eq!(o1.group.is_maximal(&o1.diagonal.members()), Ok(true));
        assert_eq!(o1.group.element_order(o1.g), 3);
        assert_eq!(o1.group.element_order(o1.minus_one()), 2);
    }

    #[test]
    fn full_reflection_census() {
        let o1 = O1::shared();
        let c = reflection_census(o1).unwrap();
        assert_eq!(c.roots, 120);
        assert!(c.all_norm_three);
        assert_eq!(c.distinct_reflections, 20);
        assert!(c.all_order_three);
        assert_eq!(c.inverse_pairs, 10);
        assert_eq!(c.root_to_reflection_fibre, vec![6; 20]);
        assert!(c.theta_root_gives_g);
        assert!(c.reflections_in_group);
        assert!(c.reflection_group_equals_o1);
        assert_eq!(c.detected_reflections, 20);
        assert!(c.detected_match_root_reflections);
        // −1 and the 24 elements of order 5 are not products of two reflections
        assert_eq!(c.two_reflection_products, 75);
        assert!(c.identity_is_product);
        assert!(!c.minus_identity_is_product);
        assert_eq!(c.non_products_by_order, BTreeMap::from([(2, 1), (5, 24)]));
    }

    #[test]
    fn reflections_closed_under_conjugation() {
        let o1 = O1::shared();
        let set: BTreeSet<usize> = o1.reflections.iter().copied().collect();
        for &r in &o1.reflections {
            for y in 0..o1.order() {
                assert!(set.contains(&o1.group.conj(r, y)));
            }
        }
    }

    #[test]
    fn galois_conjugate_group_is_a_group() {
        // the entrywise Galois image of O1 is closed: it is an automorphic copy
        let o1 = O1::shared();
        let imgs: Vec<QMat2> = o1.gens.as_array().iter().map(|m| m.galois()).collect();
        let gal = FiniteGroup::closure(&imgs, DEFAULT_CAP).unwrap();
        assert_eq!(gal.order(), 120);
    }

    #[test]
    fn gamma_group() {
        let gg = GammaGroup::build().unwrap();
        let c = gg.census();
        assert_eq!(c.order, 32);
        assert!(c.pairwise_anticommute);
        assert!(c.gamma0_squares_to_one);
        assert!(c.spatial_square_to_minus_one);
        assert_eq!(c.involutions, 10);
        assert!(c.listed_reflections_match);
        let [g0, g1, ..] = &gg.gammas;
        assert_eq!((g0 * g1).pow(2), QMat2::identity());
    }

    #[test]
    fn kernel_detection() {
        assert!(left_kernel_vector(&QMat2::identity()).is_none());
        let n = QMat2::diag(Quat::zero(), Quat::one());
        let x = left_kernel_vector(&n).unwrap();
        assert!(n.apply(&x).is_zero() && !x.is_zero());
        let n = QMat2::new(Quat::one(), Quat::i(), Quat::j(), Quat::j() * Quat::i());
        let x = left_kernel_vector(&n).unwrap();
        assert!(n.apply(&x).is_zero());
    }
}
