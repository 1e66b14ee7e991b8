//! Linear spans and algebra closures of 2×2 quaternion matrices, viewed as
//! 16-dimensional coordinate vectors over the scalar field.

use crate::check::Check;
use crate::goldnum::Gold;
use crate::icosian::{generators, GammaGroup, O1};
use crate::qmat2::{Mat2, QMat2};
use crate::quat::{Quat, ScalarConstants};
use crate::scalar::{Field, Galois};
use num_traits::{One, Zero};
use serde::Serialize;

/// Reduced row echelon basis of a subspace of `T^width`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpanBasis<T> {
    width: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Field> SpanBasis<T> {
    pub fn new(width: usize) -> Self {
        SpanBasis { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = x.clone() - c.clone() * r;
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Add `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.width, "vector width");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].try_inv().expect("non-zero pivot");
        for x in v.iter_mut() {
            *x = x.clone() * &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, n) in row.iter_mut().zip(&v) {
                *x = x.clone() - c.clone() * n;
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }
}

fn flat<T: Field>(m: &Mat2<T>) -> Vec<T> {
    m.flatten().to_vec()
}

pub fn span_of<T: Field>(mats: &[Mat2<T>]) -> SpanBasis<T> {
    let mut b = SpanBasis::new(16);
    for m in mats {
        b.insert(&flat(m));
    }
    b
}

pub fn span_dim<T: Field>(mats: &[Mat2<T>]) -> usize {
    span_of(mats).dim()
}

/// Smallest subspace containing `mats` and closed under products, returned
/// as a list of matrices spanning it.
pub fn algebra_closure<T: Field>(mats: &[Mat2<T>]) -> Vec<Mat2<T>> {
    let mut basis = SpanBasis::new(16);
    let mut span: Vec<Mat2<T>> = Vec::new();
    for m in mats {
        if basis.insert(&flat(m)) {
            span.push(m.clone());
        }
    }
    // every product of two spanning elements, including newly added ones
    let mut i = 0;
    while i < span.len() {
        for j in 0..=i {
            for p in [&span[i] * &span[j], &span[j] * &span[i]] {
                if basis.insert(&flat(&p)) {
                    span.push(p);
                }
            }
        }
        i += 1;
    }
    span
}

pub fn algebra_closure_dim<T: Field>(mats: &[Mat2<T>]) -> usize {
    algebra_closure(mats).len()
}

/// Whether the span is mapped into itself by `√5 ↦ −√5`.
pub fn galois_stable(mats: &[QMat2]) -> bool {
    let b = span_of(mats);
    mats.iter().all(|m| b.contains(&flat(&m.galois())))
}

/// Diagonal matrix helper.
fn diag(a: Quat, d: Quat) -> QMat2 {
    QMat2::diag(a, d)
}

/// Named elements of the six-dimensional algebra `⟨1, g, g², h, hg, hg²⟩`.
#[derive(Clone, Debug)]
pub struct NeutrinoElements {
    /// `(1+g+g²)/3`
    pub e1: QMat2,
    /// `(2−g−g²)/3`
    pub e2: QMat2,
    /// `g−g²`
    pub theta: QMat2,
    /// `h(1+g+g²)/3`
    pub u1: QMat2,
    /// `h(2−g−g²)/3`
    pub phi: QMat2,
    /// `h(g−g²)`
    pub phi_theta: QMat2,
}

impl NeutrinoElements {
    pub fn new() -> Self {
        let gens = generators();
        let (g, h) = (&gens.g, &gens.h);
        let id = QMat2::identity();
        let g2 = g * g;
        let third = Gold::rational(1, 3);
        let e1 = (id.clone() + g.clone() + g2.clone()).scale(&third);
        let e2 = (id.scale(&Gold::from_int(2)) - g.clone() - g2.clone()).scale(&third);
        let theta = g.clone() - g2;
        NeutrinoElements {
            u1: h * &e1,
            phi: h * &e2,
            phi_theta: h * &theta,
            e1,
            e2,
            theta,
        }
    }
}

impl Default for NeutrinoElements {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraReport {
    pub checks: Vec<Check>,
}

impl AlgebraReport {
    pub fn pass(&self) -> bool {
        crate::check::all_pass(&self.checks)
    }
}

/// Exact identities for the algebra generated by `g` and `h`.
pub fn neutrino_algebra_report() -> AlgebraReport {
    let c = ScalarConstants::new();
    let n = NeutrinoElements::new();
    let gens = generators();
    let g = &gens.g;
    let id = QMat2::identity();
    let (o, one) = (Quat::zero(), Quat::one());
    let phi = c.phi.clone();
    let theta = c.theta.clone();
    let mut checks = vec![
        Check::holds("(1+g+g^2)/3 = diag(0,1)", n.e1 == diag(o.clone(), one.clone())),
        Check::holds("(2-g-g^2)/3 = diag(1,0)", n.e2 == diag(one.clone(), o.clone())),
        Check::holds("g-g^2 = diag(theta,0)", n.theta == diag(theta.clone(), o.clone())),
        Check::holds("h(1+g+g^2)/3 = diag(0,phi)", n.u1 == diag(o.clone(), phi.clone())),
        Check::holds("h(2-g-g^2)/3 = diag(phi,0)", n.phi == diag(phi.clone(), o.clone())),
        Check::holds("h(g-g^2) = diag(phi theta,0)", n.phi_theta == diag(phi.clone() * &theta, o.clone())),
        Check::holds("e1^2 = e1", &n.e1 * &n.e1 == n.e1),
        Check::holds("e2^2 = e2", &n.e2 * &n.e2 == n.e2),
        Check::holds("e1 e2 = 0", (&n.e1 * &n.e2).flatten().iter().all(Zero::is_zero)),
        Check::holds("e1 + e2 = 1", n.e1.clone() + n.e2.clone() == id),
        Check::holds("phi^2 = -1", phi.clone() * &phi == -one.clone()),
        Check::holds("theta^2 = -3", theta.clone() * &theta == Quat::from_int(-3)),
        Check::holds("phi theta = -theta phi", phi.clone() * &theta == -(theta.clone() * &phi)),
        Check::holds(
            "(phi theta)^2 = -3",
            (phi.clone() * &theta).pow(2) == Quat::from_int(-3),
        ),
    ];
    let e2_corner = [n.e2.clone(), n.phi.clone(), n.theta.clone(), n.phi_theta.clone()];
    checks.push(Check::eq("first corner span {1,phi,theta,phi theta}", 4, span_dim(&e2_corner)));
    checks.push(Check::eq("first corner closed", 4, algebra_closure_dim(&e2_corner)));
    let e1_corner = [n.e1.clone(), n.u1.clone()];
    checks.push(Check::eq("second corner span {1,phi}", 2, span_dim(&e1_corner)));
    checks.push(Check::holds("second corner phi^2 = -e1", &n.u1 * &n.u1 == -n.e1.clone()));
    let g2 = g * g;
    let three = [id.clone(), g.clone(), g2.clone()];
    checks.push(Check::eq("span {1,g,g^2}", 3, span_dim(&three)));
    checks.push(Check::eq("algebra {1,g,g^2}", 3, algebra_closure_dim(&three)));
    checks.push(Check::holds(
        "{1,g,g^2} commutative",
        three.iter().all(|a| three.iter().all(|b| a * b == b * a)),
    ));
    let six = six_dimensional_basis();
    checks.push(Check::eq("span {1,g,g^2,h,hg,hg^2}", 6, span_dim(&six)));
    checks.push(Check::eq("algebra {1,g,g^2,h,hg,hg^2}", 6, algebra_closure_dim(&six)));
    let corners: Vec<QMat2> = e1_corner.iter().chain(&e2_corner).cloned().collect();
    checks.push(Check::holds(
        "six-dimensional algebra = complex corner + quaternion corner",
        span_of(&corners) == span_of(&six),
    ));
    AlgebraReport { checks }
}

fn commutator(a: &QMat2, b: &QMat2) -> QMat2 {
    a * b - b * a
}

/// `λ` with `a = λ b`, if one exists.
fn scalar_ratio(a: &QMat2, b: &QMat2) -> Option<Gold> {
    let (fa, fb) = (a.flatten(), b.flatten());
    let p = fb.iter().position(|x| !x.is_zero())?;
    let lambda = fa[p].clone() * &fb[p].inv().ok()?;
    (b.scale(&lambda) == *a).then_some(lambda)
}

fn only_in_corner(x: &QMat2, e: &QMat2) -> bool {
    &(e * x) * e == *x
}

/// Corner and commutation checks for the proposed `su(2)` and `u(1)`
/// generators.
pub fn su2_u1_split_report() -> AlgebraReport {
    let n = NeutrinoElements::new();
    let su2 = [("h(2-g-g^2)/3", &n.phi), ("g-g^2", &n.theta), ("h(g-g^2)", &n.phi_theta)];
    let mut checks = Vec::new();
    for (name, x) in su2 {
        checks.push(Check::holds(format!("{name} acts only in first corner"), only_in_corner(x, &n.e2)));
        checks.push(Check::holds(
            format!("h(1+g+g^2)/3 commutes with {name}"),
            commutator(&n.u1, x).flatten().iter().all(Zero::is_zero),
        ));
    }
    let norms: Vec<Gold> = su2.iter().map(|(_, x)| x.m11.norm2()).collect();
    checks.push(Check::eq(
        "norms of generators",
        "1, 3, 3".to_string(),
        norms.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
    ));
    for a in 0..3 {
        for b in (a + 1)..3 {
            let (na, x) = su2[a];
            let (nb, y) = su2[b];
            let anti = x * y + y * x;
            checks.push(Check::holds(
                format!("{na} and {nb} anticommute"),
                anti.flatten().iter().all(Zero::is_zero),
            ));
            let (_, z) = su2[3 - a - b];
            let c = commutator(x, y);
            checks.push(Check::holds(
                format!("[{na}, {nb}] is a multiple of the third"),
                scalar_ratio(&c, z).is_some(),
            ));
            checks.push(Check::holds(format!("[{na}, {nb}] acts only in first corner"), only_in_corner(&c, &n.e2)));
        }
    }
    checks.push(Check::holds("h(1+g+g^2)/3 acts only in second corner", only_in_corner(&n.u1, &n.e1)));
    checks.push(Check::holds("(h(2-g-g^2)/3)^2 = -e2", &n.phi * &n.phi == -n.e2.clone()));
    AlgebraReport { checks }
}

/// `1, g, g², h, hg, hg²`.
pub fn six_dimensional_basis() -> Vec<QMat2> {
    let gens = generators();
    let (g, h) = (&gens.g, &gens.h);
    let g2 = g * g;
    vec![QMat2::identity(), g.clone(), g2.clone(), h.clone(), h * g, h * &g2]
}

/// Spans and closures quoted for O₁ and the gamma group.
#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub reflections_span: usize,
    pub reflections_algebra: usize,
    pub group_span: usize,
    pub gamma_with_identity_span: usize,
    /// Informational: rank does not change under field extension, so these
    /// spans have the same dimension over ℝ whether or not they are stable.
    pub galois_stable: GaloisStability,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaloisStability {
    pub reflections: bool,
    pub powers_of_g: bool,
    pub with_h: bool,
}

pub fn dimension_report(o1: &O1) -> DimensionReport {
    let refl: Vec<QMat2> = o1.reflections.iter().map(|&i| o1.group.element(i).clone()).collect();
    let gg = GammaGroup::build().expect("gamma group");
    let mut gam: Vec<QMat2> = gg.gammas.to_vec();
    gam.push(QMat2::identity());
    DimensionReport {
        reflections_span: span_dim(&refl),
        reflections_algebra: algebra_closure_dim(&refl),
        group_span: span_dim(o1.group.elements()),
        gamma_with_identity_span: span_dim(&gam),
        galois_stable: GaloisStability {
            reflections: galois_stable(&refl),
            powers_of_g: galois_stable(&[QMat2::identity(), o1.gens.g.clone(), o1.gens.g.pow(2)]),
            with_h: galois_stable(&six_dimensional_basis()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type R = crate::goldnum::Rat;

    #[test]
    fn small_spans() {
        let id = QMat2::identity();
        assert_eq!(span_dim(&[id.clone()]), 1);
        assert_eq!(span_dim(&[id.clone(), id.scale(&Gold::from_int(3))]), 1);
        assert_eq!(span_dim::<Gold>(&[]), 0);
        let g = generators().g;
        assert_eq!(span_dim(&[id.clone(), g.clone(), &g * &g]), 3);
    }

    #[test]
    fn echelon_is_canonical() {
        let a = QMat2::identity();
        let b = generators().g;
        let s1 = span_of(&[a.clone(), b.clone()]);
        let s2 = span_of(&[b.clone() + a.clone(), b]);
        assert_eq!(s1, s2);
        for (row, &p) in s1.rows.iter().zip(&s1.pivots) {
            assert!(row[p].is_one());
            for (other, _) in s1.rows.iter().zip(&s1.pivots).filter(|(o, _)| *o != row) {
                assert!(other[p].is_zero());
            }
        }
    }

    #[test]
    fn reflection_algebra() {
        let r = dimension_report(O1::shared());
        assert_eq!(r.reflections_algebra, 16);
        assert_eq!(r.reflections_span, 16);
        assert_eq!(r.group_span, 16);
        assert_eq!(r.gamma_with_identity_span, 5);
        // φ is not Galois-fixed, so the complex corner moves
        assert_eq!(
            r.galois_stable,
            GaloisStability { reflections: true, powers_of_g: true, with_h: false }
        );
    }

    #[test]
    fn neutrino_report_passes() {
        let r = neutrino_algebra_report();
        for c in &r.checks {
            assert!(c.pass, "{c}");
        }
    }

    #[test]
    fn split_report_passes() {
        let r = su2_u1_split_report();
        for c in &r.checks {
            assert!(c.pass, "{c}");
        }
    }

    #[test]
    fn closure_is_idempotent() {
        let gens = generators();
        let cl = algebra_closure(&[gens.g.clone(), gens.h.clone()]);
        assert_eq!(algebra_closure_dim(&cl), cl.len());
    }

    fn small_mat() -> impl Strategy<Value = Mat2<R>> {
        prop::collection::vec(-2i64..=2, 16).prop_map(|v| {
            let a: [R; 16] = std::array::from_fn(|k| R::from_integer(v[k].into()));
            Mat2::unflatten(&a)
        })
    }

    // sparse entries keep closure coefficients small
    fn unit_mat() -> impl Strategy<Value = Mat2<R>> {
        prop::collection::vec(prop::sample::select(vec![-1i64, 0, 0, 0, 1]), 16).prop_map(|v| {
            let a: [R; 16] = std::array::from_fn(|k| R::from_integer(v[k].into()));
            Mat2::unflatten(&a)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn span_bounded_and_monotone(ms in prop::collection::vec(small_mat(), 0..5), extra in small_mat()) {
            let d = span_dim(&ms);
            prop_assert!(d <= ms.len());
            let mut more = ms.clone();
            more.push(extra);
            let d2 = span_dim(&more);
            prop_assert!(d2 == d || d2 == d + 1);
        }

        #[test]
        fn members_are_contained(ms in prop::collection::vec(small_mat(), 1..5)) {
            let b = span_of(&ms);
            for m in &ms {
                prop_assert!(b.contains(&m.flatten()));
            }
            let sum = ms.iter().cloned().fold(Mat2::zero(), |a, m| a + m);
            prop_assert!(b.contains(&sum.flatten()));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn closure_monotone(ms in prop::collection::vec(unit_mat(), 1..3), extra in unit_mat()) {
            let d = algebra_closure_dim(&ms);
            let mut more = ms.clone();
            more.push(extra);
            prop_assert!(algebra_closure_dim(&more) >= d);
            prop_assert!(d >= span_dim(&ms));
        }
    }
}
