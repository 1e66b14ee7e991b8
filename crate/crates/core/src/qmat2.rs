//! 2×2 quaternion matrices and the rank-2 quaternion module they act on.
//!
//! Spinors are row vectors. Quaternion scalars multiply spinors on the
//! left and matrices act on the right, `x ↦ xM`, so the two actions
//! commute and `(xA)B = x(AB)`. The Hermitian form is
//! `x·r = Σ xᵢ r̄ᵢ`, linear in the first slot.

use crate::goldnum::Gold;
use crate::quat::Quaternion;
use crate::scalar::{Galois, Ring};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A row vector `(c1, c2)` of quaternions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Spinor2<T> {
    pub c1: Quaternion<T>,
    pub c2: Quaternion<T>,
}

impl<T: Ring> Spinor2<T> {
    pub fn new(c1: Quaternion<T>, c2: Quaternion<T>) -> Self {
        Spinor2 { c1, c2 }
    }

    /// `x·r = x₁r̄₁ + x₂r̄₂`.
    pub fn dot(&self, r: &Self) -> Quaternion<T> {
        self.c1.clone() * r.c1.conj() + self.c2.clone() * r.c2.conj()
    }

    /// `x·x`, a non-negative real stored as a quaternion's real part.
    pub fn norm2(&self) -> T {
        self.c1.norm2() + self.c2.norm2()
    }

    /// Left scalar multiple `λx`.
    pub fn scale_left(&self, lambda: &Quaternion<T>) -> Self {
        Spinor2 {
            c1: lambda.clone() * &self.c1,
            c2: lambda.clone() * &self.c2,
        }
    }

    /// Right scalar multiple `xλ` (not a module operation in this convention).
    pub fn scale_right(&self, lambda: &Quaternion<T>) -> Self {
        Spinor2 {
            c1: self.c1.clone() * lambda,
            c2: self.c2.clone() * lambda,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }
}

impl<T: Ring> Add for Spinor2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Spinor2 { c1: self.c1 + o.c1, c2: self.c2 + o.c2 }
    }
}

impl<T: Ring> Sub for Spinor2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Spinor2 { c1: self.c1 - o.c1, c2: self.c2 - o.c2 }
    }
}

impl<T: Galois> Galois for Spinor2<T> {
    fn galois(&self) -> Self {
        Spinor2 { c1: self.c1.galois(), c2: self.c2.galois() }
    }
}

/// A 2×2 matrix of quaternions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2<T> {
    pub m11: Quaternion<T>,
    pub m12: Quaternion<T>,
    pub m21: Quaternion<T>,
    pub m22: Quaternion<T>,
}

impl<T: Ring> Mat2<T> {
    pub fn new(m11: Quaternion<T>, m12: Quaternion<T>, m21: Quaternion<T>, m22: Quaternion<T>) -> Self {
        Mat2 { m11, m12, m21, m22 }
    }

    pub fn identity() -> Self {
        Self::diag(Quaternion::one(), Quaternion::one())
    }

    pub fn zero() -> Self {
        Self::diag(Quaternion::zero(), Quaternion::zero())
    }

    pub fn diag(a: Quaternion<T>, d: Quaternion<T>) -> Self {
        Mat2 { m11: a, m12: Quaternion::zero(), m21: Quaternion::zero(), m22: d }
    }

    pub fn offdiag(b: Quaternion<T>, c: Quaternion<T>) -> Self {
        Mat2 { m11: Quaternion::zero(), m12: b, m21: c, m22: Quaternion::zero() }
    }

    /// `q·I`, the scalar matrix.
    pub fn scalar(q: Quaternion<T>) -> Self {
        Self::diag(q.clone(), q)
    }

    pub fn entries(&self) -> [&Quaternion<T>; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }

    pub fn map(&self, f: impl Fn(&Quaternion<T>) -> Quaternion<T>) -> Self {
        Mat2 { m11: f(&self.m11), m12: f(&self.m12), m21: f(&self.m21), m22: f(&self.m22) }
    }

    /// `qM`, every entry multiplied by `q` on the left.
    pub fn left_scale(&self, q: &Quaternion<T>) -> Self {
        self.map(|e| q.clone() * e)
    }

    /// `Mq`, every entry multiplied by `q` on the right.
    pub fn right_scale(&self, q: &Quaternion<T>) -> Self {
        self.map(|e| e.clone() * q)
    }

    /// Scale by a central ring element.
    pub fn scale(&self, s: &T) -> Self {
        self.map(|e| e.scale(s))
    }

    /// Row-vector action `xM`.
    pub fn apply(&self, x: &Spinor2<T>) -> Spinor2<T> {
        Spinor2 {
            c1: x.c1.clone() * &self.m11 + x.c2.clone() * &self.m21,
            c2: x.c1.clone() * &self.m12 + x.c2.clone() * &self.m22,
        }
    }

    /// Conjugate transpose `M*`.
    pub fn adjoint(&self) -> Self {
        Mat2 {
            m11: self.m11.conj(),
            m12: self.m21.conj(),
            m21: self.m12.conj(),
            m22: self.m22.conj(),
        }
    }

    /// `2(Re m₁₁ + Re m₂₂)`: the trace of the 4×4 complex matrix obtained by
    /// embedding each quaternion as a 2×2 complex matrix.
    pub fn complex_char_trace(&self) -> T {
        let two = T::from_int(2);
        two * (self.m11.re().clone() + self.m22.re())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_diagonal(&self) -> bool {
        self.m12.is_zero() && self.m21.is_zero()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc * self)
    }

    /// Least `n ≥ 1` with `Mⁿ = I`, if at most `cap`.
    pub fn order(&self, cap: u32) -> Option<u32> {
        let id = Self::identity();
        let mut p = self.clone();
        for n in 1..=cap {
            if p == id {
                return Some(n);
            }
            p = p * self;
        }
        None
    }

    /// Coordinates in the basis `E_pq·e_r`, `e_r ∈ {1, i, j, k}`, in the
    /// order `m11, m12, m21, m22`.
    pub fn flatten(&self) -> [T; 16] {
        let mut out: [T; 16] = std::array::from_fn(|_| T::zero());
        for (n, e) in self.entries().into_iter().enumerate() {
            for (r, c) in e.coeffs().into_iter().enumerate() {
                out[4 * n + r] = c.clone();
            }
        }
        out
    }

    pub fn unflatten(v: &[T; 16]) -> Self {
        let q = |n: usize| {
            Quaternion::new(v[4 * n].clone(), v[4 * n + 1].clone(), v[4 * n + 2].clone(), v[4 * n + 3].clone())
        };
        Mat2 { m11: q(0), m12: q(1), m21: q(2), m22: q(3) }
    }
}

impl<'a, T: Ring> Mul<&'a Mat2<T>> for Mat2<T> {
    type Output = Self;
    fn mul(self, o: &'a Self) -> Self {
        let m = |a: &Quaternion<T>, b: &Quaternion<T>| a.clone() * b;
        Mat2 {
            m11: m(&self.m11, &o.m11) + m(&self.m12, &o.m21),
            m12: m(&self.m11, &o.m12) + m(&self.m12, &o.m22),
            m21: m(&self.m21, &o.m11) + m(&self.m22, &o.m21),
            m22: m(&self.m21, &o.m12) + m(&self.m22, &o.m22),
        }
    }
}

impl<T: Ring> Mul for Mat2<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self * &o
    }
}

impl<'a, 'b, T: Ring> Mul<&'b Mat2<T>> for &'a Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, o: &'b Mat2<T>) -> Mat2<T> {
        self.clone() * o
    }
}

impl<T: Ring> Add for Mat2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Mat2 {
            m11: self.m11 + o.m11,
            m12: self.m12 + o.m12,
            m21: self.m21 + o.m21,
            m22: self.m22 + o.m22,
        }
    }
}

impl<T: Ring> Sub for Mat2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Ring> Neg for Mat2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Mat2 { m11: -self.m11, m12: -self.m12, m21: -self.m21, m22: -self.m22 }
    }
}

impl<T: Galois> Galois for Mat2<T> {
    fn galois(&self) -> Self {
        Mat2 {
            m11: self.m11.galois(),
            m12: self.m12.galois(),
            m21: self.m21.galois(),
            m22: self.m22.galois(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m11, self.m12, self.m21, self.m22)
    }
}

impl<T: Serialize + Clone> Serialize for Mat2<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [[&self.m11, &self.m12], [&self.m21, &self.m22]].serialize(s)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Mat2<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [[m11, m12], [m21, m22]] = <[[Quaternion<T>; 2]; 2]>::deserialize(d)?;
        Ok(Mat2 { m11, m12, m21, m22 })
    }
}

/// Golden-field row spinor.
pub type Spinor = Spinor2<Gold>;
/// Golden-field 2×2 quaternion matrix.
pub type QMat2 = Mat2<Gold>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goldnum::rat;
    use crate::quat::{Quat, ScalarConstants};
    use proptest::prelude::*;

    fn small_quat() -> impl Strategy<Value = Quat> {
        let c = (-4i64..4, -4i64..4);
        (c.clone(), c.clone(), c.clone(), c).prop_map(|(w, x, y, z)| {
            let gf = |(a, b): (i64, i64)| Gold::new(rat(a, 2), rat(b, 1));
            Quat::new(gf(w), gf(x), gf(y), gf(z))
        })
    }

    fn small_mat() -> impl Strategy<Value = QMat2> {
        (small_quat(), small_quat(), small_quat(), small_quat())
            .prop_map(|(a, b, c, d)| QMat2::new(a, b, c, d))
    }

    fn small_spinor() -> impl Strategy<Value = Spinor> {
        (small_quat(), small_quat()).prop_map(|(a, b)| Spinor::new(a, b))
    }

    #[test]
    fn omega_diag_cubes_to_identity() {
        let c = ScalarConstants::new();
        let g = QMat2::diag(c.omega.clone(), Quat::one());
        assert!((g.clone() * &g * &g).is_identity());
        assert_eq!(g.order(10), Some(3));
    }

    #[test]
    fn traces() {
        let c = ScalarConstants::new();
        assert_eq!(QMat2::identity().complex_char_trace(), Gold::from_int(4));
        assert_eq!(QMat2::diag(c.omega, Quat::one()).complex_char_trace(), Gold::one());
        assert_eq!((-QMat2::identity()).complex_char_trace(), Gold::from_int(-4));
    }

    #[test]
    fn galois_on_diagonal() {
        let tau = Quat::scalar(Gold::tau());
        let sigma = Quat::scalar(Gold::sigma());
        let m = QMat2::diag(tau.clone(), sigma.clone());
        assert_eq!(m.galois(), QMat2::diag(sigma, tau));
        assert_eq!(m.galois().galois(), m);
    }

    #[test]
    fn identity_action() {
        let x = Spinor::new(Quat::i(), Quat::scalar(Gold::tau()));
        assert_eq!(QMat2::identity().apply(&x), x);
    }

    #[test]
    fn json_is_two_by_two() {
        let m = QMat2::diag(Quat::i(), Quat::one());
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 2);
        assert_eq!(v[0].as_array().unwrap().len(), 2);
        let back: QMat2 = serde_json::from_value(v).unwrap();
        assert_eq!(back, m);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn action_is_compatible_with_products(a in small_mat(), b in small_mat(), x in small_spinor()) {
            prop_assert_eq!(b.apply(&a.apply(&x)), (a.clone() * &b).apply(&x));
        }

        #[test]
        fn action_commutes_with_left_scalars(a in small_mat(), x in small_spinor(), l in small_quat()) {
            prop_assert_eq!(a.apply(&x.scale_left(&l)), a.apply(&x).scale_left(&l));
        }

        #[test]
        fn dot_is_sesquilinear(x in small_spinor(), y in small_spinor(), l in small_quat()) {
            prop_assert_eq!(x.scale_left(&l).dot(&y), l.clone() * x.dot(&y));
            prop_assert_eq!(x.dot(&y.scale_left(&l)), x.dot(&y) * l.conj());
            prop_assert_eq!(x.dot(&y).conj(), y.dot(&x));
        }

        #[test]
        fn norm_is_real(x in small_spinor()) {
            let d = x.dot(&x);
            prop_assert!(d.x.is_zero() && d.y.is_zero() && d.z.is_zero());
            prop_assert_eq!(d.w, x.norm2());
        }

        #[test]
        fn trace_is_cyclic(a in small_mat(), b in small_mat()) {
            prop_assert_eq!((a.clone() * &b).complex_char_trace(), (b * &a).complex_char_trace());
        }

        #[test]
        fn galois_is_multiplicative(a in small_mat(), b in small_mat()) {
            prop_assert_eq!((a.clone() * &b).galois(), a.galois() * b.galois());
        }

        #[test]
        fn associativity(a in small_mat(), b in small_mat(), c in small_mat()) {
            prop_assert_eq!((a.clone() * &b) * &c, a * (b * &c));
        }

        #[test]
        fn flatten_round_trip(a in small_mat(), b in small_mat()) {
            prop_assert_eq!(QMat2::unflatten(&a.flatten()), a.clone());
            let sum = (a.clone() + b.clone()).flatten();
            let parts: Vec<Gold> = a.flatten().into_iter().zip(b.flatten()).map(|(x, y)| x + y).collect();
            prop_assert_eq!(sum.to_vec(), parts);
        }
    }
}
