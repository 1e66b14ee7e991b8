//! Quaternions over an arbitrary commutative ring, and the distinguished
//! golden-field scalars ω, φ, θ.

use crate::goldnum::Gold;
use crate::scalar::{Field, Galois, Ring, ToFloat};
use num_traits::{FromPrimitive, One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `w + x i + y j + z k` with `i² = j² = k² = ijk = -1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(from = "[T; 4]")]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T> From<[T; 4]> for Quaternion<T> {
    fn from([w, x, y, z]: [T; 4]) -> Self {
        Quaternion { w, x, y, z }
    }
}

impl<T> From<Quaternion<T>> for [T; 4] {
    fn from(q: Quaternion<T>) -> Self {
        [q.w, q.x, q.y, q.z]
    }
}

impl<T: Serialize> Serialize for Quaternion<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [&self.w, &self.x, &self.y, &self.z].serialize(s)
    }
}

impl<T> Quaternion<T> {
    pub const fn new(w: T, x: T, y: T, z: T) -> Self {
        Quaternion { w, x, y, z }
    }
}

impl<T: Ring> Quaternion<T> {
    pub fn scalar(w: T) -> Self {
        Quaternion { w, x: T::zero(), y: T::zero(), z: T::zero() }
    }

    pub fn i() -> Self {
        Quaternion::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Quaternion::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Quaternion::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn conj(&self) -> Self {
        Quaternion {
            w: self.w.clone(),
            x: -self.x.clone(),
            y: -self.y.clone(),
            z: -self.z.clone(),
        }
    }

    /// `q q̄ = w² + x² + y² + z²`.
    pub fn norm2(&self) -> T {
        self.w.clone() * &self.w
            + self.x.clone() * &self.x
            + self.y.clone() * &self.y
            + self.z.clone() * &self.z
    }

    /// Real part.
    pub fn re(&self) -> &T {
        &self.w
    }

    pub fn is_pure(&self) -> bool {
        self.w.is_zero()
    }

    /// Multiply every coefficient by a ring scalar (which is central).
    pub fn scale(&self, s: &T) -> Self {
        Quaternion {
            w: self.w.clone() * s,
            x: self.x.clone() * s,
            y: self.y.clone() * s,
            z: self.z.clone() * s,
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Quaternion<U> {
        Quaternion { w: f(&self.w), x: f(&self.x), y: f(&self.y), z: f(&self.z) }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc * self)
    }

    pub fn coeffs(&self) -> [&T; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }
}

impl<T: Field> Quaternion<T> {
    /// `q̄ / N(q)`; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm2().try_inv()?;
        Some(self.conj().scale(&n))
    }
}

impl<T: Ring> Zero for Quaternion<T> {
    fn zero() -> Self {
        Quaternion::scalar(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl<T: Ring> One for Quaternion<T> {
    fn one() -> Self {
        Quaternion::scalar(T::one())
    }
}

impl<T: Ring> Neg for Quaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Quaternion { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }
}

impl<T: Ring> Add for Quaternion<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self + &o
    }
}

impl<'a, T: Ring> Add<&'a Quaternion<T>> for Quaternion<T> {
    type Output = Self;
    fn add(self, o: &'a Self) -> Self {
        Quaternion { w: self.w + &o.w, x: self.x + &o.x, y: self.y + &o.y, z: self.z + &o.z }
    }
}

impl<T: Ring> Sub for Quaternion<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self - &o
    }
}

impl<'a, T: Ring> Sub<&'a Quaternion<T>> for Quaternion<T> {
    type Output = Self;
    fn sub(self, o: &'a Self) -> Self {
        Quaternion { w: self.w - &o.w, x: self.x - &o.x, y: self.y - &o.y, z: self.z - &o.z }
    }
}

impl<'a, T: Ring> Mul<&'a Quaternion<T>> for Quaternion<T> {
    type Output = Self;
    /// Hamilton product.
    fn mul(self, o: &'a Self) -> Self {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        let m = |p: &T, q: &T| p.clone() * q;
        Quaternion {
            w: m(a1, a2) - m(b1, b2) - m(c1, c2) - m(d1, d2),
            x: m(a1, b2) + m(b1, a2) + m(c1, d2) - m(d1, c2),
            y: m(a1, c2) - m(b1, d2) + m(c1, a2) + m(d1, b2),
            z: m(a1, d2) + m(b1, c2) - m(c1, b2) + m(d1, a2),
        }
    }
}

impl<T: Ring> Mul for Quaternion<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self * &o
    }
}

impl<T: Ring> FromPrimitive for Quaternion<T> {
    fn from_i64(n: i64) -> Option<Self> {
        T::from_i64(n).map(Quaternion::scalar)
    }
    fn from_u64(n: u64) -> Option<Self> {
        T::from_u64(n).map(Quaternion::scalar)
    }
}

impl<T: Galois> Galois for Quaternion<T> {
    fn galois(&self) -> Self {
        Quaternion {
            w: self.w.galois(),
            x: self.x.galois(),
            y: self.y.galois(),
            z: self.z.galois(),
        }
    }
}

impl<T: ToFloat> Quaternion<T> {
    pub fn to_f64(&self) -> [f64; 4] {
        [self.w.to_float(), self.x.to_float(), self.y.to_float(), self.z.to_float()]
    }
}

impl<T: fmt::Display> fmt::Display for Quaternion<T> {
    /// `w + x i + y j + z k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {} i + {} j + {} k", self.w, self.x, self.y, self.z)
    }
}

/// Quaternion with golden-field coefficients.
pub type Quat = Quaternion<Gold>;

/// The distinguished unit scalars.
///
/// `φ` is the unit quaternion `(i - σj - τk)/2`; the unnormalised
/// `i - σj - τk` has norm 2 and cannot satisfy `φ² = -1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarConstants {
    pub omega: Quat,
    pub phi: Quat,
    pub theta: Quat,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("scalar relation failed: {0}")]
    Relation(&'static str),
    #[error("scalar closure has {0} elements, expected 12")]
    ClosureSize(usize),
}

impl ScalarConstants {
    pub fn new() -> Self {
        let half = Gold::rational(1, 2);
        let omega = Quat::new(-half.clone(), half.clone(), half.clone(), half.clone());
        let phi = Quat::new(
            Gold::zero(),
            half.clone(),
            -(Gold::sigma() * &half),
            -(Gold::tau() * &half),
        );
        let theta = omega.clone() - omega.clone() * &omega;
        ScalarConstants { omega, phi, theta }
    }

    pub fn omega2(&self) -> Quat {
        self.omega.clone() * &self.omega
    }

    /// Every defining relation, by name, with its exact truth value.
    pub fn relations(&self) -> Vec<(&'static str, bool)> {
        let one = Quat::one();
        let m1 = -Quat::one();
        let om = &self.omega;
        let op = om.clone() * &self.phi;
        vec![
            ("phi^2 = -1", self.phi.clone() * &self.phi == m1),
            ("(omega phi)^2 = -1", op.clone() * &op == m1),
            ("omega + omega^2 = -1", om.clone() + self.omega2() == m1),
            ("omega^3 = 1", om.pow(3) == one),
            ("theta^2 = -3", self.theta.clone() * &self.theta == Quat::from_int(-3)),
            ("Re phi = 0", self.phi.is_pure()),
            ("Re theta = 0", self.theta.is_pure()),
            ("Re omega phi = 0", op.is_pure()),
        ]
    }

    pub fn validate(&self) -> Result<(), ScalarError> {
        match self.relations().into_iter().find(|(_, ok)| !ok) {
            Some((name, _)) => Err(ScalarError::Relation(name)),
            None => Ok(()),
        }
    }
}

impl Default for ScalarConstants {
    fn default() -> Self {
        Self::new()
    }
}

impl Quat {
    pub fn from_int(n: i64) -> Quat {
        Quat::scalar(Gold::from_int(n))
    }
}

/// Multiplicative closure of a set of quaternions, breadth first.
pub fn quat_closure(gens: &[Quat], cap: usize) -> Option<Vec<Quat>> {
    let mut out = vec![Quat::one()];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let p = out[i].clone() * g;
            if !out.contains(&p) {
                if out.len() >= cap {
                    return None;
                }
                out.push(p);
            }
        }
        i += 1;
    }
    Some(out)
}

/// The group generated by ω and φ, in breadth-first order.
pub fn scalar_group() -> Result<Vec<Quat>, ScalarError> {
    let c = ScalarConstants::new();
    c.validate()?;
    let els = quat_closure(&[c.omega.clone(), c.phi.clone()], 64).ok_or(ScalarError::ClosureSize(64))?;
    if els.len() != 12 {
        return Err(ScalarError::ClosureSize(els.len()));
    }
    Ok(els)
}

/// Multiplicative order of a unit quaternion (`None` past `cap`).
pub fn quat_order(q: &Quat, cap: u32) -> Option<u32> {
    let one = Quat::one();
    let mut p = q.clone();
    for n in 1..=cap {
        if p == one {
            return Some(n);
        }
        p = p * q;
    }
    None
}

/// Image of the scalar group in SO(3), i.e. modulo ±1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct So3Image {
    pub order: usize,
    pub abelian: bool,
    pub phi_image_order: u32,
}

pub fn so3_image() -> Result<So3Image, ScalarError> {
    let els = scalar_group()?;
    let mut classes: Vec<Quat> = Vec::new();
    for q in &els {
        if !classes.iter().any(|c| c == q || *c == -q.clone()) {
            classes.push(q.clone());
        }
    }
    let same_mod_sign = |a: &Quat, b: &Quat| a == b || *a == -b.clone();
    let abelian = classes.iter().all(|a| {
        classes
            .iter()
            .all(|b| same_mod_sign(&(a.clone() * b), &(b.clone() * a)))
    });
    let c = ScalarConstants::new();
    // order of φ modulo sign
    let mut p = c.phi.clone();
    let mut n = 1;
    while !same_mod_sign(&p, &Quat::one()) {
        p = p * &c.phi;
        n += 1;
    }
    Ok(So3Image { order: classes.len(), abelian, phi_image_order: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goldnum::rat;
    use proptest::prelude::*;

    #[test]
    fn basic_products() {
        assert_eq!(Quat::i() * Quat::j(), Quat::k());
        assert_eq!(Quat::j() * Quat::i(), -Quat::k());
        let c = ScalarConstants::new();
        assert_eq!(c.omega.pow(3), Quat::one());
        assert_eq!(c.phi.clone() * &c.phi, -Quat::one());
    }

    #[test]
    fn norms_and_conjugates() {
        assert_eq!((Quat::i() + Quat::j()).conj(), -Quat::i() - Quat::j());
        let c = ScalarConstants::new();
        assert_eq!(c.theta.norm2(), Gold::from_int(3));
        assert_eq!(c.phi.norm2(), Gold::one());
        assert_eq!(c.theta, Quat::i() + Quat::j() + Quat::k());
    }

    #[test]
    fn relation_suite() {
        let c = ScalarConstants::new();
        for (name, ok) in c.relations() {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn unnormalised_phi_fails_relations() {
        let c = ScalarConstants::new();
        let raw = c.phi.scale(&Gold::from_int(2));
        assert_eq!(raw.norm2(), Gold::from_int(4));
        assert_ne!(raw.clone() * &raw, -Quat::one());
    }

    #[test]
    fn scalar_group_shape() {
        let els = scalar_group().unwrap();
        assert_eq!(els.len(), 12);
        assert!(els.contains(&-Quat::one()));
        assert!(els.iter().all(|q| q.norm2() == Gold::one()));
        let order4 = els.iter().filter(|q| quat_order(q, 12) == Some(4)).count();
        assert_eq!(order4, 6);
    }

    #[test]
    fn so3_image_is_nonabelian_of_order_6() {
        let img = so3_image().unwrap();
        assert_eq!(img.order, 6);
        assert!(!img.abelian);
        assert_eq!(img.phi_image_order, 2);
    }

    #[test]
    fn text_and_json() {
        let q = Quat::new(Gold::one(), Gold::zero(), Gold::tau(), Gold::from_int(-2));
        assert_eq!(q.to_string(), "1 + 0 i + 1/2+1/2√5 j + -2 k");
        let v = serde_json::to_value(&q).unwrap();
        assert!(v.is_array() && v.as_array().unwrap().len() == 4);
        let back: Quat = serde_json::from_value(v).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn generic_over_f64() {
        let q = Quaternion::new(1.0f64, 2.0, 3.0, 4.0);
        assert_eq!(q.norm2(), 30.0);
        let p = q.inv().unwrap() * &q;
        assert!((p.w - 1.0).abs() < 1e-12 && p.x.abs() < 1e-12);
    }

    fn small_quat() -> impl Strategy<Value = Quat> {
        let c = (-6i64..6, -6i64..6);
        (c.clone(), c.clone(), c.clone(), c).prop_map(|(w, x, y, z)| {
            let gf = |(a, b): (i64, i64)| Gold::new(rat(a, 2), rat(b, 2));
            Quat::new(gf(w), gf(x), gf(y), gf(z))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn norm_is_multiplicative(p in small_quat(), q in small_quat()) {
            prop_assert_eq!((p.clone() * &q).norm2(), p.norm2() * q.norm2());
        }

        #[test]
        fn conj_reverses_products(p in small_quat(), q in small_quat()) {
            prop_assert_eq!((p.clone() * &q).conj(), q.conj() * p.conj());
        }

        #[test]
        fn norm_is_q_times_conj(q in small_quat()) {
            prop_assert_eq!(q.clone() * q.conj(), Quat::scalar(q.norm2()));
        }
    }
}
