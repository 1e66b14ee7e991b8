//! Exact arithmetic in the golden field ℚ(√5).
//!
//! A value is stored as `a + b√5` with both components in a base field
//! (arbitrary-precision rationals for [`Gold`]). Components are kept in
//! canonical form by the base field itself, so structural equality is
//! field equality and values can be used directly as hash keys.

use crate::scalar::{Field, Galois, Ring, ToFloat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rat = BigRational;

/// `√5` to double precision.
pub const SQRT5_F64: f64 = 2.236_067_977_499_79;

/// Element `a + b√5` of the quadratic extension of `T` by `√5`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoldNum<T> {
    pub a: T,
    pub b: T,
}

/// Build a [`Rat`] from a numerator and denominator.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

impl<T> GoldNum<T> {
    pub const fn new(a: T, b: T) -> Self {
        GoldNum { a, b }
    }
}

impl<T: Ring> GoldNum<T> {
    pub fn from_base(a: T) -> Self {
        GoldNum { a, b: T::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_base(T::from_int(n))
    }

    /// `√5`.
    pub fn sqrt5() -> Self {
        GoldNum { a: T::zero(), b: T::one() }
    }

    /// True when the `√5` component vanishes.
    pub fn is_base(&self) -> bool {
        self.b.is_zero()
    }

    /// Field norm `a² - 5b²`, the product of a value with its conjugate.
    pub fn norm(&self) -> T {
        self.a.clone() * &self.a - T::from_int(5) * self.b.clone() * &self.b
    }
}

impl<T: Field> GoldNum<T> {
    /// Golden ratio τ = (1+√5)/2.
    pub fn tau() -> Self {
        let half = T::from_int(2).try_inv().expect("2 is invertible");
        GoldNum { a: half.clone(), b: half }
    }

    /// Its conjugate σ = (1-√5)/2.
    pub fn sigma() -> Self {
        Self::tau().galois()
    }

    /// Division by a base-field scalar.
    pub fn div_base(&self, d: &T) -> Option<Self> {
        let inv = d.try_inv()?;
        Some(GoldNum {
            a: self.a.clone() * &inv,
            b: self.b.clone() * &inv,
        })
    }
}

impl<T: Ring> Zero for GoldNum<T> {
    fn zero() -> Self {
        GoldNum { a: T::zero(), b: T::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Ring> One for GoldNum<T> {
    fn one() -> Self {
        GoldNum { a: T::one(), b: T::zero() }
    }
}

impl<T: Ring> FromPrimitive for GoldNum<T> {
    fn from_i64(n: i64) -> Option<Self> {
        T::from_i64(n).map(Self::from_base)
    }
    fn from_u64(n: u64) -> Option<Self> {
        T::from_u64(n).map(Self::from_base)
    }
}

impl<T: Ring> Neg for GoldNum<T> {
    type Output = Self;
    fn neg(self) -> Self {
        GoldNum { a: -self.a, b: -self.b }
    }
}

impl<T: Ring> Add for GoldNum<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GoldNum { a: self.a + o.a, b: self.b + o.b }
    }
}

impl<'a, T: Ring> Add<&'a GoldNum<T>> for GoldNum<T> {
    type Output = Self;
    fn add(self, o: &'a Self) -> Self {
        GoldNum { a: self.a + &o.a, b: self.b + &o.b }
    }
}

impl<T: Ring> Sub for GoldNum<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GoldNum { a: self.a - o.a, b: self.b - o.b }
    }
}

impl<'a, T: Ring> Sub<&'a GoldNum<T>> for GoldNum<T> {
    type Output = Self;
    fn sub(self, o: &'a Self) -> Self {
        GoldNum { a: self.a - &o.a, b: self.b - &o.b }
    }
}

impl<'a, T: Ring> Mul<&'a GoldNum<T>> for GoldNum<T> {
    type Output = Self;
    // (a+b√5)(c+d√5) = (ac+5bd) + (ad+bc)√5
    fn mul(self, o: &'a Self) -> Self {
        if self.b.is_zero() && o.b.is_zero() {
            return GoldNum { a: self.a * &o.a, b: T::zero() };
        }
        let bd = self.b.clone() * &o.b;
        let a = self.a.clone() * &o.a + T::from_int(5) * bd;
        let b = self.a * &o.b + self.b * &o.a;
        GoldNum { a, b }
    }
}

impl<T: Ring> Mul for GoldNum<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self * &o
    }
}

impl<T: Ring> Ring for GoldNum<T> {}

impl<T: Field> Field for GoldNum<T> {
    // 1/(a+b√5) = (a-b√5)/(a²-5b²); √5 is irrational so the norm only
    // vanishes at zero.
    fn try_inv(&self) -> Option<Self> {
        let n = self.norm();
        let inv = n.try_inv()?;
        Some(GoldNum {
            a: self.a.clone() * &inv,
            b: -(self.b.clone() * &inv),
        })
    }
}

impl<T: Ring> Galois for GoldNum<T> {
    fn galois(&self) -> Self {
        GoldNum { a: self.a.clone(), b: -self.b.clone() }
    }
}

impl<T: ToFloat> ToFloat for GoldNum<T> {
    /// Approximate: `a + b·2.2360679…` in double precision.
    fn to_float(&self) -> f64 {
        self.a.to_float() + self.b.to_float() * SQRT5_F64
    }
}

/// An exact golden-field number with arbitrary-precision rational parts.
pub type Gold = GoldNum<Rat>;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GoldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse golden-field number from {0:?}")]
    Parse(String),
}

impl Gold {
    pub fn rational(num: i64, den: i64) -> Gold {
        Gold::from_base(rat(num, den))
    }

    pub fn from_ratios(a: (i64, i64), b: (i64, i64)) -> Gold {
        Gold::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    /// Exact inverse, failing on zero.
    pub fn inv(&self) -> Result<Gold, GoldError> {
        self.try_inv().ok_or(GoldError::DivisionByZero)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_float()
    }

    /// The value as a rational when the `√5` part is zero.
    pub fn as_rational(&self) -> Option<&Rat> {
        self.b.is_zero().then_some(&self.a)
    }

    /// The value as an integer when it is a rational integer.
    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .and_then(|r| r.to_integer().to_i64())
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            (!d.is_zero()).then(|| Rat::new(n, d))
        }
        None => BigInt::from_str(s).ok().map(Rat::from_integer),
    }
}

impl fmt::Display for Gold {
    /// `a+b√5`, dropping a zero part; rationals print as `p/q` or `p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.a)),
            (true, false) => write!(f, "{}√5", fmt_rat(&self.b)),
            (false, false) => {
                if self.b < Rat::zero() {
                    write!(f, "{}-{}√5", fmt_rat(&self.a), fmt_rat(&-self.b.clone()))
                } else {
                    write!(f, "{}+{}√5", fmt_rat(&self.a), fmt_rat(&self.b))
                }
            }
        }
    }
}

impl FromStr for Gold {
    type Err = GoldError;

    /// Inverse of the `Display` form.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GoldError::Parse(s.to_string());
        let t = s.trim();
        let Some(body) = t.strip_suffix("√5") else {
            return parse_rat(t).map(Gold::from_base).ok_or_else(err);
        };
        // split at the last sign that is not in leading position
        let split = body
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .last();
        match split {
            None if body.is_empty() => Ok(Gold::sqrt5()),
            None => Ok(Gold::new(Rat::zero(), parse_rat(body).ok_or_else(err)?)),
            Some(i) => {
                let a = parse_rat(&body[..i]).ok_or_else(err)?;
                let sign = &body[i..i + 1];
                let b = parse_rat(&body[i + 1..]).ok_or_else(err)?;
                let b = if sign == "-" { -b } else { b };
                Ok(Gold::new(a, b))
            }
        }
    }
}

/// JSON form `{"a":[num,den],"b":[num,den]}`.
#[derive(Serialize, Deserialize)]
struct GoldJson {
    a: [serde_json::Value; 2],
    b: [serde_json::Value; 2],
}

fn int_to_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

fn int_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => BigInt::from_str(s).ok(),
        _ => None,
    }
}

fn rat_to_json(r: &Rat) -> [serde_json::Value; 2] {
    [int_to_json(r.numer()), int_to_json(r.denom())]
}

fn rat_from_json(v: &[serde_json::Value; 2]) -> Option<Rat> {
    let n = int_from_json(&v[0])?;
    let d = int_from_json(&v[1])?;
    (!d.is_zero()).then(|| Rat::new(n, d))
}

impl Serialize for Gold {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GoldJson { a: rat_to_json(&self.a), b: rat_to_json(&self.b) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gold {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GoldJson::deserialize(d)?;
        let a = rat_from_json(&raw.a).ok_or_else(|| serde::de::Error::custom("bad rational"))?;
        let b = rat_from_json(&raw.b).ok_or_else(|| serde::de::Error::custom("bad rational"))?;
        Ok(Gold::new(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: (i64, i64), b: (i64, i64)) -> Gold {
        Gold::from_ratios(a, b)
    }

    #[test]
    fn tau_sigma_identities() {
        let tau = Gold::tau();
        let sigma = Gold::sigma();
        assert_eq!(tau.clone() * &sigma, Gold::from_int(-1));
        assert_eq!(tau.clone() + sigma, Gold::one());
        assert_eq!(tau.clone() * &tau, tau + Gold::one());
        assert_eq!(Gold::sqrt5() * Gold::sqrt5(), Gold::from_int(5));
    }

    #[test]
    fn inverses() {
        assert_eq!(Gold::sqrt5().inv().unwrap(), g((0, 1), (1, 5)));
        assert_eq!(Gold::tau().inv().unwrap(), Gold::tau() - Gold::one());
        assert_eq!(Gold::rational(3, 1).inv().unwrap(), Gold::rational(1, 3));
        assert_eq!(Gold::zero().inv(), Err(GoldError::DivisionByZero));
    }

    #[test]
    fn galois_examples() {
        assert_eq!(Gold::tau().galois(), Gold::sigma());
        let x = g((3, 7), (-2, 5));
        assert_eq!(x.galois().galois(), x);
        let (t, r) = (Gold::tau(), Gold::sqrt5());
        assert_eq!((t.clone() * &r).galois(), t.galois() * r.galois());
    }

    #[test]
    fn floats() {
        assert!((Gold::tau().to_f64() - 1.618_033_988_749_895).abs() < 1e-12);
        assert_eq!(Gold::zero().to_f64(), 0.0);
        assert!((g((-1, 1), (1, 1)).to_f64() - 1.236_067_977_499_79).abs() < 1e-12);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Gold::tau().to_string(), "1/2+1/2√5");
        assert_eq!(Gold::sigma().to_string(), "1/2-1/2√5");
        assert_eq!(Gold::sqrt5().to_string(), "1√5");
        assert_eq!("√5".parse::<Gold>().unwrap(), Gold::sqrt5());
        assert_eq!(Gold::from_int(-3).to_string(), "-3");
        assert_eq!(g((0, 1), (-1, 3)).to_string(), "-1/3√5");
        for s in ["1/2+1/2√5", "1/2-1/2√5", "1√5", "-3", "-1/3√5", "-7/2-5√5", "0"] {
            let parsed: Gold = s.parse().unwrap();
            assert_eq!(parsed.to_string(), s);
        }
        assert!("1/0".parse::<Gold>().is_err());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(Gold::tau()).unwrap();
        assert_eq!(v, serde_json::json!({"a": [1, 2], "b": [1, 2]}));
        let back: Gold = serde_json::from_value(v).unwrap();
        assert_eq!(back, Gold::tau());
    }

    fn small_gold() -> impl Strategy<Value = Gold> {
        (-20i64..20, 1i64..7, -20i64..20, 1i64..7)
            .prop_map(|(an, ad, bn, bd)| g((an, ad), (bn, bd)))
    }

    proptest! {
        #[test]
        fn field_axioms(x in small_gold(), y in small_gold(), z in small_gold()) {
            prop_assert_eq!((x.clone() * &y) * &z, x.clone() * (y.clone() * &z));
            prop_assert_eq!(x.clone() * &y, y.clone() * &x);
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * &y + x.clone() * &z);
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * x.inv().unwrap(), Gold::one());
            }
        }

        #[test]
        fn galois_is_ring_homomorphism(x in small_gold(), y in small_gold()) {
            prop_assert_eq!((x.clone() * &y).galois(), x.galois() * y.galois());
            prop_assert_eq!((x.clone() + y.clone()).galois(), x.galois() + y.galois());
        }

        #[test]
        fn no_zero_divisors(x in small_gold()) {
            prop_assert_eq!(x.norm().is_zero(), x.is_zero());
        }

        #[test]
        fn text_round_trip(x in small_gold()) {
            let parsed: Gold = x.to_string().parse().unwrap();
            prop_assert_eq!(parsed, x);
        }
    }
}
