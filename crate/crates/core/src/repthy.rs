//! Characters of O₁: the quaternion lift, the nine irreducible characters,
//! tensor decompositions, Frobenius–Schur indicators and hyperspin branching.
//!
//! Every character of this group is real with values in ℚ(√5), so all
//! arithmetic here is exact in [`Gold`].

use crate::goldnum::Gold;
use crate::groupkit::ConjugacyPartition;
use crate::icosian::O1;
use crate::quat::{Quat, ScalarConstants};
use crate::scalar::Galois;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("quaternion lift is not multiplicative at ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("character {0} has norm {1}, expected 1")]
    NotIrreducible(String, String),
    #[error("characters {0} and {1} are not orthogonal")]
    NotOrthogonal(String, String),
    #[error("multiplicity of {0} is {1}, not a non-negative integer")]
    BadMultiplicity(String, String),
    #[error("decomposition does not reconstruct the character")]
    Reconstruction,
    #[error("indicator {0} outside {{-1,0,1}}")]
    Indicator(String),
    #[error("unknown representation label {0:?}")]
    UnknownLabel(String),
}

/// Labels of the nine irreducibles, named by complex dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Irrep {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "2b")]
    TwoB,
    #[serde(rename = "3a")]
    ThreeA,
    #[serde(rename = "3b")]
    ThreeB,
    #[serde(rename = "4a")]
    FourA,
    #[serde(rename = "4b")]
    FourB,
    #[serde(rename = "5")]
    Five,
    #[serde(rename = "6")]
    Six,
}

impl Irrep {
    pub const ALL: [Irrep; 9] = [
        Irrep::One,
        Irrep::TwoA,
        Irrep::TwoB,
        Irrep::ThreeA,
        Irrep::ThreeB,
        Irrep::FourA,
        Irrep::FourB,
        Irrep::Five,
        Irrep::Six,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Irrep::One => "1",
            Irrep::TwoA => "2a",
            Irrep::TwoB => "2b",
            Irrep::ThreeA => "3a",
            Irrep::ThreeB => "3b",
            Irrep::FourA => "4a",
            Irrep::FourB => "4b",
            Irrep::Five => "5",
            Irrep::Six => "6",
        }
    }

    pub fn dim(self) -> u32 {
        match self {
            Irrep::One => 1,
            Irrep::TwoA | Irrep::TwoB => 2,
            Irrep::ThreeA | Irrep::ThreeB => 3,
            Irrep::FourA | Irrep::FourB => 4,
            Irrep::Five => 5,
            Irrep::Six => 6,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Irrep {
    type Err = RepError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        Irrep::ALL
            .into_iter()
            .find(|r| r.label().eq_ignore_ascii_case(t))
            .ok_or_else(|| RepError::UnknownLabel(s.to_string()))
    }
}

/// Parse a formal sum such as `"2a+2b"` into its terms.
pub fn parse_sum(s: &str) -> Result<Vec<Irrep>, RepError> {
    s.split('+').map(str::parse).collect()
}

/// A multiset of irreducible labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Decomposition(pub BTreeMap<Irrep, u32>);

impl Decomposition {
    pub fn from_labels(labels: &[Irrep]) -> Self {
        let mut m = BTreeMap::new();
        for &l in labels {
            *m.entry(l).or_insert(0) += 1;
        }
        Decomposition(m)
    }

    pub fn parse(s: &str) -> Result<Self, RepError> {
        Ok(Self::from_labels(&parse_sum(s)?))
    }

    pub fn dim(&self) -> u32 {
        self.0.iter().map(|(r, m)| r.dim() * m).sum()
    }

    pub fn multiplicity(&self, r: Irrep) -> u32 {
        self.0.get(&r).copied().unwrap_or(0)
    }

    /// Labels in canonical order, repeated by multiplicity.
    pub fn labels(&self) -> Vec<Irrep> {
        self.0
            .iter()
            .flat_map(|(&r, &m)| std::iter::repeat(r).take(m as usize))
            .collect()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<&str> = self.labels().into_iter().map(Irrep::label).collect();
        f.write_str(&parts.join("+"))
    }
}

/// Unit quaternion image of every element of O₁.
#[derive(Clone, Debug)]
pub struct QuatLift {
    pub images: Vec<Quat>,
}

/// Send `f ↦ i`, `g ↦ ω`, `h ↦ φ` and extend along stored words, then
/// check multiplicativity on every pair.
pub fn build_quat_lift(o1: &O1) -> Result<QuatLift, RepError> {
    let c = ScalarConstants::new();
    let gen_images = [Quat::i(), c.omega, c.phi];
    let g = &o1.group;
    let images: Vec<Quat> = (0..g.order())
        .map(|x| {
            g.word(x)
                .iter()
                .fold(Quat::one(), |acc, &k| acc * &gen_images[k])
        })
        .collect();
    for a in 0..g.order() {
        for b in 0..g.order() {
            if images[g.mul(a, b)] != images[a].clone() * &images[b] {
                return Err(RepError::NotHomomorphism(a, b));
            }
        }
    }
    Ok(QuatLift { images })
}

/// Conjugacy classes with the data character computations need.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub partition: ConjugacyPartition,
    pub sizes: Vec<usize>,
    pub representatives: Vec<usize>,
    pub element_orders: Vec<usize>,
    /// Class containing `x²` for `x` in each class.
    pub square_class: Vec<usize>,
    pub group_order: usize,
}

impl ClassData {
    pub fn new(o1: &O1) -> ClassData {
        let g = &o1.group;
        let partition = g.conjugacy_classes();
        let sizes = partition.sizes();
        let representatives: Vec<usize> = partition.classes.iter().map(|c| c[0]).collect();
        let element_orders = representatives.iter().map(|&r| g.element_order(r)).collect();
        let square_class = representatives
            .iter()
            .map(|&r| partition.class_of[g.mul(r, r)])
            .collect();
        ClassData {
            sizes,
            representatives,
            element_orders,
            square_class,
            group_order: g.order(),
            partition,
        }
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Class function from per-element values; callers guarantee constancy.
    pub fn restrict(&self, per_element: impl Fn(usize) -> Gold) -> CharVector {
        CharVector::new(self.representatives.iter().map(|&r| per_element(r)).collect())
    }
}

/// A class function, optionally labelled.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharVector {
    pub values: Vec<Gold>,
    pub label: Option<Irrep>,
}

impl CharVector {
    pub fn new(values: Vec<Gold>) -> Self {
        CharVector { values, label: None }
    }

    pub fn labelled(mut self, l: Irrep) -> Self {
        self.label = Some(l);
        self
    }

    /// Value on the identity class, which is listed first.
    pub fn degree(&self) -> &Gold {
        &self.values[0]
    }

    pub fn zero(n: usize) -> Self {
        CharVector::new(vec![Gold::zero(); n])
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = Gold::from_int(k);
        CharVector::new(self.values.iter().map(|v| v.clone() * &k).collect())
    }

    fn zip(&self, o: &Self, f: impl Fn(&Gold, &Gold) -> Gold) -> Self {
        assert_eq!(self.values.len(), o.values.len(), "class functions of different groups");
        CharVector::new(self.values.iter().zip(&o.values).map(|(a, b)| f(a, b)).collect())
    }
}

impl Galois for CharVector {
    fn galois(&self) -> Self {
        CharVector::new(self.values.iter().map(Galois::galois).collect())
    }
}

impl<'a> Add<&'a CharVector> for &'a CharVector {
    type Output = CharVector;
    fn add(self, o: &CharVector) -> CharVector {
        self.zip(o, |a, b| a.clone() + b)
    }
}

impl<'a> Sub<&'a CharVector> for &'a CharVector {
    type Output = CharVector;
    fn sub(self, o: &CharVector) -> CharVector {
        self.zip(o, |a, b| a.clone() - b)
    }
}

impl<'a> Mul<&'a CharVector> for &'a CharVector {
    type Output = CharVector;
    fn mul(self, o: &CharVector) -> CharVector {
        self.zip(o, |a, b| a.clone() * b)
    }
}

/// The nine irreducible characters over the conjugacy classes of O₁.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: ClassData,
    pub lift: QuatLift,
    pub chars: Vec<CharVector>,
    /// Generator word of each class representative.
    pub class_words: Vec<String>,
}

impl CharacterTable {
    pub fn build(o1: &O1) -> Result<CharacterTable, RepError> {
        let lift = build_quat_lift(o1)?;
        let classes = ClassData::new(o1);
        let one = classes.restrict(|_| Gold::one()).labelled(Irrep::One);
        let two = Gold::from_int(2);
        let c2a = classes
            .restrict(|x| lift.images[x].re().clone() * &two)
            .labelled(Irrep::TwoA);
        let c2b = c2a.galois().labelled(Irrep::TwoB);
        // trace of v ↦ q v q̄ on pure quaternions
        let c3a = classes
            .restrict(|x| {
                let re = lift.images[x].re().clone();
                re.clone() * &re * &Gold::from_int(4) - Gold::one()
            })
            .labelled(Irrep::ThreeA);
        let c3b = c3a.galois().labelled(Irrep::ThreeB);
        let c4b = classes
            .restrict(|x| o1.group.element(x).complex_char_trace())
            .labelled(Irrep::FourB);
        let c4a = (&c2a * &c2b).labelled(Irrep::FourA);
        let c6 = (&c2b * &c3a).labelled(Irrep::Six);
        let c5 = (&(&c2b * &c4b) - &c3b).labelled(Irrep::Five);
        let chars = vec![one, c2a, c2b, c3a, c3b, c4a, c4b, c5, c6];
        let class_words = classes.representatives.iter().map(|&r| o1.word_of(r)).collect();
        let table = CharacterTable { classes, lift, chars, class_words };
        table.check_orthonormal()?;
        Ok(table)
    }

    pub fn shared() -> &'static CharacterTable {
        static TABLE: OnceLock<CharacterTable> = OnceLock::new();
        TABLE.get_or_init(|| CharacterTable::build(O1::shared()).expect("character table"))
    }

    pub fn char(&self, r: Irrep) -> &CharVector {
        &self.chars[r.index()]
    }

    /// Character of a formal sum of irreducibles.
    pub fn sum(&self, terms: &[Irrep]) -> CharVector {
        terms
            .iter()
            .fold(CharVector::zero(self.classes.len()), |acc, &r| &acc + self.char(r))
    }

    /// `(1/|G|) Σ_C |C| χ(C) ψ(C)`.
    pub fn inner_product(&self, a: &CharVector, b: &CharVector) -> Gold {
        let total = self
            .classes
            .sizes
            .iter()
            .zip(a.values.iter().zip(&b.values))
            .fold(Gold::zero(), |acc, (&s, (x, y))| {
                acc + x.clone() * y * &Gold::from_int(s as i64)
            });
        total * &Gold::rational(1, self.classes.group_order as i64)
    }

    fn check_orthonormal(&self) -> Result<(), RepError> {
        for (i, a) in self.chars.iter().enumerate() {
            for (j, b) in self.chars.iter().enumerate() {
                let ip = self.inner_product(a, b);
                let name = |k: usize| Irrep::ALL[k].to_string();
                if i == j && !ip.is_one() {
                    return Err(RepError::NotIrreducible(name(i), ip.to_string()));
                }
                if i != j && !ip.is_zero() {
                    return Err(RepError::NotOrthogonal(name(i), name(j)));
                }
            }
        }
        Ok(())
    }

    /// Multiplicities by inner product, checked by reconstruction.
    pub fn decompose(&self, chi: &CharVector) -> Result<Decomposition, RepError> {
        let mut m = BTreeMap::new();
        for r in Irrep::ALL {
            let ip = self.inner_product(chi, self.char(r));
            let n = ip
                .as_integer()
                .filter(|n| *n >= 0)
                .ok_or_else(|| RepError::BadMultiplicity(r.to_string(), ip.to_string()))?;
            if n > 0 {
                m.insert(r, n as u32);
            }
        }
        let d = Decomposition(m);
        if self.sum(&d.labels()) != CharVector::new(chi.values.clone()) {
            return Err(RepError::Reconstruction);
        }
        Ok(d)
    }

    /// Decompose the tensor product of two formal sums.
    pub fn tensor(&self, a: &[Irrep], b: &[Irrep]) -> Result<Decomposition, RepError> {
        self.decompose(&(&self.sum(a) * &self.sum(b)))
    }

    /// `(1/|G|) Σ_x χ(x²)`.
    pub fn fs_indicator(&self, chi: &CharVector) -> Result<i64, RepError> {
        let c = &self.classes;
        let total = (0..c.len()).fold(Gold::zero(), |acc, k| {
            acc + chi.values[c.square_class[k]].clone() * &Gold::from_int(c.sizes[k] as i64)
        });
        let v = total * &Gold::rational(1, c.group_order as i64);
        v.as_integer()
            .filter(|n| (-1..=1).contains(n))
            .ok_or_else(|| RepError::Indicator(v.to_string()))
    }

    /// Restriction of the `SU(2)` representation of dimension `two_j + 1`.
    pub fn hyperspin_character(&self, two_j: usize) -> CharVector {
        let half = self.char(Irrep::TwoA);
        let mut prev = CharVector::zero(self.classes.len());
        let mut cur = self.char(Irrep::One).clone();
        for _ in 0..two_j {
            let next = &(half * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    pub fn hyperspin_table(&self, max_two_j: usize) -> Result<Vec<HyperspinRow>, RepError> {
        (0..=max_two_j)
            .map(|two_j| {
                let chi = self.hyperspin_character(two_j);
                Ok(HyperspinRow { two_j, dim: two_j + 1, decomposition: self.decompose(&chi)? })
            })
            .collect()
    }

    /// Which irreducible `galois ∘ χ` is, for each label.
    pub fn galois_action(&self) -> Vec<(Irrep, Option<Irrep>)> {
        Irrep::ALL
            .iter()
            .map(|&r| {
                let g = self.char(r).galois();
                let image = Irrep::ALL.into_iter().find(|&s| self.char(s).values == g.values);
                (r, image)
            })
            .collect()
    }

    /// `Σ_i χ_i(C) χ_i(C′) |C| = |G| δ`.
    pub fn column_orthogonality(&self) -> bool {
        let n = self.classes.len();
        let order = Gold::from_int(self.classes.group_order as i64);
        (0..n).all(|c| {
            (0..n).all(|d| {
                let s = self.chars.iter().fold(Gold::zero(), |acc, ch| {
                    acc + ch.values[c].clone() * &ch.values[d]
                }) * &Gold::from_int(self.classes.sizes[c] as i64);
                if c == d {
                    s == order
                } else {
                    s.is_zero()
                }
            })
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<serde_json::Value> = (0..self.classes.len())
            .map(|k| {
                serde_json::json!({
                    "size": self.classes.sizes[k],
                    "element_order": self.classes.element_orders[k],
                    "representative": self.class_words[k],
                })
            })
            .collect();
        let irreps: Vec<serde_json::Value> = self
            .chars
            .iter()
            .map(|c| serde_json::json!({ "label": c.label, "values": c.values }))
            .collect();
        serde_json::json!({ "classes": classes, "irreducibles": irreps })
    }

    /// Plain-text table with values approximated to four decimals.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let n = self.classes.len();
        out.push_str(&format!("{:>6}", "size"));
        for k in 0..n {
            out.push_str(&format!("{:>8}", self.classes.sizes[k]));
        }
        out.push('\n');
        out.push_str(&format!("{:>6}", "order"));
        for k in 0..n {
            out.push_str(&format!("{:>8}", self.classes.element_orders[k]));
        }
        out.push('\n');
        for c in &self.chars {
            let label = c.label.map(Irrep::label).unwrap_or("?");
            out.push_str(&format!("{label:>6}"));
            for v in &c.values {
                let s = match v.as_integer() {
                    Some(i) => i.to_string(),
                    None => format!("{:.4}", v.to_f64()),
                };
                out.push_str(&format!("{s:>8}"));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HyperspinRow {
    pub two_j: usize,
    pub dim: usize,
    pub decomposition: Decomposition,
}

impl HyperspinRow {
    /// `"3/2"`, `"2"`, …
    pub fn hyperspin(&self) -> String {
        if self.two_j % 2 == 0 {
            (self.two_j / 2).to_string()
        } else {
            format!("{}/2", self.two_j)
        }
    }
}

/// A claimed tensor-product decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct TensorIdentity {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub holds: bool,
}

const TENSOR_CLAIMS: [(&str, &str, &str); 12] = [
    ("2a", "2a", "1+3a"),
    ("2a", "2b", "4a"),
    ("2b", "2b", "1+3b"),
    ("2b", "3a", "6"),
    ("2b", "4b", "3b+5"),
    ("2b", "3b", "2b+4b"),
    ("4a", "4a", "1+3a+3b+4a+5"),
    ("4b", "4b", "1+3a+3b+4a+5"),
    ("2a+2b", "2a+2b", "1+4a+3a+3b+4a+1"),
    ("2a+2b", "4b", "5+3a+3b+5"),
    ("2a", "2a+2b", "1+3a+4a"),
    ("2a", "4b", "3a+5"),
];

fn bracket(s: &str) -> String {
    if s.contains('+') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// All tensor identities quoted for this group, evaluated exactly.
pub fn tensor_identities(t: &CharacterTable) -> Result<Vec<TensorIdentity>, RepError> {
    TENSOR_CLAIMS
        .iter()
        .map(|&(a, b, rhs)| {
            let expected = Decomposition::parse(rhs)?;
            let actual = t.tensor(&parse_sum(a)?, &parse_sum(b)?)?;
            Ok(TensorIdentity {
                name: format!("{} x {} = {}", bracket(a), bracket(b), rhs),
                expected: expected.to_string(),
                actual: actual.to_string(),
                holds: actual == expected,
            })
        })
        .collect()
}

/// The quoted hyperspin branching for `2j = 0..7`.
pub const HYPERSPIN_CLAIMS: [&str; 8] = ["1", "2a", "3a", "4b", "5", "6", "3b+4a", "2b+6"];

/// Dimension counts of the real and quaternionic group-algebra summands.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraDims {
    pub real_irreps: Vec<Irrep>,
    pub quaternionic_irreps: Vec<Irrep>,
    pub real_dim: u32,
    pub quaternionic_dim: u32,
}

pub fn algebra_dims(t: &CharacterTable) -> Result<AlgebraDims, RepError> {
    let mut real = Vec::new();
    let mut quat = Vec::new();
    for r in Irrep::ALL {
        match t.fs_indicator(t.char(r))? {
            1 => real.push(r),
            -1 => quat.push(r),
            _ => {}
        }
    }
    // M_d(R) has dimension d²; M_{d/2}(H) has real dimension 4(d/2)² = d².
    let real_dim = real.iter().map(|r| r.dim().pow(2)).sum();
    let quaternionic_dim = quat.iter().map(|r| r.dim().pow(2)).sum();
    Ok(AlgebraDims { real_irreps: real, quaternionic_irreps: quat, real_dim, quaternionic_dim })
}

/// Which of the two spin-type `SU(2)` copies sits on `2a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GaugeVariant {
    /// Spin on `2a`, weak `SU(2)` inside `Sp(2)` on `4b`.
    SpinOn2a,
    /// Weak `SU(2)` on `2a`, spin inside `Sp(2)` on `4b`.
    WeakOn2a,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaugeFactor {
    pub irrep: Irrep,
    pub full: &'static str,
    pub full_dim: u32,
    pub kept: &'static str,
    pub kept_dim: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaugeBookkeeping {
    pub variant: GaugeVariant,
    pub factors: Vec<GaugeFactor>,
    pub symplectic_dims: Vec<u32>,
    pub kept_dims: Vec<u32>,
    pub lost_dims: Vec<u32>,
    pub total: u32,
    pub kept: u32,
    pub lost: u32,
    /// Non-zero losses, each with its finer split.
    pub lost_split: Vec<(u32, Vec<u32>)>,
}

fn sp_dim(n: u32) -> u32 {
    n * (2 * n + 1)
}

impl GaugeBookkeeping {
    pub fn new(variant: GaugeVariant) -> Self {
        let (on_2a, on_4b) = match variant {
            GaugeVariant::SpinOn2a => ("SU(2) spin", "SU(2)_L"),
            GaugeVariant::WeakOn2a => ("SU(2)_L", "SU(2) spin"),
        };
        let factors = vec![
            GaugeFactor { irrep: Irrep::TwoA, full: "Sp(1)", full_dim: sp_dim(1), kept: on_2a, kept_dim: 3 },
            GaugeFactor { irrep: Irrep::TwoB, full: "Sp(1)", full_dim: sp_dim(1), kept: "U(1)", kept_dim: 1 },
            GaugeFactor { irrep: Irrep::FourB, full: "Sp(2)", full_dim: sp_dim(2), kept: on_4b, kept_dim: 3 },
            GaugeFactor { irrep: Irrep::Six, full: "Sp(3)", full_dim: sp_dim(3), kept: "SU(3)", kept_dim: 8 },
        ];
        let symplectic_dims: Vec<u32> = factors.iter().map(|f| f.full_dim).collect();
        let kept_dims: Vec<u32> = factors.iter().map(|f| f.kept_dim).collect();
        let lost_dims: Vec<u32> = factors.iter().map(|f| f.full_dim - f.kept_dim).collect();
        // Sp(2) → SU(2) loses U(1) and two triplets, Sp(3) → SU(3) loses U(1) and two sextets.
        let finer = |lost: u32| match lost {
            7 => vec![1, 3, 3],
            13 => vec![1, 6, 6],
            n => vec![n],
        };
        let lost_split = lost_dims.iter().filter(|&&l| l > 0).map(|&l| (l, finer(l))).collect();
        GaugeBookkeeping {
            variant,
            total: symplectic_dims.iter().sum(),
            kept: kept_dims.iter().sum(),
            lost: lost_dims.iter().sum(),
            factors,
            symplectic_dims,
            kept_dims,
            lost_dims,
            lost_split,
        }
    }

    pub fn consistent(&self) -> bool {
        self.kept + self.lost == self.total
            && self.lost_split.iter().all(|(l, s)| s.iter().sum::<u32>() == *l)
            && self.lost_split.iter().map(|(l, _)| l).sum::<u32>() == self.lost
    }

    /// `"2+(1+3+3)+(1+6+6)"`.
    pub fn split_string(&self) -> String {
        let parts: Vec<String> = self
            .lost_split
            .iter()
            .map(|(_, s)| {
                let inner: Vec<String> = s.iter().map(u32::to_string).collect();
                if s.len() > 1 {
                    format!("({})", inner.join("+"))
                } else {
                    inner.join("+")
                }
            })
            .collect();
        parts.join("+")
    }
}

/// Both allocations of the two `SU(2)` copies.
pub fn gauge_bookkeeping() -> [GaugeBookkeeping; 2] {
    [GaugeBookkeeping::new(GaugeVariant::SpinOn2a), GaugeBookkeeping::new(GaugeVariant::WeakOn2a)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> &'static CharacterTable {
        CharacterTable::shared()
    }

    fn irr(s: &str) -> Vec<Irrep> {
        parse_sum(s).unwrap()
    }

    #[test]
    fn lift_basics() {
        let o1 = O1::shared();
        let lift = &t().lift;
        let c = ScalarConstants::new();
        assert!(lift.images[o1.group.identity()].is_one());
        assert_eq!(lift.images[o1.minus_one()], -Quat::one());
        assert_eq!(lift.images[o1.f], Quat::i());
        assert_eq!(lift.images[o1.g], c.omega);
        assert_eq!(lift.images[o1.h], c.phi);
        assert!(lift.images.iter().all(|q| q.norm2().is_one()));
    }

    #[test]
    fn class_structure() {
        let c = &t().classes;
        assert_eq!(c.len(), 9);
        let mut sizes = c.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 12, 12, 12, 12, 20, 20, 30]);
        assert_eq!(c.sizes[0], 1);
    }

    #[test]
    fn dimensions() {
        let dims: Vec<Gold> = t().chars.iter().map(|c| c.degree().clone()).collect();
        let want: Vec<Gold> = [1, 2, 2, 3, 3, 4, 4, 5, 6].iter().map(|&d| Gold::from_int(d)).collect();
        assert_eq!(dims, want);
        let s: i64 = t().chars.iter().map(|c| c.degree().as_integer().unwrap().pow(2)).sum();
        assert_eq!(s, 120);
    }

    #[test]
    fn two_a_vanishes_on_order_four() {
        let c = &t().classes;
        let k = c.element_orders.iter().position(|&o| o == 4).unwrap();
        assert!(t().char(Irrep::TwoA).values[k].is_zero());
    }

    #[test]
    fn inner_products() {
        let t = t();
        assert!(t.inner_product(t.char(Irrep::One), t.char(Irrep::One)).is_one());
        assert!(t.inner_product(t.char(Irrep::TwoA), t.char(Irrep::TwoB)).is_zero());
        let sq = t.char(Irrep::TwoA) * t.char(Irrep::TwoA);
        assert!(t.inner_product(&sq, t.char(Irrep::ThreeA)).is_one());
        assert!(t.inner_product(t.char(Irrep::FourA), t.char(Irrep::FourA)).is_one());
    }

    #[test]
    fn decompositions() {
        let t = t();
        assert_eq!(t.tensor(&irr("4b"), &irr("4b")).unwrap().to_string(), "1+3a+3b+4a+5");
        assert_eq!(t.tensor(&irr("2a+2b"), &irr("2a+2b")).unwrap().to_string(), "1+1+3a+3b+4a+4a");
        assert_eq!(t.tensor(&irr("2a+2b"), &irr("4b")).unwrap().to_string(), "3a+3b+5+5");
        assert_eq!(t.tensor(&irr("2b"), &irr("4b")).unwrap().to_string(), "3b+5");
    }

    #[test]
    fn non_characters_rejected() {
        let t = t();
        let half = t.char(Irrep::TwoA).clone();
        let bad = &half - t.char(Irrep::One);
        assert!(matches!(t.decompose(&bad), Err(RepError::BadMultiplicity(..))));
        let v = t.char(Irrep::TwoA).values.iter().map(|x| x.clone() * &Gold::rational(1, 2)).collect();
        assert!(t.decompose(&CharVector::new(v)).is_err());
    }

    #[test]
    fn all_tensor_identities() {
        for id in tensor_identities(t()).unwrap() {
            assert!(id.holds, "{} gave {}", id.name, id.actual);
        }
    }

    #[test]
    fn all_products_decompose() {
        let t = t();
        for a in Irrep::ALL {
            for b in Irrep::ALL {
                let d = t.tensor(&[a], &[b]).unwrap();
                assert_eq!(d.dim(), a.dim() * b.dim());
            }
        }
    }

    #[test]
    fn indicators() {
        let t = t();
        for r in Irrep::ALL {
            let want = match r {
                Irrep::TwoA | Irrep::TwoB | Irrep::FourB | Irrep::Six => -1,
                _ => 1,
            };
            assert_eq!(t.fs_indicator(t.char(r)).unwrap(), want, "{r}");
        }
    }

    #[test]
    fn hyperspin() {
        let t = t();
        let rows = t.hyperspin_table(7).unwrap();
        for (row, claim) in rows.iter().zip(HYPERSPIN_CLAIMS) {
            assert_eq!(row.decomposition, Decomposition::parse(claim).unwrap(), "2j={}", row.two_j);
            assert_eq!(row.decomposition.dim() as usize, row.dim);
        }
        let covered: std::collections::BTreeSet<Irrep> =
            rows.iter().flat_map(|r| r.decomposition.labels()).collect();
        assert_eq!(covered.len(), 9);
        assert_eq!(rows[3].hyperspin(), "3/2");
        assert_eq!(rows[6].hyperspin(), "3");
        assert_eq!(t.hyperspin_character(0).values, t.char(Irrep::One).values);
    }

    #[test]
    fn galois_swaps_pairs() {
        for (r, img) in t().galois_action() {
            let want = match r {
                Irrep::TwoA => Irrep::TwoB,
                Irrep::TwoB => Irrep::TwoA,
                Irrep::ThreeA => Irrep::ThreeB,
                Irrep::ThreeB => Irrep::ThreeA,
                other => other,
            };
            assert_eq!(img, Some(want));
        }
    }

    #[test]
    fn columns_orthogonal() {
        assert!(t().column_orthogonality());
    }

    #[test]
    fn algebra_dimensions() {
        let d = algebra_dims(t()).unwrap();
        assert_eq!(d.real_dim, 60);
        assert_eq!(d.quaternionic_dim, 60);
        assert_eq!(d.real_irreps, irr("1+3a+3b+4a+5"));
        assert_eq!(d.quaternionic_irreps, irr("2a+2b+4b+6"));
    }

    #[test]
    fn gauge() {
        for b in gauge_bookkeeping() {
            assert_eq!(b.symplectic_dims, vec![3, 3, 10, 21]);
            assert_eq!(b.kept_dims, vec![3, 1, 3, 8]);
            assert_eq!(b.lost_dims, vec![0, 2, 7, 13]);
            assert_eq!((b.total, b.kept, b.lost), (37, 15, 22));
            assert_eq!(b.split_string(), "2+(1+3+3)+(1+6+6)");
            assert!(b.consistent());
        }
    }

    #[test]
    fn json_export() {
        let j = t().to_json();
        assert_eq!(j["classes"].as_array().unwrap().len(), 9);
        assert_eq!(j["irreducibles"][1]["label"], "2a");
        assert_eq!(j["classes"][0]["representative"], "1");
    }

    #[test]
    fn labels_round_trip() {
        for r in Irrep::ALL {
            assert_eq!(r.label().parse::<Irrep>().unwrap(), r);
        }
        assert!("7".parse::<Irrep>().is_err());
        assert_eq!(Decomposition::parse("5+1+1").unwrap().to_string(), "1+1+5");
    }
}
