//! Finite groups given by generators, over any element type with exact
//! equality and hashing.
//!
//! A [`FiniteGroup`] is built once by breadth-first closure. After that
//! every query runs on element indices through a precomputed Cayley table,
//! so the (possibly expensive) element multiplication is only paid
//! `|G| · |generators|` times.

use crate::qmat2::Mat2;
use crate::quat::Quaternion;
use crate::scalar::Ring;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::Hash;

/// Default bound on closure size.
pub const DEFAULT_CAP: usize = 10_000;

/// Elements of a multiplicative group.
pub trait GroupElement: Clone + Eq + Hash {
    fn identity() -> Self;
    fn compose(&self, other: &Self) -> Self;
}

impl<T: Ring + Eq + Hash> GroupElement for Mat2<T> {
    fn identity() -> Self {
        Mat2::identity()
    }
    fn compose(&self, other: &Self) -> Self {
        self.clone() * other
    }
}

impl<T: Ring + Eq + Hash> GroupElement for Quaternion<T> {
    fn identity() -> Self {
        num_traits::One::one()
    }
    fn compose(&self, other: &Self) -> Self {
        self.clone() * other
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("element is not in the group")]
    NotAnElement,
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("conjugation does not permute the given items")]
    ActionNotWellDefined,
}

/// A finite group with a fixed breadth-first element order.
#[derive(Clone, Debug)]
pub struct FiniteGroup<E> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    generators: Vec<usize>,
    /// For each element, one word in the generators (positions into
    /// `generators`) evaluating to it.
    words: Vec<Vec<usize>>,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl<E: GroupElement> FiniteGroup<E> {
    /// Smallest set containing the identity and `generators`, closed under
    /// multiplication. Element 0 is the identity; the rest appear in
    /// breadth-first order with generators tried in the given order.
    pub fn closure(generators: &[E], cap: usize) -> Result<Self, GroupError> {
        let id = E::identity();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        // right[x * ngen + k] = x · generator_k
        let mut right: Vec<usize> = Vec::new();
        let mut i = 0;
        while i < elements.len() {
            for (k, g) in generators.iter().enumerate() {
                let p = elements[i].compose(g);
                let j = match index.get(&p) {
                    Some(&j) => j,
                    None => {
                        if elements.len() >= cap {
                            return Err(GroupError::CapExceeded(cap));
                        }
                        let j = elements.len();
                        let mut w = words[i].clone();
                        w.push(k);
                        words.push(w);
                        index.insert(p.clone(), j);
                        elements.push(p);
                        j
                    }
                };
                right.push(j);
            }
            i += 1;
        }
        let gen_idx = generators.iter().map(|g| index[g]).collect();
        Ok(Self::from_parts(elements, index, gen_idx, words, &right, generators.len()))
    }

    fn from_parts(
        elements: Vec<E>,
        index: HashMap<E, usize>,
        generators: Vec<usize>,
        words: Vec<Vec<usize>>,
        right: &[usize],
        ngen: usize,
    ) -> Self {
        let n = elements.len();
        let mut table = vec![usize::MAX; n * n];
        for x in 0..n {
            table[x * n] = x;
        }
        // x · (y' g) = (x · y') · g, filling columns in BFS order of y
        let mut parent = vec![(0usize, 0usize); n];
        for y in 1..n {
            let w = &words[y];
            let k = *w.last().expect("non-identity has non-empty word");
            let prefix = &w[..w.len() - 1];
            let mut p = 0;
            for &gk in prefix {
                p = right[p * ngen + gk];
            }
            parent[y] = (p, k);
        }
        for y in 1..n {
            let (p, k) = parent[y];
            for x in 0..n {
                let xp = table[x * n + p];
                table[x * n + y] = right[xp * ngen + k];
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            if inverse[x] != usize::MAX {
                continue;
            }
            for y in 0..n {
                if table[x * n + y] == 0 {
                    inverse[x] = y;
                    inverse[y] = x;
                    break;
                }
            }
        }
        FiniteGroup { elements, index, generators, words, table, inverse }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn try_index_of(&self, e: &E) -> Result<usize, GroupError> {
        self.index_of(e).ok_or(GroupError::NotAnElement)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// A generator word for element `i`, as positions into [`Self::generators`].
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Product of a sequence of elements, left to right.
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn pow(&self, a: usize, n: usize) -> usize {
        (0..n).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `x^y = y⁻¹ x y`.
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut p = a;
        let mut n = 1;
        while p != 0 {
            p = self.mul(p, a);
            n += 1;
        }
        n
    }

    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for a in 0..self.order() {
            *h.entry(self.element_order(a)).or_insert(0) += 1;
        }
        h
    }

    /// Indices of all elements of the given order.
    pub fn elements_of_order(&self, n: usize) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.element_order(a) == n).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn closure_indices(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let p = self.mul(x, g);
                if !seen[p] {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
        (0..n).filter(|&i| seen[i]).collect()
    }

    /// True when `members` (sorted or not) is closed under products.
    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        let n = self.order();
        let mut m = vec![false; n];
        for &x in members {
            if x >= n {
                return false;
            }
            m[x] = true;
        }
        m[0] && members.iter().all(|&a| members.iter().all(|&b| m[self.mul(a, b)]))
    }

    /// The subgroup generated by the given elements, as a group in its own
    /// right together with its embedding.
    pub fn subgroup(&self, gens: &[usize]) -> Subgroup<E> {
        let gen_els: Vec<E> = gens.iter().map(|&g| self.elements[g].clone()).collect();
        let group = FiniteGroup::closure(&gen_els, self.order())
            .expect("subgroup of a finite group is no larger than it");
        let embedding = group
            .elements
            .iter()
            .map(|e| self.index[e])
            .collect::<Vec<_>>();
        let mut members = vec![false; self.order()];
        for &p in &embedding {
            members[p] = true;
        }
        Subgroup { group, embedding, members }
    }

    pub fn conjugacy_classes(&self) -> ConjugacyPartition {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = Vec::new();
            for y in 0..n {
                let z = self.conj(x, y);
                if class_of[z] == usize::MAX {
                    class_of[z] = c;
                    members.push(z);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        ConjugacyPartition { classes, class_of }
    }

    /// `H` is maximal in `G` when it is proper and adjoining any outside
    /// element generates all of `G`.
    pub fn is_maximal(&self, h: &[usize]) -> Result<bool, GroupError> {
        if !self.is_subgroup(h) {
            return Err(GroupError::NotSubgroup);
        }
        let n = self.order();
        let mut inside = vec![false; n];
        for &x in h {
            inside[x] = true;
        }
        if h.len() == n {
            return Ok(false);
        }
        for x in (0..n).filter(|&x| !inside[x]) {
            let mut gens = h.to_vec();
            gens.push(x);
            if self.closure_indices(&gens).len() != n {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Partition `items` (sets of element indices) into orbits of `acting`
    /// under conjugation `S ↦ y⁻¹ S y`. Orbits are lists of positions into
    /// `items`, ordered by first appearance.
    pub fn conjugation_orbits(
        &self,
        acting: &[usize],
        items: &[Vec<usize>],
    ) -> Result<Vec<Vec<usize>>, GroupError> {
        let norm = |s: &[usize]| {
            let mut v = s.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        };
        let lookup: HashMap<Vec<usize>, usize> =
            items.iter().enumerate().map(|(i, s)| (norm(s), i)).collect();
        let mut orbit_of = vec![usize::MAX; items.len()];
        let mut orbits = Vec::new();
        for start in 0..items.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let o = orbits.len();
            let mut orbit = vec![start];
            orbit_of[start] = o;
            let mut k = 0;
            while k < orbit.len() {
                let cur = &items[orbit[k]];
                for &y in acting {
                    let img: Vec<usize> = norm(&cur.iter().map(|&x| self.conj(x, y)).collect::<Vec<_>>());
                    let j = *lookup.get(&img).ok_or(GroupError::ActionNotWellDefined)?;
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = o;
                        orbit.push(j);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        Ok(orbits)
    }

    /// Does `y` normalise the subgroup with the given members?
    pub fn normalises(&self, y: usize, members: &[usize]) -> bool {
        let mut set = members.to_vec();
        set.sort_unstable();
        let mut img: Vec<usize> = members.iter().map(|&x| self.conj(x, y)).collect();
        img.sort_unstable();
        img == set
    }
}

/// A subgroup, kept both as a standalone group and as a set of indices in
/// its parent.
#[derive(Clone, Debug)]
pub struct Subgroup<E> {
    pub group: FiniteGroup<E>,
    /// `embedding[i]` is the parent index of subgroup element `i`.
    pub embedding: Vec<usize>,
    members: Vec<bool>,
}

impl<E: GroupElement> Subgroup<E> {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn contains(&self, parent_index: usize) -> bool {
        self.members.get(parent_index).copied().unwrap_or(false)
    }

    /// Parent indices, sorted.
    pub fn members(&self) -> Vec<usize> {
        let mut v = self.embedding.clone();
        v.sort_unstable();
        v
    }
}

/// Conjugacy classes in order of their smallest element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyPartition {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ConjugacyPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Quaternion<Ratio<i64>>;

    fn q8() -> FiniteGroup<Q> {
        FiniteGroup::closure(&[Q::i(), Q::j()], DEFAULT_CAP).unwrap()
    }

    #[test]
    fn quaternion_group_basics() {
        let g = q8();
        assert_eq!(g.order(), 8);
        let hist = g.order_histogram();
        assert_eq!(hist, BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert!(!g.is_abelian());
        let cc = g.conjugacy_classes();
        let mut sizes = cc.sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!(cc.classes[cc.class_of[0]], vec![0]);
    }

    #[test]
    fn trivial_closure() {
        let g = FiniteGroup::closure(&[Q::one_q()], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let two = Q::scalar(Ratio::from_integer(2));
        assert_eq!(FiniteGroup::closure(&[two], 50).unwrap_err(), GroupError::CapExceeded(50));
    }

    #[test]
    fn table_matches_real_products() {
        let g = q8();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let p = g.element(a).compose(g.element(b));
                assert_eq!(g.index_of(&p), Some(g.mul(a, b)));
            }
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn words_evaluate_to_elements() {
        let g = q8();
        let gens = [Q::i(), Q::j()];
        for a in 0..g.order() {
            let v = g.word(a).iter().fold(Q::one_q(), |acc, &k| acc.compose(&gens[k]));
            assert_eq!(&v, g.element(a));
        }
    }

    #[test]
    fn maximality_and_orbits() {
        let g = q8();
        let i = g.index_of(&Q::i()).unwrap();
        let ci = g.closure_indices(&[i]);
        assert_eq!(ci.len(), 4);
        assert_eq!(g.is_maximal(&ci), Ok(true));
        let all: Vec<usize> = (0..8).collect();
        assert_eq!(g.is_maximal(&all), Ok(false));
        let center = g.closure_indices(&[g.index_of(&-Q::one_q()).unwrap()]);
        assert_eq!(g.is_maximal(&center), Ok(false));
        assert_eq!(g.is_maximal(&[0, i]), Err(GroupError::NotSubgroup));

        // trivial group acting: all singletons
        let items: Vec<Vec<usize>> = (0..8).map(|x| vec![x]).collect();
        let orbits = g.conjugation_orbits(&[0], &items).unwrap();
        assert_eq!(orbits.len(), 8);
        // whole group on elements: conjugacy classes
        let orbits = g.conjugation_orbits(&all, &items).unwrap();
        assert_eq!(orbits.len(), 5);
        // not a stable item set
        let bad = vec![vec![i]];
        assert_eq!(g.conjugation_orbits(&all, &bad), Err(GroupError::ActionNotWellDefined));
    }

    #[test]
    fn subgroup_embedding() {
        let g = q8();
        let i = g.index_of(&Q::i()).unwrap();
        let h = g.subgroup(&[i]);
        assert_eq!(h.order(), 4);
        assert!(h.contains(i));
        assert_eq!(h.members(), g.closure_indices(&[i]));
        for (k, &p) in h.embedding.iter().enumerate() {
            assert_eq!(h.group.element(k), g.element(p));
        }
    }

    impl Q {
        fn one_q() -> Q {
            <Q as GroupElement>::identity()
        }
    }
}
