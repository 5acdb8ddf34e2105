use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

const WORD: usize = 64;

/// A set of vertices stored as a bitset.
///
/// Sets over at most 128 vertices live inline without allocation. The word
/// vector never ends in a zero word, so two sets are equal exactly when their
/// words are equal. Ordering is lexicographic on the ascending element lists,
/// which is the order used everywhere for q-sets.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: u32) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 2]> = SmallVec::from_elem(u64::MAX, n / WORD);
        if n % WORD != 0 {
            words.push((1u64 << (n % WORD)) - 1);
        }
        let mut s = Self { words };
        s.trim();
        s
    }

    pub fn from_slice(items: &[u32]) -> Self {
        items.iter().copied().collect()
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: u32) -> bool {
        let (w, b) = (v as usize / WORD, v as usize % WORD);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: u32) -> bool {
        let (w, b) = (v as usize / WORD, v as usize % WORD);
        if w >= self.words.len() {
            return false;
        }
        let had = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        had
    }

    #[inline]
    pub fn contains(&self, v: u32) -> bool {
        let (w, b) = (v as usize / WORD, v as usize % WORD);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// One past the largest element, or 0 for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(&w) => (self.words.len() - 1) * WORD + (WORD - w.leading_zeros() as usize),
        }
    }

    pub fn first(&self) -> Option<u32> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let k = self.words.len().min(other.words.len());
        let mut s = Self { words: (0..k).map(|i| self.words[i] & other.words[i]).collect() };
        s.trim();
        s
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.words.truncate(other.words.len());
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
        self.trim();
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn union_with(&mut self, other: &Self) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
        self.trim();
    }

    /// Elements of `{0..n-1}` not in the set.
    pub fn complement(&self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Applies `f` to every element, producing a new set.
    pub fn map(&self, f: impl Fn(u32) -> u32) -> Self {
        self.iter().map(f).collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<u32> for VertexSet {
    fn extend<I: IntoIterator<Item = u32>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = u32;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some((self.index * WORD + bit) as u32);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<u32>::deserialize(deserializer)?;
        Ok(items.into_iter().collect())
    }
}

/// Builds a `VertexSet` from a list of vertices.
#[macro_export]
macro_rules! vset {
    () => { $crate::VertexSet::new() };
    ($($v:expr),+ $(,)?) => { $crate::VertexSet::from_slice(&[$($v as u32),+]) };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn basic_operations() {
        let mut s = vset![3, 1, 200];
        assert_eq!(s.to_vec(), vec![1, 3, 200]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(200));
        assert!(s.remove(200));
        assert_eq!(s.bound(), 4);
        assert_eq!(s, vset![1, 3]);
        assert_eq!(VertexSet::full(3), vset![0, 1, 2]);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(vset![0, 1].complement(4), vset![2, 3]);
    }

    #[test]
    fn order_is_lexicographic() {
        assert!(vset![0, 5] < vset![1, 2]);
        assert!(vset![1] < vset![1, 2]);
        assert!(vset![1, 2, 3] < vset![1, 3]);
    }

    fn small_set() -> impl Strategy<Value = BTreeSet<u32>> {
        proptest::collection::btree_set(0u32..150, 0..12)
    }

    proptest! {
        #[test]
        fn agrees_with_btreeset(a in small_set(), b in small_set()) {
            let x: VertexSet = a.iter().copied().collect();
            let y: VertexSet = b.iter().copied().collect();
            let inter: Vec<u32> = a.intersection(&b).copied().collect();
            let uni: Vec<u32> = a.union(&b).copied().collect();
            let diff: Vec<u32> = a.difference(&b).copied().collect();
            prop_assert_eq!(x.intersection(&y).to_vec(), inter.clone());
            prop_assert_eq!(x.union(&y).to_vec(), uni);
            prop_assert_eq!(x.difference(&y).to_vec(), diff);
            prop_assert_eq!(x.intersection_len(&y), inter.len());
            prop_assert_eq!(x.is_subset(&y), a.is_subset(&b));
            prop_assert_eq!(x.is_disjoint(&y), a.is_disjoint(&b));
            let av: Vec<u32> = a.iter().copied().collect();
            let bv: Vec<u32> = b.iter().copied().collect();
            prop_assert_eq!(x.cmp(&y), av.cmp(&bv));
            prop_assert_eq!(x == y, a == b);
        }
    }
}
