//! Fixed-universe vertex bitsets.
//!
//! Graphs up to 128 vertices keep their sets inline; larger universes spill
//! to the heap. All binary operations assume both operands share a universe.

use std::fmt;

use smallvec::SmallVec;

type Words = SmallVec<[u64; 2]>;

#[inline]
fn words_for(universe: usize) -> usize {
    universe.div_ceil(64)
}

/// A subset of `0..universe` with O(1) membership.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Words,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: SmallVec::from_elem(0, words_for(universe)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(universe);
            *w = if hi - lo == 64 { u64::MAX } else { (1u64 << (hi - lo)) - 1 };
        }
        s
    }

    pub fn from_slice(universe: usize, vertices: &[usize]) -> Self {
        let mut s = Self::new(universe);
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && (self.words[v >> 6] >> (v & 63)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v >> 6] &= !(1u64 << (v & 63));
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    /// Smallest element.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    #[inline]
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    #[inline]
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    #[inline]
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a &= b);
    }

    #[inline]
    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a |= b);
    }

    #[inline]
    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a &= !b);
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> VertexSet {
        let full = VertexSet::full(self.universe);
        full.difference(self)
    }

    /// Lexicographic comparison of the sorted element lists.
    pub fn lex_cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
