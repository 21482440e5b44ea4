//! Dense bit sets over the elements `0..n` of a loop.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    domain: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(domain: usize) -> Self {
        Self {
            domain,
            words: vec![0; domain.div_ceil(64)],
        }
    }

    pub fn full(domain: usize) -> Self {
        let mut s = Self::empty(domain);
        for x in 0..domain {
            s.insert(x);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(domain: usize, iter: I) -> Self {
        let mut s = Self::empty(domain);
        for x in iter {
            s.insert(x);
        }
        s
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        debug_assert!(x < self.domain);
        self.words[x / 64] & (1 << (x % 64)) != 0
    }

    /// Returns `true` if the element was not present before.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(
            x < self.domain,
            "element {x} outside domain {}",
            self.domain
        );
        let w = &mut self.words[x / 64];
        let before = *w;
        *w |= 1 << (x % 64);
        *w != before
    }

    pub fn remove(&mut self, x: usize) {
        self.words[x / 64] &= !(1 << (x % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.domain).filter(move |&x| self.contains(x))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        assert_eq!(self.domain, other.domain);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        assert_eq!(self.domain, other.domain);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.domain == other.domain
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
