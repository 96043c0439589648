//! Vertex sets as bit masks: a single machine word up to 64 vertices, a word
//! array beyond that.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VertexSet {
    Small(u64),
    Large(Vec<u64>),
}

impl VertexSet {
    /// Empty set able to hold indices `0..capacity`.
    pub fn with_capacity(capacity: usize) -> Self {
        if capacity <= 64 {
            VertexSet::Small(0)
        } else {
            VertexSet::Large(vec![0; capacity.div_ceil(64)])
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(capacity: usize, it: I) -> Self {
        let mut s = Self::with_capacity(capacity);
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        match self {
            VertexSet::Small(w) => *w |= 1 << i,
            VertexSet::Large(ws) => ws[i / 64] |= 1 << (i % 64),
        }
    }

    pub fn remove(&mut self, i: usize) {
        match self {
            VertexSet::Small(w) => *w &= !(1 << i),
            VertexSet::Large(ws) => ws[i / 64] &= !(1 << (i % 64)),
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        match self {
            VertexSet::Small(w) => i < 64 && (w >> i) & 1 == 1,
            VertexSet::Large(ws) => ws.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1),
        }
    }

    pub fn len(&self) -> usize {
        self.words().iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words().iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        match self {
            VertexSet::Small(w) => core::slice::from_ref(w),
            VertexSet::Large(ws) => ws,
        }
    }

    fn zip_words(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        match (self, other) {
            (VertexSet::Small(a), VertexSet::Small(b)) => VertexSet::Small(f(*a, *b)),
            _ => {
                let (a, b) = (self.words(), other.words());
                let len = a.len().max(b.len());
                let get = |s: &[u64], i: usize| s.get(i).copied().unwrap_or(0);
                VertexSet::Large((0..len).map(|i| f(get(a, i), get(b, i))).collect())
            }
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        let b = other.words();
        self.words()
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !b.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words()
            .iter()
            .zip(other.words())
            .all(|(a, b)| a & b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words().iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}
