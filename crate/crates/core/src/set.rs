//! Fixed-universe bit sets over statement indices.
//!
//! Every set is created against a universe size `n` (the number of
//! statements) and stays within it. Subset tests, intersections and the
//! information-ordering comparisons in the rest of the crate all reduce
//! to word operations on these sets.

use smallvec::SmallVec;

const BITS: usize = 64;

/// A subset of the statement indices `0..n`.
///
/// Sets of up to 64 statements live inline; larger universes spill to the
/// heap. Trailing bits beyond `n` are always zero, so derived equality and
/// hashing are exact set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StmtSet {
    nbits: usize,
    words: SmallVec<[u64; 1]>,
}

impl StmtSet {
    /// The empty subset of a universe with `n` statements.
    pub fn empty(n: usize) -> Self {
        StmtSet {
            nbits: n,
            words: smallvec::smallvec![0; n.div_ceil(BITS)],
        }
    }

    /// The full universe `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = StmtSet {
            nbits: n,
            words: smallvec::smallvec![!0u64; n.div_ceil(BITS)],
        };
        s.mask_tail();
        s
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Number of statements in the universe (not the cardinality).
    pub fn universe(&self) -> usize {
        self.nbits
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        i < self.nbits && self.words[i / BITS] >> (i % BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.nbits, "index {i} outside universe {}", self.nbits);
        self.words[i / BITS] |= 1 << (i % BITS);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.nbits, "index {i} outside universe {}", self.nbits);
        self.words[i / BITS] &= !(1 << (i % BITS));
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if value {
            self.insert(i)
        } else {
            self.remove(i)
        }
    }

    pub fn is_subset(&self, other: &StmtSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &StmtSet) -> StmtSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &StmtSet) -> StmtSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &StmtSet) -> StmtSet {
        self.zip_with(other, |a, b| a & !b)
    }

    /// `self ∩ mask == other ∩ mask`, without allocating.
    pub fn eq_under_mask(&self, other: &StmtSet, mask: &StmtSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        debug_assert_eq!(self.nbits, mask.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .zip(&mask.words)
            .all(|((a, b), m)| a & m == b & m)
    }

    /// Indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, w)| {
            let mut w = *w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * BITS + bit)
                }
            })
        })
    }

    fn zip_with(&self, other: &StmtSet, f: impl Fn(u64, u64) -> u64) -> StmtSet {
        debug_assert_eq!(self.nbits, other.nbits);
        StmtSet {
            nbits: self.nbits,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        }
    }

    fn mask_tail(&mut self) {
        let used = self.nbits % BITS;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }
}

impl std::fmt::Debug for StmtSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
