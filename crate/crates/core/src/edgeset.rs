//! Bitset over the colex-ranked triple universe.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Set of triple ranks, backed by 64-bit words. The universe size is fixed
/// at construction; all ranks must stay below it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EdgeSet {
    bits: u32,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new(universe: u32) -> Self {
        EdgeSet {
            bits: universe,
            words: vec![0; (universe as usize + 63) / 64],
        }
    }

    #[inline]
    pub fn universe(&self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, rank: u32) -> bool {
        debug_assert!(rank < self.bits);
        self.words[(rank / 64) as usize] >> (rank % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, rank: u32) -> bool {
        debug_assert!(rank < self.bits);
        let w = &mut self.words[(rank / 64) as usize];
        let mask = 1u64 << (rank % 64);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, rank: u32) -> bool {
        debug_assert!(rank < self.bits);
        let w = &mut self.words[(rank / 64) as usize];
        let mask = 1u64 << (rank % 64);
        let present = *w & mask != 0;
        *w &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ranks in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let base = i as u32 * 64;
            BitIter { word, base }
        })
    }

    /// Ascending-rank-sequence lexicographic order. For equal-size sets this
    /// is the usual "sorted tuple" comparison used for witness tie-breaking.
    pub fn cmp_ranks(&self, other: &EdgeSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

struct BitIter {
    word: u64,
    base: u32,
}

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros();
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}
