//! Bitset encoding of element subsets.
//!
//! Element `i` of a ground set is bit `i` of an [`ElementSet`]. Ground sets
//! are limited to 64 elements by the encoding; exhaustive enumeration is
//! limited further by [`ENUMERATION_CAP`].

use std::fmt;

/// Largest ground set for which subsets are enumerated exhaustively.
pub const ENUMERATION_CAP: usize = 24;

/// Largest ground set the bitset encoding can hold.
pub const MAX_GROUND: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        ElementSet(it.into_iter().fold(0u64, |acc, i| acc | (1u64 << i)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | (1u64 << i))
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest element index, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Remove element `pos` and shift higher elements down by one.
    pub fn remove_position(self, pos: usize) -> Self {
        let low = self.0 & ((1u64 << pos) - 1);
        let high = if pos >= 63 { 0 } else { (self.0 >> (pos + 1)) << pos };
        ElementSet(low | high)
    }

    /// Inverse of [`remove_position`](Self::remove_position): open a gap at `pos`.
    pub fn insert_gap(self, pos: usize) -> Self {
        let low = self.0 & ((1u64 << pos) - 1);
        let high = (self.0 >> pos) << (pos + 1);
        ElementSet(low | high)
    }

    /// Image under an index map `map[old] = new`.
    pub fn permute(self, map: &[usize]) -> Self {
        ElementSet::from_indices(self.iter().map(|i| map[i]))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_indices(iter)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// All `k`-subsets of an `n`-set in increasing numeric order (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
    let limit: u64 = if n >= 64 { u64::MAX } else { 1u64 << n };
    let mut cur: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 {
            None
        } else {
            let u = c & c.wrapping_neg();
            let v = c.wrapping_add(u);
            if v == 0 {
                None
            } else {
                let next = v | (((v ^ c) / u) >> 2);
                (next < limit).then_some(next)
            }
        };
        Some(ElementSet(c))
    })
}

/// Every subset of an `n`-set, in increasing numeric order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    debug_assert!(n < 64);
    (0..(1u64 << n)).map(ElementSet)
}

pub(crate) fn check_cap(what: &'static str, n: usize) -> crate::Result<()> {
    if n > ENUMERATION_CAP {
        Err(crate::Error::Capacity {
            what,
            size: n,
            limit: ENUMERATION_CAP,
        })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn gosper_counts_match_binomials() {
        for n in 0..10 {
            for k in 0..=n + 1 {
                let subs: Vec<_> = subsets_of_size(n, k).collect();
                let expected = if k > n { 0 } else { binom(n as u64, k as u64) };
                assert_eq!(subs.len() as u64, expected, "n={n} k={k}");
                assert!(subs.iter().all(|s| s.len() == k));
                assert!(subs.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn gap_round_trip() {
        let s = ElementSet::from_indices([0, 2, 5]);
        assert_eq!(s.insert_gap(1), ElementSet::from_indices([0, 3, 6]));
        assert_eq!(s.insert_gap(1).remove_position(1), s);
        assert_eq!(s.insert_gap(0), ElementSet::from_indices([1, 3, 6]));
    }

    #[test]
    fn first_last_iter() {
        let s = ElementSet::from_indices([3, 7, 9]);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(9));
        assert_eq!(s.to_vec(), vec![3, 7, 9]);
        assert_eq!(ElementSet::EMPTY.first(), None);
    }
}
