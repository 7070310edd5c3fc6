//! Fixed-capacity bit set over compact solution indices, with tracked
//! min/max occupied positions so intersections only touch the overlap.

/// Set of compact indices in `[0, capacity)` backed by 64-bit words.
///
/// The smallest and largest set positions are maintained on every mutation.
/// Intersection is computed word-wise, restricted to the position range
/// `[max(a.min, b.min), min(a.max, b.max)]`; an empty overlap short-circuits
/// to the empty set without touching any word.
#[derive(Debug, Clone)]
pub struct DominanceSet {
    words: Vec<u64>,
    bounds: Option<(usize, usize)>,
}

impl DominanceSet {
    /// Empty set able to hold positions `0..capacity`.
    pub fn empty(capacity: usize) -> Self {
        DominanceSet {
            words: vec![0; capacity.div_ceil(64)],
            bounds: None,
        }
    }

    /// Set holding exactly the positions `0..len`.
    pub fn prefix(len: usize, capacity: usize) -> Self {
        let mut words = vec![0u64; capacity.div_ceil(64)];
        let full = len / 64;
        words[..full].fill(!0);
        if !len.is_multiple_of(64) {
            words[full] = (1u64 << (len % 64)) - 1;
        }
        DominanceSet {
            words,
            bounds: (len > 0).then(|| (0, len - 1)),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    pub fn min_pos(&self) -> Option<usize> {
        self.bounds.map(|(lo, _)| lo)
    }

    pub fn max_pos(&self) -> Option<usize> {
        self.bounds.map(|(_, hi)| hi)
    }

    pub fn contains(&self, pos: usize) -> bool {
        match self.bounds {
            Some((lo, hi)) if (lo..=hi).contains(&pos) => {
                self.words[pos / 64] & (1u64 << (pos % 64)) != 0
            }
            _ => false,
        }
    }

    pub fn insert(&mut self, pos: usize) {
        debug_assert!(pos / 64 < self.words.len(), "position exceeds capacity");
        self.words[pos / 64] |= 1u64 << (pos % 64);
        self.bounds = match self.bounds {
            None => Some((pos, pos)),
            Some((lo, hi)) => Some((lo.min(pos), hi.max(pos))),
        };
    }

    pub fn clear(&mut self) {
        if let Some((lo, hi)) = self.bounds.take() {
            self.words[lo / 64..=hi / 64].fill(0);
        }
    }

    /// Number of set positions.
    pub fn len(&self) -> usize {
        match self.bounds {
            None => 0,
            Some((lo, hi)) => self.words[lo / 64..=hi / 64]
                .iter()
                .map(|w| w.count_ones() as usize)
                .sum(),
        }
    }

    /// Replaces `self` with `self & other`.
    pub fn intersect_with(&mut self, other: &DominanceSet) {
        let Some((amin, amax)) = self.bounds else {
            return;
        };
        let Some((bmin, bmax)) = other.bounds else {
            self.clear();
            return;
        };
        let lo = amin.max(bmin);
        let hi = amax.min(bmax);
        if lo > hi {
            self.clear();
            return;
        }
        let (wlo, whi) = (lo / 64, hi / 64);
        self.words[amin / 64..wlo].fill(0);
        self.words[whi + 1..=amax / 64].fill(0);
        for w in wlo..=whi {
            self.words[w] &= other.words[w];
        }
        // Bits of either operand outside the shared range were zeroed or
        // absent in the other word, so no boundary masking is needed.
        self.bounds = self.scan_bounds(wlo, whi);
    }

    fn scan_bounds(&self, wlo: usize, whi: usize) -> Option<(usize, usize)> {
        let first = (wlo..=whi).find(|&w| self.words[w] != 0)?;
        let last = (wlo..=whi).rev().find(|&w| self.words[w] != 0).unwrap();
        let lo = first * 64 + self.words[first].trailing_zeros() as usize;
        let hi = last * 64 + 63 - self.words[last].leading_zeros() as usize;
        Some((lo, hi))
    }

    /// Iterates set positions in ascending order.
    pub fn iter(&self) -> SetBits<'_> {
        match self.bounds {
            None => SetBits {
                words: &[],
                word_index: 0,
                current: 0,
                last_word: 0,
            },
            Some((lo, hi)) => {
                let (wlo, whi) = (lo / 64, hi / 64);
                SetBits {
                    words: &self.words,
                    word_index: wlo,
                    current: self.words[wlo],
                    last_word: whi,
                }
            }
        }
    }

    #[cfg(test)]
    pub(crate) fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the set positions of a [`DominanceSet`].
pub struct SetBits<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
    last_word: usize,
}

impl Iterator for SetBits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.words.is_empty() {
            return None;
        }
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_index * 64 + bit);
            }
            if self.word_index >= self.last_word {
                return None;
            }
            self.word_index += 1;
            self.current = self.words[self.word_index];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn prefix_holds_exactly_the_first_len_positions() {
        let s = DominanceSet::prefix(70, 200);
        assert_eq!(s.len(), 70);
        assert_eq!(s.min_pos(), Some(0));
        assert_eq!(s.max_pos(), Some(69));
        assert!(s.contains(69));
        assert!(!s.contains(70));
        assert_eq!(s.to_vec(), (0..70).collect::<Vec<_>>());
    }

    #[test]
    fn empty_prefix_is_empty() {
        let s = DominanceSet::prefix(0, 64);
        assert!(s.is_empty());
        assert_eq!(s.min_pos(), None);
        assert_eq!(s.iter().next(), None);
    }

    #[test]
    fn insert_tracks_bounds() {
        let mut s = DominanceSet::empty(256);
        s.insert(130);
        assert_eq!((s.min_pos(), s.max_pos()), (Some(130), Some(130)));
        s.insert(7);
        s.insert(255);
        assert_eq!((s.min_pos(), s.max_pos()), (Some(7), Some(255)));
        assert_eq!(s.to_vec(), vec![7, 130, 255]);
    }

    #[test]
    fn disjoint_ranges_short_circuit_to_empty() {
        let mut a = DominanceSet::empty(256);
        a.insert(10);
        a.insert(20);
        let mut b = DominanceSet::empty(256);
        b.insert(100);
        a.intersect_with(&b);
        assert!(a.is_empty());
        assert_eq!(a.len(), 0);
    }

    #[test]
    fn intersection_with_empty_clears() {
        let mut a = DominanceSet::prefix(50, 64);
        a.intersect_with(&DominanceSet::empty(64));
        assert!(a.is_empty());
        // Cleared words must not leak into a later intersection.
        let mut c = DominanceSet::prefix(64, 64);
        c.intersect_with(&a);
        assert!(c.is_empty());
    }

    #[test]
    fn overlapping_intersection_recomputes_bounds() {
        let mut a = DominanceSet::empty(512);
        for p in [3, 64, 130, 200, 450] {
            a.insert(p);
        }
        let mut b = DominanceSet::empty(512);
        for p in [64, 130, 300, 460] {
            b.insert(p);
        }
        a.intersect_with(&b);
        assert_eq!(a.to_vec(), vec![64, 130]);
        assert_eq!((s(a.min_pos()), s(a.max_pos())), (64, 130));

        fn s(x: Option<usize>) -> usize {
            x.unwrap()
        }
    }

    #[test]
    fn matches_reference_set_on_seeded_operations() {
        let mut rng = crate::datagen::SplitMix64::new(0xBEEF);
        for _ in 0..20 {
            let cap = 1 + (rng.next_u64() % 300) as usize;
            let mut a = DominanceSet::empty(cap);
            let mut b = DominanceSet::empty(cap);
            let mut ra = BTreeSet::new();
            let mut rb = BTreeSet::new();
            for _ in 0..cap {
                let p = (rng.next_u64() % cap as u64) as usize;
                let q = (rng.next_u64() % cap as u64) as usize;
                a.insert(p);
                ra.insert(p);
                b.insert(q);
                rb.insert(q);
                assert_eq!(a.contains(q), ra.contains(&q));
            }
            a.intersect_with(&b);
            let expected: Vec<usize> = ra.intersection(&rb).copied().collect();
            assert_eq!(a.to_vec(), expected);
            assert_eq!(a.min_pos(), expected.first().copied());
            assert_eq!(a.max_pos(), expected.last().copied());
        }
    }
}
