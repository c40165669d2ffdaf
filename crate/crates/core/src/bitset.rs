//! Fixed-width bitsets over `0..width`.

use std::fmt;

const BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet {
    blocks: Vec<u64>,
}

impl ElementSet {
    pub fn with_width(width: usize) -> Self {
        ElementSet {
            blocks: vec![0; width.div_ceil(BITS)],
        }
    }

    pub fn from_indices(width: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::with_width(width);
        for i in indices {
            set.insert(i);
        }
        set
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.blocks[i / BITS] |= 1 << (i % BITS);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.blocks[i / BITS] &= !(1 << (i % BITS));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.blocks
            .get(i / BITS)
            .is_some_and(|b| b & (1 << (i % BITS)) != 0)
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(bi * BITS + tz)
            })
        })
    }
}

impl std::borrow::Borrow<[u64]> for ElementSet {
    fn borrow(&self) -> &[u64] {
        &self.blocks
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_iter() {
        let mut s = ElementSet::with_width(130);
        for i in [0, 5, 63, 64, 129] {
            s.insert(i);
        }
        assert_eq!(s.len(), 5);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 5, 63, 64, 129]);
        s.remove(64);
        assert!(!s.contains(64));
        assert!(s.contains(129));
        assert!(!s.contains(1000));
        let t = ElementSet::from_indices(130, [0, 5, 63, 129, 7]);
        assert!(s.is_subset(&t));
        assert!(!t.is_subset(&s));
    }
}
