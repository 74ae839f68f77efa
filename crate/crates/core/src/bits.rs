//! Small variable-width bitsets used by the combinatorial inner loops.
//!
//! Public faces stay label-based; these sets index into a fixed vertex
//! ordering and exist only so that subset tests and unions inside searches
//! are cheap.

/// Bitset over `0..width` backed by `u64` blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct VSet {
    blocks: Vec<u64>,
}

impl VSet {
    pub fn empty(width: usize) -> Self {
        VSet {
            blocks: vec![0; width.div_ceil(64).max(1)],
        }
    }

    pub fn from_indices(width: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VSet::empty(width);
        for i in idx {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.blocks[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &VSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &VSet) -> VSet {
        VSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &VSet) -> VSet {
        VSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &VSet) -> VSet {
        VSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn intersects(&self, other: &VSet) -> bool {
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &b)| {
            (0..64)
                .filter(move |k| b >> k & 1 == 1)
                .map(move |k| bi * 64 + k)
        })
    }
}
