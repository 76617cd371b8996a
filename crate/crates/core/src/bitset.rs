use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of element indices of one fixed ring.
///
/// Ordering is lexicographic on the ascending member list, which is what the
/// ideal lattice uses for its deterministic tie-breaking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet(FixedBitSet);

impl ElementSet {
    pub fn new(width: usize) -> Self {
        ElementSet(FixedBitSet::with_capacity(width))
    }

    pub fn from_members(width: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(width);
        for m in members {
            s.insert(m);
        }
        s
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self::new(width);
        s.0.insert_range(..);
        s
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(x)
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0.insert(x);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet(&self.0 & &other.0)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
