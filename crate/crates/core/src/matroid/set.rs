use std::cmp::Ordering;
use std::fmt;

/// A subset of a ground set of at most 64 elements, stored as a bitmask.
///
/// The ordering is the canonical one used for every emitted family: compare
/// the ascending index sequences lexicographically, so a proper prefix sorts
/// first (`{a} < {a,b} < {a,c} < {b}`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet(1 << i)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        ElementSet(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Re-index this set through `map`, where `map[i]` is the new index of
    /// element `i` (or `None` to drop it).
    pub fn remap(self, map: &[Option<usize>]) -> Self {
        ElementSet::from_indices(self.iter().filter_map(|i| map[i]))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
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

/// All subsets of `universe`, in increasing bitmask order.
pub fn subsets_of(universe: ElementSet) -> impl Iterator<Item = ElementSet> {
    let u = universe.0;
    let mut cur = Some(0u64);
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == u { None } else { Some((s.wrapping_sub(u)) & u) };
        Some(ElementSet(s))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_lexicographic_on_index_sequences() {
        let a = ElementSet::from_indices([0]);
        let ab = ElementSet::from_indices([0, 1]);
        let ac = ElementSet::from_indices([0, 2]);
        let b = ElementSet::from_indices([1]);
        let mut v = vec![b, ac, ElementSet::EMPTY, ab, a];
        v.sort();
        assert_eq!(v, vec![ElementSet::EMPTY, a, ab, ac, b]);
    }

    #[test]
    fn subset_enumeration_counts() {
        let u = ElementSet::from_indices([1, 3, 4]);
        let all: Vec<_> = subsets_of(u).collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|s| s.is_subset(u)));
        assert_eq!(subsets_of(ElementSet::EMPTY).count(), 1);
    }
}
