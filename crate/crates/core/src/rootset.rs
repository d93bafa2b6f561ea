//! Sets of roots as fixed-width bitsets over [`RootId`].

use std::fmt;

use crate::rootsys::{RootId, RootSystem};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet {
    universe: usize,
    words: Vec<u64>,
}

impl RootSet {
    pub fn empty(universe: usize) -> Self {
        RootSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for id in 0..universe {
            s.insert(id);
        }
        s
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = RootId>) -> Self {
        let mut s = Self::empty(universe);
        for id in ids {
            s.insert(id);
        }
        s
    }

    pub fn all_roots(rs: &RootSystem) -> Self {
        Self::full(rs.num_roots())
    }

    pub fn negative_roots(rs: &RootSystem) -> Self {
        Self::from_ids(rs.num_roots(), rs.negative_ids())
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, id: RootId) -> bool {
        self.words[id / 64] >> (id % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, id: RootId) -> bool {
        let had = self.contains(id);
        self.words[id / 64] |= 1 << (id % 64);
        !had
    }

    pub fn remove(&mut self, id: RootId) -> bool {
        let had = self.contains(id);
        self.words[id / 64] &= !(1 << (id % 64));
        had
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    fn zip_with(&self, other: &RootSet, f: impl Fn(u64, u64) -> u64) -> RootSet {
        debug_assert_eq!(self.universe, other.universe);
        RootSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    /// Image under a permutation of root ids.
    pub fn map(&self, perm: &[RootId]) -> RootSet {
        RootSet::from_ids(self.universe, self.iter().map(|i| perm[i]))
    }

    /// Root strings in id order.
    pub fn to_strings(&self, rs: &RootSystem) -> Vec<String> {
        self.iter().map(|i| rs.root_string(i)).collect()
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Is the set closed under root addition inside `Φ`?
pub fn is_bracket_closed(rs: &RootSystem, set: &RootSet) -> bool {
    let ids: Vec<RootId> = set.iter().collect();
    ids.iter().all(|&a| {
        ids.iter()
            .all(|&b| rs.sum_id(a, b).is_none_or(|s| set.contains(s)))
    })
}

/// Smallest superset closed under root addition.
pub fn bracket_closure(rs: &RootSystem, set: &RootSet) -> RootSet {
    let mut cur = set.clone();
    loop {
        let ids: Vec<RootId> = cur.iter().collect();
        let mut next = cur.clone();
        for &a in &ids {
            for &b in &ids {
                if let Some(s) = rs.sum_id(a, b) {
                    next.insert(s);
                }
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn set_algebra() {
        let a = RootSet::from_ids(70, [1, 2, 65]);
        let b = RootSet::from_ids(70, [2, 3]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![2]);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![1, 65]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(!a.is_subset(&b));
    }

    #[test]
    fn closure_examples() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        assert!(is_bracket_closed(&a2, &RootSet::negative_roots(&a2)));
        let s1 = a2.simple_id(0);
        let s2 = a2.simple_id(1);
        assert!(is_bracket_closed(&a2, &RootSet::from_ids(6, [s1])));
        let pair = RootSet::from_ids(6, [s1, s2]);
        assert!(!is_bracket_closed(&a2, &pair));
        assert_eq!(bracket_closure(&a2, &pair).len(), 3);
    }
}
