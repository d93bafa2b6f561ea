//! Parabolic subalgebras `q ⊇ b ⊇ t` as root sets.
//!
//! The Borel subalgebra `b` is spanned by the NEGATIVE roots. A parabolic
//! is fixed by the simple roots it contains, `qr = Φ(q) ∩ Π`, and then
//! `Φ(q) = Φ⁻ ∪ (Φ⁺ ∩ ℤ-span(qr))`. Simple roots are numbered from 1.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{RootId, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    qr: BTreeSet<usize>,
    root_set: RootSet,
    removed: Option<usize>,
}

impl ParabolicData {
    /// Builds the parabolic containing exactly the simple roots `qr`
    /// (1-based Bourbaki labels).
    pub fn from_subset(rs: &RootSystem, qr: &[usize]) -> Result<Self> {
        let n = rs.rank();
        let mut set = BTreeSet::new();
        for &i in qr {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, rank: n });
            }
            set.insert(i);
        }
        let mut roots = RootSet::negative_roots(rs);
        for id in rs.positive_ids() {
            let supported = rs
                .root(id)
                .coeffs()
                .iter()
                .enumerate()
                .all(|(j, &c)| c == 0 || set.contains(&(j + 1)));
            if supported {
                roots.insert(id);
            }
        }
        let removed = if set.len() + 1 == n {
            (1..=n).find(|i| !set.contains(i))
        } else {
            None
        };
        Ok(ParabolicData {
            qr: set,
            root_set: roots,
            removed,
        })
    }

    /// The Borel subalgebra, `qr = ∅`.
    pub fn borel(rs: &RootSystem) -> Self {
        Self::from_subset(rs, &[]).expect("empty subset is valid")
    }

    /// Maximal parabolic obtained by deleting one simple root.
    pub fn maximal(rs: &RootSystem, removed: usize) -> Result<Self> {
        if removed == 0 || removed > rs.rank() {
            return Err(Error::IndexOutOfRange {
                index: removed,
                rank: rs.rank(),
            });
        }
        let qr: Vec<usize> = (1..=rs.rank()).filter(|&i| i != removed).collect();
        Self::from_subset(rs, &qr)
    }

    pub fn qr(&self) -> &BTreeSet<usize> {
        &self.qr
    }

    pub fn qr_vec(&self) -> Vec<usize> {
        self.qr.iter().copied().collect()
    }

    pub fn root_set(&self) -> &RootSet {
        &self.root_set
    }

    pub fn is_maximal(&self) -> bool {
        self.removed.is_some()
    }

    /// The deleted simple root (1-based) when the parabolic is maximal.
    pub fn removed_index(&self) -> Option<usize> {
        self.removed
    }

    fn require_maximal(&self) -> Result<usize> {
        self.removed
            .ok_or_else(|| Error::NotMaximal { qr: self.qr_vec() })
    }

    /// `c(q)`: the largest coefficient of the deleted simple root over `Φ⁺`.
    pub fn c_of_q(&self, rs: &RootSystem) -> Result<i32> {
        let q = self.require_maximal()? - 1;
        Ok(rs
            .positive_ids()
            .map(|id| rs.root(id).coeffs()[q])
            .max()
            .unwrap_or(0))
    }

    /// ℤ-grading of `Φ` by the coefficient of the deleted simple root.
    /// Only nonempty degrees appear as keys.
    pub fn gradation(&self, rs: &RootSystem) -> Result<BTreeMap<i32, RootSet>> {
        let q = self.require_maximal()? - 1;
        let mut parts: BTreeMap<i32, RootSet> = BTreeMap::new();
        for id in 0..rs.num_roots() {
            let j = rs.root(id).coeffs()[q];
            parts
                .entry(j)
                .or_insert_with(|| RootSet::empty(rs.num_roots()))
                .insert(id);
        }
        Ok(parts)
    }

    /// Positive roots outside `q`: the directions of `T_z Z`.
    pub fn nilradical_complement(&self, rs: &RootSystem) -> Vec<RootId> {
        rs.positive_ids()
            .filter(|&id| !self.root_set.contains(id))
            .collect()
    }

    /// True iff no `α, β ∈ Φⁿ` have `α + β ∈ Φⁿ`, where `Φⁿ = Φ⁺ \ Φ(q)`.
    pub fn has_nonresonant_field(&self, rs: &RootSystem) -> bool {
        let outside = self.nilradical_complement(rs);
        !outside.iter().any(|&a| {
            outside
                .iter()
                .any(|&b| rs.sum_id(a, b).is_some_and(|s| !self.root_set.contains(s)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootset::is_bracket_closed;
    use crate::rootsys::Family;

    fn b3() -> RootSystem {
        RootSystem::new(Family::B, 3).unwrap()
    }

    fn strings(rs: &RootSystem, s: &RootSet) -> BTreeSet<String> {
        s.to_strings(rs).into_iter().collect()
    }

    fn set(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn b3_grassmannian_parabolic() {
        let rs = b3();
        let p = ParabolicData::from_subset(&rs, &[1, 3]).unwrap();
        assert_eq!(p.root_set().len(), 11);
        let pos: RootSet = p.root_set().difference(&RootSet::negative_roots(&rs));
        assert_eq!(strings(&rs, &pos), set(&["100", "001"]));
        assert!(p.is_maximal());
        assert_eq!(p.removed_index(), Some(2));
        assert_eq!(p.c_of_q(&rs).unwrap(), 2);
        assert!(is_bracket_closed(&rs, p.root_set()));
    }

    #[test]
    fn extreme_subsets() {
        let rs = b3();
        let full = ParabolicData::from_subset(&rs, &[1, 2, 3]).unwrap();
        assert_eq!(full.root_set(), &RootSet::all_roots(&rs));
        assert!(!full.is_maximal());
        let borel = ParabolicData::borel(&rs);
        assert_eq!(borel.root_set(), &RootSet::negative_roots(&rs));
    }

    #[test]
    fn out_of_range_index() {
        let rs = b3();
        assert_eq!(
            ParabolicData::from_subset(&rs, &[4]).unwrap_err(),
            Error::IndexOutOfRange { index: 4, rank: 3 }
        );
        assert!(ParabolicData::from_subset(&rs, &[0]).is_err());
    }

    #[test]
    fn non_maximal_rejected_for_grading() {
        let rs = b3();
        let p = ParabolicData::from_subset(&rs, &[1]).unwrap();
        assert!(matches!(p.c_of_q(&rs), Err(Error::NotMaximal { .. })));
        assert!(matches!(p.gradation(&rs), Err(Error::NotMaximal { .. })));
    }

    #[test]
    fn b3_gradation() {
        let rs = b3();
        let p = ParabolicData::from_subset(&rs, &[1, 3]).unwrap();
        let g = p.gradation(&rs).unwrap();
        // graded by the α2-coefficient: −112 and −012 have degree −1
        assert_eq!(strings(&rs, &g[&-2]), set(&["-122"]));
        assert_eq!(
            strings(&rs, &g[&-1]),
            set(&["-010", "-110", "-011", "-111", "-012", "-112"])
        );
        assert_eq!(strings(&rs, &g[&0]), set(&["100", "001", "-100", "-001"]));
        assert!(!g.contains_key(&3) && !g.contains_key(&-3));
        assert_eq!(g.values().map(RootSet::len).sum::<usize>(), 18);
        let nonpos = g
            .range(..=0)
            .fold(RootSet::empty(18), |acc, (_, s)| acc.union(s));
        assert_eq!(&nonpos, p.root_set());
        assert_eq!(*g.keys().max().unwrap(), p.c_of_q(&rs).unwrap());
    }

    #[test]
    fn nonresonance() {
        let rs = b3();
        let p = ParabolicData::from_subset(&rs, &[1, 3]).unwrap();
        assert!(!p.has_nonresonant_field(&rs));
        let full = ParabolicData::from_subset(&rs, &[1, 2, 3]).unwrap();
        assert!(full.has_nonresonant_field(&rs));
        let a4 = RootSystem::new(Family::A, 4).unwrap();
        for q in 1..=4 {
            assert!(ParabolicData::maximal(&a4, q)
                .unwrap()
                .has_nonresonant_field(&a4));
        }
    }
}
