//! Exact sparse linear algebra over an [`ExactField`].
//!
//! Vectors are sorted `(index, value)` lists without explicit zeros.
//! A [`Subspace`] keeps its basis in reduced row echelon form, so two
//! subspaces are equal iff their bases are equal.

use crate::scalar::ExactField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: ExactField> SparseVec<F> {
    pub fn zero() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: vec![(index, F::one())],
        }
    }

    /// Builds from unsorted entries, summing duplicates and dropping zeros.
    pub fn from_entries(mut entries: Vec<(usize, F)>) -> Self {
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, F)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc = acc.clone() + v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<usize> {
        self.entries.first().map(|e| e.0)
    }

    pub fn get(&self, index: usize) -> F {
        match self.entries.binary_search_by_key(&index, |e| e.0) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn scaled(&self, k: &F) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v.clone() * k.clone()))
                .collect(),
        }
    }

    /// `self + k·other`.
    pub fn add_scaled(&self, other: &Self, k: &F) -> Self {
        if k.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, b[j].1.clone() * k.clone()));
                j += 1;
            } else {
                let v = a[i].1.clone() + b[j].1.clone() * k.clone();
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    /// Re-indexes entries by `index ↦ offset + index`.
    pub fn shifted(&self, offset: usize) -> Self {
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (i + offset, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<F> {
        let mut out = vec![F::zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }
}

/// Subspace of `F^ambient` with a basis in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    // sorted by pivot; every pivot entry is 1 and the pivot column is zero
    // in every other row
    rows: Vec<SparseVec<F>>,
}

impl<F: ExactField> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, 0..ambient)
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        Subspace {
            ambient,
            rows: idx.into_iter().map(SparseVec::unit).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = SparseVec<F>>) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().filter_map(SparseVec::leading).collect()
    }

    /// Canonical representative of `v` modulo the subspace: the result
    /// vanishes on every pivot column.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut cur = v.clone();
        for row in &self.rows {
            let p = row.leading().expect("echelon rows are nonzero");
            let c = cur.get(p);
            if !c.is_zero() {
                cur = cur.add_scaled(row, &(-c));
            }
        }
        cur
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let r = self.reduce(&v);
        let Some(p) = r.leading() else {
            return false;
        };
        let inv = F::one() / r.get(p);
        let r = r.scaled(&inv);
        for row in &mut self.rows {
            let c = row.get(p);
            if !c.is_zero() {
                *row = row.add_scaled(&r, &(-c));
            }
        }
        let pos = self
            .rows
            .partition_point(|row| row.leading().expect("nonzero") < p);
        self.rows.insert(pos, r);
        true
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        // u ∈ self with u ∈ other ⟺ u mod other = 0
        let images: Vec<SparseVec<F>> = self.rows.iter().map(|v| other.reduce(v)).collect();
        let combos = left_kernel(&images);
        Subspace::span(self.ambient, combos.iter().map(|c| combine(&self.rows, c)))
    }
}

/// `Σ cᵢ·vectors[i]` for a sparse coefficient vector `c`.
pub fn combine<F: ExactField>(vectors: &[SparseVec<F>], c: &SparseVec<F>) -> SparseVec<F> {
    c.entries().iter().fold(SparseVec::zero(), |acc, (i, k)| {
        acc.add_scaled(&vectors[*i], k)
    })
}

/// Basis of `{c : Σ cᵢ·rows[i] = 0}`, returned as sparse coefficient vectors.
pub fn left_kernel<F: ExactField>(rows: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
    // eliminate on (row, tag) pairs; rows that vanish leave their tag behind
    let mut pivots: Vec<(usize, SparseVec<F>, SparseVec<F>)> = Vec::new();
    let mut kernel = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut v = r.clone();
        let mut tag = SparseVec::unit(i);
        loop {
            let Some(lead) = v.leading() else {
                kernel.push(tag);
                break;
            };
            match pivots.binary_search_by_key(&lead, |p| p.0) {
                Ok(pos) => {
                    let (_, pv, pt) = &pivots[pos];
                    let k = -(v.get(lead) / pv.get(lead));
                    v = v.add_scaled(pv, &k);
                    tag = tag.add_scaled(pt, &k);
                }
                Err(pos) => {
                    pivots.insert(pos, (lead, v, tag));
                    break;
                }
            }
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigRational, Rational};
    use num_traits::One;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn v(entries: &[(usize, i64)]) -> SparseVec<Rational> {
        SparseVec::from_entries(entries.iter().map(|&(i, x)| (i, q(x))).collect())
    }

    #[test]
    fn sparse_ops() {
        let a = v(&[(0, 1), (2, 3)]);
        let b = v(&[(2, 1), (5, 2)]);
        assert_eq!(a.add_scaled(&b, &q(-3)), v(&[(0, 1), (5, -6)]));
        assert_eq!(v(&[(1, 2), (1, -2)]), SparseVec::zero());
        assert_eq!(a.to_dense(3), vec![q(1), q(0), q(3)]);
    }

    #[test]
    fn echelon_is_canonical() {
        let s1 = Subspace::span(3, [v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)])]);
        let s2 = Subspace::span(3, [v(&[(0, 2), (2, -2)]), v(&[(0, 1), (1, 2), (2, 1)])]);
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
        assert!(s1.contains(&v(&[(0, 1), (2, -1)])));
        assert!(!s1.contains(&v(&[(0, 1)])));
    }

    #[test]
    fn kernel_and_intersection() {
        let rows = vec![v(&[(0, 1), (1, 1)]), v(&[(0, 2), (1, 2)]), v(&[(1, 1)])];
        let k = left_kernel(&rows);
        assert_eq!(k.len(), 1);
        assert!(combine(&rows, &k[0]).is_zero());

        let a = Subspace::coordinate(4, [0, 1, 2]);
        let b = Subspace::span(
            4,
            [v(&[(0, 1), (3, 1)]), v(&[(1, 1)]), v(&[(2, 1), (3, 1)])],
        );
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 2);
        assert!(i.contains(&v(&[(0, 1), (2, -1)])));
        assert_eq!(a.sum(&b).dim(), 4);
    }

    #[test]
    fn generic_over_big_rationals() {
        let one = BigRational::one();
        let x = SparseVec::from_entries(vec![(0, one.clone()), (1, one.clone())]);
        let y = SparseVec::from_entries(vec![(1, one.clone())]);
        let s = Subspace::span(2, [x, y]);
        assert_eq!(s, Subspace::<BigRational>::full(2));
    }
}
