//! Chevalley basis realization and the linear-algebra oracle.
//!
//! The basis is `h_1 … h_n` (simple coroots) followed by one root vector
//! `x_α` per root, in [`RootId`] order. Structure constants
//! `[x_α, x_β] = N_{α,β} x_{α+β}` are fixed by declaring `N > 0` on
//! extraspecial pairs and propagating with the standard Chevalley
//! relations; all other brackets are forced:
//!
//! * `[h_i, x_α] = ⟨α|α_i⟩ x_α`
//! * `[x_α, x_{−α}] = h_α`, the coroot written in simple coroots.
//!
//! The oracle recomputes the kernel filtration, the Levi-tensor kernels
//! and minimality from these brackets with exact rational elimination. It
//! consumes the involution only through the root set `σΦ(q)`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::cralgebra::CrAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{combine, left_kernel, SparseVec, Subspace};
use crate::rootset::RootSet;
use crate::rootsys::{RootId, RootSystem};
use crate::scalar::ExactField;
use crate::Rational;

/// Above this dimension the build-time Jacobi check is sampled.
pub const EXHAUSTIVE_JACOBI_MAX_DIM: usize = 52;

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    /// Dense `|Φ| × |Φ|` table, zero where `α + β ∉ Φ`.
    n: Vec<i64>,
    /// `h_α = Σ coroots[α][i] h_i`.
    coroots: Vec<Vec<i64>>,
    /// `[h_i, x_α] = weights[α][i] x_α`.
    weights: Vec<Vec<i64>>,
}

impl ChevalleyAlgebra {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        if rs.rank() > 8 {
            return Err(Error::InvalidType {
                family: rs.family(),
                rank: rs.rank(),
            });
        }
        let n = structure_constants(rs)?;
        let rank = rs.rank();
        let mut coroots = Vec::with_capacity(rs.num_roots());
        let mut weights = Vec::with_capacity(rs.num_roots());
        for id in 0..rs.num_roots() {
            let norm = rs.norm(id);
            let mut c = Vec::with_capacity(rank);
            for (i, &k) in rs.root(id).coeffs().iter().enumerate() {
                let v = Rational::from_integer(k as i64) * rs.norm(rs.simple_id(i)) / norm;
                if !v.is_integer() {
                    return Err(Error::Internal(format!(
                        "coroot of {} is not integral",
                        rs.root_string(id)
                    )));
                }
                c.push(v.to_integer());
            }
            coroots.push(c);
            weights.push(
                (0..rank)
                    .map(|i| rs.pairing_ids(id, rs.simple_id(i)) as i64)
                    .collect(),
            );
        }
        let ca = ChevalleyAlgebra {
            rs: rs.clone(),
            n,
            coroots,
            weights,
        };
        ca.check_integrality()?;
        if ca.dim() <= EXHAUSTIVE_JACOBI_MAX_DIM {
            ca.check_jacobi_exhaustive()?;
        } else {
            ca.check_jacobi_sampled(97)?;
        }
        Ok(ca)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.rs.rank() + self.rs.num_roots()
    }

    /// Basis index of `x_α`.
    pub fn root_index(&self, id: RootId) -> usize {
        self.rs.rank() + id
    }

    /// `N_{α,β}`, zero when `α + β` is not a root.
    pub fn n(&self, a: RootId, b: RootId) -> i64 {
        self.n[a * self.rs.num_roots() + b]
    }

    pub fn coroot(&self, id: RootId) -> &[i64] {
        &self.coroots[id]
    }

    /// Bracket of two basis vectors as `(index, coefficient)` pairs.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        let rank = self.rank();
        match (i < rank, j < rank) {
            (true, true) => Vec::new(),
            (true, false) => {
                let w = self.weights[j - rank][i];
                if w == 0 {
                    Vec::new()
                } else {
                    vec![(j, w)]
                }
            }
            (false, true) => self
                .basis_bracket(j, i)
                .into_iter()
                .map(|(k, v)| (k, -v))
                .collect(),
            (false, false) => {
                let (a, b) = (i - rank, j - rank);
                if b == self.rs.negate(a) {
                    self.coroots[a]
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(k, &c)| (k, c))
                        .collect()
                } else if let Some(s) = self.rs.sum_id(a, b) {
                    vec![(rank + s, self.n(a, b))]
                } else {
                    Vec::new()
                }
            }
        }
    }

    pub fn bracket<F: ExactField>(&self, u: &SparseVec<F>, v: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Vec::new();
        for (i, a) in u.entries() {
            for (j, b) in v.entries() {
                for (k, c) in self.basis_bracket(*i, *j) {
                    acc.push((k, a.clone() * b.clone() * F::from_int(c)));
                }
            }
        }
        SparseVec::from_entries(acc)
    }

    fn check_integrality(&self) -> Result<()> {
        for a in 0..self.rs.num_roots() {
            for b in 0..self.rs.num_roots() {
                let v = self.n(a, b);
                if v != -self.n(b, a) {
                    return Err(Error::Internal("N is not antisymmetric".into()));
                }
                if self.rs.sum_id(a, b).is_some() {
                    let p = self.rs.string_down(a, b) as i64;
                    if v.abs() != p + 1 {
                        return Err(Error::Internal(format!(
                            "|N({}, {})| = {} but p + 1 = {}",
                            self.rs.root_string(a),
                            self.rs.root_string(b),
                            v.abs(),
                            p + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> SparseVec<i128> {
        let e = |t: usize| SparseVec::<i128>::unit(t);
        let (x, y, z) = (e(i), e(j), e(k));
        let t1 = self.bracket(&x, &self.bracket(&y, &z));
        let t2 = self.bracket(&y, &self.bracket(&z, &x));
        let t3 = self.bracket(&z, &self.bracket(&x, &y));
        t1.add_scaled(&t2, &1).add_scaled(&t3, &1)
    }

    fn jacobi_error(&self, i: usize, j: usize, k: usize) -> Error {
        Error::Internal(format!(
            "Jacobi identity fails on basis triple ({i}, {j}, {k}) of {}",
            self.rs.name()
        ))
    }

    pub fn check_jacobi_exhaustive(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    if !self.jacobi_defect(i, j, k).is_zero() {
                        return Err(self.jacobi_error(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks all triples whose first entry is a multiple of `stride` apart
    /// from a fixed start, plus every triple among the simple and lowest
    /// root vectors.
    pub fn check_jacobi_sampled(&self, stride: usize) -> Result<()> {
        let d = self.dim();
        let mut firsts: Vec<usize> = (0..d).step_by(stride.max(1)).collect();
        firsts.extend(0..(2 * self.rank()).min(d));
        firsts.sort_unstable();
        firsts.dedup();
        for &i in &firsts {
            for j in 0..d {
                for k in (j + 1..d).step_by(7) {
                    if !self.jacobi_defect(i, j, k).is_zero() {
                        return Err(self.jacobi_error(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Span of `x_α` for `α` in the set, plus the Cartan subalgebra if asked.
    pub fn subspace_from_rootset<F: ExactField>(
        &self,
        roots: &RootSet,
        include_cartan: bool,
    ) -> Subspace<F> {
        let cartan = if include_cartan { 0..self.rank() } else { 0..0 };
        Subspace::coordinate(
            self.dim(),
            cartan.chain(roots.iter().map(|id| self.root_index(id))),
        )
    }

    /// Reads a subspace back as `(roots, contains all of t)`, failing if
    /// some basis row mixes root vectors or mixes a root vector with `t`.
    pub fn root_support<F: ExactField>(&self, s: &Subspace<F>) -> Result<(RootSet, usize)> {
        let rank = self.rank();
        let mut roots = RootSet::empty(self.rs.num_roots());
        let mut cartan_dim = 0;
        for row in s.basis() {
            let entries = row.entries();
            if entries.iter().all(|(i, _)| *i < rank) {
                cartan_dim += 1;
            } else if entries.len() == 1 {
                roots.insert(entries[0].0 - rank);
            } else {
                return Err(Error::Internal(
                    "oracle subspace is not a sum of root spaces".into(),
                ));
            }
        }
        Ok((roots, cartan_dim))
    }

    /// `{w ∈ level : [w, σq] ⊆ level + σq}`.
    pub fn filtration_step<F: ExactField>(
        &self,
        level: &Subspace<F>,
        sigma_q: &Subspace<F>,
    ) -> Subspace<F> {
        let target = level.sum(sigma_q);
        let d = self.dim();
        let images: Vec<SparseVec<F>> = level
            .basis()
            .iter()
            .map(|w| {
                let mut acc = Vec::new();
                for (j, s) in sigma_q.basis().iter().enumerate() {
                    let r = target.reduce(&self.bracket(w, s));
                    acc.extend(r.shifted(j * d).entries().iter().cloned());
                }
                SparseVec::from_entries(acc)
            })
            .collect();
        let combos = left_kernel(&images);
        Subspace::span(d, combos.iter().map(|c| combine(level.basis(), c)))
    }

    /// Chain `q(0) ⊃ q(1) ⊃ …` ending with the first repeated level.
    pub fn oracle_filtration<F: ExactField>(
        &self,
        q: &Subspace<F>,
        sigma_q: &Subspace<F>,
    ) -> Result<Vec<Subspace<F>>> {
        let mut levels = vec![q.clone()];
        loop {
            let cur = levels.last().unwrap();
            let next = self.filtration_step(cur, sigma_q);
            if next == *cur {
                return Ok(levels);
            }
            if !next.is_subspace_of(cur) {
                return Err(Error::Internal(
                    "oracle filtration is not decreasing".into(),
                ));
            }
            levels.push(next);
            if levels.len() > q.dim() + 1 {
                return Err(Error::Internal(
                    "oracle filtration failed to stabilize".into(),
                ));
            }
        }
    }

    /// Left kernel of the `k`-th Levi tensor
    /// `q(k−1)/q(∞) × σq/q(∞) → (q(k−2) + σq)/(q(k−1) + σq)`,
    /// with `q(−1) := l`, as a subspace of `q(k−1)` containing `q(∞)`.
    pub fn levi_tensor_kernel<F: ExactField>(
        &self,
        levels: &[Subspace<F>],
        sigma_q: &Subspace<F>,
        k: usize,
    ) -> Result<Subspace<F>> {
        if k == 0 || k > levels.len() {
            return Err(Error::Internal(format!(
                "Levi tensor index {k} out of range"
            )));
        }
        let d = self.dim();
        let q_infty = levels[0].intersection(sigma_q);
        let domain = &levels[k - 1];
        let upper = if k >= 2 {
            levels[k - 2].sum(sigma_q)
        } else {
            Subspace::full(d)
        };
        let lower = domain.sum(sigma_q);
        let mut images = Vec::with_capacity(domain.dim());
        for u in domain.basis() {
            let mut acc = Vec::new();
            for (j, v) in sigma_q.basis().iter().enumerate() {
                let b = self.bracket(u, v);
                if !upper.contains(&b) {
                    return Err(Error::Internal(format!(
                        "Levi tensor {k} leaves its target space"
                    )));
                }
                acc.extend(lower.reduce(&b).shifted(j * d).entries().iter().cloned());
            }
            images.push(SparseVec::from_entries(acc));
        }
        let kernel = Subspace::span(
            d,
            left_kernel(&images)
                .iter()
                .map(|c| combine(domain.basis(), c)),
        );
        if !q_infty.is_subspace_of(&kernel) {
            return Err(Error::Internal("q(∞) is not in the Levi kernel".into()));
        }
        Ok(kernel)
    }

    /// Iterates `V ← V + [V, V]` and reports whether the whole algebra is reached.
    pub fn oracle_minimality<F: ExactField>(&self, q_plus: &Subspace<F>) -> bool {
        let mut v = q_plus.clone();
        loop {
            let basis = v.basis().to_vec();
            let mut next = v.clone();
            for a in &basis {
                for b in &basis {
                    next.insert(self.bracket(a, b));
                }
            }
            if next.dim() == v.dim() {
                return v.dim() == self.dim();
            }
            v = next;
        }
    }

    /// Recomputes everything about `cr` with linear algebra and compares it
    /// with the root-combinatorial results. Any disagreement is an error.
    pub fn cross_check<F: ExactField>(&self, cr: &CrAlgebra<'_>) -> Result<OracleReport<F>> {
        if cr.root_system().family() != self.rs.family() || cr.root_system().rank() != self.rank() {
            return Err(Error::Internal(
                "oracle built for a different root system".into(),
            ));
        }
        let q = self.subspace_from_rootset::<F>(cr.q(), true);
        let sigma_q = self.subspace_from_rootset::<F>(cr.sigma_q(), true);
        let levels = self.oracle_filtration(&q, &sigma_q)?;
        let comb = cr.filtration()?;
        let fail = |what: String| Err(Error::Internal(format!("oracle disagrees: {what}")));

        if levels.len() != comb.levels.len() {
            return fail(format!(
                "filtration length {} vs {}",
                levels.len(),
                comb.levels.len()
            ));
        }
        let mut level_roots = Vec::with_capacity(levels.len());
        for (k, (lin, roots)) in levels.iter().zip(&comb.levels).enumerate() {
            let (support, cartan) = self.root_support(lin)?;
            if cartan != self.rank() || support != *roots {
                return fail(format!("level {k}"));
            }
            level_roots.push(support);
        }
        let mut kernels = Vec::with_capacity(levels.len());
        for k in 1..levels.len() {
            let ker = self.levi_tensor_kernel(&levels, &sigma_q, k)?;
            if ker != levels[k] {
                return fail(format!("Levi kernel {k} differs from level {k}"));
            }
            kernels.push(ker);
        }
        let q_infty = q.intersection(&sigma_q);
        let kernel_dims: Vec<usize> = levels.iter().map(|l| l.dim() - q_infty.dim()).collect();
        if kernel_dims != comb.kernel_dims {
            return fail("kernel dimensions".into());
        }
        let minimal = self.oracle_minimality(&q.sum(&sigma_q));
        if minimal != cr.is_minimal() {
            return fail("minimality".into());
        }
        Ok(OracleReport {
            levels,
            level_roots,
            kernels,
            kernel_dims,
            minimal,
        })
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport<F> {
    pub levels: Vec<Subspace<F>>,
    pub level_roots: Vec<RootSet>,
    /// Left kernels of the Levi tensors `1, 2, …`.
    pub kernels: Vec<Subspace<F>>,
    pub kernel_dims: Vec<usize>,
    pub minimal: bool,
}

/// Dense table of Chevalley structure constants with positive signs on
/// extraspecial pairs. Positive roots are ordered by [`RootId`], which
/// refines height.
fn structure_constants(rs: &RootSystem) -> Result<Vec<i64>> {
    let npos = rs.num_positive();
    let total = rs.num_roots();
    let mut table = ConstantTable {
        rs,
        pos: HashMap::new(),
    };

    for zeta in 0..npos {
        let pairs: Vec<(RootId, RootId)> = (0..npos)
            .flat_map(|xi| (xi + 1..npos).map(move |eta| (xi, eta)))
            .filter(|&(xi, eta)| rs.sum_id(xi, eta) == Some(zeta))
            .collect();
        let Some(&(alpha, beta)) = pairs.first() else {
            continue;
        };
        let p = rs.string_down(alpha, beta) as i64;
        table.set(alpha, beta, Rational::from_integer(p + 1));
        let n_neg = table.get(rs.negate(alpha), rs.negate(beta))?;
        let norm_zeta = rs.norm(zeta);
        for &(xi, eta) in &pairs[1..] {
            let mut acc = Rational::zero();
            // N_{ξ,η}N_{−α,−β}/|ζ|² + N_{η,−α}N_{ξ,−β}/|η−α|² + N_{−α,ξ}N_{η,−β}/|ξ−α|² = 0
            if let Some(d) = rs.sum_id(eta, rs.negate(alpha)) {
                acc += table.get(eta, rs.negate(alpha))? * table.get(xi, rs.negate(beta))?
                    / rs.norm(d);
            }
            if let Some(d) = rs.sum_id(xi, rs.negate(alpha)) {
                acc += table.get(rs.negate(alpha), xi)? * table.get(eta, rs.negate(beta))?
                    / rs.norm(d);
            }
            let v = -acc * norm_zeta / n_neg;
            table.set(xi, eta, v);
        }
    }

    let mut dense = vec![0i64; total * total];
    for a in 0..total {
        for b in 0..total {
            if rs.sum_id(a, b).is_some() {
                let v = table.get(a, b)?;
                if !v.is_integer() {
                    return Err(Error::Internal(format!(
                        "non-integral structure constant N({}, {}) = {v}",
                        rs.root_string(a),
                        rs.root_string(b)
                    )));
                }
                dense[a * total + b] = v.to_integer();
            }
        }
    }
    Ok(dense)
}

struct ConstantTable<'a> {
    rs: &'a RootSystem,
    pos: HashMap<(RootId, RootId), Rational>,
}

impl ConstantTable<'_> {
    fn set(&mut self, a: RootId, b: RootId, v: Rational) {
        self.pos.insert((b, a), -v);
        self.pos.insert((a, b), v);
    }

    /// `N_{r,s}` for arbitrary signs, from the positive table.
    fn get(&self, r: RootId, s: RootId) -> Result<Rational> {
        let rs = self.rs;
        let Some(t) = rs.sum_id(r, s) else {
            return Ok(Rational::zero());
        };
        match (rs.is_positive(r), rs.is_positive(s)) {
            (true, true) => self.pos.get(&(r, s)).copied().ok_or_else(|| {
                Error::Internal(format!(
                    "structure constant N({}, {}) requested before it was fixed",
                    rs.root_string(r),
                    rs.root_string(s)
                ))
            }),
            (false, false) => {
                // N_{−a,−b} = −(p+1)²/N_{a,b}
                let (a, b) = (rs.negate(r), rs.negate(s));
                let p = rs.string_down(a, b) as i64;
                Ok(-Rational::from_integer((p + 1) * (p + 1)) / self.get(a, b)?)
            }
            (true, false) => {
                // r + s + (−t) = 0 gives N_{r,s}/|t|² = N_{s,−t}/|r|² = N_{−t,r}/|s|²
                let scale = rs.norm(t);
                if rs.is_positive(t) {
                    Ok(scale / rs.norm(r) * self.get(s, rs.negate(t))?)
                } else {
                    Ok(scale / rs.norm(s) * self.get(rs.negate(t), r)?)
                }
            }
            (false, true) => Ok(-self.get(s, r)?),
        }
    }
}

impl<F: ExactField> OracleReport<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Subspace::dim).collect()
    }
}
