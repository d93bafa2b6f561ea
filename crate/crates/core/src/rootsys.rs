//! Finite reduced root systems of the simple types A–G.
//!
//! Roots are coefficient vectors over the simple roots in Bourbaki
//! numbering. The invariant form is normalized so that long roots have
//! squared length 2; every quantity is an integer or an exact rational.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Rational;

/// Index into [`RootSystem::roots`]. Positive roots come first, in
/// height order, followed by their negatives in the same order.
pub type RootId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Valid ranks of this family up to `max_rank`, ascending.
    pub fn ranks_up_to(self, max_rank: usize) -> Vec<usize> {
        (1..=max_rank).filter(|&n| self.is_valid_rank(n)).collect()
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    /// Number of positive roots of the type `(self, rank)`.
    pub fn positive_root_count(self, rank: usize) -> usize {
        match self {
            Family::A => rank * (rank + 1) / 2,
            Family::B | Family::C => rank * rank,
            Family::D => rank * (rank - 1),
            Family::E => match rank {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A vector of the root lattice, written in the basis of simple roots.
///
/// Not every `Root` value is a root; membership is decided by
/// [`RootSystem::id_of`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn simple(rank: usize, index: usize) -> Self {
        let mut c = vec![0; rank];
        c[index] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i32) -> Root {
        Root(self.0.iter().map(|a| k * a).collect())
    }

    pub fn neg(&self) -> Root {
        self.scaled(-1)
    }

    /// Coefficient-wise partial order: `self - other` has no negative entry.
    pub fn dominates(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for Root {
    /// `-112` style: a sign followed by one digit per coefficient, or
    /// `(1,-2,3)` when a digit string cannot represent the vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let all_nonneg = self.0.iter().all(|&c| c >= 0);
        let all_nonpos = self.0.iter().all(|&c| c <= 0);
        let small = self.0.iter().all(|&c| c.abs() <= 9);
        if self.0.len() <= 9 && small && (all_nonneg || all_nonpos) {
            if !all_nonneg {
                write!(f, "-")?;
            }
            for c in &self.0 {
                write!(f, "{}", c.abs())?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl FromStr for Root {
    type Err = Error;

    /// Accepts `-112`, `−112`, `(1,1,2)`, `(-1,-1,-2)` and bare `1,1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::parse("root", s);
        if t.is_empty() {
            return Err(bad());
        }
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        if inner.contains(',') || t.starts_with('(') {
            let coeffs = inner
                .split(',')
                .map(|p| p.trim().replace('−', "-").parse::<i32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            return Ok(Root(coeffs));
        }
        let (sign, digits) = if let Some(r) = t.strip_prefix('-') {
            (-1, r)
        } else if let Some(r) = t.strip_prefix('−') {
            (-1, r)
        } else if let Some(r) = t.strip_prefix('+') {
            (1, r)
        } else {
            (1, t)
        };
        if digits.is_empty() {
            return Err(bad());
        }
        let coeffs = digits
            .chars()
            .map(|c| c.to_digit(10).map(|d| sign * d as i32))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(bad)?;
        Ok(Root(coeffs))
    }
}

/// Outcome of adding two roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSum {
    Root(RootId),
    Zero,
    NotARoot,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    form: Vec<Vec<Rational>>,
    roots: Vec<Root>,
    lookup: HashMap<Root, RootId>,
    num_positive: usize,
    highest: RootId,
    sums: Vec<Option<RootId>>,
    norms: Vec<Rational>,
}

/// Cartan matrix `A[i][j] = 2(αi,αj)/(αj,αj)` and squared lengths of the
/// simple roots, Bourbaki numbering.
fn dynkin_data(family: Family, n: usize) -> (Vec<Vec<i32>>, Vec<Rational>) {
    let mut a = vec![vec![0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let two = Rational::from_integer(2);
    let one = Rational::one();
    let mut lens = vec![two; n];
    let link = |a: &mut Vec<Vec<i32>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        Family::A => {
            for i in 1..n {
                link(&mut a, i - 1, i);
            }
        }
        Family::B => {
            for i in 1..n {
                link(&mut a, i - 1, i);
            }
            // long α_{n-1}, short α_n
            a[n - 2][n - 1] = -2;
            lens[n - 1] = one;
        }
        Family::C => {
            for i in 1..n {
                link(&mut a, i - 1, i);
            }
            // short α_{n-1}, long α_n
            a[n - 1][n - 2] = -2;
            for l in lens.iter_mut().take(n - 1) {
                *l = one;
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(&mut a, i - 1, i);
            }
            link(&mut a, n - 3, n - 1);
        }
        Family::E => {
            // 1-3-4-5-…-n with 2 attached to 4
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            for i in 3..n {
                link(&mut a, i - 1, i);
            }
        }
        Family::F => {
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            a[1][2] = -2;
            lens[2] = one;
            lens[3] = one;
        }
        Family::G => {
            // short α1, long α2
            a[0][1] = -1;
            a[1][0] = -3;
            lens[0] = Rational::new(2, 3);
        }
    }
    (a, lens)
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.is_valid_rank(rank) {
            return Err(Error::InvalidType { family, rank });
        }
        let (cartan, lens) = dynkin_data(family, rank);
        let form: Vec<Vec<Rational>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| Rational::from_integer(cartan[i][j] as i64) * lens[j] / 2)
                    .collect()
            })
            .collect();

        let positives = generate_positive_roots(&cartan);
        let num_positive = positives.len();
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(Root::neg));
        let lookup: HashMap<Root, RootId> = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();

        let mut sums = vec![None; roots.len() * roots.len()];
        for (i, a) in roots.iter().enumerate() {
            for (j, b) in roots.iter().enumerate() {
                sums[i * roots.len() + j] = lookup.get(&a.add(b)).copied();
            }
        }

        let highest = (0..num_positive)
            .max_by_key(|&i| roots[i].height())
            .expect("root systems are non-empty");

        let mut rs = RootSystem {
            family,
            rank,
            cartan,
            form,
            roots,
            lookup,
            num_positive,
            highest,
            sums,
            norms: Vec::new(),
        };
        rs.norms = rs.roots.iter().map(|r| rs.kappa(r, r)).collect();
        debug_assert!(rs
            .positive_ids()
            .all(|i| rs.roots[highest].dominates(&rs.roots[i])));
        Ok(rs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `"B3"`, `"E8"`, …
    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Gram matrix of the invariant form on the simple roots.
    pub fn form(&self) -> &[Vec<Rational>] {
        &self.form
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn positive_ids(&self) -> std::ops::Range<RootId> {
        0..self.num_positive
    }

    pub fn negative_ids(&self) -> std::ops::Range<RootId> {
        self.num_positive..self.roots.len()
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id < self.num_positive
    }

    pub fn negate(&self, id: RootId) -> RootId {
        if id < self.num_positive {
            id + self.num_positive
        } else {
            id - self.num_positive
        }
    }

    /// Id of the `index`-th simple root (0-based).
    pub fn simple_id(&self, index: usize) -> RootId {
        self.lookup[&Root::simple(self.rank, index)]
    }

    pub fn id_of(&self, root: &Root) -> Option<RootId> {
        self.lookup.get(root).copied()
    }

    pub fn require(&self, root: &Root) -> Result<RootId> {
        if root.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: root.rank(),
            });
        }
        self.id_of(root)
            .ok_or_else(|| Error::NotARoot(root.to_string()))
    }

    pub fn parse_root(&self, s: &str) -> Result<RootId> {
        self.require(&s.parse()?)
    }

    pub fn root_string(&self, id: RootId) -> String {
        self.roots[id].to_string()
    }

    /// The invariant form `κ(β, γ)` on lattice vectors.
    pub fn kappa(&self, beta: &Root, gamma: &Root) -> Rational {
        let mut acc = Rational::zero();
        for (i, &b) in beta.coeffs().iter().enumerate() {
            if b == 0 {
                continue;
            }
            for (j, &g) in gamma.coeffs().iter().enumerate() {
                if g != 0 {
                    acc += self.form[i][j] * Rational::from_integer((b * g) as i64);
                }
            }
        }
        acc
    }

    /// Squared length `κ(α, α)` of a root.
    pub fn norm(&self, id: RootId) -> Rational {
        self.norms[id]
    }

    /// `⟨β|γ⟩ = 2κ(β,γ)/κ(γ,γ)`. An integer whenever both are roots.
    pub fn pairing(&self, beta: &Root, gamma: &Root) -> Result<Rational> {
        let den = self.kappa(gamma, gamma);
        if den.is_zero() {
            return Err(Error::ZeroPairing);
        }
        Ok(self.kappa(beta, gamma) * 2 / den)
    }

    /// Cartan integer `⟨β|γ⟩` for two roots.
    pub fn pairing_ids(&self, beta: RootId, gamma: RootId) -> i32 {
        let v = self.kappa(&self.roots[beta], &self.roots[gamma]) * 2 / self.norms[gamma];
        debug_assert!(v.is_integer());
        v.to_integer() as i32
    }

    pub fn add_roots(&self, beta: &Root, gamma: &Root) -> RootSum {
        let s = beta.add(gamma);
        if s.is_zero() {
            RootSum::Zero
        } else {
            match self.id_of(&s) {
                Some(id) => RootSum::Root(id),
                None => RootSum::NotARoot,
            }
        }
    }

    /// Id of `α + β` if that is a root. `α + (−α)` yields `None`.
    #[inline]
    pub fn sum_id(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sums[a * self.roots.len() + b]
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn highest_root_id(&self) -> RootId {
        self.highest
    }

    /// Largest coefficient of the highest root.
    pub fn highest_coefficient(&self) -> i32 {
        *self.highest_root().coeffs().iter().max().unwrap()
    }

    /// `s_γ(β) = β − ⟨β|γ⟩γ`.
    pub fn reflect(&self, beta: &Root, gamma: &Root) -> Result<Root> {
        let p = self.pairing(beta, gamma)?;
        if !p.is_integer() {
            return Err(Error::Internal(format!(
                "non-integral pairing <{beta}|{gamma}> = {p}"
            )));
        }
        Ok(beta.sub(&gamma.scaled(p.to_integer() as i32)))
    }

    /// Largest `p` with `β − pα ∈ Φ`.
    pub fn string_down(&self, alpha: RootId, beta: RootId) -> i32 {
        let a = &self.roots[alpha];
        let mut cur = self.roots[beta].clone();
        let mut p = 0;
        loop {
            cur = cur.sub(a);
            if self.id_of(&cur).is_none() {
                return p;
            }
            p += 1;
        }
    }
}

/// Positive roots by height via root strings, ordered by height and then
/// by descending coefficient vector (`100` before `010`).
fn generate_positive_roots(cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    let simple: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut known: std::collections::HashSet<Root> = simple.iter().cloned().collect();
    let mut all = simple.clone();
    let mut layer = simple.clone();
    // ⟨β, αi∨⟩ = Σ_j c_j A[j][i]
    let coroot_pair = |b: &Root, i: usize| -> i32 {
        b.coeffs()
            .iter()
            .enumerate()
            .map(|(j, &c)| c * cartan[j][i])
            .sum()
    };
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for (i, alpha) in simple.iter().enumerate() {
                if beta == alpha {
                    continue;
                }
                let mut p = 0;
                let mut down = beta.sub(alpha);
                while known.contains(&down) {
                    p += 1;
                    down = down.sub(alpha);
                }
                let q = p - coroot_pair(beta, i);
                if q > 0 {
                    let up = beta.add(alpha);
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Root {
        s.parse().unwrap()
    }

    #[test]
    fn b3_positive_roots() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        let pos: Vec<String> = rs.positive_ids().map(|i| rs.root_string(i)).collect();
        assert_eq!(
            pos,
            ["100", "010", "001", "110", "011", "111", "012", "112", "122"]
        );
        assert_eq!(rs.root_string(rs.highest_root_id()), "122");
    }

    #[test]
    fn counts_match_standard_tables() {
        for fam in Family::ALL {
            for n in fam.ranks_up_to(8) {
                let rs = RootSystem::new(fam, n).unwrap();
                assert_eq!(rs.num_positive(), fam.positive_root_count(n), "{fam}{n}");
            }
        }
    }

    #[test]
    fn rank_one() {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        assert_eq!(rs.num_roots(), 2);
        assert_eq!(rs.root_string(0), "1");
        assert_eq!(rs.root_string(1), "-1");
    }

    #[test]
    fn invalid_types_rejected() {
        for (f, n) in [
            (Family::A, 0),
            (Family::B, 1),
            (Family::C, 2),
            (Family::D, 3),
            (Family::E, 5),
            (Family::E, 9),
            (Family::F, 3),
            (Family::G, 3),
        ] {
            assert_eq!(
                RootSystem::new(f, n).unwrap_err(),
                Error::InvalidType { family: f, rank: n }
            );
        }
    }

    #[test]
    fn highest_roots() {
        let g2 = RootSystem::new(Family::G, 2).unwrap();
        assert_eq!(g2.highest_root().coeffs(), &[3, 2]);
        let e8 = RootSystem::new(Family::E, 8).unwrap();
        assert_eq!(e8.highest_coefficient(), 6);
        let a5 = RootSystem::new(Family::A, 5).unwrap();
        assert_eq!(a5.highest_root().coeffs(), &[1; 5]);
    }

    #[test]
    fn pairings_b3() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        assert_eq!(
            rs.pairing(&r("100"), &r("111")).unwrap(),
            Rational::from_integer(2)
        );
        assert_eq!(rs.pairing(&r("012"), &r("010")).unwrap(), Rational::zero());
        for root in rs.roots() {
            assert_eq!(rs.pairing(root, root).unwrap(), Rational::from_integer(2));
        }
        assert_eq!(rs.pairing(&r("100"), &r("000")), Err(Error::ZeroPairing));
        // short root of length 1, long of length 2
        assert_eq!(rs.kappa(&r("001"), &r("001")), Rational::one());
        assert_eq!(rs.kappa(&r("010"), &r("010")), Rational::from_integer(2));
    }

    #[test]
    fn pairing_of_non_roots_can_be_fractional() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        // ⟨100|010+010⟩ = 2·(−2)/8
        assert_eq!(
            rs.pairing(&r("100"), &r("020")).unwrap(),
            Rational::new(-1, 2)
        );
    }

    #[test]
    fn form_reproduces_cartan_matrix() {
        for fam in Family::ALL {
            for n in fam.ranks_up_to(8) {
                let rs = RootSystem::new(fam, n).unwrap();
                for i in 0..n {
                    for j in 0..n {
                        assert_eq!(rs.form()[i][j], rs.form()[j][i], "{fam}{n} not symmetric");
                        let p = rs
                            .pairing(&Root::simple(n, i), &Root::simple(n, j))
                            .unwrap();
                        assert_eq!(p, Rational::from_integer(rs.cartan_matrix()[i][j] as i64));
                    }
                }
            }
        }
    }

    #[test]
    fn add_roots_cases() {
        let b3 = RootSystem::new(Family::B, 3).unwrap();
        assert_eq!(
            b3.add_roots(&r("011"), &r("001")),
            RootSum::Root(b3.id_of(&r("012")).unwrap())
        );
        assert_eq!(b3.add_roots(&r("112"), &r("-112")), RootSum::Zero);
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(a2.add_roots(&r("10"), &r("11")), RootSum::NotARoot);
    }

    #[test]
    fn root_strings_round_trip() {
        assert_eq!(r("-112").coeffs(), &[-1, -1, -2]);
        assert_eq!(r("−122").coeffs(), &[-1, -2, -2]);
        assert_eq!(r("(1,2,2)").coeffs(), &[1, 2, 2]);
        assert_eq!(r("0,1,0").coeffs(), &[0, 1, 0]);
        assert_eq!(Root::new(vec![1, -1]).to_string(), "(1,-1)");
        assert_eq!(Root::new(vec![0, 12]).to_string(), "(0,12)");
        assert_eq!(Root::new(vec![1; 10]).to_string(), "(1,1,1,1,1,1,1,1,1,1)");
        assert!("".parse::<Root>().is_err());
        assert!("1a2".parse::<Root>().is_err());
        assert!("-".parse::<Root>().is_err());
    }

    #[test]
    fn reflection_closure() {
        for (f, n) in [
            (Family::B, 3),
            (Family::G, 2),
            (Family::F, 4),
            (Family::C, 3),
        ] {
            let rs = RootSystem::new(f, n).unwrap();
            for b in rs.roots() {
                for g in rs.roots() {
                    let s = rs.reflect(b, g).unwrap();
                    assert!(rs.id_of(&s).is_some(), "{f}{n}: s_{g}({b}) = {s}");
                }
            }
        }
    }

    #[test]
    fn unbroken_root_strings() {
        for (f, n) in [
            (Family::B, 3),
            (Family::G, 2),
            (Family::C, 4),
            (Family::D, 4),
        ] {
            let rs = RootSystem::new(f, n).unwrap();
            for a in 0..rs.num_roots() {
                for b in 0..rs.num_roots() {
                    if b == a || b == rs.negate(a) {
                        continue;
                    }
                    let (ra, rb) = (rs.root(a), rs.root(b));
                    let p = rs.string_down(a, b);
                    let mut q = 0;
                    while rs.id_of(&rb.add(&ra.scaled(q + 1))).is_some() {
                        q += 1;
                    }
                    // p − q = ⟨β|α⟩ holds only when the string has no gaps
                    assert_eq!(p - q, rs.pairing_ids(b, a), "{f}{n} {ra} through {rb}");
                }
            }
        }
    }

    #[test]
    fn kappa_is_additive() {
        let rs = RootSystem::new(Family::F, 4).unwrap();
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if let Some(s) = rs.sum_id(a, b) {
                    for d in [0, 5, 17, 30] {
                        let lhs = rs.kappa(rs.root(s), rs.root(d));
                        let rhs =
                            rs.kappa(rs.root(a), rs.root(d)) + rs.kappa(rs.root(b), rs.root(d));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
