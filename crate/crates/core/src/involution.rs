//! Root-level involutions induced by the conjugation of a real form.
//!
//! An involution is an integer matrix acting on coefficient vectors that
//! squares to the identity, permutes `Φ` and preserves the invariant
//! form. Non-split involutions are produced from the identity by chains of
//! partial Cayley transforms `σ ↦ s_γ ∘ σ` along mutually strongly
//! orthogonal roots, or supplied explicitly.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{Root, RootId, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Identity,
    Explicit,
    /// Cayley transforms applied left to right, starting from the identity.
    Cayley(Vec<Root>),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Identity => write!(f, "identity"),
            Provenance::Explicit => write!(f, "explicit"),
            Provenance::Cayley(chain) => {
                let parts: Vec<String> = chain.iter().map(Root::to_string).collect();
                write!(f, "cayley({})", parts.join(","))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct InvolutionData {
    matrix: Vec<Vec<i32>>,
    perm: Vec<RootId>,
    provenance: Provenance,
}

impl PartialEq for InvolutionData {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for InvolutionData {}

fn apply_matrix(m: &[Vec<i32>], beta: &Root) -> Root {
    Root::new(
        m.iter()
            .map(|row| row.iter().zip(beta.coeffs()).map(|(a, b)| a * b).sum())
            .collect(),
    )
}

impl InvolutionData {
    pub fn identity(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| i32::from(i == j)).collect())
            .collect();
        InvolutionData {
            matrix,
            perm: (0..rs.num_roots()).collect(),
            provenance: Provenance::Identity,
        }
    }

    /// Validates a user-supplied matrix (rows act on coefficient columns).
    pub fn from_matrix(rs: &RootSystem, matrix: Vec<Vec<i32>>) -> Result<Self> {
        Self::validated(rs, matrix, Provenance::Explicit)
    }

    fn validated(rs: &RootSystem, matrix: Vec<Vec<i32>>, provenance: Provenance) -> Result<Self> {
        let n = rs.rank();
        if matrix.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: matrix.len(),
            });
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: row.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let v: i32 = (0..n).map(|k| matrix[i][k] * matrix[k][j]).sum();
                if v != i32::from(i == j) {
                    return Err(Error::InvalidInvolution(
                        "matrix does not square to the identity".into(),
                    ));
                }
            }
        }
        let mut perm = Vec::with_capacity(rs.num_roots());
        for r in rs.roots() {
            let image = apply_matrix(&matrix, r);
            match rs.id_of(&image) {
                Some(id) => perm.push(id),
                None => {
                    return Err(Error::InvalidInvolution(format!(
                        "root {r} is mapped to {image}, which is not a root"
                    )))
                }
            }
        }
        let images: Vec<Root> = (0..n)
            .map(|j| apply_matrix(&matrix, &Root::simple(n, j)))
            .collect();
        for i in 0..n {
            for j in 0..n {
                if rs.kappa(&images[i], &images[j]) != rs.form()[i][j] {
                    return Err(Error::InvalidInvolution(
                        "matrix does not preserve the invariant form".into(),
                    ));
                }
            }
        }
        Ok(InvolutionData {
            matrix,
            perm,
            provenance,
        })
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.matrix
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Permutation of root ids induced by `σ`.
    pub fn permutation(&self) -> &[RootId] {
        &self.perm
    }

    pub fn apply(&self, beta: &Root) -> Root {
        apply_matrix(&self.matrix, beta)
    }

    pub fn apply_id(&self, id: RootId) -> RootId {
        self.perm[id]
    }

    pub fn apply_set(&self, set: &RootSet) -> RootSet {
        set.map(&self.perm)
    }

    pub fn fixed_roots(&self) -> Vec<RootId> {
        (0..self.perm.len())
            .filter(|&i| self.perm[i] == i)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn determinant(&self) -> i64 {
        determinant(&self.matrix)
    }

    /// `"0,1,0|1,0,0|0,0,1"`.
    pub fn matrix_string(&self) -> String {
        format_matrix(&self.matrix)
    }

    /// Partial Cayley transform along `γ`: `σ′(β) = σ(β) − ⟨β|γ⟩γ`.
    ///
    /// `γ` must be fixed by `σ`; for a Cayley-chain involution it must also
    /// be strongly orthogonal to every root already in the chain.
    pub fn cayley_update(&self, rs: &RootSystem, gamma: &Root) -> Result<Self> {
        let gid = rs.require(gamma)?;
        if self.perm[gid] != gid {
            return Err(Error::NotFixed {
                root: gamma.to_string(),
            });
        }
        let provenance = match &self.provenance {
            Provenance::Identity => Provenance::Cayley(vec![gamma.clone()]),
            Provenance::Cayley(chain) => {
                for earlier in chain {
                    let eid = rs.require(earlier)?;
                    if !strongly_orthogonal(rs, eid, gid) {
                        return Err(Error::NotStronglyOrthogonal {
                            root: gamma.to_string(),
                            earlier: earlier.to_string(),
                        });
                    }
                }
                let mut c = chain.clone();
                c.push(gamma.clone());
                Provenance::Cayley(c)
            }
            Provenance::Explicit => Provenance::Explicit,
        };
        let n = rs.rank();
        let mut columns = Vec::with_capacity(n);
        for j in 0..n {
            let beta = Root::simple(n, j);
            let image = rs.reflect(&self.apply(&beta), gamma)?;
            columns.push(image);
        }
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| columns[j].coeffs()[i]).collect())
            .collect();
        Self::validated(rs, matrix, provenance)
    }

    /// Applies a whole chain to the identity, left to right.
    pub fn from_cayley_chain(rs: &RootSystem, chain: &[Root]) -> Result<Self> {
        chain
            .iter()
            .try_fold(Self::identity(rs), |s, g| s.cayley_update(rs, g))
    }
}

/// `γ₁ ± γ₂ ∉ Φ` and `κ(γ₁, γ₂) = 0`.
pub fn strongly_orthogonal(rs: &RootSystem, g1: RootId, g2: RootId) -> bool {
    let (a, b) = (rs.root(g1), rs.root(g2));
    rs.id_of(&a.add(b)).is_none()
        && rs.id_of(&a.sub(b)).is_none()
        && num_traits::Zero::is_zero(&rs.kappa(a, b))
}

/// Every involution reachable from the identity by at most `max_len`
/// Cayley steps along mutually strongly orthogonal positive roots,
/// deduplicated by matrix. Ordered by chain length, then by chain ids;
/// each matrix keeps the first chain that produced it as provenance.
pub fn enumerate_cayley_involutions(rs: &RootSystem, max_len: usize) -> Vec<InvolutionData> {
    let id = InvolutionData::identity(rs);
    let mut seen: HashSet<Vec<Vec<i32>>> = HashSet::new();
    seen.insert(id.matrix.clone());
    let mut out = vec![id.clone()];
    // frontier: (last id in chain, chain ids, involution)
    let mut frontier: Vec<(Option<RootId>, Vec<RootId>, InvolutionData)> = vec![(None, vec![], id)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (last, chain, sigma) in &frontier {
            let start = last.map_or(0, |l| l + 1);
            for g in start..rs.num_positive() {
                if sigma.perm[g] != g || !chain.iter().all(|&c| strongly_orthogonal(rs, c, g)) {
                    continue;
                }
                let updated = sigma
                    .cayley_update(rs, rs.root(g))
                    .expect("admissible cayley step yields a valid involution");
                if seen.insert(updated.matrix.clone()) {
                    out.push(updated.clone());
                }
                let mut c = chain.clone();
                c.push(g);
                next.push((Some(g), c, updated));
            }
        }
        frontier = next;
    }
    out
}

pub fn format_matrix(m: &[Vec<i32>]) -> String {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("|")
}

/// Parses `"0,1,0|1,0,0|0,0,1"`.
pub fn parse_matrix(s: &str) -> Result<Vec<Vec<i32>>> {
    let bad = || Error::parse("matrix", s);
    let rows: Vec<Vec<i32>> = s
        .split('|')
        .map(|row| {
            row.split(',')
                .map(|e| e.trim().replace('−', "-").parse::<i32>())
                .collect::<std::result::Result<Vec<_>, _>>()
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| bad())?;
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(bad());
    }
    Ok(rows)
}

fn determinant(m: &[Vec<i32>]) -> i64 {
    // Bareiss fraction-free elimination.
    let n = m.len();
    let mut a: Vec<Vec<i64>> = m
        .iter()
        .map(|r| r.iter().map(|&v| v as i64).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i64;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}
