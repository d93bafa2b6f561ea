//! The combinatorial shadow of a CR-algebra `(g, q)` and its analysis.
//!
//! Every subspace that matters (`q`, `σq`, `q + σq`, `q ∩ σq` and the
//! kernel filtration) contains a σ-stable Cartan subalgebra and is a sum
//! of root spaces, so all of them are handled as root sets. The real
//! objects `g`, `H` and `g ∩ q` are never materialized.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involution::InvolutionData;
use crate::parabolic::ParabolicData;
use crate::rootset::{bracket_closure, is_bracket_closed, RootSet};
use crate::rootsys::RootSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitType {
    Open,
    TotallyReal,
    Cr,
}

impl fmt::Display for OrbitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitType::Open => "open",
            OrbitType::TotallyReal => "totally_real",
            OrbitType::Cr => "cr",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NondegeneracyOrder {
    /// `k`-nondegenerate, `k ≥ 1`.
    Finite(usize),
    /// Holomorphically degenerate.
    Degenerate,
    TotallyReal,
    Open,
}

impl NondegeneracyOrder {
    pub fn finite(self) -> Option<usize> {
        match self {
            NondegeneracyOrder::Finite(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for NondegeneracyOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NondegeneracyOrder::Finite(k) => write!(f, "{k}-nondegenerate"),
            NondegeneracyOrder::Degenerate => write!(f, "degenerate"),
            NondegeneracyOrder::TotallyReal => write!(f, "totally_real"),
            NondegeneracyOrder::Open => write!(f, "open"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryReport {
    /// `dim_ℂ Z = |Φ| − |Φ(q)|`.
    pub dim_z: usize,
    /// `dim_ℝ M = |Φ| − |Φ(q ∩ σq)|`.
    pub dim_r_m: usize,
    pub cr_dim: usize,
    pub cr_codim: usize,
    pub orbit_type: OrbitType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationResult {
    /// `Φ(q(0)), Φ(q(1)), …` up to and including the first repeated level.
    pub levels: Vec<RootSet>,
    pub stationary_index: usize,
    pub reached_infty: bool,
    pub order: Option<usize>,
    /// `|Φ(q(k))| − |Φ(q(∞))|` for each level.
    pub kernel_dims: Vec<usize>,
}

impl FiltrationResult {
    pub fn stationary_level(&self) -> &RootSet {
        &self.levels[self.stationary_index]
    }
}

#[derive(Clone, Debug)]
pub struct CrAlgebra<'a> {
    rs: &'a RootSystem,
    q: ParabolicData,
    sigma: InvolutionData,
    sigma_q: RootSet,
    q_plus: RootSet,
    q_infty: RootSet,
    gamma: RootSet,
}

impl<'a> CrAlgebra<'a> {
    pub fn analyze(rs: &'a RootSystem, q: ParabolicData, sigma: InvolutionData) -> Result<Self> {
        let sigma_q = sigma.apply_set(q.root_set());
        let q_plus = q.root_set().union(&sigma_q);
        let q_infty = q.root_set().intersection(&sigma_q);
        let gamma = RootSet::all_roots(rs).difference(&q_plus);
        let cr = CrAlgebra {
            rs,
            q,
            sigma,
            sigma_q,
            q_plus,
            q_infty,
            gamma,
        };
        cr.check_invariants()?;
        Ok(cr)
    }

    fn check_invariants(&self) -> Result<()> {
        let stable = |s: &RootSet| self.sigma.apply_set(s) == *s;
        if !stable(&self.q_plus) || !stable(&self.q_infty) {
            return Err(Error::Internal("q + σq or q ∩ σq is not σ-stable".into()));
        }
        if self.q_plus.len() != 2 * self.q.root_set().len() - self.q_infty.len() {
            return Err(Error::Internal("|q + σq| ≠ 2|q| − |q ∩ σq|".into()));
        }
        if !is_bracket_closed(self.rs, &self.q_infty) {
            return Err(Error::Internal("q ∩ σq is not a subalgebra".into()));
        }
        if self.gamma.len() == 1 {
            let g = self.gamma.iter().next().unwrap();
            if self.sigma.apply_id(g) != g {
                return Err(Error::Internal(
                    "hypersurface direction is not σ-fixed".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.q
    }

    pub fn sigma(&self) -> &InvolutionData {
        &self.sigma
    }

    pub fn q(&self) -> &RootSet {
        self.q.root_set()
    }

    pub fn sigma_q(&self) -> &RootSet {
        &self.sigma_q
    }

    pub fn q_plus(&self) -> &RootSet {
        &self.q_plus
    }

    pub fn q_infty(&self) -> &RootSet {
        &self.q_infty
    }

    /// Roots complementary to `q + σq`; `|Γ|` is the CR-codimension.
    pub fn gamma(&self) -> &RootSet {
        &self.gamma
    }

    pub fn orbit_type(&self) -> OrbitType {
        if self.q_plus.len() == self.rs.num_roots() {
            OrbitType::Open
        } else if self.q_plus == *self.q.root_set() {
            OrbitType::TotallyReal
        } else {
            OrbitType::Cr
        }
    }

    pub fn geometry(&self) -> GeometryReport {
        let total = self.rs.num_roots();
        let q = self.q.root_set().len();
        let qi = self.q_infty.len();
        GeometryReport {
            dim_z: total - q,
            dim_r_m: total - qi,
            cr_dim: q - qi,
            cr_codim: total - self.q_plus.len(),
            orbit_type: self.orbit_type(),
        }
    }

    /// One step `q(k) ↦ q(k+1)`: keep `α` unless some `β ∈ Φ(σq)` has
    /// `α + β ∈ Φ` outside `Φ(q(k)) ∪ Φ(σq)`.
    pub fn filtration_step(&self, level: &RootSet) -> RootSet {
        let allowed = level.union(&self.sigma_q);
        let sq: Vec<_> = self.sigma_q.iter().collect();
        RootSet::from_ids(
            level.universe(),
            level.iter().filter(|&a| {
                sq.iter()
                    .all(|&b| self.rs.sum_id(a, b).is_none_or(|s| allowed.contains(s)))
            }),
        )
    }

    pub fn filtration(&self) -> Result<FiltrationResult> {
        let cap = self.q.root_set().len() - self.q_infty.len() + 1;
        let mut levels = vec![self.q.root_set().clone()];
        loop {
            let cur = levels.last().unwrap();
            let next = self.filtration_step(cur);
            if next == *cur {
                break;
            }
            if !next.is_subset(cur) || !self.q_infty.is_subset(&next) {
                return Err(Error::Internal(
                    "filtration left q ∩ σq ⊆ q(k+1) ⊆ q(k)".into(),
                ));
            }
            levels.push(next);
            if levels.len() > cap {
                return Err(Error::Internal("filtration failed to stabilize".into()));
            }
        }
        let stationary_index = levels.len() - 1;
        let reached_infty = levels[stationary_index] == self.q_infty;
        let order = (reached_infty && stationary_index >= 1 && self.orbit_type() == OrbitType::Cr)
            .then_some(stationary_index);
        let kernel_dims = levels
            .iter()
            .map(|l| l.len() - self.q_infty.len())
            .collect();
        Ok(FiltrationResult {
            levels,
            stationary_index,
            reached_infty,
            order,
            kernel_dims,
        })
    }

    pub fn nondegeneracy_order(&self) -> Result<NondegeneracyOrder> {
        Ok(match self.orbit_type() {
            OrbitType::Open => NondegeneracyOrder::Open,
            OrbitType::TotallyReal => NondegeneracyOrder::TotallyReal,
            OrbitType::Cr => {
                let f = self.filtration()?;
                match f.order {
                    Some(k) => {
                        if k > self.q.root_set().len() - self.q_infty.len() {
                            return Err(Error::Internal("order exceeds dim q − dim q∩σq".into()));
                        }
                        NondegeneracyOrder::Finite(k)
                    }
                    None => NondegeneracyOrder::Degenerate,
                }
            }
        })
    }

    /// For a degenerate CR orbit, the subalgebra `r = q + σq(n)` built from
    /// the stationary level `q(n) ≠ q(∞)`; it satisfies `q ⊊ r ⊆ q + σq`.
    pub fn holomorphic_degeneracy_witness(&self) -> Result<Option<RootSet>> {
        let t = self.orbit_type();
        if t != OrbitType::Cr {
            return Err(Error::WrongOrbitType(t.to_string()));
        }
        let f = self.filtration()?;
        let stat = f.stationary_level();
        if f.reached_infty {
            return Ok(None);
        }
        let r = self.q.root_set().union(&self.sigma.apply_set(stat));
        let q = self.q.root_set();
        if !(q.is_subset(&r) && r != *q && r.is_subset(&self.q_plus)) {
            return Err(Error::Internal(
                "witness is not strictly between q and q + σq".into(),
            ));
        }
        if !is_bracket_closed(self.rs, &r) {
            return Err(Error::Internal("witness is not a subalgebra".into()));
        }
        Ok(Some(r))
    }

    /// Does `q + σq` generate the whole algebra?
    pub fn is_minimal(&self) -> bool {
        bracket_closure(self.rs, &self.q_plus).len() == self.rs.num_roots()
    }
}
