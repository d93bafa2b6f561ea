//! Batch sweeps over `(family, rank, parabolic, involution)` with the
//! global hypersurface and maximal-parabolic theorems checked on every row.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chevalley::ChevalleyAlgebra;
use crate::cralgebra::{CrAlgebra, NondegeneracyOrder, OrbitType};
use crate::error::{Error, Result};
use crate::involution::{enumerate_cayley_involutions, format_matrix, InvolutionData, Provenance};
use crate::parabolic::ParabolicData;
use crate::rootsys::{Family, RootSystem};
use crate::Rational;

/// Where the involutions of a sweep come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionSource {
    /// All Cayley chains of at most this length, deduplicated by matrix.
    CayleyDepth(usize),
    /// Fixed matrices; each is tried on every root system of matching
    /// rank and skipped where it is not an admissible involution.
    Explicit(Vec<Vec<Vec<i32>>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyConfig {
    pub families: Vec<Family>,
    pub max_rank: usize,
    pub involutions: InvolutionSource,
    pub hypersurface_only: bool,
    pub oracle_max_rank: usize,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        SurveyConfig {
            families: vec![Family::A, Family::B, Family::C, Family::D, Family::G],
            max_rank: 4,
            involutions: InvolutionSource::CayleyDepth(3),
            hypersurface_only: false,
            oracle_max_rank: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub family: Family,
    pub rank: usize,
    pub qr: Vec<usize>,
    pub provenance: Provenance,
    pub sigma: String,
    pub orbit_type: OrbitType,
    pub cr_codim: usize,
    pub order: NondegeneracyOrder,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c_of_q: Option<i32>,
    /// Only set for finite-order rows with a maximal parabolic.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound_satisfied: Option<bool>,
    pub minimal: bool,
    pub oracle_checked: bool,
}

impl SurveyRow {
    pub fn is_maximal(&self) -> bool {
        self.c_of_q.is_some()
    }

    pub fn reproducer(&self) -> Reproducer {
        Reproducer {
            family: self.family,
            rank: self.rank,
            qr: self.qr.clone(),
            provenance: self.provenance.clone(),
            sigma: self.sigma.clone(),
        }
    }
}

/// Enough to rerun a single case from the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reproducer {
    pub family: Family,
    pub rank: usize,
    pub qr: Vec<usize>,
    pub provenance: Provenance,
    pub sigma: String,
}

impl fmt::Display for Reproducer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let qr: Vec<String> = self.qr.iter().map(usize::to_string).collect();
        write!(
            f,
            "{}{} qr={{{}}} chain={} (analyze --family {} --rank {} --parabolic '{}' --sigma-matrix '{}')",
            self.family,
            self.rank,
            qr.join(","),
            self.provenance,
            self.family,
            self.rank,
            qr.join(","),
            self.sigma
        )
    }
}

struct TypeJob {
    rs: RootSystem,
    oracle: Option<ChevalleyAlgebra>,
    involutions: Vec<InvolutionData>,
}

fn subsets(rank: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << rank)
        .map(|mask| (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect();
    out.sort();
    out
}

fn involutions_for(rs: &RootSystem, source: &InvolutionSource) -> Vec<InvolutionData> {
    match source {
        InvolutionSource::CayleyDepth(d) => enumerate_cayley_involutions(rs, *d),
        InvolutionSource::Explicit(ms) => ms
            .iter()
            .filter(|m| m.len() == rs.rank())
            .filter_map(|m| InvolutionData::from_matrix(rs, m.clone()).ok())
            .collect(),
    }
}

/// Runs the sweep. Rows come back sorted by family, rank, parabolic subset
/// and involution index. The first failing case aborts the sweep.
pub fn run_survey(config: &SurveyConfig) -> Result<Vec<SurveyRow>> {
    let mut families = config.families.clone();
    families.sort();
    families.dedup();

    let mut types = Vec::new();
    for &family in &families {
        for rank in family.ranks_up_to(config.max_rank) {
            types.push((family, rank));
        }
    }
    let jobs: Vec<TypeJob> = types
        .par_iter()
        .map(|&(family, rank)| {
            let rs = RootSystem::new(family, rank)?;
            let oracle = if rank <= config.oracle_max_rank {
                Some(ChevalleyAlgebra::new(&rs)?)
            } else {
                None
            };
            let involutions = involutions_for(&rs, &config.involutions);
            Ok(TypeJob {
                rs,
                oracle,
                involutions,
            })
        })
        .collect::<Result<_>>()?;

    let mut cases = Vec::new();
    for (j, job) in jobs.iter().enumerate() {
        for qr in subsets(job.rs.rank()) {
            for s in 0..job.involutions.len() {
                cases.push((j, qr.clone(), s));
            }
        }
    }

    let rows: Vec<Option<SurveyRow>> = cases
        .par_iter()
        .map(|(j, qr, s)| {
            let job = &jobs[*j];
            survey_case(job, qr, &job.involutions[*s], config.hypersurface_only)
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

fn survey_case(
    job: &TypeJob,
    qr: &[usize],
    sigma: &InvolutionData,
    hypersurface_only: bool,
) -> Result<Option<SurveyRow>> {
    let rs = &job.rs;
    let repro = Reproducer {
        family: rs.family(),
        rank: rs.rank(),
        qr: qr.to_vec(),
        provenance: sigma.provenance().clone(),
        sigma: format_matrix(sigma.matrix()),
    };
    let wrap = |e: Error| Error::CaseFailed {
        reproducer: repro.to_string(),
        source: Box::new(e),
    };

    let q = ParabolicData::from_subset(rs, qr).map_err(wrap)?;
    let cr = CrAlgebra::analyze(rs, q, sigma.clone()).map_err(wrap)?;
    let geo = cr.geometry();
    if hypersurface_only && geo.cr_codim != 1 {
        return Ok(None);
    }
    let order = cr.nondegeneracy_order().map_err(wrap)?;
    let minimal = cr.is_minimal();
    let c_of_q = cr.parabolic().c_of_q(rs).ok();

    let mut oracle_checked = false;
    if let Some(ca) = &job.oracle {
        ca.cross_check::<Rational>(&cr).map_err(wrap)?;
        oracle_checked = true;
    }

    let bound_satisfied = match (order, c_of_q) {
        (NondegeneracyOrder::Finite(k), Some(c)) => Some(k as i32 <= c + 1),
        _ => None,
    };
    let row = SurveyRow {
        family: rs.family(),
        rank: rs.rank(),
        qr: qr.to_vec(),
        provenance: sigma.provenance().clone(),
        sigma: repro.sigma.clone(),
        orbit_type: geo.orbit_type,
        cr_codim: geo.cr_codim,
        order,
        c_of_q,
        bound_satisfied,
        minimal,
        oracle_checked,
    };

    if row.orbit_type == OrbitType::Cr {
        let witness = cr.holomorphic_degeneracy_witness().map_err(wrap)?;
        if witness.is_some() != (order == NondegeneracyOrder::Degenerate) {
            return Err(violation(
                &row,
                "degeneracy witness exists iff the filtration stalls",
            ));
        }
    }
    check_theorems(&row)?;
    Ok(Some(row))
}

fn violation(row: &SurveyRow, message: &str) -> Error {
    Error::TheoremViolation {
        message: message.to_string(),
        reproducer: row.reproducer().to_string(),
    }
}

/// Checks one row against the hypersurface theorem and the
/// maximal-parabolic theorem. The order bounds are asserted only for
/// hypersurfaces; higher codimension rows just record `bound_satisfied`.
pub fn check_theorems(row: &SurveyRow) -> Result<()> {
    if row.orbit_type != OrbitType::Cr {
        return Ok(());
    }
    let finite = row.order.finite();
    if row.is_maximal() && (finite.is_none() || !row.minimal) {
        return Err(violation(
            row,
            "maximal parabolic CR orbit must be finitely nondegenerate and minimal",
        ));
    }
    if row.cr_codim == 1 {
        if finite.is_some() && !row.is_maximal() {
            return Err(violation(
                row,
                "finitely nondegenerate hypersurface with non-maximal parabolic",
            ));
        }
        if !row.is_maximal() && row.order != NondegeneracyOrder::Degenerate {
            return Err(violation(
                row,
                "non-maximal hypersurface must be degenerate",
            ));
        }
        if row.bound_satisfied == Some(false) {
            return Err(violation(row, "order exceeds c(q) + 1"));
        }
        if let Some(k) = finite {
            if row.family.is_classical() && k > 3 {
                return Err(violation(row, "classical hypersurface with order above 3"));
            }
            if k > 7 {
                return Err(violation(row, "order above 7"));
            }
        }
    }
    Ok(())
}

/// Ranks at which [`highest_coefficient_table`] samples each family.
pub fn representative_types() -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for rank in family.ranks_up_to(8) {
            out.push((family, rank));
        }
    }
    out
}

/// `c(l)`, the largest coefficient of the highest root.
pub fn highest_coefficient_table() -> BTreeMap<(Family, usize), i32> {
    representative_types()
        .into_iter()
        .map(|(f, n)| {
            let rs = RootSystem::new(f, n).expect("representative types are valid");
            ((f, n), rs.highest_coefficient())
        })
        .collect()
}
