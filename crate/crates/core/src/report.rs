//! Single-case analysis report with JSON and plain-text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chevalley::ChevalleyAlgebra;
use crate::cralgebra::{CrAlgebra, NondegeneracyOrder, OrbitType};
use crate::error::Result;
use crate::involution::{format_matrix, InvolutionData, Provenance};
use crate::parabolic::ParabolicData;
use crate::rootsys::{Family, RootSystem};
use crate::Rational;

/// Keys that do not apply to the orbit type are left out of the JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub family: Family,
    pub rank: usize,
    pub parabolic: Vec<usize>,
    pub sigma: Vec<Vec<i32>>,
    pub provenance: Provenance,
    pub orbit_type: OrbitType,
    #[serde(rename = "dim_Z")]
    pub dim_z: usize,
    #[serde(rename = "dimR_M")]
    pub dim_r_m: usize,
    pub cr_dim: usize,
    pub cr_codim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub filtration: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kernel_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degenerate: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<String>>,
    pub minimal: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c_of_q: Option<i32>,
    pub oracle_checked: bool,
}

impl AnalysisReport {
    /// Analyzes one case. With `oracle` set, the Chevalley cross-check runs
    /// and any disagreement is returned as an error.
    pub fn build(
        rs: &RootSystem,
        qr: &[usize],
        sigma: InvolutionData,
        oracle: bool,
    ) -> Result<Self> {
        let q = ParabolicData::from_subset(rs, qr)?;
        let cr = CrAlgebra::analyze(rs, q, sigma)?;
        let geo = cr.geometry();
        let is_cr = geo.orbit_type == OrbitType::Cr;

        let (filtration, kernel_dims, order, degenerate, witness) = if is_cr {
            let f = cr.filtration()?;
            let levels = f.levels.iter().map(|l| l.to_strings(rs)).collect();
            let ord = cr.nondegeneracy_order()?;
            let w = cr.holomorphic_degeneracy_witness()?;
            (
                Some(levels),
                Some(f.kernel_dims.clone()),
                ord.finite(),
                Some(ord == NondegeneracyOrder::Degenerate),
                w.map(|r| r.to_strings(rs)),
            )
        } else {
            (None, None, None, None, None)
        };

        if oracle {
            ChevalleyAlgebra::new(rs)?.cross_check::<Rational>(&cr)?;
        }

        Ok(AnalysisReport {
            family: rs.family(),
            rank: rs.rank(),
            parabolic: cr.parabolic().qr_vec(),
            sigma: cr.sigma().matrix().to_vec(),
            provenance: cr.sigma().provenance().clone(),
            orbit_type: geo.orbit_type,
            dim_z: geo.dim_z,
            dim_r_m: geo.dim_r_m,
            cr_dim: geo.cr_dim,
            cr_codim: geo.cr_codim,
            filtration,
            kernel_dims,
            order,
            degenerate,
            witness,
            minimal: cr.is_minimal(),
            c_of_q: cr.parabolic().c_of_q(rs).ok(),
            oracle_checked: oracle,
        })
    }

    pub fn nondegeneracy(&self) -> NondegeneracyOrder {
        match (self.orbit_type, self.order) {
            (OrbitType::Open, _) => NondegeneracyOrder::Open,
            (OrbitType::TotallyReal, _) => NondegeneracyOrder::TotallyReal,
            (OrbitType::Cr, Some(k)) => NondegeneracyOrder::Finite(k),
            (OrbitType::Cr, None) => NondegeneracyOrder::Degenerate,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One `key: value` line per field, in JSON key order.
    pub fn to_text(&self) -> String {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let mut s = String::new();
        let _ = writeln!(s, "family: {}", self.family);
        let _ = writeln!(s, "rank: {}", self.rank);
        let _ = writeln!(s, "parabolic: {}", join(&self.parabolic));
        let _ = writeln!(s, "sigma: {}", format_matrix(&self.sigma));
        let _ = writeln!(s, "provenance: {}", self.provenance);
        let _ = writeln!(s, "orbit_type: {}", self.orbit_type);
        let _ = writeln!(s, "dim_Z: {}", self.dim_z);
        let _ = writeln!(s, "dimR_M: {}", self.dim_r_m);
        let _ = writeln!(s, "cr_dim: {}", self.cr_dim);
        let _ = writeln!(s, "cr_codim: {}", self.cr_codim);
        if let Some(levels) = &self.filtration {
            let _ = writeln!(s, "filtration:");
            for (k, l) in levels.iter().enumerate() {
                let _ = writeln!(s, "  q({k}): {{{}}}", l.join(", "));
            }
        }
        if let Some(d) = &self.kernel_dims {
            let _ = writeln!(s, "kernel_dims: {}", join(d));
        }
        if let Some(k) = self.order {
            let _ = writeln!(s, "order: {k}");
        }
        if let Some(d) = self.degenerate {
            let _ = writeln!(s, "degenerate: {d}");
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness: {{{}}}", w.join(", "));
        }
        let _ = writeln!(s, "minimal: {}", self.minimal);
        if let Some(c) = self.c_of_q {
            let _ = writeln!(s, "c_of_q: {c}");
        }
        let _ = writeln!(s, "oracle_checked: {}", self.oracle_checked);
        let _ = writeln!(s, "result: {}", self.nondegeneracy());
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Root;

    fn golden() -> AnalysisReport {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        let chain = [Root::new(vec![0, 1, 0]), Root::new(vec![1, 1, 1])];
        let sigma = InvolutionData::from_cayley_chain(&rs, &chain).unwrap();
        AnalysisReport::build(&rs, &[1, 3], sigma, true).unwrap()
    }

    #[test]
    fn b3_report() {
        let r = golden();
        assert_eq!(r.order, Some(3));
        assert_eq!(r.degenerate, Some(false));
        assert_eq!(r.kernel_dims.as_deref(), Some(&[6, 3, 1, 0][..]));
        assert_eq!(r.c_of_q, Some(2));
        assert!(r.witness.is_none());
        assert!(r.to_text().contains("result: 3-nondegenerate"));
    }

    #[test]
    fn json_round_trip() {
        let r = golden();
        let back: AnalysisReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["dim_Z"], 7);
        assert_eq!(v["dimR_M"], 13);
    }

    #[test]
    fn inapplicable_keys_omitted() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        let r = AnalysisReport::build(&rs, &[1, 3], InvolutionData::identity(&rs), false).unwrap();
        assert_eq!(r.orbit_type, OrbitType::TotallyReal);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in [
            "filtration",
            "order",
            "degenerate",
            "witness",
            "kernel_dims",
        ] {
            assert!(v.get(key).is_none(), "{key} should be absent");
        }
        assert!(!r.to_text().contains("order:"));
    }
}
