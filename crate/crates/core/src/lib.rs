//! Root-combinatorial analysis of homogeneous CR-manifolds that arise as
//! orbits of real forms in complex flag manifolds `L/Q`.
//!
//! A CR-algebra is reduced to three pieces of root data: a root system, a
//! parabolic subalgebra given by a subset of simple roots, and a lattice
//! involution describing the conjugation of the real form. From these the
//! crate computes the kernel filtration `q(0) ⊃ q(1) ⊃ … ⊃ q(∞)`, the order
//! of finite nondegeneracy, holomorphic degeneracy witnesses and minimality.
//!
//! Everything is exact. The [`chevalley`] module rebuilds the same answers
//! from a Chevalley basis by rational linear algebra and serves as an
//! independent oracle for the combinatorial fast path.

pub mod chevalley;
pub mod cralgebra;
pub mod error;
pub mod involution;
pub mod linalg;
pub mod parabolic;
pub mod report;
pub mod rootset;
pub mod rootsys;
pub mod scalar;
pub mod survey;

pub use chevalley::ChevalleyAlgebra;
pub use cralgebra::{CrAlgebra, FiltrationResult, GeometryReport, NondegeneracyOrder, OrbitType};
pub use error::{Error, Result};
pub use involution::{InvolutionData, Provenance};
pub use parabolic::ParabolicData;
pub use report::AnalysisReport;
pub use rootset::RootSet;
pub use rootsys::{Family, Root, RootId, RootSum, RootSystem};
pub use scalar::ExactField;
pub use survey::{run_survey, InvolutionSource, SurveyConfig, SurveyRow};

/// Exact rationals with machine-word numerator and denominator.
pub type Rational = num_rational::Rational64;

/// Arbitrary-precision rationals.
pub type BigRational = num_rational::BigRational;

/// Subspace of a Chevalley algebra over [`Rational`].
pub type RationalSubspace = linalg::Subspace<Rational>;

/// Subspace of a Chevalley algebra over [`BigRational`].
pub type BigRationalSubspace = linalg::Subspace<BigRational>;

/// Oracle report over [`Rational`], the default field for cross-checks.
pub type RationalOracleReport = chevalley::OracleReport<Rational>;
