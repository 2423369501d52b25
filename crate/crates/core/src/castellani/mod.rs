//! Maps from the deformed `igl(2)` generators onto Castellani's basis.
//!
//! Castellani's algebra has its own deformation parameter, written `r`
//! ([`Symbol::R`](crate::Symbol::R)); the parameter of our algebra is written
//! `q`. Candidates are linear combinations over `{I, A, B, AB, T12, T21}` and
//! are checked either symbolically or at seeded rational sample points.

mod candidate;
mod groebner;
mod nosolution;
mod recomb;
mod residues;
mod sample;
mod verify;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::forge::ForgeError;
use crate::ring::RingError;

pub use candidate::{
    duality_transform, family_a_from, family_b_constraint, family_b_with, solve_family_a, solve_family_b, Family,
    MapCandidate, MomentumAnsatz, SignConvention,
};
pub use groebner::{GbPoly, GroebnerBasis};
pub use nosolution::{no_solution_search, AnsatzOutcome, NoSolutionPoint};
pub use recomb::{Basis, Combo, Recombination};
pub use residues::{
    chi_residues, igl_residues, realize, symbolic_realization, Reading, Realized, CHI_IDS, IGL_IDS,
};
pub use sample::{point_map, sample_check, sample_points, SampleSpec};
pub use verify::{verify_candidate, CastellaniRun, SYMBOLIC_LIMIT};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CastellaniError {
    #[error("singular parameter value: {0}")]
    Singular(String),
    #[error("no admissible sample point after {attempts} attempts")]
    SamplingExhausted { attempts: usize },
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("constraint {0} has no q = r or q = -r branch")]
    NoBranch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Forge(#[from] ForgeError),
}
