//! Deformed `su(n)`/`gl(n)`/`igl(n)` generators on the fermionic quantum
//! space and the relation suites they must satisfy.

mod checks;
mod generators;
mod relation;
pub mod suites;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use checks::{
    classical_limit, classical_set, extract_commutation_pattern, q_independence, ClassicalFermions,
};
pub use generators::{build_gl, build_igl, GeneratorSet, NormalForms, SetKind};
pub use relation::{
    matrix_witnesses, MatrixRealm, NormalRealm, OpRef, Realm, Relation, RelationReport,
    ResidueEntry,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ForgeError {
    #[error("generator sets need 2 <= n <= 6, got {0}")]
    Dimension(usize),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unsupported operator: {0}")]
    Unsupported(String),
    #[error("no candidate fits the commutation pattern")]
    NoPattern,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
