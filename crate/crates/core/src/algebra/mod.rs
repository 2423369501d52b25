//! The fermionic quantum space: words in `θ^α` and `∂_α`, their normal
//! forms, and the rewriting system that produces them.

mod context;
mod normal;
mod parse;
mod rewrite;
mod word;

use thiserror::Error;

use crate::ring::RingError;

pub use context::{AlgebraContext, Mode, Params, MAX_DIMENSION};
pub use normal::{NormalElement, NormalMonomial};
pub use parse::{parse, parse_scalar, parse_words};
pub use rewrite::{
    h_commutator, multiply, normal_form, normal_form_word, vacuum_action, Rewriter, Strategy,
};
pub use word::{Letter, Word, WordSum};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}
