//! The vector space V = (C^l)^{tensor N} indexed by a classical grid M, with
//! the shift operators x_p, the diagonal operators z_p and the brace
//! coefficients {eps^c z^h}_{eps^d} that build generator actions.
//!
//! Basis vectors u(m) are addressed by a mixed-radix code of the multi-index
//! m, so sparse vectors are maps from `u64` codes to field elements.

mod error;
mod shape;
mod vector;
mod words;

pub use error::WeylError;
pub use shape::{AlgType, IndexShape, MultiIndex};
pub use vector::SparseVec;
pub use words::{term_apply, x_apply, z_eval, CompiledTerm, Evaluator, ParamTables, Term, XWord, ZWord};
