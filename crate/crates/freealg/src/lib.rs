//! Free words in the generators e_i, f_i, t_i^{+-1}, the braid automorphisms
//! T_i, root vectors along a reduced word of the longest Weyl group element,
//! and evaluation of all of these as operators on a module.

mod braid;
mod elem;
mod error;
mod eval;
mod ops;
mod weyl;

pub use braid::{braid_t, root_vectors, substitute, BraidContext, BraidConvention, RootVectors};
pub use elem::{FreeElem, Word};
pub use error::FreeAlgError;
pub use eval::{evaluate, evaluate_power};
pub use ops::RootVectorOps;
pub use weyl::{default_w0_word, ReducedWord};
