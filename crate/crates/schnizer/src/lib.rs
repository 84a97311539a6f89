//! Generator actions of the modules V(lambda) of the quantum group
//! U_eps(g) at an odd root of unity, for g of type A, B, C or D.
//!
//! Two independent constructions are provided: [`build_generators`] writes
//! each generator as a sum of brace coefficients times shift monomials (the
//! construction itself, valid for any parameter tables), and
//! [`closed_form_e`] / [`closed_form_f`] give explicit coefficient formulas
//! that hold for the default tables. Tests compare the two routes.

mod closed;
mod data;
mod error;
mod lowest;
mod module;
mod raw;
mod relations;
mod theorem;

pub use closed::{closed_form_e, closed_form_f, ClosedOp, Rule};
pub use data::{cartan_matrix, d_vector, default_params, lambda_shift, BShift, ModuleSpec};
pub use error::SchnizerError;
pub use lowest::lowest_index;
pub use module::{build_generators, Gen, GenFamily, GenOp, Module};
pub use relations::relation_failures;
pub use weylrep::AlgType;
