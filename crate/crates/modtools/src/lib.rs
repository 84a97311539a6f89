//! Module-level analysis of the root-of-unity modules V(lambda). Weight
//! blocks split the exact linear algebra (primitive kernels and submodule
//! spans), and the certification suites check the structural statements
//! about these modules on explicit bases.

mod certify;
mod echelon;
mod error;
mod primitive;
mod span;
mod weights;

pub use certify::{certify, Backend, Certificate, CertifyConfig, CheckResult, SpecEcho, Status, Suite};
pub use echelon::Echelon;
pub use error::ModError;
pub use primitive::{dense_primitive_space, primitive_space, Scope};
pub use span::{ascend_to_primitive, submodule_span, BasisRow, SpanOptions, SubmoduleBasis};
pub use weights::{weight_blocks, weight_of, WeightVector};
