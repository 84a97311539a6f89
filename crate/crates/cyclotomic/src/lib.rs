//! Exact arithmetic in the cyclotomic field Q(eps), eps a primitive l-th root
//! of unity (l odd, l >= 5), together with quantum integers and factorials.
//!
//! Elements are residues modulo the cyclotomic polynomial Phi_l in the power
//! basis, which makes Q(eps) a field with exact inverses. The power-basis
//! coefficients are generic over a num-traits field ([`Coeff`]); the crate-root
//! aliases fix them to arbitrary-precision rationals. A second backend,
//! [`ModP`], maps eps to an element of order l in a prime field.
//!
//! Code above this crate is written against the [`CycloField`] trait.

mod error;
mod exact;
mod field;
mod modp;
mod order;

pub use error::FieldError;
pub use exact::{Coeff, Cyclotomic, FieldElem};
pub use field::{ArithOp, CycloField};
pub use modp::ModP;
pub use order::{cyclotomic_polynomial, RootOrder};

/// Exact Q(eps) with arbitrary-precision rational coefficients.
pub type Exact = Cyclotomic<num_rational::BigRational>;

/// An element of [`Exact`].
pub type ExactElem = FieldElem<num_rational::BigRational>;
