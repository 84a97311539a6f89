use std::fmt::Debug;
use std::hash::Hash;

use crate::{FieldError, RootOrder};

/// The four binary-or-unary operations exposed by [`CycloField::field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    /// Negates the first operand; the second is ignored.
    Neg,
}

/// A coefficient backend: a field containing a distinguished primitive l-th
/// root of unity eps.
///
/// Elements need the root order as context, so arithmetic goes through the
/// field value rather than operator overloading. Everything above this crate
/// is generic over the backend, so the same code runs over exact Q(eps) and
/// over a prime-field image.
pub trait CycloField: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    /// The order of eps.
    fn root_order(&self) -> RootOrder;
    /// `"exact"` or `"modp:P"`.
    fn backend_name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, k: i64) -> Self::Elem;
    /// eps^k for any integer k.
    fn eps_pow(&self, k: i64) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Result<Self::Elem, FieldError>;

    /// Whether `x` was built over this field's root order.
    fn owns(&self, _x: &Self::Elem) -> bool {
        true
    }

    /// `x += y`.
    fn add_assign(&self, x: &mut Self::Elem, y: &Self::Elem) {
        *x = self.add(x, y);
    }

    /// `x -= c * y`, the elimination step.
    fn sub_mul_assign(&self, x: &mut Self::Elem, c: &Self::Elem, y: &Self::Elem) {
        *x = self.sub(x, &self.mul(c, y));
    }

    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    /// Checked arithmetic that rejects operands from another root order.
    fn field_arith(&self, op: ArithOp, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, FieldError> {
        for e in [x, y] {
            if !self.owns(e) {
                return Err(FieldError::OrderMismatch { left: self.root_order().get(), right: self.order_of(e) });
            }
        }
        Ok(match op {
            ArithOp::Add => self.add(x, y),
            ArithOp::Sub => self.sub(x, y),
            ArithOp::Mul => self.mul(x, y),
            ArithOp::Neg => self.neg(x),
        })
    }

    /// The root order an element was built over (for error reports).
    fn order_of(&self, _x: &Self::Elem) -> u32 {
        self.root_order().get()
    }

    /// The quantum integer `[a]_{eps^d}`, computed division-free as the
    /// Laurent sum eps^{d(a-1)} + eps^{d(a-3)} + ... + eps^{-d(a-1)}.
    fn quantum_int(&self, a: i64, d: u32) -> Self::Elem {
        // [a] depends only on a mod l; pick the representative of least size.
        let l = self.root_order().get() as i64;
        let mut r = a.rem_euclid(l);
        if r > l / 2 {
            r -= l;
        }
        let d = d as i64;
        let mut acc = self.zero();
        for k in 0..r.abs() {
            self.add_assign(&mut acc, &self.eps_pow(d * (r.abs() - 1 - 2 * k)));
        }
        if r < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }

    /// `[k]_{eps^d}! = [k][k-1]...[1]`, defined for `k < l`.
    fn quantum_factorial(&self, k: u32, d: u32) -> Result<Self::Elem, FieldError> {
        let l = self.root_order().get();
        if k >= l {
            return Err(FieldError::FactorialVanishes { k, l });
        }
        Ok((1..=k).fold(self.one(), |acc, j| self.mul(&acc, &self.quantum_int(j as i64, d))))
    }

    /// The canonical text form used in JSON reports.
    fn to_text(&self, x: &Self::Elem) -> String;
    /// Inverse of [`CycloField::to_text`].
    fn parse_text(&self, s: &str) -> Result<Self::Elem, FieldError>;
}
