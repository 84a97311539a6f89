use thiserror::Error;

/// Failures of field construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    /// The root order must be odd and at least 5.
    #[error("root order l = {0} is invalid: l must be odd and at least 5")]
    BadOrder(u32),
    /// Two operands were built over different root orders.
    #[error("operands live over different root orders (l = {left} and l = {right})")]
    OrderMismatch { left: u32, right: u32 },
    /// Inversion of zero.
    #[error("division by zero")]
    DivisionByZero,
    /// `[k]!` vanishes once k reaches l, so it has no inverse.
    #[error("quantum factorial [{k}]! vanishes at l = {l} (need k < l)")]
    FactorialVanishes { k: u32, l: u32 },
    /// Malformed canonical text.
    #[error("cannot parse field element: {0}")]
    Parse(String),
    /// The prime does not support an image of Q(eps).
    #[error("modulus p = {p} unusable for l = {l}: {reason}")]
    BadPrime { p: u64, l: u32, reason: String },
}
