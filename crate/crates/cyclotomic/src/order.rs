use crate::FieldError;

/// The order l of the primitive root of unity eps.
///
/// Only odd l >= 5 is admitted. For every brace parameter d in {1, 2} this
/// guarantees eps^(2d) != 1, which is what makes the quantum integers and the
/// brace denominators well defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOrder {
    l: u32,
}

impl RootOrder {
    /// Validates `l`.
    pub fn new(l: u32) -> Result<Self, FieldError> {
        if l < 5 || l.is_multiple_of(2) {
            return Err(FieldError::BadOrder(l));
        }
        for d in [1u32, 2] {
            // eps^(2d) = 1 would need l | 2d, impossible for odd l >= 5.
            assert!((2 * d) % l != 0, "eps^{} = 1 for l = {}", 2 * d, l);
        }
        Ok(RootOrder { l })
    }

    /// The order l.
    pub fn get(self) -> u32 {
        self.l
    }

    /// `k mod l` in `[0, l)`.
    pub fn reduce(self, k: i64) -> u32 {
        k.rem_euclid(self.l as i64) as u32
    }

    /// Multiplicative inverse of `d` modulo l, if `gcd(d, l) = 1`.
    pub fn inverse_mod(self, d: u32) -> Option<u32> {
        (1..self.l).find(|&x| (x as u64 * d as u64) % self.l as u64 == 1)
    }
}

/// Integer coefficients of the l-th cyclotomic polynomial, lowest degree
/// first. The result is monic of degree phi(l).
pub fn cyclotomic_polynomial(l: u32) -> Vec<i64> {
    // x^l - 1 is the product of Phi_d over all d | l; divide out the proper ones.
    let mut p = vec![0i64; l as usize + 1];
    p[0] = -1;
    p[l as usize] = 1;
    for d in 1..l {
        if l.is_multiple_of(d) {
            p = exact_div(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

/// Exact division of integer polynomials by a monic divisor.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; num.len() - dn];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dn];
        quo[k] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[k + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quo
}
