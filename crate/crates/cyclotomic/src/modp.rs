use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::{CycloField, Exact, ExactElem, FieldError, RootOrder};

/// The prime-field image of Q(eps): eps maps to a fixed element omega of
/// multiplicative order l in F_p, which exists exactly when l divides p - 1.
///
/// This backend is a fast filter for large randomized checks. It is a ring
/// homomorphism on the subring where denominators are prime to p, so an
/// identity that holds exactly also holds here, never the other way round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModP {
    order: RootOrder,
    p: u64,
    omega: u64,
}

impl ModP {
    pub fn new(order: RootOrder, p: u64) -> Result<Self, FieldError> {
        let l = order.get();
        let bad = |reason: &str| FieldError::BadPrime { p, l, reason: reason.to_string() };
        if p < 3 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(bad("p must be an odd prime below 2^32"));
        }
        if !(p - 1).is_multiple_of(l as u64) {
            return Err(bad("l must divide p - 1"));
        }
        let cofactor = (p - 1) / l as u64;
        let prime_factors: Vec<u64> =
            (2..=l as u64).filter(|q| (l as u64).is_multiple_of(*q) && is_prime(*q)).collect();
        let omega = (2..p)
            .map(|g| pow_mod(g, cofactor, p))
            .find(|&w| prime_factors.iter().all(|q| pow_mod(w, l as u64 / q, p) != 1))
            .ok_or_else(|| bad("no element of order l"))?;
        Ok(ModP { order, p, omega })
    }

    /// The modulus.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The image of eps.
    pub fn omega(&self) -> u64 {
        self.omega
    }

    /// Maps an exact element to F_p; fails when a denominator is divisible by p.
    pub fn image_of(&self, field: &Exact, x: &ExactElem) -> Result<u64, FieldError> {
        debug_assert_eq!(field.root_order(), self.order);
        let mut acc = 0u64;
        for (k, c) in x.coeffs().iter().enumerate() {
            let c = self.rational(c)?;
            acc = (acc + c * pow_mod(self.omega, k as u64, self.p)) % self.p;
        }
        Ok(acc)
    }

    fn rational(&self, c: &BigRational) -> Result<u64, FieldError> {
        let p = BigInt::from(self.p);
        let reduce = |v: &BigInt| -> u64 {
            let r = v % &p;
            let r = if r.is_negative() { r + &p } else { r };
            r.to_u64().expect("residue below p")
        };
        let den = reduce(c.denom());
        if den == 0 {
            return Err(FieldError::BadPrime {
                p: self.p,
                l: self.order.get(),
                reason: "denominator divisible by p".to_string(),
            });
        }
        Ok(reduce(c.numer()) * pow_mod(den, self.p - 2, self.p) % self.p)
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl CycloField for ModP {
    type Elem = u64;

    fn root_order(&self) -> RootOrder {
        self.order
    }

    fn backend_name(&self) -> String {
        format!("modp:{}", self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_int(&self, k: i64) -> u64 {
        k.rem_euclid(self.p as i64) as u64
    }

    fn eps_pow(&self, k: i64) -> u64 {
        pow_mod(self.omega, self.order.reduce(k) as u64, self.p)
    }

    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }

    fn add(&self, x: &u64, y: &u64) -> u64 {
        (x + y) % self.p
    }

    fn sub(&self, x: &u64, y: &u64) -> u64 {
        (x + self.p - y) % self.p
    }

    fn mul(&self, x: &u64, y: &u64) -> u64 {
        x * y % self.p
    }

    fn neg(&self, x: &u64) -> u64 {
        (self.p - x) % self.p
    }

    fn inv(&self, x: &u64) -> Result<u64, FieldError> {
        if *x == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(pow_mod(*x, self.p - 2, self.p))
    }

    fn to_text(&self, x: &u64) -> String {
        x.to_string()
    }

    fn parse_text(&self, s: &str) -> Result<u64, FieldError> {
        let v: u64 = s.trim().parse().map_err(|_| FieldError::Parse(format!("bad residue {s:?}")))?;
        if v >= self.p {
            return Err(FieldError::Parse(format!("residue {v} not below p = {}", self.p)));
        }
        Ok(v)
    }
}
