use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{FromPrimitive, Num};

use crate::order::cyclotomic_polynomial;
use crate::{CycloField, FieldError, RootOrder};

/// Requirements on the coefficient ring of the power basis: an exact field
/// with num-traits arithmetic and a text form.
pub trait Coeff:
    Num + Clone + std::ops::Neg<Output = Self> + FromPrimitive + Debug + Display + FromStr + Hash + Eq + Send + Sync
{
}

impl<T> Coeff for T where
    T: Num + Clone + std::ops::Neg<Output = Self> + FromPrimitive + Debug + Display + FromStr + Hash + Eq + Send + Sync
{
}

/// An element of Q(eps) written in the power basis 1, eps, ..., eps^(phi-1)
/// and fully reduced modulo the cyclotomic polynomial, so equal elements have
/// equal coefficient vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem<T> {
    l: u32,
    coeffs: Vec<T>,
}

impl<T: Coeff> FieldElem<T> {
    /// Coefficients in the power basis, lowest degree first.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// The root order the element lives over.
    pub fn order(&self) -> u32 {
        self.l
    }
}

impl<T: Coeff> Debug for FieldElem<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", render(&self.coeffs))
    }
}

fn render<T: Display>(c: &[T]) -> String {
    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// The exact cyclotomic field Q(eps) over the coefficient field `T`.
#[derive(Clone)]
pub struct Cyclotomic<T> {
    order: RootOrder,
    /// Monic Phi_l, lowest degree first.
    phi: Arc<Vec<T>>,
    /// eps^k for k = 0..l, already reduced.
    powers: Arc<Vec<FieldElem<T>>>,
}

impl<T: Coeff> Debug for Cyclotomic<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyclotomic(l = {})", self.order.get())
    }
}

impl<T: Coeff> Cyclotomic<T> {
    pub fn new(order: RootOrder) -> Self {
        let l = order.get();
        let phi: Vec<T> = cyclotomic_polynomial(l)
            .into_iter()
            .map(|c| T::from_i64(c).expect("small integer fits the coefficient ring"))
            .collect();
        let deg = phi.len() - 1;
        let mut field = Cyclotomic { order, phi: Arc::new(phi), powers: Arc::new(Vec::new()) };
        let powers = (0..l as usize)
            .map(|k| {
                let mut wide = vec![T::zero(); l as usize];
                wide[k] = T::one();
                field.reduce_wide(wide)
            })
            .collect();
        field.powers = Arc::new(powers);
        debug_assert_eq!(field.powers[0].coeffs.len(), deg);
        field
    }

    /// phi(l), the dimension of Q(eps) over Q.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Embeds a coefficient as a constant.
    pub fn from_rational(&self, c: T) -> FieldElem<T> {
        let mut coeffs = vec![T::zero(); self.degree()];
        coeffs[0] = c;
        FieldElem { l: self.order.get(), coeffs }
    }

    /// Builds an element from power-basis coefficients (at most phi of them).
    pub fn from_coeffs(&self, mut coeffs: Vec<T>) -> Result<FieldElem<T>, FieldError> {
        if coeffs.len() > self.degree() {
            return Err(FieldError::Parse(format!(
                "expected at most {} coefficients, got {}",
                self.degree(),
                coeffs.len()
            )));
        }
        coeffs.resize(self.degree(), T::zero());
        Ok(FieldElem { l: self.order.get(), coeffs })
    }

    /// Reduces a vector of length l (a residue mod x^l - 1) modulo Phi_l.
    fn reduce_wide(&self, mut wide: Vec<T>) -> FieldElem<T> {
        let deg = self.degree();
        for top in (deg..wide.len()).rev() {
            let c = std::mem::replace(&mut wide[top], T::zero());
            if c.is_zero() {
                continue;
            }
            let shift = top - deg;
            for (j, p) in self.phi[..deg].iter().enumerate() {
                if !p.is_zero() {
                    let t = c.clone() * p.clone();
                    wide[shift + j] = std::mem::replace(&mut wide[shift + j], T::zero()) - t;
                }
            }
        }
        wide.truncate(deg);
        FieldElem { l: self.order.get(), coeffs: wide }
    }

    fn check(&self, x: &FieldElem<T>) {
        debug_assert_eq!(x.l, self.order.get(), "element from another root order");
    }
}

impl<T: Coeff> CycloField for Cyclotomic<T> {
    type Elem = FieldElem<T>;

    fn root_order(&self) -> RootOrder {
        self.order
    }

    fn backend_name(&self) -> String {
        "exact".to_string()
    }

    fn zero(&self) -> FieldElem<T> {
        FieldElem { l: self.order.get(), coeffs: vec![T::zero(); self.degree()] }
    }

    fn one(&self) -> FieldElem<T> {
        self.powers[0].clone()
    }

    fn from_int(&self, k: i64) -> FieldElem<T> {
        self.from_rational(T::from_i64(k).expect("integer fits the coefficient ring"))
    }

    fn eps_pow(&self, k: i64) -> FieldElem<T> {
        self.powers[self.order.reduce(k) as usize].clone()
    }

    fn is_zero(&self, x: &FieldElem<T>) -> bool {
        x.coeffs.iter().all(|c| c.is_zero())
    }

    fn owns(&self, x: &FieldElem<T>) -> bool {
        x.l == self.order.get()
    }

    fn order_of(&self, x: &FieldElem<T>) -> u32 {
        x.l
    }

    fn add(&self, x: &FieldElem<T>, y: &FieldElem<T>) -> FieldElem<T> {
        let mut r = x.clone();
        self.add_assign(&mut r, y);
        r
    }

    fn add_assign(&self, x: &mut FieldElem<T>, y: &FieldElem<T>) {
        self.check(x);
        self.check(y);
        for (a, b) in x.coeffs.iter_mut().zip(&y.coeffs) {
            if !b.is_zero() {
                *a = std::mem::replace(a, T::zero()) + b.clone();
            }
        }
    }

    fn sub(&self, x: &FieldElem<T>, y: &FieldElem<T>) -> FieldElem<T> {
        self.check(x);
        self.check(y);
        let coeffs = x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a.clone() - b.clone()).collect();
        FieldElem { l: x.l, coeffs }
    }

    fn neg(&self, x: &FieldElem<T>) -> FieldElem<T> {
        FieldElem { l: x.l, coeffs: x.coeffs.iter().map(|a| -a.clone()).collect() }
    }

    fn mul(&self, x: &FieldElem<T>, y: &FieldElem<T>) -> FieldElem<T> {
        self.check(x);
        self.check(y);
        let l = self.order.get() as usize;
        let mut wide = vec![T::zero(); l];
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % l;
                wide[k] = std::mem::replace(&mut wide[k], T::zero()) + a.clone() * b.clone();
            }
        }
        self.reduce_wide(wide)
    }

    #[allow(clippy::needless_range_loop)]
    fn inv(&self, x: &FieldElem<T>) -> Result<FieldElem<T>, FieldError> {
        self.check(x);
        if self.is_zero(x) {
            return Err(FieldError::DivisionByZero);
        }
        // Solve x * y = 1 through the multiplication matrix of x.
        let n = self.degree();
        let mut m: Vec<Vec<T>> = vec![vec![T::zero(); n + 1]; n];
        for j in 0..n {
            let col = self.mul(x, &self.powers[j]);
            for (i, c) in col.coeffs.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m[0][n] = T::one();
        for c in 0..n {
            let p = (c..n).find(|&r| !m[r][c].is_zero()).ok_or(FieldError::DivisionByZero)?;
            m.swap(c, p);
            let piv = m[c][c].clone();
            for v in m[c].iter_mut() {
                *v = v.clone() / piv.clone();
            }
            for r in 0..n {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in c..=n {
                        let t = f.clone() * m[c][k].clone();
                        m[r][k] = m[r][k].clone() - t;
                    }
                }
            }
        }
        Ok(FieldElem { l: x.l, coeffs: m.into_iter().map(|row| row[n].clone()).collect() })
    }

    fn to_text(&self, x: &FieldElem<T>) -> String {
        render(&x.coeffs)
    }

    fn parse_text(&self, s: &str) -> Result<FieldElem<T>, FieldError> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| FieldError::Parse(format!("missing brackets in {s:?}")))?;
        let coeffs = inner
            .split(',')
            .map(|p| T::from_str(p.trim()).map_err(|_| FieldError::Parse(format!("bad coefficient {p:?}"))))
            .collect::<Result<Vec<T>, _>>()?;
        if coeffs.len() != self.degree() {
            return Err(FieldError::Parse(format!("expected {} coefficients, got {}", self.degree(), coeffs.len())));
        }
        Ok(FieldElem { l: self.order.get(), coeffs })
    }
}
