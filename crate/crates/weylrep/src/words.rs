use cyclotomic::CycloField;
use serde::{Deserialize, Serialize};

use crate::{IndexShape, MultiIndex, SparseVec};

/// A monomial in the shift operators: slot p carries the exponent s_p.
///
/// x_p^s sends u(m) to u(m - s eps_p), indices taken mod l.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct XWord {
    pub factors: Vec<(usize, i64)>,
}

impl XWord {
    pub fn new(factors: Vec<(usize, i64)>) -> Self {
        XWord { factors }
    }

    /// Product with another monomial (they commute, so exponents add).
    pub fn times(&self, other: &XWord) -> XWord {
        let mut factors = self.factors.clone();
        for &(p, s) in &other.factors {
            match factors.iter_mut().find(|(q, _)| *q == p) {
                Some(f) => f.1 += s,
                None => factors.push((p, s)),
            }
        }
        factors.retain(|&(_, s)| s != 0);
        XWord { factors }
    }

    /// Total exponent on one slot.
    pub fn exponent(&self, slot: usize) -> i64 {
        self.factors.iter().filter(|(p, _)| *p == slot).map(|(_, s)| s).sum()
    }
}

/// The diagonal part of a term: eps^offset times a z-monomial, either used
/// directly (`d = 0`) or wrapped in the brace {.}_{eps^d} for d = 1, 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZWord {
    pub factors: Vec<(usize, i64)>,
    pub offset: i64,
    pub d: u8,
}

impl ZWord {
    pub fn new(factors: Vec<(usize, i64)>, offset: i64, d: u8) -> Self {
        assert!(d <= 2, "brace base eps^{d} is not supported");
        ZWord { factors, offset, d }
    }

    /// The identity (value 1).
    pub fn one() -> Self {
        ZWord::new(Vec::new(), 0, 0)
    }

    /// Exponent E of eps in eps^offset z^h at the index m, with b the
    /// parameter table and `extra` a constant added to the offset.
    pub fn exponent(&self, b: &[i64], extra: i64, m: &MultiIndex) -> i64 {
        let e = m.entries();
        self.offset + extra + self.factors.iter().map(|&(p, h)| h * (e[p] as i64 + b[p])).sum::<i64>()
    }
}

/// One summand {z-word} x-word of a generator. The x-word acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    pub z: ZWord,
    pub x: XWord,
}

impl Term {
    pub fn new(z: ZWord, x: XWord) -> Self {
        Term { z, x }
    }

    /// Left multiplication by the monomial `d`: moving d past the brace
    /// adds d.h to the offset and the shifts multiply.
    pub fn left_mul_x(&self, d: &XWord) -> Term {
        let bump: i64 = self.z.factors.iter().map(|&(p, h)| h * d.exponent(p)).sum();
        let mut z = self.z.clone();
        z.offset += bump;
        Term { z, x: d.times(&self.x) }
    }
}

/// Per-slot parameters: b enters the z-exponents, a scales the shifts by
/// eps^{sum s_p a_p}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamTables {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl ParamTables {
    pub fn zeros(shape: &IndexShape) -> Self {
        ParamTables { a: vec![0; shape.len()], b: vec![0; shape.len()] }
    }
}

/// Precomputed powers of eps and quantum integers for a field.
#[derive(Debug, Clone)]
pub struct Evaluator<F: CycloField> {
    field: F,
    l: i64,
    eps: Vec<F::Elem>,
    qint: [Vec<F::Elem>; 2],
    dinv: [i64; 2],
}

impl<F: CycloField> Evaluator<F> {
    pub fn new(field: F) -> Self {
        let order = field.root_order();
        let l = order.get();
        let eps = (0..l as i64).map(|k| field.eps_pow(k)).collect();
        let qint = [1u32, 2].map(|d| (0..l as i64).map(|k| field.quantum_int(k, d)).collect());
        let dinv = [1u32, 2].map(|d| order.inverse_mod(d).expect("l is odd, so 1 and 2 are units") as i64);
        Evaluator { field, l: l as i64, eps, qint, dinv }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// eps^k.
    pub fn eps(&self, k: i64) -> &F::Elem {
        &self.eps[k.rem_euclid(self.l) as usize]
    }

    /// eps^E when d = 0, otherwise {eps^E}_{eps^d} = [E d^{-1} mod l]_{eps^d}.
    pub fn brace(&self, e: i64, d: u8) -> &F::Elem {
        match d {
            0 => self.eps(e),
            1 | 2 => {
                let k = (e.rem_euclid(self.l) * self.dinv[d as usize - 1]) % self.l;
                &self.qint[d as usize - 1][k as usize]
            }
            _ => unreachable!("ZWord::new rejects d > 2"),
        }
    }
}

/// A term resolved against a shape and parameter tables, acting on codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledTerm {
    /// (slot, amount subtracted from the digit, already reduced mod l)
    steps: Vec<(usize, u32)>,
    z: Vec<(usize, i64)>,
    constant: i64,
    a_exp: i64,
    d: u8,
}

impl CompiledTerm {
    /// `extra` is a constant folded into the z-offset (used for weight shifts).
    pub fn new(shape: &IndexShape, term: &Term, params: &ParamTables, extra: i64) -> Self {
        let l = shape.order();
        let mut steps: Vec<(usize, u32)> = Vec::new();
        let mut a_exp = 0;
        for &(p, s) in &term.x.factors {
            a_exp += s * params.a[p];
            match steps.iter_mut().find(|(q, _)| *q == p) {
                Some(st) => st.1 = (st.1 + l.reduce(s)) % l.get(),
                None => steps.push((p, l.reduce(s))),
            }
        }
        steps.retain(|&(_, s)| s != 0);
        let constant = term.z.offset + extra + term.z.factors.iter().map(|&(p, h)| h * params.b[p]).sum::<i64>();
        CompiledTerm { steps, z: term.z.factors.clone(), constant, a_exp, d: term.z.d }
    }

    /// Code of the image basis vector.
    #[inline]
    pub fn target(&self, shape: &IndexShape, code: u64) -> u64 {
        let l = shape.l();
        self.steps.iter().fold(code, |c, &(p, s)| {
            let digit = shape.digit(c, p);
            shape.with_digit(c, p, (digit + l - s) % l)
        })
    }

    /// Coefficient picked up by u(code), or `None` when it is zero.
    pub fn coefficient<F: CycloField>(
        &self,
        ev: &Evaluator<F>,
        shape: &IndexShape,
        code: u64,
    ) -> (u64, Option<F::Elem>) {
        let target = self.target(shape, code);
        let e = self.constant + self.z.iter().map(|&(p, h)| h * shape.digit(target, p) as i64).sum::<i64>();
        let value = ev.brace(e, self.d);
        let f = ev.field();
        if f.is_zero(value) {
            return (target, None);
        }
        let c = if self.a_exp.rem_euclid(ev.l) == 0 { value.clone() } else { f.mul(value, ev.eps(self.a_exp)) };
        (target, Some(c))
    }

    /// Adds scale * (term applied to v) into `out`.
    pub fn apply_into<F: CycloField>(
        &self,
        ev: &Evaluator<F>,
        shape: &IndexShape,
        scale: Option<&F::Elem>,
        v: &SparseVec<F::Elem>,
        out: &mut SparseVec<F::Elem>,
    ) {
        let f = ev.field();
        for (&code, c) in v.iter() {
            if let (target, Some(k)) = self.coefficient(ev, shape, code) {
                let mut x = f.mul(&k, c);
                if let Some(s) = scale {
                    x = f.mul(&x, s);
                }
                out.add_term(f, target, x);
            }
        }
    }
}

/// Applies an x-monomial (no parameter factor).
pub fn x_apply<E: Clone>(shape: &IndexShape, w: &XWord, v: &SparseVec<E>) -> SparseVec<E> {
    let ct = CompiledTerm::new(shape, &Term::new(ZWord::one(), w.clone()), &ParamTables::zeros(shape), 0);
    // A permutation of basis vectors, so no coefficients can collide or cancel.
    let mut out: std::collections::BTreeMap<u64, E> = std::collections::BTreeMap::new();
    for (&code, c) in v.iter() {
        out.insert(ct.target(shape, code), c.clone());
    }
    SparseVec::from_map(out)
}

/// Value of a z-word (with its brace) at the index m.
pub fn z_eval<F: CycloField>(
    field: &F,
    shape: &IndexShape,
    w: &ZWord,
    b: &[i64],
    lambda_term: i64,
    m: &MultiIndex,
) -> F::Elem {
    debug_assert_eq!(m.entries().len(), shape.len());
    let e = w.exponent(b, lambda_term, m);
    match w.d {
        0 => field.eps_pow(e),
        d => {
            let inv = shape.order().inverse_mod(d as u32).expect("d is a unit mod odd l") as i64;
            field.quantum_int((e.rem_euclid(shape.l() as i64) * inv) % shape.l() as i64, d as u32)
        }
    }
}

/// Applies one term to a vector.
pub fn term_apply<F: CycloField>(
    field: &F,
    shape: &IndexShape,
    t: &Term,
    params: &ParamTables,
    v: &SparseVec<F::Elem>,
) -> SparseVec<F::Elem> {
    let ev = Evaluator::new(field.clone());
    let ct = CompiledTerm::new(shape, t, params, 0);
    let mut out = SparseVec::zero();
    ct.apply_into(&ev, shape, None, v, &mut out);
    out
}
