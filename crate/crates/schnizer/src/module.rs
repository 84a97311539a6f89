use std::fmt;
use std::str::FromStr;

use cyclotomic::CycloField;
use serde::{Deserialize, Serialize};
use serde_json::json;
use weylrep::{AlgType, CompiledTerm, Evaluator, IndexShape, ParamTables, SparseVec, Term, XWord, ZWord};

use crate::closed::{type_a_rules, ClosedOp};
use crate::raw::RawTerm;
use crate::theorem::{build_b, build_c, build_d};
use crate::{ModuleSpec, SchnizerError};

/// A Chevalley generator with its 1-based node index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    E(usize),
    F(usize),
    T(usize),
    TInv(usize),
}

impl Gen {
    pub fn index(self) -> usize {
        match self {
            Gen::E(i) | Gen::F(i) | Gen::T(i) | Gen::TInv(i) => i,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(i) => write!(f, "e{i}"),
            Gen::F(i) => write!(f, "f{i}"),
            Gen::T(i) => write!(f, "t{i}"),
            Gen::TInv(i) => write!(f, "t{i}^-1"),
        }
    }
}

impl FromStr for Gen {
    type Err = SchnizerError;

    fn from_str(s: &str) -> Result<Self, SchnizerError> {
        let bad = || SchnizerError::BadGenerator(s.to_string());
        let t = s.trim();
        let (head, inv) = match t.strip_suffix("^-1") {
            Some(h) => (h, true),
            None => (t, false),
        };
        let mut chars = head.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let i: usize = chars.as_str().parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match (kind, inv) {
            ('e', false) => Ok(Gen::E(i)),
            ('f', false) => Ok(Gen::F(i)),
            ('t', false) => Ok(Gen::T(i)),
            ('t', true) => Ok(Gen::TInv(i)),
            _ => Err(bad()),
        }
    }
}

/// One generator as an ordered sum of brace-times-shift terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenOp {
    pub gen: Gen,
    pub terms: Vec<Term>,
}

impl GenOp {
    /// Term list as JSON values {brace_d, z_exponents, eps_offset, x_shift}
    /// with exponents listed as [i, j, power].
    pub fn to_json_value(&self, shape: &IndexShape) -> serde_json::Value {
        let cells = |fs: &[(usize, i64)]| -> Vec<[i64; 3]> {
            fs.iter()
                .map(|&(p, e)| {
                    let (i, j) = shape.positions()[p];
                    [i as i64, j as i64, e]
                })
                .collect()
        };
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|t| {
                    json!({
                        "brace_d": t.z.d,
                        "z_exponents": cells(&t.z.factors),
                        "eps_offset": t.z.offset,
                        "x_shift": cells(&t.x.factors),
                    })
                })
                .collect(),
        )
    }
}

/// All 4n generator operators of a module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFamily {
    n: usize,
    ops: Vec<GenOp>,
}

impl GenFamily {
    fn slot(&self, g: Gen) -> usize {
        let i = g.index();
        assert!(i >= 1 && i <= self.n, "generator {g} outside rank {}", self.n);
        let block = match g {
            Gen::E(_) => 0,
            Gen::F(_) => 1,
            Gen::T(_) => 2,
            Gen::TInv(_) => 3,
        };
        block * self.n + i - 1
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, g: Gen) -> &GenOp {
        &self.ops[self.slot(g)]
    }

    /// Generators in the order e_1..e_n, f_1..f_n, t_1..t_n, t_1^-1..t_n^-1.
    pub fn ops(&self) -> impl Iterator<Item = &GenOp> {
        self.ops.iter()
    }

    /// JSON object keyed by generator name.
    pub fn to_json(&self, shape: &IndexShape) -> String {
        let map: serde_json::Map<String, serde_json::Value> =
            self.ops.iter().map(|op| (op.gen.to_string(), op.to_json_value(shape))).collect();
        serde_json::to_string_pretty(&serde_json::Value::Object(map)).expect("plain data serializes")
    }
}

fn inverse_diagonal(t: &Term) -> Term {
    Term::new(ZWord::new(t.z.factors.iter().map(|&(p, h)| (p, -h)).collect(), -t.z.offset, 0), XWord::default())
}

/// Builds e_i, f_i, t_i and t_i^-1 from the construction formulas (type A
/// from its direct formulas), valid for arbitrary parameter tables.
pub fn build_generators(spec: &ModuleSpec) -> GenFamily {
    let shape = spec.shape();
    let n = spec.rank();
    let lam = spec.lambda_prime();
    let resolve = |ts: &[RawTerm]| ts.iter().map(|t| t.resolve(shape)).collect::<Vec<_>>();
    let (e, f, t): (Vec<Vec<Term>>, Vec<Vec<Term>>, Vec<Term>) = match spec.alg_type() {
        AlgType::A => {
            let (e, f, t) = type_a_rules(n as i64, lam);
            let conv =
                |rs: &[crate::closed::RawRule]| rs.iter().map(|r| r.to_term(shape).resolve(shape)).collect::<Vec<_>>();
            (
                e.iter().map(|rs| conv(rs)).collect(),
                f.iter().map(|rs| conv(rs)).collect(),
                t.iter().map(|r| r.to_term(shape).resolve(shape)).collect(),
            )
        }
        typ => {
            let raw = match typ {
                AlgType::B => build_b(n as i64, lam),
                AlgType::C => build_c(n as i64, lam),
                _ => build_d(n as i64, lam),
            };
            (
                raw.e.iter().map(|ts| resolve(ts)).collect(),
                raw.f.iter().map(|ts| resolve(ts)).collect(),
                raw.t.iter().map(|t| t.resolve(shape)).collect(),
            )
        }
    };
    let mut ops = Vec::with_capacity(4 * n);
    ops.extend(e.into_iter().enumerate().map(|(k, terms)| GenOp { gen: Gen::E(k + 1), terms }));
    ops.extend(f.into_iter().enumerate().map(|(k, terms)| GenOp { gen: Gen::F(k + 1), terms }));
    ops.extend(t.iter().enumerate().map(|(k, term)| GenOp { gen: Gen::T(k + 1), terms: vec![term.clone()] }));
    ops.extend(
        t.iter().enumerate().map(|(k, term)| GenOp { gen: Gen::TInv(k + 1), terms: vec![inverse_diagonal(term)] }),
    );
    GenFamily { n, ops }
}

/// A module V(lambda) over a chosen field backend, with generator terms
/// compiled against the shape and parameter tables.
#[derive(Debug, Clone)]
pub struct Module<F: CycloField> {
    spec: ModuleSpec,
    family: GenFamily,
    compiled: Vec<Vec<CompiledTerm>>,
    ev: Evaluator<F>,
}

impl<F: CycloField> Module<F> {
    pub fn new(spec: ModuleSpec, field: F) -> Result<Self, SchnizerError> {
        let fo = field.root_order().get();
        if fo != spec.order().get() {
            return Err(SchnizerError::FieldMismatch { field: fo, module: spec.order().get() });
        }
        let family = build_generators(&spec);
        let compiled = compile(&spec, &family);
        Ok(Module { spec, family, compiled, ev: Evaluator::new(field) })
    }

    pub fn spec(&self) -> &ModuleSpec {
        &self.spec
    }

    pub fn shape(&self) -> &IndexShape {
        self.spec.shape()
    }

    pub fn field(&self) -> &F {
        self.ev.field()
    }

    pub fn evaluator(&self) -> &Evaluator<F> {
        &self.ev
    }

    pub fn family(&self) -> &GenFamily {
        &self.family
    }

    /// Applies one generator.
    pub fn apply(&self, g: Gen, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut out = SparseVec::zero();
        for ct in &self.compiled[self.family.slot(g)] {
            ct.apply_into(&self.ev, self.shape(), None, v, &mut out);
        }
        out
    }

    /// Applies a word of generators; the rightmost acts first.
    pub fn apply_word(&self, word: &[Gen], v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        word.iter().rev().fold(v.clone(), |acc, &g| if acc.is_zero() { acc } else { self.apply(g, &acc) })
    }

    /// Integer exponent w with t_i u(code) = eps^w u(code).
    pub fn t_exponent(&self, i: usize, code: u64) -> i64 {
        let t = &self.family.get(Gen::T(i)).terms[0];
        let m = self.shape().decode(code);
        t.z.exponent(&self.spec.params().b, 0, &m)
    }

    /// Applies a closed-form operator.
    pub fn apply_closed(&self, op: &ClosedOp, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let shape = self.shape();
        let f = self.field();
        let l = shape.l();
        let mut out = SparseVec::zero();
        for (&code, c) in v.iter() {
            for r in &op.rules {
                let x = r.constant + r.lin.iter().map(|&(p, h)| h * shape.digit(code, p) as i64).sum::<i64>();
                let val = if r.d == 0 { self.ev.eps(x) } else { self.ev.brace(i64::from(r.d) * x, r.d) };
                if f.is_zero(val) {
                    continue;
                }
                let mut k = f.mul(val, c);
                if r.a_exp.rem_euclid(l as i64) != 0 {
                    k = f.mul(&k, self.ev.eps(r.a_exp));
                }
                let target = r.shift.iter().fold(code, |acc, &(p, s)| {
                    let dgt = shape.digit(acc, p) as i64;
                    shape.with_digit(acc, p, (dgt + s).rem_euclid(l as i64) as u32)
                });
                out.add_term(f, target, k);
            }
        }
        out
    }
}

fn compile(spec: &ModuleSpec, family: &GenFamily) -> Vec<Vec<CompiledTerm>> {
    let params: &ParamTables = spec.params();
    family.ops().map(|op| op.terms.iter().map(|t| CompiledTerm::new(spec.shape(), t, params, 0)).collect()).collect()
}
