//! Explicit coefficient formulas: each generator is a list of rules
//! "u(m) goes to [L.m + c]_{eps^d} u(m + delta)", evaluated at the incoming
//! index without composing any shift words.

use serde::{Deserialize, Serialize};
use weylrep::{AlgType, IndexShape};

use crate::raw::{Mono, RawTerm};
use crate::theorem::{d_type_d, d_type_e_layout};
use crate::{Gen, ModuleSpec, SchnizerError};

/// One summand of a closed-form action.
///
/// Sends u(m) to coeff * u(m + shift), where coeff is eps^{a_exp} times
/// eps^x for d = 0 and [x]_{eps^d} otherwise, with x = lin.m + constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub lin: Vec<(usize, i64)>,
    pub constant: i64,
    pub d: u8,
    pub shift: Vec<(usize, i64)>,
    pub a_exp: i64,
}

/// A generator given by closed-form rules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedOp {
    pub gen: Gen,
    pub rules: Vec<Rule>,
}

/// Position-keyed rule before slot resolution. `lin` acts on m + b when
/// `with_b` is set (type A), and on m alone otherwise.
#[derive(Debug, Clone)]
pub(crate) struct RawRule {
    pub lin: Mono,
    pub constant: i64,
    pub d: u8,
    pub shift: Mono,
}

impl RawRule {
    fn new(lin: Mono, constant: i64, d: u8, shift: Mono) -> RawRule {
        RawRule { lin, constant, d, shift }
    }

    /// Resolves against the module spec's tables. The b-part of `lin` (type A
    /// only) folds into the constant and the a-factor follows the shift.
    pub fn resolve(&self, spec: &ModuleSpec, with_b: bool) -> Rule {
        let shape = spec.shape();
        let lin = self.lin.clipped(shape).slots(shape);
        let shift = self.shift.clipped(shape).slots(shape);
        let p = spec.params();
        let b_part: i64 = if with_b { lin.iter().map(|&(k, h)| h * p.b[k]).sum() } else { 0 };
        let a_exp = -shift.iter().map(|&(k, s)| s * p.a[k]).sum::<i64>();
        Rule { lin, constant: self.constant + b_part, d: self.d, shift, a_exp }
    }

    /// The same action as a brace-times-shift term, for rules whose `lin`
    /// acts on m + b. The x-word undoes the shift and the brace exponent is
    /// rewritten at the shifted index.
    pub fn to_term(&self, shape: &IndexShape) -> RawTerm {
        let lin = self.lin.clipped(shape);
        let shift = self.shift.clipped(shape);
        let mult = i64::from(self.d.max(1));
        let z = lin.scaled(mult);
        let c = mult * self.constant - mult * lin.dot(&shift);
        RawTerm::new(z, c, self.d, shift.scaled(-1))
    }
}

fn e1(i: i64, j: i64) -> Mono {
    Mono::of(&[(i, j, 1)])
}

fn mono(items: &[(i64, i64, i64)]) -> Mono {
    Mono::of(items)
}

/// Type A rules for e_i, f_i and t_i; `lam` is lambda'. The linear forms
/// act on m + b, and out-of-range positions read as 0.
pub(crate) fn type_a_rules(n: i64, lam: &[i64]) -> (Vec<Vec<RawRule>>, Vec<Vec<RawRule>>, Vec<RawRule>) {
    // mu(m, i, j) = lambda'_i + L.(m + b), returned as (L, constant).
    let mu = |i: i64, j: i64| -> (Mono, i64) {
        let mut l = e1(i - 1, i - 1);
        for p in i..=j {
            l = l.plus(&mono(&[(i - 1, p, 1), (i, p, -2), (i + 1, p, 1)]));
        }
        (l, lam[i as usize - 1])
    };
    let mut e = Vec::new();
    let mut f = Vec::new();
    let mut t = Vec::new();
    for i in 1..=n {
        let (tl, tc) = mu(i, n);
        t.push(RawRule::new(tl, tc, 0, Mono::default()));
        let mut fi = Vec::new();
        for k in i..=n {
            let (ml, mc) = mu(i, k - 1);
            let lin = mono(&[(i, k, 1), (i + 1, k, -1)]).plus(&ml.scaled(-1));
            fi.push(RawRule::new(lin, 1 - mc, 1, e1(i, k)));
        }
        f.push(fi);
        let mut ei = Vec::new();
        for k in 1..=i {
            let col = n - i + k;
            let lin = mono(&[(k - 1, col, 1), (k, col, -1)]);
            let mut shift = mono(&[(k, col, -1)]);
            for p in k + 1..=i {
                shift = shift.plus(&mono(&[(p - 1, n - i + p, 1), (p, n - i + p, -1)]));
            }
            ei.push(RawRule::new(lin, 1, 1, shift));
        }
        e.push(ei);
    }
    (e, f, t)
}

/// Closed-form e-actions of types B and C (the two lemmas differ in which
/// brackets are eps^2-quantum integers and in the last-column blocks).
fn e_rules_bc(typ: AlgType, n: i64, j: i64) -> Vec<RawRule> {
    let c = typ == AlgType::C;
    let (d_mid, d_last) = if c { (1, 2) } else { (2, 1) };
    let blk = |p: i64| mono(&[(j, p, -1), (j + 1, p, 1), (p, j, -1), (p, j - 1, 1)]);
    let blkn = |p: i64| mono(&[(n, p, -1), (p, n - 1, 1)]).scaled(if c { 2 } else { 1 });
    let mut r = Vec::new();
    if j == 1 {
        r.push(RawRule::new(mono(&[(1, 1, -1)]), 0, d_mid, mono(&[(1, 1, -1)])));
    } else if j < n {
        let alpha = Mono::sum(&(1..j).map(blk).collect::<Vec<_>>()).plus(&mono(&[(j, j, -1)]));
        r.push(RawRule::new(mono(&[(j, j, -1)]), 0, d_mid, alpha));
        for q in 1..j {
            let base = Mono::sum(&(0..q).map(blk).collect::<Vec<_>>());
            r.push(RawRule::new(mono(&[(q, j - 1, 1), (q, j, -1)]), 0, d_mid, base.plus(&mono(&[(q, j, -1)]))));
            r.push(RawRule::new(
                mono(&[(j + 1, q, 1), (j, q, -1)]),
                0,
                d_mid,
                base.plus(&mono(&[(q, j - 1, 1), (j, q, -1), (q, j, -1)])),
            ));
        }
    } else {
        let alpha = Mono::sum(&(1..n).map(blkn).collect::<Vec<_>>()).plus(&mono(&[(n, n, -1)]));
        r.push(RawRule::new(mono(&[(n, n, -1)]), 0, d_last, alpha));
        for q in 1..n {
            let base = Mono::sum(&(0..q).map(blkn).collect::<Vec<_>>());
            let beta = base.plus(&mono(&[(q, n, -1)]));
            let beta1 = base.plus(&mono(&[(q, n - 1, 1), (n, q, -1), (q, n, -1)]));
            if c {
                let beta2 = base.plus(&mono(&[(q, n - 1, 2), (n, q, -2), (q, n, -1)]));
                r.push(RawRule::new(mono(&[(q, n - 1, 1), (q, n, -1)]), 0, 2, beta));
                r.push(RawRule::new(mono(&[(q, n - 1, 1), (n, q, -1)]), 0, 1, beta1));
                r.push(RawRule::new(mono(&[(q, n, 1), (n, q, -1)]), 0, 2, beta2));
            } else {
                r.push(RawRule::new(mono(&[(q, n - 1, 2), (q, n, -1)]), 0, 1, beta));
                r.push(RawRule::new(mono(&[(q, n, 1), (n, q, -2)]), 0, 1, beta1));
            }
        }
    }
    r
}

/// Closed-form e-action of type D. The shift of each summand is the index
/// change of its D-product followed by its own F or C factor.
fn e_rules_d(n: i64, j: i64) -> Vec<RawRule> {
    let f_rule = |i: i64, jj: i64| vec![(mono(&[(i, jj, -1)]), mono(&[(i, jj, -1)]))];
    let c_rules = |i: i64, jj: i64| {
        if jj <= n - 2 {
            vec![
                (mono(&[(i, jj - 1, 1), (i, jj, -1)]), mono(&[(i, jj, -1)])),
                (mono(&[(jj + 1, i, 1), (jj, i, -1)]), mono(&[(i, jj - 1, 1), (i, jj, -1), (jj, i, -1)])),
            ]
        } else if jj == n - 1 {
            vec![
                (mono(&[(i, n - 2, 1), (i, n - 1, -1)]), mono(&[(i, n - 1, -1)])),
                (mono(&[(i, n, 1), (n - 1, i, -1)]), mono(&[(i, n - 2, 1), (i, n - 1, -1), (n - 1, i, -1)])),
            ]
        } else {
            vec![
                (mono(&[(i, n - 2, 1), (i, n, -1)]), mono(&[(i, n, -1)])),
                (mono(&[(i, n - 1, 1), (n - 1, i, -1)]), mono(&[(i, n - 2, 1), (i, n, -1), (n - 1, i, -1)])),
            ]
        }
    };
    let mut r = Vec::new();
    for (pairs, is_f, row, col) in d_type_e_layout(n, j) {
        let delta = Mono::sum(&pairs.iter().map(|&(p, cc)| d_type_d(n, p, cc)).collect::<Vec<_>>()).scaled(-1);
        let items = if is_f { f_rule(row, col) } else { c_rules(row, col) };
        for (lin, shift) in items {
            r.push(RawRule::new(lin, 0, 1, delta.plus(&shift)));
        }
    }
    r
}

/// Closed-form f-action of type C; `lam` is the unshifted weight.
fn f_rules_c(n: i64, lam: &[u32], j: i64) -> Vec<RawRule> {
    let lam = |k: i64| lam[k as usize - 1] as i64;
    let nu = |i: i64, jj: i64| -> (Mono, i64) {
        if i < jj && jj < n - 1 {
            (mono(&[(i, jj - 1, -1), (i, jj, 2), (i, jj + 1, -1), (jj + 2, i, -1), (jj + 1, i, 2), (jj, i, -1)]), 0)
        } else if i < jj && jj == n - 1 {
            (mono(&[(i, n - 2, -1), (i, n - 1, 2), (i, n, -2), (n, i, 2), (n - 1, i, -1)]), 0)
        } else if i < jj {
            (mono(&[(i, n - 1, -1), (i, n, 2), (n, i, -1)]), 0)
        } else if i < n - 1 {
            (
                mono(&[
                    (i, i, 2),
                    (i, i + 1, -1),
                    (i + 2, i, -1),
                    (i + 1, i, 2),
                    (i + 1, i + 1, -1),
                    (i + 2, i + 1, -1),
                ]),
                -lam(i),
            )
        } else if i == n - 1 {
            (mono(&[(n - 1, n - 1, 2), (n - 1, n, -2), (n, n - 1, 2), (n, n, -2)]), -lam(n - 1))
        } else {
            (mono(&[(n, n, 2)]), -lam(n))
        }
    };
    let mu = |i: i64, jj: i64| {
        (i..=jj).fold((Mono::default(), 0), |(l, c), k| {
            let (l2, c2) = nu(k, jj);
            (l.plus(&l2), c + c2)
        })
    };
    let mut r = Vec::new();
    for i in 1..=j {
        if i < j {
            let (ml, mc) = mu(i + 1, j);
            let mut push = |lin: Mono, d: u8, shift: Mono| r.push(RawRule::new(lin.plus(&ml), mc, d, shift));
            if j <= n - 2 {
                push(mono(&[(i, j, 1), (i, j + 1, -1), (j + 2, i, -1), (j + 1, i, 2), (j, i, -1)]), 1, e1(i, j));
                push(mono(&[(j + 1, i, 1), (j, i, -1)]), 1, e1(j + 1, i));
            } else if j == n - 1 {
                push(mono(&[(i, n - 1, 1), (i, n, -2), (n, i, 2), (n - 1, i, -1)]), 1, e1(i, n - 1));
                push(mono(&[(n, i, 1), (n - 1, i, -1)]), 1, e1(n, i));
            } else {
                push(mono(&[(i, n, 1), (n, i, -1)]), 2, e1(i, n));
            }
        } else if i < n - 1 {
            let c = -lam(i);
            r.push(RawRule::new(
                mono(&[
                    (i, i, 1),
                    (i, i + 1, -1),
                    (i + 2, i, -1),
                    (i + 1, i, 2),
                    (i + 1, i + 1, -1),
                    (i + 2, i + 1, -1),
                ]),
                c,
                1,
                e1(i, i),
            ));
            r.push(RawRule::new(mono(&[(i + 1, i, 1), (i + 1, i + 1, -1), (i + 2, i + 1, -1)]), c, 1, e1(i + 1, i)));
        } else if i == n - 1 {
            let c = -lam(n - 1);
            r.push(RawRule::new(
                mono(&[(n - 1, n - 1, 1), (n - 1, n, -2), (n, n - 1, 2), (n, n, -2)]),
                c,
                1,
                e1(n - 1, n - 1),
            ));
            r.push(RawRule::new(mono(&[(n, n - 1, 1), (n, n, -2)]), c, 1, e1(n, n - 1)));
        } else {
            r.push(RawRule::new(mono(&[(n, n, 1)]), -lam(n), 2, e1(n, n)));
        }
    }
    r
}

fn require_defaults(spec: &ModuleSpec) -> Result<(), SchnizerError> {
    if spec.uses_default_params() {
        Ok(())
    } else {
        Err(SchnizerError::Unsupported("closed forms need the default parameter tables".into()))
    }
}

/// Closed-form actions of e_1, ..., e_n.
pub fn closed_form_e(spec: &ModuleSpec) -> Result<Vec<ClosedOp>, SchnizerError> {
    require_defaults(spec)?;
    let n = spec.rank() as i64;
    let typ = spec.alg_type();
    let raw: Vec<Vec<RawRule>> = match typ {
        AlgType::A => type_a_rules(n, spec.lambda_prime()).0,
        AlgType::B | AlgType::C => (1..=n).map(|j| e_rules_bc(typ, n, j)).collect(),
        AlgType::D => (1..=n).map(|j| e_rules_d(n, j)).collect(),
    };
    Ok(finish(spec, raw, Gen::E, typ == AlgType::A))
}

/// Closed-form actions of f_1, ..., f_n (types A and C).
pub fn closed_form_f(spec: &ModuleSpec) -> Result<Vec<ClosedOp>, SchnizerError> {
    let n = spec.rank() as i64;
    let typ = spec.alg_type();
    let raw: Vec<Vec<RawRule>> = match typ {
        AlgType::A => type_a_rules(n, spec.lambda_prime()).1,
        AlgType::C => (1..=n).map(|j| f_rules_c(n, spec.lambda(), j)).collect(),
        _ => return Err(SchnizerError::Unsupported(format!("no closed f-action for type {typ}"))),
    };
    require_defaults(spec)?;
    Ok(finish(spec, raw, Gen::F, typ == AlgType::A))
}

fn finish(spec: &ModuleSpec, raw: Vec<Vec<RawRule>>, gen: fn(usize) -> Gen, with_b: bool) -> Vec<ClosedOp> {
    raw.into_iter()
        .enumerate()
        .map(|(k, rules)| ClosedOp { gen: gen(k + 1), rules: rules.iter().map(|r| r.resolve(spec, with_b)).collect() })
        .collect()
}
