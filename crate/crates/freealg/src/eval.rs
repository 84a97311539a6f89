use cyclotomic::CycloField;
use schnizer::{Gen, Module};
use weylrep::SparseVec;

use crate::FreeElem;

/// The action of x on v; each word acts right to left.
///
/// Words are visited in order of their reversed letters, so the partial
/// products for a shared right-hand factor are computed once and reused.
pub fn evaluate<F: CycloField>(md: &Module<F>, x: &FreeElem<F::Elem>, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let f = md.field();
    let mut words: Vec<(Vec<Gen>, &F::Elem)> = x.terms().map(|(w, c)| (w.iter().rev().copied().collect(), c)).collect();
    words.sort_by(|a, b| a.0.cmp(&b.0));
    // stack[k] is the last k letters of the current word applied to v.
    let mut stack: Vec<SparseVec<F::Elem>> = vec![v.clone()];
    let mut prev: &[Gen] = &[];
    let mut out = SparseVec::zero();
    for (rev, c) in &words {
        let shared = prev.iter().zip(rev.iter()).take_while(|(a, b)| a == b).count();
        stack.truncate(shared + 1);
        for &g in &rev[shared..] {
            let top = stack.last().expect("stack holds v");
            let next = if top.is_zero() { SparseVec::zero() } else { md.apply(g, top) };
            stack.push(next);
        }
        let part = stack.last().expect("stack holds v");
        if !part.is_zero() {
            out.add_assign(f, &part.scaled(f, c));
        }
        prev = rev;
    }
    out
}

/// The action of x^k on v, applying x k times.
pub fn evaluate_power<F: CycloField>(
    md: &Module<F>,
    x: &FreeElem<F::Elem>,
    k: u32,
    v: &SparseVec<F::Elem>,
) -> SparseVec<F::Elem> {
    let mut acc = v.clone();
    for _ in 0..k {
        if acc.is_zero() {
            break;
        }
        acc = evaluate(md, x, &acc);
    }
    acc
}
