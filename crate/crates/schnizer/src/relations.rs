use cyclotomic::CycloField;
use weylrep::SparseVec;

use crate::{Gen, Module};

/// Names of the defining relations that fail on the basis vector u(code).
///
/// Checked: t_i t_j = t_j t_i, t_i t_i^-1 = 1, the conjugation of e_j and
/// f_j by t_i, [e_i, f_j] = delta_ij (t_i - t_i^-1)/(eps_i - eps_i^-1) and
/// the quantum Serre relations in the e's and in the f's.
pub fn relation_failures<F: CycloField>(md: &Module<F>, code: u64) -> Vec<String> {
    let f = md.field();
    let n = md.spec().rank();
    let a = md.spec().cartan();
    let d = md.spec().d_vector();
    let v = SparseVec::unit(code, f.one());
    let mut bad = Vec::new();
    let w = |word: &[Gen]| md.apply_word(word, &v);
    for i in 1..=n {
        if w(&[Gen::T(i), Gen::TInv(i)]) != v {
            bad.push(format!("t{i} t{i}^-1"));
        }
        let di = d[i - 1];
        for j in 1..=n {
            let aij = a[i - 1][j - 1];
            if w(&[Gen::T(i), Gen::T(j)]) != w(&[Gen::T(j), Gen::T(i)]) {
                bad.push(format!("t{i} t{j}"));
            }
            let q = f.eps_pow(i64::from(di) * aij);
            let qi = f.eps_pow(-i64::from(di) * aij);
            if w(&[Gen::T(i), Gen::E(j), Gen::TInv(i)]) != w(&[Gen::E(j)]).scaled(f, &q) {
                bad.push(format!("t{i} e{j} t{i}^-1"));
            }
            if w(&[Gen::T(i), Gen::F(j), Gen::TInv(i)]) != w(&[Gen::F(j)]).scaled(f, &qi) {
                bad.push(format!("t{i} f{j} t{i}^-1"));
            }
            let mut comm = w(&[Gen::E(i), Gen::F(j)]).subtracted(f, &w(&[Gen::F(j), Gen::E(i)]));
            if i == j {
                let denom = f.sub(&f.eps_pow(i64::from(di)), &f.eps_pow(-i64::from(di)));
                let scale = f.inv(&denom).expect("eps_i - eps_i^-1 is nonzero for odd l");
                let k = w(&[Gen::T(i)]).subtracted(f, &w(&[Gen::TInv(i)])).scaled(f, &scale);
                comm = comm.subtracted(f, &k);
            }
            if !comm.is_zero() {
                bad.push(format!("[e{i}, f{j}]"));
            }
            if i != j {
                let big_k = (1 - aij) as u32;
                for (name, mk) in [("e", Gen::E as fn(usize) -> Gen), ("f", Gen::F as fn(usize) -> Gen)] {
                    let mut acc = SparseVec::zero();
                    for k in 0..=big_k {
                        let fact = f.mul(
                            &f.quantum_factorial(k, di).expect("k < l"),
                            &f.quantum_factorial(big_k - k, di).expect("k < l"),
                        );
                        let mut c = f.inv(&fact).expect("quantum factorials below l are units");
                        if k % 2 == 1 {
                            c = f.neg(&c);
                        }
                        let mut word = vec![mk(i); k as usize];
                        word.push(mk(j));
                        word.extend(std::iter::repeat_n(mk(i), (big_k - k) as usize));
                        acc.add_assign(f, &w(&word).scaled(f, &c));
                    }
                    if !acc.is_zero() {
                        bad.push(format!("serre {name}{i}{j}"));
                    }
                }
            }
        }
    }
    bad
}
