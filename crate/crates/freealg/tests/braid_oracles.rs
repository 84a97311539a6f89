use cyclotomic::{CycloField, Exact, RootOrder};
use freealg::{
    braid_t, default_w0_word, evaluate, evaluate_power, root_vectors, BraidContext, BraidConvention, FreeAlgError,
    FreeElem, ReducedWord, RootVectorOps,
};
use proptest::prelude::*;
use schnizer::{AlgType, Gen, Module, ModuleSpec};
use weylrep::SparseVec;

fn order() -> RootOrder {
    RootOrder::new(5).unwrap()
}

fn module(typ: AlgType, n: usize, lambda: Vec<u32>) -> Module<Exact> {
    Module::new(ModuleSpec::new(typ, n, order(), lambda).unwrap(), Exact::new(order())).unwrap()
}

fn ctx(md: &Module<Exact>) -> BraidContext<Exact> {
    BraidContext::new(md.field().clone(), md.spec(), BraidConvention::Printed)
}

fn sample_codes(dim: u64, count: u64) -> Vec<u64> {
    (0..count).map(|k| (k * 2_654_435_761 + 7) % dim).collect()
}

#[test]
fn braid_images_of_generators() {
    let md = module(AlgType::C, 2, vec![1, 2]);
    let cx = ctx(&md);
    let k = md.field();
    let img = braid_t(&cx, 1, &FreeElem::gen(k, Gen::E(1)));
    assert_eq!(img, FreeElem::from_terms(k, vec![(vec![Gen::F(1), Gen::T(1)], k.from_int(-1))]));
    let img = braid_t(&cx, 2, &FreeElem::gen(k, Gen::F(2)));
    assert_eq!(img, FreeElem::from_terms(k, vec![(vec![Gen::TInv(2), Gen::E(2)], k.from_int(-1))]));
    // T_i(t_i) = t_i t_i^{-2}, kept as a word and equal to t_i^{-1} on V.
    let img = braid_t(&cx, 1, &FreeElem::gen(k, Gen::T(1)));
    assert_eq!(img.len(), 1);
    for c in sample_codes(625, 20) {
        let u = SparseVec::unit(c, k.one());
        assert_eq!(evaluate(&md, &img, &u), md.apply(Gen::TInv(1), &u));
    }
    let a2 = module(AlgType::A, 3, vec![0, 0, 0]);
    let cx = ctx(&a2);
    let k = a2.field();
    assert_eq!(braid_t(&cx, 1, &FreeElem::gen(k, Gen::T(3))), FreeElem::gen(k, Gen::T(3)));
}

#[test]
fn default_words_are_reduced_words_of_the_longest_element() {
    assert_eq!(default_w0_word(AlgType::A, 1).unwrap().indices(), &[1]);
    assert_eq!(default_w0_word(AlgType::A, 2).unwrap().indices(), &[1, 2, 1]);
    assert_eq!(default_w0_word(AlgType::C, 2).unwrap().indices().len(), 4);
    for (typ, n) in [
        (AlgType::A, 4),
        (AlgType::B, 3),
        (AlgType::B, 4),
        (AlgType::C, 3),
        (AlgType::D, 4),
        (AlgType::D, 5),
        (AlgType::D, 6),
    ] {
        let w = default_w0_word(typ, n).unwrap();
        assert_eq!(w.indices().len(), typ.positive_roots(n), "{typ}{n}");
        let mut roots = w.roots().to_vec();
        roots.sort();
        roots.dedup();
        assert_eq!(roots.len(), typ.positive_roots(n));
    }
}

#[test]
fn reduced_word_validation() {
    assert!(matches!(ReducedWord::new(AlgType::A, 2, vec![1, 1, 2]), Err(FreeAlgError::NotReduced { .. })));
    assert!(matches!(ReducedWord::new(AlgType::A, 2, vec![1, 2]), Err(FreeAlgError::WrongLength { .. })));
    assert!(matches!(ReducedWord::new(AlgType::A, 2, vec![1, 3, 1]), Err(FreeAlgError::BadIndex { .. })));
    let w = ReducedWord::new(AlgType::A, 2, vec![2, 1, 2]).unwrap();
    assert_eq!(w.roots(), &[vec![0, 1], vec![1, 1], vec![1, 0]]);
    assert!(ReducedWord::new(AlgType::C, 2, vec![2, 1, 2, 1]).is_ok());
}

#[test]
fn root_vectors_start_with_the_first_generator() {
    let a1 = module(AlgType::A, 1, vec![2]);
    let (e, f) = root_vectors(&ctx(&a1), &default_w0_word(AlgType::A, 1).unwrap());
    assert_eq!(e, vec![FreeElem::gen(a1.field(), Gen::E(1))]);
    assert_eq!(f, vec![FreeElem::gen(a1.field(), Gen::F(1))]);
    let c2 = module(AlgType::C, 2, vec![0, 0]);
    let w = ReducedWord::new(AlgType::C, 2, vec![2, 1, 2, 1]).unwrap();
    let (e, _) = root_vectors(&ctx(&c2), &w);
    assert_eq!(e.len(), 4);
    assert_eq!(e[0], FreeElem::gen(c2.field(), Gen::E(2)));
}

/// t_j e_beta t_j^{-1} = eps^{d_j <beta, alpha_j>} e_beta on V, with the
/// pairing read off the Cartan matrix.
fn check_degrees(md: &Module<Exact>, w: &ReducedWord) {
    let k = md.field();
    let a = md.spec().cartan();
    let d = md.spec().d_vector();
    let (es, fs) = root_vectors(&ctx(md), w);
    for (beta, (e, f)) in w.roots().iter().zip(es.iter().zip(&fs)) {
        for j in 1..=md.spec().rank() {
            let pair: i64 = beta.iter().enumerate().map(|(i, &c)| c * a[j - 1][i]).sum::<i64>() * d[j - 1] as i64;
            for c in sample_codes(md.shape().dim(), 8) {
                let u = SparseVec::unit(c, k.one());
                let conj = md.apply(Gen::T(j), &evaluate(md, e, &md.apply(Gen::TInv(j), &u)));
                assert_eq!(conj, evaluate(md, e, &u).scaled(k, &k.eps_pow(pair)), "beta {beta:?}, t{j}");
                let conj = md.apply(Gen::T(j), &evaluate(md, f, &md.apply(Gen::TInv(j), &u)));
                assert_eq!(conj, evaluate(md, f, &u).scaled(k, &k.eps_pow(-pair)));
            }
        }
    }
}

#[test]
fn root_vectors_have_their_root_degree() {
    let a2 = module(AlgType::A, 2, vec![1, 3]);
    check_degrees(&a2, &default_w0_word(AlgType::A, 2).unwrap());
    let c2 = module(AlgType::C, 2, vec![2, 4]);
    check_degrees(&c2, &default_w0_word(AlgType::C, 2).unwrap());
    check_degrees(&c2, &ReducedWord::new(AlgType::C, 2, vec![2, 1, 2, 1]).unwrap());
}

/// The images of the generators under T_i satisfy the defining relations
/// on V: conjugation by T_i(t_k), the commutator of T_i(e_j) with T_i(f_j),
/// and commutation of T_i(e_j) with T_i(f_m) for m != j.
fn braid_relations_hold(md: &Module<Exact>, conv: BraidConvention) -> bool {
    let k = md.field();
    let cx = BraidContext::new(k.clone(), md.spec(), conv);
    let n = md.spec().rank();
    let a = md.spec().cartan();
    let d = md.spec().d_vector();
    let img = |i: usize, g: Gen| braid_t(&cx, i, &FreeElem::gen(k, g));
    for i in 1..=n {
        for j in 1..=n {
            let (te, tf, tt, tti) = (img(i, Gen::E(j)), img(i, Gen::F(j)), img(i, Gen::T(j)), img(i, Gen::TInv(j)));
            let dj = d[j - 1] as i64;
            let denom = k.inv(&k.sub(&k.eps_pow(dj), &k.eps_pow(-dj))).unwrap();
            for c in sample_codes(md.shape().dim(), 25) {
                let u = SparseVec::unit(c, k.one());
                let ef = evaluate(md, &te, &evaluate(md, &tf, &u));
                let fe = evaluate(md, &tf, &evaluate(md, &te, &u));
                let rhs = evaluate(md, &tt, &u).subtracted(k, &evaluate(md, &tti, &u)).scaled(k, &denom);
                if ef.subtracted(k, &fe) != rhs {
                    return false;
                }
                for m in (1..=n).filter(|&m| m != j) {
                    let tfm = img(i, Gen::F(m));
                    let ef = evaluate(md, &te, &evaluate(md, &tfm, &u));
                    if ef != evaluate(md, &tfm, &evaluate(md, &te, &u)) {
                        return false;
                    }
                }
                for m in 1..=n {
                    let tm = img(i, Gen::T(m));
                    let tmi = img(i, Gen::TInv(m));
                    let q = k.eps_pow(d[m - 1] as i64 * a[m - 1][j - 1]);
                    let conj = evaluate(md, &tm, &evaluate(md, &te, &evaluate(md, &tmi, &u)));
                    if conj != evaluate(md, &te, &u).scaled(k, &q) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn printed_braid_convention_is_an_automorphism() {
    for (typ, lam) in [(AlgType::A, vec![1, 2]), (AlgType::C, vec![3, 1])] {
        let md = module(typ, 2, lam);
        assert!(braid_relations_hold(&md, BraidConvention::Printed), "{typ}2");
    }
}

#[test]
fn mirrored_braid_convention_breaks_the_relations() {
    let md = module(AlgType::C, 2, vec![3, 1]);
    assert!(!braid_relations_hold(&md, BraidConvention::Mirrored));
}

#[test]
fn evaluation_basics() {
    let md = module(AlgType::C, 2, vec![1, 1]);
    let k = md.field();
    let v = SparseVec::from_terms(k, vec![(3, k.eps_pow(1)), (400, k.from_int(2))]);
    assert_eq!(evaluate(&md, &FreeElem::one(k), &v), v);
    let e1 = FreeElem::gen(k, Gen::E(1));
    assert_eq!(evaluate_power(&md, &e1, 2, &v), md.apply(Gen::E(1), &md.apply(Gen::E(1), &v)));
    assert_eq!(evaluate_power(&md, &e1, 0, &v), v);
    // e_i f_i - f_i e_i - (t_i - t_i^{-1})/(eps_i - eps_i^{-1}) vanishes on V.
    for i in 1..=2usize {
        let di = md.spec().d_vector()[i - 1] as i64;
        let c = k.inv(&k.sub(&k.eps_pow(di), &k.eps_pow(-di))).unwrap();
        let x = FreeElem::from_terms(
            k,
            vec![
                (vec![Gen::E(i), Gen::F(i)], k.one()),
                (vec![Gen::F(i), Gen::E(i)], k.from_int(-1)),
                (vec![Gen::T(i)], k.neg(&c)),
                (vec![Gen::TInv(i)], c.clone()),
            ],
        );
        for code in sample_codes(625, 30) {
            assert!(evaluate(&md, &x, &SparseVec::unit(code, k.one())).is_zero());
        }
    }
}

#[test]
fn operator_path_matches_free_algebra_root_vectors() {
    for (typ, lam) in [(AlgType::A, vec![2, 1]), (AlgType::C, vec![1, 3])] {
        let md = module(typ, 2, lam);
        let k = md.field();
        let w = default_w0_word(typ, 2).unwrap();
        let cx = ctx(&md);
        let (es, fs) = root_vectors(&cx, &w);
        let mut ops = RootVectorOps::new(&md, &cx, &w);
        for c in sample_codes(md.shape().dim(), 4) {
            let u = SparseVec::unit(c, k.one());
            for kk in 1..=w.indices().len() {
                assert_eq!(ops.apply_e(kk, &u), evaluate(&md, &es[kk - 1], &u), "{typ}2 e_beta{kk} at {c}");
                assert_eq!(ops.apply_f(kk, &u), evaluate(&md, &fs[kk - 1], &u), "{typ}2 f_beta{kk} at {c}");
            }
        }
    }
}

#[test]
fn root_vector_powers_vanish_and_are_central() {
    for (typ, lam) in [(AlgType::A, vec![2, 1]), (AlgType::C, vec![1, 3])] {
        let md = module(typ, 2, lam);
        let k = md.field();
        let w = default_w0_word(typ, 2).unwrap();
        let mut ops = RootVectorOps::new(&md, &ctx(&md), &w);
        for c in sample_codes(md.shape().dim(), 15) {
            let u = SparseVec::unit(c, k.one());
            for kk in 1..=w.indices().len() {
                assert!(ops.power_e(kk, 5, &u).is_zero(), "{typ}2 e_beta{kk}^5 at {c}");
                let p = ops.power_f(kk, 5, &u);
                for g in (1..=2).flat_map(|i| [Gen::E(i), Gen::F(i), Gen::T(i)]) {
                    let moved = md.apply(g, &u);
                    assert_eq!(md.apply(g, &p), ops.power_f(kk, 5, &moved), "{typ}2 f_beta{kk}^5 and {g}");
                }
            }
        }
    }
}

/// T_{w0}(e_i) along a word, applied to V through the prefix operators.
fn longest_image(
    md: &Module<Exact>,
    word: Vec<usize>,
    g: Gen,
    u: &SparseVec<<Exact as CycloField>::Elem>,
) -> SparseVec<<Exact as CycloField>::Elem> {
    let w = ReducedWord::new(AlgType::C, 2, word).unwrap();
    let mut ops = RootVectorOps::new(md, &ctx(md), &w);
    ops.apply_prefix(4, g, u)
}

#[test]
fn longest_element_action_is_word_independent() {
    let md = module(AlgType::C, 2, vec![2, 3]);
    let k = md.field();
    let cx = ctx(&md);
    for g in [Gen::E(1), Gen::E(2)] {
        let wa = ReducedWord::new(AlgType::C, 2, vec![1, 2, 1, 2]).unwrap();
        let wb = ReducedWord::new(AlgType::C, 2, vec![2, 1, 2, 1]).unwrap();
        let mut a = RootVectorOps::new(&md, &cx, &wa);
        let mut b = RootVectorOps::new(&md, &cx, &wb);
        for c in 0..md.shape().dim() {
            let u = SparseVec::unit(c, k.one());
            assert_eq!(a.apply_prefix(4, g, &u), b.apply_prefix(4, g, &u), "{g} at {c}");
        }
        // The operator path agrees with the expanded chain T_1 T_2 T_1 T_2.
        let chain = [1, 2, 1, 2].iter().rev().fold(FreeElem::gen(k, g), |acc, &i| braid_t(&cx, i, &acc));
        for c in sample_codes(md.shape().dim(), 3) {
            let u = SparseVec::unit(c, k.one());
            assert_eq!(evaluate(&md, &chain, &u), longest_image(&md, vec![1, 2, 1, 2], g, &u));
        }
    }
}

#[test]
fn text_form() {
    let k = Exact::new(order());
    let x =
        FreeElem::from_terms(&k, vec![(vec![Gen::E(1), Gen::F(2), Gen::TInv(1)], k.from_int(2)), (vec![], k.one())]);
    assert_eq!(x.to_text(&k), "[1, 0, 0, 0]*1 + [2, 0, 0, 0]*e1.f2.t1^-1");
    assert_eq!(FreeElem::<<Exact as CycloField>::Elem>::zero().to_text(&k), "0");
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in 0usize..8, b in 0usize..8, c in 0usize..8) {
        let k = Exact::new(order());
        let gens = [Gen::E(1), Gen::F(1), Gen::T(1), Gen::TInv(1), Gen::E(2), Gen::F(2), Gen::T(2), Gen::TInv(2)];
        let x = FreeElem::gen(&k, gens[a]).add(&k, &FreeElem::one(&k));
        let y = FreeElem::gen(&k, gens[b]).scaled(&k, &k.eps_pow(2));
        let z = FreeElem::gen(&k, gens[c]);
        prop_assert_eq!(x.mul(&k, &y).mul(&k, &z), x.mul(&k, &y.mul(&k, &z)));
    }
}
