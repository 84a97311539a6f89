use cyclotomic::{CycloField, Exact, RootOrder};
use proptest::prelude::*;
use weylrep::{
    term_apply, x_apply, z_eval, AlgType, IndexShape, MultiIndex, ParamTables, SparseVec, Term, WeylError, XWord, ZWord,
};

fn setup(typ: AlgType, n: usize) -> (IndexShape, Exact) {
    let order = RootOrder::new(5).unwrap();
    (IndexShape::new(typ, n, order).unwrap(), Exact::new(order))
}

#[test]
fn shapes_count_positive_roots() {
    let o = RootOrder::new(5).unwrap();
    assert_eq!(IndexShape::new(AlgType::A, 3, o).unwrap().len(), 6);
    assert_eq!(IndexShape::new(AlgType::B, 3, o).unwrap().len(), 9);
    assert_eq!(IndexShape::new(AlgType::C, 2, o).unwrap().len(), 4);
    assert_eq!(IndexShape::new(AlgType::D, 4, o).unwrap().len(), 12);
    assert!(matches!(IndexShape::new(AlgType::C, 1, o), Err(WeylError::RankTooSmall { .. })));
    assert!(matches!(IndexShape::new(AlgType::B, 2, o), Err(WeylError::RankTooSmall { .. })));
    assert!(matches!(IndexShape::new(AlgType::D, 3, o), Err(WeylError::RankTooSmall { .. })));
    assert!(matches!(IndexShape::new(AlgType::A, 0, o), Err(WeylError::RankTooSmall { .. })));
}

#[test]
fn shape_membership() {
    let (a, _) = setup(AlgType::A, 3);
    assert!(a.slot(1, 3).is_some() && a.slot(3, 1).is_none());
    let (d, _) = setup(AlgType::D, 4);
    assert!(d.slot(3, 4).is_some() && d.slot(4, 1).is_none());
    assert_eq!(d.label(), "D4");
}

#[test]
fn encode_decode_examples() {
    let (s, _) = setup(AlgType::C, 2);
    assert_eq!(s.encode(&MultiIndex::zero(&s)).unwrap(), 0);
    assert_eq!(s.decode(s.dim() - 1).entries(), &[4, 4, 4, 4]);
    let unit = MultiIndex::unit(&s, 1, 1).unwrap();
    assert_eq!(s.encode(&unit).unwrap(), s.radix_weight(s.slot(1, 1).unwrap()));
    assert!(s.encode(&MultiIndex::from_entries(vec![0, 5, 0, 0])).is_err());
    assert!(s.encode(&MultiIndex::from_entries(vec![0, 0, 0])).is_err());
}

#[test]
fn x_apply_examples() {
    let (s, k) = setup(AlgType::C, 2);
    let p11 = s.slot(1, 1).unwrap();
    let u0 = SparseVec::unit(0, k.one());
    let mut expect = vec![0; 4];
    expect[p11] = 4;
    let w = x_apply(&s, &XWord::new(vec![(p11, 1)]), &u0);
    let code = s.encode(&MultiIndex::from_entries(expect)).unwrap();
    assert_eq!(w, SparseVec::unit(code, k.one()));
    let v = SparseVec::from_terms(&k, vec![(7, k.eps_pow(2)), (131, k.from_int(-3))]);
    assert_eq!(x_apply(&s, &XWord::default(), &v), v);
    let back = x_apply(&s, &XWord::new(vec![(p11, 1)]), &x_apply(&s, &XWord::new(vec![(p11, -1)]), &v));
    assert_eq!(back, v);
}

#[test]
fn z_eval_examples() {
    let (s, k) = setup(AlgType::C, 2);
    let p11 = s.slot(1, 1).unwrap();
    let mut b = vec![0; 4];
    b[p11] = 1;
    let zero = MultiIndex::zero(&s);
    let w = ZWord::new(vec![(p11, -1)], 0, 1);
    assert_eq!(z_eval(&k, &s, &w, &b, 0, &zero), k.from_int(-1));
    assert_eq!(z_eval(&k, &s, &ZWord::new(vec![], 0, 0), &b, 0, &zero), k.one());
    assert_eq!(z_eval(&k, &s, &ZWord::new(vec![], 0, 1), &b, 0, &zero), k.zero());
    // A d = 2 brace divides the exponent by 2 modulo l: E = 1 gives [3]_{eps^2}.
    let w2 = ZWord::new(vec![], 1, 2);
    assert_eq!(z_eval(&k, &s, &w2, &b, 0, &zero), k.quantum_int(3, 2));
}

#[test]
fn term_apply_examples() {
    let (s, k) = setup(AlgType::C, 2);
    let p11 = s.slot(1, 1).unwrap();
    let mut params = ParamTables::zeros(&s);
    params.b[p11] = 1;
    let t = Term::new(ZWord::new(vec![(p11, -1)], 0, 1), XWord::new(vec![(p11, 1)]));
    let u = SparseVec::unit(s.radix_weight(p11), k.one());
    assert_eq!(term_apply(&k, &s, &t, &params, &u), SparseVec::unit(0, k.from_int(-1)));
    // Zero brace argument kills the vector.
    let dead = Term::new(ZWord::new(vec![], 0, 1), XWord::new(vec![(p11, 1)]));
    assert!(term_apply(&k, &s, &dead, &params, &u).is_zero());
    let id = Term::new(ZWord::new(vec![], 0, 0), XWord::default());
    let v = SparseVec::from_terms(&k, vec![(3, k.eps_pow(1)), (600, k.from_int(2))]);
    assert_eq!(term_apply(&k, &s, &id, &params, &v), v);
}

#[test]
fn a_parameters_scale_shifts() {
    let (s, k) = setup(AlgType::C, 2);
    let p12 = s.slot(1, 2).unwrap();
    let mut params = ParamTables::zeros(&s);
    params.a[p12] = 3;
    let t = Term::new(ZWord::new(vec![], 0, 0), XWord::new(vec![(p12, 2)]));
    let out = term_apply(&k, &s, &t, &params, &SparseVec::unit(0, k.one()));
    assert_eq!(out.iter().next().unwrap().1, &k.eps_pow(6));
}

#[test]
fn weyl_relation_on_all_basis_vectors() {
    let (s, k) = setup(AlgType::C, 2);
    let params = ParamTables::zeros(&s);
    for p in 0..s.len() {
        let x = Term::new(ZWord::new(vec![], 0, 0), XWord::new(vec![(p, 1)]));
        let z = Term::new(ZWord::new(vec![(p, 1)], 0, 0), XWord::default());
        let zq = Term::new(ZWord::new(vec![(p, 1)], 0, 0), XWord::default());
        for code in 0..s.dim() {
            let u = SparseVec::unit(code, k.one());
            let xz = term_apply(&k, &s, &x, &params, &term_apply(&k, &s, &z, &params, &u));
            let zx = term_apply(&k, &s, &zq, &params, &term_apply(&k, &s, &x, &params, &u));
            assert_eq!(xz, zx.scaled(&k, &k.eps_pow(1)), "slot {p}, code {code}");
            for q in (0..s.len()).filter(|&q| q != p) {
                let zq2 = Term::new(ZWord::new(vec![(q, 1)], 0, 0), XWord::default());
                let a = term_apply(&k, &s, &x, &params, &term_apply(&k, &s, &zq2, &params, &u));
                let b = term_apply(&k, &s, &zq2, &params, &term_apply(&k, &s, &x, &params, &u));
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn x_and_z_have_order_l() {
    let (s, k) = setup(AlgType::A, 2);
    let params = ParamTables::zeros(&s);
    for p in 0..s.len() {
        let x5 = XWord::new(vec![(p, 5)]);
        let z5 = Term::new(ZWord::new(vec![(p, 5)], 0, 0), XWord::default());
        for code in 0..s.dim() {
            let u = SparseVec::unit(code, k.one());
            assert_eq!(x_apply(&s, &x5, &u), u);
            assert_eq!(term_apply(&k, &s, &z5, &params, &u), u);
        }
    }
}

#[test]
fn sparse_vec_json_round_trip() {
    let (s, k) = setup(AlgType::B, 3);
    let v = SparseVec::from_terms(&k, vec![(0, k.eps_pow(3)), (1_953_124, k.from_int(-2)), (77, k.zero())]);
    assert_eq!(v.len(), 2);
    let text = v.to_json(&k, &s);
    let back = SparseVec::from_json(&k, &s, &text).unwrap();
    assert_eq!(back, v);
    assert_eq!(back.to_json(&k, &s), text);
    let other = IndexShape::new(AlgType::C, 3, RootOrder::new(5).unwrap()).unwrap();
    assert!(SparseVec::from_json(&k, &other, &text).is_err());
}

proptest! {
    #[test]
    fn encode_decode_round_trip(code in 0u64..390_625) {
        let (s, _) = setup(AlgType::C, 2);
        let code = code % s.dim();
        prop_assert_eq!(s.encode(&s.decode(code)).unwrap(), code);
    }

    #[test]
    fn x_apply_is_linear(c1 in 0u64..625, c2 in 0u64..625, e in -7i64..7, slot in 0usize..4) {
        let (s, k) = setup(AlgType::C, 2);
        let w = XWord::new(vec![(slot, e)]);
        let a = SparseVec::unit(c1, k.eps_pow(1));
        let b = SparseVec::unit(c2, k.from_int(3));
        let sum = a.added(&k, &b);
        prop_assert_eq!(x_apply(&s, &w, &sum), x_apply(&s, &w, &a).added(&k, &x_apply(&s, &w, &b)));
    }

    #[test]
    fn term_apply_is_linear(c1 in 0u64..625, c2 in 0u64..625, h in -3i64..3, off in -9i64..9, d in 0u8..3) {
        let (s, k) = setup(AlgType::C, 2);
        let mut params = ParamTables::zeros(&s);
        params.b = vec![1, 2, 3, 1];
        let t = Term::new(ZWord::new(vec![(1, h), (2, 1)], off, d), XWord::new(vec![(0, 1), (3, -2)]));
        let a = SparseVec::unit(c1, k.eps_pow(2));
        let b = SparseVec::unit(c2, k.from_int(-5));
        let lhs = term_apply(&k, &s, &t, &params, &a.added(&k, &b));
        let rhs = term_apply(&k, &s, &t, &params, &a).added(&k, &term_apply(&k, &s, &t, &params, &b));
        prop_assert_eq!(lhs, rhs);
    }
}
