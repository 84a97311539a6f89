use cyclotomic::{CycloField, Exact, RootOrder};
use proptest::prelude::*;
use schnizer::{relation_failures, AlgType, Gen, Module, ModuleSpec};
use weylrep::SparseVec;

fn module(typ: AlgType, n: usize, lambda: Vec<u32>) -> Module<Exact> {
    let order = RootOrder::new(5).unwrap();
    Module::new(ModuleSpec::new(typ, n, order, lambda).unwrap(), Exact::new(order)).unwrap()
}

fn family() -> impl Strategy<Value = (AlgType, usize)> {
    prop_oneof![Just((AlgType::A, 2)), Just((AlgType::C, 2)), Just((AlgType::B, 3)), Just((AlgType::D, 4))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relations_hold_on_random_basis_vectors(
        (typ, n) in family(),
        lambda in prop::collection::vec(0u32..5, 4),
        raw in any::<u64>(),
    ) {
        let md = module(typ, n, lambda[..n].to_vec());
        let code = raw % md.shape().dim();
        prop_assert_eq!(relation_failures(&md, code), Vec::<String>::new());
    }

    #[test]
    fn torus_generators_are_inverse_and_diagonal(
        (typ, n) in family(),
        lambda in prop::collection::vec(0u32..5, 4),
        raw in any::<u64>(),
        i in 1usize..5,
    ) {
        let md = module(typ, n, lambda[..n].to_vec());
        let i = 1 + (i - 1) % n;
        let f = md.field();
        let u = SparseVec::unit(raw % md.shape().dim(), f.one());
        prop_assert_eq!(md.apply_word(&[Gen::T(i), Gen::TInv(i)], &u), u.clone());
        let tu = md.apply(Gen::T(i), &u);
        prop_assert_eq!(tu.codes().collect::<Vec<_>>(), u.codes().collect::<Vec<_>>());
        let code = u.codes().next().unwrap();
        prop_assert_eq!(tu.get(code), Some(&f.eps_pow(md.t_exponent(i, code))));
    }
}
