use cyclotomic::{ArithOp, CycloField, Exact, FieldError, ModP, RootOrder};
use num_rational::BigRational;
use proptest::prelude::*;

fn k5() -> Exact {
    Exact::new(RootOrder::new(5).unwrap())
}

#[test]
fn root_order_rejects_even_and_small() {
    assert!(RootOrder::new(5).is_ok());
    assert!(RootOrder::new(9).is_ok());
    assert!(matches!(RootOrder::new(4), Err(FieldError::BadOrder(4))));
    assert!(matches!(RootOrder::new(3), Err(FieldError::BadOrder(3))));
    assert!(matches!(RootOrder::new(1), Err(FieldError::BadOrder(1))));
}

#[test]
fn cyclotomic_polynomial_degrees() {
    for (l, phi) in [(5, 4), (7, 6), (9, 6), (15, 8), (21, 12), (25, 20)] {
        let k = Exact::new(RootOrder::new(l).unwrap());
        assert_eq!(k.degree(), phi, "phi({l})");
        // eps is a root of Phi_l: eps^l = 1 and eps^d != 1 for proper divisors.
        assert_eq!(k.eps_pow(l as i64), k.one());
        for d in 1..l {
            if l % d == 0 {
                assert_ne!(k.eps_pow(d as i64), k.one(), "eps^{d} for l = {l}");
            }
        }
    }
}

#[test]
fn field_arith_examples() {
    let k = k5();
    let x = k.add(&k.eps_pow(2), &k.from_int(3));
    assert_eq!(k.field_arith(ArithOp::Add, &x, &k.neg(&x)).unwrap(), k.zero());
    assert_eq!(k.field_arith(ArithOp::Mul, &k.eps_pow(1), &k.eps_pow(4)).unwrap(), k.one());
    assert_eq!(k.field_arith(ArithOp::Mul, &x, &k.one()).unwrap(), x);
    assert_eq!(k.field_arith(ArithOp::Sub, &x, &x).unwrap(), k.zero());
    assert_eq!(k.field_arith(ArithOp::Neg, &x, &k.zero()).unwrap(), k.neg(&x));
}

#[test]
fn field_arith_rejects_mismatched_orders() {
    let k = k5();
    let k7 = Exact::new(RootOrder::new(7).unwrap());
    let y = k7.eps_pow(1);
    assert!(matches!(k.field_arith(ArithOp::Add, &k.one(), &y), Err(FieldError::OrderMismatch { .. })));
}

#[test]
fn field_inv_examples() {
    let k = k5();
    assert_eq!(k.inv(&k.one()).unwrap(), k.one());
    assert_eq!(k.inv(&k.eps_pow(1)).unwrap(), k.eps_pow(4));
    let w = k.sub(&k.eps_pow(1), &k.eps_pow(-1));
    assert_eq!(k.mul(&k.inv(&w).unwrap(), &w), k.one());
    assert!(matches!(k.inv(&k.zero()), Err(FieldError::DivisionByZero)));
}

#[test]
fn eps_pow_examples() {
    let k = k5();
    assert_eq!(k.eps_pow(0), k.one());
    assert_eq!(k.eps_pow(5), k.one());
    assert_eq!(k.eps_pow(-1), k.eps_pow(4));
}

#[test]
fn quantum_int_examples() {
    let k = k5();
    assert_eq!(k.quantum_int(0, 1), k.zero());
    assert_eq!(k.quantum_int(1, 2), k.one());
    assert_eq!(k.quantum_int(5, 1), k.zero());
    assert_eq!(k.quantum_int(2, 1), k.add(&k.eps_pow(1), &k.eps_pow(-1)));
}

#[test]
fn quantum_factorial_examples() {
    let k = k5();
    assert_eq!(k.quantum_factorial(0, 1).unwrap(), k.one());
    assert_eq!(k.quantum_factorial(1, 2).unwrap(), k.one());
    assert_eq!(k.quantum_factorial(2, 1).unwrap(), k.add(&k.eps_pow(1), &k.eps_pow(-1)));
    assert!(matches!(k.quantum_factorial(5, 1), Err(FieldError::FactorialVanishes { .. })));
}

#[test]
fn canonical_text_form() {
    let k = k5();
    let half = BigRational::new((-1).into(), 2.into());
    let x = k.add(&k.from_rational(half), &k.eps_pow(2));
    assert_eq!(k.to_text(&x), "[-1/2, 0, 1, 0]");
    assert_eq!(k.parse_text("[-1/2, 0, 1, 0]").unwrap(), x);
    assert_eq!(k.to_text(&k.eps_pow(4)), "[-1, -1, -1, -1]");
    assert!(k.parse_text("[1, 2]").is_err());
    assert!(k.parse_text("1, 2, 3, 4").is_err());
}

#[test]
fn modular_image_is_a_homomorphism() {
    let k = k5();
    let f = ModP::new(RootOrder::new(5).unwrap(), 11).unwrap();
    assert_eq!(f.eps_pow(5), f.one());
    assert_ne!(f.eps_pow(1), f.one());
    let x = k.add(&k.mul(&k.from_int(3), &k.eps_pow(2)), &k.eps_pow(-1));
    let y = k.sub(&k.quantum_int(3, 2), &k.from_int(7));
    let xy = k.mul(&x, &y);
    let img = |e| f.image_of(&k, e).unwrap();
    assert_eq!(img(&xy), f.mul(&img(&x), &img(&y)));
    assert_eq!(img(&k.inv(&x).unwrap()), f.inv(&img(&x)).unwrap());
    assert!(ModP::new(RootOrder::new(5).unwrap(), 13).is_err());
    assert!(ModP::new(RootOrder::new(5).unwrap(), 21).is_err());
}

fn small_elem(k: &Exact, coeffs: &[i64]) -> <Exact as CycloField>::Elem {
    coeffs.iter().enumerate().fold(k.zero(), |acc, (p, &c)| k.add(&acc, &k.mul(&k.from_int(c), &k.eps_pow(p as i64))))
}

proptest! {
    #[test]
    fn inverse_property(c in proptest::collection::vec(-6i64..6, 4)) {
        let k = k5();
        let x = small_elem(&k, &c);
        prop_assume!(!k.is_zero(&x));
        prop_assert_eq!(k.mul(&x, &k.inv(&x).unwrap()), k.one());
    }

    #[test]
    fn quantum_int_times_denominator(a in -20i64..20, d in 1u32..3) {
        let k = k5();
        let den = k.sub(&k.eps_pow(d as i64), &k.eps_pow(-(d as i64)));
        let num = k.sub(&k.eps_pow(d as i64 * a), &k.eps_pow(-(d as i64) * a));
        prop_assert_eq!(k.mul(&k.quantum_int(a, d), &den), num);
    }

    #[test]
    fn quantum_int_is_odd(a in -20i64..20, d in 1u32..3) {
        let k = k5();
        prop_assert_eq!(k.quantum_int(-a, d), k.neg(&k.quantum_int(a, d)));
    }

    #[test]
    fn eps_pow_is_a_homomorphism(j in -30i64..30, m in -30i64..30) {
        let k = k5();
        prop_assert_eq!(k.eps_pow(j + m), k.mul(&k.eps_pow(j), &k.eps_pow(m)));
    }

    #[test]
    fn ring_axioms(a in proptest::collection::vec(-4i64..4, 4),
                   b in proptest::collection::vec(-4i64..4, 4),
                   c in proptest::collection::vec(-4i64..4, 4)) {
        let k = k5();
        let (x, y, z) = (small_elem(&k, &a), small_elem(&k, &b), small_elem(&k, &c));
        prop_assert_eq!(k.mul(&x, &k.add(&y, &z)), k.add(&k.mul(&x, &y), &k.mul(&x, &z)));
        prop_assert_eq!(k.mul(&k.mul(&x, &y), &z), k.mul(&x, &k.mul(&y, &z)));
        prop_assert_eq!(k.mul(&x, &y), k.mul(&y, &x));
    }

    #[test]
    fn text_round_trip(a in proptest::collection::vec(-9i64..9, 4), den in 1i64..7) {
        let k = k5();
        let x = k.mul(&small_elem(&k, &a), &k.inv(&k.from_int(den)).unwrap());
        prop_assert_eq!(k.parse_text(&k.to_text(&x)).unwrap(), x);
    }
}
