use cyclotomic::RootOrder;
use modtools::{certify, Backend, Certificate, CertifyConfig, Status, Suite};
use schnizer::{AlgType, ModuleSpec};
use weylrep::ParamTables;

fn order() -> RootOrder {
    RootOrder::new(5).unwrap()
}

fn spec(typ: AlgType, n: usize, lambda: Vec<u32>) -> ModuleSpec {
    ModuleSpec::new(typ, n, order(), lambda).unwrap()
}

fn cfg(sample: usize) -> CertifyConfig {
    CertifyConfig { sample, ..CertifyConfig::default() }
}

fn status(c: &Certificate, name: &str) -> Status {
    c.check(name).unwrap_or_else(|| panic!("no check {name}")).status
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL_SUITES {
        assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
    }
    assert!("everything".parse::<Suite>().is_err());
    assert_eq!("modp:1000000021".parse::<Backend>().unwrap(), Backend::ModP(1_000_000_021));
    assert_eq!("exact".parse::<Backend>().unwrap(), Backend::Exact);
    assert!("modp:x".parse::<Backend>().is_err());
}

#[test]
fn c2_passes_every_suite() {
    let c = certify(&spec(AlgType::C, 2, vec![3, 1]), &[Suite::All], &cfg(60)).unwrap();
    assert!(c.passed(), "{}", c.to_json(true));
    for name in [
        "relations",
        "primitive",
        "highest-weight",
        "nilpotent",
        "steinberg",
        "lowest",
        "central",
        "irreducible",
        "routes",
    ] {
        assert_eq!(status(&c, name), Status::Pass, "{name}");
    }
    assert_eq!(c.dims["V"], 625);
    assert_eq!(c.dims["steinberg-span"], 625);
    assert_eq!(c.dims["primitive"], 1);
}

#[test]
fn a2_skips_the_lowest_vector_but_passes_the_rest() {
    let c = certify(&spec(AlgType::A, 2, vec![2, 1]), &[Suite::All], &cfg(40)).unwrap();
    assert!(c.passed(), "{}", c.to_json(true));
    assert_eq!(status(&c, "lowest"), Status::Skip);
    assert_eq!(status(&c, "relations"), Status::Pass);
}

#[test]
fn sampled_relations_on_larger_modules() {
    for (typ, n, lam) in [(AlgType::B, 3, vec![1, 2, 0]), (AlgType::D, 4, vec![0, 1, 2, 3])] {
        let c = certify(&spec(typ, n, lam), &[Suite::Relation, Suite::Highest], &cfg(40)).unwrap();
        assert!(c.passed(), "{typ}{n}: {}", c.to_json(true));
        assert_eq!(c.dims["sampled"], 40);
    }
}

#[test]
fn certificates_are_deterministic_up_to_timings() {
    let s = spec(AlgType::C, 2, vec![1, 4]);
    let suites = [Suite::Relation, Suite::Nilpotent, Suite::Irreducible];
    let mut small = cfg(30);
    small.exhaustive_bound = 100;
    let a = certify(&s, &suites, &small).unwrap().to_json(true);
    let b = certify(&s, &suites, &small).unwrap().to_json(true);
    assert_eq!(a, b);
    small.seed += 1;
    let c = certify(&s, &suites, &small).unwrap().to_json(true);
    assert_ne!(a, c);
    let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(parsed["schema"], 1);
    assert_eq!(parsed["backend"], "exact");
    assert_eq!(parsed["spec"]["type"], "C");
}

#[test]
fn modular_backend_reverifies_exactly() {
    let mut c = cfg(30);
    c.backend = Backend::ModP(1_000_000_021);
    let cert = certify(&spec(AlgType::C, 2, vec![2, 2]), &[Suite::Primitive, Suite::Steinberg], &c).unwrap();
    assert!(cert.passed(), "{}", cert.to_json(true));
    assert_eq!(cert.backend, "modp:1000000021");
    assert_eq!(status(&cert, "exact-reverify"), Status::Pass);
}

#[test]
fn corrupting_any_b_entry_is_detected() {
    for (typ, lam) in [(AlgType::A, vec![1, 3]), (AlgType::C, vec![2, 1])] {
        let base = spec(typ, 2, lam);
        for slot in 0..base.shape().len() {
            let mut p: ParamTables = base.params().clone();
            p.b[slot] += 1;
            let bad = base.clone().with_params(p).unwrap();
            let cert = certify(&bad, &[Suite::Relation, Suite::Primitive, Suite::Highest], &cfg(30)).unwrap();
            assert!(!cert.passed(), "{typ}2 slot {slot}");
            let failed: Vec<_> = cert.checks.iter().filter(|c| c.status == Status::Fail).collect();
            assert!(failed.iter().all(|c| c.witness.is_some()), "{typ}2 slot {slot}");
        }
    }
}
