//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails. Every comparison is exact.

use std::process::ExitCode;
use std::time::Instant;

use cyclotomic::{CycloField, Exact, RootOrder};
use modtools::{
    certify, dense_primitive_space, primitive_space, submodule_span, Certificate, CertifyConfig, Scope, SpanOptions,
    Status, Suite,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schnizer::{AlgType, BShift, Gen, Module, ModuleSpec};
use weylrep::SparseVec;

const L: u32 = 5;

type Outcome = Result<String, String>;

type Criterion = Box<dyn FnMut(&mut ChaCha8Rng) -> Outcome>;

fn order() -> RootOrder {
    RootOrder::new(L).expect("5 is a valid order")
}

fn spec(typ: AlgType, n: usize, lambda: Vec<u32>) -> ModuleSpec {
    ModuleSpec::new(typ, n, order(), lambda).expect("valid spec")
}

fn module(s: &ModuleSpec) -> Module<Exact> {
    Module::new(s.clone(), Exact::new(s.order())).expect("module builds")
}

fn random_lambdas(rng: &mut ChaCha8Rng, n: usize, count: usize) -> Vec<Vec<u32>> {
    (0..count).map(|_| (0..n).map(|_| rng.gen_range(0..L)).collect()).collect()
}

fn run(s: &ModuleSpec, suites: &[Suite], cfg: &CertifyConfig) -> Result<Certificate, String> {
    certify(s, suites, cfg).map_err(|e| e.to_string())
}

/// Requires `name` to be present and passing.
fn require_pass(c: &Certificate, name: &str, what: &str) -> Result<(), String> {
    match c.check(name) {
        Some(r) if r.status == Status::Pass => Ok(()),
        Some(r) => Err(format!("{what}: {name} is {:?}: {} witness {:?}", r.status, r.detail, r.witness)),
        None => Err(format!("{what}: no {name} check")),
    }
}

fn label(s: &ModuleSpec) -> String {
    format!("{}{} lambda={:?}", s.alg_type(), s.rank(), s.lambda())
}

fn relations_exhaustive(rng: &mut ChaCha8Rng) -> Outcome {
    let cfg = CertifyConfig::default();
    let mut swept = 0;
    for (typ, dim) in [(AlgType::A, 125), (AlgType::C, 625)] {
        for lam in random_lambdas(rng, 2, 5) {
            let s = spec(typ, 2, lam);
            let c = run(&s, &[Suite::Relation], &cfg)?;
            require_pass(&c, "relations", &label(&s))?;
            if c.dims.get("sampled") != Some(&dim) {
                return Err(format!("{}: swept {:?} of {dim} vectors", label(&s), c.dims.get("sampled")));
            }
            swept += dim;
        }
    }
    Ok(format!("all relations hold on {swept} basis vectors over 10 modules"))
}

fn relations_sampled(rng: &mut ChaCha8Rng) -> Outcome {
    let cfg = CertifyConfig { sample: 1000, ..CertifyConfig::default() };
    let mut out = Vec::new();
    for (typ, n) in [(AlgType::B, 3), (AlgType::D, 4)] {
        let s = spec(typ, n, random_lambdas(rng, n, 1).remove(0));
        let c = run(&s, &[Suite::Relation], &cfg)?;
        require_pass(&c, "relations", &label(&s))?;
        let sampled = c.dims.get("sampled").copied().unwrap_or(0);
        if sampled < 1000 {
            return Err(format!("{}: only {sampled} vectors sampled", label(&s)));
        }
        out.push(format!("{} ({sampled} of {})", label(&s), c.dims["V"]));
    }
    Ok(out.join("; "))
}

fn route_equality(rng: &mut ChaCha8Rng) -> Outcome {
    let cfg = CertifyConfig::default();
    for typ in [AlgType::C, AlgType::A] {
        let s = spec(typ, 2, random_lambdas(rng, 2, 1).remove(0));
        let c = run(&s, &[Suite::Routes], &cfg)?;
        require_pass(&c, "routes", &label(&s))?;
    }
    Ok("closed forms equal the constructed operators on every basis vector of C2 and A2".into())
}

fn primitive_uniqueness(rng: &mut ChaCha8Rng) -> Outcome {
    for typ in [AlgType::A, AlgType::C] {
        let s = spec(typ, 2, random_lambdas(rng, 2, 1).remove(0));
        let md = module(&s);
        let f = md.field();
        let blocked = primitive_space(&md, Scope::Exhaustive { bound: 10_000 }).map_err(|e| e.to_string())?;
        let dense = dense_primitive_space(&md, 10_000).map_err(|e| e.to_string())?;
        let u0 = SparseVec::unit(0, f.one());
        let blocked_vecs: Vec<_> = blocked.vectors().cloned().collect();
        if blocked_vecs != vec![u0.clone()] || dense != vec![u0] {
            return Err(format!(
                "{}: blocked dim {}, dense dim {}, not spanned by u(0)",
                label(&s),
                blocked_vecs.len(),
                dense.len()
            ));
        }
    }
    Ok("blocked and dense elimination both give the primitive space C u(0) at A2 and C2".into())
}

fn highest_weight(rng: &mut ChaCha8Rng) -> Outcome {
    let cfg = CertifyConfig::default();
    for (typ, n) in [(AlgType::A, 2), (AlgType::B, 3), (AlgType::C, 2), (AlgType::D, 4)] {
        for lam in random_lambdas(rng, n, 20) {
            let s = spec(typ, n, lam);
            require_pass(&run(&s, &[Suite::Highest], &cfg)?, "highest-weight", &label(&s))?;
        }
    }
    // The type B weight shift has two readings; only one can be certified.
    let mut printed_failures = 0;
    let lams = random_lambdas(rng, 3, 20);
    for lam in &lams {
        let s = spec(AlgType::B, 3, lam.clone()).with_bshift(BShift::Printed);
        let c = run(&s, &[Suite::Highest], &cfg)?;
        if c.check("highest-weight").map(|r| r.status) == Some(Status::Fail) {
            printed_failures += 1;
        }
    }
    if printed_failures == 0 {
        return Err("the printed type B shift was not rejected by any lambda".into());
    }
    Ok(format!(
        "80 weights pass at A2 B3 C2 D4 with the corrected type B shift; the printed shift fails for {printed_failures} of 20"
    ))
}

fn nilpotency() -> Outcome {
    let cfg = CertifyConfig { probes: 20, ..CertifyConfig::default() };
    for typ in [AlgType::A, AlgType::C] {
        let s = spec(typ, 2, vec![2, 3]);
        require_pass(&run(&s, &[Suite::Nilpotent], &cfg)?, "nilpotent", &label(&s))?;
    }
    Ok("f^l u(0) = 0, e^l v = 0 on 100 vectors and t^l = 1 for every root vector at A2 and C2".into())
}

fn span_dim(s: &ModuleSpec) -> Result<usize, String> {
    let md = module(s);
    let seed = SparseVec::unit(0, md.field().one());
    submodule_span(&md, &seed, &SpanOptions::default()).map(|b| b.dim()).map_err(|e| e.to_string())
}

fn steinberg_dimension() -> Outcome {
    for (typ, expected) in [(AlgType::A, 125), (AlgType::C, 625)] {
        let s = spec(typ, 2, vec![L - 1, L - 1]);
        let d = span_dim(&s)?;
        if d != expected {
            return Err(format!("{}: span has dim {d}, expected {expected}", label(&s)));
        }
    }
    Ok("U u(0) has dim 125 at A2 and 625 at C2".into())
}

fn trivial_weight() -> Outcome {
    for (typ, n) in [(AlgType::A, 1), (AlgType::C, 2), (AlgType::B, 3), (AlgType::D, 4)] {
        let s = spec(typ, n, vec![0; n]);
        let d = span_dim(&s)?;
        if d != 1 {
            return Err(format!("{}: span has dim {d}", label(&s)));
        }
    }
    Ok("U u(0) = C u(0) at A1, C2, B3 and D4".into())
}

/// Rank of a list of dense vectors by Gaussian elimination.
fn dense_rank<F: CycloField>(f: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !f.is_zero(&rows[r][c])) else { continue };
        rows.swap(rank, p);
        let inv = f.inv(&rows[rank][c]).expect("pivot is nonzero");
        let pivot: Vec<F::Elem> = rows[rank].iter().map(|x| f.mul(x, &inv)).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
        rank += 1;
    }
    rank
}

/// The sl2 ladder: a breadth-first Krylov search from u(0) under e, f and
/// t^{+-1}, keeping only images that raise the dense rank.
fn sl2_ladder() -> Outcome {
    let mut dims = Vec::new();
    for lam in 0..L {
        let s = spec(AlgType::A, 1, vec![lam]);
        let md = module(&s);
        let f = md.field();
        let size = md.shape().dim() as usize;
        let dense = |v: &SparseVec<<Exact as CycloField>::Elem>| {
            let mut row = vec![f.zero(); size];
            for (c, x) in v.iter() {
                row[*c as usize] = x.clone();
            }
            row
        };
        let mut queue = vec![SparseVec::unit(0, f.one())];
        let mut rows = vec![dense(&queue[0])];
        while let Some(v) = queue.pop() {
            for g in [Gen::E(1), Gen::F(1), Gen::T(1), Gen::TInv(1)] {
                let x = md.apply(g, &v);
                let mut grown = rows.clone();
                grown.push(dense(&x));
                if dense_rank(f, grown.clone()) > rows.len() {
                    rows = grown;
                    queue.push(x);
                }
            }
        }
        let d = dense_rank(f, rows);
        if d != lam as usize + 1 {
            return Err(format!("A1 lambda={lam}: dim {d}, expected {}", lam + 1));
        }
        dims.push(d.to_string());
    }
    Ok(format!("dims {} for lambda = 0..4", dims.join(", ")))
}

fn lowest_vector(rng: &mut ChaCha8Rng) -> Outcome {
    let cfg = CertifyConfig::default();
    for lam in random_lambdas(rng, 2, 10) {
        let s = spec(AlgType::C, 2, lam);
        require_pass(&run(&s, &[Suite::Lowest], &cfg)?, "lowest", &label(&s))?;
    }
    Ok("f_j u(m^lambda) = 0 for 10 weights and u(0) never occurs in f_j v at the Steinberg weight".into())
}

fn irreducibility(rng: &mut ChaCha8Rng) -> Outcome {
    let cfg = CertifyConfig { probes: 20, ..CertifyConfig::default() };
    for lam in random_lambdas(rng, 2, 10) {
        let s = spec(AlgType::C, 2, lam);
        require_pass(&run(&s, &[Suite::Irreducible], &cfg)?, "irreducible", &label(&s))?;
    }
    Ok("200 random vectors ascend to multiples of u(0) over 10 weights".into())
}

fn mutation_sensitivity() -> Outcome {
    let cfg = CertifyConfig { sample: 50, ..CertifyConfig::default() };
    let mut slots = 0;
    for (typ, lam) in [(AlgType::A, vec![1, 3]), (AlgType::C, vec![2, 1])] {
        let base = spec(typ, 2, lam);
        for slot in 0..base.shape().len() {
            let mut p = base.params().clone();
            p.b[slot] += 1;
            let bad = base.clone().with_params(p).map_err(|e| e.to_string())?;
            let c = run(&bad, &[Suite::Relation, Suite::Primitive, Suite::Highest], &cfg)?;
            let failed: Vec<_> = c.checks.iter().filter(|r| r.status == Status::Fail).collect();
            if failed.is_empty() {
                return Err(format!("{} slot {slot}: the corruption went unnoticed", label(&base)));
            }
            if let Some(r) = failed.iter().find(|r| r.witness.is_none()) {
                return Err(format!("{} slot {slot}: {} failed without a witness", label(&base), r.name));
            }
            slots += 1;
        }
    }
    let argv = [
        "qgr",
        "certify",
        "--type",
        "C",
        "--rank",
        "2",
        "--ell",
        "5",
        "--lambda",
        "2,1",
        "--suite",
        "highest",
        "--corrupt-b",
        "3",
    ];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = certify_cli::main_with(argv, &mut out, &mut err);
    if code != 1 {
        return Err(format!("corrupted CLI run exited {code}: {}", String::from_utf8_lossy(&err)));
    }
    Ok(format!("all {slots} corrupted b entries caught with witnesses; the CLI hook exits 1"))
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(5_318_008);
    let mut criteria: Vec<(&str, Criterion)> = vec![
        ("relations, exhaustive", Box::new(relations_exhaustive)),
        ("relations, sampled", Box::new(relations_sampled)),
        ("route equality", Box::new(route_equality)),
        ("primitive uniqueness", Box::new(primitive_uniqueness)),
        ("highest weight", Box::new(highest_weight)),
        ("nilpotency", Box::new(|_: &mut ChaCha8Rng| nilpotency())),
        ("steinberg dimension", Box::new(|_: &mut ChaCha8Rng| steinberg_dimension())),
        ("trivial weight", Box::new(|_: &mut ChaCha8Rng| trivial_weight())),
        ("sl2 ladder", Box::new(|_: &mut ChaCha8Rng| sl2_ladder())),
        ("lowest vector", Box::new(lowest_vector)),
        ("irreducibility probe", Box::new(irreducibility)),
        ("mutation sensitivity", Box::new(|_: &mut ChaCha8Rng| mutation_sensitivity())),
    ];
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter_mut().enumerate() {
        let start = Instant::now();
        let outcome = check(&mut rng);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.1}s]", k + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {} ({name}): {detail} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
