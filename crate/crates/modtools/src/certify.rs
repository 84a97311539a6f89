use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use cyclotomic::{CycloField, Exact, ModP};
use freealg::{default_w0_word, BraidContext, BraidConvention, ReducedWord, RootVectorOps};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use schnizer::{
    closed_form_e, closed_form_f, lowest_index, relation_failures, BShift, Gen, Module, ModuleSpec, SchnizerError,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use weylrep::SparseVec;

use crate::{
    ascend_to_primitive, primitive_space, submodule_span, weight_of, Echelon, ModError, Scope, SpanOptions,
    SubmoduleBasis,
};

/// A group of checks that can be requested by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Relation,
    Primitive,
    Highest,
    Nilpotent,
    Steinberg,
    Lowest,
    Central,
    Irreducible,
    Routes,
    All,
}

impl Suite {
    pub const ALL_SUITES: [Suite; 10] = [
        Suite::Relation,
        Suite::Primitive,
        Suite::Highest,
        Suite::Nilpotent,
        Suite::Steinberg,
        Suite::Lowest,
        Suite::Central,
        Suite::Irreducible,
        Suite::Routes,
        Suite::All,
    ];

    fn name(self) -> &'static str {
        match self {
            Suite::Relation => "relation",
            Suite::Primitive => "primitive",
            Suite::Highest => "highest",
            Suite::Nilpotent => "nilpotent",
            Suite::Steinberg => "steinberg",
            Suite::Lowest => "lowest",
            Suite::Central => "central",
            Suite::Irreducible => "irreducible",
            Suite::Routes => "routes",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ModError;

    fn from_str(s: &str) -> Result<Self, ModError> {
        let t = s.trim().to_ascii_lowercase();
        Suite::ALL_SUITES.into_iter().find(|x| x.name() == t).ok_or_else(|| ModError::UnknownSuite(s.to_string()))
    }
}

/// Field used for the computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    /// Q(eps) with rational coefficients.
    #[default]
    Exact,
    /// The image in F_p; reported dimensions are re-verified over Q(eps).
    ModP(u64),
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::ModP(p) => write!(f, "modp:{p}"),
        }
    }
}

impl FromStr for Backend {
    type Err = ModError;

    fn from_str(s: &str) -> Result<Self, ModError> {
        let t = s.trim();
        if t == "exact" {
            return Ok(Backend::Exact);
        }
        t.strip_prefix("modp:")
            .and_then(|p| p.parse().ok())
            .map(Backend::ModP)
            .ok_or_else(|| ModError::UnknownBackend(s.to_string()))
    }
}

/// Sampling and size limits for a certification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyConfig {
    /// Basis vectors checked when a sweep cannot be exhaustive.
    pub sample: usize,
    pub seed: u64,
    /// Largest l^N for which sweeps and kernels cover all of V.
    pub exhaustive_bound: u64,
    /// Largest submodule that is spanned explicitly.
    pub span_limit: usize,
    /// Random vectors per probe (irreducibility) and per nilpotency check.
    pub probes: usize,
    /// Reduced word for the root vectors (default per type).
    pub w0_word: Option<Vec<usize>>,
    pub backend: Backend,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            sample: 1000,
            seed: 20_240_611,
            exhaustive_bound: 10_000,
            span_limit: 20_000,
            probes: 20,
            w0_word: None,
            backend: Backend::Exact,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not applicable to this type or above the configured size limits.
    Skip,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    /// A counterexample vector (sparse vector JSON) for failures.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub detail: String,
}

/// The module a certificate is about.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecEcho {
    #[serde(rename = "type")]
    pub typ: String,
    pub rank: usize,
    pub l: u32,
    pub lambda: Vec<u32>,
    pub lambda_prime: Vec<i64>,
    pub b_shift: String,
    pub default_params: bool,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl SpecEcho {
    fn of(spec: &ModuleSpec) -> Self {
        SpecEcho {
            typ: spec.alg_type().to_string(),
            rank: spec.rank(),
            l: spec.order().get(),
            lambda: spec.lambda().to_vec(),
            lambda_prime: spec.lambda_prime().to_vec(),
            b_shift: bshift_name(spec.bshift()).into(),
            default_params: spec.uses_default_params(),
            a: spec.params().a.clone(),
            b: spec.params().b.clone(),
        }
    }
}

fn bshift_name(b: BShift) -> &'static str {
    match b {
        BShift::Printed => "printed",
        BShift::Corrected => "corrected",
    }
}

/// Outcome of a certification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub spec: SpecEcho,
    pub backend: String,
    pub checks: Vec<CheckResult>,
    pub dims: BTreeMap<String, u64>,
    pub seed: u64,
    pub timings_ms: BTreeMap<String, u64>,
}

impl Certificate {
    /// True when no check failed (skipped checks do not count).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Pretty JSON. With `normalize` the timings are dropped, so equal
    /// inputs give byte-identical output.
    pub fn to_json(&self, normalize: bool) -> String {
        let mut c = self.clone();
        if normalize {
            c.timings_ms.clear();
        }
        serde_json::to_string_pretty(&c).expect("plain data serializes")
    }
}

/// Runs the requested suites on the module described by `spec`.
pub fn certify(spec: &ModuleSpec, suites: &[Suite], cfg: &CertifyConfig) -> Result<Certificate, ModError> {
    let order = spec.order();
    match cfg.backend {
        Backend::Exact => Runner::new(spec, Exact::new(order), cfg)?.run(suites),
        Backend::ModP(p) => {
            let mut runner = Runner::new(spec, ModP::new(order, p)?, cfg)?;
            runner.reverify = true;
            runner.run(suites)
        }
    }
}

fn expand(suites: &[Suite]) -> Vec<Suite> {
    let set: BTreeSet<Suite> = if suites.contains(&Suite::All) {
        Suite::ALL_SUITES.into_iter().filter(|&s| s != Suite::All).collect()
    } else {
        suites.iter().copied().collect()
    };
    set.into_iter().collect()
}

/// Work deferred to the exact field when running modulo p.
enum Reverify {
    /// u(0) spans the primitive space found mod p.
    Primitive(ModuleSpec),
    /// The words reproduce a closed span of this dimension.
    Span(ModuleSpec, Vec<Vec<Gen>>, usize, &'static str),
}

struct Runner<'c, F: CycloField> {
    spec: ModuleSpec,
    md: Module<F>,
    cfg: &'c CertifyConfig,
    reverify: bool,
    tasks: Vec<Reverify>,
    span: Option<Result<SubmoduleBasis<F::Elem>, String>>,
    dims: BTreeMap<String, u64>,
}

fn witness<F: CycloField>(md: &Module<F>, v: &SparseVec<F::Elem>) -> Option<Value> {
    serde_json::from_str(&v.to_json(md.field(), md.shape())).ok()
}

fn pass(name: &str, detail: String) -> CheckResult {
    CheckResult { name: name.into(), status: Status::Pass, witness: None, detail }
}

fn skip(name: &str, detail: String) -> CheckResult {
    CheckResult { name: name.into(), status: Status::Skip, witness: None, detail }
}

fn fail(name: &str, witness: Option<Value>, detail: String) -> CheckResult {
    CheckResult { name: name.into(), status: Status::Fail, witness, detail }
}

impl<'c, F: CycloField> Runner<'c, F> {
    fn new(spec: &ModuleSpec, field: F, cfg: &'c CertifyConfig) -> Result<Self, ModError> {
        let md = Module::new(spec.clone(), field)?;
        Ok(Runner {
            spec: spec.clone(),
            md,
            cfg,
            reverify: false,
            tasks: Vec::new(),
            span: None,
            dims: BTreeMap::new(),
        })
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        r.set_stream(stream);
        r
    }

    fn unit(&self, code: u64) -> SparseVec<F::Elem> {
        SparseVec::unit(code, self.md.field().one())
    }

    /// All codes when l^N is within the bound, otherwise `count` distinct
    /// random codes (sorted).
    fn codes(&self, count: usize, stream: u64) -> (Vec<u64>, bool) {
        let dim = self.md.shape().dim();
        if dim <= self.cfg.exhaustive_bound {
            return ((0..dim).collect(), true);
        }
        (random_codes(dim, count, &mut self.rng(stream)), false)
    }

    fn run(mut self, suites: &[Suite]) -> Result<Certificate, ModError> {
        let mut checks = Vec::new();
        let mut timings = BTreeMap::new();
        self.dims.insert("V".into(), self.md.shape().dim());
        for suite in expand(suites) {
            let start = Instant::now();
            let result = match suite {
                Suite::Relation => self.relations(),
                Suite::Primitive => self.primitive()?,
                Suite::Highest => self.highest(),
                Suite::Nilpotent => self.nilpotent()?,
                Suite::Steinberg => self.steinberg()?,
                Suite::Lowest => self.lowest()?,
                Suite::Central => self.central()?,
                Suite::Irreducible => self.irreducible()?,
                Suite::Routes => self.routes()?,
                Suite::All => unreachable!("expanded above"),
            };
            timings.insert(result.name.clone(), start.elapsed().as_millis() as u64);
            checks.push(result);
        }
        if self.reverify {
            let start = Instant::now();
            let result = run_reverify(&self.tasks)?;
            timings.insert(result.name.clone(), start.elapsed().as_millis() as u64);
            checks.push(result);
        }
        Ok(Certificate {
            schema: 1,
            spec: SpecEcho::of(&self.spec),
            backend: self.cfg.backend.to_string(),
            checks,
            dims: self.dims,
            seed: self.cfg.seed,
            timings_ms: timings,
        })
    }

    fn relations(&mut self) -> CheckResult {
        let (codes, exhaustive) = self.codes(self.cfg.sample, 1);
        self.dims.insert("sampled".into(), codes.len() as u64);
        let md = &self.md;
        let bad: Vec<(u64, Vec<String>)> =
            codes.par_iter().map(|&c| (c, relation_failures(md, c))).filter(|(_, r)| !r.is_empty()).collect();
        let scope = if exhaustive { "every" } else { "sampled" };
        match bad.first() {
            None => pass("relations", format!("all relations hold on {scope} basis vector ({} checked)", codes.len())),
            Some((code, rels)) => fail(
                "relations",
                witness(md, &self.unit(*code)),
                format!(
                    "{} fails at m = {:?}; {} of {} checked vectors fail",
                    rels.join(", "),
                    md.shape().decode(*code).entries(),
                    bad.len(),
                    codes.len()
                ),
            ),
        }
    }

    /// U_eps u(0), spanned once and shared by the checks that need it.
    fn span(&mut self) -> Result<&SubmoduleBasis<F::Elem>, String> {
        if self.span.is_none() {
            let opts = SpanOptions { max_dim: Some(self.cfg.span_limit), ..SpanOptions::default() };
            let s = submodule_span(&self.md, &self.unit(0), &opts).map_err(|e| e.to_string());
            if let Ok(b) = &s {
                self.dims.insert("span".into(), b.dim() as u64);
                if self.reverify {
                    let words = b.rows().map(|r| r.word.to_vec()).collect();
                    self.tasks.push(Reverify::Span(self.spec.clone(), words, b.dim(), "span"));
                }
            }
            self.span = Some(s);
        }
        self.span.as_ref().expect("just filled").as_ref().map_err(Clone::clone)
    }

    fn primitive(&mut self) -> Result<CheckResult, ModError> {
        const NAME: &str = "primitive";
        let dim = self.md.shape().dim();
        let u0 = self.unit(0);
        let judge = |basis: &SubmoduleBasis<F::Elem>, md: &Module<F>, scope: &str| -> CheckResult {
            let vs: Vec<&SparseVec<F::Elem>> = basis.vectors().collect();
            match vs.as_slice() {
                [v] if **v == u0 => pass(NAME, format!("the primitive vectors {scope} are the multiples of u(0)")),
                [] => fail(
                    NAME,
                    witness(md, &u0),
                    format!("no primitive vector {scope}; u(0) is not killed by every e_i"),
                ),
                _ => {
                    let other = vs.iter().find(|v| ***v != u0).expect("at least one row differs from u(0)");
                    fail(NAME, witness(md, other), format!("{} independent primitive vectors {scope}", vs.len()))
                }
            }
        };
        if dim <= self.cfg.exhaustive_bound {
            let basis = primitive_space(&self.md, Scope::Exhaustive { bound: self.cfg.exhaustive_bound })?;
            self.dims.insert("primitive".into(), basis.dim() as u64);
            if self.reverify {
                self.tasks.push(Reverify::Primitive(self.spec.clone()));
            }
            return Ok(judge(&basis, &self.md, "in V (weight-blocked exact kernel)"));
        }
        // Too large for the whole space: the kernel inside U_eps u(0) plus
        // spot checks that random u(m), m != 0, are not primitive.
        let (codes, _) = self.codes(self.cfg.sample, 2);
        let n = self.spec.rank();
        for &c in codes.iter().filter(|&&c| c != 0) {
            let u = self.unit(c);
            if (1..=n).all(|i| self.md.apply(Gen::E(i), &u).is_zero()) {
                return Ok(fail(NAME, witness(&self.md, &u), "a basis vector other than u(0) is primitive".into()));
            }
        }
        let spot = format!("{} sampled u(m), m != 0, are not primitive", codes.len());
        let within = match self.span() {
            Ok(span) => {
                let span = span.clone();
                let basis = primitive_space(&self.md, Scope::Within(&span))?;
                self.dims.insert("primitive".into(), basis.dim() as u64);
                if self.reverify {
                    self.tasks.push(Reverify::Primitive(self.spec.clone()));
                }
                judge(&basis, &self.md, "in U_eps u(0)")
            }
            Err(e) => return Ok(pass(NAME, format!("{spot}; submodule kernel not computed ({e})"))),
        };
        Ok(match within.status {
            Status::Pass => pass(NAME, format!("{}; {spot}", within.detail)),
            _ => within,
        })
    }

    fn highest(&self) -> CheckResult {
        const NAME: &str = "highest-weight";
        let l = self.spec.order().get();
        let d = self.spec.d_vector();
        let want: Vec<u32> = self.spec.lambda().iter().zip(&d).map(|(&x, &di)| (x * di) % l).collect();
        let got = weight_of(&self.md, 0);
        let u0 = self.unit(0);
        let branch = if self.spec.alg_type() == schnizer::AlgType::B {
            format!("; type B weight shift: {}", bshift_name(self.spec.bshift()))
        } else {
            String::new()
        };
        if got.entries() != want.as_slice() {
            return fail(NAME, witness(&self.md, &u0), format!("t-weight of u(0) is {got}, expected {want:?}{branch}"));
        }
        if let Some(i) = (1..=self.spec.rank()).find(|&i| !self.md.apply(Gen::E(i), &u0).is_zero()) {
            return fail(NAME, witness(&self.md, &u0), format!("e{i} u(0) != 0{branch}"));
        }
        pass(NAME, format!("t_i u(0) = eps_i^(lambda_i) u(0) and e_i u(0) = 0{branch}"))
    }

    fn word(&self) -> Result<ReducedWord, ModError> {
        let typ = self.spec.alg_type();
        let n = self.spec.rank();
        let w = match &self.cfg.w0_word {
            Some(w) => ReducedWord::new(typ, n, w.clone()),
            None => default_w0_word(typ, n),
        };
        w.map_err(|e| ModError::Format(e.to_string()))
    }

    /// Random sparse vectors: combinations of three basis vectors.
    fn random_vectors(&self, count: usize, stream: u64) -> Vec<SparseVec<F::Elem>> {
        let f = self.md.field();
        let dim = self.md.shape().dim();
        let l = self.spec.order().get() as i64;
        let mut rng = self.rng(stream);
        (0..count)
            .map(|_| {
                let terms: Vec<(u64, F::Elem)> =
                    (0..3).map(|_| (rng.gen_range(0..dim), f.from_int(rng.gen_range(1..l)))).collect();
                SparseVec::from_terms(f, terms)
            })
            .filter(|v: &SparseVec<F::Elem>| !v.is_zero())
            .collect()
    }

    fn nilpotent(&self) -> Result<CheckResult, ModError> {
        const NAME: &str = "nilpotent";
        if self.spec.rank() > 4 {
            return Ok(skip(NAME, "root vectors are only built up to rank 4".into()));
        }
        let w = self.word()?;
        let l = self.spec.order().get();
        let ctx = BraidContext::new(self.md.field().clone(), &self.spec, BraidConvention::Printed);
        let mut ops = RootVectorOps::new(&self.md, &ctx, &w);
        let u0 = self.unit(0);
        let samples = self.random_vectors(self.cfg.probes.max(1) * 5, 3);
        let n = self.spec.rank();
        for k in 1..=ops.len() {
            let beta = &w.roots()[k - 1];
            if !ops.power_f(k, l, &u0).is_zero() {
                return Ok(fail(NAME, witness(&self.md, &u0), format!("f_beta^l u(0) != 0 for beta = {beta:?}")));
            }
            for v in &samples {
                if !ops.power_e(k, l, v).is_zero() {
                    return Ok(fail(NAME, witness(&self.md, v), format!("e_beta^l v != 0 for beta = {beta:?}")));
                }
            }
        }
        for v in &samples {
            for i in 1..=n {
                if self.md.apply_word(&vec![Gen::T(i); l as usize], v) != *v {
                    return Ok(fail(NAME, witness(&self.md, v), format!("t{i}^l v != v")));
                }
            }
        }
        Ok(pass(
            NAME,
            format!(
                "f_beta^l u(0) = 0 and e_beta^l v = 0 for all {} root vectors of the word {:?} on {} sampled v; t_i^l = 1",
                ops.len(),
                w.indices(),
                samples.len()
            ),
        ))
    }

    fn central(&self) -> Result<CheckResult, ModError> {
        const NAME: &str = "central";
        if self.spec.rank() > 4 {
            return Ok(skip(NAME, "root vectors are only built up to rank 4".into()));
        }
        let w = self.word()?;
        let l = self.spec.order().get();
        let n = self.spec.rank();
        let ctx = BraidContext::new(self.md.field().clone(), &self.spec, BraidConvention::Printed);
        let mut ops = RootVectorOps::new(&self.md, &ctx, &w);
        let (codes, _) = self.codes(self.cfg.probes.max(1), 4);
        let codes: Vec<u64> = if codes.len() > self.cfg.probes.max(1) {
            random_codes(self.md.shape().dim(), self.cfg.probes.max(1), &mut self.rng(4))
        } else {
            codes
        };
        let gens: Vec<Gen> = (1..=n).flat_map(|i| [Gen::E(i), Gen::F(i), Gen::T(i), Gen::TInv(i)]).collect();
        for &c in &codes {
            let u = self.unit(c);
            for g in &gens {
                let gu = self.md.apply(*g, &u);
                for k in 1..=ops.len() {
                    let lhs = self.md.apply(*g, &ops.power_f(k, l, &u));
                    if lhs != ops.power_f(k, l, &gu) {
                        return Ok(fail(NAME, witness(&self.md, &u), format!("f_beta{k}^l does not commute with {g}")));
                    }
                    let lhs = self.md.apply(*g, &ops.power_e(k, l, &u));
                    if lhs != ops.power_e(k, l, &gu) {
                        return Ok(fail(NAME, witness(&self.md, &u), format!("e_beta{k}^l does not commute with {g}")));
                    }
                }
                for i in 1..=n {
                    let ti = vec![Gen::T(i); l as usize];
                    if self.md.apply(*g, &self.md.apply_word(&ti, &u)) != self.md.apply_word(&ti, &gu) {
                        return Ok(fail(NAME, witness(&self.md, &u), format!("t{i}^l does not commute with {g}")));
                    }
                }
            }
        }
        Ok(pass(
            NAME,
            format!("e_beta^l, f_beta^l and t_i^l commute with every generator on {} basis vectors", codes.len()),
        ))
    }

    fn steinberg(&mut self) -> Result<CheckResult, ModError> {
        const NAME: &str = "steinberg";
        let dim = self.md.shape().dim();
        if dim > self.cfg.exhaustive_bound || dim > self.cfg.span_limit as u64 {
            return Ok(skip(NAME, format!("l^N = {dim} is above the exhaustive bound")));
        }
        let l = self.spec.order().get();
        let top =
            ModuleSpec::new(self.spec.alg_type(), self.spec.rank(), self.spec.order(), vec![l - 1; self.spec.rank()])?
                .with_bshift(self.spec.bshift());
        let md = Module::new(top.clone(), self.md.field().clone())?;
        let u0 = SparseVec::unit(0, md.field().one());
        let span = submodule_span(&md, &u0, &SpanOptions::default())?;
        self.dims.insert("steinberg-span".into(), span.dim() as u64);
        if self.reverify {
            let words = span.rows().map(|r| r.word.to_vec()).collect();
            self.tasks.push(Reverify::Span(top, words, span.dim(), "steinberg-span"));
        }
        if let Some(c) = (0..dim).find(|&c| !span.contains(md.field(), &SparseVec::unit(c, md.field().one()))) {
            let u = SparseVec::unit(c, md.field().one());
            return Ok(fail(NAME, witness(&md, &u), format!("U_eps u(0) has dimension {} < l^N = {dim}", span.dim())));
        }
        Ok(pass(NAME, format!("U_eps u(0) = V at lambda = (l-1, ..., l-1), dimension {dim}")))
    }

    fn lowest(&self) -> Result<CheckResult, ModError> {
        const NAME: &str = "lowest";
        let shape = self.md.shape();
        let m = match lowest_index(shape, self.spec.lambda()) {
            Ok(m) => m,
            Err(SchnizerError::Unsupported(why)) => return Ok(skip(NAME, why)),
            Err(e) => return Err(e.into()),
        };
        let code = shape.encode(&m)?;
        let u = self.unit(code);
        let n = self.spec.rank();
        if let Some(j) = (1..=n).find(|&j| !self.md.apply(Gen::F(j), &u).is_zero()) {
            return Ok(fail(
                NAME,
                witness(&self.md, &u),
                format!("f{j} u(m^lambda) != 0 at m^lambda = {:?}", m.entries()),
            ));
        }
        // At lambda = (l-1, ..., l-1) no f_j v has a u(0) component.
        let l = self.spec.order().get();
        let top = ModuleSpec::new(self.spec.alg_type(), n, self.spec.order(), vec![l - 1; n])?
            .with_bshift(self.spec.bshift());
        let md = Module::new(top, self.md.field().clone())?;
        let samples = self.random_vectors(self.cfg.probes.max(1) * 5, 5);
        for v in &samples {
            if let Some(j) = (1..=n).find(|&j| md.apply(Gen::F(j), v).get(0).is_some()) {
                return Ok(fail(
                    NAME,
                    witness(&md, v),
                    format!("f{j} v has a u(0) component at lambda = (l-1, ..., l-1)"),
                ));
            }
        }
        Ok(pass(
            NAME,
            format!(
                "f_j u(m^lambda) = 0 at m^lambda = {:?}; u(0) never occurs in f_j v for {} sampled v at the Steinberg weight",
                m.entries(),
                samples.len()
            ),
        ))
    }

    /// (l - 1) times the sum of the heights of the positive roots.
    fn ascent_bound(&self) -> Result<usize, ModError> {
        let w = default_w0_word(self.spec.alg_type(), self.spec.rank()).map_err(|e| ModError::Format(e.to_string()))?;
        let heights: i64 = w.roots().iter().flatten().sum();
        Ok((self.spec.order().get() as usize - 1) * heights as usize)
    }

    fn irreducible(&mut self) -> Result<CheckResult, ModError> {
        const NAME: &str = "irreducible";
        let bound = self.ascent_bound()?;
        let probes = self.cfg.probes.max(1);
        let mut rng = self.rng(6);
        let span = match self.span() {
            Ok(s) => s.clone(),
            Err(e) => return Ok(skip(NAME, format!("U_eps u(0) not spanned: {e}"))),
        };
        let f = self.md.field();
        let rows: Vec<&SparseVec<F::Elem>> = span.vectors().collect();
        let l = self.spec.order().get() as i64;
        for _ in 0..probes {
            let mut v = SparseVec::zero();
            while v.is_zero() {
                for _ in 0..3 {
                    let r = rows[rng.gen_range(0..rows.len())];
                    v.add_assign(f, &r.scaled(f, &f.from_int(rng.gen_range(1..l))));
                }
            }
            match ascend_to_primitive(&self.md, &v, bound) {
                Err(ModError::AscentTooLong { .. }) => {
                    return Ok(fail(
                        NAME,
                        witness(&self.md, &v),
                        format!("no primitive vector within {bound} raising steps"),
                    ));
                }
                Err(e) => return Err(e),
                Ok((top, word)) => {
                    if top.len() != 1 || top.get(0).is_none() {
                        return Ok(fail(
                            NAME,
                            witness(&self.md, &v),
                            format!(
                                "raising along {} ends at a primitive vector that is not a multiple of u(0)",
                                word.len()
                            ),
                        ));
                    }
                }
            }
        }
        Ok(pass(NAME, format!("{probes} random vectors of U_eps u(0) rise to multiples of u(0) within {bound} steps")))
    }

    fn routes(&self) -> Result<CheckResult, ModError> {
        const NAME: &str = "routes";
        let e = match closed_form_e(&self.spec) {
            Ok(ops) => ops,
            Err(SchnizerError::Unsupported(why)) => return Ok(skip(NAME, why)),
            Err(err) => return Err(err.into()),
        };
        let f_ops = match closed_form_f(&self.spec) {
            Ok(ops) => ops,
            Err(SchnizerError::Unsupported(_)) => Vec::new(),
            Err(err) => return Err(err.into()),
        };
        let (codes, exhaustive) = self.codes(self.cfg.sample, 7);
        let md = &self.md;
        let ops: Vec<_> = e.iter().chain(&f_ops).collect();
        let bad = codes.par_iter().find_map_first(|&c| {
            let u = SparseVec::unit(c, md.field().one());
            ops.iter().find(|op| md.apply_closed(op, &u) != md.apply(op.gen, &u)).map(|op| (c, op.gen))
        });
        let which = if f_ops.is_empty() { "e" } else { "e and f" };
        let scope = if exhaustive { "all" } else { "sampled" };
        Ok(match bad {
            None => pass(
                NAME,
                format!(
                    "closed-form {which} operators equal the constructed ones on {scope} {} basis vectors",
                    codes.len()
                ),
            ),
            Some((c, g)) => fail(
                NAME,
                witness(md, &self.unit(c)),
                format!("closed form of {g} differs at m = {:?}", md.shape().decode(c).entries()),
            ),
        })
    }
}

fn random_codes(dim: u64, count: usize, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let want = (count as u64).min(dim) as usize;
    let mut set = BTreeSet::new();
    while set.len() < want {
        set.insert(rng.gen_range(0..dim));
    }
    set.into_iter().collect()
}

/// Repeats dimension claims from a modular run over Q(eps).
fn run_reverify(tasks: &[Reverify]) -> Result<CheckResult, ModError> {
    const NAME: &str = "exact-reverify";
    let mut done = Vec::new();
    for t in tasks {
        match t {
            Reverify::Primitive(spec) => {
                let md = Module::new(spec.clone(), Exact::new(spec.order()))?;
                let u0 = SparseVec::unit(0, md.field().one());
                if let Some(i) = (1..=spec.rank()).find(|&i| !md.apply(Gen::E(i), &u0).is_zero()) {
                    return Ok(fail(NAME, witness(&md, &u0), format!("e{i} u(0) != 0 over Q(eps)")));
                }
                done.push("u(0) primitive".to_string());
            }
            Reverify::Span(spec, words, dim, label) => {
                let md = Module::new(spec.clone(), Exact::new(spec.order()))?;
                let f = md.field();
                let u0 = SparseVec::unit(0, f.one());
                let mut e = Echelon::new();
                for w in words {
                    e.insert(f, &md.apply_word(w, &u0));
                }
                // Rank can only drop mod p, so an exact rank equal to the
                // modular one plus exact closure confirms the dimension.
                let basis = SubmoduleBasis::from_echelon(e);
                if basis.dim() != *dim {
                    return Ok(fail(NAME, None, format!("{label}: exact rank {} differs from {dim}", basis.dim())));
                }
                if let Some((g, p)) = basis.closure_failure(&md) {
                    let row = basis.rows().find(|r| r.pivot == p).expect("pivot from this basis");
                    return Ok(fail(NAME, witness(&md, row.vector), format!("{label}: {g} leaves the exact span")));
                }
                done.push(format!("{label} dimension {dim}"));
            }
        }
    }
    if done.is_empty() {
        return Ok(skip(NAME, "no dimension claims to re-verify".into()));
    }
    Ok(pass(NAME, format!("re-verified over Q(eps): {}", done.join("; "))))
}
