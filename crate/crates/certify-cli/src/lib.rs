//! The `qgr` command-line front end. Flags (over an optional TOML config
//! file) select a module and the certification suites to run; results go
//! to a JSON certificate and a plain-text summary.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage
//! errors, 3 on I/O failures or malformed input files.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclotomic::{CycloField, Exact, ModP, RootOrder};
use freealg::{default_w0_word, root_vectors, BraidContext, BraidConvention, ReducedWord};
use modtools::{
    certify, submodule_span, Backend, Certificate, CertifyConfig, ModError, SpanOptions, Status, SubmoduleBasis, Suite,
};
use schnizer::{build_generators, AlgType, BShift, Module, ModuleSpec};
use serde::Deserialize;
use thiserror::Error;
use weylrep::{ParamTables, SparseVec};

/// Largest number of positive roots for which `rootvec` expands the root
/// vectors in the free algebra.
const ROOTVEC_MAX_ROOTS: usize = 9;

#[derive(Debug, Parser)]
#[command(name = "qgr", version, about = "Certify quantum group representations at roots of unity")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the defining relations on basis vectors.
    VerifyRelations(Common),
    /// Check that u(0) spans the primitive vectors.
    Primitive(Common),
    /// Span the submodule generated by u(0), or re-check a dumped basis.
    Submodule(Common),
    /// Check nilpotency of the root vectors and of t_i^l - 1.
    Nilpotent(Common),
    /// Print the root vectors of a reduced word as newline-delimited JSON.
    Rootvec(Common),
    /// Run any selection of suites (default: all).
    Certify(Common),
    /// Print the generator family as JSON.
    DumpGenerators(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum ShiftArg {
    Printed,
    Corrected,
}

impl From<ShiftArg> for BShift {
    fn from(s: ShiftArg) -> BShift {
        match s {
            ShiftArg::Printed => BShift::Printed,
            ShiftArg::Corrected => BShift::Corrected,
        }
    }
}

/// Flags shared by every subcommand. Each one may also come from the
/// config file; flags win.
#[derive(Debug, Clone, Default, Args)]
struct Common {
    /// TOML file with defaults for any of the flags below.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Lie type: A, B, C or D.
    #[arg(long = "type", value_name = "A|B|C|D")]
    typ: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Order of the root of unity (odd, at least 5).
    #[arg(long)]
    ell: Option<u32>,
    /// Highest weight as a comma-separated list of rank entries in 0..l.
    #[arg(long, value_delimiter = ',', value_name = "CSV")]
    lambda: Option<Vec<u32>>,
    /// Suites to run (certify only), comma separated.
    #[arg(long, value_delimiter = ',', value_name = "NAME")]
    suite: Option<Vec<String>>,
    /// Basis vectors sampled when a sweep cannot be exhaustive.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// exact or modp:P with P prime and P = 1 mod l.
    #[arg(long)]
    backend: Option<String>,
    /// Reduced word for the longest Weyl group element.
    #[arg(long = "w0-word", value_delimiter = ',', value_name = "CSV")]
    w0_word: Option<Vec<usize>>,
    /// Certificate JSON output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Newline-delimited JSON dump of the submodule generated by u(0).
    #[arg(long = "basis-out", value_name = "PATH")]
    basis_out: Option<PathBuf>,
    /// Dump to reload and re-check for closure (submodule only).
    #[arg(long = "basis-in", value_name = "PATH")]
    basis_in: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, env = "QGR_THREADS")]
    threads: Option<usize>,
    /// Largest l^N for which sweeps cover every basis vector.
    #[arg(long = "exhaustive-bound")]
    exhaustive_bound: Option<u64>,
    /// Weight-shift branch for type B.
    #[arg(long = "b-shift", value_enum)]
    b_shift: Option<ShiftArg>,
    /// Test hook: add 1 to the b-table entry at this slot.
    #[arg(long = "corrupt-b", value_name = "SLOT")]
    corrupt_b: Option<usize>,
    /// Leave timings out of the certificate so that reruns are byte-identical.
    #[arg(long)]
    normalize: bool,
}

/// The config file: the same keys as the flags (with underscores) plus the
/// parameter tables `a` and `b`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    #[serde(rename = "type")]
    typ: Option<String>,
    rank: Option<usize>,
    ell: Option<u32>,
    lambda: Option<Vec<u32>>,
    suite: Option<Vec<String>>,
    sample: Option<usize>,
    seed: Option<u64>,
    backend: Option<String>,
    w0_word: Option<Vec<usize>>,
    out: Option<PathBuf>,
    basis_out: Option<PathBuf>,
    threads: Option<usize>,
    exhaustive_bound: Option<u64>,
    b_shift: Option<ShiftArg>,
    normalize: Option<bool>,
    a: Option<Vec<i64>>,
    b: Option<Vec<i64>>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn io_at(path: &Path, e: impl ToString) -> CliError {
    CliError::Io(format!("{}: {}", path.display(), e.to_string()))
}

impl From<ModError> for CliError {
    fn from(e: ModError) -> CliError {
        match e {
            ModError::Io(_)
            | ModError::Format(_)
            | ModError::SpanTooLarge { .. }
            | ModError::BoundExceeded { .. }
            | ModError::AscentTooLong { .. } => CliError::Io(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// A validated run configuration.
#[derive(Debug)]
struct RunConfig {
    spec: ModuleSpec,
    suites: Vec<Suite>,
    cfg: CertifyConfig,
    out: Option<PathBuf>,
    basis_out: Option<PathBuf>,
    basis_in: Option<PathBuf>,
    threads: Option<usize>,
    normalize: bool,
}

fn load_file_config(path: &Path) -> Result<FileConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_at(path, e))?;
    toml::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn required<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| usage(format!("missing --{flag}")))
}

fn resolve(c: Common, certify_cmd: bool) -> Result<RunConfig, CliError> {
    let file = match &c.config {
        Some(p) => load_file_config(p)?,
        None => FileConfig::default(),
    };
    let typ: AlgType = required(c.typ.or(file.typ), "type")?.parse().map_err(usage)?;
    let rank = required(c.rank.or(file.rank), "rank")?;
    let ell = required(c.ell.or(file.ell), "ell")?;
    let lambda = required(c.lambda.or(file.lambda), "lambda")?;
    let order = RootOrder::new(ell).map_err(usage)?;
    if lambda.len() != rank {
        return Err(usage(format!("--lambda has {} entries but the rank is {rank}", lambda.len())));
    }
    let mut spec = ModuleSpec::new(typ, rank, order, lambda).map_err(usage)?;
    if let Some(s) = c.b_shift.or(file.b_shift) {
        spec = spec.with_bshift(s.into());
    }
    if file.a.is_some() || file.b.is_some() {
        let d = spec.params().clone();
        let p = ParamTables { a: file.a.unwrap_or(d.a), b: file.b.unwrap_or(d.b) };
        spec = spec.with_params(p).map_err(usage)?;
    }
    if let Some(slot) = c.corrupt_b {
        let mut p = spec.params().clone();
        let len = p.b.len();
        let entry = p.b.get_mut(slot).ok_or_else(|| usage(format!("--corrupt-b {slot} is outside 0..{len}")))?;
        *entry += 1;
        spec = spec.with_params(p).map_err(usage)?;
    }

    let suite_names = c.suite.or(file.suite);
    if suite_names.is_some() && !certify_cmd {
        return Err(usage("--suite only applies to the certify subcommand"));
    }
    let suites = match suite_names {
        Some(names) => names.iter().map(|s| s.parse::<Suite>()).collect::<Result<Vec<_>, _>>().map_err(usage)?,
        None => vec![Suite::All],
    };

    let mut cfg = CertifyConfig::default();
    if let Some(s) = c.sample.or(file.sample) {
        cfg.sample = s;
    }
    if let Some(s) = c.seed.or(file.seed) {
        cfg.seed = s;
    }
    if let Some(b) = c.exhaustive_bound.or(file.exhaustive_bound) {
        cfg.exhaustive_bound = b;
    }
    if let Some(b) = c.backend.or(file.backend) {
        cfg.backend = b.parse::<Backend>().map_err(usage)?;
        if let Backend::ModP(p) = cfg.backend {
            ModP::new(order, p).map_err(usage)?;
        }
    }
    if let Some(w) = c.w0_word.or(file.w0_word) {
        ReducedWord::new(typ, rank, w.clone()).map_err(usage)?;
        cfg.w0_word = Some(w);
    }
    let threads = c.threads.or(file.threads);
    if threads == Some(0) {
        return Err(usage("--threads must be positive"));
    }
    Ok(RunConfig {
        spec,
        suites,
        cfg,
        out: c.out.or(file.out),
        basis_out: c.basis_out.or(file.basis_out),
        basis_in: c.basis_in,
        threads,
        normalize: c.normalize || file.normalize.unwrap_or(false),
    })
}

fn describe(spec: &ModuleSpec) -> String {
    let lam: Vec<String> = spec.lambda().iter().map(u32::to_string).collect();
    format!("{}{} l={} lambda=({})", spec.alg_type(), spec.rank(), spec.order().get(), lam.join(","))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| io_at(path, e))
}

fn report(cert: &Certificate, run: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = |e: std::io::Error| CliError::Io(e.to_string());
    writeln!(out, "{} backend={}", describe(&run.spec), cert.backend).map_err(w)?;
    for c in &cert.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        writeln!(out, "{tag} {}: {}", c.name, c.detail).map_err(w)?;
    }
    let dims: Vec<String> = cert.dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
    writeln!(out, "dims: {}", dims.join(" ")).map_err(w)?;
    writeln!(out, "result: {}", if cert.passed() { "PASS" } else { "FAIL" }).map_err(w)?;
    if let Some(p) = &run.out {
        write_file(p, &cert.to_json(run.normalize))?;
    }
    Ok(if cert.passed() { 0 } else { 1 })
}

fn run_certify(run: &RunConfig, suites: &[Suite], out: &mut dyn Write) -> Result<i32, CliError> {
    let cert = certify(&run.spec, suites, &run.cfg)?;
    let code = report(&cert, run, out)?;
    if let Some(p) = &run.basis_out {
        match run.cfg.backend {
            Backend::Exact => {
                dump_span(&Module::new(run.spec.clone(), Exact::new(run.spec.order())).map_err(usage)?, run, p)?
            }
            Backend::ModP(q) => dump_span(
                &Module::new(run.spec.clone(), ModP::new(run.spec.order(), q).map_err(usage)?).map_err(usage)?,
                run,
                p,
            )?,
        };
    }
    Ok(code)
}

fn span_of_u0<F: CycloField>(md: &Module<F>, run: &RunConfig) -> Result<SubmoduleBasis<F::Elem>, CliError> {
    let seed = SparseVec::unit(0, md.field().one());
    let opts = SpanOptions { gen_order: None, max_dim: Some(run.cfg.span_limit) };
    Ok(submodule_span(md, &seed, &opts)?)
}

fn write_basis<F: CycloField>(md: &Module<F>, basis: &SubmoduleBasis<F::Elem>, path: &Path) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| io_at(path, e))?;
    let mut w = BufWriter::new(file);
    basis.write_ndjson(md.field(), md.shape(), &mut w).map_err(|e| io_at(path, e))?;
    w.flush().map_err(|e| io_at(path, e))
}

fn dump_span<F: CycloField>(md: &Module<F>, run: &RunConfig, path: &Path) -> Result<(), CliError> {
    write_basis(md, &span_of_u0(md, run)?, path)
}

fn run_submodule<F: CycloField>(md: &Module<F>, run: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = |e: std::io::Error| CliError::Io(e.to_string());
    let total = md.shape().dim();
    if let Some(path) = &run.basis_in {
        let file = File::open(path).map_err(|e| io_at(path, e))?;
        let basis = SubmoduleBasis::read_ndjson(md.field(), md.shape(), file).map_err(|e| io_at(path, e))?;
        let failure = basis.closure_failure(md);
        writeln!(out, "{}: reloaded basis of dim {} (V has dim {total})", describe(&run.spec), basis.dim())
            .map_err(w)?;
        return match failure {
            None => {
                writeln!(out, "closure re-check: PASS").map_err(w)?;
                Ok(0)
            }
            Some((g, pivot)) => {
                let at = md.shape().decode(pivot);
                writeln!(
                    out,
                    "closure re-check: FAIL ({g} sends the row with pivot {:?} out of the span)",
                    at.entries()
                )
                .map_err(w)?;
                Ok(1)
            }
        };
    }
    let basis = span_of_u0(md, run)?;
    writeln!(out, "{}: U u(0) has dim {} (V has dim {total})", describe(&run.spec), basis.dim()).map_err(w)?;
    writeln!(out, "closed under the f_i alone: {}", if basis.closed_under_f_only() { "yes" } else { "no" })
        .map_err(w)?;
    if let Some(p) = &run.basis_out {
        write_basis(md, &basis, p)?;
    }
    Ok(0)
}

fn run_rootvec(run: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let spec = &run.spec;
    let (typ, n) = (spec.alg_type(), spec.rank());
    if typ.positive_roots(n) > ROOTVEC_MAX_ROOTS {
        return Err(usage(format!("rootvec expands at most {ROOTVEC_MAX_ROOTS} root vectors")));
    }
    let word = match &run.cfg.w0_word {
        Some(w) => ReducedWord::new(typ, n, w.clone()),
        None => default_w0_word(typ, n),
    }
    .map_err(usage)?;
    let field = Exact::new(spec.order());
    let ctx = BraidContext::new(field.clone(), spec, BraidConvention::Printed);
    let (es, fs) = root_vectors(&ctx, &word);
    for (k, (e, f)) in es.iter().zip(&fs).enumerate() {
        let line = serde_json::json!({
            "k": k + 1,
            "i": word.indices()[k],
            "root": word.roots()[k],
            "e": e.to_text(&field),
            "f": f.to_text(&field),
        });
        writeln!(out, "{line}").map_err(|e| CliError::Io(e.to_string()))?;
    }
    Ok(0)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let (common, fixed): (Common, Option<Suite>) = match &command {
        Command::VerifyRelations(c) => (c.clone(), Some(Suite::Relation)),
        Command::Primitive(c) => (c.clone(), Some(Suite::Primitive)),
        Command::Nilpotent(c) => (c.clone(), Some(Suite::Nilpotent)),
        Command::Submodule(c) | Command::Rootvec(c) | Command::Certify(c) | Command::DumpGenerators(c) => {
            (c.clone(), None)
        }
    };
    let is_submodule = matches!(command, Command::Submodule(_));
    if common.basis_in.is_some() && !is_submodule {
        return Err(usage("--basis-in only applies to the submodule subcommand"));
    }
    let run = resolve(common, matches!(command, Command::Certify(_)))?;
    match run.threads {
        Some(t) => {
            let pool =
                rayon::ThreadPoolBuilder::new().num_threads(t).build().map_err(|e| CliError::Io(e.to_string()))?;
            // The pool needs a Send closure, so output is buffered.
            let (code, buf) = pool.install(|| {
                let mut buf = Vec::new();
                (execute(&command, &run, fixed, &mut buf), buf)
            });
            out.write_all(&buf).map_err(|e| CliError::Io(e.to_string()))?;
            code
        }
        None => execute(&command, &run, fixed, out),
    }
}

fn execute(command: &Command, run: &RunConfig, fixed: Option<Suite>, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Certify(_) => run_certify(run, &run.suites, out),
        Command::Submodule(_) => match run.cfg.backend {
            Backend::Exact => {
                run_submodule(&Module::new(run.spec.clone(), Exact::new(run.spec.order())).map_err(usage)?, run, out)
            }
            Backend::ModP(p) => {
                let field = ModP::new(run.spec.order(), p).map_err(usage)?;
                run_submodule(&Module::new(run.spec.clone(), field).map_err(usage)?, run, out)
            }
        },
        Command::Rootvec(_) => run_rootvec(run, out),
        Command::DumpGenerators(_) => {
            let text = build_generators(&run.spec).to_json(run.spec.shape());
            writeln!(out, "{text}").map_err(|e| CliError::Io(e.to_string()))?;
            Ok(0)
        }
        _ => run_certify(run, &[fixed.expect("single-suite commands fix their suite")], out),
    }
}

/// Runs `qgr` with the given arguments (including the program name) and
/// returns the process exit code.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "qgr: {e}");
            e.code()
        }
    }
}
