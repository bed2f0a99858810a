//! Command-line front end. Reports are JSON on standard output.

mod export;
mod problem;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

pub use export::export_singular;
pub use problem::{from_value, load_problem, parse_problem, Kind, Locus, Problem, RingSpec, Summand};

use crate::arrange::{
    associated_hyperplane_arrangement, is_generic, random_arrangement, verify_generic_theorem, GenericCheckOptions,
};
use crate::error::{Error, Result};
use crate::logmod::{
    derlog_with, freeness, DerlogOptions, DerlogRoute, FreenessOptions, FreenessReport, Method, SubspaceData,
    DEFAULT_MAX_SUBSETS,
};
use crate::poly::{subset_from_index, FreeModuleElement};
use crate::products::{verify_product_theorem, verify_star_decomposition};
use crate::resolve::{depth_and_cm, free_resolution_in, ideal_resolution, BettiTable};

#[derive(Parser, Debug)]
#[command(name = "multilog", version, about = "Multi-logarithmic k-vector fields and freeness certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Pdim,
    Jacobian,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Pdim => Method::Pdim,
            MethodArg::Jacobian => Method::Jacobian,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Args, Clone, Debug)]
struct Common {
    /// Freeness criterion to run.
    #[arg(long, value_enum, default_value = "both")]
    method: MethodArg,
    /// Overrides the seed in the problem file.
    #[arg(long)]
    seed: Option<u64>,
    /// Complete intersection equations, separated by `;`.
    #[arg(long)]
    ci: Option<String>,
    #[arg(long, default_value_t = DEFAULT_MAX_SUBSETS)]
    max_subsets: usize,
    /// Omit timings so that reports are byte-stable.
    #[arg(long)]
    no_timings: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal generators of Derlog and their Betti table.
    Derlog {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Freeness verdict by the projective-dimension and Jacobian criteria.
    Free {
        file: PathBuf,
        /// Also decide freeness of the associated hyperplane arrangement.
        #[arg(long)]
        associated: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Resolution, depth and dimension of the coordinate ring.
    Resolve {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Linear subspace arrangements.
    Arrange {
        #[command(subcommand)]
        command: ArrangeCommand,
    },
    /// Product theorem for a product problem or two factor files.
    Product {
        file: PathBuf,
        right: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Star decomposition for a star problem or two factor files.
    Star {
        file: PathBuf,
        right: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Script for cross-checking in Singular.
    ExportSingular {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ArrangeCommand {
    /// Seeded random arrangement, printed as a problem file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Plücker vectors and genericity.
    Check {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Checks the generic-arrangement theorem on a generic arrangement.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Hypothesis(_) | Error::UnitIdeal => 3,
        Error::ResourceLimit(_) => 4,
        Error::Engine(_) => 1,
        _ => 2,
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Error::Io(e.to_string()))
        }
    }
}

fn to_map<T: Serialize>(v: &T) -> Map<String, Value> {
    match serde_json::to_value(v).expect("report serializes") {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

struct Session {
    command: &'static str,
    inputs: Vec<PathBuf>,
    common: Common,
    seed: u64,
    start: Instant,
}

impl Session {
    fn new(command: &'static str, inputs: &[&Path], common: &Common, problem_seed: u64) -> Self {
        Session {
            command,
            inputs: inputs.iter().map(|p| p.to_path_buf()).collect(),
            common: common.clone(),
            seed: common.seed.unwrap_or(problem_seed),
            start: Instant::now(),
        }
    }

    fn ci(&self) -> Option<Vec<String>> {
        self.common.ci.as_ref().map(|s| {
            s.split(';')
                .map(|t| t.trim().to_string())
                .filter(|t| !t.is_empty())
                .collect()
        })
    }

    fn derlog_options(&self) -> DerlogOptions {
        DerlogOptions {
            max_subsets: self.common.max_subsets,
            route: DerlogRoute::Auto,
        }
    }

    fn freeness_options(&self) -> FreenessOptions {
        FreenessOptions {
            method: self.common.method.into(),
            seed: self.seed,
            derlog: self.derlog_options(),
        }
    }

    fn finish(&self, result: Map<String, Value>) -> Result<()> {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        let inputs: Vec<String> = self.inputs.iter().map(|p| p.display().to_string()).collect();
        m.insert("inputs".into(), json!(inputs));
        m.insert("engine_version".into(), json!(env!("CARGO_PKG_VERSION")));
        m.insert("seed".into(), json!(self.seed));
        m.insert("method".into(), serde_json::to_value(Method::from(self.common.method)).expect("method"));
        m.insert("max_subsets".into(), json!(self.common.max_subsets));
        if let Some(ci) = self.ci() {
            m.insert("ci".into(), json!(ci));
        }
        for (k, v) in result {
            m.insert(k, v);
        }
        if !self.common.no_timings {
            m.insert("timings".into(), json!({"total_seconds": self.start.elapsed().as_secs_f64()}));
        }
        let mut text = serde_json::to_string_pretty(&Value::Object(m)).expect("report serializes");
        text.push('\n');
        emit(&text, self.common.out.as_deref())
    }
}

/// Total Betti numbers under `betti`, the graded table under `betti_graded`.
fn put_betti(m: &mut Map<String, Value>, b: Option<&BettiTable>) {
    m.insert("betti".into(), json!(b.map(|b| &b.total)));
    m.insert("betti_graded".into(), json!(b.map(|b| &b.graded)));
}

fn freeness_map(r: &FreenessReport) -> Map<String, Value> {
    let mut m = to_map(r);
    put_betti(&mut m, r.betti.as_ref());
    m
}

/// `Σ_E a_E ∂_E`, written with `d[x,y]` for `∂_x ∧ ∂_y`.
fn field_string(x: &SubspaceData, f: &FreeModuleElement) -> String {
    let names = x.ring.names();
    let n = names.len();
    let terms: Vec<String> = f
        .components()
        .map(|(i, a)| {
            let e = subset_from_index(i, n, x.codim).expect("slot in range");
            let slot: Vec<&str> = e.iter().map(|&j| names[j].as_str()).collect();
            let slot = format!("d[{}]", slot.join(","));
            let a = a.to_string();
            if a == "1" {
                slot
            } else if a.contains(['+', ' ']) || a[1..].contains('-') {
                format!("({a})*{slot}")
            } else {
                format!("{a}*{slot}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn subspace_summary(x: &SubspaceData) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("variables".into(), json!(x.ring.names()));
    m.insert("codim".into(), json!(x.codim));
    m.insert("ideal".into(), json!(problem::print_all(x.ideal.gens())));
    m
}

fn both_factors(file: &Path, right: Option<&Path>, want: &str) -> Result<Problem> {
    let left = load_problem(file)?;
    match right {
        None => {
            if left.kind_name() != want {
                return Err(Error::schema("", format!("expected a `{want}` problem or two factor files")));
            }
            Ok(left)
        }
        Some(r) => {
            let right = load_problem(r)?;
            let seed = left.seed;
            let (mut l, mut r) = (left, right);
            l.seed = 0;
            r.seed = 0;
            let kind = if want == "product" {
                Kind::Product(Box::new(l), Box::new(r))
            } else {
                Kind::Star(Box::new(l), Box::new(r))
            };
            Ok(Problem { kind, ci: None, seed })
        }
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Derlog { file, common } => {
            let p = load_problem(&file)?;
            let s = Session::new("derlog", &[&file], &common, p.seed);
            let x = p.subspace(s.ci().as_deref())?;
            let d = derlog_with(&x, &s.derlog_options())?;
            let res = free_resolution_in(&d.module, &d.generators)?;
            let mut m = subspace_summary(&x);
            m.insert("derlog_generators".into(), json!(d.generators.len()));
            let gens: Vec<String> = d.generators.iter().map(|g| field_string(&x, g)).collect();
            m.insert("generators".into(), json!(gens));
            m.insert("pdim".into(), json!(res.length()));
            put_betti(&mut m, Some(&res.betti()));
            s.finish(m)
        }
        Command::Free {
            file,
            associated,
            common,
        } => {
            let p = load_problem(&file)?;
            let s = Session::new("free", &[&file], &common, p.seed);
            let x = p.subspace(s.ci().as_deref())?;
            let r = freeness(&x, &s.freeness_options())?;
            let mut m = freeness_map(&r);
            if associated {
                let a = p
                    .arrangement()?
                    .ok_or_else(|| Error::hypothesis("--associated needs an arrangement problem"))?;
                let y = associated_hyperplane_arrangement(&a)?.subspace_data()?;
                let ry = freeness(&y, &s.freeness_options())?;
                m.insert("associated".into(), Value::Object(freeness_map(&ry)));
            }
            s.finish(m)
        }
        Command::Resolve { file, common } => {
            let p = load_problem(&file)?;
            let s = Session::new("resolve", &[&file], &common, p.seed);
            let x = p.subspace(s.ci().as_deref())?;
            let res = ideal_resolution(&x.ideal)?;
            let d = depth_and_cm(&x.ideal)?;
            let mut m = subspace_summary(&x);
            let mut quotient = vec![1];
            quotient.extend(res.betti().total);
            m.insert("betti".into(), json!(quotient));
            m.insert("ideal_betti_graded".into(), json!(res.betti().graded));
            m.insert("dimension".into(), json!(d.dimension));
            m.insert("depth".into(), json!(d.depth));
            m.insert("pdim".into(), json!(d.pdim));
            m.insert("cohen_macaulay".into(), json!(d.cohen_macaulay));
            m.insert("hilbert_numerator".into(), json!(x.ideal.hilbert_numerator().coeffs()));
            s.finish(m)
        }
        Command::Arrange { command } => arrange(command),
        Command::Product { file, right, common } => {
            let p = both_factors(&file, right.as_deref(), "product")?;
            let inputs: Vec<&Path> = std::iter::once(file.as_path()).chain(right.as_deref()).collect();
            let s = Session::new("product", &inputs, &common, p.seed);
            let (x1, x2, jr) = p.factor_data()?.expect("product problem");
            let r = verify_product_theorem(&x1, &x2, &jr, &s.freeness_options())?;
            let mut m = to_map(&r);
            m.insert("free".into(), json!(r.product.free));
            m.insert("betti".into(), json!(r.product.betti.as_ref().map(|b| &b.total)));
            for (key, rep) in [("left", &r.left), ("right", &r.right), ("product", &r.product)] {
                m.insert(key.into(), Value::Object(freeness_map(rep)));
            }
            s.finish(m)
        }
        Command::Star { file, right, common } => {
            let p = both_factors(&file, right.as_deref(), "star")?;
            let inputs: Vec<&Path> = std::iter::once(file.as_path()).chain(right.as_deref()).collect();
            let s = Session::new("star", &inputs, &common, p.seed);
            let (x1, x2, jr) = p.factor_data()?.expect("star problem");
            let r = verify_star_decomposition(&x1, &x2, &jr, &s.freeness_options())?;
            let mut m = to_map(&r);
            m.insert("free".into(), json!(r.free_star));
            s.finish(m)
        }
        Command::ExportSingular { file, out } => {
            let p = load_problem(&file)?;
            emit(&export_singular(&p)?, out.as_deref())
        }
    }
}

fn arrange(command: ArrangeCommand) -> Result<()> {
    match command {
        ArrangeCommand::Gen { n, k, s, seed, out } => {
            let a = random_arrangement(n, k, s, seed)?;
            let r = a.ring();
            let ring = RingSpec {
                variables: r.names().to_vec(),
                weights: r.weights().to_vec(),
                lex: false,
            };
            let components = a.components().iter().map(|c| problem::print_all(c)).collect();
            let p = Problem {
                kind: Kind::Arrangement { ring, components },
                ci: None,
                seed,
            };
            let mut text = serde_json::to_string_pretty(&p.to_value()).expect("problem serializes");
            text.push('\n');
            emit(&text, out.as_deref())
        }
        ArrangeCommand::Check { file, common } => {
            let p = load_problem(&file)?;
            let s = Session::new("arrange check", &[&file], &common, p.seed);
            let a = p
                .arrangement()?
                .ok_or_else(|| Error::schema("", "expected an `arrangement` problem"))?;
            let mut m = Map::new();
            m.insert("n".into(), json!(a.n()));
            m.insert("k".into(), json!(a.k()));
            m.insert("s".into(), json!(a.s()));
            m.insert("wedge_rank".into(), json!(a.wedge_rank()));
            let pl: Vec<Vec<String>> = a
                .pluecker_vectors()
                .iter()
                .map(|v| v.iter().map(|q| q.to_string()).collect())
                .collect();
            m.insert("pluecker".into(), json!(pl));
            m.insert("generic".into(), json!(is_generic(&a)?));
            s.finish(m)
        }
        ArrangeCommand::Verify { file, common } => {
            let p = load_problem(&file)?;
            let s = Session::new("arrange verify", &[&file], &common, p.seed);
            let a = p
                .arrangement()?
                .ok_or_else(|| Error::schema("", "expected an `arrangement` problem"))?;
            if !is_generic(&a)? {
                return Err(Error::hypothesis("the arrangement is not generic"));
            }
            let jacobian = !matches!(common.method, MethodArg::Pdim);
            let r = verify_generic_theorem(
                &a,
                &GenericCheckOptions {
                    route: DerlogRoute::Components,
                    jacobian,
                    seed: s.seed,
                },
            )?;
            let mut m = to_map(&r);
            m.insert("free".into(), json!(r.free_pdim && r.free_jacobian.unwrap_or(true)));
            s.finish(m)
        }
    }
}
