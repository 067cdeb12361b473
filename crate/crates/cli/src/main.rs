use clap::{Args, Parser, Subcommand, ValueEnum};
use crmostow::catalog::{self, CatalogEntry, Expected};
use crmostow::lie::Subalgebra;
use crmostow::numerics::exhaustion::{exhaustion_phi, phi_levi_probe, PhiMethod, PhiOptions};
use crmostow::numerics::linalg::{c, CMat};
use crmostow::numerics::mostow::{mostow_decompose, MostowOptions, MostowStructure};
use crmostow::report::{analyze, expected_map, render_json, AnalysisOptions};
use crmostow::spec_io::SubalgebraSpec;
use crmostow::verify::{apply_overrides, catalog_entries, render_tap, run_suite, Suite};
use crmostow::CrError;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "crmostow", version, about = "CR algebras of compact groups and Mostow fibrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full structural analysis of a subalgebra given as JSON.
    Analyze {
        input: PathBuf,
        /// Degree offset for the cohomology ranges.
        #[arg(long, default_value_t = 0)]
        hd: usize,
        #[arg(long, default_value_t = 64)]
        levi_grid: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mostow decomposition `zeta = u exp(X) exp(Z) v`.
    Decompose {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        #[arg(long)]
        allow_nonunique: bool,
    },
    /// Evaluates the exhaustion `phi`, optionally probing its Levi form.
    Exhaust {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        point: Point,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        /// Probe the complex Hessian along these directions.
        #[arg(long, value_enum)]
        probe: Option<Directions>,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        #[arg(long, default_value_t = 1e-4)]
        gap: f64,
    },
    /// Runs the verification suites and prints TAP.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// JSON map from entry label to expected values, replacing the built-in ones.
        #[arg(long)]
        expected: Option<PathBuf>,
    },
    /// Lists, exports or shows expected values of catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    /// Prints the entry as a subalgebra spec.
    Export { name: String, #[arg(long)] params: Option<String> },
    /// Prints the stated values of an entry.
    Expected { name: String, #[arg(long)] params: Option<String> },
}

#[derive(Args)]
struct Source {
    /// Catalog entry name or label such as `grassmann_pair(1,2,3,1)`.
    #[arg(long, conflicts_with = "input")]
    catalog: Option<String>,
    /// Grassmannian parameters `p,q,n,k`.
    #[arg(long, requires = "catalog")]
    params: Option<String>,
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Point {
    /// JSON matrix of `[re, im]` pairs.
    #[arg(long, conflicts_with = "random")]
    zeta: Option<PathBuf>,
    /// Draw `zeta = exp(A)` with `A` a seeded Gaussian element of `k`.
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Direct,
    Decomposition,
}

#[derive(Clone, Copy, ValueEnum)]
enum Directions {
    /// `sigma(nr(v))`, tangent to the orbit through the base point.
    Tangent,
    /// `L(q)` minus `L(v)`, along the fiber.
    Fiber,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Structural,
    Numeric,
    All,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<CrError> for Failure {
    fn from(e: CrError) -> Self {
        let code = match e {
            CrError::NotClosed { .. } => 2,
            CrError::IrrationalWeights(_) => 3,
            CrError::NonConvergence(_) | CrError::NoRootFound(_) => 4,
            CrError::RestartDisagreement(_) => 5,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn fail(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read(path: &PathBuf) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| fail(format!("{}: {e}", path.display())))
}

fn load_entry(name: &str, params: Option<&str>) -> CliResult<CatalogEntry> {
    let label = match params {
        Some(p) => format!("{name}({p})"),
        None => name.to_string(),
    };
    Ok(catalog::load_label(&label)?)
}

fn subalgebra(source: &Source) -> CliResult<Subalgebra> {
    match (&source.catalog, &source.input) {
        (Some(name), _) => Ok(load_entry(name, source.params.as_deref())?.subalgebra()?),
        (None, Some(path)) => Ok(SubalgebraSpec::from_json(&read(path)?)?.build()?),
        (None, None) => Err(fail("give --catalog NAME or --input PATH")),
    }
}

fn parse_matrix(text: &str) -> CliResult<CMat> {
    let rows: Vec<Vec<[f64; 2]>> = serde_json::from_str(text).map_err(|e| fail(format!("zeta: {e}")))?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(fail("zeta must be square"));
    }
    Ok(CMat::from_fn(n, n, |i, j| c(rows[i][j][0], rows[i][j][1])))
}

fn matrix_json(m: &CMat) -> Value {
    json!((0..m.nrows()).map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn point(s: &MostowStructure, p: &Point) -> CliResult<CMat> {
    match (&p.zeta, p.random) {
        (Some(path), _) => parse_matrix(&read(path)?),
        (None, true) => Ok(s.random_k(&mut ChaCha8Rng::seed_from_u64(p.seed), 0.5)),
        (None, false) => Err(fail("give --zeta PATH or --random")),
    }
}

fn emit(text: &str) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(fail(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Analyze { input, hd, levi_grid, seed, out } => {
            let spec = SubalgebraSpec::from_json(&read(&input)?)?;
            let report = analyze(&spec, &AnalysisOptions { hd, levi_grid, seed })?;
            let text = report.to_json();
            match out {
                Some(path) => std::fs::write(&path, text + "\n").map_err(|e| fail(format!("{}: {e}", path.display())))?,
                None => emit(&(text + "\n"))?,
            }
        }
        Command::Decompose { source, point: p, tol, restarts, allow_nonunique } => {
            let v = subalgebra(&source)?;
            let s = MostowStructure::from_subalgebra(&v)?;
            let zeta = point(&s, &p)?;
            let opts = MostowOptions { restarts, seed: p.seed, tol, allow_nonunique, ..Default::default() };
            let m = mostow_decompose(&s, &zeta, &opts)?;
            let out = json!({
                "schema": crmostow::report::SCHEMA,
                "hnr": s.hnr,
                "strict_hnr": s.strict_hnr,
                "u": matrix_json(&m.u),
                "X": matrix_json(&m.x),
                "Z": matrix_json(&m.z),
                "v": matrix_json(&m.v),
                "x_norm": m.x_norm,
                "residual": m.residual,
                "restarts_converged": m.restarts_converged,
                "restarts_agree": m.restarts_agree,
                "x_spread": m.x_spread,
            });
            emit(&(render_json(&out) + "\n"))?;
        }
        Command::Exhaust { source, point: p, method, probe, step, gap } => {
            let v = subalgebra(&source)?;
            let s = MostowStructure::from_subalgebra(&v)?;
            let zeta = point(&s, &p)?;
            let method = match method {
                Method::Direct => PhiMethod::Direct,
                Method::Decomposition => PhiMethod::Decomposition,
            };
            let r = exhaustion_phi(&s, &zeta, &PhiOptions { seed: p.seed, method, ..Default::default() })?;
            let mut out = json!({
                "schema": crmostow::report::SCHEMA,
                "phi": r.phi,
                "phi_at_identity": r.at_identity,
                "phi_from_decomposition": r.decomposition_phi,
            });
            if let Some(d) = probe {
                let dirs = match d {
                    Directions::Tangent => &s.v_n_bar,
                    Directions::Fiber => &s.q_fiber,
                };
                let pr = phi_levi_probe(&s, &zeta, dirs, step, gap, method, p.seed)?;
                out["probe"] = json!({"eigenvalues": pr.eigenvalues, "pos": pr.pos, "neg": pr.neg, "step": step, "gap": gap});
            }
            emit(&(render_json(&out) + "\n"))?;
        }
        Command::Verify { suite, seed, expected } => {
            let mut entries = catalog_entries();
            if let Some(path) = expected {
                let overrides: BTreeMap<String, Expected> =
                    serde_json::from_str(&read(&path)?).map_err(|e| fail(format!("expected: {e}")))?;
                apply_overrides(&mut entries, &overrides);
            }
            let suite = match suite {
                SuiteArg::Structural => Suite::Structural,
                SuiteArg::Numeric => Suite::Numeric,
                SuiteArg::All => Suite::All,
            };
            let checks = run_suite(suite, &entries, seed);
            emit(&render_tap(&checks))?;
            let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
            if !failed.is_empty() {
                return Err(fail(format!("{} failed: {}", failed.len(), failed.join("; "))));
            }
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                emit(&catalog::list().iter().map(|n| format!("{n}\n")).collect::<String>())?;
            }
            CatalogAction::Export { name, params } => {
                let e = load_entry(&name, params.as_deref())?;
                emit(&(SubalgebraSpec::from_entry(&e).to_json() + "\n"))?;
            }
            CatalogAction::Expected { name, params } => {
                let e = load_entry(&name, params.as_deref())?;
                let m = expected_map(&e.expected);
                let out = json!({"label": e.label(), "source": "paper-expected", "values": m});
                emit(&(render_json(&out) + "\n"))?;
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
