use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use mrdcodes::constructions::{
    dual_basis, gabidulin_code, lagrangian_mrd_code, orthonormal_basis_twisted_trace, self_dual_mrd_code,
    ConstructionError,
};
use mrdcodes::gf::{FieldTower, Level};
use mrdcodes::json::{self as mj, BaseJson, BasisJson, CodeJson, DelsarteJson, FormJson, VectorJson};
use mrdcodes::rankcodes::{BilinearForm, DelsarteCode, GabidulinCode, LBasis, RankCodeError, DEFAULT_BUDGET};
use mrdcodes::verify::{run_suite, SuiteConfig, VerifyError};

#[derive(Parser)]
#[command(name = "mrdcodes", version, about = "Rank-metric codes over finite fields: construction, duality and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a field tower F_p < F_q < F_{q^m} and print it.
    Field(FieldArgs),
    /// Construct a code.
    #[command(subcommand)]
    Construct(Construct),
    /// Bases of F_{q^m} over F_q.
    #[command(subcommand)]
    Basis(BasisCmd),
    /// Dual of a code under a symmetric bilinear form.
    Dual(DualArgs),
    /// Expand a vector code into a matrix code.
    Expand(ExpandArgs),
    /// Report self-duality, Lagrangian property and rank distance.
    Check(CheckArgs),
    /// Run a verification suite and print its report.
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    e: usize,
    #[arg(long)]
    m: usize,
    /// JSON list of F_p coefficients, constant term first.
    #[arg(long)]
    base_poly: Option<String>,
    /// JSON list of F_q coefficients, constant term first.
    #[arg(long)]
    top_poly: Option<String>,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand)]
enum Construct {
    /// Gabidulin code with rows c0, c0^q, ..., c0^{q^{k-1}}.
    Gabidulin {
        /// Vector JSON holding c0; by default c0 = (1, x, ..., x^{n-1}).
        #[arg(long, conflicts_with_all = ["q", "m", "n"])]
        vector: Option<PathBuf>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Self-dual MRD code in F_{q^n}^n.
    SelfDualMrd(ConstructArgs),
    /// Lagrangian MRD code in F_{q^n}^n.
    LagrangianMrd(ConstructArgs),
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand)]
enum BasisCmd {
    /// Orthonormal basis for (x, y) -> Tr(lambda x y), with its lambda.
    Orthonormal {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Dual basis for the twisted trace form with the file's lambda (default 1).
    Dual {
        input: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct FormArg {
    /// identity, hyperbolic, or a path to a form JSON file.
    #[arg(long, default_value = "identity")]
    form: String,
}

#[derive(Args)]
struct DualArgs {
    input: Option<PathBuf>,
    /// Input is a matrix code.
    #[arg(long)]
    delsarte: bool,
    #[command(flatten)]
    form: FormArg,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct ExpandArgs {
    input: Option<PathBuf>,
    /// power, orthonormal, dual (trace dual of the power basis), or a basis JSON file.
    #[arg(long, default_value = "power")]
    basis: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct CheckArgs {
    input: Option<PathBuf>,
    #[arg(long)]
    delsarte: bool,
    #[command(flatten)]
    form: FormArg,
    /// Exit 1 unless the code is self-dual.
    #[arg(long)]
    self_dual: bool,
    /// Exit 1 unless the code is MRD.
    #[arg(long)]
    mrd: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 7)]
    q_max: u64,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Also write the report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Include wall time in the report.
    #[arg(long)]
    timing: bool,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { code: 2, message: message.to_string() }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match e {
            ConstructionError::NoSuchCode(_) => 3,
            ConstructionError::PostconditionFailed(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

macro_rules! input_error {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::input(e)
            }
        }
    )*};
}
input_error!(mj::JsonError, RankCodeError, mrdcodes::gf::GfError, serde_json::Error, io::Error);

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Construction(c) => c.into(),
            e => Failure::input(e),
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

fn emit<T: Serialize>(value: &T, out: Option<&PathBuf>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn form_for(tower: &FieldTower, n: usize, spec: &str) -> Result<BilinearForm> {
    Ok(match spec {
        "identity" => BilinearForm::identity(tower, n),
        "hyperbolic" => BilinearForm::hyperbolic(tower, n)?,
        path => {
            let f: FormJson = parse(&read_input(Some(&PathBuf::from(path)))?)?;
            mj::form_from_json(tower, n, &f)?
        }
    })
}

fn cmd_field(a: &FieldArgs) -> Result<()> {
    let base: Option<Vec<u32>> = a.base_poly.as_deref().map(parse).transpose()?;
    let top: Option<Vec<BaseJson>> = a.top_poly.as_deref().map(parse).transpose()?;
    let t = mj::field_from_parts(a.p, a.e, a.m, base.as_deref(), top.as_deref())?;
    emit(&mj::field_to_json(&t), a.out.output.as_ref())
}

fn cmd_construct(c: &Construct) -> Result<()> {
    match c {
        Construct::Gabidulin { vector, q, m, n, k, out } => {
            let (tower, c0) = match vector {
                Some(path) => {
                    let v: VectorJson = parse(&read_input(Some(path))?)?;
                    let (t, c0) = mj::vector_from_json(&v)?;
                    (Arc::new(t), c0)
                }
                None => {
                    let (Some(q), Some(m)) = (q, m) else {
                        return Err(Failure::input("give --vector, or --q and --m"));
                    };
                    let t = Arc::new(FieldTower::for_order(*q, *m)?);
                    let n = n.unwrap_or(*m);
                    if n > *m {
                        return Err(RankCodeError::LengthExceedsDegree { n, m: *m }.into());
                    }
                    let c0 = LBasis::power_basis(&t).elements()[..n].to_vec();
                    (t, c0)
                }
            };
            let code = gabidulin_code(&tower, &c0, *k)?;
            emit(&mj::code_to_json(&code), out.output.as_ref())
        }
        Construct::SelfDualMrd(a) => {
            let c = self_dual_mrd_code(a.q, a.n, a.budget)?;
            emit(&mj::code_to_json(&c.code), a.out.output.as_ref())
        }
        Construct::LagrangianMrd(a) => {
            let c = lagrangian_mrd_code(a.q, a.n, a.budget)?;
            emit(&mj::code_to_json(&c.code), a.out.output.as_ref())
        }
    }
}

fn cmd_basis(b: &BasisCmd) -> Result<()> {
    match b {
        BasisCmd::Orthonormal { q, m, out } => {
            let t = FieldTower::for_order(*q, *m)?;
            let (lambda, alpha) = orthonormal_basis_twisted_trace(&t)?;
            emit(&mj::basis_to_json(&t, Some(&lambda), &alpha), out.output.as_ref())
        }
        BasisCmd::Dual { input, out } => {
            let b: BasisJson = parse(&read_input(input.as_ref())?)?;
            let (t, lambda, alpha) = mj::basis_from_json(&b)?;
            let lambda = lambda.unwrap_or_else(|| t.one(Level::Top));
            let dual = dual_basis(&t, &alpha, &lambda)?;
            emit(&mj::basis_to_json(&t, Some(&lambda), &dual), out.output.as_ref())
        }
    }
}

fn cmd_dual(a: &DualArgs) -> Result<()> {
    let text = read_input(a.input.as_ref())?;
    if a.delsarte {
        let d = mj::delsarte_from_json(&parse::<DelsarteJson>(&text)?)?;
        let form = form_for(d.tower(), d.shape().1, &a.form.form)?;
        emit(&mj::delsarte_to_json(&d.dual(&form)?), a.out.output.as_ref())
    } else {
        let c = mj::code_from_json(&parse::<CodeJson>(&text)?)?;
        let form = form_for(c.tower(), c.n(), &a.form.form)?;
        emit(&mj::code_to_json(&c.dual(&form)?), a.out.output.as_ref())
    }
}

fn cmd_expand(a: &ExpandArgs) -> Result<()> {
    let c = mj::code_from_json(&parse::<CodeJson>(&read_input(a.input.as_ref())?)?)?;
    let t = c.tower();
    let alpha = match a.basis.as_str() {
        "power" => LBasis::power_basis(t),
        "orthonormal" => orthonormal_basis_twisted_trace(t)?.1,
        "dual" => dual_basis(t, &LBasis::power_basis(t), &t.one(Level::Top))?,
        path => {
            let b: BasisJson = parse(&read_input(Some(&PathBuf::from(path)))?)?;
            let (bt, _, alpha) = mj::basis_from_json(&b)?;
            if bt != **t {
                return Err(Failure::input("basis and code are over different fields"));
            }
            alpha
        }
    };
    emit(&mj::delsarte_to_json(&c.to_delsarte(&alpha)?), a.out.output.as_ref())
}

/// `Some(d)` for a distance, `None` for the zero code or when the search is
/// over budget and was not explicitly requested.
fn distance_or_null(r: std::result::Result<usize, RankCodeError>, required: bool) -> Result<Option<usize>> {
    match r {
        Ok(d) => Ok(Some(d)),
        Err(RankCodeError::ZeroCode) => Ok(None),
        Err(e @ RankCodeError::BudgetExceeded { .. }) if required => Err(e.into()),
        Err(RankCodeError::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn cmd_check(a: &CheckArgs) -> Result<bool> {
    let text = read_input(a.input.as_ref())?;
    let (self_dual, lagrangian, distance, bound): (bool, bool, Option<usize>, Value) = if a.delsarte {
        let d: DelsarteCode = mj::delsarte_from_json(&parse(&text)?)?;
        let cols = d.shape().1;
        let form = form_for(d.tower(), cols, &a.form.form)?;
        let lagrangian = cols.is_multiple_of(2) && d.is_self_dual(&BilinearForm::hyperbolic(d.tower(), cols)?)?;
        let (num, den) = d.singleton_bound();
        let bound = if num % den == 0 { json!(num / den) } else { json!(format!("{num}/{den}")) };
        let dist = distance_or_null(d.rank_distance(a.budget), a.mrd)?;
        (d.is_self_dual(&form)?, lagrangian, dist, bound)
    } else {
        let c: GabidulinCode = mj::code_from_json(&parse(&text)?)?;
        let n = c.n();
        let form = form_for(c.tower(), n, &a.form.form)?;
        let lagrangian = n.is_multiple_of(2) && c.is_self_dual(&BilinearForm::hyperbolic(c.tower(), n)?)?;
        let dist = distance_or_null(c.rank_distance(a.budget), a.mrd)?;
        (c.is_self_dual(&form)?, lagrangian, dist, json!(c.singleton_bound()))
    };
    let mrd = match distance {
        Some(d) => json!(bound.as_u64() == Some(d as u64)),
        None => Value::Null,
    };
    let report = json!({
        "selfDual": self_dual,
        "lagrangian": lagrangian,
        "rankDistance": distance,
        "mrd": mrd,
        "singletonRHS": bound,
    });
    emit(&report, None)?;
    Ok((!a.self_dual || self_dual) && (!a.mrd || mrd == json!(true)))
}

fn cmd_verify(a: &VerifyArgs) -> Result<bool> {
    let cfg = SuiteConfig {
        q_max: a.q_max,
        n_max: a.n_max,
        budget: a.budget,
    };
    let start = Instant::now();
    let mut report = run_suite(&a.suite, &cfg)?;
    if a.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    if let Some(path) = &a.report {
        emit(&report, Some(path))?;
    }
    emit(&report, None)?;
    Ok(report.passed)
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Field(a) => cmd_field(a).map(|_| true),
        Command::Construct(c) => cmd_construct(c).map(|_| true),
        Command::Basis(b) => cmd_basis(b).map(|_| true),
        Command::Dual(a) => cmd_dual(a).map(|_| true),
        Command::Expand(a) => cmd_expand(a).map(|_| true),
        Command::Check(a) => cmd_check(a),
        Command::VerifyPaper(a) => cmd_verify(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            let prefix = if f.code == 3 { "nonexistence" } else { "error" };
            eprintln!("{prefix}: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
