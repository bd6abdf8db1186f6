//! Command-line front end for `smt-core`.

pub mod output;
pub mod suite;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use smt_core::characters::{char_from_paths, demazure_character, weyl_character, FormalCharacter};
use smt_core::ktheory::{degeneration_check, pieri_chevalley, pieri_chevalley_nonregular, PieriChevalleyTable};
use smt_core::lspath::PathModel;
use smt_core::pluecker::{parse_subset, subset_name, WedgeModel};
use smt_core::richardson::{
    boundary_minus, boundary_plus, hilbert_recursion_check, pieri_filtration, LambdaBoundary, NonRegular,
    RichardsonSpec, RichardsonUnion, StandardCounts, Status,
};
use smt_core::weyl::{CosetSpace, Family, Parabolic, RootSystem, Weight, DEFAULT_MAX_GROUP_SIZE};
use smt_core::Error;

pub use output::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BOUND: i32 = 2;
pub const EXIT_CHECK: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "smt", version, about = "Standard monomial theory for Richardson varieties")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Seed for the random evaluation points of the Plücker oracle.
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,
    /// Largest Weyl group or quotient that may be enumerated.
    #[arg(long, env = "SMT_MAX_GROUP_SIZE", default_value_t = DEFAULT_MAX_GROUP_SIZE, global = true)]
    pub max_group_size: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct TypeArgs {
    /// Cartan type, one of A..G.
    #[arg(long = "type")]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the L-S paths of shape λ.
    EnumeratePaths {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        lambda: Weight,
    },
    /// Character of V(λ), optionally compared against a second computation.
    Character {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        lambda: Weight,
        #[arg(long, value_enum, default_value_t = Oracle::Paths)]
        oracle: Oracle,
        #[arg(long, value_enum)]
        compare: Option<Oracle>,
    },
    /// Demazure character of V_τ(λ) via divided differences.
    Demazure {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        tau: String,
    },
    /// Richardson variety X_τ^κ: status, counts, boundaries, filtrations.
    Richardson {
        #[command(flatten)]
        ty: TypeArgs,
        /// 1-based simple roots of Q; defaults to the stabilizer of λ, or the Borel.
        #[arg(long)]
        parabolic: Option<String>,
        #[arg(long)]
        lambda: Option<Weight>,
        #[arg(long)]
        tau: String,
        #[arg(long, default_value = "e")]
        kappa: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = RichardsonOp::Status)]
        op: RichardsonOp,
    },
    /// Pieri-Chevalley coefficients a and C for fixed τ and λ.
    Pieri {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        parabolic: Option<String>,
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        tau: String,
    },
    /// Quadratic straightening relation in the Plücker algebra of Gr(d, n).
    Straighten {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Two incomparable indices, e.g. `14,23`.
        #[arg(long)]
        pair: String,
    },
    /// Acceptance suite or a single identity check.
    Check {
        #[arg(value_enum)]
        target: Option<CheckTarget>,
        /// `all` or a criterion number 1-12.
        #[arg(long)]
        suite: Option<String>,
        #[arg(long = "type")]
        family: Option<Family>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        lambda: Option<Weight>,
        #[arg(long)]
        tau: Option<String>,
        #[arg(long, default_value = "e")]
        kappa: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Paths,
    Weyl,
    Demazure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RichardsonOp {
    Status,
    Count,
    Boundary,
    Pieri,
    Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckTarget {
    Degeneration,
}

/// Everything a run produces: exit code, standard output, standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Core(Error::BoundExceeded { .. }) => EXIT_BOUND,
            _ => EXIT_USAGE,
        }
    }
}

/// A computed answer plus whether it represents a failed check.
struct Answer {
    value: Value,
    failed: bool,
    /// Preformatted text, used for the suite report in every format but JSON.
    report: Option<String>,
}

impl From<Value> for Answer {
    fn from(value: Value) -> Self {
        Answer { value, failed: false, report: None }
    }
}

pub fn run<I, T>(args: I) -> RunResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                RunResult { code, stdout: text, stderr: String::new() }
            } else {
                RunResult { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(answer) => {
            let stdout = match (&answer.report, cli.format) {
                (Some(r), Format::Text | Format::Csv) => r.clone(),
                _ => output::render(&answer.value, cli.format),
            };
            RunResult { code: if answer.failed { EXIT_CHECK } else { EXIT_OK }, stdout, stderr: String::new() }
        }
        Err(e) => RunResult { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn root_system(ty: &TypeArgs) -> Result<RootSystem, CliError> {
    Ok(RootSystem::new(ty.family, ty.rank)?)
}

fn path_model(cli: &Cli, rs: &RootSystem, lambda: &Weight) -> Result<PathModel, CliError> {
    Ok(PathModel::with_bounds(rs, lambda, cli.max_group_size, smt_core::lspath::DEFAULT_MAX_PATHS)?)
}

fn character_value(c: &FormalCharacter) -> Value {
    serde_json::to_value(c).expect("characters serialize")
}

fn execute(cli: &Cli) -> Result<Answer, CliError> {
    match &cli.command {
        Command::EnumeratePaths { ty, lambda } => {
            let rs = root_system(ty)?;
            let m = path_model(cli, &rs, lambda)?;
            let records: Vec<_> = m.paths().iter().map(|p| m.to_record(p)).collect();
            Ok(serde_json::to_value(records).expect("records serialize").into())
        }
        Command::Character { ty, lambda, oracle, compare } => {
            let rs = root_system(ty)?;
            let compute = |o: Oracle| -> Result<FormalCharacter, CliError> {
                Ok(match o {
                    Oracle::Paths => char_from_paths(&path_model(cli, &rs, lambda)?),
                    Oracle::Weyl => weyl_character(&rs, lambda, cli.max_group_size)?,
                    Oracle::Demazure => {
                        let space = CosetSpace::with_bound(&rs, lambda.stabilizer(), cli.max_group_size)?;
                        if !lambda.is_dominant() {
                            return Err(Error::NotDominant(lambda.to_string()).into());
                        }
                        demazure_character(&space, space.top(), lambda)
                    }
                })
            };
            rs.check_weight(lambda)?;
            let left = compute(*oracle)?;
            match compare {
                None => Ok(character_value(&left).into()),
                Some(other) => {
                    let equal = left == compute(*other)?;
                    Ok(Answer { value: json!({ "equal": equal }), failed: !equal, report: None })
                }
            }
        }
        Command::Demazure { ty, lambda, tau } => {
            let rs = root_system(ty)?;
            rs.check_weight(lambda)?;
            if !lambda.is_dominant() {
                return Err(Error::NotDominant(lambda.to_string()).into());
            }
            let space = CosetSpace::with_bound(&rs, lambda.stabilizer(), cli.max_group_size)?;
            let t = space.parse_coset(tau)?;
            Ok(character_value(&demazure_character(&space, t, lambda)).into())
        }
        Command::Richardson { ty, parabolic, lambda, tau, kappa, degree, op } => {
            richardson(cli, ty, parabolic.as_deref(), lambda.as_ref(), tau, kappa, *degree, *op)
        }
        Command::Pieri { ty, parabolic, lambda, tau } => {
            let rs = root_system(ty)?;
            let m = path_model(cli, &rs, lambda)?;
            let q = quotient_parabolic(&rs, parabolic.as_deref(), Some(lambda))?;
            if q == lambda.stabilizer() {
                let t = m.space().parse_coset(tau)?;
                Ok(table_value(&pieri_chevalley(&m, t), m.space()).into())
            } else {
                let fine = CosetSpace::with_bound(&rs, q, cli.max_group_size)?;
                let nr = NonRegular::new(&fine, &m)?;
                let t = fine.parse_coset(tau)?;
                Ok(table_value(&pieri_chevalley_nonregular(&nr, t), &fine).into())
            }
        }
        Command::Straighten { n, d, pair } => {
            let parts: Vec<&str> = pair.split(',').map(str::trim).collect();
            if parts.len() != 2 {
                return Err(CliError::Usage(format!("--pair expects two indices like 14,23, got {pair}")));
            }
            let wm = WedgeModel::new(*n, *d)?;
            let (a, b) = (parse_subset(parts[0])?, parse_subset(parts[1])?);
            let rel = wm.straighten(&a, &b, cli.seed)?;
            let support = wm.check_support(&rel)?;
            let rhs: Vec<Value> = rel
                .rhs
                .iter()
                .map(|(c, j, k)| json!({ "coeff": c.to_string(), "pair": [subset_name(j), subset_name(k)] }))
                .collect();
            let ok = support.wedge_bounds && support.endpoint_bounds;
            Ok(Answer {
                value: json!({
                    "lhs": [subset_name(&rel.lhs.0), subset_name(&rel.lhs.1)],
                    "rhs": rhs,
                    "support": support,
                }),
                failed: !ok,
                report: None,
            })
        }
        Command::Check { target, suite, family, rank, lambda, tau, kappa, n } => match (target, suite) {
            (Some(CheckTarget::Degeneration), _) => {
                let (Some(family), Some(rank), Some(lambda)) = (family, rank, lambda) else {
                    return Err(CliError::Usage("check degeneration needs --type, --rank and --lambda".into()));
                };
                let rs = RootSystem::new(*family, *rank)?;
                let m = path_model(cli, &rs, lambda)?;
                let space = m.space();
                let t = match tau {
                    Some(t) => space.parse_coset(t)?,
                    None => space.top(),
                };
                let spec = RichardsonSpec::new(t, space.parse_coset(kappa)?);
                if spec.is_empty(space) {
                    return Err(CliError::Usage(format!("{} is empty", spec.display(space))));
                }
                if *n == 0 {
                    return Err(CliError::Usage("--n must be positive".into()));
                }
                let report = degeneration_check(&m, &spec, *n)?;
                let passed = report.passed();
                let mut value = serde_json::to_value(&report).expect("report serializes");
                value["passed"] = json!(passed);
                Ok(Answer { value, failed: !passed, report: None })
            }
            (None, Some(which)) => {
                let ids: Vec<u8> = if which == "all" {
                    suite::ALL.to_vec()
                } else {
                    match which.parse::<u8>() {
                        Ok(i) if (1..=12).contains(&i) => vec![i],
                        _ => return Err(CliError::Usage(format!("--suite expects all or 1-12, got {which}"))),
                    }
                };
                let outcomes = suite::run_many(&ids, cli.seed);
                let failed = outcomes.iter().any(|o| !o.passed);
                Ok(Answer {
                    value: serde_json::to_value(&outcomes).expect("outcomes serialize"),
                    failed,
                    report: Some(suite::render(&outcomes)),
                })
            }
            (None, None) => Err(CliError::Usage("check needs a target (degeneration) or --suite".into())),
        },
    }
}

fn quotient_parabolic(rs: &RootSystem, given: Option<&str>, lambda: Option<&Weight>) -> Result<Parabolic, CliError> {
    if let Some(l) = lambda {
        rs.check_weight(l)?;
        if !l.is_dominant() {
            return Err(Error::NotDominant(l.to_string()).into());
        }
    }
    let q = match (given, lambda) {
        (Some(s), _) => Parabolic::parse(s, rs.rank())?,
        (None, Some(l)) => l.stabilizer(),
        (None, None) => Parabolic::empty(),
    };
    if let Some(l) = lambda {
        if !q.is_subset_of(l.stabilizer()) {
            return Err(Error::NotRegular { weight: l.to_string(), parabolic: q.to_string() }.into());
        }
    }
    Ok(q)
}

fn spec_value(space: &CosetSpace, s: &RichardsonSpec) -> Value {
    json!({ "tau": space.name(s.tau), "kappa": space.name(s.kappa) })
}

fn union_value(space: &CosetSpace, u: &RichardsonUnion) -> Value {
    Value::Array(u.components().iter().map(|s| spec_value(space, s)).collect())
}

fn table_value(t: &PieriChevalleyTable, space: &CosetSpace) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|(k, c)| json!({ "kappa": space.name(*k), "count": t.count(*k), "character": character_value(c) }))
        .collect();
    json!({ "tau": space.name(t.tau), "lambda": t.lambda, "rows": rows })
}

#[allow(clippy::too_many_arguments)]
fn richardson(
    cli: &Cli,
    ty: &TypeArgs,
    parabolic: Option<&str>,
    lambda: Option<&Weight>,
    tau: &str,
    kappa: &str,
    degree: usize,
    op: RichardsonOp,
) -> Result<Answer, CliError> {
    let rs = root_system(ty)?;
    let q = quotient_parabolic(&rs, parabolic, lambda)?;
    let space = CosetSpace::with_bound(&rs, q, cli.max_group_size)?;
    let spec = RichardsonSpec::new(space.parse_coset(tau)?, space.parse_coset(kappa)?);
    let need_lambda = || lambda.ok_or_else(|| CliError::Usage(format!("--op {op:?} needs --lambda").to_lowercase()));
    match op {
        RichardsonOp::Status => Ok(match spec.status(&space) {
            Status::Empty => json!({ "empty": true }),
            Status::Dimension(d) => json!({ "dimension": d }),
        }
        .into()),
        RichardsonOp::Boundary => {
            let mut value = json!({
                "plus": union_value(&space, &boundary_plus(&space, &spec)),
                "minus": union_value(&space, &boundary_minus(&space, &spec)),
            });
            if let Some(l) = lambda {
                if q != l.stabilizer() && !spec.is_empty(&space) {
                    let m = path_model(cli, &rs, l)?;
                    let nr = NonRegular::new(&space, &m)?;
                    value["lambda"] = match nr.lifting().lambda_boundary(&spec) {
                        LambdaBoundary::EmptyBundle => json!("empty_bundle"),
                        LambdaBoundary::Union(u) => union_value(&space, &u),
                    };
                }
            }
            Ok(value.into())
        }
        RichardsonOp::Count => {
            let l = need_lambda()?;
            let m = path_model(cli, &rs, l)?;
            let union = RichardsonUnion::single(&space, spec);
            let count = if q == l.stabilizer() {
                StandardCounts::new(&m, degree).count(&union, degree)
            } else {
                NonRegular::new(&space, &m)?.count(&union, degree)?
            };
            Ok(json!({ "count": count }).into())
        }
        RichardsonOp::Pieri => {
            let l = need_lambda()?;
            if q != l.stabilizer() {
                return Err(Error::NotRegular { weight: l.to_string(), parabolic: q.to_string() }.into());
            }
            let m = path_model(cli, &rs, l)?;
            let entries: Vec<Value> = if spec.is_empty(&space) {
                Vec::new()
            } else {
                pieri_filtration(&m, &spec)
                    .iter()
                    .map(|e| json!({ "end": space.name(e.end), "twist": e.twist }))
                    .collect()
            };
            Ok(json!({ "entries": entries }).into())
        }
        RichardsonOp::Check => {
            let l = need_lambda()?;
            let m = path_model(cli, &rs, l)?;
            if q == l.stabilizer() {
                let counts = StandardCounts::new(&m, degree);
                let ok = hilbert_recursion_check(&counts, &spec);
                Ok(Answer { value: json!({ "hilbert_recursion": ok }), failed: !ok, report: None })
            } else {
                let reg = q.regular_weight(rs.rank());
                let rho_model = path_model(cli, &rs, &reg)?;
                let counts = StandardCounts::new(&rho_model, degree);
                let nr = NonRegular::new(&space, &m)?;
                match nr.filtration_check(&counts, &spec)? {
                    None => Ok(json!({ "filtration_recursion": Value::Null, "trivial_bundle": true }).into()),
                    Some(ok) => Ok(Answer {
                        value: json!({ "filtration_recursion": ok, "trivial_bundle": false }),
                        failed: !ok,
                        report: None,
                    }),
                }
            }
        }
    }
}
