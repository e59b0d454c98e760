//! `hookres`: restriction coefficients of hook Weyl modules to the symmetric
//! group, tableau enumeration and involution checks from the command line.
//!
//! Exit codes: 0 on success or agreement, 1 on usage errors, 2 when paths
//! disagree or a verification fails.

mod output;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use hookres_core::characters::{chi_irreducible, specht_eval_recursive, specht_eval_series};
use hookres_core::combinatorics::{mu_bracket_n, Composition, CycleType, HookShape, Partition, Permutation};
use hookres_core::genfunc::{kappa, kappa_signed_sum, restriction_by_kappa};
use hookres_core::involutions::{check_inner, check_inner_2col, check_outer};
use hookres_core::restriction::{cross_validate, r_kappa, r_oracle, r_tableau, CoefficientRecord};
use hookres_core::tableaux::{enumerate_st, enumerate_xi, enumerate_xi_sigma, Tableau};

use output::{big, opt_big, table, OutputEnvelope};

const SWEEP_LIMIT: usize = 8;

#[derive(Parser)]
#[command(name = "hookres", version, about = "Hook restriction coefficients and their tableau models")]
struct Cli {
    /// Record wall-clock time in JSON output (otherwise `elapsed_ms` is null).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute r_{lambda,(a|b)} by one or all methods.
    Coeff(CoeffArgs),
    /// List Xi or supertableau families.
    Enumerate(EnumerateArgs),
    /// Run the involution harness on a family.
    Involution(InvolutionArgs),
    /// Evaluate the Specht polynomial q_mu at a cycle type.
    Specht(SpechtArgs),
    /// Coefficients kappa and their alternating sums.
    Kappa(KappaArgs),
    /// Cross-validate all three methods over a grid.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Kappa,
    Tableau,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Xi,
    St,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Inner,
    Outer,
    #[value(name = "2col")]
    TwoCol,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KappaMode {
    Coefficient,
    SignedSum,
    Restriction,
}

#[derive(Args)]
struct CoeffArgs {
    /// Partition such as 3,2,1.
    #[arg(long)]
    lambda: Partition,
    /// Hook (a|b) given as a,b.
    #[arg(long)]
    hook: HookShape,
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum, default_value_t = Kind::St)]
    kind: Kind,
    /// Row lengths; a partition for --kind st.
    #[arg(long)]
    shape: Option<Composition>,
    /// With --perm, enumerate Xi(mu, sigma, b, a) on the shape sigma*mu.
    #[arg(long, requires = "perm")]
    mu: Option<Partition>,
    /// One-line permutation such as 2,1,3.
    #[arg(long, requires = "mu")]
    perm: Option<Permutation>,
    #[arg(long)]
    blue: usize,
    #[arg(long)]
    weight: u32,
    /// Keep only supertableaux with a red entry at the foot of column 1.
    #[arg(long)]
    require_red_foot: bool,
    #[arg(long, value_enum, default_value_t = ListFormat::Text)]
    format: ListFormat,
}

#[derive(Args)]
struct InvolutionArgs {
    #[arg(long, value_enum)]
    check: Check,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    blue: usize,
    /// Weight a; for --check outer the family is ST(mu, b-j, a+1+j).
    #[arg(long)]
    weight: u32,
    #[arg(long, value_enum, default_value_t = ListFormat::Text)]
    format: ListFormat,
}

#[derive(Args)]
struct SpechtArgs {
    #[arg(long)]
    mu: Partition,
    /// Exponential notation, e.g. "1^2 3^1".
    #[arg(long)]
    cycle_type: CycleType,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct KappaArgs {
    /// Composition alpha, or the partition mu for the summed modes.
    #[arg(long)]
    alpha: Composition,
    #[arg(long)]
    hook: HookShape,
    #[arg(long, value_enum, default_value_t = KappaMode::Coefficient)]
    mode: KappaMode,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    #[arg(long, default_value_t = 4)]
    a_max: usize,
    #[arg(long, default_value_t = 4)]
    b_max: usize,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the table here instead of stdout.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
    /// Permit n_max above 8.
    #[arg(long)]
    allow_large: bool,
}

/// What a command produced: text for stdout and the exit status.
struct Done {
    text: String,
    code: u8,
}

impl Done {
    fn ok(text: String) -> Self {
        Done { text, code: 0 }
    }
}

type CmdResult = Result<Done, String>;

/// One row of a coefficient table; absent paths print as empty cells.
#[derive(Default)]
struct Row {
    lambda: Partition,
    hook: HookShape,
    oracle: Option<BigInt>,
    kappa: Option<BigInt>,
    tableau: Option<BigInt>,
    agree: Option<bool>,
}

impl From<&CoefficientRecord> for Row {
    fn from(r: &CoefficientRecord) -> Self {
        Row {
            lambda: r.lambda.clone(),
            hook: r.hook,
            oracle: Some(r.oracle.clone()),
            kappa: r.kappa_path.clone(),
            tableau: r.tableau_path.clone(),
            agree: Some(r.agree),
        }
    }
}

impl Row {
    fn cells(&self) -> Vec<String> {
        let opt = |v: &Option<BigInt>| v.as_ref().map(BigInt::to_string).unwrap_or_default();
        vec![
            self.lambda.size().to_string(),
            self.lambda.to_string(),
            self.hook.arm.to_string(),
            self.hook.leg.to_string(),
            opt(&self.oracle),
            opt(&self.kappa),
            opt(&self.tableau),
            self.agree.map(|a| a.to_string()).unwrap_or_default(),
        ]
    }
}

const ROW_HEADER: [&str; 8] = ["n", "lambda", "a", "b", "oracle", "kappa", "tableau", "agree"];

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| e.to_string())?;
    for r in rows {
        w.write_record(r).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn render<T: Serialize>(
    format: Format,
    command: &str,
    parameters: Value,
    results: T,
    header: &[&str],
    rows: &[Vec<String>],
    started: Option<Instant>,
) -> Result<String, String> {
    match format {
        Format::Json => Ok(envelope(command, parameters, results, started) + "\n"),
        Format::Csv => csv_text(header, rows),
        Format::Table => Ok(table(header, rows)),
    }
}

fn envelope<T: Serialize>(command: &str, parameters: Value, results: T, started: Option<Instant>) -> String {
    let mut env = OutputEnvelope::new(command, parameters, results);
    env.elapsed_ms = started.map(|s| s.elapsed().as_millis() as u64);
    env.to_json()
}

fn cmd_coeff(args: &CoeffArgs, started: Option<Instant>) -> CmdResult {
    let (lambda, h) = (&args.lambda, args.hook);
    if lambda.is_empty() {
        return Err("lambda must be a partition of n >= 1".into());
    }
    let mut row = Row { lambda: lambda.clone(), hook: h, ..Row::default() };
    let mut code = 0;
    match args.method {
        Method::Oracle => row.oracle = Some(r_oracle(lambda, h).map_err(|e| e.to_string())?),
        Method::Kappa => row.kappa = Some(r_kappa(lambda, h).map_err(|e| e.to_string())?),
        Method::Tableau => row.tableau = Some(r_tableau(lambda, h).map_err(|e| e.to_string())?),
        Method::All => {
            row = Row::from(&CoefficientRecord::compute(lambda, h).map_err(|e| e.to_string())?);
            if row.agree == Some(false) {
                code = 2;
            }
        }
    }
    let mut results = json!({
        "n": lambda.size(),
        "lambda": lambda,
        "hook": h,
    });
    let obj = results.as_object_mut().expect("object literal");
    if matches!(args.method, Method::Oracle | Method::All) {
        obj.insert("oracle".into(), opt_big(&row.oracle));
    }
    if matches!(args.method, Method::Kappa | Method::All) {
        obj.insert("kappa".into(), opt_big(&row.kappa));
    }
    if matches!(args.method, Method::Tableau | Method::All) {
        obj.insert("tableau".into(), opt_big(&row.tableau));
    }
    if let Some(agree) = row.agree {
        obj.insert("agree".into(), Value::from(agree));
        if lambda.len() <= 1 {
            obj.insert("note".into(), Value::from("lambda=(n) excluded by Theorem; oracle only"));
        }
    }
    let params = json!({ "lambda": lambda.to_string(), "hook": h.to_string(), "method": method_name(args.method) });
    let text = render(args.format, "coeff", params, results, &ROW_HEADER, &[row.cells()], started)?;
    Ok(Done { text, code })
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Oracle => "oracle",
        Method::Kappa => "kappa",
        Method::Tableau => "tableau",
        Method::All => "all",
    }
}

fn cmd_enumerate(args: &EnumerateArgs, started: Option<Instant>) -> CmdResult {
    let mut tableaux: Vec<Tableau> = match (args.kind, &args.mu, &args.perm, &args.shape) {
        (Kind::Xi, Some(mu), Some(sigma), None) => {
            if sigma.degree() != mu.len() {
                return Err(format!("--perm {sigma} must have degree l(mu) = {}", mu.len()));
            }
            enumerate_xi_sigma(mu, sigma, args.blue, args.weight)
        }
        (Kind::Xi, None, None, Some(shape)) => enumerate_xi(shape, args.blue, args.weight),
        (Kind::St, None, None, Some(shape)) => {
            let shape =
                shape.as_partition().ok_or_else(|| format!("--kind st needs a partition shape, got {shape}"))?;
            enumerate_st(&shape, args.blue, args.weight)
        }
        (Kind::St, Some(_), _, _) => return Err("--mu/--perm only apply to --kind xi".into()),
        _ => return Err("give either --shape or both --mu and --perm".into()),
    };
    if args.require_red_foot {
        if args.kind != Kind::St {
            return Err("--require-red-foot only applies to --kind st".into());
        }
        tableaux.retain(|t| {
            let l = t.num_rows();
            l > 0 && t.get(l, 1).is_some_and(|e| e.is_red())
        });
    }
    let text = match args.format {
        ListFormat::Text => tableaux.iter().map(|t| t.key() + "\n").collect(),
        ListFormat::Json => {
            let params = json!({
                "kind": if args.kind == Kind::St { "st" } else { "xi" },
                "shape": args.shape.as_ref().map(|s| s.to_string()),
                "mu": args.mu.as_ref().map(|m| m.to_string()),
                "perm": args.perm.as_ref().map(|p| p.to_string()),
                "blue": args.blue,
                "weight": args.weight,
                "require_red_foot": args.require_red_foot,
            });
            let results = json!({ "count": tableaux.len(), "tableaux": tableaux });
            envelope("enumerate", params, results, started) + "\n"
        }
    };
    Ok(Done::ok(text))
}

fn cmd_involution(args: &InvolutionArgs, started: Option<Instant>) -> CmdResult {
    let mu = &args.mu;
    if mu.len() < 2 {
        return Err(format!("mu=({mu}) needs at least two rows"));
    }
    let report = match args.check {
        Check::Inner | Check::TwoCol if mu.part(1) < 2 => {
            return Err(format!("the inner involution needs mu_1 >= 2, got ({mu})"));
        }
        Check::TwoCol if mu.len() != 2 => return Err(format!("--check 2col needs two rows, got ({mu})")),
        Check::Inner => check_inner(mu, args.blue, args.weight),
        Check::TwoCol => check_inner_2col(mu, args.blue, args.weight),
        Check::Outer => check_outer(mu, args.blue, args.weight),
    };
    let code = if report.passed() { 0 } else { 2 };
    let text = match args.format {
        ListFormat::Text => format!("{report}\n"),
        ListFormat::Json => {
            let params =
                json!({ "check": report.check, "mu": mu.to_string(), "blue": args.blue, "weight": args.weight });
            envelope("involution", params, &report, started) + "\n"
        }
    };
    Ok(Done { text, code })
}

fn cmd_specht(args: &SpechtArgs, started: Option<Instant>) -> CmdResult {
    let x = args.cycle_type.multiplicities();
    let recursive = specht_eval_recursive(&args.mu, x).map_err(|e| e.to_string())?;
    let series = specht_eval_series(&args.mu, x);
    let n = args.cycle_type.n();
    let character = match mu_bracket_n(&args.mu, n) {
        Some(shape) => Some(chi_irreducible(&shape, &args.cycle_type).map_err(|e| e.to_string())?),
        None => None,
    };
    let agree = recursive == series;
    let results = json!({
        "recursive": big(&recursive),
        "series": big(&series),
        "character": opt_big(&character),
        "agree": agree,
    });
    let params = json!({ "mu": args.mu.to_string(), "cycle_type": args.cycle_type.to_string() });
    let header = ["mu", "cycle_type", "recursive", "series", "character", "agree"];
    let row = vec![
        args.mu.to_string(),
        args.cycle_type.to_string(),
        recursive.to_string(),
        series.to_string(),
        character.as_ref().map(BigInt::to_string).unwrap_or_default(),
        agree.to_string(),
    ];
    let text = render(args.format, "specht", params, results, &header, &[row], started)?;
    Ok(Done { text, code: if agree { 0 } else { 2 } })
}

fn cmd_kappa(args: &KappaArgs, started: Option<Instant>) -> CmdResult {
    let h = args.hook;
    let as_mu = || args.alpha.as_partition().ok_or_else(|| format!("this mode needs a partition, got {}", args.alpha));
    let (mode, value) = match args.mode {
        KappaMode::Coefficient => ("coefficient", kappa(&args.alpha, h.arm, h.leg)),
        KappaMode::SignedSum => ("signed-sum", kappa_signed_sum(&as_mu()?, h.arm, h.leg)),
        KappaMode::Restriction => ("restriction", restriction_by_kappa(&as_mu()?, h).map_err(|e| e.to_string())?),
    };
    let params = json!({ "alpha": args.alpha.to_string(), "hook": h.to_string(), "mode": mode });
    let results = json!({ "value": big(&value) });
    let header = ["alpha", "a", "b", "mode", "value"];
    let row = vec![args.alpha.to_string(), h.arm.to_string(), h.leg.to_string(), mode.to_string(), value.to_string()];
    Ok(Done::ok(render(args.format, "kappa", params, results, &header, &[row], started)?))
}

fn cmd_sweep(args: &SweepArgs, started: Option<Instant>) -> CmdResult {
    if args.n_max > SWEEP_LIMIT && !args.allow_large {
        return Err(format!("--n-max above {SWEEP_LIMIT} needs --allow-large"));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(args.jobs).build().map_err(|e| e.to_string())?;
    let report = pool.install(|| cross_validate(args.n_max, args.a_max, args.b_max)).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<String>> = report.records.iter().map(|r| Row::from(r).cells()).collect();
    let params = json!({ "n_max": args.n_max, "a_max": args.a_max, "b_max": args.b_max });
    let body = render(args.format, "sweep", params, &report, &ROW_HEADER, &rows, started)?;
    eprintln!(
        "sweep: {} cells, {} gated, {} disagreements",
        report.cells_checked, report.gated_cells, report.disagreements
    );
    let code = if report.all_agree() { 0 } else { 2 };
    match &args.output {
        Some(path) => {
            fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            Ok(Done { text: String::new(), code })
        }
        None => Ok(Done { text: body, code }),
    }
}

fn run(cli: &Cli) -> CmdResult {
    let started = cli.timing.then(Instant::now);
    match &cli.command {
        Command::Coeff(a) => cmd_coeff(a, started),
        Command::Enumerate(a) => cmd_enumerate(a, started),
        Command::Involution(a) => cmd_involution(a, started),
        Command::Specht(a) => cmd_specht(a, started),
        Command::Kappa(a) => cmd_kappa(a, started),
        Command::Sweep(a) => cmd_sweep(a, started),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(done) => {
            let mut out = io::stdout().lock();
            if out.write_all(done.text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(done.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
