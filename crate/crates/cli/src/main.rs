use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use qgue::exactq::parse_rat;
use qgue::par::{configure_threads, Execution};
use qgue::qgue::{
    genus_table, verify_suite_with, Grid, Method, MomentKind, MomentQuery, Suite, VerificationReport,
    MAX_GENUS_M,
};
use qgue::symschur::Partition;
use qgue::{Error, Scalar};

#[derive(Parser)]
#[command(name = "qgue", version, about = "Exact q-GUE moments and an errata harness for their closed forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single normalized moment.
    Moment(MomentArgs),
    /// Compare printed closed forms against independent oracles.
    Verify(VerifyArgs),
    /// Tables at q = 1.
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Fast,
    Oracle,
    Closed,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Fast => Method::Fast,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Closed => Method::ClosedForm,
        }
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true).args(["schur", "power_sum", "hermite_sq"])))]
struct MomentArgs {
    /// Schur polynomial s_κ, e.g. "3,1".
    #[arg(long)]
    schur: Option<String>,
    /// Power sum p_k, given by its exponent k.
    #[arg(long)]
    power_sum: Option<usize>,
    /// L(x^{2m} H_s^2), given as "m,s".
    #[arg(long)]
    hermite_sq: Option<String>,
    #[arg(long, default_value_t = 1)]
    n_vars: usize,
    #[arg(long, value_enum, default_value = "fast")]
    method: MethodArg,
    /// Specialize q to a rational number.
    #[arg(long)]
    at_q: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or "all"; repeat or comma-separate for several.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suite: Vec<String>,
    #[arg(long, default_value_t = Grid::default().max_weight)]
    max_weight: usize,
    #[arg(long, default_value_t = Grid::default().max_vars)]
    max_vars: usize,
    #[arg(long, default_value_t = Grid::default().max_n)]
    max_n: usize,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Print the JSON report instead of the summary table.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Evaluate grid points on the calling thread only.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Genus expansion of the Gaussian power-sum moments.
    #[arg(long, required = true)]
    harer_zagier: bool,
    #[arg(long, default_value_t = 4)]
    max_m: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

enum Failure {
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("QGUE_THREADS").ok().and_then(|v| v.parse().ok()) {
        configure_threads(n);
    }
    let result = match cli.command {
        Command::Moment(args) => moment(args).map(|()| ExitCode::SUCCESS),
        Command::Verify(args) => verify(args),
        Command::Table(args) => table(args).map(|()| ExitCode::SUCCESS),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn moment(args: MomentArgs) -> Result<(), Failure> {
    let (kind, label) = if let Some(s) = &args.schur {
        let kappa: Partition = s.parse()?;
        (MomentKind::Schur(kappa.clone()), format!("s_({kappa})"))
    } else if let Some(k) = args.power_sum {
        (MomentKind::PowerSum(k), format!("p_{k}"))
    } else {
        let spec = args.hermite_sq.as_deref().unwrap_or_default();
        let (m, s) = spec
            .split_once(',')
            .and_then(|(m, s)| Some((m.trim().parse().ok()?, s.trim().parse().ok()?)))
            .ok_or_else(|| Failure::Usage(format!("--hermite-sq expects \"m,s\", got {spec:?}")))?;
        (MomentKind::HermiteSquared { m, s }, format!("L(x^{} H_{s}^2)", 2 * m))
    };
    let method = Method::from(args.method);
    if method == Method::ClosedForm {
        eprintln!("warning: closed forms are unverified transcriptions of printed formulas; run `qgue verify` before trusting them");
    }
    let query = MomentQuery {
        kind,
        n_vars: args.n_vars,
        method,
    };
    let value = query.evaluate()?;
    let at_q = match &args.at_q {
        Some(text) => {
            let q0 = parse_rat(text).ok_or_else(|| Failure::Usage(format!("--at-q expects a rational, got {text:?}")))?;
            Some((text.clone(), value.evaluate_at(&q0)?))
        }
        None => None,
    };
    println!("{}", render_moment(&args, &label, method, &value, at_q.as_ref()));
    Ok(())
}

fn render_rat(r: &BigRational) -> String {
    r.to_string()
}

fn render_moment(
    args: &MomentArgs,
    label: &str,
    method: Method,
    value: &Scalar,
    at_q: Option<&(String, BigRational)>,
) -> String {
    match args.format {
        Format::Text => match at_q {
            Some((_, v)) => render_rat(v),
            None => value.to_string(),
        },
        Format::Latex => match at_q {
            Some((_, v)) if v.is_integer() => v.to_string(),
            Some((_, v)) => format!("\\frac{{{}}}{{{}}}", v.numer(), v.denom()),
            None => value.to_latex(),
        },
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("moment".into(), label.into());
            obj.insert("n_vars".into(), args.n_vars.into());
            obj.insert("method".into(), method.to_string().into());
            obj.insert("value".into(), value.to_string().into());
            if let Some((q0, v)) = at_q {
                obj.insert("at_q".into(), q0.clone().into());
                obj.insert("specialized".into(), render_rat(v).into());
            }
            serde_json::to_string_pretty(&obj).expect("serializable")
        }
    }
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>, Failure> {
    let mut suites = Vec::new();
    for name in names {
        if name == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(name.parse::<Suite>()?);
        }
    }
    suites.sort();
    suites.dedup();
    Ok(suites)
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let suites = parse_suites(&args.suite)?;
    let grid = Grid {
        max_weight: args.max_weight,
        max_vars: args.max_vars,
        max_n: args.max_n,
    };
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let reports = verify_suite_with(&grid, &suites, exec)?;
    let json = serde_json::to_string_pretty(&reports).expect("serializable");
    if let Some(path) = &args.report {
        fs::write(path, format!("{json}\n"))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    match args.format {
        Format::Json => println!("{json}"),
        _ => print!("{}", summary_table(&reports)),
    }
    if reports.iter().all(VerificationReport::all_equal) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn summary_table(reports: &[VerificationReport]) -> String {
    let mut out = format!(
        "{:<28} {:>7} {:>7} {:>10} {:>9}\n",
        "identity", "points", "equal", "discrepant", "monomial"
    );
    for r in reports {
        let s = &r.summary;
        out += &format!(
            "{:<28} {:>7} {:>7} {:>10} {:>9}\n",
            r.identity, s.points, s.equal, s.discrepant, s.monomial
        );
    }
    for r in reports {
        for p in r.discrepancies() {
            let params: Vec<String> = p.params.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
            let ratio = p.ratio.as_deref().unwrap_or("?");
            let shape = match (p.sign, p.qpower) {
                (Some(sign), Some(k)) => format!("  (sign {sign:+}, q^{k})"),
                _ => "  (not a monomial)".to_string(),
            };
            out += &format!("{} {}: ratio {ratio}{shape}\n", r.identity, params.join(" "));
        }
    }
    out
}

fn plain(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => format!("({s})"),
        other => other.to_string(),
    }
}

fn table(args: TableArgs) -> Result<(), Failure> {
    if args.max_m > MAX_GENUS_M {
        return Err(Failure::Usage(format!(
            "--max-m {} exceeds the limit of {MAX_GENUS_M}",
            args.max_m
        )));
    }
    let rows = genus_table(args.max_m)?;
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join("/");
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows).expect("serializable")),
        Format::Text => {
            println!("{:>2}  {:<32} {:<24} match", "m", "eps_g (g = 0, 1, ...)", "pairing oracle");
            for r in &rows {
                let eps: Vec<String> = r.counts.iter().enumerate().map(|(g, c)| format!("e{g}={c}")).collect();
                let ok = if r.matches { "yes" } else { "NO" };
                println!("{:>2}  {:<32} {:<24} {ok}", r.m, eps.join(" "), join(&r.oracle));
            }
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{r l l c}}");
            println!("$m$ & $\\varepsilon_g(m)$ & pairings & match \\\\ \\hline");
            for r in &rows {
                let ok = if r.matches { "\\checkmark" } else { "$\\times$" };
                println!("{} & {} & {} & {ok} \\\\", r.m, join(&r.counts), join(&r.oracle));
            }
            println!("\\end{{tabular}}");
        }
    }
    Ok(())
}
