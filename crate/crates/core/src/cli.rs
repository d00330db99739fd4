//! Command-line front end.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::apery::APERY_LAMBDA;
use crate::congruence::{
    check_c1, check_c2, check_dig2, check_digit_product, check_lemma, default_cutoff, CheckOptions,
    CongruenceReport,
};
use crate::laurent::{constant_term_sequence, CoeffRing, LaurentPoly};
use crate::padic::is_prime;
use crate::polyparse::parse_poly;
use crate::polytope::is_admissible;
use crate::report;
use crate::unitroot::{unit_root_compare, unit_root_sweep, ZetaReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "ctcong",
    version,
    about = "Constant terms of Laurent polynomial powers and their p-adic congruences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Include wall times in the output.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// Laurent polynomial in x1..xd.
    #[arg(long, default_value = APERY_LAMBDA)]
    pub poly: String,
    /// Number of variables.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Constant terms b_0..b_N of the powers of the polynomial.
    Ct {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long = "N", default_value_t = 10)]
        n: u64,
    },
    /// Newton polytope vertices, interior lattice points and admissibility.
    Newton {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Verify a congruence.
    Check(CheckArgs),
    /// Compare unit roots of the Apéry fibers with w_s(z_t).
    Unitroot(UnitRootArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKindArg {
    C1,
    C2,
    Dig2,
    Digit,
    Lemma,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub kind: CheckKindArg,
    #[command(flatten)]
    pub poly: PolyArgs,
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub s: u32,
    /// Series cutoff for c1 and digit (default p^(s+1) - 1).
    #[arg(long = "N")]
    pub n: Option<u64>,
    /// Largest n for dig2 and lemma (default p^(s+1) - 1).
    #[arg(long)]
    pub nmax: Option<u64>,
    /// Largest m for dig2 (default p + 1).
    #[arg(long)]
    pub mmax: Option<u64>,
    /// Working precision K (default s).
    #[arg(long)]
    pub precision: Option<u32>,
    /// Run on polynomials that are not admissible.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["t", "sweep"])))]
pub struct UnitRootArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub s: u32,
    /// A single fiber parameter.
    #[arg(long)]
    pub t: Option<u64>,
    /// All t in 1..p.
    #[arg(long)]
    pub sweep: bool,
    /// Worker threads for the sweep.
    #[arg(long)]
    pub jobs: Option<usize>,
}

/// What an invocation printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            stdout: String::new(),
            stderr,
            code: EXIT_USAGE,
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            if code == EXIT_PASS {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome::usage(text)
            }
        }
    }
}

/// Result of one command before formatting: config echo, results, text.
struct Rendered {
    command: String,
    config: Value,
    results: Vec<Value>,
    text: String,
    passed: bool,
}

pub fn run(cli: &Cli) -> Outcome {
    let rendered = match &cli.command {
        Command::Ct { poly, n } => cmd_ct(poly, *n),
        Command::Newton { poly } => cmd_newton(poly),
        Command::Check(args) => cmd_check(args, cli.timings),
        Command::Unitroot(args) => cmd_unitroot(args),
    };
    let r = match rendered {
        Ok(r) => r,
        Err(msg) => return Outcome::usage(format!("error: {msg}")),
    };
    let stdout = match cli.format {
        Format::Text => r.text,
        Format::Json => {
            let doc = json!({ "command": r.command, "config": r.config, "results": r.results });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
    };
    let code = if r.passed { EXIT_PASS } else { EXIT_FAIL };
    match &cli.output {
        Some(path) => match std::fs::write(path, &stdout) {
            Ok(()) => Outcome {
                stdout: String::new(),
                stderr: String::new(),
                code,
            },
            Err(e) => Outcome::usage(format!("error: cannot write {}: {e}", path.display())),
        },
        None => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
    }
}

fn load_poly(args: &PolyArgs) -> Result<LaurentPoly, String> {
    if args.d == 0 {
        return Err("--d must be at least 1".into());
    }
    parse_poly(&args.poly, args.d).map_err(|e| format!("cannot parse polynomial: {e}"))
}

fn require_prime(p: u64) -> Result<(), String> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(format!("--p {p} is not prime"))
    }
}

fn cmd_ct(args: &PolyArgs, n: u64) -> Result<Rendered, String> {
    let lambda = load_poly(args)?;
    let n_max = usize::try_from(n).map_err(|_| "--N is too large".to_string())?;
    let b = constant_term_sequence(&lambda, n_max, &CoeffRing::Exact).map_err(|e| e.to_string())?;
    Ok(Rendered {
        command: "ct".into(),
        config: json!({ "poly": args.poly, "d": args.d, "N": n }),
        results: report::sequence_json(&b),
        text: report::sequence_text(&b) + "\n",
        passed: true,
    })
}

fn cmd_newton(args: &PolyArgs) -> Result<Rendered, String> {
    let lambda = load_poly(args)?;
    let r = is_admissible(&lambda);
    Ok(Rendered {
        command: "newton".into(),
        config: json!({ "poly": args.poly, "d": args.d }),
        results: vec![report::admissibility_json(&r)],
        text: report::admissibility_text(&r),
        passed: true,
    })
}

fn cmd_check(args: &CheckArgs, timings: bool) -> Result<Rendered, String> {
    let lambda = load_poly(&args.poly)?;
    require_prime(args.p)?;
    if args.s == 0 {
        return Err("--s must be at least 1".into());
    }
    let opts = CheckOptions {
        precision: args.precision,
        force: args.force,
    };
    let deep = default_cutoff(args.p, args.s).map_err(|e| e.to_string())?;
    let report: CongruenceReport = match args.kind {
        CheckKindArg::C2 => check_c2(&lambda, args.p, args.s, opts),
        CheckKindArg::C1 => check_c1(&lambda, args.p, args.s, Some(args.n.unwrap_or(deep)), opts),
        CheckKindArg::Digit => check_digit_product(&lambda, args.p, args.n.unwrap_or(deep), opts),
        CheckKindArg::Dig2 => check_dig2(
            &lambda,
            args.p,
            args.s,
            args.nmax.unwrap_or(deep),
            args.mmax.unwrap_or(args.p + 1),
            opts,
        ),
        CheckKindArg::Lemma => check_lemma(&lambda, args.p, args.nmax.unwrap_or(deep), opts),
    }
    .map_err(|e| e.to_string())?;
    let config = json!({
        "kind": name_of(args.kind),
        "poly": args.poly.poly,
        "d": args.poly.d,
        "p": args.p,
        "s": args.s,
        "N": report.params.cutoff,
        "nmax": report.params.n_max,
        "mmax": report.params.m_max,
        "precision": report.params.precision,
        "force": args.force,
    });
    Ok(Rendered {
        command: format!("check {}", name_of(args.kind)),
        config,
        results: vec![report::congruence_json(&report, timings)],
        text: report::congruence_text(&report, timings),
        passed: report.passed,
    })
}

fn name_of(kind: CheckKindArg) -> &'static str {
    match kind {
        CheckKindArg::C1 => "c1",
        CheckKindArg::C2 => "c2",
        CheckKindArg::Dig2 => "dig2",
        CheckKindArg::Digit => "digit",
        CheckKindArg::Lemma => "lemma",
    }
}

fn cmd_unitroot(args: &UnitRootArgs) -> Result<Rendered, String> {
    require_prime(args.p)?;
    if args.s == 0 {
        return Err("--s must be at least 1".into());
    }
    if args.jobs == Some(0) {
        return Err("--jobs must be at least 1".into());
    }
    let reports: Vec<ZetaReport> = match args.t {
        Some(t) => vec![unit_root_compare(args.p, t, args.s).map_err(|e| e.to_string())?],
        None => unit_root_sweep(args.p, args.s, args.jobs).map_err(|e| e.to_string())?,
    };
    let passed = reports.iter().all(ZetaReport::passed);
    Ok(Rendered {
        command: "unitroot".into(),
        config: json!({ "p": args.p, "s": args.s, "t": args.t, "sweep": args.sweep }),
        results: reports.iter().map(report::zeta_json).collect(),
        text: report::zeta_table(&reports),
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_args(std::iter::once("ctcong").chain(args.iter().copied()))
    }

    #[test]
    fn ct_examples() {
        let apery = run(&["ct", "--poly", APERY_LAMBDA, "--d", "2", "--N", "4"]);
        assert_eq!(apery.stdout, "1 3 19 147 1251\n");
        assert_eq!(apery.code, 0);
        assert_eq!(
            run(&["ct", "--poly", "x1+x1^-1", "--d", "1", "--N", "4"]).stdout,
            "1 0 2 0 6\n"
        );
        assert_eq!(run(&["ct", "--N", "0"]).stdout, "1\n");
    }

    #[test]
    fn newton_examples() {
        let out = run(&["newton"]);
        assert!(out.stdout.contains("admissible: true"));
        assert!(out.stdout.contains("interior points: (0,0)"));
        let cube = run(&[
            "newton",
            "--poly",
            "(x1+x1^-1)^3",
            "--d",
            "1",
            "--format",
            "json",
        ]);
        let doc: Value = serde_json::from_str(&cube.stdout).unwrap();
        assert_eq!(doc["results"][0]["admissible"], json!(false));
        assert_eq!(
            doc["results"][0]["interior_points"]
                .as_array()
                .unwrap()
                .len(),
            5
        );
        let constant = run(&["newton", "--poly", "3", "--d", "1"]);
        assert!(constant.stdout.contains("admissible: false"));
    }

    #[test]
    fn check_exit_codes() {
        assert_eq!(
            run(&["check", "c2", "--p", "3", "--s", "2"]).code,
            EXIT_PASS
        );
        let lemma = run(&["check", "lemma", "--p", "2", "--nmax", "15"]);
        assert_eq!(lemma.code, EXIT_PASS, "{lemma:?}");
        let refused = run(&[
            "check",
            "c2",
            "--poly",
            "(x1+x1^-1)^3",
            "--d",
            "1",
            "--p",
            "3",
        ]);
        assert_eq!(refused.code, EXIT_USAGE);
        assert!(refused.stderr.contains("not admissible"));
        let forced = run(&[
            "check",
            "c2",
            "--poly",
            "(x1+x1^-1)^3",
            "--d",
            "1",
            "--p",
            "3",
            "--force",
        ]);
        assert_ne!(forced.code, EXIT_USAGE);
        assert_eq!(run(&["check", "c2", "--p", "4"]).code, EXIT_USAGE);
        assert_eq!(
            run(&["check", "c2", "--p", "3", "--poly", "x1 x2"]).code,
            EXIT_USAGE
        );
        assert_eq!(run(&["check", "nope", "--p", "3"]).code, EXIT_USAGE);
    }

    #[test]
    fn failed_check_exits_one() {
        let out = run(&[
            "check",
            "c2",
            "--poly",
            "x1^2+x1^-1",
            "--d",
            "1",
            "--p",
            "2",
            "--force",
        ]);
        assert_eq!(out.code, EXIT_FAIL);
        assert!(
            out.stdout.contains("FAIL at coefficient of X^3: 1 != 0"),
            "{}",
            out.stdout
        );
    }

    #[test]
    fn unitroot_examples() {
        let out = run(&["unitroot", "--p", "7", "--s", "2", "--sweep"]);
        assert_eq!(out.code, EXIT_PASS);
        assert_eq!(out.stdout.lines().count(), 7);
        assert!(out.stdout.contains("u mod 7^2"));
        let ss = run(&["unitroot", "--p", "5", "--t", "2", "--format", "json"]);
        let doc: Value = serde_json::from_str(&ss.stdout).unwrap();
        assert_eq!(doc["results"][0]["status"], json!("singular"));
        assert_eq!(doc["results"][0]["levels"], json!([]));
        assert_eq!(run(&["unitroot", "--p", "7", "--t", "0"]).code, EXIT_USAGE);
        assert_eq!(run(&["unitroot", "--p", "7"]).code, EXIT_USAGE);
    }

    #[test]
    fn json_is_deterministic() {
        let args = ["check", "dig2", "--p", "2", "--s", "2", "--format", "json"];
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a, b);
        let doc: Value = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(doc["command"], json!("check dig2"));
        assert_eq!(doc["config"]["nmax"], json!(7));
        assert_eq!(doc["config"]["mmax"], json!(3));
    }
}
