//! Command-line front end.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 resource limit. Diagnostics go to the error stream as a single line
//! `error[<code>]: <message>`.

pub mod parse;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::abelian::FgAbelianGroup;
use crate::arith::{iterated_witt, witt, BigCount};
use crate::class_row::ClassRow;
use crate::error::{Error, DEFAULT_RESOURCE_CAP};
use crate::hall::{Alphabet, Hall};
use crate::multiplier::{polynilpotent_multiplier, MultiplierReport};
use crate::oracle::{sweep_counts_with, sweep_iterated_with, sweep_schur, CheckOutcome, SweepReport};

pub use parse::parse_group;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "baer",
    version,
    about = "Polynilpotent multipliers of finitely generated abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a multiplier of a finitely generated abelian group
    Multiplier(MultiplierArgs),
    /// Count basic commutators with the Witt formula
    Witt(WittArgs),
    /// Enumerate basic commutators and generating sets
    #[command(subcommand)]
    Hall(HallCommand),
    /// Run the cross-check sweeps
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Args)]
struct Output {
    /// Emit a single JSON document
    #[arg(long, global = true)]
    json: bool,
    /// Append a short scientific rendering to large numbers
    #[arg(long, global = true)]
    scientific: bool,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("variety").required(true).args(["class_row", "nilpotent", "solvable"])))]
struct MultiplierArgs {
    /// Group expression, e.g. "Z^2 + Z/4 + Z/2"
    #[arg(long)]
    group: String,
    /// Polynilpotent class row c1,c2,... (innermost first)
    #[arg(long)]
    class_row: Option<String>,
    /// Nilpotency class c
    #[arg(long)]
    nilpotent: Option<u32>,
    /// Solvable length l
    #[arg(long)]
    solvable: Option<u32>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("shape").required(true).args(["weight", "row"])))]
struct WittArgs {
    /// Commutator weight n
    #[arg(long)]
    weight: Option<u32>,
    /// Class row c1,c2,... for the iterated count
    #[arg(long)]
    row: Option<String>,
    /// Number of letters d
    #[arg(long)]
    letters: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Subcommand)]
enum HallCommand {
    /// List the basic commutators of one weight
    Enumerate {
        #[arg(long)]
        letters: u32,
        #[arg(long)]
        weight: u32,
        /// Largest number of commutators to materialize
        #[arg(long, default_value_t = DEFAULT_RESOURCE_CAP)]
        cap: u64,
        #[command(flatten)]
        output: Output,
    },
    /// List A_{M,K} for M <= K < N and B_{M,N} truncated at weight W
    Sets {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        letters: u32,
        /// Weight cap W for the truncated B set
        #[arg(long)]
        cap: u32,
        /// Largest number of elements to materialize
        #[arg(long, default_value_t = DEFAULT_RESOURCE_CAP)]
        limit: u64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// c = 1 formula against exterior square and Schur recursion
    Schur {
        /// Largest free rank in the sweep
        #[arg(long, default_value_t = 4)]
        max_rank: u32,
        /// Largest invariant factor in the sweep
        #[arg(long, default_value_t = 24)]
        max_factor: u64,
        #[command(flatten)]
        verify: VerifyOutput,
    },
    /// Enumerated basic-commutator counts against the Witt formula
    Counts {
        /// Largest number of letters
        #[arg(long, default_value_t = 4)]
        max_d: u32,
        /// Largest weight
        #[arg(long, default_value_t = 6)]
        max_weight: u32,
        #[arg(long, default_value_t = DEFAULT_RESOURCE_CAP)]
        cap: u64,
        #[command(flatten)]
        verify: VerifyOutput,
    },
    /// Enumerated iterated sets against the iterated Witt formula
    Iterated {
        /// Class rows, repeated or separated by ';'
        #[arg(long, num_args = 1.., default_value = "1,1;2,1;1,2;1,1,1")]
        rows: Vec<String>,
        /// Largest number of letters
        #[arg(long, default_value_t = 3)]
        max_d: u32,
        #[arg(long, default_value_t = DEFAULT_RESOURCE_CAP)]
        cap: u64,
        #[command(flatten)]
        verify: VerifyOutput,
    },
}

#[derive(Debug, Args)]
struct VerifyOutput {
    /// Print every check, not only failures
    #[arg(long)]
    verbose: bool,
    #[command(flatten)]
    output: Output,
}

/// A failed command: exit status plus one-line diagnostic.
#[derive(Debug)]
struct Failure {
    status: i32,
    code: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (status, code) = match &e {
            Error::InvalidArgument(_) => (EXIT_USAGE, "invalid-argument"),
            Error::Parse(_) => (EXIT_USAGE, "parse"),
            Error::ResourceLimit { .. } => (EXIT_RESOURCE, "resource-limit"),
            Error::Internal(_) => (EXIT_VERIFY_FAILED, "internal"),
        };
        Failure {
            status,
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            // clap's message runs until the first blank line; keep it on one line
            let rendered = e.to_string();
            let message: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(|l| l.trim().trim_start_matches("error: "))
                .collect();
            let message = if message.is_empty() {
                "invalid usage".to_string()
            } else {
                message.join(" ")
            };
            let _ = writeln!(err, "error[usage]: {message}");
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Multiplier(a) => cmd_multiplier(a, out),
        Command::Witt(a) => cmd_witt(a, out),
        Command::Hall(h) => cmd_hall(h, out),
        Command::Verify(v) => cmd_verify(v, out, err),
    };
    match result {
        Ok(status) => status,
        Err(f) => {
            let _ = writeln!(err, "error[{}]: {}", f.code, f.message);
            f.status
        }
    }
}

fn number(v: &BigCount, scientific: bool) -> String {
    if scientific && v.to_u64().is_none_or(|x| x >= 1_000_000) {
        format!("{v} ({})", v.scientific())
    } else {
        v.to_string()
    }
}

fn parse_row(text: &str) -> std::result::Result<ClassRow, Failure> {
    text.parse::<ClassRow>().map_err(Failure::from)
}

fn cmd_multiplier(a: MultiplierArgs, out: &mut dyn Write) -> CmdResult {
    let group = parse_group(&a.group).map_err(Error::from)?;
    let row = match (&a.class_row, a.nilpotent, a.solvable) {
        (Some(r), _, _) => parse_row(r)?,
        (_, Some(c), _) => ClassRow::nilpotent(c)?,
        (_, _, Some(l)) => ClassRow::solvable(l)?,
        _ => unreachable!("clap enforces one variety flag"),
    };
    let report = polynilpotent_multiplier(&group, &row)?;
    if a.output.json {
        let doc = report_json(&report)?;
        let _ = writeln!(out, "{doc}");
    } else {
        let _ = write!(out, "{}", report_text(&report, a.output.scientific));
    }
    Ok(EXIT_OK)
}

/// JSON document for a report. Every number is a decimal string.
pub fn report_json(report: &MultiplierReport) -> Result<Value, Error> {
    let factors = report.result.invariant_factors(DEFAULT_RESOURCE_CAP)?;
    Ok(json!({
        "free_rank": report.result.free_rank().to_string(),
        "invariant_factors": factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "f_values": report.f_values.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "multiplicities": report.multiplicities.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "paper_shape": report.paper_shape.iter().map(|t| json!({
            "order": t.order.to_string(),
            "multiplicity": t.multiplicity.to_string(),
        })).collect::<Vec<_>>(),
    }))
}

pub fn report_text(report: &MultiplierReport, scientific: bool) -> String {
    let mut s = String::new();
    s.push_str(&format!("group:       {}\n", report.input_group));
    s.push_str(&format!("class row:   {}\n", report.class_row));
    s.push_str(&format!("formula:     {}\n", report.paper_shape_text()));
    s.push_str(&format!("canonical:   {}\n", report.result));
    s.push('\n');
    let mut rows = vec![[
        "i".to_string(),
        "f_i".to_string(),
        "multiplicity".to_string(),
        "summand".to_string(),
    ]];
    let mut index = report.first_index().clone();
    for ((f, mult), term) in report
        .f_values
        .iter()
        .zip(&report.multiplicities)
        .zip(&report.paper_shape)
    {
        let summand = if num_traits::Zero::is_zero(&term.order) {
            "Z".to_string()
        } else {
            format!("Z/{}", term.order)
        };
        rows.push([
            index.to_string(),
            number(f, scientific),
            number(mult, scientific),
            summand,
        ]);
        index += &BigCount::from(1u64);
    }
    let widths: Vec<usize> = (0..4)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    for r in rows {
        let line = format!(
            "{:<w0$}  {:<w1$}  {:<w2$}  {}",
            r[0],
            r[1],
            r[2],
            r[3],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2]
        );
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s
}

fn cmd_witt(a: WittArgs, out: &mut dyn Write) -> CmdResult {
    let letters: BigCount = a.letters.parse()?;
    let value = match (a.weight, &a.row) {
        (Some(n), _) => witt(n, letters)?,
        (_, Some(r)) => iterated_witt(&parse_row(r)?, letters)?,
        _ => unreachable!("clap enforces one of --weight/--row"),
    };
    if a.output.json {
        let _ = writeln!(out, "{}", json!({ "value": value.to_string() }));
    } else {
        let _ = writeln!(out, "{}", number(&value, a.output.scientific));
    }
    Ok(EXIT_OK)
}

fn cmd_hall(cmd: HallCommand, out: &mut dyn Write) -> CmdResult {
    match cmd {
        HallCommand::Enumerate {
            letters,
            weight,
            cap,
            output,
        } => {
            let list = Hall::with_cap(cap).enumerate_basic(&Alphabet::base(letters), weight)?;
            if output.json {
                let doc = json!({
                    "count": list.len().to_string(),
                    "commutators": list.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                });
                let _ = writeln!(out, "{doc}");
            } else {
                for c in &list {
                    let _ = writeln!(out, "{c}");
                }
                let _ = writeln!(
                    out,
                    "# {} basic commutators of weight {weight} on {letters} letters",
                    list.len()
                );
            }
        }
        HallCommand::Sets {
            m,
            n,
            letters,
            cap,
            limit,
            output,
        } => {
            let hall = Hall::with_cap(limit);
            let alphabet = Alphabet::base(letters);
            let mut a_sets = Vec::new();
            for k in m..n {
                a_sets.push((k, hall.generate_a_set(m, k, &alphabet)?));
            }
            let b_set = hall.generate_b_set(m, n, &alphabet, cap)?;
            if output.json {
                let doc = json!({
                    "a_sets": a_sets.iter().map(|(k, s)| json!({
                        "m": m,
                        "n": k,
                        "members": s.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                    "b_set": {
                        "m": m,
                        "n": n,
                        "weight_cap": cap,
                        "members": b_set.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
                    },
                });
                let _ = writeln!(out, "{doc}");
            } else {
                for (k, s) in &a_sets {
                    let _ = writeln!(out, "A_{{{m},{k}}} ({} elements)", s.len());
                    for c in s {
                        let _ = writeln!(out, "  {c}");
                    }
                }
                let _ = writeln!(out, "B_{{{m},{n}}} up to weight {cap} ({} elements)", b_set.len());
                for i in &b_set {
                    let _ = writeln!(out, "  {i}");
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn outcome_json(o: &CheckOutcome) -> Value {
    json!({
        "name": o.name,
        "instance": o.instance,
        "expected": o.expected.to_string(),
        "actual": o.actual.to_string(),
        "pass": o.pass,
    })
}

fn cmd_verify(cmd: VerifyCommand, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let (label, report, verify) = match cmd {
        VerifyCommand::Schur {
            max_rank,
            max_factor,
            verify,
        } => ("schur", sweep_schur(max_rank, max_factor)?, verify),
        VerifyCommand::Counts {
            max_d,
            max_weight,
            cap,
            verify,
        } => (
            "counts",
            sweep_counts_with(Hall::with_cap(cap), max_d, max_weight)?,
            verify,
        ),
        VerifyCommand::Iterated {
            rows,
            max_d,
            cap,
            verify,
        } => {
            let mut parsed = Vec::new();
            for r in rows.iter().flat_map(|r| r.split(';')) {
                if !r.trim().is_empty() {
                    parsed.push(parse_row(r)?);
                }
            }
            (
                "iterated",
                sweep_iterated_with(Hall::with_cap(cap), &parsed, max_d)?,
                verify,
            )
        }
    };
    write_sweep(label, &report, &verify, out, err);
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn write_sweep(label: &str, report: &SweepReport, verify: &VerifyOutput, out: &mut dyn Write, err: &mut dyn Write) {
    let failures: Vec<&CheckOutcome> = report.failures().collect();
    if verify.output.json {
        let listed: Vec<Value> = if verify.verbose {
            report.outcomes.iter().map(outcome_json).collect()
        } else {
            failures.iter().map(|o| outcome_json(o)).collect()
        };
        let doc = json!({
            "sweep": label,
            "checks": report.len(),
            "failures": failures.len(),
            "pass": report.all_pass(),
            "outcomes": listed,
        });
        let _ = writeln!(out, "{doc}");
    } else {
        for o in &report.outcomes {
            if verify.verbose || !o.pass {
                let _ = writeln!(out, "{o}");
            }
        }
        let _ = writeln!(
            out,
            "{label}: {} checks, {} failures: {}",
            report.len(),
            failures.len(),
            if report.all_pass() { "PASS" } else { "FAIL" }
        );
    }
    if !failures.is_empty() {
        let _ = writeln!(
            err,
            "error[verify-failed]: {} of {} {label} checks failed",
            failures.len(),
            report.len()
        );
    }
}

/// Renders a group the way the parser reads it back.
pub fn render_group(g: &FgAbelianGroup) -> String {
    g.to_string()
}
