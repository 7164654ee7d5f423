//! Command line front end for the ccnet engine.
//!
//! Exit codes: 0 success (for `equiv`: equivalent; for `verify`: all
//! checks passed), 1 negative outcome (`equiv`: not equivalent; `verify`:
//! some check failed), 2 usage or input errors (including exceeded
//! enumeration budgets), 3 internal disagreement between the two
//! equivalence deciders. All output is byte-deterministic.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ccnet::counting::{CountTable, Counter, Family};
use ccnet::network::{are_ode_equivalent, linear_equiv_oracle, Network};
use ccnet::oracle::{
    isomorphism_classes, verify_class_structure, verify_counts, VerificationReport,
    DEFAULT_ENUMERATION_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "ccnet",
    version,
    about = "Count and compare identical-edge homogeneous coupled cell networks"
)]
struct Cli {
    /// Output format for `table` (default csv) and `verify` (default text;
    /// only json applies).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Ceiling on how many matrices an exhaustive enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    budget: u64,

    /// For `equiv`: cross-check the verdict with the independent linear
    /// decider; a disagreement exits with status 3.
    #[arg(long, global = true)]
    oracle: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Markdown,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "H")]
    H,
    #[value(name = "K")]
    K,
    #[value(name = "M")]
    M,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::H => Family::H,
            FamilyArg::K => Family::K,
            FamilyArg::M => Family::M,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact count: family H (all networks up to isomorphism),
    /// K (connected) or M (minimal connected), at n cells and degree r.
    Count {
        family: FamilyArg,
        n: usize,
        r: usize,
    },
    /// Print the table of one family for n = 1..=max_n, r = 1..=max_r.
    Table {
        family: FamilyArg,
        max_n: usize,
        max_r: usize,
    },
    /// Reduce the network in FILE to its minimal form; prints the reduced
    /// network document and the reduction trace.
    Reduce {
        file: PathBuf,
        /// Accept a degree-0 (all-zero) input network.
        #[arg(long)]
        allow_degree_zero: bool,
    },
    /// Decide whether the networks in two files are ODE-equivalent.
    Equiv {
        a: PathBuf,
        b: PathBuf,
        /// Accept degree-0 (all-zero) input networks.
        #[arg(long)]
        allow_degree_zero: bool,
    },
    /// Check the closed-form counts and the reduction structure at (n, r)
    /// against exhaustive enumeration; prints a report.
    Verify { n: usize, r: u64 },
    /// Print one canonical representative per isomorphism class at
    /// (n, r), one JSON document per line, sorted.
    Enumerate {
        n: usize,
        r: u64,
        /// Keep only weakly connected classes.
        #[arg(long)]
        connected: bool,
        /// Keep only reduced (minimal-form) classes.
        #[arg(long)]
        minimal: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    };
    ExitCode::from(code)
}

struct Failure {
    code: u8,
    message: String,
}

impl From<ccnet::Error> for Failure {
    fn from(e: ccnet::Error) -> Failure {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Count { family, n, r } => {
            let count = Counter::new().count(family.into(), n, r)?;
            println!("{count}");
            Ok(0)
        }
        Command::Table {
            family,
            max_n,
            max_r,
        } => {
            let table = CountTable::compute(family.into(), max_n, max_r)?;
            let rendered = match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => render_table_csv(&table),
                Format::Markdown => render_table_markdown(&table),
                Format::Json => render_table_json(&table),
            };
            print!("{rendered}");
            Ok(0)
        }
        Command::Reduce {
            file,
            allow_degree_zero,
        } => {
            let network = read_network(&file, allow_degree_zero)?;
            let (reduced, trace) = network.reduce();
            println!("{}", reduced.to_json());
            println!("{}", trace.to_json());
            Ok(0)
        }
        Command::Equiv {
            a,
            b,
            allow_degree_zero,
        } => {
            let left = read_network(&a, allow_degree_zero)?;
            let right = read_network(&b, allow_degree_zero)?;
            let equivalent = are_ode_equivalent(&left, &right)?;
            if cli.oracle && left.cells() == right.cells() {
                let oracle_verdict = linear_equiv_oracle(&left, &right)?;
                if oracle_verdict != equivalent {
                    return Err(Failure {
                        code: 3,
                        message: format!(
                            "deciders disagree: reduction says {}, linear oracle says {}",
                            verdict(equivalent),
                            verdict(oracle_verdict)
                        ),
                    });
                }
            }
            println!("{}", verdict(equivalent));
            Ok(if equivalent { 0 } else { 1 })
        }
        Command::Verify { n, r } => {
            let mut report = verify_counts(n, r, cli.budget)?;
            let structure = verify_class_structure(n, r, cli.budget)?;
            report.checks.extend(structure.checks);
            print_report(&report, cli.format)?;
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::Enumerate {
            n,
            r,
            connected,
            minimal,
        } => {
            let stdout = std::io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            for class in isomorphism_classes(n, r, cli.budget)? {
                if connected && !class.is_connected() {
                    continue;
                }
                if minimal && !class.is_reduced() {
                    continue;
                }
                writeln!(out, "{}", class.to_json())?;
            }
            out.flush()?;
            Ok(0)
        }
    }
}

fn verdict(equivalent: bool) -> &'static str {
    if equivalent {
        "equivalent"
    } else {
        "not-equivalent"
    }
}

fn read_network(path: &PathBuf, allow_degree_zero: bool) -> Result<Network, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    Ok(Network::from_json(&text, allow_degree_zero)?)
}

fn print_report(report: &VerificationReport, format: Option<Format>) -> Result<(), Failure> {
    match format {
        None => {
            print!("{}", report.render_text());
            Ok(())
        }
        Some(Format::Json) => {
            println!("{}", report.render_json());
            Ok(())
        }
        Some(_) => Err(Failure {
            code: 2,
            message: "verify supports only --format json".into(),
        }),
    }
}

fn render_table_csv(table: &CountTable) -> String {
    let mut out = String::from("n/r");
    for r in 1..=table.max_r() {
        out.push(',');
        out.push_str(&r.to_string());
    }
    out.push('\n');
    for n in 1..=table.max_n() {
        out.push_str(&n.to_string());
        for r in 1..=table.max_r() {
            out.push(',');
            out.push_str(&table.get(n, r).to_string());
        }
        out.push('\n');
    }
    out
}

fn render_table_markdown(table: &CountTable) -> String {
    let mut out = String::from("| n/r |");
    for r in 1..=table.max_r() {
        out.push_str(&format!(" {r} |"));
    }
    out.push('\n');
    out.push_str("| --- |");
    for _ in 1..=table.max_r() {
        out.push_str(" --- |");
    }
    out.push('\n');
    for n in 1..=table.max_n() {
        out.push_str(&format!("| {n} |"));
        for r in 1..=table.max_r() {
            out.push_str(&format!(" {} |", table.get(n, r)));
        }
        out.push('\n');
    }
    out
}

fn render_table_json(table: &CountTable) -> String {
    let mut out = format!(
        "{{\"family\":\"{}\",\"max_n\":{},\"max_r\":{},\"values\":[",
        table.family(),
        table.max_n(),
        table.max_r()
    );
    for n in 1..=table.max_n() {
        if n > 1 {
            out.push(',');
        }
        out.push('[');
        for r in 1..=table.max_r() {
            if r > 1 {
                out.push(',');
            }
            out.push_str(&table.get(n, r).to_string());
        }
        out.push(']');
    }
    out.push_str("]}\n");
    out
}
