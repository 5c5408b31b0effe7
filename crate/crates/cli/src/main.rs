use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qhankel::family::{Family, Value};
use qhankel::suite::{run_suite, CriterionOutcome, SuiteConfig};
use qhankel::tables::{render_latex, render_text, table_doc, table_rows, Fixtures};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "qhankel",
    version,
    about = "Exact Hankel determinant verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the verification schedule; exit 0 iff every check passes.
    Verify {
        /// Cap every order n in the schedule.
        #[arg(long)]
        max_n: Option<usize>,
        /// Base seed for random specializations (0 is the default stream).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Directory holding table1.txt, table2.txt and table3.txt.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Print H_n of a sequence family.
    Hankel {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print one of the reference tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the closed product for H_n of a sequence family.
    ClosedForm {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Failure that maps to exit status 2.
struct Internal(String);

impl<E: std::fmt::Display> From<E> for Internal {
    fn from(e: E) -> Self {
        Internal(e.to_string())
    }
}

#[derive(Serialize)]
struct CriterionDoc<'a> {
    criterion: u8,
    title: &'a str,
    pass: bool,
    reports: &'a [qhankel::report::VerifyReport],
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    pass: bool,
    criteria: Vec<CriterionDoc<'a>>,
}

#[derive(Serialize)]
struct ValueDoc<'a> {
    family: &'a str,
    n: usize,
    value: String,
}

fn render_verify(outcomes: &[CriterionOutcome], format: Format) -> Result<String, Internal> {
    let pass = outcomes.iter().all(|o| o.all_pass());
    let mut out = String::new();
    match format {
        Format::Text => {
            for o in outcomes {
                let c = o.criterion;
                let status = if o.all_pass() { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "# {status} criterion {}: {}", c.number, c.title);
                for r in &o.reports {
                    let _ = writeln!(out, "{}", r.line());
                }
            }
            let total: usize = outcomes.iter().map(|o| o.reports.len()).sum();
            let failed: usize = outcomes.iter().map(|o| o.failures().count()).sum();
            let _ = writeln!(out, "summary: {} passed, {failed} failed", total - failed);
        }
        Format::Json => {
            let doc = VerifyDoc {
                pass,
                criteria: outcomes
                    .iter()
                    .map(|o| CriterionDoc {
                        criterion: o.criterion.number,
                        title: o.criterion.title,
                        pass: o.all_pass(),
                        reports: &o.reports,
                    })
                    .collect(),
            };
            out = serde_json::to_string_pretty(&doc)?;
            out.push('\n');
        }
        Format::Latex => {
            out.push_str("\\begin{tabular}{|r|l|c|}\n\\hline\n");
            out.push_str("criterion & identity & result \\\\\n\\hline\n");
            for o in outcomes {
                for r in &o.reports {
                    let status = if r.pass { "pass" } else { "fail" };
                    let _ = writeln!(
                        out,
                        "{} & \\texttt{{{} n={}}} & {status} \\\\",
                        o.criterion.number, r.identity, r.n
                    );
                }
            }
            out.push_str("\\hline\n\\end{tabular}\n");
        }
    }
    Ok(out)
}

fn render_value(family: Family, n: usize, v: &Value, format: Format) -> Result<String, Internal> {
    Ok(match format {
        Format::Text => format!("{v}\n"),
        Format::Latex => format!("{}\n", v.to_latex()),
        Format::Json => {
            let doc = ValueDoc {
                family: family.name(),
                n,
                value: v.to_string(),
            };
            format!("{}\n", serde_json::to_string_pretty(&doc)?)
        }
    })
}

fn run(cli: Cli) -> Result<ExitCode, Internal> {
    match cli.command {
        Command::Verify {
            max_n,
            seed,
            format,
            fixtures,
        } => {
            let fixtures = match fixtures {
                Some(dir) => Fixtures::load(&dir)?,
                None => Fixtures::builtin(),
            };
            let cfg = SuiteConfig {
                max_n,
                seed,
                fixtures,
            };
            let outcomes = run_suite(&cfg);
            if outcomes
                .iter()
                .flat_map(|o| &o.reports)
                .any(|r| r.identity == "internal")
            {
                return Err(Internal("a check panicked".into()));
            }
            print!("{}", render_verify(&outcomes, format)?);
            let pass = outcomes.iter().all(|o| o.all_pass());
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Hankel { family, n, format } => {
            let f = Family::parse(&family)?;
            print!("{}", render_value(f, n, &f.hankel(n)?, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::ClosedForm { family, n, format } => {
            let f = Family::parse(&family)?;
            print!("{}", render_value(f, n, &f.closed_form(n)?, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { which, format } => {
            let rows = table_rows(which)?;
            match format {
                Format::Text => print!("{}", render_text(which, &rows)),
                Format::Latex => print!("{}", render_latex(which, &rows)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&table_doc(which, &rows))?
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
