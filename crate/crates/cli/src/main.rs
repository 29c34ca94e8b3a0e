use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use negalcd::arith;
use negalcd::code::build_code;
use negalcd::cosets::{count_lcd_negacyclic, LcdMode};
use negalcd::defining_set::{Construction, Params};
use negalcd::distance::Budget;
use negalcd::report::{CodeReport, ReportOptions, Verdict};
use negalcd::search::{self, SearchMode, SearchQuery};
use negalcd::tables::{self, TableRow};

const EXIT_PARAMETER: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "negalcd", version, about = "Negacyclic LCD code constructor and verifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Word budget for distance enumeration (accepts forms like 1e7).
    #[arg(long, value_parser = parse_budget)]
    budget: Option<u64>,
    /// Budget for maximal-minor MDS certificates.
    #[arg(long, value_parser = parse_budget)]
    minors_budget: Option<u64>,
}

impl Output {
    fn options(&self) -> ReportOptions {
        let d = Budget::default();
        ReportOptions {
            budget: Budget {
                words: self.budget.unwrap_or(d.words),
                minors: self.minors_budget.unwrap_or(d.minors),
            },
            ..ReportOptions::default()
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Euclidean,
    Hermitian,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Build one code from a family and its parameters.
    Construct {
        /// E1, E2, E3, H1, H1nonMDS, H2, H2nonMDS or H3.
        family: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        lambda: Option<u64>,
        #[arg(long)]
        gamma: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Build the code with defining set Z over GF(q) and run every oracle.
    Verify {
        /// Alphabet size of the code.
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        /// Comma-separated odd residues mod 2n.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        z: Vec<u64>,
        /// Require the code to be LCD in this mode; exit 3 otherwise.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[command(flatten)]
        output: Output,
    },
    /// Rebuild a published table (1 to 6) and judge every row.
    Table {
        id: u8,
        #[command(flatten)]
        output: Output,
    },
    /// Report every admissible family code with q in a range.
    Search {
        #[arg(long)]
        q_min: u64,
        #[arg(long)]
        q_max: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        /// Restrict to one family.
        #[arg(long)]
        family: Option<String>,
        /// Skip codes longer than this.
        #[arg(long, default_value_t = search::DEFAULT_MAX_N)]
        max_n: u64,
        /// Largest q accepted.
        #[arg(long, default_value_t = search::DEFAULT_Q_CAP)]
        q_cap: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Count nontrivial LCD negacyclic codes by enumeration and by formula.
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_budget(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() && v >= 0.0 && v <= u64::MAX as f64 && v.fract() == 0.0 {
        Ok(v as u64)
    } else {
        Err(format!("`{s}` is not a nonnegative integer"))
    }
}

struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn param_error(e: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: EXIT_PARAMETER,
        error: e.into(),
    }
}

fn io_error(e: impl Into<anyhow::Error>) -> Failure {
    Failure { code: 1, error: e.into() }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))
                .map_err(io_error)?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: Serialize>(w: &mut dyn Write, v: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *w, v).map_err(io_error)?;
    writeln!(w).map_err(io_error)
}

fn write_csv(w: &mut dyn Write, header: &[&str], records: impl IntoIterator<Item = Vec<String>>) -> Result<(), Failure> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(header).map_err(io_error)?;
    for r in records {
        csv.write_record(&r).map_err(io_error)?;
    }
    csv.flush().map_err(io_error)
}

fn emit_reports(output: &Output, reports: &[CodeReport], single: bool) -> Result<(), Failure> {
    let mut w = sink(&output.out)?;
    match output.format {
        Format::Json if single => write_json(&mut *w, &reports[0])?,
        Format::Json => {
            for r in reports {
                serde_json::to_writer(&mut *w, r).map_err(io_error)?;
                writeln!(w).map_err(io_error)?;
            }
        }
        Format::Csv => write_csv(&mut *w, &CodeReport::CSV_HEADER, reports.iter().map(CodeReport::csv_record))?,
    }
    w.flush().map_err(io_error)
}

fn status(mismatch: bool) -> u8 {
    if mismatch {
        EXIT_MISMATCH
    } else {
        0
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Construct {
            family,
            q,
            n,
            lambda,
            gamma,
            l,
            output,
        } => {
            let c: Construction = family.parse().map_err(|e: String| param_error(anyhow::anyhow!(e)))?;
            let n = match (n, gamma) {
                (None, Some(g)) if g > 0 && (q - 1) % g == 0 => Some((q - 1) / g),
                _ => n,
            };
            let params = Params { q, n, lambda, gamma, l };
            let set = c.build(&params).map_err(param_error)?;
            let code = negalcd::code::build_family_code(&set).map_err(param_error)?;
            let report = CodeReport::build(&code, output.options()).map_err(param_error)?;
            emit_reports(&output, std::slice::from_ref(&report), true)?;
            Ok(status(report.claim_verdict == Some(Verdict::Mismatch)))
        }
        Command::Verify { q, n, z, mode, output } => {
            let z: BTreeSet<u64> = z.into_iter().collect();
            let code = build_code(q, n, &z).map_err(param_error)?;
            if matches!(mode, Some(ModeArg::Hermitian | ModeArg::Both)) {
                code.is_lcd(hermitian_mode(q)?).map_err(param_error)?;
            }
            let report = CodeReport::build(&code, output.options()).map_err(param_error)?;
            emit_reports(&output, std::slice::from_ref(&report), true)?;
            let e = report.lcd.euclidean.all_agree_lcd();
            let h = report.lcd.hermitian.is_some_and(|r| r.all_agree_lcd());
            let ok = match mode {
                None => true,
                Some(ModeArg::Euclidean) => e,
                Some(ModeArg::Hermitian) => h,
                Some(ModeArg::Both) => e && h,
            };
            let disagree = !report.lcd.euclidean.consistent() || report.lcd.hermitian.is_some_and(|r| !r.consistent());
            Ok(status(!ok || disagree))
        }
        Command::Table { id, output } => {
            let rows = tables::reproduce_table(id, output.options()).map_err(param_error)?;
            let mut w = sink(&output.out)?;
            match output.format {
                Format::Json => write_json(&mut *w, &rows)?,
                Format::Csv => write_csv(&mut *w, &TableRow::CSV_HEADER, rows.iter().map(TableRow::csv_record))?,
            }
            w.flush().map_err(io_error)?;
            Ok(status(rows.iter().any(|r| r.verdict == Verdict::Mismatch)))
        }
        Command::Search {
            q_min,
            q_max,
            mode,
            family,
            max_n,
            q_cap,
            output,
        } => {
            let family = family
                .map(|f| f.parse::<Construction>())
                .transpose()
                .map_err(|e| param_error(anyhow::anyhow!(e)))?;
            let query = SearchQuery {
                family,
                max_n,
                q_cap,
                ..SearchQuery::new(
                    q_min,
                    q_max,
                    match mode {
                        ModeArg::Euclidean => SearchMode::Euclidean,
                        ModeArg::Hermitian => SearchMode::Hermitian,
                        ModeArg::Both => SearchMode::Both,
                    },
                )
            };
            let plan = search::plan(&query).map_err(param_error)?;
            if plan.skipped_long > 0 {
                eprintln!("skipped {} codes with n > {max_n}", plan.skipped_long);
            }
            let reports = search::run(&plan, output.options()).map_err(io_error)?;
            emit_reports(&output, &reports, false)?;
            Ok(status(reports.iter().any(|r| r.claim_verdict == Some(Verdict::Mismatch))))
        }
        Command::Count { n, q, output } => {
            let count = count_lcd_negacyclic(n, q).map_err(param_error)?;
            let mut w = sink(&output.out)?;
            match output.format {
                Format::Json => write_json(&mut *w, &count)?,
                Format::Csv => write_csv(
                    &mut *w,
                    &["n", "q", "formula", "enumerated", "agrees"],
                    [vec![
                        n.to_string(),
                        q.to_string(),
                        count.formula.to_string(),
                        count.enumerated.to_string(),
                        count.agrees().to_string(),
                    ]],
                )?,
            }
            w.flush().map_err(io_error)?;
            Ok(status(!count.agrees()))
        }
    }
}

fn hermitian_mode(q: u64) -> Result<LcdMode, Failure> {
    arith::exact_sqrt(q)
        .filter(|&r| arith::is_odd_prime_power(r))
        .map(LcdMode::Hermitian)
        .ok_or_else(|| param_error(anyhow::anyhow!("Hermitian mode needs a square alphabet, got q = {q}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
