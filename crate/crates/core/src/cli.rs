//! Command-line front end.
//!
//! Verbs: `count`, `check`, `batch`, `rho`, `chars`. Exit codes: 0 success,
//! 1 parse/validation error, 2 engine disagreement under `--check`, 3 oracle
//! refusal when the oracle was requested explicitly.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::characters::hook_series;
use crate::engines::{count_with_budget, genus_of, rho_table, Engine, FactorizationProblem};
use crate::error::{Error, Result};
use crate::oracle::DEFAULT_BUDGET;
use crate::partitions::Partition;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;
pub const EXIT_ORACLE_REFUSED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "fullcycle", version, about = "Count factorizations of the full cycle (1 2 ... n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count ordered factorizations with the selected engine.
    Count(CountArgs),
    /// Count with every applicable engine and compare the results.
    Check(CountArgs),
    /// Run one problem per line of a file (`-` for stdin).
    Batch(BatchArgs),
    /// Dump the rho table of a partition.
    Rho(TableArgs),
    /// Dump the hook characters at a partition.
    Chars(TableArgs),
}

#[derive(Args, Debug)]
pub struct CountArgs {
    /// Size of the full cycle; inferred from the first factor when omitted.
    #[arg(short = 'n')]
    pub n: Option<usize>,
    /// Cycle type of a factor, e.g. `3,1,1` or `[1^2 3]`; repeat in factor order.
    #[arg(short = 'a', required = true, allow_hyphen_values = true)]
    pub alphas: Vec<String>,
    #[command(flatten)]
    pub run: RunOptions,
}

#[derive(Args, Debug, Clone)]
pub struct RunOptions {
    #[arg(long, default_value = "auto", value_parser = parse_engine)]
    pub engine: Engine,
    /// Also run every other applicable engine and compare.
    #[arg(long)]
    pub check: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub oracle_budget: u64,
}

#[derive(Args, Debug)]
pub struct BatchArgs {
    pub file: PathBuf,
    #[command(flatten)]
    pub run: RunOptions,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    pub partition: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

fn parse_engine(s: &str) -> std::result::Result<Engine, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// One problem as given on the command line or a batch line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub n: Option<usize>,
    pub alphas: Vec<String>,
    pub engine: Engine,
    pub output: OutputFormat,
    pub check: bool,
    pub oracle_budget: u64,
}

impl ProblemSpec {
    pub fn problem(&self) -> Result<FactorizationProblem> {
        let alphas = self.alphas.iter().map(|s| parse_partition(s)).collect::<Result<Vec<_>>>()?;
        match self.n {
            Some(n) => FactorizationProblem::with_size(n, alphas),
            None => FactorizationProblem::new(alphas),
        }
    }
}

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn parse_positive(token: &str, position: usize, what: &str) -> Result<usize> {
    match token.parse::<i64>() {
        Ok(v) if v > 0 => Ok(v as usize),
        Ok(v) => Err(parse_error(position, format!("{what} must be positive, got {v}"))),
        Err(_) => Err(parse_error(position, format!("expected an integer {what}, found `{token}`"))),
    }
}

/// Parses `3,1,1` or `[1^2 3]`. Positions in errors are byte offsets into `text`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.is_empty() {
        return Err(parse_error(0, "empty partition"));
    }
    let mut parts = Vec::new();
    if let Some(inner) = body.strip_prefix('[') {
        let Some(inner) = inner.strip_suffix(']') else {
            return Err(parse_error(lead + body.len(), "missing closing `]`"));
        };
        let base = lead + 1;
        let mut offset = 0;
        for token in inner.split(|c: char| c.is_whitespace() || c == ',') {
            let pos = base + offset;
            offset += token.len() + 1;
            if token.is_empty() {
                continue;
            }
            let (part, mult) = match token.split_once('^') {
                Some((p, m)) => {
                    (parse_positive(p, pos, "part")?, parse_positive(m, pos + p.len() + 1, "multiplicity")?)
                }
                None => (parse_positive(token, pos, "part")?, 1),
            };
            parts.extend(std::iter::repeat_n(part, mult));
        }
        if parts.is_empty() {
            return Err(parse_error(base, "empty partition"));
        }
    } else {
        let mut offset = lead;
        for token in body.split(',') {
            let trimmed = token.trim();
            let pos = offset + (token.len() - token.trim_start().len());
            offset += token.len() + 1;
            if trimmed.is_empty() {
                return Err(parse_error(pos, "empty part"));
            }
            parts.push(parse_positive(trimmed, pos, "part")?);
        }
    }
    Partition::new(parts)
}

/// Parses a batch line `n; α_1; α_2; …`. Returns `None` for blank and `#` lines.
pub fn parse_batch_line(line: &str, run: &RunOptions) -> Option<Result<ProblemSpec>> {
    let trimmed = line.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return None;
    }
    let mut fields = trimmed.split(';');
    let head = fields.next().unwrap_or("").trim();
    let n = match parse_positive(head, 0, "n") {
        Ok(n) => n,
        Err(e) => return Some(Err(e)),
    };
    let alphas: Vec<String> = fields.map(|f| f.trim().to_string()).filter(|f| !f.is_empty()).collect();
    Some(Ok(ProblemSpec {
        n: Some(n),
        alphas,
        engine: run.engine,
        output: run.format,
        check: run.check,
        oracle_budget: run.oracle_budget,
    }))
}

/// Result of one engine inside a `--check` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineRun {
    pub engine: Engine,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Set when the oracle declined because of its budget.
    #[serde(default)]
    pub skipped: bool,
    pub micros: u64,
}

/// Everything reported for one problem. Counts are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub m: usize,
    pub alphas: Vec<Partition>,
    pub r: Vec<usize>,
    pub g2: i64,
    pub genus: Option<usize>,
    pub engine: Engine,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub micros: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<EngineRun>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

impl Report {
    pub fn problem(&self) -> Result<FactorizationProblem> {
        FactorizationProblem::with_size(self.n, self.alphas.clone())
    }

    pub fn count_value(&self) -> Option<BigInt> {
        self.count.as_ref().and_then(|c| c.parse().ok())
    }
}

/// Either a report or a line that could not be turned into a problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Record {
    Report(Box<Report>),
    Invalid { line: usize, error: String },
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub record: Record,
}

fn timed(problem: &FactorizationProblem, engine: Engine, budget: u64) -> (Result<BigInt>, u64) {
    let start = Instant::now();
    let out = count_with_budget(problem, engine, budget);
    (out, start.elapsed().as_micros() as u64)
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_ORACLE_REFUSED,
        _ => EXIT_INVALID,
    }
}

/// Runs one problem and reports it; `line` labels invalid input in batch mode.
pub fn run(spec: &ProblemSpec) -> Outcome {
    run_line(spec, 0)
}

fn run_line(spec: &ProblemSpec, line: usize) -> Outcome {
    let problem = match spec.problem() {
        Ok(p) => p,
        Err(e) => {
            return Outcome { code: EXIT_INVALID, record: Record::Invalid { line, error: e.to_string() } };
        }
    };
    let genus = genus_of(&problem);
    let engine = spec.engine.resolve();
    let (result, micros) = timed(&problem, engine, spec.oracle_budget);
    let mut code = match &result {
        Ok(_) => EXIT_OK,
        Err(e) => error_code(e),
    };
    let mut report = Report {
        n: problem.n(),
        m: problem.m(),
        alphas: problem.alphas().to_vec(),
        r: genus.r.clone(),
        g2: genus.g2,
        genus: genus.genus,
        engine,
        count: result.as_ref().ok().map(BigInt::to_string),
        error: result.as_ref().err().map(Error::to_string),
        micros,
        checks: Vec::new(),
        agree: None,
    };

    if spec.check {
        let mut engines = vec![Engine::Ps, Engine::Theorem1, Engine::Characters];
        if genus.genus == Some(0) {
            engines.push(Engine::Genus0);
        }
        engines.push(Engine::Oracle);
        let mut agree = report.count.is_some();
        for e in engines {
            let run = if e == engine {
                EngineRun {
                    engine: e,
                    count: report.count.clone(),
                    error: report.error.clone(),
                    skipped: false,
                    micros,
                }
            } else {
                let (res, micros) = timed(&problem, e, spec.oracle_budget);
                let skipped = matches!(res, Err(Error::BudgetExceeded { .. }));
                EngineRun {
                    engine: e,
                    count: res.as_ref().ok().map(BigInt::to_string),
                    error: res.as_ref().err().map(Error::to_string),
                    skipped,
                    micros,
                }
            };
            if !run.skipped && (run.error.is_some() || run.count != report.count) {
                agree = false;
            }
            report.checks.push(run);
        }
        report.agree = Some(agree);
        if !agree && code == EXIT_OK {
            code = EXIT_DISAGREE;
        }
    }
    Outcome { code, record: Record::Report(Box::new(report)) }
}

fn genus_text(r: &Report) -> String {
    match r.genus {
        Some(g) => g.to_string(),
        None => "invalid".to_string(),
    }
}

fn join_alphas(alphas: &[Partition], sep: &str) -> String {
    alphas.iter().map(Partition::to_string).collect::<Vec<_>>().join(sep)
}

/// Multi-line human-readable rendering.
pub fn render_table(record: &Record) -> String {
    let r = match record {
        Record::Report(r) => r,
        Record::Invalid { line, error } if *line > 0 => return format!("line {line}: error: {error}\n"),
        Record::Invalid { error, .. } => return format!("error: {error}\n"),
    };
    let mut out = String::new();
    let rs: Vec<String> = r.r.iter().map(usize::to_string).collect();
    out += &format!("n        {}\n", r.n);
    out += &format!("alphas   {}\n", join_alphas(&r.alphas, " | "));
    out += &format!("r        {}\n", rs.join(" "));
    match r.genus {
        Some(g) => out += &format!("genus    {g}\n"),
        None => out += &format!("genus    invalid (2g = {})\n", r.g2),
    }
    out += &format!("engine   {}\n", r.engine);
    match (&r.count, &r.error) {
        (Some(c), _) => out += &format!("count    {c}\n"),
        (None, Some(e)) => out += &format!("error    {e}\n"),
        _ => {}
    }
    out += &format!("time     {} us\n", r.micros);
    if !r.checks.is_empty() {
        out += "check\n";
        for c in &r.checks {
            let value = match (&c.count, &c.error) {
                (Some(v), _) => v.clone(),
                (None, Some(e)) if c.skipped => format!("skipped ({e})"),
                (None, Some(e)) => format!("error ({e})"),
                _ => String::new(),
            };
            out += &format!("  {:<11} {}  [{} us]\n", c.engine.as_str(), value, c.micros);
        }
        let verdict = if r.agree == Some(true) { "all engines agree" } else { "DISAGREEMENT" };
        out += &format!("agree    {verdict}\n");
    }
    out
}

/// One-line rendering used by batch table output.
fn render_line(record: &Record) -> String {
    match record {
        Record::Report(r) => {
            let value = r.count.clone().unwrap_or_else(|| format!("error: {}", r.error.as_deref().unwrap_or("")));
            let mut s = format!(
                "n={} alphas={} genus={} engine={} count={} ({} us)",
                r.n,
                join_alphas(&r.alphas, " | "),
                genus_text(r),
                r.engine,
                value,
                r.micros
            );
            if let Some(a) = r.agree {
                s += if a { " agree" } else { " DISAGREEMENT" };
            }
            s + "\n"
        }
        other => render_table(other),
    }
}

pub fn render_json(record: &Record) -> String {
    serde_json::to_string(record).expect("records serialize") + "\n"
}

pub const CSV_HEADER: [&str; 7] = ["n", "m", "alphas", "genus", "engine", "count", "micros"];

fn csv_row(record: &Record) -> Vec<String> {
    match record {
        Record::Report(r) => vec![
            r.n.to_string(),
            r.m.to_string(),
            join_alphas(&r.alphas, ";"),
            genus_text(r),
            r.engine.to_string(),
            r.count.clone().unwrap_or_else(|| format!("error: {}", r.error.as_deref().unwrap_or(""))),
            r.micros.to_string(),
        ],
        Record::Invalid { error, .. } => {
            vec![
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                format!("error: {error}"),
                String::new(),
            ]
        }
    }
}

pub fn render_csv(records: &[Record]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        w.write_record(csv_row(r)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn render(records: &[Record], format: OutputFormat, batch: bool) -> String {
    match format {
        OutputFormat::Csv => render_csv(records),
        OutputFormat::Json => records.iter().map(render_json).collect(),
        OutputFormat::Table if batch => records.iter().map(render_line).collect(),
        OutputFormat::Table => records.iter().map(render_table).collect(),
    }
}

/// Runs every problem line of a batch file, in order.
pub fn run_batch(text: &str, options: &RunOptions) -> (i32, Vec<Record>) {
    let mut code = EXIT_OK;
    let mut records = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let outcome = match parse_batch_line(line, options) {
            None => continue,
            Some(Ok(spec)) => run_line(&spec, i + 1),
            Some(Err(e)) => {
                Outcome { code: EXIT_INVALID, record: Record::Invalid { line: i + 1, error: e.to_string() } }
            }
        };
        code = code.max(outcome.code);
        records.push(outcome.record);
    }
    (code, records)
}

#[derive(Serialize)]
struct RhoEntry {
    j: usize,
    k: usize,
    value: String,
}

#[derive(Serialize)]
struct CharEntry {
    a: usize,
    b: usize,
    value: String,
}

#[derive(Serialize)]
struct TableDump<E> {
    partition: Partition,
    entries: Vec<E>,
}

fn dump<E: Serialize>(
    partition: Partition,
    entries: Vec<E>,
    header: [&str; 3],
    row: impl Fn(&E) -> [String; 3],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string(&TableDump { partition, entries }).expect("serializes") + "\n",
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header).expect("in-memory write");
            for e in &entries {
                w.write_record(row(e)).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        OutputFormat::Table => {
            let mut out = format!("partition {partition}\n{:>4} {:>4}  {}\n", header[0], header[1], header[2]);
            for e in &entries {
                let [x, y, v] = row(e);
                out += &format!("{x:>4} {y:>4}  {v}\n");
            }
            out
        }
    }
}

fn run_rho(args: &TableArgs) -> Result<String> {
    let gamma = parse_partition(&args.partition)?;
    let table = rho_table(&gamma)?;
    let entries = table.iter().map(|(j, k, v)| RhoEntry { j, k, value: v.to_string() }).collect();
    Ok(dump(gamma, entries, ["j", "k", "rho"], |e| [e.j.to_string(), e.k.to_string(), e.value.clone()], args.format))
}

fn run_chars(args: &TableArgs) -> Result<String> {
    let gamma = parse_partition(&args.partition)?;
    let series = hook_series(&gamma)?;
    let entries = series.iter().map(|(h, v)| CharEntry { a: h.a, b: h.b, value: v.to_string() }).collect();
    Ok(dump(gamma, entries, ["a", "b", "chi"], |e| [e.a.to_string(), e.b.to_string(), e.value.clone()], args.format))
}

fn count_spec(args: CountArgs, force_check: bool) -> ProblemSpec {
    ProblemSpec {
        n: args.n,
        alphas: args.alphas,
        engine: args.run.engine,
        output: args.run.format,
        check: args.run.check || force_check,
        oracle_budget: args.run.oracle_budget,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let (code, text) = match cli.command {
        Command::Count(args) => {
            let spec = count_spec(args, false);
            let outcome = run(&spec);
            (outcome.code, render(&[outcome.record], spec.output, false))
        }
        Command::Check(args) => {
            let spec = count_spec(args, true);
            let outcome = run(&spec);
            (outcome.code, render(&[outcome.record], spec.output, false))
        }
        Command::Batch(args) => {
            let text = if args.file.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map(|_| s)
            } else {
                fs::read_to_string(&args.file)
            };
            match text {
                Ok(text) => {
                    let (code, records) = run_batch(&text, &args.run);
                    (code, render(&records, args.run.format, true))
                }
                Err(e) => {
                    let _ = writeln!(err, "error: cannot read {}: {e}", args.file.display());
                    return EXIT_INVALID;
                }
            }
        }
        Command::Rho(args) => match run_rho(&args) {
            Ok(s) => (EXIT_OK, s),
            Err(e) => (EXIT_INVALID, format!("error: {e}\n")),
        },
        Command::Chars(args) => match run_chars(&args) {
            Ok(s) => (EXIT_OK, s),
            Err(e) => (EXIT_INVALID, format!("error: {e}\n")),
        },
    };
    if code == EXIT_INVALID && text.starts_with("error:") {
        let _ = err.write_all(text.as_bytes());
    } else {
        let _ = out.write_all(text.as_bytes());
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn spec(alphas: &[&str], check: bool) -> ProblemSpec {
        ProblemSpec {
            n: None,
            alphas: alphas.iter().map(|s| s.to_string()).collect(),
            engine: Engine::Auto,
            output: OutputFormat::Json,
            check,
            oracle_budget: DEFAULT_BUDGET,
        }
    }

    #[test]
    fn partition_literals() {
        assert_eq!(parse_partition("3,1,1").unwrap(), p(&[3, 1, 1]));
        assert_eq!(parse_partition("[1^2 3]").unwrap(), p(&[3, 1, 1]));
        assert_eq!(parse_partition(" 1, 3 ,1 ").unwrap(), p(&[3, 1, 1]));
        assert_eq!(parse_partition("[3 1 1]").unwrap(), p(&[3, 1, 1]));
        assert_eq!(parse_partition("7").unwrap(), p(&[7]));
    }

    #[test]
    fn partition_literal_errors_carry_positions() {
        let pos = |s: &str| match parse_partition(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{s:?}: {other:?}"),
        };
        assert_eq!(pos("0,2"), 0);
        assert_eq!(pos("2,0"), 2);
        assert_eq!(pos(""), 0);
        assert_eq!(pos("3,,1"), 2);
        assert_eq!(pos("3,x"), 2);
        assert_eq!(pos("[1^2 3"), 6);
        assert_eq!(pos("[1^0 3]"), 3);
        assert_eq!(pos("[2 -1]"), 3);
        assert_eq!(pos("[]"), 1);
    }

    #[test]
    fn run_examples() {
        let out = run(&spec(&["3", "3"], false));
        assert_eq!(out.code, EXIT_OK);
        let Record::Report(r) = out.record else { panic!() };
        assert_eq!((r.count.as_deref(), r.genus), (Some("1"), Some(1)));

        let out = run(&spec(&["2,1,1", "2,1,1", "2,1,1"], true));
        assert_eq!(out.code, EXIT_OK);
        let Record::Report(r) = out.record else { panic!() };
        assert_eq!(r.count.as_deref(), Some("16"));
        assert_eq!(r.agree, Some(true));
        assert_eq!(r.checks.len(), 5);

        let out = run(&spec(&["2,1"], false));
        let Record::Report(r) = out.record else { panic!() };
        assert_eq!((r.count.as_deref(), r.genus), (Some("0"), None));
    }

    #[test]
    fn validation_errors_exit_with_one() {
        assert_eq!(run(&spec(&["3", "2"], false)).code, EXIT_INVALID);
        assert_eq!(run(&spec(&["0,3"], false)).code, EXIT_INVALID);
        let mut s = spec(&["3"], false);
        s.n = Some(4);
        assert_eq!(run(&s).code, EXIT_INVALID);
    }

    #[test]
    fn explicit_oracle_refusal_exits_with_three() {
        let mut s = spec(&["4", "4"], false);
        s.engine = Engine::Oracle;
        s.oracle_budget = 2;
        assert_eq!(run(&s).code, EXIT_ORACLE_REFUSED);
        // under --check the oracle is merely skipped
        s.engine = Engine::Auto;
        s.check = true;
        let out = run(&s);
        assert_eq!(out.code, EXIT_OK);
        let Record::Report(r) = out.record else { panic!() };
        assert!(r.checks.iter().any(|c| c.engine == Engine::Oracle && c.skipped));
    }

    #[test]
    fn json_round_trip() {
        let out = run(&spec(&["[1^2 2]", "3,1", "4"], false));
        let text = render_json(&out.record);
        let back: Record = serde_json::from_str(&text).unwrap();
        assert_eq!(back, out.record);
        let Record::Report(r) = back else { panic!() };
        let problem = r.problem().unwrap();
        assert_eq!(problem.alphas(), &[p(&[2, 1, 1]), p(&[3, 1]), p(&[4])]);
        assert_eq!(r.count_value(), Some(crate::engines::count_ps(&problem).unwrap()));
    }

    #[test]
    fn batch_preserves_order_and_count() {
        let text = "# comment\n3; 3; 3\n\n4; 2,1,1; 2,1,1; 2,1,1\n3; 2,1\n3; 5\n";
        let opts = RunOptions { engine: Engine::Auto, check: false, format: OutputFormat::Json, oracle_budget: 1000 };
        let (code, records) = run_batch(text, &opts);
        assert_eq!(records.len(), 4);
        assert_eq!(code, EXIT_INVALID);
        let counts: Vec<Option<String>> = records
            .iter()
            .map(|r| match r {
                Record::Report(r) => r.count.clone(),
                Record::Invalid { .. } => None,
            })
            .collect();
        assert_eq!(counts, vec![Some("1".into()), Some("16".into()), Some("0".into()), None]);
        assert!(matches!(records[3], Record::Invalid { line: 6, .. }));
    }

    #[test]
    fn csv_layout() {
        let out = run(&spec(&["2,1", "2,1"], false));
        let csv = render_csv(&[out.record]);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("n,m,alphas,genus,engine,count,micros"));
        let row = lines.next().unwrap();
        assert!(row.starts_with("3,2,\"2,1;2,1\",0,ps,3,"), "{row}");
    }
}
