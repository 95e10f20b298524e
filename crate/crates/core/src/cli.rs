//! The `redcyc` command-line front end.
//!
//! Every command produces a [`Report`]: a list of flat rows plus a summary,
//! rendered as an aligned table, CSV or JSON. Exit status is 0 on success, 1
//! when a verification row fails and 2 for invalid input or exceeded limits.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::census::{self, CensusReport, ENUMERATION_CAP};
use crate::ff::{FieldDesignation, FieldSpec};
use crate::gl2::Gl2;
use crate::numtheory::{self, count_reducible_classes};
use crate::reps::{self, RepType};
use crate::{Error, Result};

/// Upper limit for `sweep --m-max`.
pub const SWEEP_M_CAP: u64 = 100_000;

pub const SCHEMA_VERSION: u64 = 1;

/// Columns of verification rows, shared by `verify` and `sweep`.
pub const VERIFY_COLUMNS: [&str; 11] = [
    "q",
    "m",
    "rho",
    "delta",
    "involutions",
    "n_formula",
    "n_diag",
    "n_burnside",
    "n_census",
    "irreducible_classes",
    "match",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "redcyc",
    version,
    about = "Conjugacy classes of reducible cyclic subgroups of GL(2,q)"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Suppress terminal output.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form class count for one order m.
    Count {
        #[arg(long)]
        m: u64,
    },
    /// Canonical class representatives over GF(q).
    Reps {
        /// Field as "q" or "p^k".
        #[arg(long)]
        q: String,
        #[arg(long)]
        m: u64,
    },
    /// Brute-force conjugacy census of cyclic subgroups of order m.
    Census {
        #[arg(long)]
        q: String,
        #[arg(long)]
        m: u64,
    },
    /// Compare the formula, the diagonal model, Burnside and the census.
    Verify {
        #[arg(long)]
        q: String,
        /// Restrict to one order; defaults to every m dividing q-1.
        #[arg(long)]
        m: Option<u64>,
    },
    /// Verification over ranges of m and of prime powers q.
    Sweep {
        #[arg(long)]
        m_max: Option<u64>,
        #[arg(long)]
        q_max: Option<u64>,
        /// Worker threads; output does not depend on it.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// A rendered-independent command result.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub columns: Vec<String>,
    pub rows: Vec<Map<String, Value>>,
    pub summary: Map<String, Value>,
    /// Free-text remarks shown in table output only.
    pub notes: Vec<String>,
    pub failed: bool,
}

impl Report {
    fn new(command: &str, columns: &[&str]) -> Self {
        Report {
            command: command.to_string(),
            params: Map::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            summary: Map::new(),
            notes: Vec::new(),
            failed: false,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "params": self.params,
            "rows": self.rows,
            "summary": self.summary,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Table => self.render_table(),
        }
    }

    fn cell(value: Option<&Value>) -> String {
        match value {
            None | Some(Value::Null) => String::new(),
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(self.columns.iter().map(|c| Self::cell(row.get(c))))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }

    fn render_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| {
                self.columns
                    .iter()
                    .map(|c| match row.get(c) {
                        None | Some(Value::Null) => "-".to_string(),
                        v => Self::cell(v),
                    })
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cells
                    .iter()
                    .map(|r| r[i].len())
                    .chain([c.len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let line = |out: &mut String, fields: &[String]| {
            let parts: Vec<String> = fields
                .iter()
                .zip(&widths)
                .map(|(f, w)| format!("{f:>w$}"))
                .collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        line(&mut out, &self.columns);
        for r in &cells {
            line(&mut out, r);
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        for (k, v) in &self.summary {
            let _ = writeln!(out, "{k}: {}", Self::cell(Some(v)));
        }
        out
    }
}

fn big(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn row(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn parse_field(designation: &str) -> Result<FieldSpec> {
    let d: FieldDesignation = designation.parse()?;
    FieldSpec::from_designation(d)
}

fn require_positive(name: &str, m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidInput(format!("--{name} must be at least 1")));
    }
    Ok(())
}

/// Formula, diagonal-model and Burnside values for one `m`.
fn formula_columns(m: u64) -> Result<(Map<String, Value>, bool)> {
    let report = count_reducible_classes(&numtheory::factorize(m)?);
    let diag = census::diagonal_model_classes(m).count;
    let burnside = census::burnside_count(m)?;
    let agree = report.n_classes == diag as u128 && diag == burnside;
    let cols = row(vec![
        ("m", json!(m)),
        ("rho", big(report.rho)),
        ("delta", json!(report.delta)),
        ("involutions", json!(report.involutions)),
        ("n_formula", big(report.n_classes)),
        ("n_diag", json!(diag)),
        ("n_burnside", json!(burnside)),
    ]);
    Ok((cols, agree))
}

/// One verification row from a census report.
fn verify_row(c: &CensusReport) -> Result<(Map<String, Value>, bool)> {
    let mut r = Map::new();
    r.insert("q".into(), json!(c.q));
    let mut ok = c.passed();
    if c.formula_n.is_some() {
        let (cols, agree) = formula_columns(c.m)?;
        r.extend(cols);
        ok &= agree;
    } else {
        r.insert("m".into(), json!(c.m));
    }
    r.insert("n_census".into(), json!(c.reducible_classes));
    r.insert("irreducible_classes".into(), json!(c.irreducible_classes));
    r.insert("match".into(), json!(ok));
    for col in VERIFY_COLUMNS {
        r.entry(col.to_string()).or_insert(Value::Null);
    }
    Ok((r, ok))
}

/// Verification rows for `m | q - 1` plus the irreducible-class tally over
/// the remaining divisors of `q^2 - 1`.
struct FieldVerification {
    rows: Vec<(Map<String, Value>, bool)>,
    irreducible_checked: usize,
    irreducible_passed: usize,
}

fn verify_whole_field(field: &FieldSpec) -> Result<FieldVerification> {
    let reports = census::verify_field(field)?;
    let mut rows = Vec::new();
    let (mut checked, mut passed) = (0, 0);
    for c in &reports {
        if c.formula_n.is_some() {
            rows.push(verify_row(c)?);
        } else {
            checked += 1;
            passed += usize::from(c.irreducible_ok);
        }
    }
    Ok(FieldVerification {
        rows,
        irreducible_checked: checked,
        irreducible_passed: passed,
    })
}

fn cmd_count(m: u64) -> Result<Report> {
    require_positive("m", m)?;
    let mf = numtheory::factorize(m)?;
    let c = count_reducible_classes(&mf);
    let mut report = Report::new(
        "count",
        &[
            "m",
            "rho",
            "delta",
            "involutions",
            "n_classes",
            "fix_bijective",
        ],
    );
    report.params.insert("m".into(), json!(m));
    report.rows.push(row(vec![
        ("m", json!(m)),
        ("rho", big(c.rho)),
        ("delta", json!(c.delta)),
        ("involutions", json!(c.involutions)),
        ("n_classes", big(c.n_classes)),
        (
            "fix_bijective",
            json!(numtheory::fix_bijectivity_predicate(&mf)),
        ),
    ]));
    report.summary.insert("n_classes".into(), big(c.n_classes));
    Ok(report)
}

fn cmd_reps(designation: &str, m: u64) -> Result<Report> {
    require_positive("m", m)?;
    let field = parse_field(designation)?;
    let gl = Gl2::new(&field);
    let entries = reps::representatives(&field, m)?;
    let mut report = Report::new(
        "reps",
        &[
            "type",
            "a",
            "b",
            "generator",
            "involution_l",
            "paper_form",
            "normalizer",
        ],
    );
    report.params.insert("q".into(), json!(field.q()));
    report.params.insert("m".into(), json!(m));
    let lambda = field.element_of_order(m)?;
    report.notes.push(format!(
        "subgroups are <dia(l^a, l^b)> with l = {} of order {m}",
        field.format(lambda)
    ));
    if m == 2 {
        report.notes.push(
            "m = 2: <dia(-1,1)> and <dia(1,-1)> are swapped by conjugation, so that class is tagged III".into(),
        );
    }
    for e in &entries {
        let paper_form = match (&e.paper_form, e.type_tag) {
            (Some(ks), _) => json!(ks.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
            (None, RepType::III) => json!("none"),
            (None, _) => Value::Null,
        };
        report.rows.push(row(vec![
            ("type", json!(e.type_tag.to_string())),
            ("a", json!(e.exponent_pair.0)),
            ("b", json!(e.exponent_pair.1)),
            ("generator", json!(gl.format(&e.generator))),
            (
                "involution_l",
                e.involution_l.map_or(Value::Null, |l| json!(l)),
            ),
            ("paper_form", paper_form),
            (
                "normalizer",
                json!(reps::normalizer_type(m, e.exponent_pair)?.as_str()),
            ),
        ]));
    }
    let count = |t| entries.iter().filter(|e| e.type_tag == t).count();
    report
        .summary
        .insert("classes".into(), json!(entries.len()));
    report
        .summary
        .insert("type_i".into(), json!(count(RepType::I)));
    report
        .summary
        .insert("type_ii".into(), json!(count(RepType::II)));
    report
        .summary
        .insert("type_iii".into(), json!(count(RepType::III)));
    Ok(report)
}

fn cmd_census(designation: &str, m: u64) -> Result<Report> {
    require_positive("m", m)?;
    let field = parse_field(designation)?;
    let gl = Gl2::new(&field);
    let c = census::census(&field, m)?;
    let mut report = Report::new("census", &["representative", "order", "class_size", "kind"]);
    report.params.insert("q".into(), json!(field.q()));
    report.params.insert("m".into(), json!(m));
    for class in &c.classes {
        report.rows.push(row(vec![
            (
                "representative",
                json!(gl.format(&class.representative.min_generator)),
            ),
            ("order", json!(class.representative.order)),
            ("class_size", json!(class.class_size)),
            ("kind", json!(class.kind.as_str())),
        ]));
    }
    report
        .summary
        .insert("total_subgroups".into(), json!(c.total_subgroups));
    report
        .summary
        .insert("reducible_classes".into(), json!(c.reducible_classes));
    report
        .summary
        .insert("irreducible_classes".into(), json!(c.irreducible_classes));
    report
        .summary
        .insert("formula_n".into(), c.formula_n.map_or(Value::Null, big));
    report.summary.insert("match".into(), json!(c.passed()));
    report.failed = !c.passed();
    Ok(report)
}

fn cmd_verify(designation: &str, m: Option<u64>) -> Result<Report> {
    let field = parse_field(designation)?;
    if field.q().pow(4) > ENUMERATION_CAP {
        return Err(Error::ResourceLimit(format!(
            "q = {}: q^4 exceeds the enumeration cap {ENUMERATION_CAP}",
            field.q()
        )));
    }
    let mut report = Report::new("verify", &VERIFY_COLUMNS);
    report.params.insert("q".into(), json!(field.q()));
    let (rows, checked, passed) = match m {
        Some(m) => {
            require_positive("m", m)?;
            report.params.insert("m".into(), json!(m));
            (vec![verify_row(&census::census(&field, m)?)?], 0, 0)
        }
        None => {
            let v = verify_whole_field(&field)?;
            (v.rows, v.irreducible_checked, v.irreducible_passed)
        }
    };
    finish_verification(&mut report, rows, checked, passed);
    Ok(report)
}

fn finish_verification(
    report: &mut Report,
    rows: Vec<(Map<String, Value>, bool)>,
    irreducible_checked: usize,
    irreducible_passed: usize,
) {
    let total = rows.len();
    let passed = rows.iter().filter(|(_, ok)| *ok).count();
    report.rows = rows.into_iter().map(|(r, _)| r).collect();
    report.summary.insert("rows".into(), json!(total));
    report.summary.insert("passed".into(), json!(passed));
    report
        .summary
        .insert("failed".into(), json!(total - passed));
    report
        .summary
        .insert("irreducible_checked".into(), json!(irreducible_checked));
    report
        .summary
        .insert("irreducible_passed".into(), json!(irreducible_passed));
    report.failed = passed != total || irreducible_passed != irreducible_checked;
}

/// Prime powers in `[2, q_max]`.
pub fn prime_powers_up_to(q_max: u64) -> Vec<u64> {
    (2..=q_max)
        .filter(|&q| q.to_string().parse::<FieldDesignation>().is_ok())
        .collect()
}

fn cmd_sweep(m_max: Option<u64>, q_max: Option<u64>) -> Result<Report> {
    if m_max.is_none() && q_max.is_none() {
        return Err(Error::InvalidInput("sweep needs --m-max or --q-max".into()));
    }
    let mut report = Report::new("sweep", &VERIFY_COLUMNS);
    let mut rows = Vec::new();
    let (mut checked, mut passed) = (0, 0);
    if let Some(m_max) = m_max {
        if m_max == 0 {
            return Err(Error::InvalidInput("--m-max must be at least 1".into()));
        }
        if m_max > SWEEP_M_CAP {
            return Err(Error::ResourceLimit(format!(
                "--m-max is capped at {SWEEP_M_CAP}"
            )));
        }
        report.params.insert("m_max".into(), json!(m_max));
        let m_rows = (1..=m_max)
            .into_par_iter()
            .map(|m| {
                let (mut cols, agree) = formula_columns(m)?;
                for col in VERIFY_COLUMNS {
                    cols.entry(col.to_string()).or_insert(Value::Null);
                }
                cols.insert("match".into(), json!(agree));
                Ok((cols, agree))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.extend(m_rows);
    }
    if let Some(q_max) = q_max {
        if q_max < 2 {
            return Err(Error::InvalidInput("--q-max must be at least 2".into()));
        }
        if q_max.checked_pow(4).is_none_or(|n| n > ENUMERATION_CAP) {
            return Err(Error::ResourceLimit(format!(
                "--q-max {q_max}: q^4 exceeds the enumeration cap {ENUMERATION_CAP}"
            )));
        }
        report.params.insert("q_max".into(), json!(q_max));
        let fields = prime_powers_up_to(q_max)
            .into_par_iter()
            .map(|q| verify_whole_field(&parse_field(&q.to_string())?))
            .collect::<Result<Vec<_>>>()?;
        for v in fields {
            rows.extend(v.rows);
            checked += v.irreducible_checked;
            passed += v.irreducible_passed;
        }
    }
    finish_verification(&mut report, rows, checked, passed);
    Ok(report)
}

/// Runs a parsed command.
pub fn execute(config: &RunConfig) -> Result<Report> {
    match &config.command {
        Command::Count { m } => cmd_count(*m),
        Command::Reps { q, m } => cmd_reps(q, *m),
        Command::Census { q, m } => cmd_census(q, *m),
        Command::Verify { q, m } => cmd_verify(q, *m),
        Command::Sweep { m_max, q_max, jobs } => match jobs {
            Some(0) => Err(Error::InvalidInput("--jobs must be at least 1".into())),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(*n)
                .build()
                .map_err(|e| Error::Internal(e.to_string()))?
                .install(|| cmd_sweep(*m_max, *q_max)),
            None => cmd_sweep(*m_max, *q_max),
        },
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::LemmaViolation(_) | Error::Internal(_) => 1,
        _ => 2,
    }
}

/// Parses arguments, runs, writes output, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let report = match execute(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("redcyc: {e}");
            return exit_code(&e);
        }
    };
    let text = report.render(config.format);
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("redcyc: cannot write {}: {e}", path.display());
                return 2;
            }
            if !config.quiet {
                let status = if report.failed { "FAIL" } else { "ok" };
                eprintln!(
                    "{}: {} rows written to {} ({status})",
                    report.command,
                    report.rows.len(),
                    path.display()
                );
            }
        }
        None if !config.quiet => print!("{text}"),
        None => {}
    }
    i32::from(report.failed)
}
