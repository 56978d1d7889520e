//! The `seqtool` commands as library functions.
//!
//! Each command returns a [`CmdOutput`] (captured stdout, stderr and exit
//! code) so it can be driven from the binary, from tests or from other code.
//! Exit codes: 0 verified, 1 mathematical mismatch, 2 usage or parse error.

mod bench;
mod bfile;

use std::fmt::Write;
use std::ops::RangeInclusive;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{rat, rat_from_int, to_integer, ExactRat};
use crate::genfun::DEFAULT_ORDER;
use crate::polyseries::{central_coeff, laurent_trinomial_coeff};
use crate::sequences::{
    assoc_ctc, check_identity, motzkin_path_oracle_bounded, stream, Family, Identity, SeqSpec, DEFAULT_ORACLE_BOUND,
};

pub use bench::{run_bench, BenchError, BenchMethod, BenchOutcome, BenchRow};
pub use bfile::{parse_bfile, write_bfile, BFileEntry, BFileError, BFileErrorKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const ENV_ORDER: &str = "SEQTOOL_ORDER";
pub const ENV_JOBS: &str = "SEQTOOL_JOBS";

/// Reference values of `c_n^0`, `c_n^1` and `6 c_n^2` for `n = 0..=10`.
pub const TABLE1: [[i64; 3]; 11] = [
    [1, 1, 3],
    [1, 1, 3],
    [3, 2, 5],
    [7, 4, 9],
    [19, 9, 18],
    [51, 21, 38],
    [141, 51, 84],
    [393, 127, 192],
    [1107, 323, 451],
    [3139, 835, 1083],
    [8953, 2188, 2649],
];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Bfile,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Ok(OutputFormat::Plain),
            "csv" => Ok(OutputFormat::Csv),
            "bfile" => Ok(OutputFormat::Bfile),
            _ => Err(Error::InvalidParameter(format!("unknown format `{s}` (plain, csv, bfile)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchMethodKind {
    DirectSum,
    Recurrence,
    Oracle,
}

impl FromStr for BenchMethodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "direct_sum" | "direct" => Ok(BenchMethodKind::DirectSum),
            "recurrence" => Ok(BenchMethodKind::Recurrence),
            "oracle" => Ok(BenchMethodKind::Oracle),
            _ => Err(Error::InvalidParameter(format!("unknown method `{s}` (direct_sum, recurrence, oracle)"))),
        }
    }
}

/// Settings shared by the commands. The binary fills these from flags, then
/// `SEQTOOL_ORDER` / `SEQTOOL_JOBS`, then the defaults below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    /// Truncation order for generating-function checks (default 200).
    pub order: usize,
    /// Largest `n` an oracle method may be asked for (default 30).
    pub oracle_bound: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Output format for benchmark tables.
    pub format: OutputFormat,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self { order: DEFAULT_ORDER, oracle_bound: DEFAULT_ORACLE_BOUND, jobs: None, format: OutputFormat::Plain }
    }
}

impl CliConfig {
    fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.jobs.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
            Some(pool) => pool.install(f),
            None => f(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CmdOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {message}\n"), code: EXIT_USAGE }
    }

    pub fn success(&self) -> bool {
        self.code == EXIT_OK
    }
}

/// Parses `a..b` or `a..=b` (both inclusive of `b`) or a single index.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::InvalidParameter(format!("invalid range `{s}` (expected a..b)"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

/// Emits terms `range` of `spec`, one per line.
///
/// `bfile` writes `index value`; `csv` writes an `index,value` header then
/// rows; rationals render as `num/den` and are rejected by `bfile`.
pub fn cmd_gen(spec: &SeqSpec, range: RangeInclusive<usize>, format: OutputFormat) -> CmdOutput {
    if range.is_empty() {
        return CmdOutput::usage(format!("empty range {}..{}", range.start(), range.end()));
    }
    let values = match stream(spec, range.end() + 1) {
        Ok(v) => v,
        Err(e) => return CmdOutput::usage(e),
    };
    let mut out = String::new();
    if format == OutputFormat::Csv {
        out.push_str("index,value\n");
    }
    for n in range {
        let v = &values[n];
        match format {
            OutputFormat::Plain => writeln!(out, "{v}"),
            OutputFormat::Csv => writeln!(out, "{n},{v}"),
            OutputFormat::Bfile => match to_integer(v) {
                Some(i) => writeln!(out, "{n} {i}"),
                None => {
                    return CmdOutput::usage(format!(
                        "{spec} has the non-integer term {v} at n = {n}; b-files hold integers only"
                    ))
                }
            },
        }
        .expect("writing to a String");
    }
    CmdOutput::ok(out)
}

/// Recomputes the reference table and diffs it cell by cell against [`TABLE1`].
pub fn cmd_table1() -> CmdOutput {
    let mut out = String::from("n\tc_n^0\tc_n^1\t6*c_n^2\n");
    let mut diffs = String::new();
    for (n, expected) in TABLE1.iter().enumerate() {
        let got = [assoc_ctc(n, 0), assoc_ctc(n, 1), assoc_ctc(n, 2) * rat(6, 1)];
        let cells: Vec<String> = got.iter().map(ToString::to_string).collect();
        writeln!(out, "{n}\t{}", cells.join("\t")).expect("writing to a String");
        for (col, (value, want)) in got.iter().zip(expected).enumerate() {
            if *value != rat(*want, 1) {
                writeln!(diffs, "row n = {n}, column {}: expected {want}, computed {value}", col + 1)
                    .expect("writing to a String");
            }
        }
    }
    if diffs.is_empty() {
        out.push_str("all 33 values match\n");
        CmdOutput::ok(out)
    } else {
        CmdOutput { stdout: out, stderr: diffs, code: EXIT_MISMATCH }
    }
}

/// Splits on commas outside parentheses, so `EQ41(p=1),EQ43_CORRECTED(m=3,p=1)`
/// yields two names.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts
}

/// Runs the selected identities (`all` or a comma-separated list such as
/// `EQ24,EQ41(p=2)`) over `0..=n_max`. Generating-function identities are
/// limited to indices below the configured truncation order.
pub fn cmd_check(selection: &str, n_max: usize, config: &CliConfig) -> CmdOutput {
    if n_max == 0 {
        return CmdOutput::usage("n_max must be at least 1");
    }
    let identities: Vec<Identity> = if selection.trim().eq_ignore_ascii_case("all") {
        Identity::standard_suite()
    } else {
        match split_top_level(selection).into_iter().map(str::parse).collect::<Result<Vec<_>>>() {
            Ok(list) => list,
            Err(e) => return CmdOutput::usage(e),
        }
    };
    let reports = config.install(|| {
        identities
            .par_iter()
            .map(|&identity| {
                let hi = if identity.uses_series() { n_max.min(config.order.saturating_sub(1)) } else { n_max };
                check_identity(identity, 0..=hi)
            })
            .collect::<Vec<_>>()
    });
    let mut out = String::new();
    for report in &reports {
        writeln!(out, "{report}").expect("writing to a String");
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        writeln!(out, "{} identities passed", reports.len()).expect("writing to a String");
        CmdOutput::ok(out)
    } else {
        writeln!(out, "{failed} of {} identities FAILED", reports.len()).expect("writing to a String");
        CmdOutput { stdout: out, stderr: String::new(), code: EXIT_MISMATCH }
    }
}

/// Compares a b-file against `spec`. Entry `i` of the file is matched with
/// term `i - offset` of the sequence.
pub fn cmd_oeis_verify(path: &Path, spec: &SeqSpec, offset: i64) -> CmdOutput {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return CmdOutput::usage(format!("cannot read {}: {e}", path.display())),
    };
    let entries = match parse_bfile(&text) {
        Ok(entries) => entries,
        Err(e) => return CmdOutput::usage(format!("{}: {e}", path.display())),
    };
    verify_entries(&entries, spec, offset)
}

pub fn verify_entries(entries: &[BFileEntry], spec: &SeqSpec, offset: i64) -> CmdOutput {
    let mut mismatches = String::new();
    let term_index = |e: &BFileEntry| usize::try_from(e.index - offset).ok();
    let needed = entries.iter().filter_map(term_index).max();
    let values = match needed.map(|n| stream(spec, n + 1)).transpose() {
        Ok(v) => v.unwrap_or_default(),
        Err(e) => return CmdOutput::usage(e),
    };
    for e in entries {
        match term_index(e) {
            None => writeln!(mismatches, "index {}: maps to a negative term with offset {offset}", e.index),
            Some(n) if values[n] != rat_from_int(e.value.clone()) => {
                writeln!(mismatches, "index {}: file has {}, computed {}", e.index, e.value, values[n])
            }
            Some(_) => Ok(()),
        }
        .expect("writing to a String");
    }
    if mismatches.is_empty() {
        CmdOutput::ok(format!("{spec}: {} entries verified\n", entries.len()))
    } else {
        CmdOutput { stdout: String::new(), stderr: mismatches, code: EXIT_MISMATCH }
    }
}

fn oracle_method(spec: &SeqSpec, bound: usize) -> Result<BenchMethod> {
    let spec = *spec;
    let per_term: fn(&SeqSpec, usize, usize) -> Result<ExactRat> = match spec.family() {
        Family::Ctc => |_, n, _| Ok(rat_from_int(central_coeff(n as u32, 2)?)),
        Family::GeneralizedD => |s, n, _| Ok(rat_from_int(central_coeff(n as u32, s.m_step())?)),
        Family::TrinomialCol => |s, n, _| Ok(rat_from_int(laurent_trinomial_coeff(n as u32, s.column()))),
        Family::Motzkin => |_, n, bound| Ok(rat_from_int(motzkin_path_oracle_bounded(n, bound)?)),
        other => return Err(Error::Unsupported(format!("no oracle for {other}"))),
    };
    Ok(BenchMethod::new("oracle", move |n_max| (0..=n_max).map(|n| per_term(&spec, n, bound)).collect()))
}

/// Builds the benchmark methods for `spec`.
pub fn bench_methods(spec: &SeqSpec, kinds: &[BenchMethodKind], oracle_bound: usize) -> Result<Vec<BenchMethod>> {
    let spec = *spec;
    kinds
        .iter()
        .map(|kind| match kind {
            BenchMethodKind::DirectSum => {
                Ok(BenchMethod::new("direct_sum", move |n_max| Ok((0..=n_max).map(|n| spec.term(n)).collect())))
            }
            BenchMethodKind::Recurrence => Ok(BenchMethod::new("recurrence", move |n_max| stream(&spec, n_max + 1))),
            BenchMethodKind::Oracle => oracle_method(&spec, oracle_bound),
        })
        .collect()
}

/// Times each method over `0..=n_max` after checking they all agree.
pub fn cmd_bench(spec: &SeqSpec, n_max: usize, kinds: &[BenchMethodKind], config: &CliConfig) -> CmdOutput {
    if kinds.is_empty() {
        return CmdOutput::usage("select at least one method");
    }
    if kinds.contains(&BenchMethodKind::Oracle) && n_max > config.oracle_bound {
        return CmdOutput::usage(format!("n_max = {n_max} exceeds the oracle bound {}", config.oracle_bound));
    }
    match bench_methods(spec, kinds, config.oracle_bound) {
        Ok(methods) => render_bench(&spec.to_string(), n_max, &methods, config.format),
        Err(e) => CmdOutput::usage(e),
    }
}

/// Runs and renders a benchmark. The timing column is the only
/// run-dependent field; nothing is timed unless all methods agree.
pub fn render_bench(label: &str, n_max: usize, methods: &[BenchMethod], format: OutputFormat) -> CmdOutput {
    let outcome = match run_bench(n_max, methods) {
        Ok(outcome) => outcome,
        Err(BenchError::NoMethods) => return CmdOutput::usage(BenchError::NoMethods),
        Err(e) => {
            return CmdOutput {
                stdout: String::new(),
                stderr: format!("correctness error, no timings reported: {e}\n"),
                code: EXIT_MISMATCH,
            }
        }
    };
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str("sequence,method,n_max,elapsed_us\n");
            for row in &outcome.rows {
                writeln!(out, "{label},{},{n_max},{}", row.method, row.elapsed.as_micros())
                    .expect("writing to a String");
            }
        }
        _ => {
            writeln!(out, "{label}: {} methods agree on n = 0..={n_max}", outcome.rows.len()).expect("writing to a String");
            for row in &outcome.rows {
                writeln!(out, "{:<12} {:>12.3} ms", row.method, row.elapsed.as_secs_f64() * 1e3)
                    .expect("writing to a String");
            }
        }
    }
    CmdOutput::ok(out)
}
