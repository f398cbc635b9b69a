//! Command-line front end: per-triple reports, graph export, range scans and
//! the verification suite.
//!
//! Exit codes: 0 success, 1 verification failure or computation error, 2 usage
//! error or invalid triple.

use std::ffi::OsString;
use std::io::{self, Write};
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::classify::{
    boundary_by_genus, boundary_case, boundary_list, br_a_is_two, infer_nr_a, is_elliptic,
    is_pg_ideal_m, is_rational, normal_rees_cohen_macaulay, rees_normal, verify_nr3_certificate,
    NrInference,
};
use crate::error::{Error, Result};
use crate::filtration::{
    colength_drop, colength_drop_by_staircase, normal_hilbert_coefficients,
    normal_reduction_number, nr_by_staircase_oracle, q_sequence, HilbertCoefficients,
};
use crate::genus::{geometric_genus, pg_lower_bound_check, q_of_m};
use crate::numtheory::{binomial, hj_evaluate, Rational};
use crate::resolution::{neg_z_squared_formula, resolve};
use crate::ring::{closure_of_m_power, power_membership_oracle, BrieskornTriple, Monomial};

#[derive(Debug, Parser)]
#[command(
    name = "brieskorn",
    version,
    about = "Exact invariants of Brieskorn surface singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report every invariant of one triple.
    Invariants {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
        /// Shorthand for `--format json`.
        #[arg(long, conflicts_with = "format")]
        json: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Export the resolution dual graph.
    Graph {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate invariants over inclusive ranges `LO..HI` (or a single value).
    Scan {
        #[arg(value_parser = parse_range)]
        a_range: RangeInclusive<i64>,
        #[arg(value_parser = parse_range)]
        b_range: RangeInclusive<i64>,
        #[arg(value_parser = parse_range)]
        c_range: RangeInclusive<i64>,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Check every closed form against its oracle for `2 <= a <= b <= c <= MAX`.
    Verify {
        #[arg(allow_negative_numbers = true)]
        max: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Filter {
    All,
    Rational,
    Elliptic,
    Boundary,
    ReesNormal,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let parse = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|_| format!("`{s}` is not a range of the form LO..HI"))
    };
    let range = match s.split_once("..") {
        Some((lo, hi)) => parse(lo)?..=parse(hi)?,
        None => {
            let n = parse(s)?;
            n..=n
        }
    };
    if !range.is_empty() && *range.start() < 2 {
        return Err(format!("range `{s}` starts below 2"));
    }
    Ok(range)
}

/// Everything reported for one triple.
#[derive(Debug, Clone, Serialize)]
pub struct TripleReport {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub pg: i64,
    pub pf: i64,
    /// Closed-form `p_f`; `None` when its hypothesis fails.
    pub pf_formula: Option<i64>,
    pub z_squared: i64,
    pub central_genus: i64,
    pub c0: i64,
    pub nr_m: u64,
    pub br_m: u64,
    pub q_m: i64,
    /// `q(n m)` for `n = 0..=br(m)+1`.
    pub q_sequence: Vec<i64>,
    /// `v_n` for `n = 0..=br(m)`.
    pub v_sequence: Vec<i64>,
    pub hilbert: HilbertCoefficients,
    pub rational: bool,
    pub elliptic: bool,
    /// `p_g = C(nr(m), 2)` by lattice count.
    pub boundary: bool,
    /// Membership in the listed boundary families.
    pub boundary_listed: bool,
    pub rees_normal: bool,
    pub normal_rees_cohen_macaulay: bool,
    pub pg_ideal_m: bool,
    #[serde(rename = "nr_A")]
    pub nr_a: NrInference,
    #[serde(rename = "br_A_is_two")]
    pub br_a_is_two: Option<bool>,
}

pub fn report(t: &BrieskornTriple) -> Result<TripleReport> {
    let (a, b, c) = t.exponents();
    let pg = geometric_genus(t)?;
    let seq = q_sequence(t, pg)?;
    let r = resolve(t)?;
    Ok(TripleReport {
        a,
        b,
        c,
        pg,
        pf: r.pf,
        pf_formula: r.pf_formula,
        z_squared: r.z_squared(),
        central_genus: r.seifert.genus,
        c0: r.seifert.c0,
        nr_m: seq.nr,
        br_m: seq.br,
        q_m: q_of_m(t)?,
        q_sequence: seq.q.clone(),
        v_sequence: seq.v.clone(),
        hilbert: seq.hilbert,
        rational: pg == 0,
        elliptic: is_elliptic(t)?,
        boundary: boundary_by_genus(t)?,
        boundary_listed: boundary_list(a, b, c),
        rees_normal: rees_normal(t),
        normal_rees_cohen_macaulay: normal_rees_cohen_macaulay(t),
        pg_ideal_m: is_pg_ideal_m(t),
        nr_a: infer_nr_a(t)?,
        br_a_is_two: br_a_is_two(t)?,
    })
}

fn render_list(values: &[i64]) -> String {
    let items: Vec<String> = values.iter().map(i64::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn render_text(r: &TripleReport) -> String {
    let yes_no_unknown = |v: Option<bool>| v.map_or("unknown".to_string(), |b| b.to_string());
    let lines = [
        format!("triple: ({}, {}, {})", r.a, r.b, r.c),
        format!("pg: {}", r.pg),
        format!("pf: {}", r.pf),
        format!(
            "pf_formula: {}",
            r.pf_formula
                .map_or("inapplicable".to_string(), |v| v.to_string())
        ),
        format!("z_squared: {}", r.z_squared),
        format!("central_genus: {}", r.central_genus),
        format!("c0: {}", r.c0),
        format!("nr_m: {}", r.nr_m),
        format!("br_m: {}", r.br_m),
        format!("q_m: {}", r.q_m),
        format!("q_sequence: {}", render_list(&r.q_sequence)),
        format!("v_sequence: {}", render_list(&r.v_sequence)),
        format!(
            "hilbert: e0={} e1={} e2={}",
            r.hilbert.e0, r.hilbert.e1, r.hilbert.e2
        ),
        format!("rational: {}", r.rational),
        format!("elliptic: {}", r.elliptic),
        format!("boundary: {}", r.boundary),
        format!("boundary_listed: {}", r.boundary_listed),
        format!("rees_normal: {}", r.rees_normal),
        format!(
            "normal_rees_cohen_macaulay: {}",
            r.normal_rees_cohen_macaulay
        ),
        format!("pg_ideal_m: {}", r.pg_ideal_m),
        format!("nr_A: {} {}", r.nr_a.status.as_str(), r.nr_a.value),
        format!("br_A_is_two: {}", yes_no_unknown(r.br_a_is_two)),
    ];
    lines.join("\n") + "\n"
}

/// Canonical JSON: keys sorted (serde_json's default map), no floats.
fn canonical_json<T: Serialize>(value: &T) -> String {
    let value: Value = serde_json::to_value(value).expect("report serializes");
    serde_json::to_string_pretty(&value).expect("value serializes") + "\n"
}

#[derive(Debug, Clone, Serialize)]
struct ScanRow {
    a: i64,
    b: i64,
    c: i64,
    pg: i64,
    nr_m: u64,
    q_m: i64,
    pf: i64,
    rational: bool,
    elliptic: bool,
    boundary: bool,
    rees_normal: bool,
    #[serde(rename = "nr_A_status")]
    nr_a_status: &'static str,
    #[serde(rename = "nr_A")]
    nr_a: u64,
}

const SCAN_HEADER: [&str; 13] = [
    "a",
    "b",
    "c",
    "pg",
    "nr_m",
    "q_m",
    "pf",
    "rational",
    "elliptic",
    "boundary",
    "rees_normal",
    "nr_A_status",
    "nr_A",
];

impl ScanRow {
    fn from_report(r: &TripleReport) -> Self {
        Self {
            a: r.a,
            b: r.b,
            c: r.c,
            pg: r.pg,
            nr_m: r.nr_m,
            q_m: r.q_m,
            pf: r.pf,
            rational: r.rational,
            elliptic: r.elliptic,
            boundary: r.boundary,
            rees_normal: r.rees_normal,
            nr_a_status: r.nr_a.status.as_str(),
            nr_a: r.nr_a.value,
        }
    }

    fn keep(&self, filter: Filter) -> bool {
        match filter {
            Filter::All => true,
            Filter::Rational => self.rational,
            Filter::Elliptic => self.elliptic,
            Filter::Boundary => self.boundary,
            Filter::ReesNormal => self.rees_normal,
        }
    }
}

/// Triples `a <= b <= c` drawn from the three ranges, in lexicographic order.
fn triples_in(
    a_range: &RangeInclusive<i64>,
    b_range: &RangeInclusive<i64>,
    c_range: &RangeInclusive<i64>,
) -> Result<Vec<BrieskornTriple>> {
    let mut out = Vec::new();
    for a in a_range.clone() {
        for b in b_range.clone().filter(|&b| b >= a) {
            for c in c_range.clone().filter(|&c| c >= b) {
                out.push(BrieskornTriple::new(a, b, c)?);
            }
        }
    }
    Ok(out)
}

fn scan_rows(triples: &[BrieskornTriple], filter: Filter) -> Result<Vec<ScanRow>> {
    let rows: Vec<ScanRow> = triples
        .par_iter()
        .map(|t| report(t).map(|r| ScanRow::from_report(&r)))
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().filter(|r| r.keep(filter)).collect())
}

fn render_csv(rows: &[ScanRow]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    writer.write_record(SCAN_HEADER).expect("in-memory write");
    for row in rows {
        writer.serialize(row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

/// Outcome of one property on one triple.
enum Check {
    Skip,
    Pass,
    Fail(String),
}

fn check(ok: bool, detail: impl FnOnce() -> String) -> Check {
    if ok {
        Check::Pass
    } else {
        Check::Fail(detail())
    }
}

fn check_result(r: Result<Check>) -> Check {
    r.unwrap_or_else(|e| Check::Fail(e.to_string()))
}

type Property = fn(&BrieskornTriple) -> Check;

fn nr_staircase(t: &BrieskornTriple) -> Check {
    let r = nr_by_staircase_oracle(t);
    let nr = normal_reduction_number(t);
    check(r.nr == nr && r.br == nr, || {
        format!("staircase nr = {}, br = {}; formula {nr}", r.nr, r.br)
    })
}

fn colength_drops(t: &BrieskornTriple) -> Check {
    check_result((|| {
        for n in 0..=normal_reduction_number(t) + 1 {
            let by_staircase = colength_drop_by_staircase(t, n)?;
            if colength_drop(t, n) != by_staircase {
                return Ok(Check::Fail(format!(
                    "v_{n} = {} by formula, {by_staircase} by staircase",
                    colength_drop(t, n)
                )));
            }
        }
        Ok(Check::Pass)
    })())
}

fn power_membership(t: &BrieskornTriple) -> Check {
    for n in 0..=normal_reduction_number(t) + 2 {
        let ideal = closure_of_m_power(t, n);
        for k in 0..t.levels() {
            for i in 0..=n {
                for j in 0..=n - i {
                    let m = Monomial::new(k, i, j);
                    if power_membership_oracle(t, m, n) != ideal.contains(m) {
                        return Check::Fail(format!("x^{k} y^{i} z^{j} in closure of m^{n}"));
                    }
                }
            }
        }
    }
    Check::Pass
}

fn hilbert(t: &BrieskornTriple) -> Check {
    check_result(normal_hilbert_coefficients(t).map(|h| {
        let e1 = t.n_values().iter().sum::<i64>();
        let e2 = t.n_values().iter().map(|&n| binomial(n, 2)).sum::<i64>();
        check(h.e0 == t.a() && h.e1 == e1 && h.e2 == e2, || {
            format!(
                "fitted ({}, {}, {}), expected ({}, {e1}, {e2})",
                h.e0,
                h.e1,
                h.e2,
                t.a()
            )
        })
    }))
}

fn q_recursion(t: &BrieskornTriple) -> Check {
    check_result((|| {
        let pg = geometric_genus(t)?;
        let seq = q_sequence(t, pg)?;
        for n in 1..=seq.br as usize + 1 {
            let lhs = 2 * seq.q_at(n) + seq.v_at(n);
            let rhs = seq.q_at(n + 1) + seq.q_at(n - 1);
            if lhs != rhs {
                return Ok(Check::Fail(format!(
                    "n = {n}: 2q_n + v_n = {lhs}, q_(n+1) + q_(n-1) = {rhs}"
                )));
            }
        }
        let q1 = q_of_m(t)?;
        Ok(check(q1 == seq.q_at(1), || {
            format!("q(m) = {q1}, q_1 = {}", seq.q_at(1))
        }))
    })())
}

fn pg_bound(t: &BrieskornTriple) -> Check {
    check_result(pg_lower_bound_check(t).map(|ok| check(ok, || "p_g < C(nr,2) + q_nr".to_string())))
}

fn laufer_formula(t: &BrieskornTriple) -> Check {
    check_result((|| {
        let r = resolve(t)?;
        if !r.graph.is_negative_definite() {
            return Ok(Check::Fail(
                "intersection form not negative definite".to_string(),
            ));
        }
        for w in 1..=3 {
            let f = r.graph.branch_fraction(w);
            if !f.is_empty() {
                let value = hj_evaluate(f.expansion())?;
                let expected = Rational::new(f.numerator().into(), f.denominator().into());
                if value != expected {
                    return Ok(Check::Fail(format!("branch {w} evaluates to {value}")));
                }
            }
        }
        let Some(formula) = r.pf_formula else {
            return Ok(Check::Pass);
        };
        let neg_z2 = neg_z_squared_formula(t)?;
        Ok(check(formula == r.pf && neg_z2 == -r.z_squared(), || {
            format!(
                "p_f formula {formula} vs graph {}; -Z^2 formula {neg_z2} vs graph {}",
                r.pf,
                -r.z_squared()
            )
        }))
    })())
}

fn elliptic_two_path(t: &BrieskornTriple) -> Check {
    check_result(is_elliptic(t).map(|elliptic| {
        check(!elliptic || normal_reduction_number(t) <= 2, || {
            "elliptic with nr(m) > 2".to_string()
        })
    }))
}

fn boundary_two_path(t: &BrieskornTriple) -> Check {
    check_result(boundary_case(t).map(|_| Check::Pass))
}

fn certificates(t: &BrieskornTriple) -> Check {
    match verify_nr3_certificate(t) {
        Err(Error::OutsideCertificateFamily { .. }) => Check::Skip,
        Err(e) => Check::Fail(e.to_string()),
        Ok(ok) => check(ok, || "certificate does not validate".to_string()),
    }
}

fn rational_definition(t: &BrieskornTriple) -> Check {
    check_result((|| {
        let rational = is_rational(t)?;
        let pf = resolve(t)?.pf;
        Ok(check(!rational || pf == 0, || {
            format!("rational but p_f = {pf}")
        }))
    })())
}

const SUITES: [(&str, Property); 11] = [
    ("nr_staircase", nr_staircase),
    ("colength_drop", colength_drops),
    ("power_membership", power_membership),
    ("hilbert_coefficients", hilbert),
    ("q_recursion", q_recursion),
    ("pg_lower_bound", pg_bound),
    ("laufer_vs_formula", laufer_formula),
    ("rational_pf", rational_definition),
    ("elliptic_two_path", elliptic_two_path),
    ("boundary_two_path", boundary_two_path),
    ("nr3_certificates", certificates),
];

/// Per-suite tally from `verify`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteSummary {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    /// First failing triple in lexicographic order, with a description.
    pub first_failure: Option<(BrieskornTriple, String)>,
}

pub fn verify(max: i64) -> Result<Vec<SuiteSummary>> {
    let triples = triples_in(&(2..=max), &(2..=max), &(2..=max))?;
    Ok(SUITES
        .iter()
        .map(|&(name, property)| {
            let outcomes: Vec<Check> = triples.par_iter().map(property).collect();
            let mut summary = SuiteSummary {
                name,
                checked: 0,
                failed: 0,
                first_failure: None,
            };
            for (t, outcome) in triples.iter().zip(outcomes) {
                match outcome {
                    Check::Skip => {}
                    Check::Pass => summary.checked += 1,
                    Check::Fail(detail) => {
                        summary.checked += 1;
                        summary.failed += 1;
                        summary.first_failure.get_or_insert((t.clone(), detail));
                    }
                }
            }
            summary
        })
        .collect())
}

fn usage_code(e: &Error) -> i32 {
    match e {
        Error::InvalidTriple { .. } | Error::Overflow(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// to `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
                return 0;
            }
            let _ = write!(err, "{text}");
            return 2;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            usage_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

enum Failure {
    Compute(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute(command: Command, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match command {
        Command::Invariants {
            a,
            b,
            c,
            json,
            format,
        } => {
            let r = report(&BrieskornTriple::new(a, b, c)?)?;
            if json || format == ReportFormat::Json {
                out.write_all(canonical_json(&r).as_bytes())?;
            } else {
                out.write_all(render_text(&r).as_bytes())?;
            }
        }
        Command::Graph { a, b, c, json, .. } => {
            let t = BrieskornTriple::new(a, b, c)?;
            let graph = resolve(&t)?.graph;
            if json {
                let mut value = graph.to_json();
                value["triple"] = serde_json::json!([a, b, c]);
                out.write_all(canonical_json(&value).as_bytes())?;
            } else {
                out.write_all(graph.to_dot().as_bytes())?;
            }
        }
        Command::Scan {
            a_range,
            b_range,
            c_range,
            filter,
            format,
        } => {
            let triples = triples_in(&a_range, &b_range, &c_range)?;
            let rows = scan_rows(&triples, filter)?;
            match format {
                TableFormat::Csv => out.write_all(render_csv(&rows).as_bytes())?,
                TableFormat::Json => out.write_all(canonical_json(&rows).as_bytes())?,
            }
        }
        Command::Verify { max } => {
            if max < 2 {
                return Err(Error::InvalidTriple {
                    a: max,
                    b: max,
                    c: max,
                }
                .into());
            }
            let summaries = verify(max)?;
            let mut failed = false;
            for s in &summaries {
                write!(
                    out,
                    "{}: {}/{} passed",
                    s.name,
                    s.checked - s.failed,
                    s.checked
                )?;
                if let Some((t, detail)) = &s.first_failure {
                    failed = true;
                    write!(out, "; first counterexample {t}: {detail}")?;
                }
                writeln!(out)?;
            }
            writeln!(out, "verify: {}", if failed { "FAILED" } else { "ok" })?;
            return Ok(if failed { 1 } else { 0 });
        }
    }
    Ok(0)
}
