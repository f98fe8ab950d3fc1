//! Report builders behind the `catpell` binary. Every command renders to a
//! `String` so the output can be tested without spawning a process.

use std::fmt::Write as _;
use std::str::FromStr;

use catpell_core::classify::{
    classify_all, classify_term, convergence_records, density, first_members, gamma,
    limit_gap_below, strand_runs, ClassifiedTerm,
};
use catpell_core::concat::{concatenate, identity_holds, lemma1_check};
use catpell_core::modscan::{is_power_of_ten, mod8_obstruction, residue_orbit};
use catpell_core::numeric::{integer_sqrt, pow10};
use catpell_core::oracle::{brute_concat_identities, brute_solutions};
use catpell_core::solver::{stream, term_closed_form, SolutionPair};
use catpell_core::{BigInt, BigRational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default ceiling on generated terms; each term adds about 1.58 digits.
pub const DEFAULT_COUNT_CAP: usize = 10_000;

/// Ceiling on `figure --rows`.
pub const MAX_FIGURE_ROWS: usize = 1_000;

pub const DECIMAL_DIGITS: usize = 10;

pub const CSV_HEADER: &str = "n,x,y,in_C,delta_x,delta_y,ratio_num,ratio_den,decimal10";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] catpell_core::Error),
    #[error("malformed record: {0}")]
    Parse(String),
}

impl CliError {
    /// 2 for anything the caller got wrong; verification failures are
    /// reported through [`Report::passed`] instead.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            other => Err(format!(
                "unknown format `{other}` (expected json, csv or table)"
            )),
        }
    }
}

/// Rendered output plus whether every check in it passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub passed: bool,
}

/// One serialized term. Big integers travel as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub n: u64,
    pub x: String,
    pub y: String,
    #[serde(rename = "in_C")]
    pub in_c: bool,
    pub delta_x: u32,
    pub delta_y: u32,
    pub ratio_num: String,
    pub ratio_den: String,
    pub decimal10: String,
}

impl TermRecord {
    pub fn from_classified(c: &ClassifiedTerm) -> Self {
        TermRecord {
            n: c.pair.index,
            x: c.pair.x.to_string(),
            y: c.pair.y.to_string(),
            in_c: c.in_c,
            delta_x: c.delta_x,
            delta_y: c.delta_y,
            ratio_num: c.ratio.numer().to_string(),
            ratio_den: c.ratio.denom().to_string(),
            decimal10: truncated_decimal(&c.ratio),
        }
    }

    /// Rebuilds the solution pair, re-checking that it solves the equation.
    pub fn to_pair(&self) -> Result<SolutionPair> {
        let parse =
            |s: &str| BigInt::from_str(s).map_err(|e| CliError::Parse(format!("`{s}`: {e}")));
        Ok(SolutionPair::new(self.n, parse(&self.x)?, parse(&self.y)?)?)
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.x,
            self.y,
            self.in_c,
            self.delta_x,
            self.delta_y,
            self.ratio_num,
            self.ratio_den,
            self.decimal10
        )
    }

    fn from_csv_row(line: &str) -> Result<Self> {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 9 {
            return Err(CliError::Parse(format!("expected 9 columns in `{line}`")));
        }
        let num = |s: &str| {
            s.parse::<u64>()
                .map_err(|e| CliError::Parse(format!("`{s}`: {e}")))
        };
        let flag = |s: &str| {
            s.parse::<bool>()
                .map_err(|e| CliError::Parse(format!("`{s}`: {e}")))
        };
        Ok(TermRecord {
            n: num(f[0])?,
            x: f[1].to_string(),
            y: f[2].to_string(),
            in_c: flag(f[3])?,
            delta_x: num(f[4])? as u32,
            delta_y: num(f[5])? as u32,
            ratio_num: f[6].to_string(),
            ratio_den: f[7].to_string(),
            decimal10: f[8].to_string(),
        })
    }
}

/// `0.dddddddddd...`: ten truncated digits and a trailing ellipsis.
pub fn truncated_decimal(r: &BigRational) -> String {
    let digits = r
        .decimal_expand(DECIMAL_DIGITS)
        .expect("ratio lies in (0, 1)");
    format!("{digits}...")
}

/// `1/√10` truncated to ten digits: `⌊10¹⁰/√10⌋ = ⌊√10¹⁹⌋`.
pub fn inverse_sqrt10_decimal() -> String {
    let scaled = integer_sqrt(&pow10(2 * DECIMAL_DIGITS as u32 - 1)).expect("non-negative");
    format!("0.{:0>width$}...", scaled, width = DECIMAL_DIGITS)
}

pub fn check_count(count: usize, no_cap: bool) -> Result<()> {
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    if !no_cap && count > DEFAULT_COUNT_CAP {
        return Err(CliError::Usage(format!(
            "--count {count} exceeds the default cap of {DEFAULT_COUNT_CAP}; pass --no-cap to override"
        )));
    }
    Ok(())
}

pub fn records(count: usize) -> Vec<TermRecord> {
    classify_all(&stream(count))
        .iter()
        .map(TermRecord::from_classified)
        .collect()
}

pub fn render_gen(count: usize, format: Format) -> Result<String> {
    let recs = records(count);
    Ok(match format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(&recs).map_err(|e| CliError::Parse(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for r in &recs {
                s.push_str(&r.csv_row());
                s.push('\n');
            }
            s
        }
        Format::Table => render_table(&recs),
    })
}

pub fn parse_json(text: &str) -> Result<Vec<TermRecord>> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn parse_csv(text: &str) -> Result<Vec<TermRecord>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => {
            return Err(CliError::Parse(format!("unexpected CSV header {other:?}")));
        }
    }
    lines
        .filter(|l| !l.is_empty())
        .map(TermRecord::from_csv_row)
        .collect()
}

fn render_table(recs: &[TermRecord]) -> String {
    let header = [
        "n",
        "x",
        "y",
        "in_C",
        "δ(x)",
        "δ(y)",
        "(y+1)/(x+1)",
        "decimal",
    ];
    let rows: Vec<[String; 8]> = recs
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.x.clone(),
                r.y.clone(),
                if r.in_c { "yes" } else { "no" }.to_string(),
                r.delta_x.to_string(),
                r.delta_y.to_string(),
                format!("{}/{}", r.ratio_num, r.ratio_den),
                r.decimal10.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: &[String], out: &mut String| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths.iter())
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(&header.map(String::from), &mut out);
    for row in &rows {
        line(row, &mut out);
    }
    out
}

/// One line of the factorial table for a member of the concatenating subset:
/// `x!·(y+1)!/(y!·(x+1)!) = x∘(y+1) / y∘(x+1) = p/q = 0.dddddddddd...`.
///
/// Factorials are written out, never evaluated.
pub fn figure_row(c: &ClassifiedTerm) -> Result<String> {
    let (x, y) = (&c.pair.x, &c.pair.y);
    let (x1, y1) = (x + 1u32, y + 1u32);
    let num = concatenate(x, &y1)?;
    let den = concatenate(y, &x1)?;
    Ok(format!(
        "{x}!·{y1}!/({y}!·{x1}!) = {num}/{den} = {} = {}",
        c.ratio,
        truncated_decimal(&c.ratio)
    ))
}

pub fn render_figure(rows: usize) -> Result<String> {
    if rows == 0 {
        return Err(CliError::Usage("--rows must be at least 1".into()));
    }
    if rows > MAX_FIGURE_ROWS {
        return Err(CliError::Usage(format!(
            "--rows is capped at {MAX_FIGURE_ROWS}"
        )));
    }
    let mut out = String::new();
    for c in first_members(rows) {
        out.push_str(&figure_row(&c)?);
        out.push('\n');
    }
    let _ = writeln!(out, "1/sqrt(10) = {}", inverse_sqrt10_decimal());
    Ok(out)
}

pub fn verify_term(n: u64) -> Result<Report> {
    if n == 0 || n > DEFAULT_COUNT_CAP as u64 {
        return Err(CliError::Core(catpell_core::Error::Domain(format!(
            "term index {n} is outside 1..={DEFAULT_COUNT_CAP}"
        ))));
    }
    let pair = stream(n as usize).pop().expect("n >= 1");
    let c = classify_term(&pair);
    let (a, b) = (pair.a(), pair.b());
    let two = BigInt::from(2);

    let identity = identity_holds(&pair.x, &pair.y)?;
    let checks: Vec<(&str, bool)> = vec![
        ("x(x+1) = 10y(y+1)", pair.satisfies_equation()),
        ("x > y >= 1", pair.x > pair.y && pair.y >= BigInt::from(1)),
        (
            "a = 2x+1, b = 2y+1 odd with a^2 - 10b^2 = -9",
            &a % &two == BigInt::from(1)
                && &b % &two == BigInt::from(1)
                && &a * &a - 10u32 * &b * &b == BigInt::from(-9),
        ),
        (
            "closed form agrees with recurrence",
            term_closed_form(n)? == pair,
        ),
        ("concatenation identity <=> in_C", identity == c.in_c),
        (
            "digit criterion <=> in_C",
            lemma1_check(&pair.x, &pair.y)? == c.in_c,
        ),
        (
            "x+1 and y+1 are not powers of 10",
            !is_power_of_ten(&(&pair.x + 1u32)) && !is_power_of_ten(&(&pair.y + 1u32)),
        ),
    ];

    let mut text = format!("term n={n}: x={}, y={}, in_C={}\n", pair.x, pair.y, c.in_c);
    for (name, ok) in &checks {
        let _ = writeln!(text, "{} {name}", if *ok { "PASS" } else { "FAIL" });
    }
    Ok(Report {
        passed: checks.iter().all(|(_, ok)| *ok),
        text,
    })
}

pub fn render_period(m: u64) -> Result<String> {
    if m < 2 {
        return Err(CliError::Usage(format!(
            "--modulus must be at least 2, got {m}"
        )));
    }
    let orbit = residue_orbit(m)?;
    let mut out = format!("modulus={m}\nperiod={}\n", orbit.period);
    for (i, (x, y)) in orbit.one_period().iter().enumerate() {
        let _ = writeln!(out, "{:>6}: ({x}, {y})", i + 1);
    }
    if m == 8 {
        let verdict = if mod8_obstruction() {
            "confirmed"
        } else {
            "FAILED"
        };
        let _ = writeln!(out, "mod-8 obstruction: {verdict}");
    }
    Ok(out)
}

/// Brute-force scans compared with the generated sequence.
pub fn oracle_report(max_y: u64, max_x: u64) -> Result<Report> {
    if max_y == 0 || max_x < 2 {
        return Err(CliError::Usage("need --max-y >= 1 and --max-x >= 2".into()));
    }
    let to_pairs = |terms: &[SolutionPair]| -> Vec<(String, String)> {
        terms
            .iter()
            .map(|p| (p.x.to_string(), p.y.to_string()))
            .collect()
    };
    let fmt_pairs = |v: &[(u64, u64)]| -> Vec<(String, String)> {
        v.iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect()
    };

    let brute = brute_solutions(max_y);
    let y_bound = BigInt::from(max_y);
    let generated: Vec<SolutionPair> = catpell_core::Solutions::new()
        .take_while(|p| p.y <= y_bound)
        .collect();
    let sol_ok = fmt_pairs(&brute) == to_pairs(&generated);

    let concat = brute_concat_identities(max_x);
    let x_bound = BigInt::from(max_x);
    let members: Vec<SolutionPair> = catpell_core::Solutions::new()
        .take_while(|p| p.x <= x_bound)
        .filter(|p| classify_term(p).in_c)
        .collect();
    let concat_ok = fmt_pairs(&concat) == to_pairs(&members);

    let mut text = String::new();
    let _ = writeln!(
        text,
        "brute-force solutions with y <= {max_y}: {}",
        brute.len()
    );
    for (x, y) in &brute {
        let _ = writeln!(text, "  ({x}, {y})");
    }
    let _ = writeln!(
        text,
        "{} agreement with generated sequence",
        if sol_ok { "PASS" } else { "FAIL" }
    );
    let _ = writeln!(
        text,
        "brute-force concatenation identities with x <= {max_x}: {}",
        concat.len()
    );
    for (x, y) in &concat {
        let _ = writeln!(text, "  ({x}, {y})");
    }
    let _ = writeln!(
        text,
        "{} agreement with classified members",
        if concat_ok { "PASS" } else { "FAIL" }
    );
    Ok(Report {
        text,
        passed: sol_ok && concat_ok,
    })
}

/// Summary of the classification over the first `count` terms.
pub fn classify_summary(count: usize) -> Result<Report> {
    if count < 2 {
        return Err(CliError::Usage("classify needs --count >= 2".into()));
    }
    let terms = stream(count);
    let classified = classify_all(&terms);
    let (members, total) = density(&classified);
    let runs = strand_runs(&classified);
    let records = convergence_records(&terms);
    let gammas_ok = (1..count).all(|n| {
        gamma(n, &terms)
            .map(|g| g > BigInt::from(0))
            .unwrap_or(false)
    });
    let decreasing = records
        .iter()
        .all(|r| r.ratio_step == std::cmp::Ordering::Less);
    let above = records.iter().all(|r| r.above_limit);
    let runs_ok = runs.iter().all(|r| r.max_run() <= 2);
    let last = terms.last().expect("count >= 2");

    let mut text = String::new();
    let _ = writeln!(text, "terms examined: {total}");
    let _ = writeln!(
        text,
        "concatenating members: {members} ({:.4} of examined)",
        members as f64 / total as f64
    );
    for r in &runs {
        let _ = writeln!(
            text,
            "strand {}: longest run outside the subset = {}",
            r.strand,
            r.max_run()
        );
    }
    let flag = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(
        text,
        "{} no strand has three consecutive non-members",
        flag(runs_ok)
    );
    let _ = writeln!(
        text,
        "{} y/x strictly increasing (gamma > 0)",
        flag(gammas_ok)
    );
    let _ = writeln!(text, "{} (y+1)/(x+1) strictly decreasing", flag(decreasing));
    let _ = writeln!(text, "{} (y+1)/(x+1) > 1/sqrt(10) throughout", flag(above));
    let _ = writeln!(
        text,
        "last ratio ({} digits in x+1): {} (limit 1/sqrt(10) = {}); |10(y+1)^2/(x+1)^2 - 1| < 1e-6: {}",
        last.x.to_string().len(),
        truncated_decimal(&BigRational::new(&last.y + 1u32, &last.x + 1u32)?),
        inverse_sqrt10_decimal(),
        limit_gap_below(last, 6)
    );
    Ok(Report {
        text,
        passed: runs_ok && gammas_ok && decreasing && above,
    })
}
