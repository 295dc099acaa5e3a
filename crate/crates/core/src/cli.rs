//! Command-line front end. [`run`] takes the full argument list and returns
//! the exit code and rendered output, so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::degeneration::verify_example3;
use crate::error::Error;
use crate::lattice::point_of_tableau;
use crate::section::{dim_sections, hilbert_table, straighten, verify_basis};
use crate::tableau::{enumerate_row_standard, enumerate_straight, Tableau, TableauDoc};
use crate::word::{build_shape, parse_list, Shape, Word};

pub const SEED_ENV: &str = "BSLAB_SEED";

#[derive(Debug, Parser)]
#[command(name = "bslab", version, about = "Tableaux, section rings and toric degenerations of Bott-Samelson varieties")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Matrix size.
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,

    /// Multiplicities, comma separated, one per letter (default all ones).
    #[arg(long, global = true)]
    m: Option<String>,

    /// Comma-separated word overriding the canonical one.
    #[arg(long, global = true)]
    word: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    format: Format,

    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Seed for the random evaluation precheck (falls back to BSLAB_SEED, then 0).
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Column sets of the word.
    ColumnSets,
    /// List the tableaux of the shape.
    Enumerate {
        #[arg(long, conflicts_with = "row_standard")]
        straight: bool,
        #[arg(long)]
        row_standard: bool,
    },
    /// Dimension of the section space.
    Dim,
    /// Dimensions of the multiples of the shape and the Hilbert polynomial.
    Hilbert {
        #[arg(long, default_value_t = 5)]
        dmax: u32,
    },
    /// Write a tableau in the straight basis. Takes JSON inline or `@file`.
    Straighten {
        #[arg(long)]
        tableau: String,
    },
    /// Gelfand-Tsetlin patterns of the straight tableaux.
    Points,
    /// Check every count of the three-dimensional example.
    VerifyExample3 {
        #[arg(long, default_value_t = 4)]
        dmax: u32,
    },
    /// Exact basis verification for the shape.
    BasisReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Verification { report: String, detail: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BasisFailure(_) | Error::NonPolynomialGrowth { .. } | Error::NotRationalOfClaimedForm { .. } => {
                Failure::Verification {
                    report: String::new(),
                    detail: json!({ "error": e.to_string() }).to_string(),
                }
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<String, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let (code, body, stderr) = match dispatch(&cli) {
        Ok(body) => (0, body, String::new()),
        Err(Failure::Usage(msg)) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Verification { report, detail }) => (1, report, format!("{detail}\n")),
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr },
            Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) },
        },
        None => Outcome { code, stdout: body, stderr },
    }
}

fn seed(cli: &Cli) -> std::result::Result<u64, Failure> {
    if let Some(s) = cli.seed {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{SEED_ENV} is not an integer: {v:?}"))),
        Err(_) => Ok(0),
    }
}

fn word(cli: &Cli) -> std::result::Result<Word, Failure> {
    Ok(match &cli.word {
        Some(w) => Word::new(cli.n, parse_list(w)?.into_iter().map(|x| x as usize).collect())?,
        None => Word::longest(cli.n)?,
    })
}

fn shape(cli: &Cli) -> std::result::Result<Shape, Failure> {
    let word = word(cli)?;
    let m = match &cli.m {
        Some(m) => parse_list(m)?,
        None => vec![1; word.len()],
    };
    Ok(build_shape(word, m)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::ColumnSets => column_sets_cmd(cli),
        Command::Enumerate { row_standard, .. } => enumerate_cmd(cli, *row_standard),
        Command::Dim => dim_cmd(cli),
        Command::Hilbert { dmax } => hilbert_cmd(cli, *dmax),
        Command::Straighten { tableau } => straighten_cmd(cli, tableau),
        Command::Points => points_cmd(cli),
        Command::VerifyExample3 { dmax } => example3_cmd(cli, *dmax),
        Command::BasisReport => basis_cmd(cli),
    }
}

fn column_sets_cmd(cli: &Cli) -> CmdResult {
    let word = word(cli)?;
    let sets = word.column_sets();
    Ok(match cli.format {
        Format::Ascii => sets.to_string(),
        Format::Json => to_json(&json!({
            "n": word.n(),
            "word": word.letters(),
            "sets": sets.sets,
        })),
    })
}

fn enumerate_cmd(cli: &Cli, row_standard: bool) -> CmdResult {
    let shape = shape(cli)?;
    let (kind, list) = if row_standard {
        ("row-standard", enumerate_row_standard(&shape))
    } else {
        ("straight", enumerate_straight(&shape))
    };
    Ok(match cli.format {
        Format::Ascii => {
            let mut out = format!("# {} {kind} tableaux\n", list.len());
            for t in &list {
                out.push('\n');
                out.push_str(&t.render());
            }
            out
        }
        Format::Json => to_json(&json!({
            "n": shape.n(),
            "m": shape.multiplicity(),
            "kind": kind,
            "count": list.len(),
            "tableaux": list.iter().map(|t| t.to_doc(None)).collect::<Vec<_>>(),
        })),
    })
}

fn dim_cmd(cli: &Cli) -> CmdResult {
    let shape = shape(cli)?;
    let dim = dim_sections(&shape);
    Ok(match cli.format {
        Format::Ascii => format!("{dim}\n"),
        Format::Json => to_json(&json!({ "n": shape.n(), "m": shape.multiplicity(), "dimension": dim })),
    })
}

fn hilbert_cmd(cli: &Cli, dmax: u32) -> CmdResult {
    let shape = shape(cli)?;
    let table = hilbert_table(&shape, dmax)?;
    Ok(match cli.format {
        Format::Ascii => {
            let mut out = String::from("d\tdim\n");
            for (d, v) in table.entries.iter().enumerate() {
                let _ = writeln!(out, "{d}\t{v}");
            }
            match &table.interpolated {
                Some(p) => {
                    let _ = writeln!(out, "HP(d) = {}", p.to_fraction_string());
                }
                None => {
                    let _ = writeln!(out, "HP(d) needs dmax >= {}", shape.word().len() + 1);
                }
            }
            out
        }
        Format::Json => to_json(&table),
    })
}

fn read_tableau_arg(arg: &str) -> std::result::Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn straighten_cmd(cli: &Cli, arg: &str) -> CmdResult {
    let doc = TableauDoc::parse(&read_tableau_arg(arg)?)?;
    let (t, referenced) = doc.resolve()?;
    let shape = match referenced {
        Some(s) => s,
        None => {
            if cli.word.is_some() || cli.m.is_none() {
                return Err(Failure::Usage("give the multiplicity as \"m\" in the tableau or with --m".into()));
            }
            let s = Shape::canonical(t.n(), parse_list(cli.m.as_deref().unwrap_or_default())?)?;
            if !t.fits(&s) {
                return Err(Failure::Usage("tableau does not fit the shape given by --m".into()));
            }
            s
        }
    };
    let result = straighten(&t, &shape)?;
    let body = match cli.format {
        Format::Ascii => {
            let mut out = format!("input:\n{}", t.render());
            for (k, (s, c)) in result.terms.iter().enumerate() {
                let _ = write!(out, "{} {c} *\n{}", if k == 0 { "=" } else { "+" }, s.render());
            }
            let _ = writeln!(out, "verified: {}", result.verified);
            out
        }
        Format::Json => to_json(&json!({
            "input": t.to_doc(Some(shape.multiplicity())),
            "terms": result.terms.iter().map(|(s, c)| json!({
                "coeff": c.to_string(),
                "tableau": s.to_doc(None),
            })).collect::<Vec<_>>(),
            "verified": result.verified,
        })),
    };
    if result.verified {
        Ok(body)
    } else {
        Err(Failure::Verification {
            report: body,
            detail: json!({ "error": "straightening does not re-expand to the input" }).to_string(),
        })
    }
}

fn points_cmd(cli: &Cli) -> CmdResult {
    let shape = shape(cli)?;
    let list: Vec<Tableau> = enumerate_straight(&shape);
    let points: Vec<_> = list.iter().map(point_of_tableau).collect();
    let distinct = points.iter().collect::<std::collections::HashSet<_>>().len();
    let patterns: Vec<_> = points.iter().map(|p| p.pattern()).collect();
    Ok(match cli.format {
        Format::Ascii => {
            let mut out = format!("# {} straight tableaux, {distinct} distinct points\n", list.len());
            for (t, p) in list.iter().zip(&patterns) {
                let _ = write!(out, "\n{}--\n{}", t.render(), p.render());
            }
            out
        }
        Format::Json => to_json(&json!({
            "n": shape.n(),
            "m": shape.multiplicity(),
            "distinct": distinct,
            "points": list.iter().zip(&patterns).map(|(t, p)| json!({
                "tableau": t.to_doc(None),
                "pattern": p,
            })).collect::<Vec<_>>(),
        })),
    })
}

fn example3_cmd(cli: &Cli, dmax: u32) -> CmdResult {
    let report = verify_example3(dmax)?;
    let body = match cli.format {
        Format::Ascii => {
            let mut out = String::new();
            for c in &report.checks {
                let degree = c.degree.map(|d| format!(" d={d}")).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{} {}{degree}: expected {}, computed {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.expected,
                    c.computed
                );
            }
            let failed = report.failures().len();
            let _ = writeln!(out, "{} of {} checks passed", report.checks.len() - failed, report.checks.len());
            out
        }
        Format::Json => to_json(&report),
    };
    if report.pass {
        Ok(body)
    } else {
        Err(Failure::Verification {
            report: body,
            detail: serde_json::to_string(&report.failures()).expect("checks serialize"),
        })
    }
}

fn basis_cmd(cli: &Cli) -> CmdResult {
    let shape = shape(cli)?;
    let report = verify_basis(&shape, Some(seed(cli)?));
    let body = match cli.format {
        Format::Ascii => {
            let m: Vec<String> = report.multiplicity.iter().map(|x| x.to_string()).collect();
            let mut out = format!("shape n={} m={}\n", report.n, m.join(","));
            let _ = writeln!(out, "straight tableaux: {}", report.straight_count);
            let _ = writeln!(out, "symbolic rank: {}", report.symbolic_rank);
            let _ = writeln!(out, "distinct leading exponents: {}", report.distinct_leading);
            let _ = writeln!(out, "row-standard tableaux: {}", report.row_standard_count);
            let _ = writeln!(out, "span verified: {}", report.span_verified);
            if let Some(p) = &report.precheck {
                let _ = writeln!(
                    out,
                    "precheck (seed {}): rank {} at {} points{}",
                    p.seed,
                    p.rank,
                    p.points,
                    if p.independent { ", independent" } else { "" }
                );
            }
            out
        }
        Format::Json => to_json(&report),
    };
    if report.is_basis() {
        Ok(body)
    } else {
        Err(Failure::Verification {
            report: body,
            detail: serde_json::to_string(&report.witness_failures).expect("tableaux serialize"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        run(std::iter::once("bslab").chain(args.iter().copied()))
    }

    #[test]
    fn column_sets_of_rank_four() {
        let out = call(&["column-sets", "--n", "4"]);
        assert_eq!(out.code, 0);
        assert_eq!(
            out.stdout,
            "C^(1) = {2}\nC^(2) = {2,3}\nC^(3) = {3}\nC^(4) = {2,3,4}\nC^(5) = {3,4}\nC^(6) = {4}\n"
        );
    }

    #[test]
    fn dim_and_hilbert() {
        assert_eq!(call(&["dim", "--n", "3", "--m", "1,1,1"]).stdout, "13\n");
        let out = call(&["hilbert", "--n", "3", "--m", "1,1,1", "--dmax", "5"]);
        assert_eq!(
            out.stdout,
            "d\tdim\n0\t1\n1\t13\n2\t51\n3\t130\n4\t265\n5\t471\nHP(d) = (5*d^3 + 11*d^2 + 8*d + 2)/2\n"
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["dim", "--bogus"]).code, 2);
        assert_eq!(call(&["dim", "--m", "1,1"]).code, 2);
        assert_eq!(call(&["straighten", "--tableau", "{not json"]).code, 2);
        assert_eq!(call(&["enumerate", "--straight", "--row-standard"]).code, 2);
        assert_eq!(call(&["--help"]).code, 0);
        assert_eq!(call(&["dim", "--word", "1,3", "--n", "4"]).code, 2);
        assert_eq!(call(&["column-sets", "--word", "1,3", "--n", "4"]).stdout, "C^(1) = {2}\nC^(2) = {1,2,4}\n");
    }

    #[test]
    fn straighten_inline() {
        let t = r#"{"n":3,"m":[1,1,0],"rows":[[{"column":2,"entry":2},{"column":3,"entry":3}],[{"column":2,"entry":1}]]}"#;
        let out = call(&["straighten", "--tableau", t]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "input:\n 23\n 1 \n= 1 *\n 13\n 2 \nverified: true\n");
    }
}
