use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use lcdkit::code::LcdType;
use lcdkit::normalform::{self, LcdBasis};
use lcdkit::oracle::{self, CensusReport, CENSUS_VERSION, DEFAULT_ENUMERATION_BUDGET};
use lcdkit::{counting, Error, Field, LinearCode, Matrix};

#[derive(Parser)]
#[command(
    name = "lcdkit",
    version,
    about = "Exact tools for linear complementary dual codes"
)]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Enumeration budget, e.g. 33554432 or 2^25.
    #[arg(long, global = true, env = "LCDKIT_BUDGET", value_parser = parse_budget)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArg {
    /// Prime field size.
    #[arg(long, default_value_t = 2)]
    field: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a code is LCD and report its type.
    Check {
        #[command(flatten)]
        field: FieldArg,
        /// Generator matrix, rows separated by ';'.
        #[arg(long)]
        gen: String,
    },
    /// Orthonormal, symplectic or diag[1, .., 1, delta] basis of an LCD code.
    Basis {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        gen: String,
    },
    /// Congruence normal form of a symmetric matrix.
    Normalize {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        sym: String,
    },
    /// Binary [n, k-1] LCD code with minimum distance at least that of the input.
    Shorten {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        gen: String,
        #[arg(long, default_value_t = 0)]
        coord: usize,
    },
    /// Exact number of [n, k] LCD codes, optionally of one type.
    Count {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long = "type", value_parser = parse_type)]
        ty: Option<LcdType>,
    },
    /// Exhaustive census of all codes of length n.
    Enumerate {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        n: usize,
        /// Output file; `.csv` selects CSV, anything else JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory of cached census reports.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Table of the largest minimum distance of LCD codes.
    Dmax {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        nmax: usize,
    },
    /// Orthogonal matrix mapping one LCD code onto another of the same type.
    Transporter {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        gen1: String,
        #[arg(long)]
        gen2: String,
    },
    /// Canonical generator and parity-check matrices of an LCD orbit.
    Canonical {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long = "type", value_parser = parse_type)]
        ty: LcdType,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

fn parse_type(s: &str) -> Result<LcdType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_budget(s: &str) -> Result<u64, String> {
    oracle::parse_budget(s).map_err(|e| e.to_string())
}

/// Output of one command: plain text and the equivalent JSON document.
struct Output {
    text: String,
    json: Value,
}

fn field(arg: &FieldArg) -> lcdkit::Result<Field> {
    Field::new(arg.field)
}

fn code(f: Field, text: &str) -> lcdkit::Result<LinearCode> {
    LinearCode::parse(f, text)
}

fn basis_json(b: &LcdBasis) -> Value {
    json!({
        "kind": b.kind.to_string(),
        "delta": b.delta.map(|d| d.value()),
        "rows": b.rows.to_text(),
    })
}

fn run(cli: &Cli) -> lcdkit::Result<Output> {
    let budget = cli.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET);
    match &cli.command {
        Command::Check { field: fa, gen } => {
            let c = code(field(fa)?, gen)?;
            let (n, k) = (c.n(), c.k());
            let lcd = c.is_lcd();
            let ty = if lcd && k > 0 && k < n {
                Some(c.classify()?)
            } else {
                None
            };
            let text = match (lcd, ty) {
                (true, Some(t)) => format!("LCD: yes, type {t}"),
                (true, None) => format!("LCD: yes, trivial code (k = {k}, n = {n}) has no type"),
                (false, _) => format!("LCD: no, hull dimension {}", c.hull_dimension()),
            };
            Ok(Output {
                text,
                json: json!({
                    "n": n,
                    "k": k,
                    "lcd": lcd,
                    "type": ty.map(|t| t.to_string()),
                    "hull_dimension": c.hull_dimension(),
                }),
            })
        }
        Command::Basis { field: fa, gen } => {
            let b = normalform::lcd_basis(&code(field(fa)?, gen)?)?;
            let mut text = format!("kind: {}\n", b.kind);
            if let Some(d) = b.delta {
                text += &format!("delta: {d}\n");
            }
            text += &format!("rows: {}", b.rows.to_text());
            Ok(Output {
                text,
                json: basis_json(&b),
            })
        }
        Command::Normalize { field: fa, sym } => {
            let m = Matrix::parse(field(fa)?, sym)?;
            let r = normalform::congruence_normalize(&m)?;
            let mut text = format!("shape: {}\nrank: {}\n", r.shape, r.rank);
            if let Some(d) = r.delta {
                text += &format!("delta: {d}\n");
            }
            text += &format!(
                "Q: {}\nnormal: {}",
                r.q_transform.to_text(),
                r.normal.to_text()
            );
            Ok(Output {
                text,
                json: json!({
                    "shape": r.shape.to_string(),
                    "rank": r.rank,
                    "delta": r.delta.map(|d| d.value()),
                    "q": r.q_transform.to_text(),
                    "normal": r.normal.to_text(),
                }),
            })
        }
        Command::Shorten {
            field: fa,
            gen,
            coord,
        } => {
            let c = code(field(fa)?, gen)?;
            let s = normalform::shorten_lcd(&c, *coord)?;
            Ok(Output {
                text: s.generator().to_text(),
                json: json!({ "n": s.n(), "k": s.k(), "coord": coord, "gen": s.generator().to_text() }),
            })
        }
        Command::Count {
            field: fa,
            n,
            k,
            ty,
        } => {
            let count = counting::count_lcd(field(fa)?, *n, *k, *ty)?;
            Ok(Output {
                text: count.to_string(),
                json: json!({
                    "p": fa.field,
                    "n": n,
                    "k": k,
                    "type": ty.map(|t| t.to_string()),
                    "count": count.to_string(),
                }),
            })
        }
        Command::Enumerate {
            field: fa,
            n,
            out,
            cache,
        } => {
            let f = field(fa)?;
            let report = match cache {
                Some(dir) => cached_census(dir, f, *n, budget)?,
                None => oracle::census_with_budget(*n, f, budget)?,
            };
            let json_doc: Value =
                serde_json::from_str(&report.to_json()).expect("census JSON is valid");
            let text = match out {
                Some(path) => {
                    let body = if is_csv(path) {
                        report.to_csv()
                    } else {
                        report.to_json() + "\n"
                    };
                    fs::write(path, body).map_err(|e| io_error(path, e))?;
                    format!("wrote {}", path.display())
                }
                None => report.to_csv().trim_end().to_string(),
            };
            Ok(Output {
                text,
                json: json_doc,
            })
        }
        Command::Dmax { field: fa, nmax } => {
            let table = oracle::dlcd_table_with_budget(*nmax, field(fa)?, budget)?;
            let mut text = String::from("n\tk\td_lcd\tmonotone");
            for e in &table.entries {
                let d = e.d_lcd.map_or("-".to_string(), |d| d.to_string());
                text += &format!("\n{}\t{}\t{d}\t{}", e.n, e.k, e.monotone);
            }
            Ok(Output {
                text,
                json: serde_json::to_value(&table).expect("table serializes"),
            })
        }
        Command::Transporter {
            field: fa,
            gen1,
            gen2,
        } => {
            let f = field(fa)?;
            let q = normalform::transporter(&code(f, gen1)?, &code(f, gen2)?)?;
            Ok(Output {
                text: q.to_text(),
                json: json!({ "q": q.to_text() }),
            })
        }
        Command::Canonical {
            field: fa,
            ty,
            n,
            k,
        } => {
            let (g, h) = normalform::canonical_code(*ty, *n, *k, field(fa)?)?;
            Ok(Output {
                text: format!("G: {}\nH: {}", g.to_text(), h.to_text()),
                json: json!({ "type": ty.to_string(), "n": n, "k": k, "gen": g.to_text(), "parity": h.to_text() }),
            })
        }
    }
}

fn is_csv(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("{}: {e}", path.display()))
}

fn cache_key(f: Field, n: usize) -> String {
    let digest = Sha256::digest(format!("lcdkit-census/v{CENSUS_VERSION}/p={}/n={n}", f.p()));
    hex::encode(digest)
}

/// Reuses `DIR/census-<key>.json` when it holds a report for the same
/// `(p, n, version)`; otherwise computes and stores one.
fn cached_census(dir: &Path, f: Field, n: usize, budget: u64) -> lcdkit::Result<CensusReport> {
    let path = dir.join(format!("census-{}.json", cache_key(f, n)));
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(r) = CensusReport::from_json(&text) {
            if r.version == CENSUS_VERSION && r.p == f.p() && r.n == n {
                return Ok(r);
            }
        }
    }
    let report = oracle::census_with_budget(n, f, budget)?;
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    fs::write(&path, report.to_json() + "\n").map_err(|e| io_error(&path, e))?;
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("valid JSON")
                );
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
