//! The `partition-lab` command line.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 for usage
//! and input errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cache::FrequencyCache;
use crate::error::Error;
use crate::identity::{image_gaps, verify_range, VerificationReport};
use crate::matrix::{matrix_to_partition, partition_to_matrix, TwoLineMatrix};
use crate::partition::{enumerate_partitions, Partition};
use crate::path::{hooks, matrix_to_path, weight_p};
use crate::squared::{all_solutions, tsquared_from_matrix};

pub const CACHE_ENV: &str = "PARTITION_LAB_CACHE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "partition-lab",
    version,
    about = "Partitions, two-line matrices, path hooks and t-squared partitions"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Frequency cache file (overridden by PARTITION_LAB_CACHE).
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    /// Worker threads for `verify` and `table` (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Number of cached entries recomputed when the cache is loaded.
    #[arg(long = "seed-check", global = true, default_value_t = 8)]
    pub seed_check: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the partitions of n with their matrices.
    Partitions { n: u64 },
    /// Encode a partition, e.g. `6,5,2,2` or `6 5 2 2`, as a two-line matrix.
    Matrix {
        #[arg(required = true, num_args = 1..)]
        partition: Vec<String>,
    },
    /// Decode a matrix (JSON `{"top":[..],"bottom":[..]}`) into its partition.
    Demat { matrix: Option<String> },
    /// Lattice path of a matrix.
    Path {
        matrix: Option<String>,
        /// Drop repeated points left by zero-length moves.
        #[arg(long)]
        reduced: bool,
    },
    /// Hooks (distinct odd parts) of a matrix.
    Hooks { matrix: Option<String> },
    /// Path weight P(M) of a matrix.
    Weight { matrix: Option<String> },
    /// t-squared partition of a matrix with d_1 = 0.
    Tsq { matrix: Option<String> },
    /// Frequency f(m) and its solution tuples.
    Freq { m: u64 },
    /// Values up to a limit that are not path weights.
    Gaps { limit: u64 },
    /// Frequency table for m = 1..=m_max.
    Table {
        m_max: u64,
        /// Write the table as CSV to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check p(n) = sum_m |B(m, n)| + 1 for n = 1..=N.
    Verify {
        #[arg(long, default_value_t = 10)]
        to: u64,
        /// Include the m -> |B(m, n)| breakdown.
        #[arg(long = "per-m")]
        per_m: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    match dispatch(&cli, &pool, stdin, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(
    cli: &Cli,
    pool: &rayon::ThreadPool,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let fmt = cli.format;
    let text = match &cli.command {
        Command::Partitions { n } => partitions(*n, fmt)?,
        Command::Matrix { partition } => {
            let p = parse_partition(partition)?;
            let m = partition_to_matrix(&p)?;
            match fmt {
                Format::Json => json_line(&m)?,
                Format::Csv => format!(
                    "row,{}\ntop,{}\nbottom,{}\n",
                    (1..=m.columns()).map(|j| format!("col{j}")).collect::<Vec<_>>().join(","),
                    join(m.top(), ","),
                    join(m.bottom(), ",")
                ),
                Format::Text => format!("{p}\n{m}\n"),
            }
        }
        Command::Demat { matrix } => {
            let m = read_matrix(matrix.as_deref(), stdin)?;
            let p = matrix_to_partition(&m);
            match fmt {
                Format::Json => json_line(&p)?,
                Format::Csv => format!("weight,parts\n{},{}\n", p.weight(), join(p.parts(), " ")),
                Format::Text => format!("{p}\n"),
            }
        }
        Command::Path { matrix, reduced } => {
            let m = read_matrix(matrix.as_deref(), stdin)?;
            let path = matrix_to_path(&m);
            let points = if *reduced { path.reduced() } else { path.points.clone() };
            match fmt {
                Format::Json => {
                    let pts: Vec<[u64; 2]> = points.iter().map(|&(x, y)| [x, y]).collect();
                    json_line(&json!({ "points": pts }))?
                }
                Format::Csv => {
                    let mut s = String::from("x,y\n");
                    for (x, y) in &points {
                        let _ = writeln!(s, "{x},{y}");
                    }
                    s
                }
                Format::Text => {
                    let pts: Vec<String> = points.iter().map(|(x, y)| format!("({x},{y})")).collect();
                    format!("{}\n", pts.join(" -> "))
                }
            }
        }
        Command::Hooks { matrix } => {
            let m = read_matrix(matrix.as_deref(), stdin)?;
            let h = hooks(&m)?;
            let weight = h.m()?;
            match fmt {
                Format::Json => json_line(&h)?,
                Format::Csv => format!("m,parts\n{weight},{}\n", join(h.parts(), " ")),
                Format::Text => table_two_row(&m, &format!("{h}  m = {weight}")),
            }
        }
        Command::Weight { matrix } => {
            let m = read_matrix(matrix.as_deref(), stdin)?;
            let w = weight_p(&m)?;
            match fmt {
                Format::Json => json_line(&json!({ "m": w }))?,
                Format::Csv => format!("m\n{w}\n"),
                Format::Text => format!("{w}\n"),
            }
        }
        Command::Tsq { matrix } => {
            let m = read_matrix(matrix.as_deref(), stdin)?;
            let sp = tsquared_from_matrix(&m)?;
            let weight = sp.m()?;
            match fmt {
                Format::Json => json_line(&json!({
                    "components": sp.components(),
                    "t": sp.t(),
                    "a": sp.a(),
                    "b": sp.b(),
                    "m": weight,
                }))?,
                Format::Csv => format!(
                    "m,a,b,t,components\n{weight},{},{},{},{}\n",
                    sp.a(),
                    sp.b(),
                    sp.t(),
                    join(sp.components(), " ")
                ),
                Format::Text => format!("{sp}\n"),
            }
        }
        Command::Freq { m } => {
            require_positive("m", *m)?;
            let sets = all_solutions(*m);
            let f: u64 = sets.iter().map(|s| s.len() as u64).sum();
            let mut cache = open_cache(cli, err)?;
            if cache.frequency(*m) != f {
                writeln!(err, "warning: cached f({m}) disagrees with recomputation")?;
            }
            save_cache(&mut cache, err)?;
            match fmt {
                Format::Json => json_line(&json!({
                    "m": m,
                    "frequency": f,
                    "residue_mod_4": m % 4,
                    "solutions": sets,
                }))?,
                Format::Csv => {
                    let mut s = String::from("a,b,solution\n");
                    for set in &sets {
                        for t in &set.solutions {
                            let _ = writeln!(s, "{},{},{}", set.a, set.b, join(t, " "));
                        }
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!("f({m}) = {f}\n");
                    for set in &sets {
                        for t in &set.solutions {
                            let _ = writeln!(s, "  a = {}, b = {}: ({})", set.a, set.b, join(t, ","));
                        }
                    }
                    s
                }
            }
        }
        Command::Gaps { limit } => {
            require_positive("limit", *limit)?;
            let gaps: Vec<u64> = if cache_path(cli).is_none() {
                image_gaps(*limit)
            } else {
                let mut cache = open_cache(cli, err)?;
                let table = pool.install(|| cache.frequencies(*limit));
                save_cache(&mut cache, err)?;
                table.into_iter().filter(|&(_, f)| f == 0).map(|(m, _)| m).collect()
            };
            match fmt {
                Format::Json => json_line(&json!({ "limit": limit, "gaps": gaps }))?,
                Format::Csv => {
                    let mut s = String::from("m\n");
                    for g in &gaps {
                        let _ = writeln!(s, "{g}");
                    }
                    s
                }
                Format::Text => format!("{}\n", join(&gaps, " ")),
            }
        }
        Command::Table { m_max, out: out_path } => {
            require_positive("m_max", *m_max)?;
            let mut cache = open_cache(cli, err)?;
            let table = pool.install(|| cache.frequencies(*m_max));
            save_cache(&mut cache, err)?;
            let csv = {
                let mut s = String::from("m,frequency,residue_mod_4\n");
                for (m, f) in &table {
                    let _ = writeln!(s, "{m},{f},{}", m % 4);
                }
                s
            };
            if let Some(path) = out_path {
                fs::write(path, &csv)?;
                writeln!(err, "wrote {} rows to {}", table.len(), path.display())?;
                String::new()
            } else {
                match fmt {
                    Format::Csv => csv,
                    Format::Json => {
                        let rows: Vec<Value> = table
                            .iter()
                            .map(|(m, f)| json!({ "m": m, "frequency": f, "residue_mod_4": m % 4 }))
                            .collect();
                        json_line(&rows)?
                    }
                    Format::Text => {
                        let mut s = format!("{:>8} {:>10} {:>6}\n", "m", "f(m)", "m%4");
                        for (m, f) in &table {
                            let _ = writeln!(s, "{m:>8} {f:>10} {:>6}", m % 4);
                        }
                        s
                    }
                }
            }
        }
        Command::Verify { to, per_m } => {
            require_positive("--to", *to)?;
            let reports = pool.install(|| verify_range(*to))?;
            let mismatches: Vec<&VerificationReport> = reports.iter().filter(|r| !r.matched).collect();
            for r in &mismatches {
                writeln!(
                    err,
                    "mismatch at n = {}: p_oracle = {}, p_theorem = {}, per_m = {}",
                    r.n,
                    r.p_oracle,
                    r.p_theorem,
                    per_m_text(r)
                )?;
            }
            let shown: Vec<VerificationReport> = reports
                .iter()
                .cloned()
                .map(|r| if *per_m { r } else { r.without_per_m() })
                .collect();
            let text = match fmt {
                Format::Json => json_line(&shown)?,
                Format::Csv => {
                    let mut s = String::from("n,p_oracle,p_theorem,match\n");
                    for r in &shown {
                        let _ = writeln!(s, "{},{},{},{}", r.n, r.p_oracle, r.p_theorem, r.matched);
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for r in &shown {
                        let _ = write!(
                            s,
                            "n = {:>3}  p(n) = {:>12}  theorem = {:>12}  {}",
                            r.n,
                            r.p_oracle,
                            r.p_theorem,
                            if r.matched { "ok" } else { "MISMATCH" }
                        );
                        if r.per_m.is_some() {
                            let _ = write!(s, "  [{}]", per_m_text(r));
                        }
                        s.push('\n');
                    }
                    s
                }
            };
            out.write_all(text.as_bytes())?;
            return Ok(if mismatches.is_empty() { EXIT_OK } else { EXIT_MISMATCH });
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn partitions(n: u64, fmt: Format) -> Result<String, Failure> {
    let list = enumerate_partitions(n);
    Ok(match fmt {
        Format::Json => {
            let parts: Vec<&[u64]> = list.iter().map(Partition::parts).collect();
            json_line(&json!({ "n": n, "count": list.len(), "partitions": parts }))?
        }
        Format::Csv => {
            let mut s = String::from("index,parts\n");
            for (i, p) in list.iter().enumerate() {
                let _ = writeln!(s, "{},{}", i + 1, join(p.parts(), " "));
            }
            s
        }
        Format::Text => {
            let mut s = format!("p({n}) = {}\n", list.len());
            for p in &list {
                match partition_to_matrix(p) {
                    Ok(m) => s.push_str(&table_two_row(&m, &p.to_string())),
                    Err(_) => {
                        let _ = writeln!(s, "{p}");
                    }
                }
            }
            s
        }
    })
}

/// A label followed by the two matrix rows, aligned like a printed table.
fn table_two_row(m: &TwoLineMatrix, label: &str) -> String {
    let shown = m.to_string();
    let mut rows = shown.lines();
    let width = label.chars().count().max(12);
    format!(
        "{label:<width$}  {}\n{:<width$}  {}\n",
        rows.next().unwrap_or_default(),
        "",
        rows.next().unwrap_or_default()
    )
}

fn per_m_text(r: &VerificationReport) -> String {
    r.per_m
        .as_ref()
        .map(|map| {
            map.iter()
                .map(|(m, c)| format!("{m}:{c}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default()
}

fn join(values: &[u64], sep: &str) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(sep)
}

fn json_line<T: serde::Serialize + ?Sized>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

fn require_positive(name: &str, value: u64) -> Result<(), Failure> {
    if value == 0 {
        return Err(Failure::Usage(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn parse_partition(args: &[String]) -> Result<Partition, Failure> {
    let joined = args.join(" ");
    let parts = joined
        .trim_matches(|c: char| c == '(' || c == ')' || c == '[' || c == ']' || c.is_whitespace())
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| Failure::Usage(format!("'{s}' is not a part")))
        })
        .collect::<Result<Vec<u64>, _>>()?;
    Ok(Partition::new(parts)?)
}

/// `None` or `-` reads stdin; text starting with `{` is inline JSON;
/// anything else is a file path.
fn read_matrix(source: Option<&str>, stdin: &mut dyn Read) -> Result<TwoLineMatrix, Failure> {
    let text = match source {
        None | Some("-") => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
        Some(inline) if inline.trim_start().starts_with('{') => inline.to_string(),
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?,
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("bad matrix: {e}")))
}

fn cache_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    cache_env().or_else(|| cli.cache.clone())
}

fn open_cache(cli: &Cli, err: &mut dyn Write) -> Result<FrequencyCache, Failure> {
    let Some(path) = cache_path(cli) else {
        return Ok(FrequencyCache::in_memory());
    };
    let (cache, warnings) = FrequencyCache::load(&path, cli.seed_check);
    for w in warnings {
        writeln!(err, "warning: {w}")?;
    }
    Ok(cache)
}

fn save_cache(cache: &mut FrequencyCache, err: &mut dyn Write) -> Result<(), Failure> {
    if let Err(e) = cache.save() {
        writeln!(err, "warning: cannot write cache: {e}")?;
    }
    Ok(())
}
