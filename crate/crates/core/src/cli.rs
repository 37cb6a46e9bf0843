//! Command-line front end.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::closure::closure;
use crate::error::{FramoidError, Result};
use crate::family::{lookup, registry, MonoidFamily};
use crate::normalform::normal_form;
use crate::verify::{self, SuiteConfig, SuiteReport, DEFAULT_SEED};
use crate::word::parse_word;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "framoid", version, about = "Framed and tied diagram monoids")]
pub struct Cli {
    /// worker threads (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct Grid {
    /// family key, e.g. jdn, brdn, trprimen
    #[arg(long)]
    pub family: String,
    /// bead modulus: a value or an inclusive range a..b
    #[arg(long, default_value = "1", value_parser = parse_range::<u32>)]
    pub d: Span<u32>,
    /// number of strands: a value or an inclusive range a..b
    #[arg(long, value_parser = parse_range::<usize>)]
    pub n: Option<Span<usize>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate monoids and compare sizes with the counting formulas
    Enumerate {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value_t = crate::closure::DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// also print every element
        #[arg(long)]
        dump: bool,
    },
    /// Run verification suites
    Verify {
        /// suite name; all suites when omitted
        #[arg(long)]
        suite: Option<String>,
        /// restrict to these families (repeatable)
        #[arg(long)]
        family: Vec<String>,
        /// override the suite's d values
        #[arg(long, value_parser = parse_range::<u32>)]
        d: Option<Span<u32>>,
        /// override the suite's n values
        #[arg(long, value_parser = parse_range::<usize>)]
        n: Option<Span<usize>>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = crate::closure::DEFAULT_CAP)]
        cap: usize,
        /// random samples for the sampling checks
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// record wall-clock times in the report
        #[arg(long)]
        timing: bool,
    },
    /// Normal form of the element represented by a word
    NormalForm {
        #[command(flatten)]
        grid: Grid,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Counting formulas over a grid
    CardinalityTable {
        /// families to list; all when omitted
        #[arg(long)]
        family: Vec<String>,
        #[arg(long, value_parser = parse_range::<u32>)]
        d: Option<Span<u32>>,
        #[arg(long, value_parser = parse_range::<usize>)]
        n: Option<Span<usize>>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Evaluate a word to its diagram
    EvalWord {
        #[command(flatten)]
        grid: Grid,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Values given as `a` or as an inclusive range `a..b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span<T>(pub Vec<T>);

fn parse_range<T: TryFrom<u64>>(s: &str) -> std::result::Result<Span<T>, String> {
    let num = |x: &str| x.trim().parse::<u64>().map_err(|_| format!("bad number `{x}`"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    (a..=b)
        .map(|v| T::try_from(v).map_err(|_| format!("{v} out of range")))
        .collect::<std::result::Result<_, _>>()
        .map(Span)
}

#[derive(Debug, Serialize)]
struct CountRow {
    family: String,
    d: u32,
    n: usize,
    count: String,
    predicted: String,
    #[serde(rename = "match")]
    matches: bool,
}

impl CountRow {
    fn json(&self) -> String {
        // counts are printed as JSON numbers even when they exceed u64
        format!(
            "{{\"family\":\"{}\",\"d\":{},\"n\":{},\"count\":{},\"predicted\":{},\"match\":{}}}",
            self.family, self.d, self.n, self.count, self.predicted, self.matches
        )
    }
}

fn families_of(grid: &Grid) -> Result<Vec<MonoidFamily>> {
    let ns = grid
        .n
        .as_ref()
        .ok_or_else(|| FramoidError::InvalidParameters("--n is required".into()))?;
    let s = lookup(&grid.family)?;
    let mut out = Vec::new();
    for &d in &grid.d.0 {
        for &n in &ns.0 {
            out.push(MonoidFamily::new(s, d, n)?);
        }
    }
    Ok(out)
}

fn single(grid: &Grid) -> Result<MonoidFamily> {
    match families_of(grid)?.as_slice() {
        [f] => Ok(*f),
        _ => Err(FramoidError::InvalidParameters("expected a single d and n".into())),
    }
}

fn emit(out: &mut dyn Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes())
        .map_err(|e| FramoidError::InvalidParameters(format!("write failed: {e}")))
}

fn enumerate(grid: &Grid, cap: usize, format: Format, dump: bool, out: &mut dyn Write) -> Result<u8> {
    let mut code = EXIT_OK;
    if format == Format::Csv {
        emit(out, "family,d,n,count,predicted,match\n")?;
    }
    for fam in families_of(grid)? {
        let elems = closure(&fam, cap)?;
        let predicted = fam.predicted_cardinality().to_string();
        let row = CountRow {
            family: fam.key().into(),
            d: fam.d,
            n: fam.n,
            count: elems.len().to_string(),
            matches: elems.len().to_string() == predicted,
            predicted,
        };
        log::info!("{}: {} elements", fam.strategy.label(), row.count);
        if !row.matches {
            code = EXIT_MISMATCH;
        }
        let line = match format {
            Format::Json => row.json() + "\n",
            Format::Csv => format!(
                "{},{},{},{},{},{}\n",
                row.family, row.d, row.n, row.count, row.predicted, row.matches
            ),
            Format::Text => format!(
                "{} d={} n={}: {} elements, predicted {}{}\n",
                fam.strategy.label(),
                row.d,
                row.n,
                row.count,
                row.predicted,
                if row.matches { "" } else { "  MISMATCH" }
            ),
        };
        emit(out, &line)?;
        if dump {
            for x in &elems {
                emit(out, &format!("{x}\n"))?;
            }
        }
    }
    Ok(code)
}

fn write_report(report: &SuiteReport, format: Format, header: bool, out: &mut dyn Write) -> Result<()> {
    let s = match format {
        Format::Json => report.to_json_lines(),
        Format::Csv if header => report.to_csv(),
        Format::Csv => report.to_csv().split_once('\n').map(|x| x.1.to_string()).unwrap_or_default(),
        Format::Text => report.to_text(),
    };
    emit(out, &s)
}

/// Runs the parsed command, writing to `out`; returns the exit code.
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    if let Some(t) = cli.threads {
        // only the first call in a process can configure the global pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match cli.command {
        Command::Enumerate { grid, cap, format, dump } => enumerate(&grid, cap, format, dump, out),
        Command::Verify { suite, family, d, n, seed, cap, samples, format, timing } => {
            let suites = match suite {
                Some(name) => vec![verify::lookup(&name)?],
                None => verify::registry().to_vec(),
            };
            let cfg = SuiteConfig {
                seed,
                families: family,
                ds: d.map(|s| s.0),
                ns: n.map(|s| s.0),
                cap,
                timing,
                samples,
            };
            let mut code = EXIT_OK;
            for (k, s) in suites.iter().enumerate() {
                let report = s.run(&cfg)?;
                if !report.passed() {
                    code = EXIT_MISMATCH;
                }
                write_report(&report, format, k == 0, out)?;
            }
            Ok(code)
        }
        Command::NormalForm { grid, word, format } => {
            let fam = single(&grid)?;
            let (x, _) = fam.evaluate_word(&parse_word(&word)?)?;
            let nf = normal_form(&fam, &x)?;
            let s = match format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({
                        "family": fam.key(), "d": fam.d, "n": fam.n, "word": word,
                        "normal_form": nf.to_string(), "tangles": nf.tangle_count(),
                    })
                ),
                Format::Csv => format!("family,d,n,normal_form\n{},{},{},{nf}\n", fam.key(), fam.d, fam.n),
                Format::Text => format!("{nf}\n"),
            };
            emit(out, &s)?;
            Ok(EXIT_OK)
        }
        Command::CardinalityTable { family, d, n, format } => {
            let strategies = if family.is_empty() {
                registry().to_vec()
            } else {
                family.iter().map(|k| lookup(k)).collect::<Result<_>>()?
            };
            let mut s = match format {
                Format::Csv => "family,d,n,predicted\n".to_string(),
                _ => String::new(),
            };
            for st in strategies {
                let cfg = SuiteConfig {
                    ds: d.clone().map(|s| s.0),
                    ns: n.clone().map(|s| s.0),
                    ..SuiteConfig::default()
                };
                for (d, n) in cfg.grid(st.default_grid()) {
                    let fam = MonoidFamily::new(st, d, n)?;
                    let p = fam.predicted_cardinality();
                    s += &match format {
                        Format::Csv => format!("{},{d},{n},{p}\n", st.key()),
                        Format::Json => format!(
                            "{{\"family\":\"{}\",\"d\":{d},\"n\":{n},\"predicted\":{p}}}\n",
                            st.key()
                        ),
                        Format::Text => format!("{} d={d} n={n}: {p}\n", st.label()),
                    };
                }
            }
            emit(out, &s)?;
            Ok(EXIT_OK)
        }
        Command::EvalWord { grid, word, format } => {
            let fam = single(&grid)?;
            let (x, loops) = fam.evaluate_word(&parse_word(&word)?)?;
            let loops: Vec<(u32, u64)> = loops.iter().collect();
            let s = match format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({
                        "family": fam.key(), "d": fam.d, "n": fam.n, "word": word,
                        "diagram": x.to_string(), "loops": loops,
                    })
                ),
                Format::Csv => format!("family,d,n,diagram\n{},{},{},\"{x}\"\n", fam.key(), fam.d, fam.n),
                Format::Text => {
                    let l: Vec<String> = loops.iter().map(|(p, c)| format!("{p}:{c}")).collect();
                    format!("{x}\nloops: {{{}}}\n", l.join(","))
                }
            };
            emit(out, &s)?;
            Ok(EXIT_OK)
        }
    }
}

pub fn exit_code(e: &FramoidError) -> u8 {
    match e {
        FramoidError::CapExceeded { .. } => EXIT_CAP,
        FramoidError::Mismatch(_) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

pub fn run() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("FRAMOID_LOG")).init();
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(cli, &mut lock) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
