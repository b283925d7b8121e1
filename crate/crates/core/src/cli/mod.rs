//! The `symchar` command line.
//!
//! Exit codes: 0 on success, 1 when a computation or check fails, 2 for
//! invalid arguments.

pub mod golden;
pub mod render;
mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::hall_ops::SpDecomposition;
use crate::partitions::Partition;
use crate::symfunc::q;
use crate::torelli_chars::{gamma_infinity, stable_moduli_series, wedge2_sp, ExpMethod, ModuliKind, Object, Pipeline};

use golden::{golden_check, GoldenTable};

/// Largest `--max-degree` accepted for the table commands.
pub const DEGREE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Generic,
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    M,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GoldenArg {
    A,
    Torelli,
}

#[derive(Debug, Parser)]
#[command(name = "symchar", version, about = "Symplectic characters of A, A1 and the Torelli Lie algebra")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Directory for cached Exp(ch_t V) results.
    #[arg(long, env = "SYMCHAR_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,

    #[arg(long, global = true)]
    no_cache: bool,

    /// Worker threads; 0 picks the number of cores.
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,

    #[arg(long, value_enum, default_value = "generic", global = true)]
    method: MethodArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Character of A, degree by degree.
    A {
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Character of A1, degree by degree.
    A1 {
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Character of the Torelli Lie algebra, degree by degree.
    Torelli {
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Multiplicity series of <λ> in A.
    Poincare {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, default_value_t = 8)]
        t_max: usize,
    },
    /// Π (1 - t^{2n})^{-1}.
    GammaInfinity {
        #[arg(long, default_value_t = 8)]
        t_max: usize,
    },
    /// Λ² of <λ> (+ further summands).
    Wedge2 {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, value_parser = parse_partition)]
        plus_partition: Vec<Partition>,
    },
    /// Stable cohomology series of M or C, in the Schur basis.
    Moduli {
        #[arg(long, value_enum, default_value = "m")]
        kind: KindArg,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value_t = 4)]
        t_max: usize,
    },
    /// Cross-check the engine against the brute-force oracle.
    Selftest,
    /// Compare computed tables with the bundled reference tables.
    Golden {
        #[arg(long, value_enum)]
        object: Option<GoldenArg>,
    },
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Outcome {
    body: String,
    ok: bool,
}

fn done(body: String) -> Result<Outcome> {
    Ok(Outcome { body, ok: true })
}

fn check_degree(n: usize) -> Result<()> {
    if n > DEGREE_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "--max-degree {n} is above the supported limit {DEGREE_LIMIT}"
        )));
    }
    Ok(())
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
}

fn execute(cli: &Cli, pipeline: &Pipeline) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::A { max_degree } | Command::A1 { max_degree } | Command::Torelli { max_degree } => {
            check_degree(*max_degree)?;
            let table = match &cli.command {
                Command::A { .. } => pipeline.char_a(*max_degree)?,
                Command::A1 { .. } => pipeline.char_a1(*max_degree)?,
                _ => pipeline.char_torelli(*max_degree)?,
            };
            done(match fmt {
                Format::Text => render::table_text(&table),
                Format::Json => pretty(render::table_json(&table)),
            })
        }
        Command::Poincare { partition, t_max } => {
            let series = pipeline.poincare_series(partition, *t_max)?;
            done(match fmt {
                Format::Text => format!("<{partition}>: {}\n", render::scalar_series_text(&series)),
                Format::Json => pretty(json!({
                    "partition": partition.parts(),
                    "coefficients": render::scalar_series_json(&series),
                })),
            })
        }
        Command::GammaInfinity { t_max } => {
            let series = gamma_infinity(*t_max);
            done(match fmt {
                Format::Text => render::scalar_series_text(&series) + "\n",
                Format::Json => serde_json::to_string(&render::scalar_series_json(&series)).unwrap() + "\n",
            })
        }
        Command::Wedge2 { partition, plus_partition } => {
            let mut input = SpDecomposition::new();
            for lam in std::iter::once(partition).chain(plus_partition) {
                input.add(lam.clone(), q(1));
            }
            let out = wedge2_sp(&input)?;
            done(match fmt {
                Format::Text => format!("{out}\n"),
                Format::Json => pretty(json!({
                    "input": render::decomposition_json(&input),
                    "terms": render::decomposition_json(&out),
                })),
            })
        }
        Command::Moduli { kind, max_degree, t_max } => {
            let kind = match kind {
                KindArg::M => ModuliKind::M,
                KindArg::C => ModuliKind::C,
            };
            let series = stable_moduli_series(kind, *max_degree, *t_max)?;
            done(match fmt {
                Format::Text => render::schur_series_text(&series),
                Format::Json => pretty(render::schur_series_json(&series)),
            })
        }
        Command::Selftest => {
            let results = selftest::run();
            let ok = results.iter().all(|(_, r)| r.is_ok());
            let body = match fmt {
                Format::Text => results
                    .iter()
                    .map(|(name, r)| match r {
                        Ok(()) => format!("pass {name}\n"),
                        Err(e) => format!("FAIL {name}: {e}\n"),
                    })
                    .collect(),
                Format::Json => pretty(json!(results
                    .iter()
                    .map(|(name, r)| json!({ "check": name, "pass": r.is_ok(),
                        "error": r.as_ref().err().map(|e| e.to_string()) }))
                    .collect::<Vec<_>>())),
            };
            Ok(Outcome { body, ok })
        }
        Command::Golden { object } => {
            let objects = match object {
                Some(GoldenArg::A) => vec![Object::A],
                Some(GoldenArg::Torelli) => vec![Object::Torelli],
                None => vec![Object::A, Object::Torelli],
            };
            let mut body = String::new();
            let mut reports = Vec::new();
            let mut ok = true;
            for object in objects {
                let golden = GoldenTable::bundled(object)?;
                let n = golden.max_degree();
                let computed = match object {
                    Object::Torelli => pipeline.char_torelli(n)?,
                    _ => pipeline.char_a(n)?,
                };
                let report = golden_check(&golden, &computed);
                ok &= report.passed();
                body.push_str(&report.to_string());
                reports.push(json!({
                    "object": object.tag(),
                    "pass": report.passed(),
                    "degrees": report.degrees_checked,
                    "missing": report.missing_degrees,
                    "discrepancies": report.discrepancies.iter().map(|d| json!({
                        "degree": d.degree,
                        "partition": d.partition.parts(),
                        "expected": d.expected.to_string(),
                        "actual": d.actual.to_string(),
                    })).collect::<Vec<_>>(),
                }));
            }
            if fmt == Format::Json {
                body = pretty(json!(reports));
            }
            Ok(Outcome { body, ok })
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::InvalidPartition(_) | Error::Parse(_) | Error::CapViolation { .. } => 2,
        _ => 1,
    }
}

/// Runs the command line `args` (program name first), writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    if cli.threads > 0 {
        // Only the first call in a process can size the global pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    let method = match cli.method {
        MethodArg::Generic => ExpMethod::Generic,
        MethodArg::Gamma => ExpMethod::Gamma,
    };
    let mut pipeline = Pipeline::new().with_method(method);
    if let (Some(dir), false) = (&cli.cache_dir, cli.no_cache) {
        pipeline = pipeline.with_cache_dir(dir.clone());
    }
    let result = execute(&cli, &pipeline);
    for note in pipeline.diagnostics() {
        let _ = writeln!(err, "warning: {note}");
    }
    match result {
        Ok(outcome) => {
            let _ = out.write_all(outcome.body.as_bytes());
            let _ = out.flush();
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
