use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use probecut_cli::commands::oracle_limits;
use probecut_cli::{
    cmd_crosscheck, cmd_generate, cmd_reduce, cmd_solve, cmd_verify, cmd_verify_cut, parse_colouring,
    parse_instance, parse_sat, Algo, CliError, Construction, CrosscheckOptions, Family, GenerateParams,
    Problem, Result, SolveOptions, Source, EXIT_ERROR, EXIT_MISMATCH,
};

/// Cut problems on partitioned probe graphs.
///
/// Exit status: 0 yes, 1 no, 2 usage/input/scale error, 3 crosscheck
/// mismatch. PROBECUT_ORACLE_MAX_N raises the exhaustive-search guards
/// (defaults: 24 vertices for colour enumeration, 8 non-probes for
/// certificate search).
#[derive(Parser)]
#[command(name = "probecut", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a cut problem on an instance.
    ///
    /// The poly solvers are exact only on their promised classes, which are
    /// not checked: dcut needs d >= 2 and G + F (P1+P4)-free; mc, mmc and
    /// pmc need G + F (sP1+P4)-free for the given --s. There is no fallback
    /// between algorithms.
    Solve {
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum)]
        algo: Algo,
        /// Instance file (JSON or edge list); `-` for stdin.
        #[arg(long)]
        input: PathBuf,
        /// Bounds the seed-set search of the matching cut solvers.
        #[arg(long)]
        s: Option<usize>,
    },
    /// Check a probe certificate against a pattern, or a colouring as a cut.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Pattern name (P4, P1+P4, 2P1+P4, 4P1, claw, diamond, 2P2, C5, ...)
        /// or `split`.
        #[arg(long, conflicts_with = "colouring", required_unless_present = "colouring")]
        pattern: Option<String>,
        /// A run report, a JSON list of "R"/"B", or a string of R/B letters.
        #[arg(long, requires = "d")]
        colouring: Option<PathBuf>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, requires = "colouring")]
        perfect: bool,
    },
    /// Emit an instance document from a generator family.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        /// Forbidden pattern for random-probe-hfree (default P1+P4).
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        density: Option<f64>,
        #[arg(long)]
        d: Option<usize>,
        /// Variables of a random SAT instance for sat4p1 (multiple of 3).
        #[arg(long)]
        n_vars: Option<usize>,
        /// Use the small worked SAT instance for sat4p1.
        #[arg(long)]
        figure: bool,
        /// Reduce this graph (or SAT instance, for sat4p1) instead of a random one.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Apply a hardness reduction to an input graph or SAT instance.
    Reduce {
        #[arg(long, value_enum)]
        from: From,
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Compare the poly solver with the oracle on generated instances.
    Crosscheck {
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        s: Option<usize>,
        /// Directory for mismatching instances.
        #[arg(long, default_value_os_t = std::env::temp_dir().join("probecut-mismatches"))]
        dump_dir: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum From {
    Sat,
    Graph,
}

fn read(path: &Path) -> Result<String> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn read_graph(path: &Path) -> Result<Source> {
    Ok(Source::Graph(parse_instance(&read(path)?)?.graph()?))
}

/// Prints to stdout; a reader that went away early is not an error.
fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io {
            path: PathBuf::from("<stdout>"),
            source: e,
        }),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let limits = oracle_limits()?;
    match cli.command {
        Command::Solve { problem, d, algo, input, s } => {
            let doc = parse_instance(&read(&input)?)?;
            let report = cmd_solve(&SolveOptions { problem, d, algo, s }, &doc, &limits)?;
            emit(&report.to_json())?;
            Ok(report.answer.exit_code())
        }
        Command::Verify { input, pattern, colouring, d, perfect } => {
            let doc = parse_instance(&read(&input)?)?;
            let report = match (pattern, colouring) {
                (Some(p), _) => cmd_verify(&doc, &p, &limits)?,
                (None, Some(path)) => {
                    let colours = parse_colouring(&read(&path)?)?;
                    cmd_verify_cut(&doc, &colours, d.expect("clap requires --d"), perfect)?
                }
                (None, None) => unreachable!("clap requires one of --pattern and --colouring"),
            };
            emit(&report.to_json())?;
            Ok(report.answer.exit_code())
        }
        Command::Generate { family, seed, n, h, density, d, n_vars, figure, input } => {
            let source = match input {
                None => None,
                Some(path) if family == Family::Sat4p1 => Some(Source::Sat(parse_sat(&read(&path)?)?)),
                Some(path) => Some(read_graph(&path)?),
            };
            let params = GenerateParams { n, h, density, d, n_vars, figure };
            let doc = cmd_generate(family, &params, seed, source)?;
            emit(&doc.to_json())?;
            Ok(0)
        }
        Command::Reduce { from, construction, input, d } => {
            let source = match from {
                From::Sat => Source::Sat(parse_sat(&read(&input)?)?),
                From::Graph => read_graph(&input)?,
            };
            emit(&cmd_reduce(construction, &source, d)?.to_json())?;
            Ok(0)
        }
        Command::Crosscheck { problem, d, count, max_n, seed, s, dump_dir, workers } => {
            let workers = workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let opts = CrosscheckOptions { problem, d, count, max_n, seed, s, dump_dir, workers };
            let summary = cmd_crosscheck(&opts, &limits)?;
            for w in &summary.warnings {
                eprintln!("warning: {w}");
            }
            eprintln!("{}", summary.headline());
            for m in &summary.mismatches {
                eprintln!("mismatch at instance {}: poly {}, brute {} ({})", m.index, m.poly, m.brute, m.dump);
            }
            emit(&serde_json::to_string_pretty(&summary)?)?;
            Ok(if summary.passed() { 0 } else { EXIT_MISMATCH })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
