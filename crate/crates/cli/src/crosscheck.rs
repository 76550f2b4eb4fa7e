//! Polynomial solver against oracle over a generated corpus.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use probecut::generate::random_probe_hfree;
use probecut::oracle::OracleLimits;
use probecut::{Error, Pattern};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::commands::{run_solver, Algo, Problem, SolveOptions};
use crate::document::InstanceDocument;
use crate::error::{CliError, Result};

/// Fresh seeds tried per instance before giving up; each retry is denser.
const GENERATION_RETRIES: usize = 20;

#[derive(Clone, Debug)]
pub struct CrosscheckOptions {
    pub problem: Problem,
    pub d: Option<usize>,
    pub count: usize,
    pub max_n: usize,
    pub seed: u64,
    /// Fixed `s` for matching problems; otherwise instance `i` uses `i mod 3`.
    pub s: Option<usize>,
    pub dump_dir: PathBuf,
    pub workers: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    pub index: usize,
    pub poly: String,
    pub brute: String,
    pub dump: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrosscheckSummary {
    pub command: String,
    pub checked: usize,
    pub agree: usize,
    pub mismatches: Vec<Mismatch>,
    pub warnings: Vec<String>,
    pub wall_time_ms: f64,
}

impl CrosscheckSummary {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn headline(&self) -> String {
        format!("{}/{} agree", self.agree, self.checked)
    }
}

struct Checked {
    index: usize,
    poly: String,
    brute: String,
    doc: InstanceDocument,
}

/// The instance for `index`: an independent stream of the master seed.
fn instance(opts: &CrosscheckOptions, index: usize) -> Result<(InstanceDocument, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(index as u64);
    let (pattern, s) = match opts.problem {
        Problem::Dcut => (Pattern::IsolatedPlusP4(1), 1),
        _ => {
            let s = opts.s.unwrap_or(index % 3);
            (Pattern::IsolatedPlusP4(s), s)
        }
    };
    let n = rng.gen_range(opts.max_n.min(4)..=opts.max_n);
    let mut density: f64 = rng.gen_range(0.5..0.95);
    for _ in 0..GENERATION_RETRIES {
        let seed: u64 = rng.gen();
        match random_probe_hfree(n, &pattern, density, seed) {
            Ok((ppg, cert)) => {
                let mut meta = BTreeMap::new();
                meta.insert("family".into(), "random-probe-hfree".into());
                meta.insert("h".into(), pattern.to_string());
                meta.insert("n".into(), n.to_string());
                meta.insert("density".into(), density.to_string());
                meta.insert("seed".into(), seed.to_string());
                meta.insert("crosscheck_index".into(), index.to_string());
                return Ok((InstanceDocument::from_parts(&ppg, Some(&cert), meta), s));
            }
            Err(Error::GenerationTimeout(_)) => density = (density + 1.0) / 2.0,
            Err(e) => return Err(e.into()),
        }
    }
    Err(Error::GenerationTimeout(GENERATION_RETRIES).into())
}

/// The comparable outcome: the answer, plus the size for maximum cuts.
fn outcome(problem: Problem, answer: bool, size: Option<usize>) -> String {
    match (problem, answer) {
        (Problem::Mmc, true) => format!("yes (size {})", size.unwrap_or(0)),
        (_, true) => "yes".into(),
        (_, false) => "no".into(),
    }
}

fn check_one(opts: &CrosscheckOptions, d: usize, index: usize, limits: &OracleLimits) -> Result<Checked> {
    let (doc, s) = instance(opts, index)?;
    let mut solve = SolveOptions {
        problem: opts.problem,
        d: Some(d),
        algo: Algo::Poly,
        s: Some(s),
    };
    let poly = match run_solver(&solve, &doc, limits) {
        Ok(r) => outcome(opts.problem, r.answer, r.certificate.map(|c| c.size)),
        // A solver error on a promised-class instance is a mismatch too.
        Err(e) => format!("error: {e}"),
    };
    solve.algo = Algo::Brute;
    let r = run_solver(&solve, &doc, limits)?;
    let brute = outcome(opts.problem, r.answer, r.certificate.map(|c| c.size));
    Ok(Checked {
        index,
        poly,
        brute,
        doc,
    })
}

fn dump(dir: &Path, opts: &CrosscheckOptions, c: &Checked) -> Result<String> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let path = dir.join(format!(
        "crosscheck-{}-seed{}-{}.json",
        opts.problem.name(),
        opts.seed,
        c.index
    ));
    std::fs::write(&path, c.doc.to_json()).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    Ok(path.display().to_string())
}

pub fn cmd_crosscheck(opts: &CrosscheckOptions, limits: &OracleLimits) -> Result<CrosscheckSummary> {
    let start = Instant::now();
    let d = opts.problem.resolve_d(opts.d)?;
    if opts.problem == Problem::Dcut && d < 2 {
        return Err(CliError::Usage("the d-cut solver needs --d >= 2".into()));
    }
    if opts.max_n < 2 {
        return Err(CliError::Usage("--max-n must be at least 2".into()));
    }
    if opts.max_n > limits.max_vertices {
        return Err(Error::OracleScaleExceeded {
            size: opts.max_n,
            limit: limits.max_vertices,
        }
        .into());
    }
    let mut warnings = Vec::new();
    if opts.count == 0 {
        warnings.push("count is 0; nothing was checked".to_string());
    }
    let workers = opts.workers.clamp(1, opts.count.max(1));
    let mut results: Vec<Result<Checked>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (w..opts.count)
                        .step_by(workers)
                        .map(|i| check_one(opts, d, i, limits))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("crosscheck worker panicked"))
            .collect()
    });
    results.sort_by_key(|r| r.as_ref().map_or(0, |c| c.index));
    let mut agree = 0;
    let mut mismatches = Vec::new();
    for r in results {
        let c = r?;
        if c.poly == c.brute {
            agree += 1;
        } else {
            mismatches.push(Mismatch {
                index: c.index,
                dump: dump(&opts.dump_dir, opts, &c)?,
                poly: c.poly,
                brute: c.brute,
            });
        }
    }
    let mut command = format!(
        "crosscheck --problem {} --count {} --max-n {} --seed {}",
        opts.problem.name(),
        opts.count,
        opts.max_n,
        opts.seed
    );
    if let Some(d) = opts.d {
        command += &format!(" --d {d}");
    }
    Ok(CrosscheckSummary {
        command,
        checked: opts.count,
        agree,
        mismatches,
        warnings,
        wall_time_ms: start.elapsed().as_secs_f64() * 1000.0,
    })
}
