//! The solve, verify, generate and reduce commands. Each returns a value the
//! binary prints; none of them touch stdout.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::ValueEnum;
use probecut::colouring::validate_colouring;
use probecut::generate::{random_connected, random_connected_bipartite, random_cubic, random_probe_hfree};
use probecut::oracle::{
    brute_dcut_with, brute_mmc_with, brute_pmc_with, brute_probe_certificate_all, OracleLimits,
};
use probecut::pattern::find_induced;
use probecut::reductions::{bipartite_to_split, moshi_double, sat_to_4p1, subdivide4, ReductionOutput, SatInstance};
use probecut::solvers::{solve_dcut, solve_mmc, solve_pmc, SolveReport};
use probecut::{Colour, Colouring, CutCertificate, Graph, Pattern};
use serde::{Deserialize, Serialize};

use crate::document::InstanceDocument;
use crate::error::{CliError, Result};
use crate::report::{colour_from, Answer, ReportCertificate, RunReport};

pub const ORACLE_ENV: &str = "PROBECUT_ORACLE_MAX_N";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    /// d-cut existence.
    Dcut,
    /// Matching cut existence.
    Mc,
    /// Perfect matching cut.
    Pmc,
    /// Maximum matching cut.
    Mmc,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Dcut => "dcut",
            Problem::Mc => "mc",
            Problem::Pmc => "pmc",
            Problem::Mmc => "mmc",
        }
    }

    /// The cut parameter, checking `--d` against the problem.
    pub fn resolve_d(self, d: Option<usize>) -> Result<usize> {
        match (self, d) {
            (Problem::Dcut, Some(d)) => Ok(d),
            (Problem::Dcut, None) => Err(CliError::Usage("--d is required for dcut".into())),
            (_, None | Some(1)) => Ok(1),
            (p, Some(d)) => Err(CliError::Usage(format!(
                "{} is a matching cut problem; --d must be 1, got {d}",
                p.name()
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    /// The polynomial-time solver; only exact on its promised class.
    Poly,
    /// Exhaustive search, subject to the oracle scale guard.
    Brute,
}

/// Oracle limits, with every guard raised to `PROBECUT_ORACLE_MAX_N` when set.
pub fn oracle_limits() -> Result<OracleLimits> {
    oracle_limits_from(std::env::var(ORACLE_ENV).ok().as_deref())
}

pub fn oracle_limits_from(value: Option<&str>) -> Result<OracleLimits> {
    match value {
        None => Ok(OracleLimits::default()),
        Some(v) => {
            let max: usize = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{ORACLE_ENV} must be a number, got `{v}`")))?;
            Ok(OracleLimits {
                max_vertices: max,
                max_nonprobes: max,
                max_sat_vars: max,
            })
        }
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub problem: Problem,
    pub d: Option<usize>,
    pub algo: Algo,
    /// Isolated vertices in the promised sP1+P4; unbounded when absent.
    pub s: Option<usize>,
}

/// The answer to one problem on one instance, from the chosen algorithm.
pub(crate) fn run_solver(
    opts: &SolveOptions,
    doc: &InstanceDocument,
    limits: &OracleLimits,
) -> Result<SolveReport> {
    let d = opts.problem.resolve_d(opts.d)?;
    let ppg = doc.probe_graph()?;
    match opts.algo {
        Algo::Poly => {
            let s = opts.s.unwrap_or(ppg.n());
            Ok(match opts.problem {
                Problem::Dcut => solve_dcut(&ppg, d)?,
                Problem::Mc | Problem::Mmc => solve_mmc(&ppg, s)?,
                Problem::Pmc => solve_pmc(&ppg, s)?,
            })
        }
        Algo::Brute => {
            let g = ppg.graph();
            let cert = match opts.problem {
                Problem::Dcut | Problem::Mc => brute_dcut_with(g, d, limits)?,
                Problem::Mmc => brute_mmc_with(g, limits)?,
                Problem::Pmc => brute_pmc_with(g, limits)?,
            };
            Ok(brute_report(cert))
        }
    }
}

fn brute_report(cert: Option<CutCertificate>) -> SolveReport {
    SolveReport {
        answer: cert.is_some(),
        certificate: cert,
        branches_explored: 0,
        stranded_branches: 0,
        case_trace: vec!["exhaustive".into()],
    }
}

pub fn cmd_solve(opts: &SolveOptions, doc: &InstanceDocument, limits: &OracleLimits) -> Result<RunReport> {
    let start = Instant::now();
    let solved = run_solver(opts, doc, limits)?;
    let mut command = format!(
        "solve --problem {} --algo {}",
        opts.problem.name(),
        if opts.algo == Algo::Poly { "poly" } else { "brute" }
    );
    if let Some(d) = opts.d {
        command += &format!(" --d {d}");
    }
    if let Some(s) = opts.s {
        command += &format!(" --s {s}");
    }
    let mut report = RunReport::new(command, Answer::from_bool(solved.answer));
    report.certificate = solved.certificate.as_ref().map(ReportCertificate::from);
    report.branches_explored = solved.branches_explored;
    report.stranded_branches = solved.stranded_branches;
    report.case_trace = solved.case_trace;
    report.wall_time_ms = elapsed_ms(start);
    Ok(report)
}

/// Checks the document's `F` against the patterns (a single name or `split`).
/// Without an `F`, searches for one within the oracle limits.
pub fn cmd_verify(doc: &InstanceDocument, pattern: &str, limits: &OracleLimits) -> Result<RunReport> {
    let start = Instant::now();
    let patterns = Pattern::parse_set(pattern)?;
    let ppg = doc.probe_graph()?;
    let mut report = RunReport::new(format!("verify --pattern {pattern}"), Answer::Yes);
    match doc.certificate() {
        Some(cert) => {
            let filled = cert.apply(&ppg)?;
            for h in &patterns {
                if let Some(copy) = find_induced(&filled, h)? {
                    report.answer = Answer::No;
                    report.violation = Some(format!("G + F contains an induced {h} on vertices {copy:?}"));
                    break;
                }
            }
        }
        None => match brute_probe_certificate_all(&ppg, &patterns, limits)? {
            Some(found) => report.probe_certificate = Some(found.edges()),
            None => {
                report.answer = Answer::No;
                report.violation = Some(format!("no set F inside N makes G + F {pattern}-free"));
            }
        },
    }
    report.wall_time_ms = elapsed_ms(start);
    Ok(report)
}

/// Validates a colouring given as a report, a JSON list, or a string of
/// `R`/`B` letters.
pub fn cmd_verify_cut(doc: &InstanceDocument, colours: &[Colour], d: usize, perfect: bool) -> Result<RunReport> {
    let start = Instant::now();
    let g = doc.graph()?;
    if colours.len() != g.n() {
        return Err(CliError::InvalidInstance(format!(
            "colouring has {} entries for {} vertices",
            colours.len(),
            g.n()
        )));
    }
    let mut command = format!("verify --d {d}");
    if perfect {
        command += " --perfect";
    }
    let mut report = RunReport::new(command, Answer::Yes);
    match validate_colouring(&g, &Colouring::from_total(colours), d, perfect)? {
        Ok(cert) => report.certificate = Some(ReportCertificate::from(&cert)),
        Err(violation) => {
            report.answer = Answer::No;
            report.violation = Some(violation.to_string());
        }
    }
    report.wall_time_ms = elapsed_ms(start);
    Ok(report)
}

pub fn parse_colouring(text: &str) -> Result<Vec<Colour>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let report: RunReport = serde_json::from_str(text)?;
        let cert = report
            .certificate
            .ok_or_else(|| CliError::parse("certificate", "the report carries no colouring"))?;
        return cert.colours();
    }
    if trimmed.starts_with('[') {
        let list: Vec<String> = serde_json::from_str(text)?;
        return list
            .iter()
            .enumerate()
            .map(|(i, s)| colour_from(s, &format!("colouring[{i}]")))
            .collect();
    }
    text.chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .enumerate()
        .map(|(i, c)| colour_from(&c.to_string(), &format!("colouring position {i}")))
        .collect()
}

/// JSON form of a restricted SAT instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SatDocument {
    pub n_vars: usize,
    pub positive: Vec<[usize; 3]>,
    pub negative: Vec<[usize; 3]>,
}

impl From<SatDocument> for SatInstance {
    fn from(d: SatDocument) -> Self {
        SatInstance {
            n_vars: d.n_vars,
            positive: d.positive,
            negative: d.negative,
        }
    }
}

pub fn parse_sat(text: &str) -> Result<SatInstance> {
    let doc: SatDocument = serde_json::from_str(text)
        .map_err(|e| CliError::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    for (i, clause) in doc.positive.iter().chain(&doc.negative).enumerate() {
        if let Some(&x) = clause.iter().find(|&&x| x >= doc.n_vars) {
            return Err(CliError::parse(format!("clause {i}"), format!("variable {x} out of range")));
        }
    }
    Ok(doc.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Moshi,
    Subdivide4,
    Split,
    Sat4p1,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Moshi => "moshi",
            Construction::Subdivide4 => "subdivide4",
            Construction::Split => "split",
            Construction::Sat4p1 => "sat4p1",
        }
    }
}

/// Where a reduction reads its input from.
pub enum Source {
    Graph(Graph),
    Sat(SatInstance),
}

/// One side of a bipartition of a connected graph, by BFS parity. Odd cycles
/// are left for the reduction to report.
fn bipartition_side(g: &Graph) -> Vec<usize> {
    let mut side = vec![None; g.n()];
    let mut queue = std::collections::VecDeque::new();
    for start in 0..g.n() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbours(v) {
                if side[w].is_none() {
                    side[w] = Some(!side[v].unwrap());
                    queue.push_back(w);
                }
            }
        }
    }
    (0..g.n()).filter(|&v| side[v] == Some(false)).collect()
}

pub fn reduce(construction: Construction, source: &Source, d: Option<usize>) -> Result<ReductionOutput> {
    match (construction, source) {
        (Construction::Sat4p1, Source::Sat(inst)) => Ok(sat_to_4p1(inst, d.unwrap_or(2))?),
        (Construction::Sat4p1, Source::Graph(_)) => {
            Err(CliError::Usage("sat4p1 reduces from a SAT instance (--from sat)".into()))
        }
        (_, Source::Sat(_)) => Err(CliError::Usage(format!(
            "{} reduces from a graph (--from graph)",
            construction.name()
        ))),
        (Construction::Moshi, Source::Graph(g)) => Ok(moshi_double(g)?),
        (Construction::Subdivide4, Source::Graph(g)) => Ok(subdivide4(g, None)?),
        (Construction::Split, Source::Graph(g)) => Ok(bipartite_to_split(g, &bipartition_side(g))?),
    }
}

fn reduction_document(out: ReductionOutput, extra: BTreeMap<String, String>) -> InstanceDocument {
    let mut metadata = out.metadata.clone();
    metadata.extend(extra);
    InstanceDocument::from_parts(&out.ppg, Some(&out.certificate), metadata)
}

pub fn cmd_reduce(construction: Construction, source: &Source, d: Option<usize>) -> Result<InstanceDocument> {
    let out = reduce(construction, source, d)?;
    let mut extra = BTreeMap::new();
    extra.insert("family".into(), construction.name().into());
    extra.insert("source".into(), "input".into());
    Ok(reduction_document(out, extra))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    RandomProbeHfree,
    Moshi,
    Subdivide4,
    Split,
    Sat4p1,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::RandomProbeHfree => "random-probe-hfree",
            Family::Moshi => "moshi",
            Family::Subdivide4 => "subdivide4",
            Family::Split => "split",
            Family::Sat4p1 => "sat4p1",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct GenerateParams {
    pub n: Option<usize>,
    pub h: Option<String>,
    pub density: Option<f64>,
    pub d: Option<usize>,
    pub n_vars: Option<usize>,
    /// Use the small worked SAT instance instead of a random one.
    pub figure: bool,
}

/// Generates a document. Reduction families use `source` when given and a
/// seeded random input otherwise.
pub fn cmd_generate(family: Family, params: &GenerateParams, seed: u64, source: Option<Source>) -> Result<InstanceDocument> {
    let mut meta = BTreeMap::new();
    meta.insert("family".to_string(), family.name().to_string());
    meta.insert("seed".to_string(), seed.to_string());
    let mut record = |k: &str, v: String| {
        meta.insert(k.to_string(), v);
    };
    let density = params.density.unwrap_or(0.5);
    let construction = match family {
        Family::RandomProbeHfree => {
            let n = params
                .n
                .ok_or_else(|| CliError::Usage("random-probe-hfree needs --n".into()))?;
            let h_name = params.h.clone().unwrap_or_else(|| "P1+P4".into());
            let h: Pattern = h_name.parse()?;
            record("n", n.to_string());
            record("h", h.to_string());
            record("density", density.to_string());
            let (ppg, cert) = random_probe_hfree(n, &h, density, seed)?;
            return Ok(InstanceDocument::from_parts(&ppg, Some(&cert), meta));
        }
        Family::Moshi => Construction::Moshi,
        Family::Subdivide4 => Construction::Subdivide4,
        Family::Split => Construction::Split,
        Family::Sat4p1 => Construction::Sat4p1,
    };
    let source = match source {
        Some(s) => {
            record("source", "input".into());
            s
        }
        None => {
            record("source", "random".into());
            match family {
                Family::Sat4p1 if params.figure => {
                    meta.insert("source".into(), "figure".into());
                    Source::Sat(SatInstance::figure())
                }
                Family::Sat4p1 => {
                    let n_vars = params.n_vars.unwrap_or(6);
                    meta.insert("n_vars".into(), n_vars.to_string());
                    Source::Sat(SatInstance::random(n_vars, seed)?)
                }
                Family::Subdivide4 => {
                    let n = params.n.unwrap_or(8);
                    meta.insert("n".into(), n.to_string());
                    Source::Graph(random_cubic(n, seed)?)
                }
                Family::Split => {
                    let n = params.n.unwrap_or(8);
                    if n < 2 {
                        return Err(CliError::Usage("split needs --n >= 2".into()));
                    }
                    meta.insert("n".into(), n.to_string());
                    meta.insert("density".into(), density.to_string());
                    Source::Graph(random_connected_bipartite(n / 2, n - n / 2, density, seed)?)
                }
                _ => {
                    let n = params.n.unwrap_or(6);
                    if n < 2 {
                        return Err(CliError::Usage("moshi needs --n >= 2".into()));
                    }
                    meta.insert("n".into(), n.to_string());
                    meta.insert("density".into(), density.to_string());
                    Source::Graph(random_connected(n, density, seed)?)
                }
            }
        }
    };
    if family == Family::Sat4p1 {
        meta.insert("d".into(), params.d.unwrap_or(2).to_string());
    }
    let out = reduce(construction, &source, params.d)?;
    Ok(reduction_document(out, meta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::parse_instance;

    fn doc(text: &str) -> InstanceDocument {
        parse_instance(text).unwrap()
    }

    #[test]
    fn solve_examples() {
        let p4 = doc("e 0 1\ne 1 2\ne 2 3\n");
        let opts = SolveOptions { problem: Problem::Mmc, d: None, algo: Algo::Poly, s: None };
        let r = cmd_solve(&opts, &p4, &OracleLimits::default()).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert_eq!(r.certificate.as_ref().unwrap().size, 2);
        assert!(r.certificate.unwrap().revalidates(&p4.graph().unwrap()).unwrap());

        let k5 = InstanceDocument::from_graph(&Graph::complete(5));
        let opts = SolveOptions { problem: Problem::Dcut, d: Some(2), algo: Algo::Brute, s: None };
        assert_eq!(cmd_solve(&opts, &k5, &OracleLimits::default()).unwrap().answer, Answer::No);

        let opts = SolveOptions { problem: Problem::Dcut, d: Some(1), algo: Algo::Poly, s: None };
        let err = cmd_solve(&opts, &k5, &OracleLimits::default()).unwrap_err();
        assert!(matches!(err, CliError::Core(probecut::Error::UnsupportedD(_))));
    }

    #[test]
    fn verify_examples() {
        // P3 with non-probe ends; F closes the triangle, which is 2P2-free.
        let p3 = doc("e 0 1\ne 1 2\nf 0 2\n");
        assert_eq!(cmd_verify(&p3, "2P2", &OracleLimits::default()).unwrap().answer, Answer::Yes);
        let r = cmd_verify(&p3, "P3", &OracleLimits::default());
        assert!(r.is_ok());

        let star = InstanceDocument::from_graph(&Graph::star(2));
        let colours = parse_colouring("BRR").unwrap();
        let r = cmd_verify_cut(&star, &colours, 1, false).unwrap();
        assert_eq!(r.answer, Answer::No);
        assert!(r.violation.unwrap().contains("vertex 0"));

        let p4 = InstanceDocument::from_graph(&Graph::path(4));
        let r = cmd_verify_cut(&p4, &parse_colouring("RRBB").unwrap(), 1, true).unwrap();
        assert_eq!(r.answer, Answer::No);
        assert_eq!(r.violation.unwrap(), "vertex 0 has 0 \u{2260} 1 opposite-coloured neighbours");
    }

    #[test]
    fn colouring_formats_agree() {
        let a = parse_colouring("R B, B R").unwrap();
        let b = parse_colouring(r#"["R","B","B","R"]"#).unwrap();
        assert_eq!(a, b);
        assert!(parse_colouring("RX").is_err());
    }

    #[test]
    fn generate_examples() {
        let k2 = Source::Graph(Graph::path(2));
        let d = cmd_generate(Family::Moshi, &GenerateParams::default(), 0, Some(k2)).unwrap();
        assert_eq!(d.n, 4);
        assert_eq!(d.certificate_f.as_ref().unwrap().len(), 1);

        let params = GenerateParams { figure: true, ..Default::default() };
        let d = cmd_generate(Family::Sat4p1, &params, 0, None).unwrap();
        assert_eq!(d.n, 14);
        assert_eq!(d.metadata["family"], "sat4p1");

        let params = GenerateParams { n: Some(8), h: Some("P1+P4".into()), ..Default::default() };
        let d = cmd_generate(Family::RandomProbeHfree, &params, 1, None).unwrap();
        assert_eq!(cmd_verify(&d, "P1+P4", &OracleLimits::default()).unwrap().answer, Answer::Yes);
        assert_eq!(d.metadata["seed"], "1");
    }

    #[test]
    fn env_limits() {
        assert_eq!(oracle_limits_from(None).unwrap(), OracleLimits::default());
        assert_eq!(oracle_limits_from(Some("30")).unwrap().max_vertices, 30);
        assert!(oracle_limits_from(Some("lots")).is_err());
    }
}
