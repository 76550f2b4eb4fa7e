//! Instance documents: a partitioned probe graph, an optional certificate `F`
//! and free-form metadata.
//!
//! JSON is canonical. The edge-list format has one directive per line:
//! `n N`, `e u v`, `probe u`, `nonprobe u`, `f u v` and `meta key value`;
//! `#` starts a comment. Vertices not mentioned as non-probes (directly or
//! as an endpoint of an `f` pair) are probes.

use std::collections::BTreeMap;

use probecut::{Graph, PartitionedProbeGraph, ProbeCertificate};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub probes: Vec<usize>,
    pub nonprobes: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate_f: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

pub fn parse_instance(text: &str) -> Result<InstanceDocument> {
    let doc = if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| {
            CliError::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
        })?
    } else {
        parse_edge_list(text)?
    };
    doc.normalised()
}

fn parse_edge_list(text: &str) -> Result<InstanceDocument> {
    let mut declared_n = None;
    let mut edges = Vec::new();
    let mut probes = Vec::new();
    let mut nonprobes = Vec::new();
    let mut f = Vec::new();
    let mut metadata = BTreeMap::new();
    let mut max_id = None::<usize>;
    for (i, raw) in text.lines().enumerate() {
        let at = format!("line {}", i + 1);
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let directive = tokens.next().unwrap_or_default();
        if directive == "meta" {
            let key = tokens
                .next()
                .ok_or_else(|| CliError::parse(&at, "`meta` needs a key"))?;
            metadata.insert(key.to_string(), tokens.collect::<Vec<_>>().join(" "));
            continue;
        }
        let ids = tokens
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| CliError::parse(&at, format!("`{t}` is not a vertex id")))
            })
            .collect::<Result<Vec<usize>>>()?;
        let arity = match directive {
            "n" | "probe" | "nonprobe" => 1,
            "e" | "f" => 2,
            other => return Err(CliError::parse(&at, format!("unknown directive `{other}`"))),
        };
        if ids.len() != arity {
            return Err(CliError::parse(
                &at,
                format!("`{directive}` takes {arity} number(s), found {}", ids.len()),
            ));
        }
        if directive == "n" {
            declared_n = Some(ids[0]);
            continue;
        }
        max_id = ids.iter().copied().chain(max_id).max();
        match directive {
            "e" => edges.push((ids[0], ids[1])),
            "f" => f.push((ids[0], ids[1])),
            "probe" => probes.push(ids[0]),
            _ => nonprobes.push(ids[0]),
        }
    }
    let needed = max_id.map_or(0, |m| m + 1);
    let n = match declared_n {
        Some(n) if n < needed => {
            return Err(CliError::parse(
                "n",
                format!("declared n = {n} but vertex {} is used", needed - 1),
            ))
        }
        Some(n) => n,
        None => needed,
    };
    nonprobes.extend(f.iter().flat_map(|&(u, v)| [u, v]));
    nonprobes.sort_unstable();
    nonprobes.dedup();
    if let Some(&v) = probes.iter().find(|v| nonprobes.binary_search(v).is_ok()) {
        return Err(CliError::InvalidInstance(format!(
            "vertex {v} is listed both as a probe and as a non-probe"
        )));
    }
    let probes = (0..n).filter(|v| nonprobes.binary_search(v).is_err()).collect();
    Ok(InstanceDocument {
        n,
        edges,
        probes,
        nonprobes,
        certificate_f: (!f.is_empty()).then_some(f),
        metadata,
    })
}

fn normalise_pairs(pairs: &[(usize, usize)], n: usize, field: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(pairs.len());
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if u >= n || v >= n {
            return Err(CliError::parse(
                format!("{field}[{i}]"),
                format!("vertex out of range 0..{n}"),
            ));
        }
        if u == v {
            return Err(CliError::InvalidInstance(format!("{field}[{i}] is a loop at {u}")));
        }
        out.push((u.min(v), u.max(v)));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn normalise_ids(ids: &[usize], n: usize, field: &str) -> Result<Vec<usize>> {
    if let Some((i, v)) = ids.iter().enumerate().find(|&(_, &v)| v >= n) {
        return Err(CliError::parse(
            format!("{field}[{i}]"),
            format!("vertex {v} out of range 0..{n}"),
        ));
    }
    let mut out = ids.to_vec();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

impl InstanceDocument {
    /// Sorts and deduplicates every list, then checks the invariants.
    pub fn normalised(self) -> Result<Self> {
        let n = self.n;
        let doc = InstanceDocument {
            n,
            edges: normalise_pairs(&self.edges, n, "edges")?,
            probes: normalise_ids(&self.probes, n, "probes")?,
            nonprobes: normalise_ids(&self.nonprobes, n, "nonprobes")?,
            certificate_f: self
                .certificate_f
                .as_deref()
                .map(|f| normalise_pairs(f, n, "certificate_f"))
                .transpose()?,
            metadata: self.metadata,
        };
        let ppg = doc.probe_graph()?;
        if let Some(cert) = doc.certificate() {
            cert.check(&ppg)
                .map_err(|e| CliError::InvalidInstance(e.to_string()))?;
        }
        Ok(doc)
    }

    pub fn probe_graph(&self) -> Result<PartitionedProbeGraph> {
        let invalid = |e: probecut::Error| CliError::InvalidInstance(e.to_string());
        let g = Graph::new(self.n, &self.edges).map_err(invalid)?;
        PartitionedProbeGraph::new(g, &self.probes, &self.nonprobes).map_err(invalid)
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::new(self.n, &self.edges).map_err(|e| CliError::InvalidInstance(e.to_string()))
    }

    pub fn certificate(&self) -> Option<ProbeCertificate> {
        self.certificate_f
            .as_ref()
            .map(|f| ProbeCertificate::new(f.iter().copied()))
    }

    pub fn from_parts(
        ppg: &PartitionedProbeGraph,
        certificate: Option<&ProbeCertificate>,
        metadata: BTreeMap<String, String>,
    ) -> Self {
        InstanceDocument {
            n: ppg.n(),
            edges: ppg.graph().edges(),
            probes: ppg.probes().to_vec(),
            nonprobes: ppg.nonprobes().to_vec(),
            certificate_f: certificate.map(|c| c.edges()),
            metadata,
        }
    }

    /// All-probe document for a plain graph.
    pub fn from_graph(g: &Graph) -> Self {
        Self::from_parts(&PartitionedProbeGraph::all_probes(g.clone()), None, BTreeMap::new())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialise")
    }
}
