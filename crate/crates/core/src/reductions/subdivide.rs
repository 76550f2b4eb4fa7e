//! Four-fold subdivision of cubic graphs, which preserves perfect-matching-cut
//! existence. The result is probe (claw, diamond)-free and stays subcubic
//! after adding `F`.

use super::ReductionOutput;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::probe::{PartitionedProbeGraph, ProbeCertificate};

/// The `i`-th edge `(u, v)` with `u < v` becomes the path
/// `u, n+4i, n+4i+1, n+4i+2, n+4i+3, v`. The end vertices `n+4i` and
/// `n+4i+3` are the non-probes. For each original vertex, `F` joins two of
/// its three subdivision neighbours: those of the first two neighbours in
/// `rotation` when given, else the two with least id.
///
/// When a rotation system is supplied, metadata records whether it is a
/// planar embedding; `F` then joins consecutive edges around each vertex, so
/// a planar embedding extends to `G + F`.
pub fn subdivide4(g: &Graph, rotation: Option<&[Vec<usize>]>) -> Result<ReductionOutput> {
    let n = g.n();
    if let Some(v) = (0..n).find(|&v| g.degree(v) != 3) {
        return Err(Error::NotCubic(v, g.degree(v)));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if let Some(rot) = rotation {
        check_rotation(g, rot)?;
    }
    let edges = g.edges();
    let total = n + 4 * edges.len();
    let mut out = Graph::empty(total);
    let mut nonprobes = Vec::new();
    // close[u] lists (original neighbour, subdivision vertex next to u).
    let mut close: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        let y = n + 4 * i;
        out.insert_edge(u, y);
        out.insert_edge(y, y + 1);
        out.insert_edge(y + 1, y + 2);
        out.insert_edge(y + 2, y + 3);
        out.insert_edge(y + 3, v);
        close[u].push((v, y));
        close[v].push((u, y + 3));
        nonprobes.extend([y, y + 3]);
    }
    let mut f = Vec::new();
    for (u, list) in close.iter().enumerate() {
        let pick = |w: usize| list.iter().find(|&&(x, _)| x == w).map(|&(_, y)| y).expect("neighbour");
        let (a, b) = match rotation {
            Some(rot) => (pick(rot[u][0]), pick(rot[u][1])),
            None => {
                let mut ys: Vec<usize> = list.iter().map(|&(_, y)| y).collect();
                ys.sort_unstable();
                (ys[0], ys[1])
            }
        };
        f.push((a.min(b), a.max(b)));
    }
    nonprobes.sort_unstable();
    let probes: Vec<usize> = (0..total).filter(|v| nonprobes.binary_search(v).is_err()).collect();
    let ppg = PartitionedProbeGraph::new(out, &probes, &nonprobes)?;
    let mut result = ReductionOutput::new(ppg, ProbeCertificate::new(f), "subdivide4");
    if let Some(rot) = rotation {
        result
            .metadata
            .insert("planar_embedding".into(), rotation_is_planar(g, rot)?.to_string());
    }
    Ok(result)
}

fn check_rotation(g: &Graph, rotation: &[Vec<usize>]) -> Result<()> {
    if rotation.len() != g.n() {
        return Err(Error::PreconditionViolation(format!(
            "rotation system covers {} of {} vertices",
            rotation.len(),
            g.n()
        )));
    }
    for (v, order) in rotation.iter().enumerate() {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != g.neighbours(v) {
            return Err(Error::PreconditionViolation(format!(
                "rotation at vertex {v} is not an ordering of its neighbours"
            )));
        }
    }
    Ok(())
}

/// True if the rotation system of the connected graph `g` is a planar
/// embedding, by tracing its faces and checking Euler's formula.
pub fn rotation_is_planar(g: &Graph, rotation: &[Vec<usize>]) -> Result<bool> {
    check_rotation(g, rotation)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    let position = |v: usize, w: usize| rotation[v].iter().position(|&x| x == w).expect("neighbour");
    // Darts (v, i): leaving v towards rotation[v][i].
    let mut seen: Vec<Vec<bool>> = rotation.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = 0usize;
    for v in 0..n {
        for i in 0..rotation[v].len() {
            if seen[v][i] {
                continue;
            }
            faces += 1;
            let (mut a, mut j) = (v, i);
            while !seen[a][j] {
                seen[a][j] = true;
                let b = rotation[a][j];
                let k = position(b, a);
                let next = (k + 1) % rotation[b].len();
                a = b;
                j = next;
            }
        }
    }
    let m = g.edge_count();
    Ok(n as i64 - m as i64 + faces as i64 == 2)
}
