//! Colour-processing: closing a precoloured pair under the forcing rules.
//!
//! R2: an uncoloured vertex with at least `d + 1` red (blue) neighbours
//! becomes red (blue). R1: a vertex with at least `d + 1` neighbours of each
//! colour makes the pair non-extendable. R1 is evaluated once R2 has reached
//! its fixpoint, which makes the outcome independent of rule order.

use crate::colouring::{Colour, Colouring, PrecolouredPair};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProcessOutcome {
    Rejected,
    Processed(PrecolouredPair),
}

pub fn colour_process(g: &Graph, pair: &PrecolouredPair, d: usize) -> ProcessOutcome {
    let mut c = Colouring::from_pair(g.n(), pair);
    if process_in_place(g, &mut c, d) {
        ProcessOutcome::Processed(c.to_pair())
    } else {
        ProcessOutcome::Rejected
    }
}

/// Worklist implementation used by the solvers. Returns `false` on rejection;
/// `c` is then left in an unspecified partially processed state.
pub fn process_in_place(g: &Graph, c: &mut Colouring, d: usize) -> bool {
    let n = g.n();
    let mut red = vec![0usize; n];
    let mut blue = vec![0usize; n];
    for v in 0..n {
        if let Some(col) = c.get(v) {
            for &w in g.neighbours(v) {
                match col {
                    Colour::Red => red[w] += 1,
                    Colour::Blue => blue[w] += 1,
                }
            }
        }
    }
    let mut queue: Vec<usize> = (0..n)
        .filter(|&v| c.get(v).is_none() && (red[v] > d || blue[v] > d))
        .collect();
    while let Some(v) = queue.pop() {
        if c.get(v).is_some() {
            continue;
        }
        let colour = match (red[v] > d, blue[v] > d) {
            (true, true) => return false,
            (true, false) => Colour::Red,
            (false, true) => Colour::Blue,
            (false, false) => unreachable!("queued vertices stay forced"),
        };
        c.set(v, colour);
        for &w in g.neighbours(v) {
            let count = match colour {
                Colour::Red => &mut red[w],
                Colour::Blue => &mut blue[w],
            };
            *count += 1;
            if *count == d + 1 && c.get(w).is_none() {
                queue.push(w);
            }
        }
    }
    (0..n).all(|v| red[v] <= d || blue[v] <= d)
}

/// Reference implementation applying one R2 step at a time; `pick` chooses
/// which of the currently forced vertices (given in id order) to colour next.
pub fn colour_process_scheduled(
    g: &Graph,
    pair: &PrecolouredPair,
    d: usize,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> ProcessOutcome {
    let mut c = Colouring::from_pair(g.n(), pair);
    loop {
        let mut forced = Vec::new();
        for v in c.uncoloured_vertices() {
            let r = c.count_neighbours(g, v, Colour::Red);
            let b = c.count_neighbours(g, v, Colour::Blue);
            if r > d && b > d {
                return ProcessOutcome::Rejected;
            }
            if r > d || b > d {
                forced.push(v);
            }
        }
        if forced.is_empty() {
            break;
        }
        let v = forced[pick(&forced) % forced.len()];
        let colour = if c.count_neighbours(g, v, Colour::Red) > d {
            Colour::Red
        } else {
            Colour::Blue
        };
        c.set(v, colour);
    }
    let r1 = (0..g.n()).any(|v| {
        c.count_neighbours(g, v, Colour::Red) > d && c.count_neighbours(g, v, Colour::Blue) > d
    });
    if r1 {
        ProcessOutcome::Rejected
    } else {
        ProcessOutcome::Processed(c.to_pair())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(x: &[usize], y: &[usize]) -> PrecolouredPair {
        PrecolouredPair::new(x.iter().copied(), y.iter().copied()).unwrap()
    }

    #[test]
    fn p3_unchanged() {
        let out = colour_process(&Graph::path(3), &pair(&[0], &[2]), 1);
        assert_eq!(out, ProcessOutcome::Processed(pair(&[0], &[2])));
    }

    #[test]
    fn centre_forced_red() {
        let out = colour_process(&Graph::path(3), &pair(&[0, 2], &[]), 1);
        assert_eq!(out, ProcessOutcome::Processed(pair(&[0, 1, 2], &[])));
    }

    #[test]
    fn k22_side_forces_other_side() {
        // Sides {0,1} and {2,3}; each of 2, 3 sees both red vertices.
        let g = Graph::complete_bipartite(2, 2);
        let out = colour_process(&g, &pair(&[0, 1], &[]), 1);
        assert_eq!(out, ProcessOutcome::Processed(pair(&[0, 1, 2, 3], &[])));
    }

    #[test]
    fn r1_rejects() {
        // Vertex 0 of K_{1,4} sees two red and two blue leaves.
        let g = Graph::star(4);
        assert_eq!(colour_process(&g, &pair(&[1, 2], &[3, 4]), 1), ProcessOutcome::Rejected);
        // With d = 2 nothing fires.
        assert_eq!(
            colour_process(&g, &pair(&[1, 2], &[3, 4]), 2),
            ProcessOutcome::Processed(pair(&[1, 2], &[3, 4]))
        );
    }

    #[test]
    fn schedules_agree_on_small_case() {
        let g = Graph::complete_bipartite(3, 3);
        let p = pair(&[0, 1], &[]);
        let a = colour_process(&g, &p, 1);
        let b = colour_process_scheduled(&g, &p, 1, |_| 0);
        let c = colour_process_scheduled(&g, &p, 1, |f| f.len() - 1);
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}
