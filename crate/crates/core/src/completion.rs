//! Exact completion of a 1-precoloured pair whose uncoloured vertices form an
//! independent set.
//!
//! Each uncoloured vertex `u` has at most one red and at most one blue
//! neighbour, all coloured. Colouring `u` opposite to a neighbour `w` makes
//! the edge `uw` bichromatic and uses up `w`'s single allowance of an
//! opposite-coloured neighbour. Both completions reduce to bipartite matching
//! between uncoloured vertices and the coloured neighbours whose allowance
//! is still free.

use crate::colouring::{validate_total, Colour, Colouring, CutCertificate, PrecolouredPair};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::Matcher;

struct Prepared {
    colouring: Colouring,
    uncoloured: Vec<usize>,
    /// Opposite-coloured coloured neighbours of each coloured vertex.
    opposite: Vec<usize>,
}

fn prepare(g: &Graph, pair: &PrecolouredPair) -> Result<Prepared> {
    if !g.is_connected() {
        return Err(Error::PreconditionViolation("graph is not connected".into()));
    }
    for &v in pair.x.iter().chain(pair.y.iter()) {
        if v >= g.n() {
            return Err(Error::PreconditionViolation(format!("vertex {v} out of range")));
        }
    }
    let colouring = Colouring::from_pair(g.n(), pair);
    let uncoloured = colouring.uncoloured_vertices();
    if !g.is_independent(&uncoloured) {
        return Err(Error::PreconditionViolation(
            "uncoloured vertices are not independent".into(),
        ));
    }
    for &u in &uncoloured {
        for col in [Colour::Red, Colour::Blue] {
            if colouring.count_neighbours(g, u, col) > 1 {
                return Err(Error::PreconditionViolation(format!(
                    "uncoloured vertex {u} has several {col:?} neighbours"
                )));
            }
        }
    }
    let opposite = (0..g.n())
        .map(|v| match colouring.get(v) {
            Some(col) => colouring.count_neighbours(g, v, col.other()),
            None => 0,
        })
        .collect();
    Ok(Prepared {
        colouring,
        uncoloured,
        opposite,
    })
}

fn neighbour_of_colour(g: &Graph, c: &Colouring, u: usize, col: Colour) -> Option<usize> {
    g.neighbours(u).iter().copied().find(|&w| c.get(w) == Some(col))
}

/// Completes the pair to a red-blue 1-colouring with the most bichromatic
/// edges, or returns `None` if no valid completion exists.
pub fn complete_independent_max_cut(
    g: &Graph,
    pair: &PrecolouredPair,
) -> Result<Option<CutCertificate>> {
    let Prepared {
        mut colouring,
        uncoloured,
        opposite,
    } = prepare(g, pair)?;
    if opposite.iter().any(|&k| k > 1) {
        return Ok(None);
    }
    // Right side of the matching: coloured vertices with a free allowance.
    let free = |w: usize| opposite[w] == 0;
    let mut edges = Vec::new();
    let mut mandatory = Vec::new();
    let mut optional = Vec::new();
    for (i, &u) in uncoloured.iter().enumerate() {
        let red = neighbour_of_colour(g, &colouring, u, Colour::Red);
        let blue = neighbour_of_colour(g, &colouring, u, Colour::Blue);
        for w in [red, blue].into_iter().flatten() {
            if free(w) {
                edges.push((i, w));
            }
        }
        // With neighbours of both colours, either choice cuts exactly one
        // edge, so `u` must be matched.
        if red.is_some() && blue.is_some() {
            mandatory.push(i);
        } else {
            optional.push(i);
        }
    }
    let mut matcher = Matcher::new(uncoloured.len(), g.n(), &edges);
    for &i in &mandatory {
        if !matcher.augment(i) {
            return Ok(None);
        }
    }
    for &i in &optional {
        matcher.augment(i);
    }
    for (i, &u) in uncoloured.iter().enumerate() {
        let colour = match matcher.partner_of_left(i) {
            Some(w) => colouring.get(w).expect("partners are coloured").other(),
            None => {
                let w = g.neighbours(u)[0];
                colouring.get(w).expect("neighbours of U are coloured")
            }
        };
        colouring.set(u, colour);
    }
    debug_assert!(matcher.size() >= mandatory.len());
    let colours = colouring.total()?;
    Ok(validate_total(g, &colours, 1, false).ok())
}

/// Completes the pair to a perfect red-blue 1-colouring if one exists.
pub fn complete_independent_perfect(
    g: &Graph,
    pair: &PrecolouredPair,
) -> Result<Option<CutCertificate>> {
    let Prepared {
        mut colouring,
        uncoloured,
        mut opposite,
    } = prepare(g, pair)?;
    // A vertex with a single neighbour must take the other colour.
    let mut remaining = Vec::new();
    for &u in &uncoloured {
        if g.degree(u) == 1 {
            let w = g.neighbours(u)[0];
            let col = colouring.get(w).expect("neighbours of U are coloured");
            colouring.set(u, col.other());
            opposite[w] += 1;
            opposite[u] = 1;
        } else {
            remaining.push(u);
        }
    }
    if opposite.iter().any(|&k| k > 1) {
        return Ok(None);
    }
    // Every remaining vertex has one red and one blue neighbour; it must be
    // matched to one that still needs its opposite-coloured neighbour.
    let mut edges = Vec::new();
    for (i, &u) in remaining.iter().enumerate() {
        for &w in g.neighbours(u) {
            if opposite[w] == 0 {
                edges.push((i, w));
            }
        }
    }
    let mut matcher = Matcher::new(remaining.len(), g.n(), &edges);
    for i in 0..remaining.len() {
        if !matcher.augment(i) {
            return Ok(None);
        }
    }
    for (i, &u) in remaining.iter().enumerate() {
        let w = matcher.partner_of_left(i).expect("all matched");
        let col = colouring.get(w).expect("partners are coloured");
        colouring.set(u, col.other());
    }
    let colours = colouring.total()?;
    Ok(validate_total(g, &colours, 1, true).ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(x: &[usize], y: &[usize]) -> PrecolouredPair {
        PrecolouredPair::new(x.iter().copied(), y.iter().copied()).unwrap()
    }

    #[test]
    fn empty_remainder_is_validated() {
        let g = Graph::path(2);
        let cert = complete_independent_max_cut(&g, &pair(&[0], &[1])).unwrap().unwrap();
        assert_eq!(cert.size, 1);
        assert_eq!(complete_independent_max_cut(&g, &pair(&[0, 1], &[])).unwrap(), None);
    }

    #[test]
    fn p3_with_red_centre() {
        // Extensions of centre-red on P3: RRR (invalid, monochromatic),
        // BRR and RRB (size 1), BRB (centre has two blue neighbours).
        let g = Graph::path(3);
        let cert = complete_independent_max_cut(&g, &pair(&[1], &[])).unwrap().unwrap();
        assert_eq!(cert.size, 1);
    }

    #[test]
    fn dependent_remainder_rejected() {
        let g = Graph::path(4);
        assert!(matches!(
            complete_independent_max_cut(&g, &pair(&[0], &[3])),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(matches!(
            complete_independent_perfect(&g, &pair(&[0], &[3])),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn perfect_k2() {
        let cert = complete_independent_perfect(&Graph::path(2), &pair(&[0], &[1]))
            .unwrap()
            .unwrap();
        assert_eq!(cert.cut, vec![(0, 1)]);
        assert!(cert.perfect);
    }

    #[test]
    fn perfect_c3_none() {
        let g = Graph::cycle(3);
        for (x, y) in [(vec![0], vec![1]), (vec![0, 1], vec![]), (vec![0], vec![])] {
            let p = pair(&x, &y);
            if let Ok(res) = complete_independent_perfect(&g, &p) {
                assert_eq!(res, None);
            }
        }
    }

    #[test]
    fn perfect_p4_from_processed_seed() {
        // ({0},{1}) on P4 processes to itself; vertex 3 is then the only
        // vertex left after also fixing 2 blue.
        let g = Graph::path(4);
        let cert = complete_independent_perfect(&g, &pair(&[0], &[1, 2])).unwrap().unwrap();
        assert_eq!(cert.colouring, vec![Colour::Red, Colour::Blue, Colour::Blue, Colour::Red]);
        assert_eq!(cert.size, 2);
    }

    #[test]
    fn perfect_needs_the_right_matching() {
        // P6 with 1 red and 3, 4 blue. Vertex 0 is forced blue and uses up 1;
        // vertex 5 is forced red and uses up 4; vertex 2 must then serve 3.
        use Colour::*;
        let g = Graph::path(6);
        let cert = complete_independent_perfect(&g, &pair(&[1], &[3, 4])).unwrap().unwrap();
        assert_eq!(cert.colouring, vec![Blue, Red, Red, Blue, Blue, Red]);
        // P5 has an odd number of vertices, so no perfect matching cut.
        assert_eq!(
            complete_independent_perfect(&Graph::path(5), &pair(&[1], &[3])).unwrap(),
            None
        );
    }
}
