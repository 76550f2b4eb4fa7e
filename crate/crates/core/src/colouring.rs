//! Red-blue colourings and their validation as d-cuts.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    #[inline]
    pub fn other(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Colour::Red => 'R',
            Colour::Blue => 'B',
        }
    }
}

/// A possibly partial red-blue colouring; `None` means uncoloured.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Colouring(Vec<Option<Colour>>);

impl Colouring {
    pub fn uncoloured(n: usize) -> Self {
        Colouring(vec![None; n])
    }

    pub fn from_total(colours: &[Colour]) -> Self {
        Colouring(colours.iter().copied().map(Some).collect())
    }

    pub fn from_partial(colours: Vec<Option<Colour>>) -> Self {
        Colouring(colours)
    }

    /// Colouring with `x` red and `y` blue. Panics if they overlap.
    pub fn from_pair(n: usize, pair: &PrecolouredPair) -> Self {
        let mut c = Colouring::uncoloured(n);
        for &v in &pair.x {
            c.set(v, Colour::Red);
        }
        for &v in &pair.y {
            assert!(c.get(v).is_none(), "pair sets overlap at {v}");
            c.set(v, Colour::Blue);
        }
        c
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<Colour> {
        self.0[v]
    }

    #[inline]
    pub fn set(&mut self, v: usize, c: Colour) {
        self.0[v] = Some(c);
    }

    #[inline]
    pub fn clear(&mut self, v: usize) {
        self.0[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    pub fn uncoloured_vertices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.0[v].is_none()).collect()
    }

    pub fn class(&self, colour: Colour) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.0[v] == Some(colour)).collect()
    }

    pub fn to_pair(&self) -> PrecolouredPair {
        PrecolouredPair {
            x: self.class(Colour::Red).into_iter().collect(),
            y: self.class(Colour::Blue).into_iter().collect(),
        }
    }

    /// Colours of a total colouring. Errors on the first uncoloured vertex.
    pub fn total(&self) -> Result<Vec<Colour>> {
        self.0
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(Error::PartialColouring(v)))
            .collect()
    }

    /// Exchanges red and blue.
    pub fn swapped(&self) -> Colouring {
        Colouring(self.0.iter().map(|c| c.map(Colour::other)).collect())
    }

    /// Number of neighbours of `v` coloured `colour`.
    pub fn count_neighbours(&self, g: &Graph, v: usize, colour: Colour) -> usize {
        g.neighbours(v)
            .iter()
            .filter(|&&w| self.0[w] == Some(colour))
            .count()
    }

    pub fn as_slice(&self) -> &[Option<Colour>] {
        &self.0
    }
}

impl fmt::Debug for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .0
            .iter()
            .map(|c| c.map_or('.', Colour::letter))
            .collect();
        write!(f, "Colouring({s})")
    }
}

/// A precoloured pair `(X, Y)`: `X` red, `Y` blue.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrecolouredPair {
    pub x: BTreeSet<usize>,
    pub y: BTreeSet<usize>,
}

impl PrecolouredPair {
    pub fn new(x: impl IntoIterator<Item = usize>, y: impl IntoIterator<Item = usize>) -> Result<Self> {
        let pair = PrecolouredPair {
            x: x.into_iter().collect(),
            y: y.into_iter().collect(),
        };
        if let Some(v) = pair.x.intersection(&pair.y).next() {
            return Err(Error::PreconditionViolation(format!(
                "vertex {v} is in both X and Y"
            )));
        }
        Ok(pair)
    }
}

/// A validated d-cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCertificate {
    pub colouring: Vec<Colour>,
    /// Bichromatic edges `(u, v)`, `u < v`, sorted.
    pub cut: Vec<(usize, usize)>,
    pub d: usize,
    pub perfect: bool,
    pub size: usize,
}

/// The first vertex (by id) breaking the colouring's validity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A colour class is empty.
    Monochromatic(Colour),
    TooManyOpposite { vertex: usize, count: usize, d: usize },
    /// Perfect cuts need exactly `d` opposite neighbours everywhere.
    NotExact { vertex: usize, count: usize, d: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Monochromatic(c) => {
                write!(f, "no {} vertex", if *c == Colour::Red { "red" } else { "blue" })
            }
            Violation::TooManyOpposite { vertex, count, d } => write!(
                f,
                "vertex {vertex} has {count} > {d} opposite-coloured neighbours"
            ),
            Violation::NotExact { vertex, count, d } => write!(
                f,
                "vertex {vertex} has {count} \u{2260} {d} opposite-coloured neighbours"
            ),
        }
    }
}

/// Bichromatic edges of a total colouring.
pub fn cut_edges(g: &Graph, c: &Colouring) -> Result<Vec<(usize, usize)>> {
    let colours = c.total()?;
    Ok(bichromatic(g, &colours))
}

fn bichromatic(g: &Graph, colours: &[Colour]) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| colours[u] != colours[v])
        .collect()
}

/// Checks that `c` is a (perfect) red-blue `d`-colouring of `g`.
pub fn validate_colouring(
    g: &Graph,
    c: &Colouring,
    d: usize,
    require_perfect: bool,
) -> Result<std::result::Result<CutCertificate, Violation>> {
    let colours = c.total()?;
    Ok(validate_total(g, &colours, d, require_perfect))
}

pub(crate) fn validate_total(
    g: &Graph,
    colours: &[Colour],
    d: usize,
    require_perfect: bool,
) -> std::result::Result<CutCertificate, Violation> {
    for v in 0..g.n() {
        let count = g
            .neighbours(v)
            .iter()
            .filter(|&&w| colours[w] != colours[v])
            .count();
        if count > d {
            return Err(Violation::TooManyOpposite { vertex: v, count, d });
        }
        if require_perfect && count != d {
            return Err(Violation::NotExact { vertex: v, count, d });
        }
    }
    for colour in [Colour::Red, Colour::Blue] {
        if !colours.contains(&colour) {
            return Err(Violation::Monochromatic(colour));
        }
    }
    let cut = bichromatic(g, colours);
    Ok(CutCertificate {
        colouring: colours.to_vec(),
        size: cut.len(),
        cut,
        d,
        perfect: require_perfect,
    })
}

impl CutCertificate {
    /// Re-checks the certificate against `g`.
    pub fn revalidate(&self, g: &Graph) -> bool {
        self.colouring.len() == g.n()
            && validate_total(g, &self.colouring, self.d, self.perfect).as_ref() == Ok(self)
    }
}
