//! d-Cut for `d >= 2` on probe (P1+P4)-free graphs.
//!
//! Outline:
//! * colourings where all probes share a colour reduce to a single
//!   non-probe of the other colour;
//! * an induced P4 among the probes dominates the graph, so branching over
//!   its closed neighbourhood colours everything;
//! * otherwise `G[P]` is a cograph, and the search splits on the number of
//!   its components. In a connected cograph one colour class has at most
//!   `2d` vertices, which bounds every guess made below.
//!
//! Each case guesses a colouring of the probes, branches over the
//! non-probes next to the guessed minority, and finishes by giving every
//! non-probe with a monochromatic neighbourhood that colour. On promised
//! inputs nothing is left uncoloured; elsewhere such branches are dropped
//! and counted as stranded.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use super::{assign, fill_monochromatic, subsets, SolveReport};
use crate::branch::for_each_branch;
use crate::cograph::{is_p4_free, CographCheck};
use crate::colouring::{validate_total, Colour, Colouring, CutCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::probe::PartitionedProbeGraph;

/// How a non-probe meets the components `C_1, ..., C_r` of `G[P]`, `r >= 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonProbeType {
    /// Complete to `P`.
    A,
    /// Not complete to `P` but with a neighbour in every component;
    /// `incomplete` is the first component it is not complete to.
    B { incomplete: usize },
    /// Anti-complete to some component and with neighbours in at least two;
    /// `touched` lists the components it has neighbours in.
    C { touched: Vec<usize> },
    /// Neighbours in at most one component.
    D { component: Option<usize> },
}

pub fn classify_nonprobe(
    ppg: &PartitionedProbeGraph,
    components: &[Vec<usize>],
) -> Result<BTreeMap<usize, NonProbeType>> {
    let r = components.len();
    if r < 3 {
        return Err(Error::WrongCase(format!(
            "types need at least three probe components, got {r}"
        )));
    }
    let g = ppg.graph();
    let mut types = BTreeMap::new();
    for &v in ppg.nonprobes() {
        let touched: Vec<usize> = (0..r)
            .filter(|&i| !g.is_anticomplete_to(v, &components[i]))
            .collect();
        let ty = if g.is_complete_to(v, ppg.probes()) {
            NonProbeType::A
        } else if touched.len() == r {
            let incomplete = (0..r)
                .find(|&i| !g.is_complete_to(v, &components[i]))
                .expect("not complete to P");
            NonProbeType::B { incomplete }
        } else if touched.len() >= 2 {
            NonProbeType::C { touched }
        } else {
            NonProbeType::D {
                component: touched.first().copied(),
            }
        };
        types.insert(v, ty);
    }
    Ok(types)
}

fn complete_components(g: &Graph, v: usize, components: &[Vec<usize>]) -> Vec<bool> {
    components.iter().map(|c| g.is_complete_to(v, c)).collect()
}

/// A pair `(u, v)` of type-C vertices such that every component is complete
/// to `u` or to `v`. `v` has the most complete components (least id on
/// ties); `u` is the least type-C vertex that is complete to a component `v`
/// misses, shares a complete component with `v`, and covers the rest.
pub fn find_p_dominating_pair(
    ppg: &PartitionedProbeGraph,
    components: &[Vec<usize>],
    types: &BTreeMap<usize, NonProbeType>,
) -> Result<Option<(usize, usize)>> {
    if let Some((v, _)) = types
        .iter()
        .find(|(_, t)| matches!(t, NonProbeType::A | NonProbeType::B { .. }))
    {
        return Err(Error::WrongCase(format!(
            "vertex {v} is complete to P or touches every component"
        )));
    }
    let g = ppg.graph();
    let type_c: Vec<usize> = types
        .iter()
        .filter(|(_, t)| matches!(t, NonProbeType::C { .. }))
        .map(|(&v, _)| v)
        .collect();
    if type_c.is_empty() {
        return Ok(None);
    }
    let complete: BTreeMap<usize, Vec<bool>> = type_c
        .iter()
        .map(|&v| (v, complete_components(g, v, components)))
        .collect();
    let count = |v: usize| complete[&v].iter().filter(|&&c| c).count();
    let mut v = type_c[0];
    for &w in &type_c[1..] {
        if count(w) > count(v) {
            v = w;
        }
    }
    let cv = &complete[&v];
    for &u in &type_c {
        if u == v {
            continue;
        }
        let cu = &complete[&u];
        let extends = (0..components.len()).any(|i| cu[i] && !cv[i]);
        let shares = (0..components.len()).any(|i| cu[i] && cv[i]);
        let covers = (0..components.len()).all(|i| cu[i] || cv[i]);
        if extends && shares && covers {
            return Ok(Some((u, v)));
        }
    }
    Err(Error::WrongCase(format!(
        "no type-C partner for maximum type-C vertex {v}"
    )))
}

/// Decides whether the connected graph has a `d`-cut, for `d >= 2`.
pub fn solve_dcut(ppg: &PartitionedProbeGraph, d: usize) -> Result<SolveReport> {
    solve(ppg, d, false)
}

/// The case analysis without the single-non-probe check: finds exactly the
/// colourings whose probes are not monochromatic.
#[doc(hidden)]
pub fn solve_dcut_bichromatic_probes(ppg: &PartitionedProbeGraph, d: usize) -> Result<SolveReport> {
    solve(ppg, d, true)
}

fn solve(ppg: &PartitionedProbeGraph, d: usize, skip_lone: bool) -> Result<SolveReport> {
    if d < 2 {
        return Err(Error::UnsupportedD(format!(
            "d = {d}; the d-cut solver needs d >= 2 (use the matching-cut solvers for d = 1)"
        )));
    }
    let g = ppg.graph();
    if g.n() < 2 {
        let mut report = SolveReport::new();
        report.trace("too-small");
        return Ok(report);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut search = Search {
        g,
        ppg,
        d,
        report: SolveReport::new(),
        skip_lone,
    };
    let cert = match search.run()? {
        ControlFlow::Break(cert) => Some(cert),
        ControlFlow::Continue(()) => None,
    };
    Ok(search.report.found(cert))
}

type Step<'s, 'a> = &'s mut dyn FnMut(&mut Search<'a>, Colouring) -> ControlFlow<CutCertificate>;

struct Search<'a> {
    g: &'a Graph,
    ppg: &'a PartitionedProbeGraph,
    d: usize,
    report: SolveReport,
    /// Skips the single-non-probe check (used to test the case analysis on
    /// its own).
    skip_lone: bool,
}

impl<'a> Search<'a> {
    fn trace(&mut self, label: &str) {
        if !self.report.case_trace.iter().any(|l| l == label) {
            self.report.trace(label);
        }
    }

    fn run(&mut self) -> Result<ControlFlow<CutCertificate>> {
        let g = self.g;
        let probes = self.ppg.probes().to_vec();

        if !self.skip_lone {
            self.trace("monochromatic-probes");
            if let ControlFlow::Break(c) = self.lone_nonprobe() {
                return Ok(ControlFlow::Break(c));
            }
        }

        if let CographCheck::P4Witness(q) = is_p4_free(&g.induced(&probes)) {
            self.trace("probe-p4");
            let q: Vec<usize> = q.iter().map(|&i| probes[i]).collect();
            let frontier = g.closed_neighbourhood_of(&q);
            let base = Colouring::uncoloured(g.n());
            return Ok(self.branch(&base, &frontier, &mut |s, c| s.finish(c)));
        }

        let components = g.components_within(&probes);
        Ok(match components.len() {
            1 => self.one_component(&probes),
            2 => self.two_components(&components[0], &components[1]),
            _ => self.many_components(&components)?,
        })
    }

    /// Colourings with a single non-probe of one colour.
    fn lone_nonprobe(&mut self) -> ControlFlow<CutCertificate> {
        for &z in self.ppg.nonprobes() {
            for lone in [Colour::Red, Colour::Blue] {
                let colours: Vec<Colour> = (0..self.g.n())
                    .map(|v| if v == z { lone } else { lone.other() })
                    .collect();
                self.check(&colours)?;
            }
        }
        ControlFlow::Continue(())
    }

    fn check(&mut self, colours: &[Colour]) -> ControlFlow<CutCertificate> {
        self.report.branches_explored += 1;
        match validate_total(self.g, colours, self.d, false) {
            Ok(cert) => ControlFlow::Break(cert),
            Err(_) => ControlFlow::Continue(()),
        }
    }

    fn finish(&mut self, mut c: Colouring) -> ControlFlow<CutCertificate> {
        fill_monochromatic(self.g, &mut c);
        match c.total() {
            Ok(colours) => self.check(&colours),
            Err(_) => {
                self.report.stranded_branches += 1;
                ControlFlow::Continue(())
            }
        }
    }

    /// Branches over the uncoloured vertices of `frontier`, colour-processing
    /// as it goes, and hands each leaf to `next`.
    fn branch(&mut self, base: &Colouring, frontier: &[usize], next: Step<'_, 'a>) -> ControlFlow<CutCertificate> {
        let (g, d) = (self.g, self.d);
        for_each_branch(g, base, frontier, d, &mut |c| next(self, c))
    }

    /// Non-probe neighbours of a set.
    fn nonprobes_next_to(&self, set: &[usize]) -> Vec<usize> {
        self.g
            .neighbourhood_of(set)
            .into_iter()
            .filter(|&v| !self.ppg.is_probe(v))
            .collect()
    }

    fn uncoloured_after_fill(&self, c: &mut Colouring) -> Vec<usize> {
        fill_monochromatic(self.g, c);
        c.uncoloured_vertices()
    }

    /// Colours `red` red and the rest of `P` blue, then finishes after
    /// branching over the non-probes next to `red`.
    fn red_set_in_probes(&mut self, base: &Colouring, red: &[usize]) -> ControlFlow<CutCertificate> {
        let mut c = base.clone();
        for &p in self.ppg.probes() {
            let colour = if red.contains(&p) { Colour::Red } else { Colour::Blue };
            if !assign(&mut c, p, colour) {
                return ControlFlow::Continue(());
            }
        }
        let frontier = self.nonprobes_next_to(red);
        self.branch(&c, &frontier, &mut |s, c| s.finish(c))
    }

    fn one_component(&mut self, probes: &[usize]) -> ControlFlow<CutCertificate> {
        self.trace("one-component");
        let base = Colouring::uncoloured(self.g.n());
        for x in subsets(probes, 1, 2 * self.d) {
            if x.len() == probes.len() {
                continue;
            }
            self.red_set_in_probes(&base, &x)?;
        }
        ControlFlow::Continue(())
    }

    fn two_components(&mut self, c1: &[usize], c2: &[usize]) -> ControlFlow<CutCertificate> {
        self.trace("two-components");
        let n = self.g.n();
        let bound = 2 * self.d;
        for x1 in subsets(c1, 0, bound) {
            for x2 in subsets(c2, 0, bound) {
                for polarity in [Colour::Red, Colour::Blue] {
                    let mut c = Colouring::uncoloured(n);
                    for &p in c1 {
                        c.set(p, if x1.contains(&p) { Colour::Red } else { Colour::Blue });
                    }
                    for &p in c2 {
                        c.set(p, if x2.contains(&p) { polarity } else { polarity.other() });
                    }
                    let marked: Vec<usize> = x1.iter().chain(&x2).copied().collect();
                    let frontier = self.nonprobes_next_to(&marked);
                    if polarity == Colour::Red {
                        self.branch(&c, &frontier, &mut |s, c| s.finish(c))?;
                    } else {
                        self.branch(&c, &frontier, &mut |s, c| s.two_component_rest(c, c1, c2))?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// An edge `x x'` inside `component` with `x` adjacent and `x'`
    /// non-adjacent to `b`.
    fn split_edge(&self, b: usize, component: &[usize]) -> Option<(usize, usize)> {
        component.iter().find_map(|&x| {
            if !self.g.has_edge(b, x) {
                return None;
            }
            self.g
                .neighbours(x)
                .iter()
                .find(|&&y| component.contains(&y) && !self.g.has_edge(b, y))
                .map(|&y| (x, y))
        })
    }

    fn two_component_rest(&mut self, mut c: Colouring, c1: &[usize], c2: &[usize]) -> ControlFlow<CutCertificate> {
        let left = self.uncoloured_after_fill(&mut c);
        if left.is_empty() {
            return self.finish(c);
        }
        // A vertex splitting both components lies on an induced P5; the
        // neighbourhood of that P5 reaches every other uncoloured vertex.
        for &b in &left {
            if let (Some((x, x2)), Some((y, y2))) = (self.split_edge(b, c1), self.split_edge(b, c2)) {
                self.trace("two-components/p5");
                let frontier = self.nonprobes_next_to(&[x, x2, y, y2]);
                return self.branch(&c, &frontier, &mut |s, c| s.finish(c));
            }
        }
        let b = left[0];
        let whole = if self.g.is_complete_to(b, c1) {
            c1
        } else if self.g.is_complete_to(b, c2) {
            c2
        } else {
            self.report.stranded_branches += 1;
            return ControlFlow::Continue(());
        };
        self.trace("two-components/complete");
        let frontier = self.nonprobes_next_to(whole);
        self.branch(&c, &frontier, &mut |s, c| s.finish(c))
    }

    fn many_components(&mut self, components: &[Vec<usize>]) -> Result<ControlFlow<CutCertificate>> {
        self.trace("many-components");
        let types = classify_nonprobe(self.ppg, components)?;
        if let Some((&v, _)) = types.iter().find(|(_, t)| **t == NonProbeType::A) {
            return Ok(self.type_a(v));
        }
        if let Some((&v, ty)) = types.iter().find(|(_, t)| matches!(t, NonProbeType::B { .. })) {
            let NonProbeType::B { incomplete } = *ty else { unreachable!() };
            return Ok(self.type_b(v, incomplete, components, &types));
        }
        match find_p_dominating_pair(self.ppg, components, &types) {
            Ok(Some((u, v))) => Ok(self.dominating_pair(u, v, components)),
            Ok(None) | Err(Error::WrongCase(_)) => {
                self.trace("no-dominating-pair");
                Ok(ControlFlow::Continue(()))
            }
            Err(e) => Err(e),
        }
    }

    /// `v` sees all of `P`, so as a blue vertex it has at most `d` red
    /// probe neighbours.
    fn type_a(&mut self, v: usize) -> ControlFlow<CutCertificate> {
        self.trace("type-a");
        let probes = self.ppg.probes().to_vec();
        let mut base = Colouring::uncoloured(self.g.n());
        base.set(v, Colour::Blue);
        for q in subsets(&probes, 1, self.d) {
            if q.len() == probes.len() {
                continue;
            }
            self.red_set_in_probes(&base, &q)?;
        }
        ControlFlow::Continue(())
    }

    fn type_b(
        &mut self,
        v: usize,
        incomplete: usize,
        components: &[Vec<usize>],
        types: &BTreeMap<usize, NonProbeType>,
    ) -> ControlFlow<CutCertificate> {
        self.trace("type-b");
        let g = self.g;
        let around: Vec<usize> = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&p| self.ppg.is_probe(p))
            .collect();
        let special = &components[incomplete];
        for xv in subsets(&around, 0, self.d) {
            let mut base = Colouring::uncoloured(g.n());
            base.set(v, Colour::Blue);
            for &p in &around {
                base.set(p, if xv.contains(&p) { Colour::Red } else { Colour::Blue });
            }
            for x in subsets(special, 0, 2 * self.d) {
                for polarity in [Colour::Red, Colour::Blue] {
                    let mut c = base.clone();
                    let consistent = special.iter().all(|&p| {
                        let colour = if x.contains(&p) { polarity } else { polarity.other() };
                        assign(&mut c, p, colour)
                    });
                    if !consistent {
                        continue;
                    }
                    let marked: Vec<usize> = xv.iter().chain(&x).copied().collect();
                    let frontier = self.nonprobes_next_to(&marked);
                    self.branch(&c, &frontier, &mut |s, c| s.type_b_rest(c, special, components, types))?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn type_b_rest(
        &mut self,
        mut c: Colouring,
        special: &[usize],
        components: &[Vec<usize>],
        types: &BTreeMap<usize, NonProbeType>,
    ) -> ControlFlow<CutCertificate> {
        let left = self.uncoloured_after_fill(&mut c);
        if left.is_empty() {
            return self.finish(c);
        }
        let g = self.g;
        let frontier = match left
            .iter()
            .find(|b| matches!(types.get(b), Some(NonProbeType::B { .. })))
        {
            Some(&b) => {
                let covered: Vec<usize> = components
                    .iter()
                    .filter(|comp| g.is_complete_to(b, comp))
                    .flatten()
                    .copied()
                    .collect();
                self.nonprobes_next_to(&covered)
            }
            None => self.nonprobes_next_to(special),
        };
        self.branch(&c, &frontier, &mut |s, c| s.finish(c))
    }

    fn dominating_pair(&mut self, u: usize, v: usize, components: &[Vec<usize>]) -> ControlFlow<CutCertificate> {
        self.trace("dominating-pair");
        let g = self.g;
        let probes = self.ppg.probes().to_vec();

        // Both blue: together they have at most 2d red probe neighbours.
        let mut base = Colouring::uncoloured(g.n());
        base.set(u, Colour::Blue);
        base.set(v, Colour::Blue);
        for x in subsets(&probes, 1, 2 * self.d) {
            if x.len() == probes.len() {
                continue;
            }
            self.red_set_in_probes(&base, &x)?;
        }

        // u red, v blue: guess the few probe neighbours of each that take
        // the other colour.
        let probe_neighbours = |w: usize| -> Vec<usize> {
            g.neighbours(w).iter().copied().filter(|&p| self.ppg.is_probe(p)).collect()
        };
        let (around_u, around_v) = (probe_neighbours(u), probe_neighbours(v));
        for xu in subsets(&around_u, 0, self.d) {
            for xv in subsets(&around_v, 0, self.d) {
                let mut c = Colouring::uncoloured(g.n());
                c.set(u, Colour::Red);
                c.set(v, Colour::Blue);
                let from_u = around_u
                    .iter()
                    .map(|&p| (p, if xu.contains(&p) { Colour::Blue } else { Colour::Red }));
                let from_v = around_v
                    .iter()
                    .map(|&p| (p, if xv.contains(&p) { Colour::Red } else { Colour::Blue }));
                let consistent = from_u.chain(from_v).all(|(p, colour)| assign(&mut c, p, colour));
                if !consistent {
                    continue;
                }
                let marked: Vec<usize> = xu.iter().chain(&xv).copied().collect();
                let frontier = self.nonprobes_next_to(&marked);
                self.branch(&c, &frontier, &mut |s, c| s.dominating_pair_rest(c, components, &marked))?;
            }
        }
        ControlFlow::Continue(())
    }

    /// Branches over the non-probes next to one vertex of the first
    /// unmarked red component and one of the first unmarked blue component.
    fn dominating_pair_rest(
        &mut self,
        c: Colouring,
        components: &[Vec<usize>],
        marked: &[usize],
    ) -> ControlFlow<CutCertificate> {
        let first_plain = |colour: Colour| {
            components
                .iter()
                .find(|comp| {
                    comp.iter().all(|p| !marked.contains(p) && c.get(*p) == Some(colour))
                })
                .map(|comp| comp[0])
        };
        let seeds: Vec<usize> = [first_plain(Colour::Red), first_plain(Colour::Blue)]
            .into_iter()
            .flatten()
            .collect();
        let frontier = self.nonprobes_next_to(&seeds);
        self.branch(&c, &frontier, &mut |s, c| s.finish(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(g: Graph) -> PartitionedProbeGraph {
        PartitionedProbeGraph::all_probes(g)
    }

    #[test]
    fn small_examples() {
        let r = solve_dcut(&all(Graph::star(4)), 2).unwrap();
        assert!(r.answer);
        assert!(r.certificate.unwrap().revalidate(&Graph::star(4)));
        assert!(solve_dcut(&all(Graph::cycle(3)), 2).unwrap().answer);
        assert!(!solve_dcut(&all(Graph::complete(5)), 2).unwrap().answer);
        assert!(solve_dcut(&all(Graph::complete(5)), 3).unwrap().answer);
    }

    #[test]
    fn rejects_d1_and_disconnected() {
        assert!(matches!(solve_dcut(&all(Graph::path(2)), 1), Err(Error::UnsupportedD(_))));
        assert_eq!(solve_dcut(&all(Graph::empty(2)), 2).unwrap_err(), Error::NotConnected);
    }

    fn three_components() -> (PartitionedProbeGraph, Vec<Vec<usize>>) {
        // Probes 0, 1, 2 (isolated in G[P]); non-probes 3..=7.
        // 3: complete to P (A). 4: complete to {0,1} (C). 5: complete to
        // {1,2} (C). 6: only 0 (D). 7: complete to {0,2} (C).
        let g = Graph::new(
            8,
            &[(3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (5, 1), (5, 2), (6, 0), (7, 0), (7, 2)],
        )
        .unwrap();
        let ppg = PartitionedProbeGraph::new(g, &[0, 1, 2], &[3, 4, 5, 6, 7]).unwrap();
        (ppg, vec![vec![0], vec![1], vec![2]])
    }

    #[test]
    fn classification() {
        let (ppg, comps) = three_components();
        let t = classify_nonprobe(&ppg, &comps).unwrap();
        assert_eq!(t[&3], NonProbeType::A);
        assert_eq!(t[&4], NonProbeType::C { touched: vec![0, 1] });
        assert_eq!(t[&6], NonProbeType::D { component: Some(0) });
        assert!(matches!(classify_nonprobe(&ppg, &comps[..2]), Err(Error::WrongCase(_))));
    }

    #[test]
    fn type_b_when_one_component_is_partial() {
        // Components {0,1} (an edge), {2}, {3}; vertex 4 sees 0, 2, 3.
        let g = Graph::new(5, &[(0, 1), (4, 0), (4, 2), (4, 3)]).unwrap();
        let ppg = PartitionedProbeGraph::new(g, &[0, 1, 2, 3], &[4]).unwrap();
        let comps = vec![vec![0, 1], vec![2], vec![3]];
        let t = classify_nonprobe(&ppg, &comps).unwrap();
        assert_eq!(t[&4], NonProbeType::B { incomplete: 0 });
    }

    #[test]
    fn dominating_pair() {
        let (ppg, comps) = three_components();
        let mut t = classify_nonprobe(&ppg, &comps).unwrap();
        assert!(matches!(find_p_dominating_pair(&ppg, &comps, &t), Err(Error::WrongCase(_))));
        t.remove(&3);
        // All type-C vertices are complete to two components; 4 is the
        // least maximum one, and 5 covers component 2 while sharing 1.
        assert_eq!(find_p_dominating_pair(&ppg, &comps, &t).unwrap(), Some((5, 4)));
        t.retain(|_, ty| !matches!(ty, NonProbeType::C { .. }));
        assert_eq!(find_p_dominating_pair(&ppg, &comps, &t).unwrap(), None);
    }

    #[test]
    fn agrees_with_oracle_on_small_all_probe_graphs() {
        use crate::oracle::brute_dcut;
        use crate::pattern::{find_induced, Pattern};
        // Every connected (P1+P4)-free graph on 5 vertices.
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::new(5, &edges).unwrap();
            if !g.is_connected() || find_induced(&g, &Pattern::IsolatedPlusP4(1)).unwrap().is_some() {
                continue;
            }
            for d in [2, 3] {
                let r = solve_dcut(&all(g.clone()), d).unwrap();
                assert_eq!(r.answer, brute_dcut(&g, d).unwrap().is_some(), "{g:?} d={d}");
            }
        }
    }
}
