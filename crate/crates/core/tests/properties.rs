use probecut::cograph::is_p4_free;
use probecut::colouring::{Colour, Colouring, PrecolouredPair};
use probecut::graph::Graph;
use probecut::oracle::{brute_dcut, brute_mmc, brute_pmc, count_valid_colourings};
use probecut::pattern::{find_induced, Pattern};
use probecut::process::{colour_process, ProcessOutcome};
use probecut::reductions::moshi_double;
use probecut::solvers::{solve_dcut, solve_mmc, solve_pmc};
use probecut::PartitionedProbeGraph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", |g| g.n() >= 2 && g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cograph_check_matches_search(g in graph(9)) {
        let check = is_p4_free(&g);
        let found = find_induced(&g, &Pattern::Path(4)).unwrap();
        prop_assert_eq!(check.is_cograph(), found.is_none());
        if let probecut::cograph::CographCheck::P4Witness(p) = check {
            for w in p.windows(2) {
                prop_assert!(g.has_edge(w[0], w[1]));
            }
            prop_assert!(!g.has_edge(p[0], p[2]) && !g.has_edge(p[1], p[3]) && !g.has_edge(p[0], p[3]));
        }
    }

    #[test]
    fn complement_is_involution(g in graph(9)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(is_p4_free(&g).is_cograph(), is_p4_free(&g.complement()).is_cograph());
    }

    #[test]
    fn oracle_certificates_validate(g in connected(9), d in 1usize..=3) {
        if let Some(cert) = brute_dcut(&g, d).unwrap() {
            prop_assert!(cert.revalidate(&g));
        }
        if let Some(cert) = brute_pmc(&g).unwrap() {
            prop_assert!(cert.revalidate(&g) && cert.perfect);
            prop_assert_eq!(cert.size * 2, g.n());
        }
    }

    #[test]
    fn valid_colourings_grow_with_d(g in connected(8)) {
        let mut last = 0;
        for d in 1..=3 {
            let count = count_valid_colourings(&g, d, false).unwrap();
            prop_assert!(count >= last);
            prop_assert_eq!(count > 0, brute_dcut(&g, d).unwrap().is_some());
            last = count;
        }
    }

    #[test]
    fn processing_only_adds(g in connected(10), d in 1usize..=2, x in 0usize..10, y in 0usize..10) {
        let n = g.n();
        let (x, y) = (x % n, y % n);
        prop_assume!(x != y);
        let pair = PrecolouredPair::new([x], [y]).unwrap();
        if let ProcessOutcome::Processed(out) = colour_process(&g, &pair, d) {
            prop_assert!(out.x.contains(&x) && out.y.contains(&y));
            prop_assert_eq!(colour_process(&g, &out, d), ProcessOutcome::Processed(out.clone()));
            let c = Colouring::from_pair(n, &out);
            for v in c.uncoloured_vertices() {
                prop_assert!(c.count_neighbours(&g, v, Colour::Red) <= d);
                prop_assert!(c.count_neighbours(&g, v, Colour::Blue) <= d);
            }
        }
    }

    /// Solvers validate before answering, so "yes" is sound on any input.
    #[test]
    fn solver_yes_is_sound(g in connected(9), d in 2usize..=3) {
        let ppg = PartitionedProbeGraph::all_probes(g.clone());
        let r = solve_dcut(&ppg, d).unwrap();
        if let Some(cert) = r.certificate {
            prop_assert!(r.answer && cert.revalidate(&g));
        }
        let r = solve_mmc(&ppg, 2).unwrap();
        if let Some(cert) = r.certificate {
            prop_assert!(cert.revalidate(&g));
            prop_assert!(cert.size <= brute_mmc(&g).unwrap().unwrap().size);
        }
        let r = solve_pmc(&ppg, 2).unwrap();
        if let Some(cert) = r.certificate {
            prop_assert!(cert.revalidate(&g) && cert.perfect);
        }
    }

    #[test]
    fn doubling_shape(g in connected(7)) {
        let out = moshi_double(&g).unwrap();
        let m = g.edge_count();
        prop_assert_eq!(out.ppg.n(), g.n() + 2 * m);
        prop_assert_eq!(out.ppg.graph().edge_count(), 4 * m);
        prop_assert_eq!(out.ppg.nonprobes().len(), 2 * m);
        prop_assert!(out.certificate.check(&out.ppg).is_ok());
    }
}
