mod common;

use common::{
    brute_nonsurjective_endomorphism, brute_retraction, chi_dp, pairs, preserves_edges, truth_table,
};
use ordcore::{
    compute_core, decide_core_with_k_vertices, decide_retraction, encode,
    find_ordered_homomorphism, interval_chromatic_number, is_core, is_ordered_homomorphism,
    Encoding, Lit, OrderedGraph, TwoSatInstance,
};
use proptest::prelude::*;

/// A graph on 1..=max_n vertices with each pair present independently.
fn graph(max_n: usize) -> impl Strategy<Value = OrderedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let p = pairs(n);
        proptest::collection::vec(any::<bool>(), p.len()).prop_map(move |bits| {
            OrderedGraph::new(n, p.iter().zip(&bits).filter(|(_, &b)| b).map(|(&e, _)| e)).unwrap()
        })
    })
}

fn graph_and_keep(max_n: usize) -> impl Strategy<Value = (OrderedGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n)
            .prop_map(move |keep| (g.clone(), keep))
    })
}

fn lit() -> impl Strategy<Value = Lit> {
    (0usize..8, any::<bool>()).prop_map(|(var, positive)| Lit { var, positive })
}

fn is_monotone(img: &[usize]) -> bool {
    img.windows(2).all(|w| w[0] <= w[1])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn retraction_matches_enumeration((g, keep) in graph_and_keep(7)) {
        let found = decide_retraction(&g, &keep).unwrap();
        prop_assert_eq!(found.is_some(), brute_retraction(&g, &keep).is_some());
        if let Some(f) = found {
            let img = f.image();
            prop_assert!(is_monotone(img));
            prop_assert!(keep.iter().all(|&v| img[v] == v));
            prop_assert!(img.iter().all(|t| keep.binary_search(t).is_ok()));
            prop_assert!(preserves_edges(&g, &g, img));
        }
    }

    #[test]
    fn encoding_respects_clause_bound((g, keep) in graph_and_keep(8)) {
        if let Encoding::Instance(enc) = encode(&g, &keep).unwrap() {
            prop_assert!(enc.instance().clauses().len() <= enc.decomposition().clause_bound());
        }
    }

    #[test]
    fn homomorphism_preimages_are_intervals(g in graph(6), h in graph(5)) {
        if let Some(f) = find_ordered_homomorphism(&g, &h) {
            prop_assert!(is_ordered_homomorphism(&g, &h, &f).unwrap());
            for t in f.range() {
                let pre = f.preimage(t);
                prop_assert!(!pre.is_empty());
                prop_assert!(pre.clone().all(|v| f.apply(v) == t));
                prop_assert!((0..g.vertex_count()).filter(|&v| f.apply(v) == t).count() == pre.len());
            }
        }
    }

    #[test]
    fn chi_is_optimal(g in graph(10)) {
        let (chi, part) = interval_chromatic_number(&g);
        prop_assert_eq!(chi, chi_dp(&g));
        prop_assert_eq!(part.block_count(), chi);
        prop_assert!(part.is_independent_in(&g));
        prop_assert!(chi >= 1 && chi <= g.vertex_count());
        prop_assert_eq!(chi == 1, g.edge_count() == 0);
    }

    #[test]
    fn core_is_a_core_and_idempotent(g in graph(6)) {
        let core = compute_core(&g);
        prop_assert!(brute_nonsurjective_endomorphism(&core.graph).is_none());
        let r = core.retraction.image();
        prop_assert!(is_monotone(r));
        prop_assert!(core.embedding.iter().all(|&v| r[v] == v));
        prop_assert!(preserves_edges(&g, &g, r));
        prop_assert_eq!(compute_core(&core.graph).graph, core.graph.clone());
        prop_assert_eq!(is_core(&g), core.embedding.len() == g.vertex_count());
    }

    #[test]
    fn core_size_bound_matches_core(g in graph(6), k in 1usize..6) {
        prop_assume!(k < g.vertex_count());
        let size = compute_core(&g).embedding.len();
        let w = decide_core_with_k_vertices(&g, k).unwrap();
        prop_assert_eq!(w.is_some(), size <= k);
        if let Some(w) = w {
            prop_assert_eq!(w.vertices.len(), size);
        }
    }

    #[test]
    fn two_sat_matches_truth_table(clauses in proptest::collection::vec((lit(), lit()), 0..24)) {
        let inst = TwoSatInstance::with_clauses(8, clauses).unwrap();
        let model = inst.solve();
        prop_assert_eq!(model.is_some(), truth_table(&inst));
        if let Some(a) = model {
            prop_assert!(inst.check(&a).unwrap());
        }
    }
}
