//! Randomized invariants: relabeling never changes codes or classification,
//! and completion is idempotent whenever it succeeds.

use proptest::prelude::*;
use qp_portraits::{
    admissible_completion, classify, is_strongly_admissible, FunctionalGraph,
};

fn permute(graph: &FunctionalGraph, perm: &[usize]) -> FunctionalGraph {
    let mut succ = vec![0; graph.len()];
    for v in 0..graph.len() {
        succ[perm[v]] = perm[graph.succ()[v]];
    }
    FunctionalGraph::new(succ).unwrap()
}

fn graph_and_perm() -> impl Strategy<Value = (FunctionalGraph, Vec<usize>)> {
    (1usize..40).prop_flat_map(|n| {
        let succ = proptest::collection::vec(0..n, n);
        let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        (succ, perm).prop_map(|(s, p)| (FunctionalGraph::new(s).unwrap(), p))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_code_is_relabeling_invariant((graph, perm) in graph_and_perm()) {
        let relabeled = permute(&graph, &perm);
        prop_assert_eq!(graph.canonical_code(), relabeled.canonical_code());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn classification_is_relabeling_invariant((graph, perm) in graph_and_perm()) {
        let relabeled = permute(&graph, &perm);
        prop_assert_eq!(classify(&graph), classify(&relabeled));
    }

    #[test]
    fn completion_output_is_admissible_and_fixed((graph, _) in graph_and_perm()) {
        if let Ok(done) = admissible_completion(&graph) {
            prop_assert!(is_strongly_admissible(&done).admissible);
            let again = admissible_completion(&done).unwrap();
            prop_assert_eq!(again.succ(), done.succ());
            // The input embeds as a prefix.
            prop_assert_eq!(&done.succ()[..graph.len()], graph.succ());
        }
    }
}
