//! Frozen behavior for canonical codes, admissibility, completion,
//! classification, catalog containment, and the JSON interchange format.

use qp_portraits::{
    admissible_completion, catalog_contains, catalog_graph, classify, is_strongly_admissible,
    parse_graph_json, FunctionalGraph, PortraitError, PortraitLabel,
};

fn g(succ: Vec<usize>) -> FunctionalGraph {
    FunctionalGraph::new(succ).unwrap()
}

/// Applies the relabeling v -> perm[v].
fn permute(graph: &FunctionalGraph, perm: &[usize]) -> FunctionalGraph {
    let mut succ = vec![0; graph.len()];
    for v in 0..graph.len() {
        succ[perm[v]] = perm[graph.succ()[v]];
    }
    FunctionalGraph::new(succ).unwrap()
}

#[test]
fn code_of_fixed_point_is_stable() {
    let a = g(vec![0]);
    let b = g(vec![0]);
    assert_eq!(a.canonical_code(), b.canonical_code());
}

#[test]
fn codes_agree_on_relabeled_fifty_vertex_graph() {
    // Deterministic xorshift keeps the test reproducible.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let n = 50;
    let succ: Vec<usize> = (0..n).map(|_| (next() % n as u64) as usize).collect();
    let base = g(succ);
    for _ in 0..4 {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, (next() % (i as u64 + 1)) as usize);
        }
        assert_eq!(base.canonical_code(), permute(&base, &perm).canonical_code());
    }
}

#[test]
fn codes_separate_leaf_placements() {
    // Two parents split across the 2-cycle vs. stacked on one vertex.
    let split = g(vec![1, 0, 0, 1]);
    let stacked = g(vec![1, 0, 0, 0]);
    assert_ne!(split.canonical_code(), stacked.canonical_code());
}

#[test]
fn four_cycle_is_not_admissible() {
    let report = is_strongly_admissible(&g(vec![1, 2, 3, 0]));
    assert!(!report.admissible);
    assert!(report.violations.iter().any(|v| v.contains("in-degree")));
}

#[test]
fn completed_four_cycle_is_admissible() {
    let completed = g(vec![1, 2, 3, 0, 0, 1, 2, 3]);
    assert!(is_strongly_admissible(&completed).admissible);
}

#[test]
fn empty_graph_is_admissible() {
    assert!(is_strongly_admissible(&FunctionalGraph::empty()).admissible);
}

#[test]
fn completion_of_four_cycle_matches_catalog() {
    let done = admissible_completion(&g(vec![1, 2, 3, 0])).unwrap();
    assert_eq!(done.len(), 8);
    assert_eq!(classify(&done), PortraitLabel::P8_4);
}

#[test]
fn completion_fixes_admissible_graphs() {
    let already = g(vec![1, 0, 0, 1]);
    let done = admissible_completion(&already).unwrap();
    assert_eq!(done.succ(), already.succ());
}

#[test]
fn completion_of_single_fixed_point_is_minimal_two_fixed_shape() {
    let done = admissible_completion(&g(vec![0])).unwrap();
    assert_eq!(done.len(), 4);
    assert_eq!(classify(&done), PortraitLabel::P4_11);
}

#[test]
fn completion_rejects_excess_cycles() {
    // Three fixed points exceed the bound of two.
    assert!(matches!(
        admissible_completion(&g(vec![0, 1, 2])),
        Err(PortraitError::CycleBound { .. })
    ));
}

#[test]
fn classify_recognizes_every_catalog_graph() {
    for label in PortraitLabel::all_named() {
        let graph = catalog_graph(label).unwrap();
        assert_eq!(classify(graph), *label, "misclassified {label}");
    }
}

#[test]
fn classify_returns_other_off_catalog() {
    // The boundary shape at c = 0: 0 and 1 fixed, -1 -> 1.
    let got = classify(&g(vec![0, 1, 1]));
    assert!(matches!(got, PortraitLabel::Other(_)));
}

#[test]
fn classify_empty_graph() {
    assert_eq!(classify(&FunctionalGraph::empty()), PortraitLabel::Empty);
}

#[test]
fn catalog_vertex_counts_and_admissibility() {
    let expected: &[(PortraitLabel, usize)] = &[
        (PortraitLabel::Empty, 0),
        (PortraitLabel::P4_11, 4),
        (PortraitLabel::P4_2, 4),
        (PortraitLabel::P6_11, 6),
        (PortraitLabel::P6_2, 6),
        (PortraitLabel::P6_3, 6),
        (PortraitLabel::P8_211, 8),
        (PortraitLabel::P8_11a, 8),
        (PortraitLabel::P8_11b, 8),
        (PortraitLabel::P8_2a, 8),
        (PortraitLabel::P8_2b, 8),
        (PortraitLabel::P10_211a, 10),
        (PortraitLabel::P10_211b, 10),
        (PortraitLabel::P8_3, 8),
        (PortraitLabel::P8_4, 8),
        (PortraitLabel::P10_311, 10),
        (PortraitLabel::P10_32, 10),
    ];
    assert_eq!(expected.len(), PortraitLabel::all_named().len());
    for (label, count) in expected {
        let graph = catalog_graph(label).unwrap();
        assert_eq!(graph.len(), *count, "vertex count for {label}");
        assert!(
            is_strongly_admissible(graph).admissible,
            "{label} fails admissibility"
        );
    }
}

#[test]
fn containment_examples() {
    assert!(catalog_contains(&PortraitLabel::P8_211, &PortraitLabel::P4_2).unwrap());
    assert!(!catalog_contains(&PortraitLabel::P4_11, &PortraitLabel::P4_2).unwrap());
    for label in PortraitLabel::all_named() {
        assert!(catalog_contains(label, label).unwrap(), "reflexivity for {label}");
        assert!(
            catalog_contains(label, &PortraitLabel::Empty).unwrap(),
            "empty embeds in {label}"
        );
    }
    let other = classify(&g(vec![0, 1, 1]));
    assert!(catalog_contains(&other, &PortraitLabel::Empty).is_err());
}

#[test]
fn expected_containment_among_small_shapes() {
    use PortraitLabel::*;
    // 6(1,1) grows out of 4(1,1); 6(2) out of 4(2); 8(2,1,1) holds both
    // 4-vertex shapes.
    assert!(catalog_contains(&P6_11, &P4_11).unwrap());
    assert!(catalog_contains(&P6_2, &P4_2).unwrap());
    assert!(catalog_contains(&P8_211, &P4_11).unwrap());
    assert!(!catalog_contains(&P6_3, &P4_11).unwrap());
    assert!(!catalog_contains(&P4_2, &P8_211).unwrap());
}

#[test]
fn label_display_and_parse_roundtrip() {
    let display: &[(&PortraitLabel, &str, &str)] = &[
        (&PortraitLabel::Empty, "∅", "empty"),
        (&PortraitLabel::P4_11, "4(1,1)", "4_1_1"),
        (&PortraitLabel::P4_2, "4(2)", "4_2"),
        (&PortraitLabel::P6_11, "6(1,1)", "6_1_1"),
        (&PortraitLabel::P6_2, "6(2)", "6_2"),
        (&PortraitLabel::P6_3, "6(3)", "6_3"),
        (&PortraitLabel::P8_211, "8(2,1,1)", "8_2_1_1"),
        (&PortraitLabel::P8_11a, "8(1,1)a", "8_1_1a"),
        (&PortraitLabel::P8_11b, "8(1,1)b", "8_1_1b"),
        (&PortraitLabel::P8_2a, "8(2)a", "8_2a"),
        (&PortraitLabel::P8_2b, "8(2)b", "8_2b"),
        (&PortraitLabel::P10_211a, "10(2,1,1)a", "10_2_1_1a"),
        (&PortraitLabel::P10_211b, "10(2,1,1)b", "10_2_1_1b"),
        (&PortraitLabel::P8_3, "8(3)", "8_3"),
        (&PortraitLabel::P8_4, "8(4)", "8_4"),
        (&PortraitLabel::P10_311, "10(3,1,1)", "10_3_1_1"),
        (&PortraitLabel::P10_32, "10(3,2)", "10_3_2"),
    ];
    for (label, pretty, underscore) in display {
        assert_eq!(&label.to_string(), pretty);
        assert_eq!(&pretty.parse::<PortraitLabel>().unwrap(), *label);
        assert_eq!(&underscore.parse::<PortraitLabel>().unwrap(), *label);
    }
    assert!("8_5".parse::<PortraitLabel>().is_err());
}

#[test]
fn json_roundtrip_preserves_structure() {
    let mut graph = g(vec![1, 0, 0, 1]);
    graph.set_vertex_label(0, "1/2");
    graph.set_vertex_label(1, "-3/2");
    graph.set_vertex_label(2, "3/2");
    graph.set_vertex_label(3, "-1/2");
    let text = graph.to_json(&PortraitLabel::P4_2);
    let (back, label) = parse_graph_json(&text).unwrap();
    assert_eq!(label, "4(2)");
    assert_eq!(back.succ(), graph.succ());
    assert_eq!(back.vertex_label(0), Some("1/2"));
    assert_eq!(back.canonical_code(), graph.canonical_code());
}

#[test]
fn json_parser_rejects_malformed_graphs() {
    assert!(parse_graph_json("not json").is_err());
    // Vertex 1 has two out-edges.
    let bad = r#"{"vertices":["",""],"edges":[[1,0],[1,1]],"label":"x"}"#;
    assert!(parse_graph_json(bad).is_err());
    // Out-of-range target.
    let bad = r#"{"vertices":["",""],"edges":[[0,5],[1,1]],"label":"x"}"#;
    assert!(parse_graph_json(bad).is_err());
    // Missing out-edge for vertex 0.
    let bad = r#"{"vertices":["",""],"edges":[[1,1]],"label":"x"}"#;
    assert!(parse_graph_json(bad).is_err());
}
