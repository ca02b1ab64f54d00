mod common;

use common::{arb_connected_graph, arb_graph_with_coloring};
use locating::coloring::color_codes;
use locating::extremal::build_extremal_tree;
use locating::io::{
    format_coloring_json, format_coloring_text, format_edge_list, format_labels_json, parse_coloring,
    parse_edge_list, parse_labels_json, to_dot, PALETTE,
};
use locating::{Error, Graph};
use proptest::prelude::*;

#[test]
fn edge_list_parse_errors_name_the_position() {
    let cases = [
        ("", 1, 1),
        ("3\n", 1, 1),
        ("3 2\n0 1\n1 x\n", 3, 3),
        ("2 1\n0 2\n", 2, 3),
        ("2 1\n1 1\n", 2, 1),
        ("2 1\n0 1\n0 1\n", 3, 1),
    ];
    for (text, line, column) in cases {
        match parse_edge_list(text) {
            Err(Error::Parse { line: l, column: c, .. }) => assert_eq!((l, c), (line, column), "{text:?}"),
            other => panic!("{text:?}: expected a parse error, got {other:?}"),
        }
    }
}

#[test]
fn t5_artifacts_round_trip() {
    let t5 = build_extremal_tree(5).unwrap();
    let g = parse_edge_list(&format_edge_list(&t5.graph)).unwrap();
    assert_eq!(g, t5.graph);
    let f = parse_coloring(&format_coloring_json(&t5.coloring)).unwrap();
    assert_eq!(f, t5.coloring);
    let labels = parse_labels_json(&format_labels_json(&t5.labels)).unwrap();
    assert_eq!(labels.len(), 127);
    assert_eq!(labels[0].label, "x");
    assert!(labels.iter().enumerate().all(|(i, e)| e.id == i));
}

#[test]
fn dot_marks_classes_and_codes() {
    let t3 = build_extremal_tree(3).unwrap();
    let codes = color_codes(&t3.graph, &t3.coloring).unwrap();
    let names: Vec<String> = t3.labels.iter().map(ToString::to_string).collect();
    let dot = to_dot(&t3.graph, Some(&t3.coloring), Some(&names), Some(&codes));
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains(&format!("0 [label=\"x\", fillcolor=\"{}\", tooltip=\"(0,1,1)\"];", PALETTE[0])));
    assert_eq!(dot.matches(" -- ").count(), t3.graph.edge_count());
    let plain = to_dot(&Graph::path(2), None, None, None);
    assert!(plain.contains("0 [label=\"0\"];"));
}

proptest! {
    #[test]
    fn edge_lists_round_trip(g in arb_connected_graph(1, 20)) {
        prop_assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn colorings_round_trip((_g, f) in arb_graph_with_coloring(arb_connected_graph(1, 20))) {
        prop_assert_eq!(parse_coloring(&format_coloring_json(&f)).unwrap(), f.clone());
        prop_assert_eq!(parse_coloring(&format_coloring_text(&f)).unwrap(), f);
    }
}
