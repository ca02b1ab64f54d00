mod common;

use std::time::Duration;

use common::{arb_connected_graph, arb_tree, chromatic_number, naive_is_locating};
use locating::bounds::new_bound;
use locating::coloring::is_locating;
use locating::extremal::build_extremal_tree;
use locating::solver::{
    exists_locating_k_coloring, locating_chromatic_number, lower_bound, naive_oracle_chi_l, tree_degree_lower_bound,
};
use locating::trees::free_trees;
use locating::{Error, Graph, LowerBound, SearchConfig};
use proptest::prelude::*;

fn chi(g: &Graph) -> usize {
    locating_chromatic_number(g, &SearchConfig::default()).unwrap().chi_l
}

fn unbroken() -> SearchConfig {
    SearchConfig {
        symmetry_breaking: false,
        ..SearchConfig::default()
    }
}

#[test]
fn p4_decisions() {
    let cfg = SearchConfig::default();
    assert_eq!(exists_locating_k_coloring(&Graph::path(4), 2, &cfg).unwrap(), None);
    let f = exists_locating_k_coloring(&Graph::path(4), 3, &cfg).unwrap().unwrap();
    assert_eq!(f.k(), 3);
    assert!(is_locating(&Graph::path(4), &f).unwrap().is_locating());
}

#[test]
fn named_graphs() {
    assert_eq!(chi(&Graph::cycle(7)), 3);
    assert_eq!(chi(&Graph::cycle(4)), 4);
    assert_eq!(chi(&Graph::complete(5)), 5);
    assert_eq!(chi(&Graph::star(4)), 5);
    assert_eq!(naive_oracle_chi_l(&Graph::path(3)).unwrap(), 3);
    assert_eq!(naive_oracle_chi_l(&Graph::path(2)).unwrap(), 2);
}

#[test]
fn small_extremal_trees_are_solved() {
    for k in 3..=4 {
        let t = build_extremal_tree(k).unwrap();
        let cfg = SearchConfig::default();
        let f = exists_locating_k_coloring(&t.graph, k, &cfg).unwrap().unwrap();
        assert!(is_locating(&t.graph, &f).unwrap().is_locating());
        assert_eq!(exists_locating_k_coloring(&t.graph, k - 1, &cfg).unwrap(), None);
        let result = locating_chromatic_number(&t.graph, &cfg).unwrap();
        assert_eq!(result.chi_l, k);
    }
}

#[test]
fn trees_on_eight_vertices_match_the_oracle() {
    let trees = free_trees(8);
    assert_eq!(trees.len(), 23);
    for t in &trees {
        assert_eq!(chi(t), naive_oracle_chi_l(t).unwrap());
    }
}

#[test]
fn certificate_and_bookkeeping() {
    for t in free_trees(7) {
        let r = locating_chromatic_number(&t, &SearchConfig::default()).unwrap();
        assert_eq!(r.certificate.k(), r.chi_l);
        assert!(r.certificate.is_surjective());
        assert!(naive_is_locating(&t, r.certificate.colors(), r.chi_l));
        assert!(r.lower_bound <= r.chi_l);
        assert_eq!((r.lower_bound, r.lower_bound_used), lower_bound(&t).unwrap());
        assert!(r.nodes_explored >= 1);
        // every k below the answer is exhaustively absent
        for k in r.lower_bound..r.chi_l {
            assert_eq!(exists_locating_k_coloring(&t, k, &SearchConfig::default()).unwrap(), None);
        }
    }
}

#[test]
fn lower_bound_tags() {
    assert_eq!(lower_bound(&Graph::path(1)).unwrap(), (1, LowerBound::None));
    assert_eq!(lower_bound(&Graph::path(2)).unwrap(), (2, LowerBound::Edge));
    assert_eq!(lower_bound(&Graph::cycle(5)).unwrap(), (3, LowerBound::SmallOrder));
    assert_eq!(lower_bound(&Graph::star(13)).unwrap(), (5, LowerBound::TreeDegree));
    assert_eq!(tree_degree_lower_bound(36).unwrap(), 5);
    assert_eq!(tree_degree_lower_bound(12).unwrap(), 4);
    assert_eq!(tree_degree_lower_bound(13).unwrap(), 5);
    assert_eq!(tree_degree_lower_bound(1).unwrap(), 3);
    assert!(matches!(tree_degree_lower_bound(0), Err(Error::Input(_))));
}

#[test]
fn two_colors_never_locate_three_vertices() {
    // the bound that starts the schedule at 3, checked against the oracle
    for n in 3..=7 {
        for t in free_trees(n) {
            assert!(naive_oracle_chi_l(&t).unwrap() >= 3);
        }
    }
    for n in 3..=7 {
        assert!(naive_oracle_chi_l(&Graph::cycle(n)).unwrap() >= 3);
        assert!(naive_oracle_chi_l(&Graph::complete(n)).unwrap() >= 3);
    }
}

#[test]
fn resource_limits_are_typed() {
    let g = build_extremal_tree(4).unwrap().graph;
    let cfg = SearchConfig {
        node_limit: Some(10),
        ..SearchConfig::default()
    };
    match locating_chromatic_number(&g, &cfg) {
        Err(Error::ResourceLimit { lower, upper, nodes }) => {
            assert_eq!((lower, upper), (4, 31));
            assert!(nodes > 10);
        }
        other => panic!("expected a resource limit, got {other:?}"),
    }
    match exists_locating_k_coloring(&g, 4, &cfg) {
        Err(Error::ResourceLimit { lower, upper, .. }) => assert_eq!((lower, upper), (4, 31)),
        other => panic!("expected a resource limit, got {other:?}"),
    }
    let timed = SearchConfig {
        time_limit: Some(Duration::ZERO),
        ..SearchConfig::default()
    };
    assert!(matches!(locating_chromatic_number(&g, &timed), Err(Error::Input(_))));
    let quick = SearchConfig {
        time_limit: Some(Duration::from_secs(60)),
        ..SearchConfig::default()
    };
    assert_eq!(locating_chromatic_number(&Graph::path(6), &quick).unwrap().chi_l, 3);
}

#[test]
fn preconditions() {
    let cfg = SearchConfig::default();
    let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    assert!(matches!(locating_chromatic_number(&split, &cfg), Err(Error::Connectivity(_))));
    assert!(matches!(exists_locating_k_coloring(&split, 2, &cfg), Err(Error::Connectivity(_))));
    assert!(matches!(locating_chromatic_number(&Graph::path(1), &cfg), Err(Error::Input(_))));
    assert!(matches!(exists_locating_k_coloring(&Graph::path(3), 4, &cfg), Err(Error::Input(_))));
    assert!(matches!(naive_oracle_chi_l(&Graph::path(13)), Err(Error::Input(_))));
}

#[test]
fn symmetry_breaking_keeps_every_decision() {
    for n in 2..=8 {
        for t in free_trees(n) {
            for k in 1..=n {
                let on = exists_locating_k_coloring(&t, k, &SearchConfig::default()).unwrap();
                let off = exists_locating_k_coloring(&t, k, &unbroken()).unwrap();
                assert_eq!(on.is_some(), off.is_some(), "n={n} k={k} tree={:?}", t.edges().collect::<Vec<_>>());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sandwich(g in arb_connected_graph(2, 8)) {
        let r = locating_chromatic_number(&g, &SearchConfig::default()).unwrap();
        prop_assert!(chromatic_number(&g) <= r.chi_l);
        prop_assert!(r.chi_l <= g.vertex_count());
        prop_assert_eq!(r.chi_l, naive_oracle_chi_l(&g).unwrap());
    }

    #[test]
    fn complete_multipartite_needs_every_color(parts in proptest::collection::vec(1usize..4, 2..5)) {
        let g = Graph::complete_multipartite(&parts);
        prop_assert_eq!(chi(&g), g.vertex_count());
    }

    #[test]
    fn general_graphs_agree_with_and_without_symmetry_breaking(g in arb_connected_graph(2, 8)) {
        let on = locating_chromatic_number(&g, &SearchConfig::default()).unwrap();
        let off = locating_chromatic_number(&g, &unbroken()).unwrap();
        prop_assert_eq!(on.chi_l, off.chi_l);
    }

    #[test]
    fn deterministic(g in arb_connected_graph(2, 10)) {
        let cfg = SearchConfig::default();
        prop_assert_eq!(
            locating_chromatic_number(&g, &cfg).unwrap(),
            locating_chromatic_number(&g, &cfg).unwrap()
        );
    }

    #[test]
    fn random_trees_match_the_oracle(t in arb_tree(2, 10)) {
        prop_assert_eq!(chi(&t), naive_oracle_chi_l(&t).unwrap());
    }

    #[test]
    fn tree_degree_bound_holds(t in arb_tree(4, 12)) {
        let r = locating_chromatic_number(&t, &SearchConfig::default()).unwrap();
        prop_assert!(t.max_degree().unwrap() as u64 <= new_bound(r.chi_l).unwrap());
    }
}
