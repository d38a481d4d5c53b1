mod common;

use minorlab_core::{are_isomorphic, canonical_form, canonical_graph, graph6, Graph, NamedGraph};
use proptest::prelude::*;

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1usize..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| common::graph_from_bits(n, &bits))
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    any_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

#[test]
fn graph6_known_strings() {
    assert_eq!(graph6::encode(&Graph::complete(2).unwrap()), "A_");
    assert_eq!(graph6::encode(&Graph::complete(3).unwrap()), "Bw");
    assert_eq!(graph6::decode("A_").unwrap(), Graph::complete(2).unwrap());
    assert_eq!(graph6::decode("Bw").unwrap(), Graph::complete(3).unwrap());
    assert!(graph6::decode("B").is_err());
}

#[test]
fn named_exceptional_graphs_have_min_degree_six() {
    for name in NamedGraph::exceptional() {
        let g = name.build().unwrap();
        assert!(g.min_degree() >= 6, "{name}");
        assert!((9..=10).contains(&g.n()), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in any_graph(40)) {
        let s = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&s).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labelling((g, perm) in graph_and_perm(12)) {
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &canonical_graph(&g)));
    }

    #[test]
    fn complement_partitions_pairs(g in any_graph(30)) {
        let n = g.n();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
        prop_assert!(g.complement().validate().is_ok());
    }

    #[test]
    fn edits_keep_invariants(g in any_graph(16), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let n = g.n();
        let v = a.index(n);
        let d = g.delete_vertex(v).unwrap();
        prop_assert!(d.validate().is_ok());
        prop_assert_eq!(d.n(), n - 1);
        prop_assert_eq!(d.edge_count(), g.edge_count() - g.degree(v));
        let edges: Vec<_> = g.edges().collect();
        if !edges.is_empty() {
            let (x, y) = edges[b.index(edges.len())];
            let c = g.contract_edge(x, y).unwrap();
            prop_assert!(c.validate().is_ok());
            prop_assert_eq!(c.n(), n - 1);
            prop_assert!(c.edge_count() < g.edge_count());
            let r = g.remove_edge(x, y).unwrap();
            prop_assert_eq!(r.edge_count() + 1, g.edge_count());
            prop_assert_eq!(r.add_edge(x, y).unwrap(), g.clone());
        }
    }
}
