//! Property tests over randomly generated connected graphs.

mod common;

use common::literal_doubly_resolving;
use drs_core::constructive::construct_diametral;
use drs_core::resolve::is_doubly_resolving_set;
use drs_core::{generate, verify_doubly_resolving, Graph, GraphSpec, VertexSet};
use proptest::prelude::*;

/// Random connected graph: a tree, a unicyclic graph, or a connected G(n, p),
/// fully determined by the generated tuple.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0usize..3, 2usize..=max_n, any::<u64>()).prop_map(|(kind, n, seed)| {
        let spec = match kind {
            0 => GraphSpec::RandomTree(n),
            1 => GraphSpec::RandomUnicyclic(n.max(3)),
            _ => GraphSpec::RandomConnected { n, p: 0.4 },
        };
        generate(spec, seed).unwrap()
    })
}

/// Graph plus a subset of its vertices with at least two members.
fn arb_graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    (arb_graph(max_n), any::<u32>()).prop_map(|(g, mask)| {
        let n = g.n();
        let mut members: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if members.len() < 2 {
            members = vec![0, 1];
        }
        let set = VertexSet::new(members, n).unwrap();
        (g, set)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn edge_list_round_trip(g in arb_graph(10)) {
        let text = g.to_edge_list_string();
        let back = Graph::parse(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn json_round_trip(g in arb_graph(10)) {
        let text = g.to_json_string();
        let back = Graph::parse(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn distances_are_a_metric(g in arb_graph(10)) {
        let dm = g.distance_matrix().unwrap();
        let n = g.n();
        for u in 0..n {
            prop_assert_eq!(dm.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                }
            }
        }
        let max = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .map(|(u, v)| dm.get(u, v))
            .max()
            .unwrap();
        prop_assert_eq!(dm.diam(), max);
    }

    #[test]
    fn twins_share_distances_and_partition_is_complete(g in arb_graph(9)) {
        let tp = g.twin_partition();
        let dm = g.distance_matrix().unwrap();
        for class in &tp.classes {
            for pair in class.members.windows(2) {
                let (u, v) = (pair[0], pair[1]);
                for w in g.vertices() {
                    if w != u && w != v {
                        prop_assert_eq!(dm.get(u, w), dm.get(v, w));
                    }
                }
            }
        }
        prop_assert!(tp.uncovered_twin_pairs(&g).is_empty());
    }

    #[test]
    fn cycle_structure_partitions_unicyclic_vertices(
        n in 3usize..=12, seed in any::<u64>(),
    ) {
        let g = generate(GraphSpec::RandomUnicyclic(n), seed).unwrap();
        let cs = g.cycle_structure().unwrap();
        let mut seen = vec![false; n];
        for &v in &cs.cycle {
            prop_assert!(!seen[v]);
            seen[v] = true;
        }
        for (anchor, hanging) in &cs.attachments {
            prop_assert!(cs.on_cycle(*anchor));
            for &v in hanging {
                prop_assert!(!seen[v]);
                seen[v] = true;
            }
        }
        prop_assert!(seen.into_iter().all(|s| s));
        // The cycle really is one: consecutive entries adjacent, wrap included.
        for i in 0..cs.m() {
            let (a, b) = (cs.cycle[i], cs.cycle[(i + 1) % cs.m()]);
            prop_assert!(g.has_edge(a, b));
        }
    }

    #[test]
    fn verifier_matches_literal_definition((g, set) in arb_graph_and_set(8)) {
        let dm = g.distance_matrix().unwrap();
        let fast = is_doubly_resolving_set(&dm, &set).unwrap();
        prop_assert_eq!(fast, literal_doubly_resolving(&g, set.members()));
    }

    #[test]
    fn failure_witness_has_constant_differences((g, set) in arb_graph_and_set(8)) {
        let dm = g.distance_matrix().unwrap();
        if let Some(wit) = verify_doubly_resolving(&dm, &set).unwrap().witness() {
            for w in set.iter() {
                prop_assert_eq!(
                    dm.get(wit.u, w) as i64 - dm.get(wit.v, w) as i64,
                    wit.constant
                );
            }
        }
    }

    #[test]
    fn supersets_of_resolving_sets_resolve((g, set) in arb_graph_and_set(8)) {
        let dm = g.distance_matrix().unwrap();
        if is_doubly_resolving_set(&dm, &set).unwrap() {
            let all = VertexSet::new(g.vertices(), g.n()).unwrap();
            prop_assert!(is_doubly_resolving_set(&dm, &set.union(&all)).unwrap());
            // Doubly resolving implies resolving in the ordinary sense.
            prop_assert!(drs_core::is_resolving_set(&dm, &set).unwrap());
        }
    }

    #[test]
    fn diametral_construction_verifies(g in arb_graph(12)) {
        prop_assume!(g.n() >= 3);
        let dm = g.distance_matrix().unwrap();
        let set = construct_diametral(&g, &dm).unwrap();
        prop_assert_eq!(set.len(), g.n() - dm.diam() as usize + 1);
        prop_assert!(is_doubly_resolving_set(&dm, &set).unwrap());
    }
}
