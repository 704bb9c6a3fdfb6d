use std::collections::BTreeSet;

use logtw_core::generators as gen;
use logtw_core::holes::enumerate_holes;
use logtw_core::oracle::brute_count_holes;
use logtw_core::{Graph, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(prop::bool::weighted(0.35), pairs).prop_map(move |bits| {
            let mut es = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        es.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &es).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn neighbourhoods_are_symmetric(g in graph_strategy(14)) {
        for v in 0..g.n() {
            let nv = g.open_neighborhood(&VertexSet::singleton(v)).unwrap();
            prop_assert!(!nv.contains(v));
            for u in 0..g.n() {
                prop_assert_eq!(g.adj(v).contains(u), g.adj(u).contains(v));
            }
        }
    }

    #[test]
    fn components_partition(g in graph_strategy(14), mask in any::<u16>()) {
        let removed: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let comps = g.components(&removed);
        let mut seen = VertexSet::new();
        for c in &comps {
            prop_assert!(!c.is_empty());
            prop_assert!(seen.is_disjoint(c));
            prop_assert!(g.is_connected_set(c));
            seen.union_with(c);
        }
        prop_assert_eq!(seen, g.vertices().difference(&removed));
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i + 1..] {
                prop_assert!(g.is_anticomplete_between(a, b).unwrap());
            }
        }
    }

    #[test]
    fn degeneracy_order_removes_min_degree(g in graph_strategy(14)) {
        let (order, d) = g.degeneracy_order();
        prop_assert_eq!(order.len(), g.n());
        let mut left = g.vertices();
        let mut worst = 0;
        for &v in &order {
            let deg = |x: usize| g.adj(x).intersection_len(&left);
            let min = left.iter().map(deg).min().unwrap();
            prop_assert_eq!(deg(v), min);
            worst = worst.max(min);
            left.remove(v);
        }
        prop_assert_eq!(worst, d);
    }

    #[test]
    fn shortest_paths_are_induced(g in graph_strategy(14), a in 0usize..14, b in 0usize..14) {
        prop_assume!(a < g.n() && b < g.n());
        if let Some(p) = g.shortest_path(a, b, &VertexSet::new()) {
            prop_assert_eq!(p[0], a);
            prop_assert_eq!(*p.last().unwrap(), b);
            prop_assert!(g.is_induced_path(&p));
        } else {
            prop_assert!(g.components(&VertexSet::new()).iter().all(|c| !(c.contains(a) && c.contains(b))));
        }
    }

    #[test]
    fn holes_match_subset_search(g in graph_strategy(10)) {
        let holes = enumerate_holes(&g, g.n()).unwrap();
        prop_assert_eq!(holes.len(), brute_count_holes(&g).unwrap());
        for h in &holes {
            prop_assert!(g.is_hole(h));
        }
    }

    #[test]
    fn vertex_sets_match_btreeset(xs in prop::collection::vec(0usize..200, 0..40), ys in prop::collection::vec(0usize..200, 0..40)) {
        let a: VertexSet = xs.iter().copied().collect();
        let b: VertexSet = ys.iter().copied().collect();
        let sa: BTreeSet<usize> = xs.iter().copied().collect();
        let sb: BTreeSet<usize> = ys.iter().copied().collect();
        prop_assert_eq!(a.to_vec(), sa.iter().copied().collect::<Vec<_>>());
        prop_assert_eq!(a.union(&b).to_vec(), sa.union(&sb).copied().collect::<Vec<_>>());
        prop_assert_eq!(a.intersection(&b).to_vec(), sa.intersection(&sb).copied().collect::<Vec<_>>());
        prop_assert_eq!(a.difference(&b).to_vec(), sa.difference(&sb).copied().collect::<Vec<_>>());
        prop_assert_eq!(a.is_subset(&b), sa.is_subset(&sb));
        prop_assert_eq!(a.is_disjoint(&b), sa.is_disjoint(&sb));
        prop_assert_eq!(a.first(), sa.first().copied());
        prop_assert_eq!(a.last(), sa.last().copied());
    }

    #[test]
    fn induced_subgraphs_lift(g in graph_strategy(14), mask in any::<u16>()) {
        let keep: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let ind = g.induced(&keep);
        prop_assert_eq!(ind.graph.n(), keep.len());
        for (u, v) in ind.graph.edges() {
            prop_assert!(g.has_edge(ind.parent(u), ind.parent(v)));
        }
        let m = keep.iter().map(|v| g.adj(v).intersection_len(&keep)).sum::<usize>() / 2;
        prop_assert_eq!(ind.graph.m(), m);
        prop_assert_eq!(ind.lift(&ind.localize(&keep)), keep);
    }
}

#[test]
fn named_families_have_expected_shape() {
    assert_eq!(gen::petersen().m(), 15);
    assert_eq!(gen::line_graph(&gen::path(4)).edges(), gen::path(3).edges());
    let w = gen::wall(5).unwrap();
    assert!(w.max_degree() <= 3 && w.is_connected());
    assert!(gen::wall(1).is_err());
}
