mod common;

use logtw_core::generators as gen;
use logtw_core::oracle::{
    brute_chromatic, brute_dominating_set, brute_stable_set, brute_treewidth, brute_vertex_cover,
};
use logtw_core::treedec::{
    decomposition_from_order, exact_treewidth, make_nice, min_fill_order, solve_chromatic,
    solve_dominating_set, solve_q_coloring, solve_stable_set, solve_vertex_cover,
};
use logtw_core::{Graph, TreeDecomposition};

fn random(seed: u64, max_n: usize) -> Graph {
    let n = 3 + seed as usize % (max_n - 2);
    gen::random_graph(n, [0.2, 0.3, 0.45, 0.6][seed as usize % 4], 11_000 + seed).unwrap()
}

#[test]
fn exact_treewidth_matches_oracle() {
    for seed in 0..100 {
        let g = random(seed, 10);
        let (w, td) = exact_treewidth(&g).unwrap();
        assert_eq!(w, brute_treewidth(&g).unwrap(), "seed {seed}");
        assert_eq!(td.validate(&g), Ok(()));
        assert_eq!(td.width(), w as isize);
    }
}

#[test]
fn named_treewidths() {
    let cases = [
        (gen::clique(5), 4),
        (gen::complete_bipartite(3, 3), 3),
        (gen::wall(3).unwrap(), 3),
        (gen::cycle(8), 2),
        (gen::path(6), 1),
        (gen::petersen(), 4),
        (Graph::empty(3), 0),
    ];
    for (g, w) in cases {
        assert_eq!(exact_treewidth(&g).unwrap().0, w, "{:?}", g.edges());
    }
}

#[test]
fn exact_width_is_a_lower_bound() {
    for seed in 0..40 {
        let g = random(seed, 11);
        let (w, _) = exact_treewidth(&g).unwrap();
        let heur = decomposition_from_order(&g, &min_fill_order(&g));
        let rand = decomposition_from_order(&g, &common::shuffled(g.n(), seed));
        for td in [heur, rand] {
            assert_eq!(td.validate(&g), Ok(()));
            assert!(td.width() >= w as isize);
        }
    }
}

fn decompositions(g: &Graph, seed: u64) -> Vec<TreeDecomposition> {
    let mut v = vec![
        exact_treewidth(g).unwrap().1,
        decomposition_from_order(g, &common::shuffled(g.n(), seed)),
    ];
    if g.n() <= 7 {
        v.push(TreeDecomposition::trivial(g.n()));
    }
    v
}

#[test]
fn solvers_match_oracles() {
    for seed in 0..100 {
        let g = random(seed, 12);
        let chi = brute_chromatic(&g).unwrap();
        for (i, td) in decompositions(&g, seed).into_iter().enumerate() {
            let (a, s) = solve_stable_set(&g, &td).unwrap();
            assert_eq!(a, brute_stable_set(&g).unwrap(), "seed {seed}");
            assert!(g.is_stable(&s) && s.len() == a);

            let (c, cover) = solve_vertex_cover(&g, &td).unwrap();
            assert_eq!(c, brute_vertex_cover(&g).unwrap(), "seed {seed}");
            assert_eq!(a + c, g.n());
            assert!(g.edges().iter().all(|&(u, v)| cover.contains(u) || cover.contains(v)));

            let (d, dom) = solve_dominating_set(&g, &td).unwrap();
            assert_eq!(d, brute_dominating_set(&g).unwrap(), "seed {seed}");
            assert_eq!(g.closed_neighborhood(&dom).unwrap(), g.vertices());

            // wide random-order decompositions may exceed the coloring table cap
            let (k, col) = match solve_chromatic(&g, &td) {
                Err(logtw_core::Error::CapExceeded { .. }) if i > 0 => continue,
                r => r.unwrap(),
            };
            assert_eq!(k, chi, "seed {seed}");
            assert!(g.edges().iter().all(|&(u, v)| col[u] != col[v]));
            assert!(col.iter().all(|&x| x < k));
            if chi >= 2 {
                assert!(solve_q_coloring(&g, &td, chi - 1).unwrap().is_none());
            }
        }
    }
}

#[test]
fn nice_form_keeps_width() {
    for seed in 0..50 {
        let g = random(seed, 12);
        let td = decomposition_from_order(&g, &common::shuffled(g.n(), seed + 1));
        let nice = make_nice(&g, &td).unwrap();
        assert!(nice.check_shape());
        assert_eq!(nice.width(), td.width());
        assert_eq!(nice.to_tree_decomposition().validate(&g), Ok(()));
    }
}

#[test]
fn invalid_decompositions_are_rejected() {
    let g = gen::cycle(5);
    let mut td = decomposition_from_order(&g, &[0, 1, 2, 3, 4]);
    td.bags[0] = logtw_core::VertexSet::new();
    if td.validate(&g).is_err() {
        assert!(solve_stable_set(&g, &td).is_err());
    }
    let bad = TreeDecomposition { bags: vec![[0, 1].into_iter().collect()], edges: vec![], host_n: 5 };
    assert!(bad.validate(&g).is_err());
    assert!(solve_vertex_cover(&g, &bad).is_err());
}
