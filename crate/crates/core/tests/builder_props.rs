mod common;

use logtw_core::builder::{decompose, width_bound, Branch, BuildOptions};
use logtw_core::generators as gen;
use logtw_core::oracle::brute_treewidth;
use logtw_core::separators::ramsey;
use logtw_core::Graph;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decompose_always_validates(n in 1usize..20, p in 0.05f64..0.6, seed in any::<u64>(), t in 3usize..5) {
        let g = gen::random_graph(n, p, seed).unwrap();
        let (td, rep) = decompose(&g, t, &BuildOptions::default()).unwrap();
        prop_assert_eq!(td.validate(&g), Ok(()));
        prop_assert_eq!(rep.achieved_width, td.width());
        if rep.certified {
            prop_assert!(rep.within_bound());
        }
    }
}

#[test]
fn certified_runs_on_class_members() {
    let mut levels = 0;
    let mut balanced = 0;
    for t in [3, 4] {
        for g in common::class_corpus(t) {
            let (td, rep) = decompose(&g, t, &BuildOptions::default()).unwrap();
            assert_eq!(td.validate(&g), Ok(()));
            assert!(rep.certified, "{:?}: {:?}", g.edges(), rep.notes);
            assert!(rep.within_bound());
            assert_eq!(rep.bound, width_bound(t, g.n(), rep.delta_used, rep.hdim_used));
            if g.n() <= 12 {
                assert!(td.width() >= brute_treewidth(&g).unwrap() as isize);
            }
            let allow = ramsey(t, 4) * (4 * rep.delta_used + ramsey(t, 3));
            for l in &rep.levels {
                assert!(l.growth <= allow);
                assert!(l.core >= 1 && l.core <= l.s_prime);
            }
            levels += rep.levels.len();
            balanced += rep.branch_count(Branch::Balanced);
        }
    }
    assert!(levels >= 15 && balanced >= 15, "{levels} levels, {balanced} balanced branches");
}

#[test]
fn class_violations_are_uncertified() {
    for g in [gen::complete_bipartite(2, 3), gen::wall(4).unwrap(), gen::clique(5)] {
        let (td, rep) = decompose(&g, 4, &BuildOptions::default()).unwrap();
        assert_eq!(td.validate(&g), Ok(()));
        assert!(!rep.certified);
    }
}

#[test]
fn families_in_the_class() {
    let cases: Vec<(Graph, usize)> = vec![
        (gen::cycle(40), 3),
        (gen::path(30), 3),
        (gen::star(20), 3),
        (gen::clique(3), 4),
        (gen::prism(1, 1, 1).unwrap().complement(), 4),
    ];
    for (g, t) in cases {
        if !common::in_ct(&g, t) {
            continue;
        }
        let (td, rep) = decompose(&g, t, &BuildOptions::default()).unwrap();
        assert_eq!(td.validate(&g), Ok(()));
        assert!(rep.certified && rep.within_bound(), "{:?}", rep.notes);
    }
}
