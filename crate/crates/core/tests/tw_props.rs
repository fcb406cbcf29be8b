mod common;

use common::{chromatic_by_enumeration, domination_numbers};
use graphlogic::generate::{gnp_with, partial_2_tree, rng};
use graphlogic::tw::decomposition::from_elimination_order;
use graphlogic::tw::{
    decompose, make_nice, min_coloring_dp, min_coloring_exact, solve_coloring_dp, solve_domination_dp,
    solve_domination_exact, ColoringVariant, DominationVariant, ExactCaps, Strategy as TdStrategy, TreeDecomposition,
};
use graphlogic::Graph;
use proptest::prelude::*;
use rand::Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>(), 0.1f64..0.8).prop_map(|(n, seed, p)| gnp_with(n, p, &mut rng(seed)))
}

/// Treewidth as the best width over every elimination order.
fn treewidth_by_orders(g: &Graph) -> usize {
    common::permutations(g.n())
        .iter()
        .map(|order| from_elimination_order(g, order).width())
        .min()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn heuristics_never_beat_exact(g in arb_graph(9)) {
        let exact = decompose(&g, TdStrategy::ExactSmall).unwrap();
        for s in [TdStrategy::MinDegree, TdStrategy::MinFill] {
            let td = decompose(&g, s).unwrap();
            td.validate(&g).unwrap();
            prop_assert!(td.width() >= exact.width());
        }
    }

    #[test]
    fn pace_round_trip(g in arb_graph(12), fill in any::<bool>()) {
        let td = decompose(&g, if fill { TdStrategy::MinFill } else { TdStrategy::MinDegree }).unwrap();
        let (back, n) = TreeDecomposition::from_pace(&td.to_pace(g.n())).unwrap();
        prop_assert_eq!(n, g.n());
        prop_assert_eq!(&back, &td);
        back.validate(&g).unwrap();
    }

    #[test]
    fn nice_form_keeps_validity(g in arb_graph(10)) {
        let td = decompose(&g, TdStrategy::MinFill).unwrap();
        let nd = make_nice(&td).unwrap();
        nd.validate(&g).unwrap();
        nd.as_tree_decomposition().validate(&g).unwrap();
        prop_assert_eq!(nd.width(), td.width());
    }

    #[test]
    fn partial_2_trees_are_valid(n in 0usize..60, seed in any::<u64>()) {
        let (g, td) = partial_2_tree(n, seed);
        prop_assert_eq!(g.n(), n);
        td.validate(&g).unwrap();
        prop_assert!(td.width() <= 2);
    }
}

#[test]
fn exact_width_matches_order_search() {
    let mut r = rng(31);
    for _ in 0..200 {
        let g = gnp_with(r.gen_range(0..=6), r.gen_range(0.2..0.8), &mut r);
        assert_eq!(decompose(&g, TdStrategy::ExactSmall).unwrap().width(), treewidth_by_orders(&g));
    }
}

#[test]
fn domination_dp_matches_enumeration() {
    let mut r = rng(32);
    let variants = [DominationVariant::Dom, DominationVariant::TotalDom, DominationVariant::ConnectedDom];
    for _ in 0..200 {
        let g = gnp_with(r.gen_range(0..=9), r.gen_range(0.15..0.7), &mut r);
        let nd = make_nice(&decompose(&g, TdStrategy::MinDegree).unwrap()).unwrap();
        let oracle = domination_numbers(&g);
        for (variant, want) in variants.into_iter().zip(oracle) {
            let dp = solve_domination_dp(&g, &nd, variant).unwrap();
            let ex = solve_domination_exact(&g, variant, ExactCaps::default()).unwrap();
            assert_eq!(dp.as_ref().map(|d| d.size), want, "{variant} dp");
            assert_eq!(ex.as_ref().map(|d| d.size), want, "{variant} exact");
            assert!(dp.is_none_or(|d| d.certified));
        }
    }
}

#[test]
fn coloring_dp_matches_enumeration() {
    let mut r = rng(33);
    for _ in 0..200 {
        let g = gnp_with(r.gen_range(0..=8), r.gen_range(0.2..0.8), &mut r);
        let nd = make_nice(&decompose(&g, TdStrategy::MinFill).unwrap()).unwrap();
        let chi = chromatic_by_enumeration(&g);
        let dp = min_coloring_dp(&g, &nd).unwrap();
        assert!(dp.certified);
        assert_eq!(dp.k, chi);
        let ex = min_coloring_exact(&g, ColoringVariant::Proper, ExactCaps::default()).unwrap().unwrap();
        assert_eq!(ex.k, chi);
        if chi > 1 {
            assert!(solve_coloring_dp(&g, &nd, chi - 1).unwrap().is_none());
        }
    }
}

#[test]
fn dp_rejects_foreign_decomposition() {
    let g = Graph::cycle(5);
    let nd = make_nice(&decompose(&Graph::path(5), TdStrategy::MinDegree).unwrap()).unwrap();
    assert!(solve_domination_dp(&g, &nd, DominationVariant::Dom).is_err());
}
