use pathpower_core::oracle::greedy_coloring_of_order;
use pathpower_core::verify::{layer_gap_bound, PairClass};
use pathpower_core::{
    check_coloring, closed_form_span, construct_optimal, decompose, hypothesis_min_k,
    lower_bound_certificate, HypothesisCheck, Layering, PathPowerGraph, Variant,
};
use proptest::prelude::*;

fn instance(max_n: usize) -> impl Strategy<Value = (usize, usize)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), 1..=n))
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..=n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn greedy_orders_give_valid_colorings_above_the_bound(
        (n, m, order, extra) in instance(14)
            .prop_flat_map(|(n, m)| (Just(n), Just(m), shuffled(n), 0u64..4))
    ) {
        let g = PathPowerGraph::new(n, m).unwrap();
        let k = hypothesis_min_k(&g) + extra;
        let c = greedy_coloring_of_order(&g, &order, k).unwrap();
        prop_assert!(check_coloring(&c).valid);

        let layering = Layering::new(g);
        let seq = c.sequence().unwrap();
        prop_assert_eq!(seq.order(), &order[..]);
        for w in order.windows(2) {
            let gap = (c.color(w[1]) - c.color(w[0])) as i64;
            prop_assert!(gap >= layer_gap_bound(&layering, k, w[0], w[1]));
        }

        let d = decompose(&layering, &c).unwrap();
        prop_assert_eq!(d.flatten(), order.clone());
        let loose = d.pair_classes.iter().filter(|&&p| p == PairClass::Loose).count();
        prop_assert_eq!(loose as i64, d.loose_lengths.iter().sum::<usize>() as i64 + d.t as i64 - 1);

        let cert = lower_bound_certificate(&layering, &c).unwrap();
        prop_assert!(cert <= c.span() as i64);
        let best = closed_form_span(&g, k, Variant::Consistent, HypothesisCheck::Strict).unwrap();
        prop_assert!(d.alpha2 >= best.alpha2_lower_bound);
        prop_assert!(c.span() as i64 >= best.value);
    }

    #[test]
    fn construction_is_optimal_far_out(
        (n, m) in instance(400).prop_filter("m <= 24", |(_, m)| *m <= 24),
        extra in 0u64..20,
    ) {
        let g = PathPowerGraph::new(n, m).unwrap();
        let k = hypothesis_min_k(&g) + extra;
        let c = construct_optimal(&g, k).unwrap();
        prop_assert!(check_coloring(&c).valid);
        let want = closed_form_span(&g, k, Variant::Consistent, HypothesisCheck::Strict).unwrap();
        prop_assert_eq!(c.span() as i64, want.value);
        prop_assert_eq!(lower_bound_certificate(&Layering::new(g), &c).unwrap(), want.value);
    }
}
