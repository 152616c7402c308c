mod common;

use common::*;
use hookdiff::cores::*;
use hookdiff::qseries::{gauss_binomial, Factor};
use hookdiff::walks::*;
use hookdiff::{Partition, Poly, QTSeries, StatParams};
use proptest::prelude::*;

fn partition_strategy(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(Partition::from_unsorted)
}

fn series_strategy(qmax: usize) -> impl Strategy<Value = QTSeries> {
    prop::collection::vec((0..=qmax, 0..3usize, -3i64..=3), 0..8).prop_map(move |terms| {
        let mut s = QTSeries::zero(qmax);
        for (q, t, c) in terms {
            s.add_term(q, t, c);
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn conjugate_is_an_involution(lam in partition_strategy(8, 8)) {
        let c = lam.conjugate();
        prop_assert_eq!(c.size(), lam.size());
        prop_assert_eq!(c.conjugate(), lam);
    }

    #[test]
    fn diagonal_pattern_sums_to_size(lam in partition_strategy(7, 7), a in 0u32..4, b in 0u32..4) {
        prop_assume!(a + b > 0);
        let p = StatParams::new(a, b).unwrap();
        prop_assert_eq!(lam.diagonal_pattern(p).iter().sum::<usize>(), lam.size());
    }

    #[test]
    fn hook_stat_matches_double_loop(lam in partition_strategy(7, 7), a in 0u32..4, b in 0u32..4) {
        prop_assume!(a + b > 0);
        let p = StatParams::new(a, b).unwrap();
        prop_assert_eq!(lam.h_stat(p), naive_h(lam.parts(), a as usize, b as usize));
    }

    #[test]
    fn quotient_round_trip(lam in partition_strategy(9, 9), m in 2usize..6) {
        let qs = quotient_and_shift(&lam, m).unwrap();
        prop_assert_eq!(qs.shift.iter().sum::<i64>(), 0);
        prop_assert_eq!(from_quotient_shift(&qs).unwrap(), lam.clone());
        let core = m_core(&lam, m).unwrap();
        prop_assert!(naive_is_core(core.parts(), m));
        prop_assert_eq!(lam.size(), core.size() + m * qs.quotient_size());
        prop_assert_eq!(shift_from_diagram(&lam, m).unwrap(), qs.shift);
    }

    #[test]
    fn rim_hook_removal_keeps_shift(lam in partition_strategy(8, 8), m in 2usize..5) {
        let shift = quotient_and_shift(&lam, m).unwrap().shift;
        for smaller in rim_hook_removals(&lam, m) {
            prop_assert_eq!(smaller.size() + m, lam.size());
            prop_assert!(smaller.is_contained_in(&lam));
            prop_assert_eq!(&quotient_and_shift(&smaller, m).unwrap().shift, &shift);
        }
    }

    #[test]
    fn departure_words_rebuild(lam in partition_strategy(6, 8), m in 2usize..5) {
        let words = departure_words(&lam, m).unwrap();
        prop_assert_eq!(rebuild(&words, m).unwrap(), lam.clone());
        prop_assert_eq!(words.inversion_total(), naive_h(lam.parts(), m - 1, 1));
    }

    #[test]
    fn alternating_sum_forms_agree(lam in partition_strategy(8, 10)) {
        let [a, b, c] = alt_sum_forms(&lam);
        prop_assert_eq!(a, b);
        prop_assert_eq!(a, c);
    }

    #[test]
    fn h20_map_round_trip(lam in partition_strategy(10, 10)) {
        let img = h20_a2_map(&lam);
        prop_assert_eq!(img.largest_repeated(2), lam.h_stat(StatParams::new(2, 0).unwrap()));
        prop_assert_eq!(h20_a2_inverse(&img), lam);
    }

    #[test]
    fn factor_then_inverse(s in series_strategy(10), q in 1usize..6, t in 0usize..3) {
        let mut x = s.clone();
        x.apply(Factor::new(q, t, 1)).unwrap();
        x.apply(Factor::inverse(q, t)).unwrap();
        prop_assert_eq!(x, s);
    }

    #[test]
    fn series_product_laws(a in series_strategy(8), b in series_strategy(8), c in series_strategy(8)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn residue_shift_keeps_quotient_size(lam in partition_strategy(7, 7), m in 2usize..4, l in 0usize..3) {
        prop_assume!(l < m);
        let moved = residue_shift(&lam, m, l).unwrap();
        prop_assert_eq!(
            quotient_and_shift(&moved, m).unwrap().quotient_size(),
            quotient_and_shift(&lam, m).unwrap().quotient_size()
        );
    }
}

#[test]
fn gauss_binomial_laws() {
    for n in 0..=12i64 {
        for k in 0..=n {
            let g = gauss_binomial(n, k);
            let ones: u64 = g.eval_one().try_into().unwrap();
            let expected: u64 = (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64);
            assert_eq!(ones, expected);
            assert!(g.is_symmetric());
            if n > 0 {
                let a = &gauss_binomial(n - 1, k - 1) + &gauss_binomial(n - 1, k).shift(k as usize);
                let b = &gauss_binomial(n - 1, k) + &gauss_binomial(n - 1, k - 1).shift((n - k) as usize);
                assert_eq!(g, a, "[{n} {k}]");
                assert_eq!(g, b, "[{n} {k}]");
            }
        }
    }
}

#[test]
fn q_binomial_display_identity() {
    let g = gauss_binomial;
    let lhs = [g(2, 1), &g(2, 1) * &g(2, 1), g(2, 1), g(3, 1), &g(3, 1) * &g(3, 1)];
    let rhs = [g(2, 1), &g(2, 1) * &g(2, 1), &g(3, 2) * &g(2, 1), g(3, 1), g(5, 1)];
    let sum = |xs: &[Poly]| xs.iter().fold(Poly::zero(), |acc, p| &acc + p);
    assert_eq!(sum(&lhs), sum(&rhs));
    assert_eq!(sum(&lhs), Poly::from_i64s(&[5, 7, 5, 2, 1]));
}
