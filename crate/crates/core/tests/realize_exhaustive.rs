//! Ground-truth equivalence on every small degree multiset: the inequality
//! test, the constructive realization, and brute-force graph enumeration
//! must tell one story.

use degseq_core::realize::choudum_realize_with_stats;
use degseq_core::{
    choudum_realize, exhaustive_oracle, is_graphical, realize_sequence, verify_realization,
    DegreeSequence, RealizeError,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// All nonincreasing sequences of length n over 0..=v_max.
fn all_multisets(n: usize, v_max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, hi: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let mut v = hi + 1;
        while v > 0 {
            v -= 1;
            cur.push(v);
            rec(n, v, cur, out);
            cur.pop();
        }
    }
    rec(n, v_max, &mut cur, &mut out);
    out
}

#[test]
fn every_small_multiset_agrees_with_enumeration_and_realizes() {
    let mut graphical_count = 0u64;
    let mut swap_steps = 0u64;
    for n in 1..=7usize {
        for values in all_multisets(n, n as u64 - 1) {
            let seq = DegreeSequence::new(values.clone()).unwrap();
            let truth = exhaustive_oracle(&seq).unwrap();
            assert_eq!(
                is_graphical(&seq),
                truth,
                "inequality test disagrees with enumeration on {values:?}"
            );
            if truth {
                graphical_count += 1;
                let (graph, swaps) = choudum_realize_with_stats(&seq.sorted()).unwrap();
                swap_steps += swaps;
                assert!(
                    verify_realization(&graph, &seq),
                    "realization has wrong degrees for {values:?}"
                );
                assert_eq!(graph.vertex_count(), n);
                assert_eq!(2 * graph.edge_count() as u128, seq.total());
            } else {
                assert!(matches!(
                    choudum_realize(&seq.sorted()),
                    Err(RealizeError::NotGraphical { .. })
                ));
            }
        }
    }
    // sanity on corpus size and on the replay actually needing swaps somewhere
    assert!(graphical_count > 300, "only {graphical_count} graphical");
    assert!(swap_steps > 0, "swap path never ran across the whole corpus");
}

#[test]
fn degrees_beyond_n_minus_one_are_rejected_by_both_routes() {
    let mut rng = StdRng::seed_from_u64(5150);
    for _ in 0..3000 {
        let n = rng.gen_range(1..=6usize);
        let values: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=7u64)).collect();
        let seq = DegreeSequence::new(values).unwrap();
        assert_eq!(is_graphical(&seq), exhaustive_oracle(&seq).unwrap());
    }
}

#[test]
fn oracle_refuses_large_inputs() {
    let seq = DegreeSequence::new(vec![1; 8]).unwrap();
    assert_eq!(
        exhaustive_oracle(&seq).unwrap_err(),
        RealizeError::TooLarge { n: 8 }
    );
}

#[test]
fn realization_is_deterministic() {
    let seq = DegreeSequence::new(vec![5, 5, 4, 4, 3, 3, 2, 2, 1, 1]).unwrap();
    let a = realize_sequence(&seq).unwrap();
    let b = realize_sequence(&seq).unwrap();
    assert_eq!(a.to_edge_list(), b.to_edge_list());
}

#[test]
fn realize_sequence_honors_the_input_order() {
    // unsorted input: vertex i must end up with exactly values[i] neighbors
    let values = vec![1u64, 3, 1, 2, 1];
    let seq = DegreeSequence::new(values.clone()).unwrap();
    let graph = realize_sequence(&seq).unwrap();
    assert_eq!(graph.degrees(), values.as_slice());
    assert!(verify_realization(&graph, &seq));
}

#[test]
fn moderate_sequences_realize_and_verify() {
    // beyond oracle reach: construct, then recount degrees edge by edge
    let mut rng = StdRng::seed_from_u64(31_337);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(2..=120usize);
        let values: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=(n as u64 - 1))).collect();
        let seq = DegreeSequence::new(values).unwrap();
        if !is_graphical(&seq) {
            continue;
        }
        let graph = realize_sequence(&seq).unwrap();
        assert!(verify_realization(&graph, &seq));
        done += 1;
    }
}
