//! Law-level checks of the tail families and the two samplers: telescoping
//! identities, quantile search against linear scan, frequency bands, and the
//! distributional equality of the iid and sorted mechanisms.

use degseq_core::{
    ks_two_sample, sample_iid, sample_sorted_renyi, truncated_moment, Continuation, FamilyConfig,
    TailSpec,
};
use rand::rngs::StdRng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn panel() -> Vec<(&'static str, TailSpec)> {
    let mk = |f| TailSpec::new(f, None).unwrap();
    vec![
        ("power_law", mk(FamilyConfig::PowerLawTail { c: 1.0, alpha: 0.5 })),
        ("exact_c_over_n", mk(FamilyConfig::ExactCOverN { c: 1.0 })),
        ("exact_c2", mk(FamilyConfig::ExactCOverN { c: 2.0 })),
        (
            "perturbed",
            mk(FamilyConfig::PerturbedCOverN { c: 1.0, n0: None }),
        ),
        ("log_damped", mk(FamilyConfig::LogDamped { n0: None })),
        ("geometric", mk(FamilyConfig::Geometric { p: 0.5 })),
        ("zeta", mk(FamilyConfig::Zeta { beta: 2.5 })),
        (
            "table_trunc",
            mk(FamilyConfig::TableTail {
                tail: vec![1.0, 0.6, 0.6, 0.25, 0.1],
                continuation: Continuation::Truncate,
            }),
        ),
        (
            "table_geo",
            mk(FamilyConfig::TableTail {
                tail: vec![1.0, 0.5, 0.2],
                continuation: Continuation::Geometric { ratio: 0.5 },
            }),
        ),
    ]
}

#[test]
fn pmf_telescopes_against_the_tail() {
    for (name, spec) in panel() {
        let mut sum = 0.0;
        for n in 1..=200u64 {
            sum += spec.pmf(n).unwrap();
        }
        let residual = (sum + spec.tail(201) - 1.0).abs();
        assert!(residual < 2e-12, "{name}: residual {residual}");
    }
}

#[test]
fn quantile_agrees_with_linear_tail_scan() {
    for (name, spec) in panel() {
        for v in [0.9, 0.63, 0.5, 0.31, 0.25, 0.11, 0.05, 0.013, 0.004] {
            let fast = spec.quantile_from_unit(1.0 - v).unwrap();
            let mut slow = 1u64;
            while spec.tail(slow + 1) > v {
                slow += 1;
            }
            assert_eq!(fast, slow, "{name} at v = {v}");
        }
    }
}

#[test]
fn iid_frequencies_sit_inside_four_sigma_bands() {
    let spec = TailSpec::new(FamilyConfig::ExactCOverN { c: 1.0 }, None).unwrap();
    let draws = 300_000usize;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let seq = sample_iid(&spec, draws, &mut rng).unwrap();
    for k in [2u64, 4, 8, 16, 32] {
        let t = spec.tail(k);
        let freq = seq.values().iter().filter(|&&v| v >= k).count() as f64 / draws as f64;
        let sigma = (t * (1.0 - t) / draws as f64).sqrt();
        assert!(
            (freq - t).abs() <= 4.0 * sigma,
            "k = {k}: freq {freq} vs tail {t}"
        );
    }
}

#[test]
fn sorted_sampler_marginals_match_the_tail() {
    // exchangeable marginals: within one sorted sample, the fraction of
    // entries >= k estimates tail(k) exactly as the iid sampler does
    let spec = TailSpec::new(FamilyConfig::Zeta { beta: 2.5 }, None).unwrap();
    let draws = 300_000usize;
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let sorted = sample_sorted_renyi(&spec, draws, &mut rng).unwrap();
    for k in [2u64, 3, 5, 9] {
        let t = spec.tail(k);
        // values are nonincreasing: entries >= k form a prefix
        let count = sorted.values().partition_point(|&v| v >= k);
        let freq = count as f64 / draws as f64;
        let sigma = (t * (1.0 - t) / draws as f64).sqrt();
        assert!(
            (freq - t).abs() <= 4.0 * sigma,
            "k = {k}: freq {freq} vs tail {t}"
        );
    }
}

#[test]
fn the_two_samplers_are_distributionally_equal() {
    // multisets have one law; flattening independent sorted samples yields
    // iid-distributed collections, so two-sample KS applies as-is
    let spec = TailSpec::new(FamilyConfig::Geometric { p: 0.3 }, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut renyi_side = Vec::with_capacity(100_000);
    for _ in 0..200 {
        let s = sample_sorted_renyi(&spec, 500, &mut rng).unwrap();
        renyi_side.extend(s.values().iter().map(|&v| v as f64));
    }
    let iid_side: Vec<f64> = sample_iid(&spec, 100_000, &mut rng)
        .unwrap()
        .values()
        .iter()
        .map(|&v| v as f64)
        .collect();
    let ks = ks_two_sample(&renyi_side, &iid_side).unwrap();
    assert!(
        ks.p_value > 1e-3,
        "KS rejected equality: D = {}, p = {}",
        ks.statistic,
        ks.p_value
    );
}

#[test]
fn g_round_trips_on_table_laws() {
    let spec = TailSpec::new(
        FamilyConfig::TableTail {
            tail: vec![1.0, 0.5, 0.2],
            continuation: Continuation::Geometric { ratio: 0.5 },
        },
        None,
    )
    .unwrap();
    for n in 1..=40u64 {
        if spec.pmf(n).unwrap() > 0.0 {
            let x = spec.g_inverse(n);
            if x > 0.0 && x.is_finite() {
                assert_eq!(spec.g_of(x).unwrap(), n, "n = {n}");
            }
        }
    }
}

#[test]
fn truncated_moments_match_brute_expectations() {
    let cases: Vec<(TailSpec, u64, u8)> = vec![
        (
            TailSpec::new(FamilyConfig::Zeta { beta: 2.5 }, None).unwrap(),
            500,
            3,
        ),
        (
            TailSpec::new(FamilyConfig::ExactCOverN { c: 2.0 }, None).unwrap(),
            701,
            2,
        ),
        (
            TailSpec::new(
                FamilyConfig::TableTail {
                    tail: vec![1.0, 0.6, 0.6, 0.25, 0.1],
                    continuation: Continuation::Truncate,
                },
                None,
            )
            .unwrap(),
            9,
            4,
        ),
        (
            TailSpec::new(FamilyConfig::Geometric { p: 0.25 }, None).unwrap(),
            333,
            1,
        ),
    ];
    for (spec, j, k) in cases {
        let got = truncated_moment(&spec, j, k).unwrap();
        // E[min(j, D)^k] summed the long way: mass below j plus the j-cap
        let mut brute = 0.0f64;
        for n in 1..=j {
            brute += (n as f64).powi(k as i32) * spec.pmf(n).unwrap();
        }
        brute += (j as f64).powi(k as i32) * spec.tail(j + 1);
        assert!(
            (got - brute).abs() <= 1e-10 * brute.abs().max(1.0),
            "j = {j}, k = {k}: {got} vs {brute}"
        );
    }
}

#[test]
fn samplers_reject_what_the_cap_forbids_and_only_that() {
    let spec = TailSpec::new(FamilyConfig::ExactCOverN { c: 1.0 }, Some(64)).unwrap();
    let mut rng = StdRng::seed_from_u64(3);
    let mut overflows = 0u32;
    for _ in 0..2000 {
        match sample_iid(&spec, 10, &mut rng) {
            Ok(seq) => assert!(seq.values().iter().all(|&v| v <= 64)),
            Err(degseq_core::DistError::CapExceeded { cap }) => {
                assert_eq!(cap, 64);
                overflows += 1;
            }
            Err(other) => panic!("unexpected error {other}"),
        }
    }
    // P(one draw > 64) = 1/65 per draw, about 14% per sequence of ten
    assert!((100..600).contains(&overflows), "{overflows}");
}
