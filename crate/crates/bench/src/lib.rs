//! Deterministic input generators shared by the benchmarks.

use degseq_core::{
    is_graphical_sorted, sample_sorted_renyi, FamilyConfig, SortedDegrees, TailSpec,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Sorted geometric(1/2) sample of length n.
pub fn geometric_sorted(n: usize, seed: u64) -> SortedDegrees {
    let spec = TailSpec::new(FamilyConfig::Geometric { p: 0.5 }, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_sorted_renyi(&spec, n, &mut rng).unwrap()
}

/// Sorted c/n sample of length n.
pub fn c_over_n_sorted(n: usize, seed: u64) -> SortedDegrees {
    let spec = TailSpec::new(FamilyConfig::ExactCOverN { c: 1.0 }, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_sorted_renyi(&spec, n, &mut rng).unwrap()
}

/// First graphical geometric(1/2) sample of length n at or after the seed.
pub fn graphical_sorted(n: usize, seed: u64) -> SortedDegrees {
    let spec = TailSpec::new(FamilyConfig::Geometric { p: 0.5 }, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let s = sample_sorted_renyi(&spec, n, &mut rng).unwrap();
        if is_graphical_sorted(&s) {
            return s;
        }
    }
}
