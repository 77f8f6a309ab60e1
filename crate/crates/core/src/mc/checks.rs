//! Distributional cross-checks for the samplers and the theory they feed.

use rand::Rng;

use crate::dist::{DistError, TailSpec};
use crate::mc::EstimateSeries;

use super::sample_support::draw_max_iid;

/// Exact-law check of the sample maximum under iid draws.
#[derive(Debug, Clone, Copy)]
pub struct MaxLawReport {
    pub n: u64,
    pub draws: u64,
    /// sup over integer evaluation points of |ECDF - F| with
    /// F(k) = (1 - tail(k + 1))^n.
    pub sup_distance: f64,
    /// 99% Kolmogorov band 1.63 / sqrt(draws).
    pub band: f64,
    pub pass: bool,
}

/// Draws `draws` honest iid maxima of n draws each and compares their ECDF
/// with the exact distribution (1 - tail(k + 1))^n at every observed integer
/// and its left neighbor (where the discrete sup must occur).
pub fn max_law_check<R: Rng + ?Sized>(
    spec: &TailSpec,
    n: u64,
    draws: u64,
    rng: &mut R,
) -> Result<MaxLawReport, DistError> {
    if n < 1 || draws < 1 {
        return Err(DistError::InvalidArgument(
            "max_law_check needs n >= 1 and draws >= 1".into(),
        ));
    }
    let mut maxima = Vec::with_capacity(draws as usize);
    for _ in 0..draws {
        maxima.push(draw_max_iid(spec, n, rng)?);
    }
    maxima.sort_unstable();
    let mut candidates: Vec<u64> = Vec::with_capacity(2 * maxima.len());
    for &v in &maxima {
        candidates.push(v);
        if v > 1 {
            candidates.push(v - 1);
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    let mut sup = 0.0f64;
    for &k in &candidates {
        let ecdf = maxima.partition_point(|&m| m <= k) as f64 / draws as f64;
        // (1 - t)^n through ln_1p for stability at tiny tails and huge n
        let cdf = (n as f64 * (-spec.tail(k + 1)).ln_1p()).exp();
        let gap = (ecdf - cdf).abs();
        if gap > sup {
            sup = gap;
        }
    }
    let band = 1.63 / (draws as f64).sqrt();
    Ok(MaxLawReport {
        n,
        draws,
        sup_distance: sup,
        band,
        pass: sup <= band,
    })
}

/// Check of the scaled-maximum limit law M/n -> exp(-c/x) for families with
/// n tail(n) -> c.
#[derive(Debug, Clone, Copy)]
pub struct ScaledMaxReport {
    pub n: u64,
    pub draws: u64,
    /// The analytic limit constant c.
    pub c: f64,
    /// sup over the probe grid of |ECDF of M/n - exp(-c/x)|.
    pub sup_distance: f64,
    pub grid_lo: f64,
    pub grid_hi: f64,
    pub grid_points: usize,
}

/// Draws maxima through the first component of the sorted sampler (one
/// exponential and one quantile per draw, distributionally exact) and
/// compares the law of M/n against the limit exp(-c/x) on a log-spaced
/// probe grid covering quantiles from essentially 0 to 0.999.
pub fn scaled_max_limit_check<R: Rng + ?Sized>(
    spec: &TailSpec,
    n: u64,
    draws: u64,
    rng: &mut R,
) -> Result<ScaledMaxReport, DistError> {
    if n < 1 || draws < 1 {
        return Err(DistError::InvalidArgument(
            "scaled_max_limit_check needs n >= 1 and draws >= 1".into(),
        ));
    }
    let c = spec.tail_limit_c().ok_or_else(|| {
        DistError::InvalidArgument("family has no finite positive limit of n tail(n)".into())
    })?;
    let mut ratios = Vec::with_capacity(draws as usize);
    for _ in 0..draws {
        // max of n iid draws: g applied to n / E with E a unit exponential
        let e = super::sample_support::unit_exponential(rng);
        let m = spec.g_of(n as f64 / e)?;
        ratios.push(m as f64 / n as f64);
    }
    ratios.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite ratios"));
    let grid_lo = 0.02 * c;
    let grid_hi = 1000.0 * c;
    let points = 501usize;
    let step = (grid_hi / grid_lo).ln() / (points - 1) as f64;
    let mut sup = 0.0f64;
    for i in 0..points {
        let x = grid_lo * (step * i as f64).exp();
        let ecdf = ratios.partition_point(|&r| r <= x) as f64 / draws as f64;
        let limit = (-c / x).exp();
        let gap = (ecdf - limit).abs();
        if gap > sup {
            sup = gap;
        }
    }
    Ok(ScaledMaxReport {
        n,
        draws,
        c,
        sup_distance: sup,
        grid_lo,
        grid_hi,
        grid_points: points,
    })
}

/// Monte Carlo versus exact parity of the total degree.
#[derive(Debug, Clone, Copy)]
pub struct ParityReport {
    pub n: u64,
    pub trials: u64,
    /// r = P(D even) - P(D odd) for a single draw.
    pub r: f64,
    /// Exact P(sum of n iid draws is even) = (1 + r^n) / 2.
    pub exact_even: f64,
    pub observed_even: f64,
    /// Binomial standard deviation at the exact probability.
    pub sigma: f64,
    pub within_three_sigma: bool,
}

/// Compares the exact parity probability (1 + r^n)/2 with a Monte Carlo
/// frequency over fresh iid draws.
pub fn parity_check<R: Rng + ?Sized>(
    spec: &TailSpec,
    n: u64,
    trials: u64,
    rng: &mut R,
) -> Result<ParityReport, DistError> {
    if n < 1 || trials < 1 {
        return Err(DistError::InvalidArgument(
            "parity_check needs n >= 1 and trials >= 1".into(),
        ));
    }
    let r = crate::dist::parity_bias(spec)?;
    // r^n underflows harmlessly; guard the powi domain for enormous n
    let r_pow = if (n as f64) * r.abs().ln() < -745.0 {
        0.0
    } else if n <= i32::MAX as u64 {
        r.powi(n as i32)
    } else {
        0.0
    };
    let exact_even = (1.0 + r_pow) / 2.0;
    let mut even_count = 0u64;
    for _ in 0..trials {
        let mut odd_draws = 0u64;
        for _ in 0..n {
            let u: f64 = rng.gen();
            odd_draws += spec.quantile_from_unit(u)? & 1;
        }
        if odd_draws % 2 == 0 {
            even_count += 1;
        }
    }
    let observed_even = even_count as f64 / trials as f64;
    let sigma = (exact_even * (1.0 - exact_even) / trials as f64).sqrt();
    Ok(ParityReport {
        n,
        trials,
        r,
        exact_even,
        observed_even,
        sigma,
        within_three_sigma: (observed_even - exact_even).abs() <= 3.0 * sigma,
    })
}

/// Per-n check that the series is consistent with the union bound
/// P(graphical) <= (1 - tail(n))^n: wherever the bound bites (is below 1),
/// the lower confidence limit must not exceed it.
pub fn union_bound_consistent(series: &EstimateSeries, spec: &TailSpec) -> Vec<(u64, bool)> {
    series
        .rows
        .iter()
        .map(|row| {
            let bound = (row.n as f64 * (-spec.tail(row.n)).ln_1p()).exp();
            let ok = bound >= 1.0 || row.ci_low <= bound;
            (row.n, ok)
        })
        .collect()
}
