//! Wilson intervals and two-sample Kolmogorov–Smirnov.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StatsError {
    #[error("empty sample")]
    EmptySample,
}

/// Standard normal quantile by Wichura's PPND16 rational approximations,
/// accurate to about one ulp over (0, 1).  Checked against tabulated
/// quantiles in tests.
pub(crate) fn probit(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "probit needs p in (0, 1), got {p}");
    fn rational(r: f64, num: &[f64; 8], den: &[f64; 7]) -> f64 {
        let mut top = num[7];
        for c in num[..7].iter().rev() {
            top = top * r + c;
        }
        let mut bot = den[6];
        for c in den[..6].iter().rev() {
            bot = bot * r + c;
        }
        top / (bot * r + 1.0)
    }
    const A: [f64; 8] = [
        3.3871328727963666080e0,
        1.3314166789178437745e2,
        1.9715909503065514427e3,
        1.3731693765509461125e4,
        4.5921953931549871457e4,
        6.7265770927008700853e4,
        3.3430575583588128105e4,
        2.5090809287301226727e3,
    ];
    const B: [f64; 7] = [
        4.2313330701600911252e1,
        6.8718700749205790830e2,
        5.3941960214247511077e3,
        2.1213794301586595867e4,
        3.9307895800092710610e4,
        2.8729085735721942674e4,
        5.2264952788528545610e3,
    ];
    const C: [f64; 8] = [
        1.42343711074968357734e0,
        4.63033784615654529590e0,
        5.76949722146069140550e0,
        3.64784832476320460504e0,
        1.27045825245236838258e0,
        2.41780725177450611770e-1,
        2.27238449892691845833e-2,
        7.74545014278341407640e-4,
    ];
    const D: [f64; 7] = [
        2.05319162663775882187e0,
        1.67638483018380384940e0,
        6.89767334985100004550e-1,
        1.48103976427480074590e-1,
        1.51986665636164571966e-2,
        5.47593808499534494600e-4,
        1.05075007164441684324e-9,
    ];
    const E: [f64; 8] = [
        6.65790464350110377720e0,
        5.46378491116411436990e0,
        1.78482653991729133580e0,
        2.96560571828504891230e-1,
        2.65321895265761230930e-2,
        1.24266094738807843860e-3,
        2.71155556874348757815e-5,
        2.01033439929228813265e-7,
    ];
    const F: [f64; 7] = [
        5.99832206555887937690e-1,
        1.36929880922735805310e-1,
        1.48753612908506148525e-2,
        7.86869131145613259100e-4,
        1.84631831751005468180e-5,
        1.42151175831644588870e-7,
        2.04426310338993978564e-15,
    ];
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        return q * rational(r, &A, &B);
    }
    let r = if q < 0.0 { p } else { 1.0 - p };
    let r = (-r.ln()).sqrt();
    let z = if r <= 5.0 {
        rational(r - 1.6, &C, &D)
    } else {
        rational(r - 5.0, &E, &F)
    };
    if q < 0.0 {
        -z
    } else {
        z
    }
}

/// Wilson score interval for a binomial proportion.
///
/// Well behaved at zero successes and small trial counts, which is exactly
/// where the normal interval fails; the engine reports these bounds next to
/// every estimate.
pub fn wilson_ci(successes: u64, trials: u64, confidence: f64) -> (f64, f64) {
    assert!(trials >= 1, "wilson_ci needs at least one trial");
    assert!(successes <= trials, "successes exceed trials");
    assert!(
        confidence > 0.0 && confidence < 1.0,
        "confidence must lie in (0, 1), got {confidence}"
    );
    let n = trials as f64;
    let p = successes as f64 / n;
    let z = probit(0.5 + confidence / 2.0);
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Result of a two-sample KS comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsResult {
    pub statistic: f64,
    pub p_value: f64,
}

/// Two-sample Kolmogorov–Smirnov with the asymptotic p-value.
///
/// Ties are handled by advancing both samples past each tied value before
/// the ECDF gap is measured.  The p-value is the Kolmogorov series
/// 2 sum (-1)^(k-1) exp(-2 k^2 lambda^2) truncated at 100 terms with
/// lambda = D sqrt(nm / (n + m)); for lambda below 0.04 the survival is 1 to
/// double precision.
pub fn ks_two_sample(xs: &[f64], ys: &[f64]) -> Result<KsResult, StatsError> {
    if xs.is_empty() || ys.is_empty() {
        return Err(StatsError::EmptySample);
    }
    let mut a = xs.to_vec();
    let mut b = ys.to_vec();
    a.sort_unstable_by(|p, q| p.partial_cmp(q).expect("samples must be NaN free"));
    b.sort_unstable_by(|p, q| p.partial_cmp(q).expect("samples must be NaN free"));
    let (n, m) = (a.len(), b.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < n && j < m {
        let v = a[i].min(b[j]);
        while i < n && a[i] == v {
            i += 1;
        }
        while j < m && b[j] == v {
            j += 1;
        }
        let gap = (i as f64 / n as f64 - j as f64 / m as f64).abs();
        if gap > d {
            d = gap;
        }
    }
    let nm = n as f64 * m as f64 / (n + m) as f64;
    let lambda = d * nm.sqrt();
    Ok(KsResult {
        statistic: d,
        p_value: kolmogorov_survival(lambda),
    })
}

/// Q(lambda) = P(sup |B(t)| > lambda) for the Brownian bridge.
pub(crate) fn kolmogorov_survival(lambda: f64) -> f64 {
    if lambda < 0.04 {
        return 1.0;
    }
    let l2 = lambda * lambda;
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=100u32 {
        let term = (-2.0 * (k as f64) * (k as f64) * l2).exp();
        if term < 1e-300 {
            break;
        }
        sum += sign * term;
        sign = -sign;
    }
    (2.0 * sum).clamp(0.0, 1.0)
}
