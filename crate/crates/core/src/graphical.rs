//! Erdős–Gallai graphicality test.
//!
//! A nonincreasing sequence m_1 >= ... >= m_n with even total is graphical
//! iff for every cut index j in 1..=n
//!
//! ```text
//!     sum_{i<=j} m_i  <=  j(j-1) + sum_{i>j} min(j, m_i).
//! ```
//!
//! Two routes through the same inequality are exposed on purpose.
//! [`erdos_gallai_ok`] decides the conjunction scanning only up to the Durfee
//! index s = max { j : m_j >= j } and exits at the first violation: for
//! j >= s the difference RHS - LHS grows by 2j - 2 m_{j+1} >= 0 per step, so
//! indices past s can never introduce a violation.  [`eg_margin`] evaluates
//! every index and reports the exact worst slack, which both serves
//! diagnostics and cross-checks the range reduction in tests.
//!
//! All quantities are exact integers: LHS/RHS in `u128`, margins in `i128`.

use crate::seq::SortedDegrees;

/// Worst Erdős–Gallai slack over all cut indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EgMargin {
    /// max over j of LHS(j) - RHS(j); positive means not graphical.
    pub margin: i128,
    /// Smallest 1-based j attaining the maximum.
    pub argmax_j: usize,
}

/// A violated inequality, reported at the smallest violated index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EgViolation {
    /// 1-based cut index.
    pub j: usize,
    pub lhs: u128,
    pub rhs: u128,
}

/// Walks j = 1..=upto over a nonincreasing slice, handing exact (j, LHS, RHS)
/// to the visitor; stops early when the visitor returns false.
///
/// Runs in O(n) total: the count k of entries >= j only decreases, and the
/// two running sums (prefix of the largest j entries, suffix beyond k) are
/// maintained incrementally, so no prefix array is needed.
fn eg_scan(values: &[u64], upto: usize, mut visit: impl FnMut(usize, u128, u128) -> bool) {
    let n = values.len();
    debug_assert!(upto <= n);
    let total: u128 = values.iter().map(|&v| v as u128).sum();
    let mut k = n; // entries at positions < k satisfy m >= j
    let mut beyond_k: u128 = 0; // sum of entries at positions >= k
    let mut lhs: u128 = 0;
    for j in 1..=upto {
        let ju = j as u128;
        while k > 0 && (values[k - 1] as u128) < ju {
            k -= 1;
            beyond_k += values[k] as u128;
        }
        lhs += values[j - 1] as u128;
        // sum_{i>j} min(j, m_i): entries in (j, k] contribute j each, the
        // rest contribute themselves.
        let rhs = if k > j {
            ju * (ju - 1) + ju * (k - j) as u128 + beyond_k
        } else {
            ju * (ju - 1) + (total - lhs)
        };
        if !visit(j, lhs, rhs) {
            return;
        }
    }
}

/// Durfee index: largest j with m_j >= j (0 when m_1 == 0).
///
/// At most sqrt(total) for any sequence, so the walk is cheap.
fn durfee_index(values: &[u64]) -> usize {
    let mut s = 0;
    while s < values.len() && values[s] as u128 >= (s + 1) as u128 {
        s += 1;
    }
    s
}

/// Decides the Erdős–Gallai inequalities over a raw nonincreasing slice.
pub(crate) fn eg_ok_slice(values: &[u64]) -> bool {
    let mut ok = true;
    eg_scan(values, durfee_index(values), |_, lhs, rhs| {
        ok = lhs <= rhs;
        ok
    });
    ok
}

/// Fast decision: do all Erdős–Gallai inequalities hold?
///
/// Does not look at parity; combine with [`SortedDegrees::sum_parity`] or use
/// [`is_graphical`].  Scans only up to the Durfee index and stops at the
/// first violation.
pub fn erdos_gallai_ok(sorted: &SortedDegrees) -> bool {
    eg_ok_slice(sorted.values())
}

/// Exact worst slack over every cut index j = 1..=n.
///
/// `margin <= 0` iff all inequalities hold; ties report the smallest j.
pub fn eg_margin(sorted: &SortedDegrees) -> EgMargin {
    let mut best: Option<EgMargin> = None;
    eg_scan(sorted.values(), sorted.len(), |j, lhs, rhs| {
        let margin = lhs as i128 - rhs as i128;
        match &mut best {
            Some(b) if margin <= b.margin => {}
            _ => best = Some(EgMargin { margin, argmax_j: j }),
        }
        true
    });
    best.expect("sequences are nonempty")
}

/// Smallest violated cut index with its exact sides, if any.
pub fn first_violation(sorted: &SortedDegrees) -> Option<EgViolation> {
    let mut found = None;
    eg_scan(sorted.values(), sorted.len(), |j, lhs, rhs| {
        if lhs > rhs {
            found = Some(EgViolation { j, lhs, rhs });
            false
        } else {
            true
        }
    });
    found
}

/// Parity check plus Erdős–Gallai on an already sorted sequence.
pub fn is_graphical_sorted(sorted: &SortedDegrees) -> bool {
    sorted.sum_parity().is_even() && erdos_gallai_ok(sorted)
}

/// Is the sequence the degree sequence of some simple graph?
pub fn is_graphical(seq: &crate::seq::DegreeSequence) -> bool {
    seq.sum_parity().is_even() && erdos_gallai_ok(&seq.sorted())
}
