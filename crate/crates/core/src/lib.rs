//! Degree sequence laboratory.
//!
//! The crate answers one family of questions: given a finite sequence of
//! nonnegative integers, is it the degree sequence of a simple graph, and how
//! likely is that event when the entries are drawn iid from a heavy-tailed
//! law?  The pieces:
//!
//! * [`seq`]: degree sequences, their sorted form with exact prefix sums, and
//!   the whitespace/`#`-comment file format.
//! * [`graphical`]: the Erdős–Gallai test, both as a fast decision and as an
//!   exact slack margin over every cut index.
//! * [`realize`]: Choudum's inductive construction of a witness graph, plus a
//!   brute-force oracle for small `n`.
//! * [`dist`]: tail-function families (power law, c/n, perturbed c/n, zeta,
//!   geometric, tabulated), two distributionally equal samplers, parity and
//!   truncated-moment helpers, and a numerical regime classifier.
//! * [`mc`]: a deterministic Monte Carlo engine estimating P(graphical) over
//!   an n-grid, with Wilson intervals, KS cross-checks, and max/parity law
//!   diagnostics.
//!
//! All integer arithmetic on degrees is exact: entries are capped at 2^62,
//! lengths at 2^32, and every sum is carried in `u128`/`i128` with provable
//! headroom.

#![forbid(unsafe_code)]

pub mod dist;
pub mod graphical;
pub mod mc;
pub mod realize;
pub mod seq;

pub use dist::{
    classify_regime, parity_bias, sample_iid, sample_sorted_renyi, truncated_moment, Continuation,
    DistConfig, DistError, FamilyConfig, RegimeLabel, RegimeReport, TailSpec,
};
pub use graphical::{
    eg_margin, erdos_gallai_ok, first_violation, is_graphical, is_graphical_sorted, EgMargin,
    EgViolation,
};
pub use mc::{
    estimate_graphical_prob, ks_two_sample, max_law_check, parity_check, scaled_max_limit_check,
    union_bound_consistent, wilson_ci, EstimateRow, EstimateSeries, ExperimentConfig, KsResult,
    MaxLawReport, McError, ParityReport, SamplerKind, ScaledMaxReport, StatsError,
};
pub use realize::{
    choudum_realize, exhaustive_oracle, realize_sequence, verify_realization, RealizeError,
    SimpleGraph,
};
pub use seq::{DegreeSequence, Parity, SeqError, SortedDegrees};
