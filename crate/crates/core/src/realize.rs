//! Realizing a graphical sequence as a simple graph.
//!
//! [`choudum_realize`] peels a sorted sequence down to zero by repeatedly
//! decrementing one carefully chosen pair of entries, then replays the
//! reductions in reverse as edge insertions.  Each reduction step picks
//!
//! * n_eff: the last position with a positive entry, and
//! * j: the last position of the leading block of maximal entries, stepping
//!   one position left when that block covers every positive entry,
//!
//! and decrements both.  Decrementing block ends keeps the sequence
//! nonincreasing in place, so no re-sorting ever happens.  The reduced
//! sequence is re-checked with Erdős–Gallai at every step; a failure there on
//! graphical input is a bug, not a property of the input.
//!
//! The replay adds the edge (j, n_eff) directly when absent.  When present,
//! some edge (a, b) disjoint from {j, n_eff} with (j,a) and (n_eff,b) both
//! absent is removed and those two edges are added instead, which raises the
//! degrees of j and n_eff by one while keeping everything simple.  The swap
//! search walks the edge set in lexicographic order, so the whole
//! construction is deterministic.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::graphical::eg_ok_slice;
use crate::seq::{DegreeSequence, SortedDegrees};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizeError {
    /// Raised on entry for non-graphical input; raised mid-construction only
    /// on an internal invariant failure.
    #[error("sequence is not graphical (detected at reduction step {step})")]
    NotGraphical { step: usize },
    /// The replay could not find a disjoint edge to swap; cannot happen for
    /// graphical input and signals an internal invariant failure.
    #[error("no disjoint swap pair available at replay step {step}")]
    NoSwapPair { step: usize },
    /// The exhaustive oracle enumerates all 2^(n(n-1)/2) graphs and refuses
    /// to go past n = 7.
    #[error("exhaustive oracle supports n <= 7, got n = {n}")]
    TooLarge { n: usize },
    #[error("edge ({u}, {v}) is a self loop")]
    LoopEdge { u: u32, v: u32 },
    #[error("edge ({u}, {v}) is already present")]
    DuplicateEdge { u: u32, v: u32 },
    #[error("vertex {v} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: u32, n: usize },
}

/// An undirected simple graph on vertices 0..n.
///
/// Invariants: no loops, no duplicate edges, `degrees` mirrors the edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(u32, u32)>,
    degrees: Vec<u64>,
}

impl SimpleGraph {
    /// An empty graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
            degrees: vec![0; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degrees maintained alongside the edge set, indexed by vertex.
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Edges as normalized (min, max) pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&normalize(u, v))
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<(), RealizeError> {
        if u == v {
            return Err(RealizeError::LoopEdge { u, v });
        }
        for w in [u, v] {
            if w as usize >= self.n {
                return Err(RealizeError::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if !self.edges.insert(normalize(u, v)) {
            return Err(RealizeError::DuplicateEdge { u, v });
        }
        self.degrees[u as usize] += 1;
        self.degrees[v as usize] += 1;
        Ok(())
    }

    /// Removes an edge; returns whether it was present.
    pub fn remove_edge(&mut self, u: u32, v: u32) -> bool {
        let removed = self.edges.remove(&normalize(u, v));
        if removed {
            self.degrees[u as usize] -= 1;
            self.degrees[v as usize] -= 1;
        }
        removed
    }

    /// Edge list text: a `# n=<n> m=<m>` header, then one 1-based `u v` line
    /// per edge in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# n={} m={}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }
}

fn normalize(u: u32, v: u32) -> (u32, u32) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Realizes a sorted graphical sequence; vertex i receives degree
/// `sorted.values()[i]` exactly.
pub fn choudum_realize(sorted: &SortedDegrees) -> Result<SimpleGraph, RealizeError> {
    choudum_realize_with_stats(sorted).map(|(g, _)| g)
}

/// Construction plus the number of replay steps that needed an edge swap.
/// Exposed for tests that want proof the swap path runs.
#[doc(hidden)]
pub fn choudum_realize_with_stats(
    sorted: &SortedDegrees,
) -> Result<(SimpleGraph, u64), RealizeError> {
    if !sorted.sum_parity().is_even() || !eg_ok_slice(sorted.values()) {
        return Err(RealizeError::NotGraphical { step: 0 });
    }
    let n = sorted.len();
    let mut w = sorted.values().to_vec();
    let mut n_eff = w.partition_point(|&x| x > 0); // positives form a prefix
    let edge_total = sorted.total() / 2;
    let mut reductions: Vec<(u32, u32)> = Vec::with_capacity(edge_total.min(1 << 24) as usize);

    let mut step = 0usize;
    while n_eff > 0 {
        step += 1;
        if n_eff == 1 {
            // a single positive entry has odd remaining total; unreachable
            // after the parity and Erdős–Gallai checks
            return Err(RealizeError::NotGraphical { step });
        }
        let top = w[0];
        let block = w[..n_eff].partition_point(|&x| x == top);
        let j_pos = if block == n_eff { n_eff - 2 } else { block - 1 };
        let n_pos = n_eff - 1;
        w[j_pos] -= 1;
        w[n_pos] -= 1;
        reductions.push((j_pos as u32, n_pos as u32));
        while n_eff > 0 && w[n_eff - 1] == 0 {
            n_eff -= 1;
        }
        debug_assert!(w.windows(2).all(|p| p[0] >= p[1]), "order lost at {step}");
        if !eg_ok_slice(&w[..n_eff.max(1)]) {
            return Err(RealizeError::NotGraphical { step });
        }
    }

    let mut g = SimpleGraph::new(n);
    let mut swaps = 0u64;
    for (idx, &(j, t)) in reductions.iter().enumerate().rev() {
        if !g.has_edge(j, t) {
            g.add_edge(j, t)?;
            continue;
        }
        swaps += 1;
        let mut found = None;
        for (a, b) in g.edges() {
            if a == j || a == t || b == j || b == t {
                continue;
            }
            if !g.has_edge(j, a) && !g.has_edge(t, b) {
                found = Some((a, b));
                break;
            }
            if !g.has_edge(j, b) && !g.has_edge(t, a) {
                found = Some((b, a));
                break;
            }
        }
        let (a, b) = found.ok_or(RealizeError::NoSwapPair { step: idx })?;
        g.remove_edge(a, b);
        g.add_edge(j, a)?;
        g.add_edge(t, b)?;
    }
    debug_assert_eq!(g.degrees(), sorted.values(), "degree replay mismatch");
    Ok((g, swaps))
}

/// Realizes a sequence given in arbitrary order; vertex i receives degree
/// `seq.values()[i]` exactly.
pub fn realize_sequence(seq: &DegreeSequence) -> Result<SimpleGraph, RealizeError> {
    let n = seq.len();
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(seq.values()[i as usize]), i));
    let sorted_values: Vec<u64> = order.iter().map(|&i| seq.values()[i as usize]).collect();
    let sorted = SortedDegrees::from_sorted(sorted_values).expect("sorted by construction");
    let g = choudum_realize(&sorted)?;
    let mut out = SimpleGraph::new(n);
    for (u, v) in g.edges() {
        out.add_edge(order[u as usize], order[v as usize])?;
    }
    Ok(out)
}

/// Does the graph's degree multiset match the sequence exactly?
///
/// Degrees are recomputed from the edge set, not read from the cache.
pub fn verify_realization(g: &SimpleGraph, seq: &DegreeSequence) -> bool {
    if g.vertex_count() != seq.len() {
        return false;
    }
    let mut recomputed = vec![0u64; g.vertex_count()];
    for (u, v) in g.edges() {
        recomputed[u as usize] += 1;
        recomputed[v as usize] += 1;
    }
    let mut want = seq.values().to_vec();
    recomputed.sort_unstable();
    want.sort_unstable();
    recomputed == want
}

/// Ground-truth graphicality by enumerating every graph on n <= 7 vertices.
///
/// The achievable degree multisets are computed once per n and memoized for
/// the life of the process.
pub fn exhaustive_oracle(seq: &DegreeSequence) -> Result<bool, RealizeError> {
    let n = seq.len();
    if n > 7 {
        return Err(RealizeError::TooLarge { n });
    }
    let achievable = achievable_multisets(n);
    let mut key = seq.values().to_vec();
    key.sort_unstable_by(|a, b| b.cmp(a));
    Ok(achievable.contains(&key))
}

fn achievable_multisets(n: usize) -> Arc<HashSet<Vec<u64>>> {
    static MEMO: OnceLock<Mutex<HashMap<usize, Arc<HashSet<Vec<u64>>>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = memo.lock().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut found: HashSet<Vec<u64>> = HashSet::new();
    for mask in 0u32..1u32 << pairs.len() {
        let mut deg = vec![0u64; n];
        let mut bits = mask;
        while bits != 0 {
            let p = bits.trailing_zeros() as usize;
            deg[pairs[p].0] += 1;
            deg[pairs[p].1] += 1;
            bits &= bits - 1;
        }
        deg.sort_unstable_by(|a, b| b.cmp(a));
        found.insert(deg);
    }
    let arc = Arc::new(found);
    memo.lock().unwrap().insert(n, Arc::clone(&arc));
    arc
}
