//! Degree bounds for trees with a given locating chromatic number.
//!
//! A vertex whose neighbors use `p` colors can have at most
//! `2^(p-1) * 3^(k-1-p)` neighbors of any one color in a locating
//! `k`-coloring, so its degree is at most `p * 2^(p-1) * 3^(k-1-p)`.
//! Maximizing over `p` gives `4 * 3^(k-3)`, which replaces the older,
//! smaller bound `(k-1) * 2^(k-2)`.
//!
//! All arithmetic is checked; overflow is an error, never a wrapped value.

use std::fmt;

use crate::coloring;
use crate::error::{Error, Result};
use crate::extremal;

fn require_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::input(format!("bounds are stated for k >= 3, got {k}")));
    }
    Ok(())
}

fn pow(base: u64, exp: usize, what: &str) -> Result<u64> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or_else(|| Error::Overflow(what.to_string()))
}

fn mul(a: u64, b: u64, what: &str) -> Result<u64> {
    a.checked_mul(b).ok_or_else(|| Error::Overflow(what.to_string()))
}

/// `(k-1) * 2^(k-2)`.
pub fn old_bound(k: usize) -> Result<u64> {
    require_k(k)?;
    mul((k - 1) as u64, pow(2, k - 2, "old bound")?, "old bound")
}

/// `4 * 3^(k-3)`.
pub fn new_bound(k: usize) -> Result<u64> {
    require_k(k)?;
    mul(4, pow(3, k - 3, "new bound")?, "new bound")
}

/// `2^(p-1) * 3^(k-1-p)`: how many neighbors of one color a vertex can have
/// when its neighborhood uses `p` colors of a locating `k`-coloring.
pub fn class_capacity(p: usize, k: usize) -> Result<u64> {
    if p < 1 || p + 1 > k {
        return Err(Error::input(format!("need 1 <= p <= k-1, got p={p}, k={k}")));
    }
    mul(
        pow(2, p - 1, "class capacity")?,
        pow(3, k - 1 - p, "class capacity")?,
        "class capacity",
    )
}

/// `p * 2^(p-1) * 3^q` for `1 + p + q = k`.
pub fn lemma_term(p: usize, k: usize) -> Result<u64> {
    mul(p as u64, class_capacity(p, k)?, "lemma term")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaMax {
    pub value: u64,
    /// Every `p` attaining the maximum, ascending.
    pub argmax: Vec<usize>,
}

/// Maximum of `p * 2^(p-1) * 3^q` over `p >= 1, q >= 0, 1 + p + q = k`,
/// found by trying every feasible `p`.
pub fn lemma_max(k: usize) -> Result<LemmaMax> {
    require_k(k)?;
    let mut best = LemmaMax {
        value: 0,
        argmax: Vec::new(),
    };
    for p in 1..k {
        let value = lemma_term(p, k)?;
        if value > best.value {
            best = LemmaMax {
                value,
                argmax: vec![p],
            };
        } else if value == best.value {
            best.argmax.push(p);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub k: usize,
    pub old_bound: u64,
    pub new_bound: u64,
    pub lemma_value: u64,
    pub lemma_argmax: Vec<usize>,
}

pub fn bound_row(k: usize) -> Result<BoundRow> {
    let lemma = lemma_max(k)?;
    Ok(BoundRow {
        k,
        old_bound: old_bound(k)?,
        new_bound: new_bound(k)?,
        lemma_value: lemma.value,
        lemma_argmax: lemma.argmax,
    })
}

/// Rows for `k = 3..=k_max`.
pub fn bound_table(k_max: usize) -> Result<Vec<BoundRow>> {
    (3..=k_max).map(bound_row).collect()
}

/// Evidence that a tree of maximum degree above `(k-1) * 2^(k-2)` can still
/// have a locating `k`-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub k: usize,
    pub old_bound: u64,
    pub new_bound: u64,
    pub max_degree: usize,
    pub vertex_count: usize,
    /// The extremal coloring was checked and is locating with `k` colors.
    pub locating: bool,
}

impl CounterexampleReport {
    /// The degree exceeds the old bound while a locating `k`-coloring exists.
    pub fn contradicts_old_bound(&self) -> bool {
        self.locating && self.max_degree as u64 > self.old_bound
    }
}

impl fmt::Display for CounterexampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.max_degree as u64 > self.old_bound { ">" } else { "<=" };
        write!(
            f,
            "Δ={} {rel} {}, yet χ_L(T_{})={}",
            self.max_degree, self.old_bound, self.k, self.k
        )
    }
}

/// Builds `T_k`, verifies its `k`-coloring, and compares its degree with the old bound.
///
/// `T_k` certifies `χ_L = k` without search: its degree exceeds `new_bound(k-1)`,
/// so no `k-1` colors suffice, and the constructed coloring is locating.
pub fn counterexample_report(k: usize) -> Result<CounterexampleReport> {
    if k < 5 {
        return Err(Error::input(format!(
            "the old bound is only exceeded for k >= 5, got {k}"
        )));
    }
    let tree = extremal::build_extremal_tree(k)?;
    let verdict = coloring::is_locating(&tree.graph, &tree.coloring)?;
    Ok(CounterexampleReport {
        k,
        old_bound: old_bound(k)?,
        new_bound: new_bound(k)?,
        max_degree: tree.graph.max_degree()?,
        vertex_count: tree.graph.vertex_count(),
        locating: verdict.is_locating(),
    })
}
