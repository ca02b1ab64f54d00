//! Colorings, color codes, and the locating-coloring verifier.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};

/// An assignment of the colors `1..=k` to the vertices of a graph.
///
/// Construction only checks that every color lies in `1..=k`. Color codes
/// additionally need every class to be non-empty (see [`Coloring::is_surjective`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: usize,
    colors: Vec<usize>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        Coloring::new(raw.k, raw.colors)
    }
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::input("a coloring needs at least one color"));
        }
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::input(format!("vertex {v} has color {c} outside 1..={k}")));
        }
        Ok(Coloring { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Color of every vertex, 1-based.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// The ordered partition `(V_1, ..., V_k)`; entry `i` holds color `i + 1`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }

    pub fn is_surjective(&self) -> bool {
        let mut used = vec![false; self.k];
        for &c in &self.colors {
            used[c - 1] = true;
        }
        used.into_iter().all(|u| u)
    }

    /// The coloring with vertex `v` moved to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Coloring {
        let mut colors = vec![0; self.colors.len()];
        for (v, &c) in self.colors.iter().enumerate() {
            colors[perm[v]] = c;
        }
        Coloring { k: self.k, colors }
    }
}

/// A `k`-tuple of small non-negative integers with componentwise arithmetic.
///
/// Holds color codes as well as the basis vectors `e_t` and the all-ones
/// vector `e` used to write codes in closed form. Subtraction panics if a
/// coordinate would go negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeVector(pub Vec<u32>);

impl CodeVector {
    pub fn zeros(k: usize) -> Self {
        CodeVector(vec![0; k])
    }

    /// `e = (1, 1, ..., 1)`.
    pub fn ones(k: usize) -> Self {
        CodeVector(vec![1; k])
    }

    /// `e_t`, with `t` 1-based.
    pub fn basis(k: usize, t: usize) -> Self {
        assert!((1..=k).contains(&t), "basis index {t} outside 1..={k}");
        let mut v = Self::zeros(k);
        v.0[t - 1] = 1;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinate `t`, 1-based.
    pub fn at(&self, t: usize) -> u32 {
        self.0[t - 1]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for CodeVector {
    fn from(v: Vec<u32>) -> Self {
        CodeVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for CodeVector {
    fn from(v: [u32; N]) -> Self {
        CodeVector(v.to_vec())
    }
}

impl fmt::Display for CodeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add for CodeVector {
    type Output = CodeVector;

    fn add(mut self, rhs: CodeVector) -> CodeVector {
        assert_eq!(self.len(), rhs.len(), "code vector lengths differ");
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
        self
    }
}

impl Sub for CodeVector {
    type Output = CodeVector;

    fn sub(mut self, rhs: CodeVector) -> CodeVector {
        assert_eq!(self.len(), rhs.len(), "code vector lengths differ");
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a = a.checked_sub(b).expect("code vector coordinate went negative");
        }
        self
    }
}

impl Mul<CodeVector> for u32 {
    type Output = CodeVector;

    fn mul(self, mut rhs: CodeVector) -> CodeVector {
        for a in &mut rhs.0 {
            *a *= self;
        }
        rhs
    }
}

/// Outcome of checking whether a coloring is locating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocatingVerdict {
    Locating,
    /// The lexicographically smallest monochromatic edge.
    Improper { u: usize, v: usize },
    /// The lexicographically smallest pair `u < v` with equal codes.
    Collision { u: usize, v: usize, code: CodeVector },
}

impl LocatingVerdict {
    pub fn is_locating(&self) -> bool {
        matches!(self, LocatingVerdict::Locating)
    }
}

impl fmt::Display for LocatingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocatingVerdict::Locating => write!(f, "LOCATING"),
            LocatingVerdict::Improper { u, v } => write!(f, "IMPROPER edge ({u}, {v})"),
            LocatingVerdict::Collision { u, v, code } => {
                write!(f, "COLLISION vertices {u} and {v} share code {code}")
            }
        }
    }
}

fn check_length(g: &Graph, f: &Coloring) -> Result<()> {
    if f.len() != g.vertex_count() {
        return Err(Error::input(format!(
            "coloring has {} entries but the graph has {} vertices",
            f.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Returns `None` when `f` is proper on `g`, otherwise the lexicographically
/// smallest edge whose endpoints share a color.
pub fn validate_proper(g: &Graph, f: &Coloring) -> Result<Option<(usize, usize)>> {
    check_length(g, f)?;
    Ok(g.edges().find(|&(u, v)| f.color(u) == f.color(v)))
}

/// Color code of every vertex: entry `j` of `codes[v]` is `d(v, V_{j+1})`.
///
/// One multi-source BFS per color class.
pub fn color_codes(g: &Graph, f: &Coloring) -> Result<Vec<CodeVector>> {
    check_length(g, f)?;
    if !g.is_connected() {
        return Err(Error::Connectivity("color codes need a connected graph".into()));
    }
    if !f.is_surjective() {
        return Err(Error::input("every color class must be non-empty"));
    }
    if let Some((u, v)) = validate_proper(g, f)? {
        return Err(Error::input(format!("edge ({u}, {v}) is monochromatic")));
    }
    Ok(codes_unchecked(g, f))
}

pub(crate) fn codes_unchecked(g: &Graph, f: &Coloring) -> Vec<CodeVector> {
    let n = g.vertex_count();
    let mut codes = vec![CodeVector::zeros(f.k()); n];
    for (j, class) in f.classes().into_iter().enumerate() {
        let dist = g.multi_source_distances(class);
        for (code, d) in codes.iter_mut().zip(dist) {
            debug_assert_ne!(d, UNREACHABLE);
            code.0[j] = d as u32;
        }
    }
    codes
}

/// Decides whether `f` is a locating coloring of `g`, with a witness if not.
pub fn is_locating(g: &Graph, f: &Coloring) -> Result<LocatingVerdict> {
    check_length(g, f)?;
    if !g.is_connected() {
        return Err(Error::Connectivity("color codes need a connected graph".into()));
    }
    if !f.is_surjective() {
        return Err(Error::input("every color class must be non-empty"));
    }
    if let Some((u, v)) = validate_proper(g, f)? {
        return Ok(LocatingVerdict::Improper { u, v });
    }
    let codes = codes_unchecked(g, f);
    Ok(match first_collision(&codes) {
        Some((u, v)) => LocatingVerdict::Collision {
            u,
            v,
            code: codes[u].clone(),
        },
        None => LocatingVerdict::Locating,
    })
}

/// Smallest `(u, v)`, `u < v`, with `codes[u] == codes[v]`.
pub(crate) fn first_collision(codes: &[CodeVector]) -> Option<(usize, usize)> {
    let mut first_seen: HashMap<&CodeVector, usize> = HashMap::with_capacity(codes.len());
    let mut best: Option<(usize, usize)> = None;
    for (v, code) in codes.iter().enumerate() {
        match first_seen.get(code) {
            Some(&u) => {
                if best.is_none_or(|b| (u, v) < b) {
                    best = Some((u, v));
                }
            }
            None => {
                first_seen.insert(code, v);
            }
        }
    }
    best
}
