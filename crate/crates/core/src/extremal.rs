//! The trees `T_k`: maximum degree `4 * 3^(k-3)` with a locating `k`-coloring.
//!
//! The center `x` has one neighbor `y_i` for every tuple `α_i` of
//!
//! ```text
//! A     = {1} x {0}   x {1,2} x {1,2,3}^(k-3)
//! A_bar = {1} x {1,2} x {0}   x {1,2,3}^(k-3)
//! ```
//!
//! (and `ȳ_i` for `ᾱ_i`), both in lexicographic order. The rest of the tree is
//! grown so that the code of `y_i` comes out as `α_i`: a coordinate equal to 1
//! gets a pendant vertex `z_i^t` of color `t`, and a coordinate `t >= 4` equal
//! to 2 gets a path `y_i - x_i^t - z_i^t` with `x_i^t` colored 1. Coordinate 2
//! (resp. 3) equal to 2 needs nothing, since `ȳ_1` (resp. `y_1`) is already at
//! distance 2 through `x`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::bounds;
use crate::coloring::{self, CodeVector, Coloring, LocatingVerdict};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `k` accepted by [`verify_construction`]; `T_9` already has about 2*10^4 vertices.
pub const MAX_VERIFY_K: usize = 9;

/// Which tuple family a vertex hangs off: `A` (plain) or `A_bar` (barred).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plain,
    Barred,
}

impl Side {
    fn suffix(self) -> &'static str {
        match self {
            Side::Plain => "",
            Side::Barred => "bar",
        }
    }
}

/// Name of a vertex of `T_k`. `i` is the 1-based tuple index and `t` the
/// 1-based coordinate the vertex realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    X,
    Y { side: Side, i: usize },
    Z { side: Side, i: usize, t: usize },
    XSub { side: Side, i: usize, t: usize },
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Label::X => write!(f, "x"),
            Label::Y { side, i } => write!(f, "y{}_{i}", side.suffix()),
            Label::Z { side, i, t } => write!(f, "z{}_{i}^{t}", side.suffix()),
            Label::XSub { side, i, t } => write!(f, "x{}_{i}^{t}", side.suffix()),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form, e.g. `x`, `ybar_4`, `z_15^4`, `xbar_17^5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::input(format!("unrecognized vertex label {s:?}"));
        if s == "x" {
            return Ok(Label::X);
        }
        let (head, rest) = s.split_once('_').ok_or_else(bad)?;
        let (letter, side) = match head {
            "x" | "y" | "z" => (head, Side::Plain),
            "xbar" => ("x", Side::Barred),
            "ybar" => ("y", Side::Barred),
            "zbar" => ("z", Side::Barred),
            _ => return Err(bad()),
        };
        let (i, t) = match rest.split_once('^') {
            Some((i, t)) => (i, Some(t)),
            None => (rest, None),
        };
        let i: usize = i.parse().map_err(|_| bad())?;
        let t: Option<usize> = t.map(str::parse).transpose().map_err(|_| bad())?;
        match (letter, t) {
            ("y", None) => Ok(Label::Y { side, i }),
            ("z", Some(t)) => Ok(Label::Z { side, i, t }),
            ("x", Some(t)) => Ok(Label::XSub { side, i, t }),
            _ => Err(bad()),
        }
    }
}

/// The tuple sequences `A` and `A_bar` for one `k`, lexicographically ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleFamily {
    pub k: usize,
    pub a: Vec<CodeVector>,
    pub a_bar: Vec<CodeVector>,
}

impl TupleFamily {
    pub fn side(&self, side: Side) -> &[CodeVector] {
        match side {
            Side::Plain => &self.a,
            Side::Barred => &self.a_bar,
        }
    }

    /// `α_i` or `ᾱ_i`, 1-based.
    pub fn tuple(&self, side: Side, i: usize) -> &CodeVector {
        &self.side(side)[i - 1]
    }
}

/// All of `{1,2,3}^len` in lexicographic order.
fn ternary_suffixes(len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity(3usize.pow(len as u32));
    let mut cur = vec![1u32; len];
    loop {
        out.push(cur.clone());
        // odometer increment from the right
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < 3 {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 1;
        }
    }
}

pub fn tuple_family(k: usize) -> Result<TupleFamily> {
    if k < 3 {
        return Err(Error::input(format!("T_k is defined for k >= 3, got {k}")));
    }
    let suffixes = ternary_suffixes(k - 3);
    let mut a = Vec::with_capacity(2 * suffixes.len());
    let mut a_bar = Vec::with_capacity(2 * suffixes.len());
    for lead in 1..=2 {
        for s in &suffixes {
            let mut plain = vec![1, 0, lead];
            plain.extend_from_slice(s);
            a.push(CodeVector(plain));
            let mut barred = vec![1, lead, 0];
            barred.extend_from_slice(s);
            a_bar.push(CodeVector(barred));
        }
    }
    Ok(TupleFamily { k, a, a_bar })
}

/// `T_k` with its labels and the coloring `f_k`.
#[derive(Debug, Clone)]
pub struct ExtremalTree {
    pub k: usize,
    pub family: TupleFamily,
    pub graph: Graph,
    /// `labels[v]` names vertex `v`.
    pub labels: Vec<Label>,
    pub coloring: Coloring,
    index: HashMap<Label, usize>,
}

impl ExtremalTree {
    pub fn vertex(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }
}

/// The color `f_k` gives a vertex.
pub fn extremal_color(label: &Label) -> usize {
    match *label {
        Label::X | Label::XSub { .. } => 1,
        Label::Y { side: Side::Plain, .. } => 2,
        Label::Y { side: Side::Barred, .. } => 3,
        Label::Z { t, .. } => t,
    }
}

/// Vertex ids: `x` first, then every `y_i`, every `ȳ_i`, then the remaining
/// vertices grouped by side, tuple index, and coordinate (`z` before `x` within a group).
pub fn build_extremal_tree(k: usize) -> Result<ExtremalTree> {
    let family = tuple_family(k)?;
    let mut labels = vec![Label::X];
    for side in [Side::Plain, Side::Barred] {
        labels.extend((1..=family.side(side).len()).map(|i| Label::Y { side, i }));
    }
    let mut edges = Vec::new();
    let add = |labels: &mut Vec<Label>, label: Label| {
        labels.push(label);
        labels.len() - 1
    };
    for side in [Side::Plain, Side::Barred] {
        for (idx, alpha) in family.side(side).iter().enumerate() {
            let i = idx + 1;
            let y = match side {
                Side::Plain => i,
                Side::Barred => family.a.len() + i,
            };
            edges.push((0, y));
            for t in 2..=k {
                match alpha.at(t) {
                    1 => {
                        let z = add(&mut labels, Label::Z { side, i, t });
                        edges.push((y, z));
                    }
                    2 if t >= 4 => {
                        let z = add(&mut labels, Label::Z { side, i, t });
                        let xs = add(&mut labels, Label::XSub { side, i, t });
                        edges.push((y, xs));
                        edges.push((xs, z));
                    }
                    _ => {}
                }
            }
        }
    }
    let graph = Graph::new(labels.len(), edges)?;
    let coloring = Coloring::new(k, labels.iter().map(extremal_color).collect())?;
    let index = labels.iter().enumerate().map(|(v, &l)| (l, v)).collect();
    Ok(ExtremalTree {
        k,
        family,
        graph,
        labels,
        coloring,
        index,
    })
}

/// Codes of `T_k` under `f_k` from the closed-form table, without any BFS.
pub fn predicted_color_codes(tree: &ExtremalTree) -> Vec<CodeVector> {
    let k = tree.k;
    let e = || CodeVector::ones(k);
    let e_ = |t| CodeVector::basis(k, t);
    tree.labels
        .iter()
        .map(|label| match *label {
            Label::X => {
                let mut code = vec![2; k];
                code[..3].copy_from_slice(&[0, 1, 1]);
                CodeVector(code)
            }
            Label::Y { side, i } => tree.family.tuple(side, i).clone(),
            Label::Z { side, i, t } => {
                let alpha = tree.family.tuple(side, i).clone();
                if alpha.at(t) == 1 {
                    alpha + e() - 2 * e_(t)
                } else {
                    alpha + 2 * e() - 2 * e_(1) - 4 * e_(t)
                }
            }
            Label::XSub { side, i, t } => {
                tree.family.tuple(side, i).clone() + e() - 2 * e_(1) - 2 * e_(t)
            }
        })
        .collect()
}

/// Outcome of [`verify_construction`]; only produced when every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub k: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub is_tree: bool,
    pub locating: bool,
    pub codes_match: bool,
}

impl fmt::Display for ConstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "T_{}: {} vertices, {} edges, tree={}, Δ={}, locating={}, predicted codes match={}",
            self.k,
            self.vertex_count,
            self.edge_count,
            self.is_tree,
            self.max_degree,
            self.locating,
            self.codes_match
        )
    }
}

/// Builds `T_k` and checks that it is a tree, that `Δ = 4 * 3^(k-3)`, that
/// `f_k` is locating, and that the closed-form codes equal the computed ones.
pub fn verify_construction(k: usize) -> Result<ConstructionReport> {
    if k > MAX_VERIFY_K {
        return Err(Error::input(format!(
            "k = {k} exceeds the verification limit {MAX_VERIFY_K}"
        )));
    }
    let tree = build_extremal_tree(k)?;
    verify_tree(&tree)
}

/// The checks of [`verify_construction`] on an already built tree.
pub fn verify_tree(tree: &ExtremalTree) -> Result<ConstructionReport> {
    let g = &tree.graph;
    if !g.is_tree() {
        return Err(Error::Verification(format!("T_{} is not a tree", tree.k)));
    }
    let expected = bounds::new_bound(tree.k)? as usize;
    let delta = g.max_degree()?;
    if delta != expected || g.degree(0) != expected {
        let v = g.max_degree_vertex().unwrap_or(0);
        return Err(Error::Verification(format!(
            "vertex {} has degree {}, expected maximum degree {expected} at x",
            tree.labels[v],
            g.degree(v)
        )));
    }
    match coloring::is_locating(g, &tree.coloring)? {
        LocatingVerdict::Locating => {}
        LocatingVerdict::Improper { u, .. } => {
            return Err(Error::Verification(format!(
                "vertex {} lies on a monochromatic edge",
                tree.labels[u]
            )))
        }
        LocatingVerdict::Collision { u, v, code } => {
            return Err(Error::Verification(format!(
                "vertex {} shares code {code} with {}",
                tree.labels[u], tree.labels[v]
            )))
        }
    }
    let computed = coloring::color_codes(g, &tree.coloring)?;
    let predicted = predicted_color_codes(tree);
    if let Some(v) = (0..computed.len()).find(|&v| computed[v] != predicted[v]) {
        return Err(Error::Verification(format!(
            "vertex {}: predicted code {} but computed {}",
            tree.labels[v], predicted[v], computed[v]
        )));
    }
    Ok(ConstructionReport {
        k: tree.k,
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        max_degree: delta,
        is_tree: true,
        locating: true,
        codes_match: true,
    })
}
