//! Tree generation: every free tree of a given order, and uniform random labeled trees.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Builds the rooted tree described by a level sequence (depths in preorder).
/// The parent of vertex `i` is the latest earlier vertex one level up.
pub fn from_level_sequence(levels: &[usize]) -> Result<Graph> {
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    // stack[d] = most recent vertex at depth d
    let mut stack: Vec<usize> = Vec::new();
    for (v, &d) in levels.iter().enumerate() {
        if v == 0 && d != 0 || v > 0 && (d == 0 || d > stack.len()) {
            return Err(Error::input(format!("invalid level sequence at position {v}")));
        }
        stack.truncate(d);
        if let Some(&parent) = stack.last() {
            edges.push((parent, v));
        }
        stack.push(v);
    }
    Graph::new(levels.len(), edges)
}

/// Level sequences of the non-isomorphic free trees on `n` vertices, in the
/// order of the Wright-Richmond-Odlyzko-McKay generator.
///
/// Each tree is rooted at its center (a bicentral tree at one of the two
/// centers), so every isomorphism class appears exactly once.
pub struct FreeTrees {
    n: usize,
    next: Option<Vec<usize>>,
}

impl FreeTrees {
    pub fn new(n: usize) -> Self {
        let next = match n {
            0 => None,
            1 => Some(vec![0]),
            2 => Some(vec![0, 1]),
            _ => {
                // the path, rooted at its center
                let mut layout: Vec<usize> = (0..=n / 2).collect();
                layout.extend(1..n.div_ceil(2));
                Some(layout)
            }
        };
        FreeTrees { n, next }
    }
}

impl Iterator for FreeTrees {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let candidate = self.next.take()?;
        if self.n <= 2 {
            return Some(candidate);
        }
        let tree = next_valid_tree(candidate)?;
        self.next = next_rooted_tree(&tree, None);
        Some(tree)
    }
}

/// Successor in reverse lexicographic order of canonical rooted level sequences.
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Splits a level sequence into the first subtree of the root (shifted up one
/// level) and the root together with its remaining subtrees.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|d| d - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Advances `candidate` until it is the canonical center-rooted form of a free tree.
fn next_valid_tree(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let (left, rest) = split_tree(&candidate);
        let left_height = left.iter().copied().max().unwrap_or(0);
        let rest_height = rest.iter().copied().max().unwrap_or(0);
        let left_larger = left.len() > rest.len() || left.len() == rest.len() && left > rest;
        if rest_height > left_height || rest_height == left_height && !left_larger {
            return Some(candidate);
        }
        let p = left.len();
        let mut next = next_rooted_tree(&candidate, Some(p))?;
        if candidate[p] > 2 {
            let (new_left, _) = split_tree(&next);
            let h = new_left.iter().copied().max().unwrap_or(0);
            let len = next.len();
            for (slot, level) in next[len - (h + 1)..].iter_mut().zip(1..) {
                *slot = level;
            }
        }
        candidate = next;
    }
}

/// Every free tree on `n` vertices, up to isomorphism.
pub fn free_trees(n: usize) -> Vec<Graph> {
    FreeTrees::new(n)
        .map(|levels| from_level_sequence(&levels).expect("generator yields valid sequences"))
        .collect()
}

/// Decodes a Prüfer sequence over `0..seq.len()+2` into its labeled tree.
pub fn from_prufer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::input(format!("Prüfer entry {bad} outside 0..{n}")));
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in seq {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut last = leaves.into_iter();
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    edges.push((a, b));
    Graph::new(n, edges)
}

/// A uniformly random labeled tree on `n >= 2` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 2, "random trees need at least two vertices");
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    from_prufer(&seq).expect("entries are in range")
}
