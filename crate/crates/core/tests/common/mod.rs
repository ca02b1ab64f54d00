//! Strategies and independent oracles shared by the integration tests.
//!
//! Nothing here calls the BFS, code, or search code under test: distances come
//! from Floyd-Warshall, codes from its matrix, and chromatic numbers from
//! plain enumeration.
#![allow(dead_code)]

use std::collections::BTreeSet;

use locating::trees::from_prufer;
use locating::{Coloring, Graph};
use proptest::prelude::*;

pub const INF: usize = usize::MAX / 4;

/// All-pairs distances by Floyd-Warshall over the edge list.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for m in 0..n {
        for u in 0..n {
            for v in 0..n {
                let through = d[u][m] + d[m][v];
                if through < d[u][v] {
                    d[u][v] = through;
                }
            }
        }
    }
    d
}

/// Every simple path from `u` to `v`, as vertex sequences, by exhaustive DFS.
pub fn simple_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn walk(g: &Graph, at: usize, target: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == target {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(at) {
            if !path.contains(&w) {
                path.push(w);
                walk(g, w, target, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(g, u, v, &mut vec![u], &mut out);
    out
}

/// Codes straight from the definition over a Floyd-Warshall matrix.
pub fn naive_codes(g: &Graph, colors: &[usize], k: usize) -> Vec<Vec<u32>> {
    let d = floyd_warshall(g);
    (0..g.vertex_count())
        .map(|v| {
            (1..=k)
                .map(|j| {
                    (0..g.vertex_count())
                        .filter(|&w| colors[w] == j)
                        .map(|w| d[v][w])
                        .min()
                        .expect("surjective") as u32
                })
                .collect()
        })
        .collect()
}

/// Locating by comparing every pair of codes, plus properness.
pub fn naive_is_locating(g: &Graph, colors: &[usize], k: usize) -> bool {
    if g.edges().any(|(u, v)| colors[u] == colors[v]) {
        return false;
    }
    let codes = naive_codes(g, colors, k);
    let n = g.vertex_count();
    (0..n).all(|u| (u + 1..n).all(|v| codes[u] != codes[v]))
}

/// First pair `(u, v)`, `u < v`, with equal codes.
pub fn naive_first_collision(codes: &[Vec<u32>]) -> Option<(usize, usize)> {
    let n = codes.len();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| codes[u] == codes[v])
}

/// Chromatic number by trying every assignment with `k = 1, 2, ...` colors.
pub fn chromatic_number(g: &Graph) -> usize {
    fn fill(g: &Graph, k: usize, v: usize, colors: &mut [usize]) -> bool {
        if v == colors.len() {
            return true;
        }
        for c in 1..=k {
            if g.neighbors(v).iter().all(|&w| w >= v || colors[w] != c) {
                colors[v] = c;
                if fill(g, k, v + 1, colors) {
                    return true;
                }
            }
        }
        false
    }
    let n = g.vertex_count();
    (1..=n.max(1))
        .find(|&k| fill(g, k, 0, &mut vec![0; n]))
        .unwrap_or(0)
}

/// Canonical string of a free tree: AHU encoding from its center(s), taking
/// the smaller string for a bicentral tree.
pub fn tree_canonical_form(g: &Graph) -> String {
    fn encode(g: &Graph, u: usize, parent: usize) -> String {
        let mut parts: Vec<String> = g
            .neighbors(u)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(g, w, u))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    let n = g.vertex_count();
    if n <= 1 {
        return "()".repeat(n);
    }
    // peel leaves until one or two vertices remain
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    while remaining > 2 {
        let leaves: Vec<usize> = (0..n).filter(|&v| !removed[v] && degree[v] == 1).collect();
        for &leaf in &leaves {
            removed[leaf] = true;
            remaining -= 1;
            for &w in g.neighbors(leaf) {
                degree[w] -= 1;
            }
        }
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centers
        .iter()
        .map(|&c| encode(g, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

/// Every labeled tree on `n` vertices, one per Prüfer sequence.
pub fn all_labeled_trees(n: usize) -> Vec<Graph> {
    if n < 2 {
        return vec![Graph::new(n, []).unwrap()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut idx| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = idx % n;
                    idx /= n;
                    d
                })
                .collect();
            from_prufer(&seq).unwrap()
        })
        .collect()
}

pub fn arb_tree(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min.max(2)..=max).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(|seq| from_prufer(&seq).unwrap())
    })
}

/// A connected graph: a random tree plus extra random edges.
pub fn arb_connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    arb_tree(min, max).prop_flat_map(|tree| {
        let n = tree.vertex_count();
        proptest::collection::vec((0..n, 0..n), 0..=n).prop_map(move |extra| {
            let edges: BTreeSet<(usize, usize)> = tree
                .edges()
                .chain(extra.into_iter().filter(|(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))))
                .collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

/// A proper coloring with every class non-empty: greedy over a random vertex
/// order, each vertex taking a random allowed color, then colors renumbered
/// by first appearance.
pub fn proper_coloring(g: &Graph, order_keys: &[u64], picks: &[u64]) -> Coloring {
    let n = g.vertex_count();
    let palette = g.max_degree().unwrap_or(0) + 2;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (order_keys[v % order_keys.len()], v));
    let mut colors = vec![0usize; n];
    for &v in &order {
        let allowed: Vec<usize> = (1..=palette)
            .filter(|&c| g.neighbors(v).iter().all(|&w| colors[w] != c))
            .collect();
        colors[v] = allowed[(picks[v % picks.len()] % allowed.len() as u64) as usize];
    }
    let mut rename = vec![0usize; palette + 1];
    let mut next = 0;
    for c in colors.iter_mut() {
        if rename[*c] == 0 {
            next += 1;
            rename[*c] = next;
        }
        *c = rename[*c];
    }
    Coloring::new(next, colors).unwrap()
}

pub fn arb_graph_with_coloring(
    graphs: impl Strategy<Value = Graph>,
) -> impl Strategy<Value = (Graph, Coloring)> {
    (
        graphs,
        proptest::collection::vec(any::<u64>(), 1..16),
        proptest::collection::vec(any::<u64>(), 1..16),
    )
        .prop_map(|(g, keys, picks)| {
            let f = proper_coloring(&g, &keys, &picks);
            (g, f)
        })
}

/// Any surjective assignment of `k` colors, proper or not: random colors,
/// then the first `k` vertices of a random order get colors `1..=k`.
pub fn arb_tree_with_any_coloring(min: usize, max: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    arb_tree(min, max).prop_flat_map(|g| {
        let n = g.vertex_count();
        (1..=n).prop_flat_map(move |k| {
            let g = g.clone();
            (proptest::collection::vec(1..=k, n), arb_permutation(n)).prop_map(move |(mut c, perm)| {
                for (i, &v) in perm.iter().take(k).enumerate() {
                    c[v] = i + 1;
                }
                (g.clone(), Coloring::new(k, c).unwrap())
            })
        })
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}
