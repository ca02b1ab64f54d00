//! Exact locating chromatic number by backtracking search.
//!
//! Vertices are colored in BFS order from a vertex of maximum degree. With
//! symmetry breaking on, a vertex may only take a color `c` once colors
//! `1..c` have all appeared, which removes the `k!` relabelings of each
//! coloring. On trees, siblings are ordered by subtree shape, and of two
//! isomorphic sibling subtrees the first must carry the lexicographically
//! smaller coloring.
//!
//! Every partial assignment is pruned by four sound rules:
//!
//! * properness against already colored neighbors;
//! * twins: two non-adjacent vertices with identical neighborhoods (for
//!   instance two leaves on the same parent) always have equal codes when
//!   they share a color, so they get different colors, the earlier one the
//!   smaller color when symmetry breaking is on;
//! * class capacity: once a vertex and all its neighbors are colored, with
//!   `p` colors among the neighbors, no color may appear on more than
//!   `2^(p-1) * 3^(k-1-p)` of them;
//! * determined codes: a vertex's distance to class `j` is pinned once the
//!   nearest colored `j` vertex is no farther than the nearest uncolored one
//!   that could still take color `j`, and two same-colored vertices whose
//!   codes are fully pinned and equal stay equal in every completion.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use crate::bounds;
use crate::coloring::{self, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph the brute-force oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 12;

const UNSET: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_limit: Option<u64>,
    pub symmetry_breaking: bool,
    pub time_limit: Option<Duration>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_limit: None,
            symmetry_breaking: true,
            time_limit: None,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if self.node_limit == Some(0) {
            return Err(Error::input("node limit must be positive"));
        }
        if self.time_limit == Some(Duration::ZERO) {
            return Err(Error::input("time limit must be positive"));
        }
        Ok(())
    }
}

/// Where the search started its `k` schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerBound {
    /// One vertex: a single color.
    None,
    /// Two adjacent vertices need two colors.
    Edge,
    /// Three or more vertices: with two colors every code is `(0,1)` or `(1,0)`.
    SmallOrder,
    /// Trees: `Δ <= 4 * 3^(k-3)` for a locating `k`-coloring.
    TreeDegree,
}

impl fmt::Display for LowerBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerBound::None => "none",
            LowerBound::Edge => "edge",
            LowerBound::SmallOrder => "small-order",
            LowerBound::TreeDegree => "tree-degree",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub chi_l: usize,
    /// A locating coloring with `chi_l` colors.
    pub certificate: Coloring,
    pub lower_bound: usize,
    pub lower_bound_used: LowerBound,
    pub nodes_explored: u64,
}

/// Smallest `k >= 3` with `4 * 3^(k-3) >= delta`: a tree on three or more
/// vertices with maximum degree `delta` needs at least this many colors.
pub fn tree_degree_lower_bound(delta: usize) -> Result<usize> {
    if delta < 1 {
        return Err(Error::input("maximum degree must be at least 1"));
    }
    let mut k = 3;
    while (bounds::new_bound(k)? as usize) < delta {
        k += 1;
    }
    Ok(k)
}

/// Best cheap lower bound on the locating chromatic number of a connected graph.
pub fn lower_bound(g: &Graph) -> Result<(usize, LowerBound)> {
    let n = g.vertex_count();
    Ok(match n {
        0 => return Err(Error::input("empty graph")),
        1 => (1, LowerBound::None),
        2 => (2, LowerBound::Edge),
        _ if g.is_tree() => {
            let k = tree_degree_lower_bound(g.max_degree()?)?;
            if k > 3 {
                (k, LowerBound::TreeDegree)
            } else {
                (3, LowerBound::SmallOrder)
            }
        }
        _ => (3, LowerBound::SmallOrder),
    })
}

enum Outcome {
    Found(Coloring),
    Absent,
    Limit,
}

/// Shared node and time budget across the searches of one request.
struct Budget {
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    nodes: u64,
}

impl Budget {
    fn new(cfg: &SearchConfig) -> Self {
        Budget {
            node_limit: cfg.node_limit,
            deadline: cfg.time_limit.map(|t| Instant::now() + t),
            nodes: 0,
        }
    }

    /// Counts one node; false once a limit is hit.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.node_limit.is_some_and(|l| self.nodes > l) {
            return false;
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                return Instant::now() < d;
            }
        }
        true
    }
}

/// Everything about the search that depends only on the graph.
struct Plan {
    order: Vec<usize>,
    /// Per position: neighbors colored earlier.
    earlier_nbrs: Vec<Vec<usize>>,
    /// Per position: false twins colored earlier.
    earlier_twins: Vec<Vec<usize>>,
    /// Pairs of isomorphic sibling subtrees `(A, B)`, each listed in matching
    /// order, with every vertex of `A` placed before its partner in `B`.
    pairs: Vec<SiblingPair>,
    /// Per position: `(pair, index)` for each pair whose `B` side holds this vertex.
    pair_checks: Vec<Vec<(usize, usize)>>,
}

impl Plan {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let root = g.max_degree_vertex().unwrap_or(0);
        let (order, pairs) = if g.is_tree() {
            tree_order(g, root)
        } else {
            (search_order(g, root), Vec::new())
        };
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let earlier_nbrs = order
            .iter()
            .map(|&v| g.neighbors(v).iter().copied().filter(|&w| pos[w] < pos[v]).collect())
            .collect();
        let earlier_twins = order
            .iter()
            .map(|&v| {
                order[..pos[v]]
                    .iter()
                    .copied()
                    .filter(|&u| !g.has_edge(u, v) && g.neighbors(u) == g.neighbors(v))
                    .collect()
            })
            .collect();
        let mut pair_checks = vec![Vec::new(); n];
        for (id, (a, b)) in pairs.iter().enumerate() {
            for (idx, (&u, &w)) in a.iter().zip(b).enumerate() {
                debug_assert!(pos[u] < pos[w]);
                pair_checks[pos[w]].push((id, idx));
            }
        }
        Plan {
            order,
            earlier_nbrs,
            earlier_twins,
            pairs,
            pair_checks,
        }
    }
}

/// Breadth-first order from `root`.
fn search_order(g: &Graph, root: usize) -> Vec<usize> {
    let mut seen = vec![false; g.vertex_count()];
    seen[root] = true;
    let mut order = vec![root];
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in g.neighbors(u) {
            if !std::mem::replace(&mut seen[w], true) {
                order.push(w);
            }
        }
    }
    order
}

/// Two isomorphic sibling subtrees, vertex by vertex along the isomorphism.
type SiblingPair = (Vec<usize>, Vec<usize>);

/// Breadth-first order for a tree rooted at `root`, with siblings sorted by
/// subtree size and isomorphism class, plus every pair of consecutive
/// isomorphic sibling subtrees. Each pair is listed vertex by vertex along the
/// isomorphism, in search order.
fn tree_order(g: &Graph, root: usize) -> (Vec<usize>, Vec<SiblingPair>) {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut bfs = vec![root];
    parent[root] = root;
    let mut head = 0;
    while head < bfs.len() {
        let u = bfs[head];
        head += 1;
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                bfs.push(w);
            }
        }
    }
    // isomorphism class ids of rooted subtrees, bottom up
    let mut class = vec![0usize; n];
    let mut size = vec![1usize; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    for &u in bfs.iter().rev() {
        let mut kids: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| parent[w] == u && w != root).collect();
        kids.sort_by_key(|&w| (size[w], class[w], w));
        size[u] += kids.iter().map(|&w| size[w]).sum::<usize>();
        let key: Vec<usize> = kids.iter().map(|&w| class[w]).collect();
        let next = ids.len();
        class[u] = *ids.entry(key).or_insert(next);
        children[u] = kids;
    }
    fn preorder(children: &[Vec<usize>], u: usize, out: &mut Vec<usize>) {
        out.push(u);
        for &c in &children[u] {
            preorder(children, c, out);
        }
    }
    let mut order = vec![root];
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        order.extend(&children[u]);
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for w in children[u].windows(2) {
            if class[w[0]] == class[w[1]] {
                let (mut a, mut b) = (Vec::new(), Vec::new());
                preorder(&children, w[0], &mut a);
                preorder(&children, w[1], &mut b);
                let mut zipped: Vec<(usize, usize)> = a.into_iter().zip(b).collect();
                zipped.sort_by_key(|&(_, y)| pos[y]);
                debug_assert!(zipped.windows(2).all(|w| pos[w[0].0] < pos[w[1].0]));
                pairs.push(zipped.into_iter().unzip());
            }
        }
    }
    (order, pairs)
}

struct Search<'a> {
    g: &'a Graph,
    plan: &'a Plan,
    k: usize,
    symmetry_breaking: bool,
    colors: Vec<usize>,
    class_size: Vec<usize>,
    unused_colors: usize,
    /// `capacity[p]` for `p` in `1..k`.
    capacity: Vec<usize>,
    /// Per pair: how many leading positions of `A` and `B` currently agree.
    pair_equal: Vec<usize>,
    counts: Vec<usize>,
    // scratch for determined-code pruning
    hi: Vec<u32>,
    lo: Vec<u32>,
    queue: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, plan: &'a Plan, k: usize, symmetry_breaking: bool) -> Self {
        let n = g.vertex_count();
        let capacity = (0..k)
            .map(|p| match p {
                0 => 0,
                p => bounds::class_capacity(p, k).map_or(usize::MAX, |c| c as usize),
            })
            .collect();
        Search {
            g,
            plan,
            k,
            symmetry_breaking,
            colors: vec![0; n],
            class_size: vec![0; k + 1],
            unused_colors: k,
            capacity,
            pair_equal: vec![0; plan.pairs.len()],
            counts: vec![0; k + 1],
            hi: vec![UNSET; n * k],
            lo: vec![UNSET; n * k],
            queue: Vec::with_capacity(n),
        }
    }

    fn run(&mut self, budget: &mut Budget) -> Outcome {
        match self.extend(0, budget) {
            Some(true) => {
                let coloring = Coloring::new(self.k, self.colors.clone()).expect("colors in range");
                debug_assert!(coloring::is_locating(self.g, &coloring).unwrap().is_locating());
                Outcome::Found(coloring)
            }
            Some(false) => Outcome::Absent,
            None => Outcome::Limit,
        }
    }

    /// Smallest color allowed at position `i` by the subtree-pair constraints,
    /// i.e. the largest partner color among pairs still tied up to here.
    fn pair_floor(&self, i: usize) -> usize {
        if !self.symmetry_breaking {
            return 1;
        }
        let mut floor = 1;
        for &(id, idx) in &self.plan.pair_checks[i] {
            if self.pair_equal[id] == idx {
                floor = floor.max(self.colors[self.plan.pairs[id].0[idx]]);
            }
        }
        for &w in &self.plan.earlier_twins[i] {
            floor = floor.max(self.colors[w] + 1);
        }
        floor
    }

    /// `Some(true)` when a locating coloring extends the current assignment,
    /// `Some(false)` when none does, `None` when the budget ran out.
    fn extend(&mut self, i: usize, budget: &mut Budget) -> Option<bool> {
        let n = self.plan.order.len();
        if i == n {
            return Some(true);
        }
        let v = self.plan.order[i];
        let top = if self.symmetry_breaking {
            let used = (1..=self.k).take_while(|&c| self.class_size[c] > 0).count();
            self.k.min(used + 1)
        } else {
            self.k
        };
        for c in self.pair_floor(i)..=top {
            if self.plan.earlier_nbrs[i].iter().any(|&w| self.colors[w] == c)
                || self.plan.earlier_twins[i].iter().any(|&w| self.colors[w] == c)
            {
                continue;
            }
            let unused_after = self.unused_colors - usize::from(self.class_size[c] == 0);
            if unused_after > n - i - 1 {
                continue;
            }
            if !budget.tick() {
                return None;
            }
            self.assign(i, v, c);
            let ok = self.capacity_ok(v) && !self.determined_collision();
            let result = if ok { self.extend(i + 1, budget) } else { Some(false) };
            if result == Some(true) {
                return result;
            }
            self.unassign(i, v);
            result?;
        }
        Some(false)
    }

    fn assign(&mut self, i: usize, v: usize, c: usize) {
        self.colors[v] = c;
        if self.class_size[c] == 0 {
            self.unused_colors -= 1;
        }
        self.class_size[c] += 1;
        for &(id, idx) in &self.plan.pair_checks[i] {
            if self.pair_equal[id] == idx && self.colors[self.plan.pairs[id].0[idx]] == c {
                self.pair_equal[id] = idx + 1;
            }
        }
    }

    fn unassign(&mut self, i: usize, v: usize) {
        for &(id, idx) in &self.plan.pair_checks[i] {
            if self.pair_equal[id] == idx + 1 {
                self.pair_equal[id] = idx;
            }
        }
        let c = std::mem::replace(&mut self.colors[v], 0);
        self.class_size[c] -= 1;
        if self.class_size[c] == 0 {
            self.unused_colors += 1;
        }
    }

    /// Neighborhoods touched by coloring `v` can still meet the class capacity:
    /// some final number `p` of neighbor colors admits every class seen so far
    /// and the whole degree.
    fn capacity_ok(&mut self, v: usize) -> bool {
        for &w in self.g.neighbors(v) {
            self.counts.iter_mut().for_each(|c| *c = 0);
            let (mut p, mut colored, mut largest) = (0, 0, 0);
            for &u in self.g.neighbors(w) {
                let c = self.colors[u];
                if c == 0 {
                    continue;
                }
                colored += 1;
                if self.counts[c] == 0 {
                    p += 1;
                }
                self.counts[c] += 1;
                largest = largest.max(self.counts[c]);
            }
            let degree = self.g.degree(w);
            let p_max = (self.k - 1).min(p + degree - colored);
            let feasible = (p.max(1)..=p_max).any(|q| {
                let cap = self.capacity[q];
                largest <= cap && degree <= q.saturating_mul(cap)
            });
            if !feasible {
                return false;
            }
        }
        true
    }

    fn possible(&self, v: usize, j: usize) -> bool {
        self.colors[v] == 0 && !self.g.neighbors(v).iter().any(|&w| self.colors[w] == j + 1)
    }

    /// Multi-source BFS for color `j + 1` into `hi` (colored sources only) or
    /// `lo` (also uncolored vertices that may still take the color).
    fn bfs(&mut self, j: usize, include_uncolored: bool) {
        let k = self.k;
        self.queue.clear();
        for v in 0..self.colors.len() {
            let source = self.colors[v] == j + 1 || include_uncolored && self.possible(v, j);
            let dist = if include_uncolored { &mut self.lo } else { &mut self.hi };
            if source {
                dist[v * k + j] = 0;
                self.queue.push(v);
            } else {
                dist[v * k + j] = UNSET;
            }
        }
        let dist = if include_uncolored { &mut self.lo } else { &mut self.hi };
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let next = dist[u * k + j] + 1;
            for &w in self.g.neighbors(u) {
                if dist[w * k + j] == UNSET {
                    dist[w * k + j] = next;
                    self.queue.push(w);
                }
            }
        }
    }

    /// Two colored vertices of one class whose codes are already fixed and equal.
    fn determined_collision(&mut self) -> bool {
        let k = self.k;
        for j in 0..k {
            self.bfs(j, false);
            self.bfs(j, true);
        }
        let mut seen: HashSet<&[u32]> = HashSet::new();
        for v in 0..self.colors.len() {
            if self.colors[v] == 0 {
                continue;
            }
            let hi = &self.hi[v * k..(v + 1) * k];
            let lo = &self.lo[v * k..(v + 1) * k];
            if hi != lo {
                continue;
            }
            if !seen.insert(hi) {
                return true;
            }
        }
        false
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Connectivity("locating colorings need a connected graph".into()));
    }
    Ok(())
}

/// Searches for a locating `k`-coloring. The result is the first one in the
/// canonical search order, so it is the same on every run with the same config.
pub fn exists_locating_k_coloring(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Option<Coloring>> {
    cfg.validate()?;
    require_connected(g)?;
    let n = g.vertex_count();
    if k == 0 || k > n {
        return Err(Error::input(format!("k = {k} outside 1..={n}")));
    }
    let mut budget = Budget::new(cfg);
    let plan = Plan::new(g);
    match Search::new(g, &plan, k, cfg.symmetry_breaking).run(&mut budget) {
        Outcome::Found(f) => Ok(Some(f)),
        Outcome::Absent => Ok(None),
        Outcome::Limit => Err(Error::ResourceLimit {
            lower: lower_bound(g)?.0,
            upper: n,
            nodes: budget.nodes,
        }),
    }
}

/// The locating chromatic number with a certificate, trying `k` upward from
/// [`lower_bound`]. Every `k` below the answer was searched exhaustively.
pub fn locating_chromatic_number(g: &Graph, cfg: &SearchConfig) -> Result<SolveResult> {
    cfg.validate()?;
    require_connected(g)?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::input("need at least two vertices"));
    }
    let (lb, tag) = lower_bound(g)?;
    let mut budget = Budget::new(cfg);
    let plan = Plan::new(g);
    for k in lb..=n {
        match Search::new(g, &plan, k, cfg.symmetry_breaking).run(&mut budget) {
            Outcome::Found(certificate) => {
                return Ok(SolveResult {
                    chi_l: k,
                    certificate,
                    lower_bound: lb,
                    lower_bound_used: tag,
                    nodes_explored: budget.nodes,
                })
            }
            Outcome::Absent => {}
            Outcome::Limit => {
                return Err(Error::ResourceLimit {
                    lower: k,
                    upper: n,
                    nodes: budget.nodes,
                })
            }
        }
    }
    unreachable!("giving every vertex its own color is always locating")
}

/// Locating chromatic number by enumerating every proper coloring, with no
/// pruning beyond properness and no lower bound. Only for tiny graphs.
pub fn naive_oracle_chi_l(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::input(format!(
            "oracle is limited to {ORACLE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    require_connected(g)?;
    for k in 1..=n {
        let mut colors = vec![0; n];
        if naive_fill(g, k, 0, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

fn naive_fill(g: &Graph, k: usize, v: usize, colors: &mut Vec<usize>) -> bool {
    if v == colors.len() {
        let f = Coloring::new(k, colors.clone()).expect("colors in range");
        return f.is_surjective()
            && coloring::is_locating(g, &f).expect("inputs validated").is_locating();
    }
    for c in 1..=k {
        if g.neighbors(v).iter().any(|&w| w < v && colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if naive_fill(g, k, v + 1, colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}
