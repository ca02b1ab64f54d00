//! Locating colorings of connected graphs.
//!
//! A proper `k`-coloring partitions the vertices into ordered color classes
//! `(V_1, ..., V_k)`. The *color code* of a vertex is the vector of its
//! distances to each class, and a coloring is *locating* when no two vertices
//! share a code. This crate computes codes, verifies locating colorings with
//! explicit witnesses, finds the locating chromatic number by exact search, and
//! builds the family of trees `T_k` whose maximum degree `4 * 3^(k-3)` is the
//! largest possible for a tree with locating chromatic number `k`.
//!
//! ```
//! use locating::{extremal, coloring};
//!
//! let tree = extremal::build_extremal_tree(5).unwrap();
//! assert_eq!(tree.graph.max_degree().unwrap(), 36);
//! assert!(coloring::is_locating(&tree.graph, &tree.coloring).unwrap().is_locating());
//! ```

pub mod bounds;
pub mod coloring;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod solver;
pub mod trees;

pub use coloring::{CodeVector, Coloring, LocatingVerdict};
pub use error::{Error, Result};
pub use graph::{DistanceRow, Graph, UNREACHABLE};
pub use solver::{LowerBound, SearchConfig, SolveResult};
