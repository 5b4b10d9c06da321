//! Finite simple graphs on the vertex set `{1, .., n}` together with the
//! combinatorial invariants the rest of the crate consumes: closed
//! neighborhoods, matchings, minimal dominating sets, the degree-based
//! vertex partition, and desk-scale enumeration of trees and graphs up to
//! isomorphism.

mod domination;
mod enumerate;
mod family;
mod matching;
mod partition;

pub use domination::{domination_numbers, minimal_dominating_sets};
pub use enumerate::{enumerate_graphs, enumerate_trees, tree_canonical_id};
pub use family::{parse_edge_list, GraphFamilySpec};
pub use matching::matching_number;
pub use partition::{vertex_partition, VertexPartition};

use std::fmt;

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

/// An immutable finite simple graph. Vertices are `1..=n`; edges are stored
/// as normalized `(u, v)` pairs with `u < v`, sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops and out-of-range endpoints.
    /// Duplicate edges collapse (edge sets, not multisets).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::parameter(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {n}"
            )));
        }
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::parameter(format!("self-loop at vertex {a}")));
            }
            if !(1..=n).contains(&a) || !(1..=n).contains(&b) {
                return Err(Error::parameter(format!(
                    "edge {{{a},{b}}} has an endpoint outside 1..={n}"
                )));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in &normalized {
            adj[u - 1] = adj[u - 1].with(v);
            adj[v - 1] = adj[v - 1].with(u);
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (1..=self.n).contains(&u) && (1..=self.n).contains(&v) && self.adj[u - 1].contains(v)
    }

    /// Open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!((1..=self.n).contains(&v), "vertex out of range: {v}");
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn min_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).min().unwrap()
    }

    /// Closed neighborhood `N[v] = {v} ∪ N(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        if !(1..=self.n).contains(&v) {
            return Err(Error::parameter(format!(
                "vertex {v} out of range 1..={}",
                self.n
            )));
        }
        Ok(self.adj[v - 1].with(v))
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        debug_assert!(s.is_subset_of(self.vertex_set()));
        self.edges
            .iter()
            .all(|&(u, v)| !(s.contains(u) && s.contains(v)))
    }

    /// Vertex sets of the connected components, sorted.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for start in 1..=self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v).iter() {
                    if !comp.contains(u) {
                        comp = comp.with(u);
                        stack.push(u);
                    }
                }
            }
            seen = seen.union(comp);
            comps.push(comp);
        }
        comps.sort();
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Acyclicity test: a graph is a forest iff `|E| = n - #components`.
    pub fn is_forest(&self) -> bool {
        self.edges.len() == self.n - self.components().len()
    }

    pub fn is_tree(&self) -> bool {
        self.is_forest() && self.is_connected()
    }

    /// Disjoint union with consecutive relabeling of the parts.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        let n: usize = parts.iter().map(|g| g.n).sum();
        if parts.is_empty() {
            return Err(Error::parameter("disjoint union of zero graphs"));
        }
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in parts {
            edges.extend(g.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += g.n;
        }
        Graph::new(n, edges)
    }

    /// Induced subgraph on `keep`, relabeled to `1..=|keep|`. The returned
    /// map sends each new index (position, 1-based) to its old index.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        debug_assert!(keep.is_subset_of(self.vertex_set()));
        let old: Vec<usize> = keep.iter().collect();
        let index_of = |v: usize| old.iter().position(|&w| w == v).unwrap() + 1;
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|&(u, v)| (index_of(u), index_of(v)))
            .collect();
        let g = Graph::new(old.len().max(1), edges).expect("induced subgraph is valid");
        (g, old)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
