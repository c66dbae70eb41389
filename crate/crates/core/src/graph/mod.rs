//! Simple undirected graphs over dense `0..n` vertex indices.
//!
//! A [`Graph`] stores one sorted neighbor list per vertex. Two graphs with the
//! same vertex count and edge set compare equal, whatever order the edges
//! were supplied in.

mod families;
mod stats;
mod text;

use std::collections::VecDeque;

use thiserror::Error;

pub use families::{double_star, path, star};
pub use stats::{DegreeStats, EdgePairStats};
pub use text::{parse_edge_list, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({i}, {j}) references a vertex outside 0..{n}")]
    OutOfRange { i: usize, j: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, out-of-range
    /// endpoints and duplicate edges (in either orientation).
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(GraphError::OutOfRange { i, j, n });
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (v.min(w[0]), v.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count: edges.len(),
        })
    }

    /// Builds a graph from edges the caller guarantees are valid (generators).
    pub(crate) fn from_valid_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (i, j) in edges {
            debug_assert!(i != j && i < n && j < n);
            adjacency[i].push(j);
            adjacency[j].push(i);
            edge_count += 1;
        }
        for list in &mut adjacency {
            list.sort_unstable();
            debug_assert!(list.windows(2).all(|w| w[0] < w[1]));
        }
        Graph {
            adjacency,
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Degree sequence sorted from largest to smallest.
    pub fn degrees_descending(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.vertex_count() && self.adjacency[i].binary_search(&j).is_ok()
    }

    /// Edges as `(i, j)` with `i < j`, ordered by `(i, j)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// True iff the graph is connected and has exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 || self.edge_count != n - 1 {
            return false;
        }
        self.component_sizes().len() == 1
    }

    pub fn is_connected(&self) -> bool {
        self.component_sizes().len() <= 1
    }

    fn component_sizes(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut size = 0;
            while let Some(v) = queue.pop_front() {
                size += 1;
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }

    /// Two-colors every component by BFS.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &w in &self.adjacency[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count(), "permutation length mismatch");
        Graph::from_valid_edges(
            self.vertex_count(),
            self.edges().map(|(i, j)| (perm[i], perm[j])),
        )
    }

    pub fn degree_stats(&self) -> DegreeStats {
        DegreeStats::of(self)
    }

    pub fn edge_pair_stats(&self) -> EdgePairStats {
        EdgePairStats::of(self)
    }

    /// Number of edges joining two vertices of degree 2.
    pub fn degree2_pair_count(&self) -> usize {
        self.edges()
            .filter(|&(i, j)| self.degree(i) == 2 && self.degree(j) == 2)
            .count()
    }

    /// Serializes to the edge-list text format: `n m` then one `i j` line per
    /// edge with `i < j`.
    pub fn to_edge_list_text(&self) -> String {
        text::write_edge_list(self)
    }
}
