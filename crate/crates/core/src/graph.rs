//! Finite multigraphs and their cycle matroids.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matroid::{max_ground, subsets_of, ElementSet, FiniteMatroid, Ground, MatroidError};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("edge endpoint `{0}` is not a vertex")]
    UnknownVertex(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A finite multigraph; loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    pub vertices: Vec<String>,
    pub edge_labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

/// `{ "vertices": [labels], "edges": [[u, v], ...] }`; edges are named
/// `e0, e1, ...` in file order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphFile {
    pub fn to_graph(&self) -> Result<FiniteGraph, GraphError> {
        let find = |v: &String| {
            self.vertices
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| GraphError::UnknownVertex(v.clone()))
        };
        let edges = self
            .edges
            .iter()
            .map(|[a, b]| Ok((find(a)?, find(b)?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        Ok(FiniteGraph::new(self.vertices.len(), edges))
    }
}

impl FiniteGraph {
    /// Vertices `v0, v1, ...`, edges `e0, e1, ...`.
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        FiniteGraph {
            vertices: (0..n_vertices).map(|i| format!("v{i}")).collect(),
            edge_labels: (0..edges.len()).map(|i| format!("e{i}")).collect(),
            edges,
        }
    }

    pub fn with_labels(vertices: Vec<String>, edge_labels: Vec<String>, edges: Vec<(usize, usize)>) -> Self {
        debug_assert_eq!(edge_labels.len(), edges.len());
        FiniteGraph {
            vertices,
            edge_labels,
            edges,
        }
    }

    pub fn triangle() -> Self {
        FiniteGraph::new(3, vec![(0, 1), (1, 2), (2, 0)])
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut uf = UnionFind::new(self.n_vertices());
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        (1..self.n_vertices()).all(|v| uf.find(v) == uf.find(0))
    }

    /// True iff the edges in `s` contain no cycle (loops and parallel pairs
    /// are cycles).
    pub fn is_forest(&self, s: ElementSet) -> bool {
        let mut uf = UnionFind::new(self.n_vertices());
        s.iter().all(|e| {
            let (a, b) = self.edges[e];
            uf.union(a, b)
        })
    }

    /// Number of edges in a spanning forest.
    pub fn forest_rank(&self) -> usize {
        let mut uf = UnionFind::new(self.n_vertices());
        self.edges.iter().filter(|&&(a, b)| uf.union(a, b)).count()
    }

    /// The cycle matroid: bases are the edge sets of maximal spanning forests.
    pub fn cycle_matroid(&self) -> Result<FiniteMatroid, GraphError> {
        let ground = Ground::new(self.edge_labels.iter().cloned())?;
        let bound = max_ground();
        if ground.len() > bound {
            return Err(MatroidError::GroundTooLarge {
                size: ground.len(),
                bound,
            }
            .into());
        }
        let r = self.forest_rank();
        let bases = subsets_of(ground.full())
            .filter(|s| s.len() == r && self.is_forest(*s))
            .collect();
        Ok(FiniteMatroid::from_bases_unchecked(ground, bases))
    }
}

/// A cycle among `edges` (pairs of vertex indices below `n_vertices`), as
/// edge positions, or `None` when the edges form a forest.
pub fn find_cycle(n_vertices: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut uf = UnionFind::new(n_vertices);
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_vertices];
    for (k, &(a, b)) in edges.iter().enumerate() {
        if !uf.union(a, b) {
            let mut path = forest_path(&adj, a, b);
            path.push(k);
            path.sort_unstable();
            return Some(path);
        }
        adj[a].push((b, k));
        adj[b].push((a, k));
    }
    None
}

/// Edge positions on the unique path from `from` to `to` in a forest.
fn forest_path(adj: &[Vec<(usize, usize)>], from: usize, to: usize) -> Vec<usize> {
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut queue = std::collections::VecDeque::from([from]);
    seen[from] = true;
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(y, k) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, k));
                queue.push_back(y);
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = to;
    while let Some((x, k)) = prev[cur] {
        out.push(k);
        cur = x;
    }
    out
}

/// Union-find with path halving; `union` reports whether two classes merged.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    /// Extend to at least `n` singleton classes.
    pub fn grow(&mut self, n: usize) {
        while self.parent.len() < n {
            self.parent.push(self.parent.len());
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
