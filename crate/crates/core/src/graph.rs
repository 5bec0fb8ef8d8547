//! Bounded-degree simple undirected graphs.
//!
//! Vertices are dense ids `0..n`. Adjacency lists are kept sorted and every
//! undirected edge gets a stable index: edges are numbered in lexicographic
//! `(u, v)` order with `u < v`. Edge colorings and the text formats in
//! [`crate::io`] rely on that numbering.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A validated simple graph with an explicit degree bound `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    d: usize,
    adjacency: Vec<Vec<Vertex>>,
    // edge index of `adjacency[v][i]`
    incident: Vec<Vec<usize>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds and validates a graph on `n` vertices.
    ///
    /// Edge orientation and order do not matter: any permutation of the same
    /// edge list produces an equal value. Connectivity is not checked here;
    /// see [`Graph::new_connected`].
    pub fn new(n: usize, edges: &[(Vertex, Vertex)], d: usize) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            if nbrs.len() > d {
                return Err(Error::DegreeExceeded {
                    vertex: v,
                    degree: nbrs.len(),
                    bound: d,
                });
            }
            nbrs.sort_unstable();
        }
        let incident = adjacency
            .iter()
            .enumerate()
            .map(|(u, nbrs)| {
                nbrs.iter()
                    .map(|&v| {
                        let key = (u.min(v), u.max(v));
                        normalized.binary_search(&key).expect("edge present")
                    })
                    .collect()
            })
            .collect();

        Ok(Graph {
            d,
            adjacency,
            incident,
            edges: normalized,
        })
    }

    /// Like [`Graph::new`] but additionally rejects disconnected graphs.
    pub fn new_connected(n: usize, edges: &[(Vertex, Vertex)], d: usize) -> Result<Self> {
        let g = Self::new(n, edges, d)?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Declared degree bound.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    /// `(neighbor, edge index)` pairs of `v`, sorted by neighbor.
    pub fn incident_edges(&self, v: Vertex) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.adjacency[v]
            .iter()
            .copied()
            .zip(self.incident[v].iter().copied())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.n() {
            return None;
        }
        self.adjacency[u]
            .binary_search(&v)
            .ok()
            .map(|i| self.incident[u][i])
    }

    /// Same graph with a different (larger or equal) degree bound.
    pub fn with_bound(&self, d: usize) -> Result<Self> {
        Self::new(self.n(), &self.edges, d)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// All vertices within shortest-path distance `r` of `v`.
    pub fn bfs_ball(&self, v: Vertex, r: usize) -> Result<BfsBall> {
        self.check_vertex(v)?;
        let mut distance = BTreeMap::new();
        distance.insert(v, 0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = distance[&u];
            if du == r {
                continue;
            }
            for &w in self.neighbors(u) {
                if let std::collections::btree_map::Entry::Vacant(e) = distance.entry(w) {
                    e.insert(du + 1);
                    queue.push_back(w);
                }
            }
        }
        let vertices = VertexSet(distance.keys().copied().collect());
        Ok(BfsBall { vertices, distance })
    }

    /// Members of `a` with at least one neighbor outside `a`.
    pub fn vertex_boundary(&self, a: &VertexSet) -> Result<VertexSet> {
        let inside = self.membership(a)?;
        Ok(VertexSet(
            a.iter()
                .filter(|&v| self.neighbors(v).iter().any(|&w| !inside[w]))
                .collect(),
        ))
    }

    /// Whether the subgraph spanned by `a` is connected.
    pub fn is_connected_induced(&self, a: &VertexSet) -> Result<bool> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        let inside = self.membership(a)?;
        let mut seen = vec![false; self.n()];
        let start = a.as_slice()[0];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        Ok(count == a.len())
    }

    fn membership(&self, a: &VertexSet) -> Result<Vec<bool>> {
        let mut inside = vec![false; self.n()];
        for v in a.iter() {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        Ok(inside)
    }
}

/// Result of [`Graph::bfs_ball`]: the ball and exact distances from its center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsBall {
    pub vertices: VertexSet,
    pub distance: BTreeMap<Vertex, usize>,
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    /// Sorts and validates `vertices` against a graph on `n` vertices.
    pub fn new(mut vertices: Vec<Vertex>, n: usize) -> Result<Self> {
        vertices.sort_unstable();
        if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidVertexSet("duplicate vertex".into()));
        }
        Ok(VertexSet(vertices))
    }

    /// Every vertex of a graph on `n` vertices.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        VertexSet(vertices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}
