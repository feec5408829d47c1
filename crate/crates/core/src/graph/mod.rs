//! Decision procedures on simple undirected graphs.

mod bounds;
mod iso;
mod patterns;
mod planarity;
mod search;
mod witness;

use std::collections::BTreeSet;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

pub use bounds::{
    edge_bound_check, EdgeBoundCheck, EdgeBoundRegime, NEAR_BOUNDARY_SLACK, NO_K5_SUBDIVISION_EDGE_FACTOR,
    NO_K6_SUBDIVISION_EDGE_FACTOR,
};
pub use iso::{find_monomorphism, is_isomorphic};
pub use patterns::{delta_wye_neighbours, PatternGraph};
pub use planarity::{is_planar, is_planar_bool, Planarity};
pub use search::{has_minor, has_subdivision, linkless_necessary, LinklessCheck, SearchOptions, SearchOutcome};
pub use witness::MinorWitness;

/// Host graphs for the exhaustive searches are limited to this many vertices
/// after reduction; larger hosts report an inconclusive outcome.
pub const SEARCH_VERTEX_LIMIT: usize = 128;

/// A simple undirected graph. Vertices carry their original labels and are
/// addressed internally by dense indices in increasing label order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from labelled vertices and edges. Endpoints of edges are
    /// added as vertices; repeated edges collapse, loops are rejected.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let edges: Vec<(VertexId, VertexId)> = edges.into_iter().collect();
        let mut set: BTreeSet<VertexId> = vertices.into_iter().collect();
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::NotAGraph(format!("loop at vertex {a}")));
            }
            set.insert(a);
            set.insert(b);
        }
        let labels: Vec<VertexId> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); labels.len()];
        for (a, b) in edges {
            let i = labels.binary_search(&a).unwrap();
            let j = labels.binary_search(&b).unwrap();
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { labels, adj })
    }

    pub fn from_edges<E: IntoIterator<Item = (VertexId, VertexId)>>(edges: E) -> Result<Self> {
        Self::new(std::iter::empty(), edges)
    }

    /// Graph on `0..n` with the given index edges.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::new(0..n as VertexId, edges.iter().map(|&(a, b)| (a as VertexId, b as VertexId)))
            .expect("index edges must not contain loops")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self::from_index_edges(n, &edges)
    }

    /// Interprets a complex of dimension at most one as a graph.
    pub fn from_complex(k: &SimplicialComplex) -> Result<Self> {
        if k.dim().is_some_and(|d| d > 1) {
            return Err(Error::NotAGraph(format!("complex has dimension {}", k.dim().unwrap())));
        }
        Ok(Self::one_skeleton(k))
    }

    /// The 1-skeleton of any complex.
    pub fn one_skeleton(k: &SimplicialComplex) -> Self {
        let mut edges = BTreeSet::new();
        for f in k.facets() {
            let vs = f.vertices();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    edges.insert((vs[i], vs[j]));
                }
            }
        }
        Self::new(k.vertices().iter().copied(), edges).expect("faces have distinct vertices")
    }

    pub fn to_complex(&self) -> SimplicialComplex {
        let isolated = (0..self.order()).filter(|&i| self.adj[i].is_empty()).map(|i| Simplex::vertex(self.labels[i]));
        let edges = self
            .edges()
            .into_iter()
            .map(|(i, j)| Simplex::from_sorted(vec![self.labels[i], self.labels[j]]));
        SimplicialComplex::from_simplices(isolated.chain(edges))
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> VertexId {
        self.labels[i]
    }

    pub fn index_of(&self, label: VertexId) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub fn has_edge_labels(&self, a: VertexId, b: VertexId) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.has_edge(i, j),
            _ => false,
        }
    }

    /// Index edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    pub fn edge_labels(&self) -> Vec<(VertexId, VertexId)> {
        self.edges().into_iter().map(|(i, j)| (self.labels[i], self.labels[j])).collect()
    }

    /// A copy with additional labelled edges.
    pub fn with_edges<E: IntoIterator<Item = (VertexId, VertexId)>>(&self, extra: E) -> Result<Self> {
        Self::new(self.labels.iter().copied(), self.edge_labels().into_iter().chain(extra))
    }

    /// A copy with one index edge removed; vertices are kept.
    pub fn without_edge(&self, i: usize, j: usize) -> Self {
        let mut g = self.clone();
        g.adj[i].retain(|&x| x != j);
        g.adj[j].retain(|&x| x != i);
        g
    }

    /// Subgraph induced on the given indices (labels preserved).
    pub fn induced(&self, keep: &[usize]) -> Self {
        let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
        let edges = self
            .edges()
            .into_iter()
            .filter(|(i, j)| keep_set.contains(i) && keep_set.contains(j))
            .map(|(i, j)| (self.labels[i], self.labels[j]));
        Self::new(keep_set.iter().map(|&i| self.labels[i]), edges).unwrap()
    }

    /// Connected components as sorted index lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether the vertex set (indices) induces a connected subgraph.
    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return false;
        }
        let members: BTreeSet<usize> = set.iter().copied().collect();
        let mut seen = BTreeSet::from([set[0]]);
        let mut stack = vec![set[0]];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if members.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == members.len()
    }

    /// Adds a vertex adjacent to every existing vertex, labelled one past the
    /// current maximum label. Returns the new graph and the apex label.
    pub fn add_apex(&self) -> (Self, VertexId) {
        let apex = self.labels.last().map_or(0, |&m| m + 1);
        let spokes: Vec<_> = self.labels.iter().map(|&v| (apex, v)).collect();
        (self.with_edges(spokes).unwrap(), apex)
    }
}
