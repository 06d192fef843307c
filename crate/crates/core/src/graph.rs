//! Simple undirected graphs with opaque integer vertex ids.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

pub type VertexId = u32;

/// Largest order accepted by any constructor. Keeps the all-pairs distance
/// matrix bounded.
pub const MAX_ORDER: usize = 10_000;

/// A simple undirected graph.
///
/// Vertices keep the order in which they were given; that order is the row
/// order of distance matrices and the order used by the named product
/// constructors. Adjacency is stored by position.
#[derive(Clone, Debug)]
pub struct Graph {
    vertices: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, rejecting duplicate vertices, loops, duplicate edges and
    /// edges with unknown endpoints.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let vertices: Vec<VertexId> = vertices.into_iter().collect();
        if vertices.len() > MAX_ORDER {
            return Err(Error::TooLarge { order: vertices.len(), cap: MAX_ORDER });
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if index.insert(v, i).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
        }
        let mut sets = vec![BTreeSet::new(); vertices.len()];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let iu = *index.get(&u).ok_or(Error::UnknownVertex(u))?;
            let iv = *index.get(&v).ok_or(Error::UnknownVertex(v))?;
            if !sets[iu].insert(iv) {
                return Err(Error::DuplicateEdge(u, v));
            }
            sets[iv].insert(iu);
            edge_count += 1;
        }
        let adjacency = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(Graph { vertices, index, adjacency, edge_count })
    }

    /// Graph on vertices `0..order`.
    pub fn from_edges(order: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let order = VertexId::try_from(order)
            .map_err(|_| Error::TooLarge { order, cap: MAX_ORDER })?;
        Graph::new(0..order, edges.iter().copied())
    }

    pub fn singleton() -> Self {
        Graph::from_edges(1, &[]).unwrap()
    }

    /// Path on `n >= 1` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let edges: Vec<_> = (1..n as VertexId).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let n32 = n as VertexId;
        let edges: Vec<_> = (0..n32).map(|i| (i, (i + 1) % n32)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Extended cycle: `K1` for `r = 1`, `K2` for `r = 2`, `C_r` otherwise.
    pub fn extended_cycle(r: usize) -> Result<Self> {
        match r {
            0 => Err(Error::EmptyGraph),
            1 | 2 => Graph::path(r),
            _ => Graph::cycle(r),
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let n32 = n as VertexId;
        let edges: Vec<_> = (0..n32).flat_map(|i| (i + 1..n32).map(move |j| (i, j))).collect();
        Graph::from_edges(n, &edges)
    }

    /// Star `K_{1,leaves}` with hub `0`.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves as VertexId).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// `K4` minus the edge `0 - 3`. Vertices 1 and 2 have degree 3.
    pub fn diamond() -> Self {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index.contains_key(&v)
    }

    pub fn index_of(&self, v: VertexId) -> Result<usize> {
        self.index.get(&v).copied().ok_or(Error::UnknownVertex(v))
    }

    pub fn vertex_at(&self, i: usize) -> VertexId {
        self.vertices[i]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.adjacency[self.index_of(v)?].len())
    }

    pub fn degree_at(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn neighbors(&self, v: VertexId) -> Result<impl Iterator<Item = VertexId> + '_> {
        let i = self.index_of(v)?;
        Ok(self.adjacency[i].iter().map(|&j| self.vertices[j]))
    }

    /// Neighbor positions of the vertex at position `i`, ascending.
    pub fn neighbor_indices(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        match (self.index.get(&u), self.index.get(&v)) {
            (Some(&iu), Some(&iv)) => self.adjacency[iu].binary_search(&iv).is_ok(),
            _ => false,
        }
    }

    /// Edges as id pairs, each listed once with the lower position first.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(move |(i, nbrs)| {
            nbrs.iter()
                .filter(move |&&j| j > i)
                .map(move |&j| (self.vertices[i], self.vertices[j]))
        })
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        !self.is_empty()
            && self.size() + 1 == self.order()
            && crate::distance::is_connected(self).unwrap_or(false)
    }

    /// Same graph with every id passed through `f`, which must be injective.
    pub fn relabeled(&self, f: impl Fn(VertexId) -> VertexId) -> Result<Self> {
        Graph::new(self.vertices.iter().map(|&v| f(v)), self.edges().map(|(u, v)| (f(u), f(v))))
    }
}
