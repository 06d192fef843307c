//! Hop distances: single-source BFS, the all-pairs distance matrix, and
//! connectivity.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub(crate) const UNREACHED: u32 = u32::MAX;

/// BFS from position `source`; unreachable positions hold [`UNREACHED`].
pub(crate) fn bfs_row(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.order()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbor_indices(u) {
            if dist[v] == UNREACHED {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Hop distance from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: VertexId) -> Result<BTreeMap<VertexId, u32>> {
    let s = g.index_of(source)?;
    let row = bfs_row(g, s);
    if row.contains(&UNREACHED) {
        return Err(Error::DisconnectedGraph);
    }
    Ok(g.vertices().iter().copied().zip(row).collect())
}

pub fn is_connected(g: &Graph) -> Result<bool> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(!bfs_row(g, 0).contains(&UNREACHED))
}

/// Errors unless `g` is nonempty and connected.
pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if is_connected(g)? {
        Ok(())
    } else {
        Err(Error::DisconnectedGraph)
    }
}

/// All-pairs hop distances of a connected graph, rows in vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    vertices: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    entries: Vec<u32>,
    row_sums: Vec<u64>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let n = g.order();
        let mut entries = Vec::with_capacity(n * n);
        let mut row_sums = Vec::with_capacity(n);
        for i in 0..n {
            let row = bfs_row(g, i);
            if row.contains(&UNREACHED) {
                return Err(Error::DisconnectedGraph);
            }
            row_sums.push(row.iter().map(|&d| d as u64).sum());
            entries.extend(row);
        }
        let vertices = g.vertices().to_vec();
        let index = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Ok(DistanceMatrix { vertices, index, entries, row_sums })
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn index_of(&self, v: VertexId) -> Result<usize> {
        self.index.get(&v).copied().ok_or(Error::UnknownVertex(v))
    }

    /// Distance between positions `i` and `j`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.order() + j]
    }

    /// Distance between vertex ids.
    pub fn dist(&self, u: VertexId, v: VertexId) -> Result<u32> {
        Ok(self.get(self.index_of(u)?, self.index_of(v)?))
    }

    pub fn row(&self, i: usize) -> &[u32] {
        let n = self.order();
        &self.entries[i * n..(i + 1) * n]
    }

    /// Sum of row `i`, the transmission of the vertex at position `i`.
    pub fn row_sum(&self, i: usize) -> u64 {
        self.row_sums[i]
    }

    pub fn row_sums(&self) -> &[u64] {
        &self.row_sums
    }

    /// Sum of all entries (twice the Wiener index).
    pub fn total(&self) -> u64 {
        self.row_sums.iter().sum()
    }
}

pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    DistanceMatrix::new(g)
}
