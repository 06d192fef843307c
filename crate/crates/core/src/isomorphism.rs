//! Exhaustive isomorphism testing for small graphs.
//!
//! A bijection is built vertex by vertex. Candidates must share the vertex
//! invariant (degree plus sorted distance profile) and preserve distances to
//! every vertex already mapped, which is equivalent to preserving adjacency
//! once the map is complete.

use crate::distance::bfs_row;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CAP: usize = 16;

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    are_isomorphic_with_cap(a, b, DEFAULT_CAP)
}

pub fn are_isomorphic_with_cap(a: &Graph, b: &Graph, cap: usize) -> Result<bool> {
    for g in [a, b] {
        if g.order() > cap {
            return Err(Error::TooLarge { order: g.order(), cap });
        }
    }
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let pa = Profile::new(a);
    let pb = Profile::new(b);
    if pa.sorted_invariants() != pb.sorted_invariants() {
        return Ok(false);
    }
    let order = pa.search_order();
    let mut mapping = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    Ok(extend(&pa, &pb, &order, 0, &mut mapping, &mut used))
}

/// Per-vertex data used for pruning.
pub(crate) struct Profile {
    dist: Vec<Vec<u32>>,
    invariants: Vec<(usize, Vec<u32>)>,
}

impl Profile {
    pub(crate) fn new(g: &Graph) -> Self {
        let dist: Vec<Vec<u32>> = (0..g.order()).map(|i| bfs_row(g, i)).collect();
        let invariants = dist
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut sorted = row.clone();
                sorted.sort_unstable();
                (g.degree_at(i), sorted)
            })
            .collect();
        Profile { dist, invariants }
    }

    /// Multiset of vertex invariants; equal for isomorphic graphs.
    pub(crate) fn sorted_invariants(&self) -> Vec<(usize, Vec<u32>)> {
        let mut inv = self.invariants.clone();
        inv.sort();
        inv
    }

    /// Rarest invariant class first, then by distance from already placed
    /// vertices so that constraints bite early.
    fn search_order(&self) -> Vec<usize> {
        let n = self.dist.len();
        let class_size = |i: usize| {
            self.invariants.iter().filter(|inv| **inv == self.invariants[i]).count()
        };
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            let next = (0..n)
                .filter(|&i| !placed[i])
                .min_by_key(|&i| {
                    let nearest: u32 =
                        order.iter().map(|&p: &usize| self.dist[p][i]).min().unwrap_or(0);
                    (nearest, class_size(i), i)
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        order
    }
}

fn extend(
    a: &Profile,
    b: &Profile,
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for c in 0..used.len() {
        if used[c] || a.invariants[v] != b.invariants[c] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&p| a.dist[v][p] == b.dist[c][mapping[p]]);
        if !consistent {
            continue;
        }
        mapping[v] = c;
        used[c] = true;
        if extend(a, b, order, depth + 1, mapping, used) {
            return true;
        }
        used[c] = false;
    }
    mapping[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_path_is_isomorphic() {
        let p4 = Graph::path(4).unwrap();
        let shuffled = Graph::new([3, 1, 0, 2], [(2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(are_isomorphic(&p4, &shuffled).unwrap());
    }

    #[test]
    fn path_is_not_star() {
        let p4 = Graph::path(4).unwrap();
        let k13 = Graph::star(3).unwrap();
        assert!(!are_isomorphic(&p4, &k13).unwrap());
    }

    #[test]
    fn same_degree_sequence_different_graphs() {
        // C6 vs two triangles: both 2-regular on 6 vertices.
        let c6 = Graph::cycle(6).unwrap();
        let two_c3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_c3).unwrap());
        assert!(are_isomorphic(&two_c3, &two_c3).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let big = Graph::path(17).unwrap();
        assert!(matches!(are_isomorphic(&big, &big), Err(Error::TooLarge { .. })));
        assert!(are_isomorphic_with_cap(&big, &big, 20).unwrap());
    }

    #[test]
    fn petersen_relabeling() {
        let outer: Vec<(u32, u32)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<(u32, u32)> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<(u32, u32)> = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let p = Graph::from_edges(10, &edges).unwrap();
        let q = p.relabeled(|v| (v * 7 + 3) % 10).unwrap();
        assert!(are_isomorphic(&p, &q).unwrap());
    }
}
