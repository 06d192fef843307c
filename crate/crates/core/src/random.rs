//! Seeded random instances for formula verification.
//!
//! Connected graphs are a uniformly random recursive tree plus a random number
//! of extra edges. Vertex ids are drawn sparsely so that nothing relies on ids
//! being `0..n`. Rational weights have numerators in `0..=20` and denominators
//! in `1..=5`.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};
use crate::products::{Branch, GraftSpec};
use crate::scalar::Scalar;
use crate::weights::WeightFunction;

pub const MAX_NUMERATOR: i64 = 20;
pub const MAX_DENOMINATOR: i64 = 5;

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    /// Instance `stream` of the run seeded by `seed`. Streams are independent,
    /// so instances can be generated in any order or in parallel.
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Generator { rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    fn ids(&mut self, n: usize) -> Vec<VertexId> {
        let pool = (3 * n).max(1) as VertexId;
        let mut ids: Vec<VertexId> = rand::seq::index::sample(&mut self.rng, pool as usize, n)
            .into_iter()
            .map(|i| i as VertexId)
            .collect();
        ids.shuffle(&mut self.rng);
        ids
    }

    fn tree_edges(&mut self, n: usize) -> BTreeSet<(usize, usize)> {
        (1..n).map(|child| (self.rng.gen_range(0..child), child)).collect()
    }

    fn build(&mut self, n: usize, edges: BTreeSet<(usize, usize)>) -> Graph {
        let ids = self.ids(n);
        let mut edges: Vec<_> = edges.into_iter().map(|(a, b)| (ids[a], ids[b])).collect();
        edges.shuffle(&mut self.rng);
        Graph::new(ids, edges).expect("generated graph is simple")
    }

    /// Connected graph with order in `min..=max`.
    pub fn connected_graph(&mut self, min: usize, max: usize) -> Graph {
        let n = self.between(min.max(1), max.max(min).max(1));
        let mut edges = self.tree_edges(n);
        if n >= 3 {
            let extra = self.rng.gen_range(0..=n);
            for _ in 0..extra {
                let a = self.rng.gen_range(0..n);
                let b = self.rng.gen_range(0..n);
                if a != b && !edges.contains(&(b, a)) {
                    edges.insert((a, b));
                }
            }
        }
        self.build(n, edges)
    }

    /// Tree with order in `min..=max`.
    pub fn tree(&mut self, min: usize, max: usize) -> Graph {
        let n = self.between(min.max(1), max.max(min).max(1));
        let edges = self.tree_edges(n);
        self.build(n, edges)
    }

    pub fn vertex(&mut self, g: &Graph) -> VertexId {
        *g.vertices().choose(&mut self.rng).expect("graph is nonempty")
    }

    pub fn weight<S: Scalar>(&mut self) -> S {
        let p = self.rng.gen_range(0..=MAX_NUMERATOR);
        let q = self.rng.gen_range(1..=MAX_DENOMINATOR);
        S::from_ratio(p, q).expect("small ratio")
    }

    /// A preset or an explicit random map over `g`.
    pub fn weights<S: Scalar>(&mut self, g: &Graph) -> WeightFunction<S> {
        match self.rng.gen_range(0..8) {
            0 => WeightFunction::Unit,
            1 => WeightFunction::Half,
            2 => WeightFunction::Degree,
            3 => WeightFunction::Constant(self.weight()),
            _ => WeightFunction::Explicit(g.vertices().iter().map(|&v| (v, self.weight())).collect()),
        }
    }

    pub fn permutation(&mut self, r: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..r).collect();
        p.shuffle(&mut self.rng);
        p
    }

    /// Random branch with order in `1..=max_order`.
    pub fn branch<S: Scalar>(&mut self, max_order: usize) -> Branch<S> {
        let graph = self.connected_graph(1, max_order);
        let root = self.vertex(&graph);
        let weights = self.weights(&graph);
        Branch::new(graph, root, weights)
    }

    /// Host of order `1..=max_host`, up to `max_branches` branches of order
    /// `1..=max_branch`. Receptors are drawn independently and may repeat
    /// unless `distinct` is set (then at most `|V_H|` branches are attached).
    pub fn graft_spec<S: Scalar>(
        &mut self,
        max_host: usize,
        max_branches: usize,
        max_branch: usize,
        distinct: bool,
    ) -> GraftSpec<S> {
        let host = self.connected_graph(1, max_host);
        let alpha = self.weights(&host);
        let mut count = self.between(0, max_branches);
        let mut receptors: Vec<VertexId> = host.vertices().to_vec();
        receptors.shuffle(&mut self.rng);
        if distinct {
            count = count.min(host.order());
        }
        let mut spec = GraftSpec::new(host.clone(), alpha);
        for &picked in receptors.iter().take(count) {
            let x = if distinct { picked } else { self.vertex(&host) };
            let b = self.branch(max_branch);
            spec = spec.attach(x, b);
        }
        spec
    }
}
