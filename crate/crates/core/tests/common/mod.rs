//! Reference implementations that share no code with the library beyond the
//! graph and rational types: Floyd-Warshall distances, weights recomputed
//! from the edge list, and a separate gluing of graft products.

#![allow(dead_code)]

use std::collections::BTreeMap;

use graft_moments::{GraftSpec, Graph, Rational, VertexId, WeightFunction};

pub type W = WeightFunction<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

/// A graph as `0..n` with an edge list.
#[derive(Clone, Debug)]
pub struct Plain {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Plain {
    pub fn from_graph(g: &Graph) -> (Plain, Vec<VertexId>) {
        let ids: Vec<VertexId> = g.vertices().to_vec();
        let pos: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = g.edges().map(|(u, v)| (pos[&u], pos[&v])).collect();
        (Plain { n: ids.len(), edges }, ids)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// All-pairs distances; `None` when unreachable.
    pub fn floyd(&self) -> Vec<Vec<Option<u64>>> {
        let n = self.n;
        let mut d = vec![vec![None; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = Some(0);
        }
        for &(u, v) in &self.edges {
            d[u][v] = Some(1);
            d[v][u] = Some(1);
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                        if d[i][j].is_none_or(|c| a + b < c) {
                            d[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        d
    }

    pub fn connected(&self) -> bool {
        self.floyd().iter().all(|row| row.iter().all(Option::is_some))
    }

    /// `Σ_u Σ_v ρ(v)·d(u, v)`.
    pub fn moment(&self, rho: &[Rational]) -> Rational {
        let d = self.floyd();
        let mut acc = Rational::ZERO;
        for row in &d {
            for (v, entry) in row.iter().enumerate() {
                acc = acc + rho[v] * int(entry.expect("connected") as i64);
            }
        }
        acc
    }

    /// `Σ_{u<v} d(u, v)`.
    pub fn wiener(&self) -> Rational {
        let d = self.floyd();
        let acc: u64 = d.iter().enumerate().flat_map(|(u, row)| row[u + 1..].iter().map(|x| x.unwrap())).sum();
        int(acc as i64)
    }

    /// `Σ_{u<v} (δ_u + δ_v)·d(u, v)`.
    pub fn degree_distance(&self) -> Rational {
        let d = self.floyd();
        let deg = self.degrees();
        let mut acc = 0u64;
        for u in 0..self.n {
            for v in u + 1..self.n {
                acc += (deg[u] + deg[v]) as u64 * d[u][v].unwrap();
            }
        }
        int(acc as i64)
    }
}

/// Weight values in vertex order, recomputed without the library evaluator.
pub fn weight_values(w: &W, g: &Graph) -> Vec<Rational> {
    let (plain, ids) = Plain::from_graph(g);
    let deg = plain.degrees();
    ids.iter()
        .enumerate()
        .map(|(i, v)| match w {
            W::Unit => Rational::ONE,
            W::Half => ratio(1, 2),
            W::Degree => int(deg[i] as i64),
            W::Constant(c) => *c,
            W::Explicit(m) => m[v],
            W::Affine { .. } => panic!("affine weights are not generated"),
        })
        .collect()
}

pub fn moment_oracle(g: &Graph, w: &W) -> Rational {
    let (plain, _) = Plain::from_graph(g);
    plain.moment(&weight_values(w, g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Host(VertexId),
    Branch(usize, VertexId),
}

/// Glues the product by hand and returns it with its combined weights.
pub fn glue(spec: &GraftSpec<Rational>) -> (Plain, Vec<Rational>) {
    let canon = |k: Key| -> Key {
        match k {
            Key::Branch(i, y) if y == spec.attachments[i].root => Key::Host(spec.attachments[i].receptor),
            other => other,
        }
    };
    let mut index: BTreeMap<Key, usize> = BTreeMap::new();
    let mut gamma: Vec<Rational> = Vec::new();
    let mut add = |k: Key, w: Rational, index: &mut BTreeMap<Key, usize>| {
        let next = index.len();
        let i = *index.entry(k).or_insert(next);
        if i == gamma.len() {
            gamma.push(Rational::ZERO);
        }
        gamma[i] = gamma[i] + w;
    };

    let alpha = weight_values(&spec.host_weights, &spec.host);
    for (&x, &a) in spec.host.vertices().iter().zip(&alpha) {
        add(Key::Host(x), a, &mut index);
    }
    for (i, att) in spec.attachments.iter().enumerate() {
        let beta = weight_values(&att.weights, &att.branch);
        for (&y, &b) in att.branch.vertices().iter().zip(&beta) {
            add(canon(Key::Branch(i, y)), b, &mut index);
        }
    }
    let mut edges: Vec<(usize, usize)> = spec
        .host
        .edges()
        .map(|(u, v)| (index[&Key::Host(u)], index[&Key::Host(v)]))
        .collect();
    for (i, att) in spec.attachments.iter().enumerate() {
        for (u, v) in att.branch.edges() {
            edges.push((index[&canon(Key::Branch(i, u))], index[&canon(Key::Branch(i, v))]));
        }
    }
    (Plain { n: index.len(), edges }, gamma)
}

pub fn graft_oracle(spec: &GraftSpec<Rational>) -> Rational {
    let (plain, gamma) = glue(spec);
    plain.moment(&gamma)
}

pub fn graft_degree_oracle(spec: &GraftSpec<Rational>) -> Rational {
    glue(spec).0.degree_distance()
}
