//! Degree-distance formulas for cycles with trees or extended cycles grafted on.
//!
//! An extended cycle on `r` vertices is `K1` (`r = 1`), `K2` (`r = 2`) or the
//! cycle `C_r`. Its distance matrix has constant row sum `θ_r`.

use std::collections::BTreeMap;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::moments::{moment, moment_at};
use crate::products::{Branch, GraftSpec};
use crate::scalar::Scalar;
use crate::weights::WeightFunction;

/// `⌊r/2⌋·⌊(r+1)/2⌋`, the common row sum of the distance matrix of `C_r`
/// (0 for `r = 1`).
pub fn cycle_theta(r: u64) -> u64 {
    (r / 2) * r.div_ceil(2)
}

/// Whether every row of the distance matrix of the extended cycle on `r`
/// vertices sums to [`cycle_theta`].
pub fn theta_holds(r: usize) -> Result<bool> {
    let dm = DistanceMatrix::new(&Graph::extended_cycle(r)?)?;
    let theta = cycle_theta(r as u64);
    Ok(dm.row_sums().iter().all(|&s| s == theta))
}

fn extended_cycle_edges(r: usize) -> usize {
    match r {
        1 => 0,
        2 => 1,
        _ => r,
    }
}

fn extended_cycle_degree(r: usize) -> usize {
    match r {
        1 => 0,
        2 => 1,
        _ => 2,
    }
}

fn to_scalar<S: Scalar>(v: i128) -> Result<S> {
    S::from_i128(v).ok_or(Error::Overflow)
}

/// Per-vertex data of a graft of extended cycles: branch order `r_x`, edge
/// count `m_x`, row sum `θ_x` and degree `δ_x`, with the host's distance matrix.
#[derive(Clone, Debug)]
pub struct CycleVectors {
    pub r: Vec<i128>,
    pub m: Vec<i128>,
    pub theta: Vec<i128>,
    pub delta: Vec<i128>,
    pub distances: DistanceMatrix,
}

impl CycleVectors {
    /// Validates each `(r_x, m_x)` pair as an extended cycle.
    pub fn new(host_r: usize, per_vertex: &[(usize, usize)]) -> Result<Self> {
        if host_r == 0 {
            return Err(Error::InvalidExtendedCycle("host has no vertices".into()));
        }
        if per_vertex.len() != host_r {
            return Err(Error::ArityMismatch { expected: host_r, got: per_vertex.len() });
        }
        let mut cv = CycleVectors {
            r: Vec::with_capacity(host_r),
            m: Vec::with_capacity(host_r),
            theta: Vec::with_capacity(host_r),
            delta: Vec::with_capacity(host_r),
            distances: DistanceMatrix::new(&Graph::extended_cycle(host_r)?)?,
        };
        for &(r, m) in per_vertex {
            if r == 0 || m != extended_cycle_edges(r) {
                return Err(Error::InvalidExtendedCycle(format!("{r} vertices with {m} edges")));
            }
            cv.r.push(r as i128);
            cv.m.push(m as i128);
            cv.theta.push(cycle_theta(r as u64) as i128);
            cv.delta.push(extended_cycle_degree(r) as i128);
        }
        Ok(cv)
    }

    /// `uᵀ D v` over the host distance matrix.
    pub fn bilinear(&self, u: &[i128], v: &[i128]) -> i128 {
        let n = self.distances.order();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| u[i] * self.distances.get(i, j) as i128 * v[j])
            .sum()
    }
}

fn dot(u: &[i128], v: &[i128]) -> i128 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn total(u: &[i128]) -> i128 {
    u.iter().sum()
}

/// Degree distance of the graft of extended cycles `C_x` (one per vertex of
/// the extended cycle `C` on `host_r` vertices):
///
/// `2(m[θ] + [m][θ] - ⟨m,θ⟩) + (δθ + ⟨δ,θ⟩)[r] + 2 rᵀ D m`
///
/// where `m`, `θ`, `δ` without subscript are the edge count, row sum and
/// degree of the host, and `[v]` is the entry sum of `v`.
pub fn extended_cycles_degree_distance<S: Scalar>(
    host_r: usize,
    per_vertex: &[(usize, usize)],
) -> Result<S> {
    let cv = CycleVectors::new(host_r, per_vertex)?;
    let host_m = extended_cycle_edges(host_r) as i128;
    let host_theta = cycle_theta(host_r as u64) as i128;
    let host_delta = extended_cycle_degree(host_r) as i128;

    let sum_theta = total(&cv.theta);
    let value = 2 * (host_m * sum_theta + total(&cv.m) * sum_theta - dot(&cv.m, &cv.theta))
        + (host_delta * host_theta + dot(&cv.delta, &cv.theta)) * total(&cv.r)
        + 2 * cv.bilinear(&cv.r, &cv.m);
    to_scalar(value)
}

/// Degree distance when host and every branch are proper cycles:
///
/// `4(Σr_x)(Σθ_x) + 2(θΣr_x + rΣθ_x - Σr_xθ_x) + 2 rᵀ D r`.
pub fn proper_cycles_degree_distance<S: Scalar>(host_r: usize, branch_orders: &[usize]) -> Result<S> {
    if host_r < 3 {
        return Err(Error::InvalidExtendedCycle(format!("host order {host_r} is not a proper cycle")));
    }
    if let Some(&bad) = branch_orders.iter().find(|&&r| r < 3) {
        return Err(Error::InvalidExtendedCycle(format!("branch order {bad} is not a proper cycle")));
    }
    let pairs: Vec<_> = branch_orders.iter().map(|&r| (r, r)).collect();
    let cv = CycleVectors::new(host_r, &pairs)?;
    let host_theta = cycle_theta(host_r as u64) as i128;
    let (sum_r, sum_theta) = (total(&cv.r), total(&cv.theta));
    let value = 4 * sum_r * sum_theta
        + 2 * (host_theta * sum_r + host_r as i128 * sum_theta - dot(&cv.r, &cv.theta))
        + 2 * cv.bilinear(&cv.r, &cv.r);
    to_scalar(value)
}

/// The graft described by [`extended_cycles_degree_distance`], with degree
/// weights, each branch rooted at its vertex 0.
pub fn extended_cycles_spec<S: Scalar>(host_r: usize, branch_orders: &[usize]) -> Result<GraftSpec<S>> {
    let host = Graph::extended_cycle(host_r)?;
    if branch_orders.len() != host_r {
        return Err(Error::ArityMismatch { expected: host_r, got: branch_orders.len() });
    }
    let mut spec = GraftSpec::new(host, WeightFunction::Degree);
    for (x, &r) in branch_orders.iter().enumerate() {
        let branch = Graph::extended_cycle(r)?;
        spec = spec.attach(x as VertexId, Branch::new(branch, 0, WeightFunction::Degree));
    }
    Ok(spec)
}

/// Trees hanging from cycle vertices (`0..r`), each with its root.
pub type Forest = BTreeMap<VertexId, Vec<(Graph, VertexId)>>;

/// The unicyclic graph `C_r` with `forest` grafted on, as a degree-weighted spec.
pub fn unicyclic_spec<S: Scalar>(r: usize, forest: &Forest) -> Result<GraftSpec<S>> {
    let mut spec = GraftSpec::new(Graph::cycle(r)?, WeightFunction::Degree);
    for (&x, trees) in forest {
        if x as usize >= r {
            return Err(Error::UnknownVertex(x));
        }
        for (tree, root) in trees {
            if !tree.is_tree() {
                return Err(Error::NotATree);
            }
            tree.index_of(*root)?;
            spec = spec.attach(x, Branch::new(tree.clone(), *root, WeightFunction::Degree));
        }
    }
    Ok(spec)
}

/// Degree distance of the unicyclic graph `C_r` with trees grafted on:
///
/// `Σ_T M_T^δ + Σ_T M_T^{η_T}(y_T) + 2 nᵀ D n`, `η_T = (|V| - |V_T|)(δ + 2) + 2`.
pub fn unicyclic_degree_distance<S: Scalar>(r: usize, forest: &Forest) -> Result<S> {
    // Validation only; the formula never looks at the product.
    unicyclic_spec::<S>(r, forest)?;
    let distances = DistanceMatrix::new(&Graph::cycle(r)?)?;
    let mut n = vec![1i128; r];
    for (&x, trees) in forest {
        for (tree, _) in trees {
            n[x as usize] += tree.order() as i128 - 1;
        }
    }
    let order: i128 = n.iter().sum();
    let two = S::from_count(2)?;

    let mut acc = S::zero();
    for (tree, root) in forest.values().flatten() {
        let grown = to_scalar::<S>(order - tree.order() as i128)?;
        // (|V| - |V_T|)(δ + 2) + 2 = (|V| - |V_T|)·δ + 2(|V| - |V_T|) + 2
        let eta = WeightFunction::affine(grown, WeightFunction::Degree, two.try_mul(grown)?.try_add(two)?);
        acc = acc.try_add(moment(tree, &WeightFunction::Degree)?)?;
        acc = acc.try_add(moment_at(tree, &eta, *root)?)?;
    }
    let quad: i128 = (0..r)
        .flat_map(|i| (0..r).map(move |j| (i, j)))
        .map(|(i, j)| n[i] * distances.get(i, j) as i128 * n[j])
        .sum();
    acc.try_add(to_scalar(2 * quad)?)
}
