//! Closed-form moment formulas for graft products.
//!
//! Each function evaluates its formula from the factors (their moments,
//! orders, total weights and host distances) without building the product.
//! The products module builds the same graphs so every formula can be checked
//! against a direct distance computation.

mod cycles;
mod graft;
mod permutation;

use std::collections::BTreeMap;

pub use cycles::{
    cycle_theta, extended_cycles_degree_distance, extended_cycles_spec, proper_cycles_degree_distance,
    theta_holds, unicyclic_degree_distance, unicyclic_spec, CycleVectors, Forest,
};
pub use graft::{comparison_difference, flower_moment, theorem1_moment, theorem41_moment};
pub use permutation::{sigma_degree_moment, sigma_mean_distance, sigma_moment, sigma_unit_moment};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::products::Branch;
use crate::scalar::{try_sum_results, Scalar};

/// Per-host-vertex bookkeeping for the vector form: `n_x` is the number of
/// product vertices merged into or hanging from `x` (1 when nothing hangs
/// there) and `w_x` the total branch weight attached at `x`.
#[derive(Clone, Debug)]
pub struct HostVectors<S> {
    pub n: Vec<usize>,
    pub w: Vec<S>,
    pub distances: DistanceMatrix,
}

impl<S: Scalar> HostVectors<S> {
    pub fn new(host: &Graph, family: &BTreeMap<VertexId, Vec<Branch<S>>>) -> Result<Self> {
        let distances = DistanceMatrix::new(host)?;
        let mut n = vec![1usize; host.order()];
        let mut w = vec![S::zero(); host.order()];
        for (&x, branches) in family {
            let i = host.index_of(x)?;
            for b in branches {
                n[i] += b.graph.order() - 1;
                w[i] = w[i].try_add(b.weights.total_weight(&b.graph)?)?;
            }
        }
        Ok(HostVectors { n, w, distances })
    }

    /// `Σ n_x`, the order of the product.
    pub fn product_order(&self) -> usize {
        self.n.iter().sum()
    }

    /// `uᵀ D v`.
    pub fn bilinear(&self, u: &[S], v: &[S]) -> Result<S> {
        bilinear(&self.distances, u, v)
    }
}

pub(crate) fn bilinear<S: Scalar>(dm: &DistanceMatrix, u: &[S], v: &[S]) -> Result<S> {
    let n = dm.order();
    if u.len() != n || v.len() != n {
        return Err(Error::ArityMismatch { expected: n, got: u.len().min(v.len()) });
    }
    try_sum_results((0..n).flat_map(|i| {
        (0..n).map(move |j| {
            let d = S::from_u64(dm.get(i, j) as u64).ok_or(Error::Overflow)?;
            u[i].try_mul(d)?.try_mul(v[j])
        })
    }))
}
