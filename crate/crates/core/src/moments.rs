//! Weighted distance moments and the indices derived from them.

use serde::Serialize;

use crate::distance::{bfs_distances, require_connected, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::scalar::{try_sum_results, Scalar};
use crate::weights::WeightFunction;

fn hops<S: Scalar>(d: u64) -> Result<S> {
    S::from_u64(d).ok_or(Error::Overflow)
}

/// `Σ_v w(v)·dist(v, u)`.
pub fn moment_at<S: Scalar>(g: &Graph, w: &WeightFunction<S>, u: VertexId) -> Result<S> {
    let dist = bfs_distances(g, u)?;
    try_sum_results(g.vertices().iter().enumerate().map(|(i, v)| {
        w.eval_at(g, i)?.try_mul(hops(dist[v] as u64)?)
    }))
}

/// Moment at the vertex in position `u` using a precomputed matrix.
pub fn moment_at_with<S: Scalar>(
    dm: &DistanceMatrix,
    g: &Graph,
    w: &WeightFunction<S>,
    u: usize,
) -> Result<S> {
    let row = dm.row(u);
    try_sum_results((0..g.order()).map(|i| w.eval_at(g, i)?.try_mul(hops(row[i] as u64)?)))
}

/// Global moment `Σ_u M(u) = Σ_v w(v)·s(v)` where `s` is the row sum.
pub fn moment<S: Scalar>(g: &Graph, w: &WeightFunction<S>) -> Result<S> {
    let dm = DistanceMatrix::new(g)?;
    moment_with(&dm, g, w)
}

pub fn moment_with<S: Scalar>(dm: &DistanceMatrix, g: &Graph, w: &WeightFunction<S>) -> Result<S> {
    try_sum_results((0..g.order()).map(|i| w.eval_at(g, i)?.try_mul(hops(dm.row_sum(i))?)))
}

/// Global moment via the symmetric form `½ Σ_{u,v} dist(u,v)·(w(u) + w(v))`.
pub fn moment_pairwise<S: Scalar>(g: &Graph, w: &WeightFunction<S>) -> Result<S> {
    let dm = DistanceMatrix::new(g)?;
    let values = w.values(g)?;
    let n = g.order();
    let doubled = try_sum_results((0..n).flat_map(|u| {
        let values = &values;
        let dm = &dm;
        (0..n).map(move |v| values[u].try_add(values[v])?.try_mul(hops(dm.get(u, v) as u64)?))
    }))?;
    doubled.try_mul(S::half())
}

/// Distance-based indices of one graph.
///
/// `moment` is taken under the weight passed to [`indices_with`] (unit weights
/// for [`indices`]). `hyper_wiener_paper` is `½W + ½M₁` with `M₁` the first
/// Zagreb index, which is not the usual hyper-Wiener index `½Σ(d + d²)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentReport<S> {
    pub moment: S,
    pub mean_distance: S,
    pub wiener: S,
    pub degree_distance: S,
    pub zagreb1: S,
    pub mti: S,
    pub hyper_wiener_paper: S,
}

pub fn indices<S: Scalar>(g: &Graph) -> Result<MomentReport<S>> {
    indices_with(g, &WeightFunction::Unit)
}

pub fn indices_with<S: Scalar>(g: &Graph, w: &WeightFunction<S>) -> Result<MomentReport<S>> {
    require_connected(g)?;
    let dm = DistanceMatrix::new(g)?;
    let moment = moment_with(&dm, g, w)?;
    let unit: S = moment_with(&dm, g, &WeightFunction::Unit)?;
    let n = S::from_count(g.order())?;
    let mean_distance = unit.try_div(n.try_mul(n)?)?;
    let wiener: S = moment_with(&dm, g, &WeightFunction::Half)?;
    let degree_distance = moment_with(&dm, g, &WeightFunction::Degree)?;
    let zagreb1 = try_sum_results((0..g.order()).map(|i| {
        let d = S::from_count(g.degree_at(i))?;
        d.try_mul(d)
    }))?;
    let mti = zagreb1.try_add(degree_distance)?;
    let hyper_wiener_paper = S::half().try_mul(wiener.try_add(zagreb1)?)?;
    Ok(MomentReport {
        moment,
        mean_distance,
        wiener,
        degree_distance,
        zagreb1,
        mti,
        hyper_wiener_paper,
    })
}
