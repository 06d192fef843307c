use std::collections::BTreeMap;

use crate::distance::{require_connected, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::moments::{moment, moment_at, moment_at_with, moment_with};
use crate::products::{Branch, GraftSpec};
use crate::scalar::{try_sum, try_sum_results, Scalar};
use crate::weights::WeightFunction;

use super::HostVectors;

/// Moment of `graft(spec)` under its combined weight, computed from the
/// factors alone:
///
/// `M_H^α + Σ M_{Kᵢ}^{βᵢ} + Σ M_H^{ξᵢ}(xᵢ) + Σ M_{Kᵢ}^{ηᵢ}(yᵢ) + Σᵢⱼ (|Vᵢ|-1)·dist(xᵢ,xⱼ)·Bⱼ`
///
/// with `ξᵢ = (|Vᵢ|-1)α + Bᵢ` and `ηᵢ = (|V|-|Vᵢ|)βᵢ + W - Bᵢ`.
pub fn theorem1_moment<S: Scalar>(spec: &GraftSpec<S>) -> Result<S> {
    spec.validate()?;
    let host = &spec.host;
    let alpha = &spec.host_weights;
    let dm = DistanceMatrix::new(host)?;

    let host_total = alpha.total_weight(host)?;
    let branch_totals: Vec<S> = spec
        .attachments
        .iter()
        .map(|a| a.weights.total_weight(&a.branch))
        .collect::<Result<_>>()?;
    let total = host_total.try_add(try_sum(branch_totals.iter().copied())?)?;
    let order = spec.product_order();
    let receptors: Vec<usize> = spec
        .attachments
        .iter()
        .map(|a| host.index_of(a.receptor))
        .collect::<Result<_>>()?;

    let mut acc = moment_with(&dm, host, alpha)?;
    for (i, a) in spec.attachments.iter().enumerate() {
        let size = a.branch.order();
        let b_i = branch_totals[i];
        acc = acc.try_add(moment(&a.branch, &a.weights)?)?;

        let xi = WeightFunction::affine(S::from_count(size - 1)?, alpha.clone(), b_i);
        acc = acc.try_add(moment_at_with(&dm, host, &xi, receptors[i])?)?;

        let eta = WeightFunction::affine(
            S::from_count(order - size)?,
            a.weights.clone(),
            total.try_sub(b_i)?,
        );
        acc = acc.try_add(moment_at(&a.branch, &eta, a.root)?)?;

        let spread = try_sum_results(receptors.iter().zip(&branch_totals).map(|(&xj, &b_j)| {
            S::from_u64(dm.get(receptors[i], xj) as u64).ok_or(Error::Overflow)?.try_mul(b_j)
        }))?;
        acc = acc.try_add(S::from_count(size - 1)?.try_mul(spread)?)?;
    }
    Ok(acc)
}

/// Vector form of the graft moment for a family of branches hanging from host
/// vertices (several branches may share a vertex):
///
/// `M_H^α + Σ_K M_K^{β_K} + Σ_x M_H^{ξ_x}(x) + Σ_K M_K^{η_K}(y_K) + (n - j)ᵀ D w`
///
/// with `ξ_x = (n_x - 1)α + w_x` and `η_K = (|V| - |V_K|)β_K + W - B_K`.
pub fn theorem41_moment<S: Scalar>(
    host: &Graph,
    alpha: &WeightFunction<S>,
    family: &BTreeMap<VertexId, Vec<Branch<S>>>,
) -> Result<S> {
    require_connected(host)?;
    for branch in family.values().flatten() {
        require_connected(&branch.graph)?;
        branch.graph.index_of(branch.root)?;
    }
    let hv = HostVectors::new(host, family)?;
    let order = hv.product_order();
    let total = alpha.total_weight(host)?.try_add(try_sum(hv.w.iter().copied())?)?;

    let mut acc = moment_with(&hv.distances, host, alpha)?;
    for (i, &x) in host.vertices().iter().enumerate() {
        let xi = WeightFunction::affine(S::from_count(hv.n[i] - 1)?, alpha.clone(), hv.w[i]);
        acc = acc.try_add(moment_at_with(&hv.distances, host, &xi, i)?)?;
        for branch in family.get(&x).into_iter().flatten() {
            let b = branch.weights.total_weight(&branch.graph)?;
            acc = acc.try_add(moment(&branch.graph, &branch.weights)?)?;
            let eta = WeightFunction::affine(
                S::from_count(order - branch.graph.order())?,
                branch.weights.clone(),
                total.try_sub(b)?,
            );
            acc = acc.try_add(moment_at(&branch.graph, &eta, branch.root)?)?;
        }
    }
    let n_minus_j: Vec<S> = hv.n.iter().map(|&n| S::from_count(n - 1)).collect::<Result<_>>()?;
    acc.try_add(hv.bilinear(&n_minus_j, &hv.w)?)
}

/// Moment of a flower (all branches on one central vertex of weight `α`):
/// `Σ M_{Kᵢ}^{βᵢ} + Σ M_{Kᵢ}^{ηᵢ}(yᵢ)` with
/// `ηᵢ = (Σ_{j≠i}|Vⱼ| - r + 1)βᵢ + α + Σ_{j≠i}Bⱼ`.
pub fn flower_moment<S: Scalar>(center_weight: S, branches: &[Branch<S>]) -> Result<S> {
    if branches.is_empty() {
        return Err(Error::InvalidArgument("a flower needs at least one branch".into()));
    }
    if center_weight.is_negative() {
        return Err(Error::NegativeWeight(0));
    }
    let r = branches.len();
    let totals: Vec<S> = branches
        .iter()
        .map(|b| {
            require_connected(&b.graph)?;
            b.weights.total_weight(&b.graph)
        })
        .collect::<Result<_>>()?;
    let all_vertices: usize = branches.iter().map(|b| b.graph.order()).sum();
    let all_weight = try_sum(totals.iter().copied())?;

    let mut acc = S::zero();
    for (b, &b_i) in branches.iter().zip(&totals) {
        let others = all_vertices - b.graph.order();
        let eta = WeightFunction::affine(
            S::from_count(others + 1 - r)?,
            b.weights.clone(),
            center_weight.try_add(all_weight.try_sub(b_i)?)?,
        );
        acc = acc.try_add(moment(&b.graph, &b.weights)?)?;
        acc = acc.try_add(moment_at(&b.graph, &eta, b.root)?)?;
    }
    Ok(acc)
}

/// `M(G₂) - M(G₁)` where `G₁` glues a copy of a branch `K` at each of
/// `receptors` and `G₂` glues the same number of copies at `x`:
///
/// `Σᵢ [M_H^ξ(x) - M_H^ξ(xᵢ)] - B(|V_K| - 1)·Σᵢⱼ dist(xᵢ, xⱼ)`, `ξ = (|V_K| - 1)α + B`.
///
/// Only the order and total weight of `K` enter.
pub fn comparison_difference<S: Scalar>(
    host: &Graph,
    alpha: &WeightFunction<S>,
    x: VertexId,
    receptors: &[VertexId],
    branch_order: usize,
    branch_total_weight: S,
) -> Result<S> {
    if branch_order == 0 {
        return Err(Error::InvalidArgument("branch order must be positive".into()));
    }
    if branch_total_weight.is_negative() {
        return Err(Error::InvalidArgument("branch weight must be nonnegative".into()));
    }
    let dm = DistanceMatrix::new(host)?;
    let xs = dm.index_of(x)?;
    let idx: Vec<usize> = receptors.iter().map(|&v| dm.index_of(v)).collect::<Result<_>>()?;
    let grown = S::from_count(branch_order - 1)?;
    let xi = WeightFunction::affine(grown, alpha.clone(), branch_total_weight);

    let at_x = moment_at_with(&dm, host, &xi, xs)?;
    let mut acc = S::zero();
    for &i in &idx {
        acc = acc.try_add(at_x.try_sub(moment_at_with(&dm, host, &xi, i)?)?)?;
    }
    let spread: u64 = idx.iter().flat_map(|&i| idx.iter().map(move |&j| (i, j))).map(|(i, j)| dm.get(i, j) as u64).sum();
    let penalty = branch_total_weight
        .try_mul(grown)?
        .try_mul(S::from_u64(spread).ok_or(Error::Overflow)?)?;
    acc.try_sub(penalty)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type W = WeightFunction<Rational>;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn k2() -> Graph {
        Graph::path(2).unwrap()
    }

    #[test]
    fn coalescence_of_edges() {
        let spec = GraftSpec::new(k2(), W::Unit).attach(0, Branch::new(k2(), 0, W::Unit));
        assert_eq!(theorem1_moment(&spec).unwrap(), int(10));
    }

    #[test]
    fn trivial_branches_reduce_to_host_terms() {
        // M_H^α + Σ Bᵢ·s(xᵢ)
        let host = Graph::diamond();
        let spec = GraftSpec::new(host.clone(), W::Degree)
            .attach(0, Branch::new(Graph::singleton(), 0, W::Constant(int(3))))
            .attach(1, Branch::new(Graph::singleton(), 0, W::Constant(int(5))));
        // s(0) = 4, s(1) = 3, M_H^δ = 34
        assert_eq!(theorem1_moment(&spec).unwrap(), int(34 + 3 * 4 + 5 * 3));
    }

    #[test]
    fn diamond_with_paths_under_degree_weights() {
        let p4 = Graph::path(4).unwrap();
        let spec = (0..4).fold(GraftSpec::new(Graph::diamond(), W::Degree), |s, i| {
            s.attach(i, Branch::new(p4.clone(), i, W::Degree))
        });
        assert_eq!(theorem1_moment(&spec).unwrap(), int(1480));
    }

    #[test]
    fn vector_form_examples() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(theorem41_moment(&c3, &W::Degree, &BTreeMap::new()).unwrap(), int(12));
        let family = [(0, vec![Branch::new(k2(), 0, W::Degree)])].into();
        assert_eq!(theorem41_moment(&c3, &W::Degree, &family).unwrap(), int(30));
        let family = [(0, vec![Branch::new(k2(), 0, W::Unit)])].into();
        assert_eq!(theorem41_moment(&k2(), &W::Unit, &family).unwrap(), int(10));
    }

    #[test]
    fn flower_examples() {
        let edges = |r| (0..r).map(|_| Branch::new(k2(), 0, W::Unit)).collect::<Vec<_>>();
        assert_eq!(flower_moment(Rational::ZERO, &edges(3)).unwrap(), int(24));
        assert_eq!(flower_moment(Rational::ZERO, &edges(1)).unwrap(), int(2));
        assert_eq!(flower_moment(Rational::ZERO, &edges(2)).unwrap(), int(10));
        assert!(flower_moment::<Rational>(Rational::ZERO, &[]).is_err());
    }

    #[test]
    fn comparison_examples() {
        let p3 = Graph::path(3).unwrap();
        let d = comparison_difference(&p3, &W::Unit, 1, &[0, 2], 2, int(2)).unwrap();
        assert_eq!(d, int(-14));
        let same = comparison_difference(&p3, &W::Unit, 1, &[1, 1, 1], 4, int(9)).unwrap();
        assert_eq!(same, int(0));
        assert!(matches!(
            comparison_difference(&p3, &W::Unit, 7, &[0], 2, int(1)),
            Err(Error::UnknownVertex(7))
        ));
    }
}
