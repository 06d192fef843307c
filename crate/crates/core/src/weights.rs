//! Vertex weight functions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::scalar::{try_sum_results, Scalar};

/// A nonnegative weight on the vertices of a graph.
///
/// Presets are evaluated against whatever graph is supplied, so the same
/// `Degree` value serves a host, a branch, or their product. `Affine` nodes
/// express derived weights such as `(k - 1)·α + B` without materializing them.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightFunction<S> {
    Unit,
    Half,
    Degree,
    Constant(S),
    Explicit(BTreeMap<VertexId, S>),
    Affine { scale: S, base: Box<WeightFunction<S>>, offset: S },
}

impl<S: Scalar> WeightFunction<S> {
    pub fn zero() -> Self {
        WeightFunction::Constant(S::zero())
    }

    /// `scale · base + offset`.
    pub fn affine(scale: S, base: WeightFunction<S>, offset: S) -> Self {
        WeightFunction::Affine { scale, base: Box::new(base), offset }
    }

    pub fn eval(&self, g: &Graph, v: VertexId) -> Result<S> {
        let i = g.index_of(v)?;
        self.eval_at(g, i)
    }

    /// Weight of the vertex at position `i` of `g`.
    pub fn eval_at(&self, g: &Graph, i: usize) -> Result<S> {
        let value = self.raw_at(g, i)?;
        if value.is_negative() {
            return Err(Error::NegativeWeight(g.vertex_at(i)));
        }
        Ok(value)
    }

    fn raw_at(&self, g: &Graph, i: usize) -> Result<S> {
        match self {
            WeightFunction::Unit => Ok(S::one()),
            WeightFunction::Half => Ok(S::half()),
            WeightFunction::Degree => S::from_count(g.degree_at(i)),
            WeightFunction::Constant(c) => Ok(*c),
            WeightFunction::Explicit(map) => {
                let v = g.vertex_at(i);
                map.get(&v).copied().ok_or(Error::MissingWeight(v))
            }
            WeightFunction::Affine { scale, base, offset } => {
                scale.try_mul(base.eval_at(g, i)?)?.try_add(*offset)
            }
        }
    }

    /// Weights of all vertices in vertex order.
    pub fn values(&self, g: &Graph) -> Result<Vec<S>> {
        (0..g.order()).map(|i| self.eval_at(g, i)).collect()
    }

    pub fn total_weight(&self, g: &Graph) -> Result<S> {
        if g.is_empty() {
            return Err(Error::EmptyGraph);
        }
        try_sum_results((0..g.order()).map(|i| self.eval_at(g, i)))
    }

    /// The same weights as an `Explicit` map over `g`.
    pub fn materialize(&self, g: &Graph) -> Result<Self> {
        let map = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, &v)| Ok((v, self.eval_at(g, i)?)))
            .collect::<Result<_>>()?;
        Ok(WeightFunction::Explicit(map))
    }
}

/// A branch as seen by [`combine_gamma`]: its graph, its weights, and where its
/// vertices landed in the product.
#[derive(Clone, Copy, Debug)]
pub struct PlacedBranch<'a, S> {
    pub graph: &'a Graph,
    pub weights: &'a WeightFunction<S>,
    pub map: &'a BTreeMap<VertexId, VertexId>,
}

/// Weight function of a graft product: `α` on host vertices, `βᵢ` on branch
/// vertices, and the sum at each identified receptor/root pair. Receptors
/// shared by several branches accumulate every root weight.
pub fn combine_gamma<S: Scalar>(
    product: &Graph,
    host: &Graph,
    alpha: &WeightFunction<S>,
    host_map: &BTreeMap<VertexId, VertexId>,
    branches: &[PlacedBranch<'_, S>],
) -> Result<WeightFunction<S>> {
    let mut gamma: BTreeMap<VertexId, S> = BTreeMap::new();
    let mut add = |target: VertexId, w: S| -> Result<()> {
        if !product.contains(target) {
            return Err(Error::ProvenanceMismatch(format!("{target} is not a product vertex")));
        }
        let slot = gamma.entry(target).or_insert_with(S::zero);
        *slot = slot.try_add(w)?;
        Ok(())
    };
    for (i, &x) in host.vertices().iter().enumerate() {
        let target = *host_map
            .get(&x)
            .ok_or_else(|| Error::ProvenanceMismatch(format!("host vertex {x} is unmapped")))?;
        add(target, alpha.eval_at(host, i)?)?;
    }
    for branch in branches {
        for (i, &y) in branch.graph.vertices().iter().enumerate() {
            let target = *branch.map.get(&y).ok_or_else(|| {
                Error::ProvenanceMismatch(format!("branch vertex {y} is unmapped"))
            })?;
            add(target, branch.weights.eval_at(branch.graph, i)?)?;
        }
    }
    if gamma.len() != product.order() {
        return Err(Error::ProvenanceMismatch(format!(
            "{} of {} product vertices covered",
            gamma.len(),
            product.order()
        )));
    }
    Ok(WeightFunction::Explicit(gamma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    type W = WeightFunction<Rational>;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn presets() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(W::Degree.eval(&p4, 0).unwrap(), r(1, 1));
        assert_eq!(W::Degree.eval(&p4, 1).unwrap(), r(2, 1));
        assert_eq!(W::Half.eval(&p4, 2).unwrap(), r(1, 2));
        assert_eq!(W::Unit.eval(&p4, 3).unwrap(), Rational::ONE);
        assert!(matches!(W::Unit.eval(&p4, 9), Err(Error::UnknownVertex(9))));
    }

    #[test]
    fn affine_three_alpha_plus_fifteen() {
        let g = Graph::singleton();
        let xi = W::affine(r(3, 1), W::Unit, r(15, 1));
        assert_eq!(xi.eval(&g, 0).unwrap(), r(18, 1));
    }

    #[test]
    fn totals() {
        assert_eq!(W::Degree.total_weight(&Graph::path(4).unwrap()).unwrap(), r(6, 1));
        assert_eq!(W::Unit.total_weight(&Graph::diamond()).unwrap(), r(4, 1));
        let c = W::Constant(r(15, 1));
        assert_eq!(c.total_weight(&Graph::singleton()).unwrap(), r(15, 1));
        let empty = Graph::new([], []).unwrap();
        assert!(matches!(W::Unit.total_weight(&empty), Err(Error::EmptyGraph)));
    }

    #[test]
    fn negativity_and_gaps_are_rejected() {
        let g = Graph::path(2).unwrap();
        let explicit = W::Explicit([(0, r(-1, 2)), (1, r(1, 1))].into());
        assert!(matches!(explicit.eval(&g, 0), Err(Error::NegativeWeight(0))));
        let partial = W::Explicit([(0, r(1, 1))].into());
        assert!(matches!(partial.eval(&g, 1), Err(Error::MissingWeight(1))));
        let neg = W::affine(r(-1, 1), W::Unit, Rational::ZERO);
        assert!(matches!(neg.eval(&g, 1), Err(Error::NegativeWeight(1))));
    }

    #[test]
    fn gamma_on_coalescence_of_two_edges() {
        // host {0,1}, branch {0,1} glued root 0 -> host 0; branch vertex 1 -> product 2
        let k2 = Graph::path(2).unwrap();
        let product = Graph::path(3).unwrap().relabeled(|v| [2, 0, 1][v as usize]).unwrap();
        let host_map = [(0, 0), (1, 1)].into();
        let branch_map = [(0, 0), (1, 2)].into();
        let gamma = combine_gamma(
            &product,
            &k2,
            &W::Unit,
            &host_map,
            &[PlacedBranch { graph: &k2, weights: &W::Unit, map: &branch_map }],
        )
        .unwrap();
        let values: Vec<_> = [2, 0, 1].iter().map(|&v| gamma.eval(&product, v).unwrap()).collect();
        assert_eq!(values, vec![r(1, 1), r(2, 1), r(1, 1)]);
    }

    #[test]
    fn gamma_reports_uncovered_vertices() {
        let k2 = Graph::path(2).unwrap();
        let p3 = Graph::path(3).unwrap();
        let host_map = [(0, 0), (1, 1)].into();
        let err = combine_gamma(&p3, &k2, &W::Unit, &host_map, &[]).unwrap_err();
        assert!(matches!(err, Error::ProvenanceMismatch(_)));
    }

    proptest! {
        #[test]
        fn affine_is_exact(a in -50i64..50, ad in 1i64..6, c in 0i64..200, cd in 1i64..6, which in 0usize..3) {
            let g = Graph::diamond();
            let base = [W::Unit, W::Half, W::Degree][which].clone();
            let (a, c) = (r(a.abs(), ad), r(c, cd));
            let w = W::affine(a, base.clone(), c);
            for &v in g.vertices() {
                prop_assert_eq!(w.eval(&g, v).unwrap(), a * base.eval(&g, v).unwrap() + c);
            }
        }

        #[test]
        fn degree_total_is_twice_size(n in 1usize..20, extra in 0usize..3) {
            let g = if extra == 0 || n < 3 { Graph::path(n).unwrap() } else { Graph::cycle(n).unwrap() };
            prop_assert_eq!(
                W::Degree.total_weight(&g).unwrap(),
                Rational::from_integer(2 * g.size() as i64)
            );
        }
    }
}
