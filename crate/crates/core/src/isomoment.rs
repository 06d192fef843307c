//! Families of permutation graphs with equal moments.
//!
//! Every `G_σ` built from the same host and branch has the same moment, yet
//! different `σ` often give nonisomorphic graphs. This module enumerates the
//! permutations (all of them up to [`FULL_ENUMERATION_MAX`], a seeded sample
//! beyond), groups the products into isomorphism classes and checks that the
//! requested moments agree across classes and with the closed form.

use std::collections::BTreeMap;
use std::path::Path;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::sigma_moment;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::isomorphism::{are_isomorphic_with_cap, Profile};
use crate::json::{parse_weight_spec, GraphJson};
use crate::moments::moment;
use crate::products::permutation_graph;
use crate::random::Generator;
use crate::rational::Rational;
use crate::weights::WeightFunction;

type W = WeightFunction<Rational>;

pub const FULL_ENUMERATION_MAX: usize = 8;
pub const DEFAULT_SAMPLES: usize = 2000;

/// Host weight `alpha` and branch weight `beta`, named by the spec they came from.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightPair {
    pub label: String,
    pub alpha: W,
    pub beta: W,
}

impl WeightPair {
    /// `a+b` sets host and branch weights separately. A single spec `s` is
    /// chosen so that the product weight is `s` itself: `degree` on both
    /// factors, otherwise `s` on the branches and zero on the host.
    pub fn parse(spec: &str, base_dir: Option<&Path>) -> Result<Self> {
        let spec = spec.trim();
        let (alpha, beta) = match spec.split_once('+') {
            Some((a, b)) => (parse_weight_spec(a, base_dir)?, parse_weight_spec(b, base_dir)?),
            None => {
                let beta = parse_weight_spec(spec, base_dir)?;
                let alpha = if beta == W::Degree { W::Degree } else { W::zero() };
                (alpha, beta)
            }
        };
        Ok(WeightPair { label: spec.to_string(), alpha, beta })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsomomentClass {
    /// First permutation (in enumeration order) landing in this class.
    pub sigma: Vec<usize>,
    pub members: usize,
    pub graph: GraphJson,
    pub moments: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsomomentReport {
    pub r: usize,
    pub permutations: usize,
    pub exhaustive: bool,
    /// Closed-form value per weight label.
    pub expected: BTreeMap<String, String>,
    pub classes: Vec<IsomomentClass>,
    pub consistent: bool,
}

struct Built {
    sigma: Vec<usize>,
    graph: Graph,
    key: Vec<(usize, Vec<u32>)>,
    moments: BTreeMap<String, Rational>,
}

fn build(host: &Graph, k: &Graph, weights: &[WeightPair], sigma: Vec<usize>) -> Result<Built> {
    let mut moments = BTreeMap::new();
    let mut graph = None;
    for pair in weights {
        let p = permutation_graph(host, &pair.alpha, k, &pair.beta, &sigma)?;
        moments.insert(pair.label.clone(), moment(&p.graph, &p.gamma)?);
        graph.get_or_insert(p.graph);
    }
    let graph = match graph {
        Some(g) => g,
        None => permutation_graph(host, &W::Unit, k, &W::Unit, &sigma)?.graph,
    };
    let key = Profile::new(&graph).sorted_invariants();
    Ok(Built { sigma, graph, key, moments })
}

fn permutations(r: usize, seed: u64, samples: usize) -> (Vec<Vec<usize>>, bool) {
    if r <= FULL_ENUMERATION_MAX {
        return ((0..r).permutations(r).collect(), true);
    }
    let mut gen = Generator::new(seed, 0);
    let mut sigmas = vec![(0..r).collect::<Vec<_>>()];
    sigmas.extend((1..samples.max(1)).map(|_| gen.permutation(r)));
    (sigmas, false)
}

pub fn isomoment_family(
    host: &Graph,
    k: &Graph,
    weights: &[WeightPair],
    seed: u64,
    samples: usize,
) -> Result<IsomomentReport> {
    let r = host.order();
    if k.order() != r {
        return Err(Error::OrderMismatch { host: r, branch: k.order() });
    }
    let expected: BTreeMap<String, Rational> = weights
        .iter()
        .map(|p| Ok((p.label.clone(), sigma_moment(host, &p.alpha, k, &p.beta)?)))
        .collect::<Result<_>>()?;

    let (sigmas, exhaustive) = permutations(r, seed, samples);
    let count = sigmas.len();
    let built: Vec<Built> = sigmas
        .into_par_iter()
        .map(|s| build(host, k, weights, s))
        .collect::<Result<_>>()?;

    let cap = r * r;
    let mut classes: Vec<(Built, usize)> = Vec::new();
    for b in built {
        let mut found = None;
        for (i, (rep, _)) in classes.iter().enumerate() {
            if rep.key == b.key && are_isomorphic_with_cap(&rep.graph, &b.graph, cap)? {
                found = Some(i);
                break;
            }
        }
        match found {
            Some(i) => {
                if classes[i].0.moments != b.moments {
                    // Keep the odd one as its own entry so the report shows it.
                    classes.push((b, 1));
                } else {
                    classes[i].1 += 1;
                }
            }
            None => classes.push((b, 1)),
        }
    }

    let consistent = classes.iter().all(|(c, _)| c.moments == expected);
    let show = |m: &BTreeMap<String, Rational>| m.iter().map(|(k, v)| (k.clone(), v.to_string())).collect();
    Ok(IsomomentReport {
        r,
        permutations: count,
        exhaustive,
        expected: show(&expected),
        classes: classes
            .into_iter()
            .map(|(c, members)| IsomomentClass {
                sigma: c.sigma,
                members,
                graph: GraphJson::from(&c.graph),
                moments: show(&c.moments),
            })
            .collect(),
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(specs: &[&str]) -> Vec<WeightPair> {
        specs.iter().map(|s| WeightPair::parse(s, None).unwrap()).collect()
    }

    #[test]
    fn weight_pair_parsing() {
        let p = WeightPair::parse("degree", None).unwrap();
        assert_eq!((p.alpha, p.beta), (W::Degree, W::Degree));
        let p = WeightPair::parse("unit", None).unwrap();
        assert_eq!((p.alpha, p.beta), (W::zero(), W::Unit));
        let p = WeightPair::parse("degree+unit", None).unwrap();
        assert_eq!((p.alpha, p.beta), (W::Degree, W::Unit));
        assert!(WeightPair::parse("degree+", None).is_err());
    }

    #[test]
    fn diamond_and_path_family() {
        let rep = isomoment_family(
            &Graph::diamond(),
            &Graph::path(4).unwrap(),
            &pairs(&["unit", "degree", "degree+unit"]),
            0,
            DEFAULT_SAMPLES,
        )
        .unwrap();
        assert!(rep.exhaustive);
        assert_eq!(rep.permutations, 24);
        assert!(rep.consistent);
        assert!(rep.classes.len() >= 2);
        assert_eq!(rep.classes.iter().map(|c| c.members).sum::<usize>(), 24);
        assert_eq!(rep.expected["unit"], "784/1");
        assert_eq!(rep.expected["degree"], "1480/1");
        assert_eq!(rep.expected["degree+unit"], "1120/1");
    }

    #[test]
    fn vertex_transitive_factors_give_one_class() {
        let c4 = Graph::cycle(4).unwrap();
        let rep = isomoment_family(&c4, &c4, &pairs(&["unit"]), 0, DEFAULT_SAMPLES).unwrap();
        assert_eq!(rep.classes.len(), 1);
        assert!(rep.consistent);
    }

    #[test]
    fn two_edges_give_one_class() {
        let k2 = Graph::path(2).unwrap();
        let rep = isomoment_family(&k2, &k2, &pairs(&["unit"]), 0, DEFAULT_SAMPLES).unwrap();
        assert_eq!(rep.permutations, 2);
        assert_eq!(rep.classes.len(), 1);
        assert_eq!(rep.expected["unit"], "20/1");
    }

    #[test]
    fn large_orders_are_sampled() {
        let c9 = Graph::cycle(9).unwrap();
        let p9 = Graph::path(9).unwrap();
        let rep = isomoment_family(&c9, &p9, &pairs(&["unit"]), 5, 30).unwrap();
        assert!(!rep.exhaustive);
        assert_eq!(rep.permutations, 30);
        assert!(rep.consistent);
    }

    #[test]
    fn order_mismatch() {
        let r = isomoment_family(&Graph::diamond(), &Graph::path(3).unwrap(), &pairs(&["unit"]), 0, 10);
        assert!(matches!(r, Err(Error::OrderMismatch { .. })));
    }
}
