//! Graft products and their named special cases.
//!
//! Product vertices are renumbered densely: host vertices keep their position
//! as id, then the non-root vertices of each branch follow in attachment
//! order. The maps from factor ids to product ids are published with the
//! product.

use std::collections::{BTreeMap, BTreeSet};

use crate::distance::require_connected;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::scalar::Scalar;
use crate::weights::{combine_gamma, PlacedBranch, WeightFunction};

/// A branch graph glued at `root`, with its weights.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch<S> {
    pub graph: Graph,
    pub root: VertexId,
    pub weights: WeightFunction<S>,
}

impl<S> Branch<S> {
    pub fn new(graph: Graph, root: VertexId, weights: WeightFunction<S>) -> Self {
        Branch { graph, root, weights }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Attachment<S> {
    pub receptor: VertexId,
    pub branch: Graph,
    pub root: VertexId,
    pub weights: WeightFunction<S>,
}

/// Host graph plus the branches to glue onto it. Receptors may repeat.
#[derive(Clone, Debug, PartialEq)]
pub struct GraftSpec<S> {
    pub host: Graph,
    pub host_weights: WeightFunction<S>,
    pub attachments: Vec<Attachment<S>>,
}

impl<S: Scalar> GraftSpec<S> {
    pub fn new(host: Graph, host_weights: WeightFunction<S>) -> Self {
        GraftSpec { host, host_weights, attachments: Vec::new() }
    }

    pub fn attach(mut self, receptor: VertexId, branch: Branch<S>) -> Self {
        self.attachments.push(Attachment {
            receptor,
            branch: branch.graph,
            root: branch.root,
            weights: branch.weights,
        });
        self
    }

    /// `|V_H| + Σ (|V_i| - 1)`.
    pub fn product_order(&self) -> usize {
        self.host.order() + self.attachments.iter().map(|a| a.branch.order() - 1).sum::<usize>()
    }

    /// Checks connectivity of every factor and membership of receptors and roots.
    pub fn validate(&self) -> Result<()> {
        require_connected(&self.host)?;
        for a in &self.attachments {
            self.host.index_of(a.receptor)?;
            a.branch.index_of(a.root)?;
            require_connected(&a.branch)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GraftProduct<S> {
    pub graph: Graph,
    pub gamma: WeightFunction<S>,
    pub host_map: BTreeMap<VertexId, VertexId>,
    pub branch_maps: Vec<BTreeMap<VertexId, VertexId>>,
}

type Glued = (Graph, BTreeMap<VertexId, VertexId>, Vec<BTreeMap<VertexId, VertexId>>);

/// The identification step without weights. Inputs must already be valid.
fn glue<'a>(
    host: &Graph,
    attachments: impl IntoIterator<Item = (VertexId, &'a Graph, VertexId)>,
) -> Result<Glued> {
    let host_map: BTreeMap<VertexId, VertexId> =
        host.vertices().iter().enumerate().map(|(i, &x)| (x, i as VertexId)).collect();
    let mut next = host.order() as VertexId;
    let mut edges: Vec<(VertexId, VertexId)> =
        host.edges().map(|(u, v)| (host_map[&u], host_map[&v])).collect();
    let mut branch_maps = Vec::new();
    for (receptor, branch, root) in attachments {
        let glued_at = *host_map.get(&receptor).ok_or(Error::UnknownVertex(receptor))?;
        let mut map = BTreeMap::new();
        for &y in branch.vertices() {
            let id = if y == root {
                glued_at
            } else {
                next += 1;
                next - 1
            };
            map.insert(y, id);
        }
        if !map.contains_key(&root) {
            return Err(Error::UnknownVertex(root));
        }
        edges.extend(branch.edges().map(|(u, v)| (map[&u], map[&v])));
        branch_maps.push(map);
    }
    let graph = Graph::new(0..next, edges)?;
    Ok((graph, host_map, branch_maps))
}

/// Glues every branch of `spec` onto its receptor.
pub fn graft<S: Scalar>(spec: &GraftSpec<S>) -> Result<GraftProduct<S>> {
    spec.validate()?;
    let (graph, host_map, branch_maps) = glue(
        &spec.host,
        spec.attachments.iter().map(|a| (a.receptor, &a.branch, a.root)),
    )?;
    let placed: Vec<_> = spec
        .attachments
        .iter()
        .zip(&branch_maps)
        .map(|(a, map)| PlacedBranch { graph: &a.branch, weights: &a.weights, map })
        .collect();
    let gamma = combine_gamma(&graph, &spec.host, &spec.host_weights, &host_map, &placed)?;
    Ok(GraftProduct { graph, gamma, host_map, branch_maps })
}

/// `H·K`: one branch glued at `x`.
pub fn coalescence<S: Scalar>(
    host: &Graph,
    x: VertexId,
    alpha: &WeightFunction<S>,
    branch: Branch<S>,
) -> Result<GraftProduct<S>> {
    graft(&GraftSpec::new(host.clone(), alpha.clone()).attach(x, branch))
}

/// One branch per host vertex, in host vertex order.
pub fn rooted_product<S: Scalar>(
    host: &Graph,
    alpha: &WeightFunction<S>,
    branches: Vec<Branch<S>>,
) -> Result<GraftProduct<S>> {
    if branches.len() != host.order() {
        return Err(Error::ArityMismatch { expected: host.order(), got: branches.len() });
    }
    let spec = host
        .vertices()
        .iter()
        .zip(branches)
        .fold(GraftSpec::new(host.clone(), alpha.clone()), |spec, (&x, b)| spec.attach(x, b));
    graft(&spec)
}

/// All branches glued at a single central vertex of weight `center_weight`.
/// The centre is product vertex `0`.
pub fn flower<S: Scalar>(center_weight: S, branches: Vec<Branch<S>>) -> Result<GraftProduct<S>> {
    if branches.is_empty() {
        return Err(Error::InvalidArgument("a flower needs at least one branch".into()));
    }
    let spec = branches.into_iter().fold(
        GraftSpec::new(Graph::singleton(), WeightFunction::Constant(center_weight)),
        |spec, b| spec.attach(0, b),
    );
    graft(&spec)
}

/// `G_σ`: copy `i` of `k` is rooted at its vertex in position `sigma[i]` and
/// glued at the host vertex in position `i`. `sigma` is 0-based.
pub fn permutation_graph<S: Scalar>(
    host: &Graph,
    alpha: &WeightFunction<S>,
    k: &Graph,
    beta: &WeightFunction<S>,
    sigma: &[usize],
) -> Result<GraftProduct<S>> {
    let r = host.order();
    if k.order() != r {
        return Err(Error::OrderMismatch { host: r, branch: k.order() });
    }
    check_permutation(sigma, r)?;
    let branches = sigma
        .iter()
        .map(|&s| Branch::new(k.clone(), k.vertex_at(s), beta.clone()))
        .collect();
    rooted_product(host, alpha, branches)
}

pub(crate) fn check_permutation(sigma: &[usize], r: usize) -> Result<()> {
    if sigma.len() != r {
        return Err(Error::InvalidPermutation(format!("length {} for r = {r}", sigma.len())));
    }
    let mut seen = vec![false; r];
    for &s in sigma {
        if s >= r || std::mem::replace(&mut seen[s], true) {
            return Err(Error::InvalidPermutation(format!("{sigma:?} is not a permutation of 0..{r}")));
        }
    }
    Ok(())
}

/// Partial hierarchical product: a copy of `k` glued by `root` at each of the
/// distinct `receptors`.
pub fn hierarchical_product<S: Scalar>(
    host: &Graph,
    alpha: &WeightFunction<S>,
    k: &Graph,
    beta: &WeightFunction<S>,
    root: VertexId,
    receptors: &[VertexId],
) -> Result<GraftProduct<S>> {
    if receptors.is_empty() {
        return Err(Error::InvalidArgument("no receptors given".into()));
    }
    let mut seen = BTreeSet::new();
    for &x in receptors {
        if !seen.insert(x) {
            return Err(Error::DuplicateReceptor(x));
        }
    }
    let spec = receptors.iter().fold(GraftSpec::new(host.clone(), alpha.clone()), |spec, &x| {
        spec.attach(x, Branch::new(k.clone(), root, beta.clone()))
    });
    graft(&spec)
}

/// `H ⊓ K`: the hierarchical product over every host vertex.
pub fn full_hierarchical_product<S: Scalar>(
    host: &Graph,
    alpha: &WeightFunction<S>,
    k: &Graph,
    beta: &WeightFunction<S>,
    root: VertexId,
) -> Result<GraftProduct<S>> {
    hierarchical_product(host, alpha, k, beta, root, host.vertices())
}

/// Binomial tree of order `2^n`, built as `K2 ⊓ K2 ⊓ ... ⊓ K2`.
pub fn binomial_tree(n: u32) -> Result<Graph> {
    let k2 = Graph::path(2)?;
    let mut tree = Graph::singleton();
    for level in 0..n {
        tree = if level == 0 {
            k2.clone()
        } else {
            let receptors: Vec<_> = tree.vertices().to_vec();
            glue(&tree, receptors.into_iter().map(|x| (x, &k2, 0)))?.0
        };
    }
    Ok(tree)
}

/// `copies` copies of `k`, all glued by `root` at the one host vertex `x`.
pub fn star_receptor_graft<S: Scalar>(
    host: &Graph,
    alpha: &WeightFunction<S>,
    x: VertexId,
    k: &Graph,
    beta: &WeightFunction<S>,
    root: VertexId,
    copies: usize,
) -> Result<GraftProduct<S>> {
    if copies == 0 {
        return Err(Error::InvalidArgument("at least one copy is required".into()));
    }
    let spec = (0..copies).fold(GraftSpec::new(host.clone(), alpha.clone()), |spec, _| {
        spec.attach(x, Branch::new(k.clone(), root, beta.clone()))
    });
    graft(&spec)
}
