//! JSON file formats.
//!
//! Graph: `{"vertices":[0,1,2],"edges":[[0,1],[1,2]]}`.
//!
//! Weights are either a spec string (`unit`, `half`, `degree`,
//! `const:<p>/<q>`, `file:<path>`) or an inline object mapping vertex ids to
//! `"p/q"` strings. A `file:` target holds such an object.
//!
//! Graft spec:
//! `{"host":<graph>,"attachments":[{"receptor":0,"branch":<graph>,"root":2,"weights":"degree"}],"host_weights":"degree"}`.
//! Missing weights default to `unit`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::products::{Attachment, GraftProduct, GraftSpec};
use crate::scalar::Scalar;
use crate::weights::WeightFunction;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<[VertexId; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.vertices().to_vec(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::new(j.vertices, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphJson>(text)?.try_into()
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&fs::read_to_string(path)?)
}

pub fn graph_to_string(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph serializes")
}

/// Parses `p/q` or `p` into any scalar.
pub fn parse_scalar<S: Scalar>(text: &str) -> Result<S> {
    let t = text.trim();
    let bad = || Error::Parse(format!("invalid rational {t:?}"));
    let (p, q) = t.split_once('/').unwrap_or((t, "1"));
    let p: i64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    S::from_ratio(p, q)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightJson {
    Spec(String),
    Map(BTreeMap<String, String>),
}

impl Default for WeightJson {
    fn default() -> Self {
        WeightJson::Spec("unit".into())
    }
}

fn parse_weight_map<S: Scalar>(map: &BTreeMap<String, String>) -> Result<WeightFunction<S>> {
    let values = map
        .iter()
        .map(|(v, s)| {
            let id = v.trim().parse().map_err(|_| Error::Parse(format!("invalid vertex id {v:?}")))?;
            Ok((id, parse_scalar(s)?))
        })
        .collect::<Result<_>>()?;
    Ok(WeightFunction::Explicit(values))
}

/// Parses a weight spec string. Relative `file:` paths resolve against
/// `base_dir` when given.
pub fn parse_weight_spec<S: Scalar>(spec: &str, base_dir: Option<&Path>) -> Result<WeightFunction<S>> {
    let spec = spec.trim();
    match spec {
        "unit" => return Ok(WeightFunction::Unit),
        "half" => return Ok(WeightFunction::Half),
        "degree" => return Ok(WeightFunction::Degree),
        _ => {}
    }
    if let Some(value) = spec.strip_prefix("const:") {
        return Ok(WeightFunction::Constant(parse_scalar(value)?));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let mut full = PathBuf::from(path);
        if let (Some(base), true) = (base_dir, full.is_relative()) {
            full = base.join(full);
        }
        let map: BTreeMap<String, String> = serde_json::from_str(&fs::read_to_string(&full)?)?;
        return parse_weight_map(&map);
    }
    Err(Error::Parse(format!("unknown weight spec {spec:?}")))
}

pub fn parse_weight_json<S: Scalar>(w: &WeightJson, base_dir: Option<&Path>) -> Result<WeightFunction<S>> {
    match w {
        WeightJson::Spec(s) => parse_weight_spec(s, base_dir),
        WeightJson::Map(m) => parse_weight_map(m),
    }
}

/// Presets stay symbolic; anything else is written out as a map over `g`.
pub fn weight_to_json<S: Scalar>(w: &WeightFunction<S>, g: &Graph) -> Result<WeightJson> {
    Ok(match w {
        WeightFunction::Unit => WeightJson::Spec("unit".into()),
        WeightFunction::Half => WeightJson::Spec("half".into()),
        WeightFunction::Degree => WeightJson::Spec("degree".into()),
        WeightFunction::Constant(c) => WeightJson::Spec(format!("const:{c}")),
        other => {
            let values = other.values(g)?;
            WeightJson::Map(
                g.vertices().iter().zip(values).map(|(v, x)| (v.to_string(), x.to_string())).collect(),
            )
        }
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttachmentJson {
    pub receptor: VertexId,
    pub branch: GraphJson,
    pub root: VertexId,
    #[serde(default)]
    pub weights: WeightJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraftSpecJson {
    pub host: GraphJson,
    #[serde(default)]
    pub attachments: Vec<AttachmentJson>,
    #[serde(default)]
    pub host_weights: WeightJson,
}

pub fn parse_graft_spec<S: Scalar>(text: &str, base_dir: Option<&Path>) -> Result<GraftSpec<S>> {
    let j: GraftSpecJson = serde_json::from_str(text)?;
    let host = Graph::try_from(j.host)?;
    let host_weights = parse_weight_json(&j.host_weights, base_dir)?;
    let attachments = j
        .attachments
        .into_iter()
        .map(|a| {
            Ok(Attachment {
                receptor: a.receptor,
                branch: Graph::try_from(a.branch)?,
                root: a.root,
                weights: parse_weight_json(&a.weights, base_dir)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(GraftSpec { host, host_weights, attachments })
}

pub fn read_graft_spec<S: Scalar>(path: &Path) -> Result<GraftSpec<S>> {
    parse_graft_spec(&fs::read_to_string(path)?, path.parent())
}

pub fn graft_spec_to_json<S: Scalar>(spec: &GraftSpec<S>) -> Result<GraftSpecJson> {
    Ok(GraftSpecJson {
        host: GraphJson::from(&spec.host),
        attachments: spec
            .attachments
            .iter()
            .map(|a| {
                Ok(AttachmentJson {
                    receptor: a.receptor,
                    branch: GraphJson::from(&a.branch),
                    root: a.root,
                    weights: weight_to_json(&a.weights, &a.branch)?,
                })
            })
            .collect::<Result<_>>()?,
        host_weights: weight_to_json(&spec.host_weights, &spec.host)?,
    })
}

/// Output of the `graft` command: product graph, combined weight, provenance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductJson {
    pub graph: GraphJson,
    pub gamma: BTreeMap<VertexId, String>,
    pub host_map: BTreeMap<VertexId, VertexId>,
    pub branch_maps: Vec<BTreeMap<VertexId, VertexId>>,
}

pub fn product_to_json<S: Scalar>(p: &GraftProduct<S>) -> Result<ProductJson> {
    let gamma = p.gamma.values(&p.graph)?;
    Ok(ProductJson {
        graph: GraphJson::from(&p.graph),
        gamma: p.graph.vertices().iter().zip(gamma).map(|(&v, x)| (v, x.to_string())).collect(),
        host_map: p.host_map.clone(),
        branch_maps: p.branch_maps.clone(),
    })
}
