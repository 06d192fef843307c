//! Randomized checks of every closed form against the BFS moment of the
//! constructed product.
//!
//! Instance `i` of a run with seed `s` is drawn from [`Generator::new(s, i)`],
//! so a run is reproducible and instances are independent of each other. They
//! are evaluated in parallel; the report lists mismatches in instance order.
//! All arithmetic is exact.

use std::borrow::Borrow;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::closed_forms::{
    comparison_difference, extended_cycles_degree_distance, extended_cycles_spec, flower_moment,
    proper_cycles_degree_distance, sigma_degree_moment, sigma_mean_distance, sigma_moment,
    sigma_unit_moment, theorem1_moment, theorem41_moment, unicyclic_degree_distance, unicyclic_spec,
    Forest,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::json::{graft_spec_to_json, weight_to_json, GraphJson};
use crate::moments::moment;
use crate::products::{flower, graft, permutation_graph, Branch, GraftSpec};
use crate::random::Generator;
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::weights::WeightFunction;

type W = WeightFunction<Rational>;

pub const MAX_BRANCHES: usize = 4;
pub const MAX_BRANCH_ORDER: usize = 8;
/// Cycle and permutation instances square or multiply their sizes, so they
/// are kept at or below this order.
pub const MAX_CYCLE_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Theorem1,
    Theorem41,
    Sigma,
    Flower,
    Comparison,
    Unicyclic,
    ExtCycles,
    ProperCycles,
}

impl Formula {
    pub const ALL: [Formula; 8] = [
        Formula::Theorem1,
        Formula::Theorem41,
        Formula::Sigma,
        Formula::Flower,
        Formula::Comparison,
        Formula::Unicyclic,
        Formula::ExtCycles,
        Formula::ProperCycles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Theorem1 => "theorem1",
            Formula::Theorem41 => "theorem41",
            Formula::Sigma => "sigma",
            Formula::Flower => "flower",
            Formula::Comparison => "comparison",
            Formula::Unicyclic => "unicyclic",
            Formula::ExtCycles => "extcycles",
            Formula::ProperCycles => "propercycles",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown formula {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub count: usize,
    pub seed: u64,
    /// Largest host order drawn.
    pub max_size: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { count: 100, seed: 0, max_size: 12 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub index: usize,
    pub check: String,
    pub expected: String,
    pub got: String,
    pub instance: Value,
}

/// Outcome of a run. `elapsed` is not serialized so that the JSON form only
/// depends on the inputs.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub formula: String,
    pub instances: usize,
    pub seed: u64,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn run(formula: Formula, config: &VerifyConfig) -> Result<VerificationReport> {
    if config.max_size == 0 {
        return Err(Error::InvalidArgument("max size must be positive".into()));
    }
    let start = Instant::now();
    let mismatches: Vec<Mismatch> = (0..config.count)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut gen = Generator::new(config.seed, i as u64);
            let mut checks = Checks::default();
            instance(formula, i, &mut gen, config.max_size, &mut checks);
            checks.into_mismatches(i)
        })
        .collect();
    Ok(VerificationReport {
        formula: formula.name().into(),
        instances: config.count,
        seed: config.seed,
        mismatches,
        elapsed: start.elapsed(),
    })
}

#[derive(Default)]
struct Checks {
    instance: Value,
    failed: Vec<(String, String, String)>,
}

impl Checks {
    /// Records a failure unless both sides evaluate and agree.
    fn compare(
        &mut self,
        label: &str,
        oracle: impl Borrow<Result<Rational>>,
        formula: impl Borrow<Result<Rational>>,
    ) {
        let (oracle, formula) = (oracle.borrow(), formula.borrow());
        let show = |r: &Result<Rational>| match r {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        let ok = matches!((oracle, formula), (Ok(a), Ok(b)) if a == b);
        if !ok {
            self.failed.push((label.into(), show(oracle), show(formula)));
        }
    }

    fn into_mismatches(self, index: usize) -> Vec<Mismatch> {
        let instance = self.instance;
        self.failed
            .into_iter()
            .map(|(check, expected, got)| Mismatch { index, check, expected, got, instance: instance.clone() })
            .collect()
    }
}

fn oracle(spec: &GraftSpec<Rational>) -> Result<Rational> {
    let p = graft(spec)?;
    moment(&p.graph, &p.gamma)
}

fn degree_oracle(spec: &GraftSpec<Rational>) -> Result<Rational> {
    moment(&graft(spec)?.graph, &W::Degree)
}

fn spec_value(spec: &GraftSpec<Rational>) -> Value {
    graft_spec_to_json(spec)
        .and_then(|j| Ok(serde_json::to_value(j)?))
        .unwrap_or_else(|e| Value::String(e.to_string()))
}

fn graph_value(g: &Graph) -> Value {
    serde_json::to_value(GraphJson::from(g)).expect("graph serializes")
}

fn weight_value(w: &W, g: &Graph) -> Value {
    weight_to_json(w, g)
        .and_then(|j| Ok(serde_json::to_value(j)?))
        .unwrap_or_else(|e| Value::String(e.to_string()))
}

fn branch_limit(max_size: usize) -> usize {
    max_size.min(MAX_BRANCH_ORDER)
}

fn cycle_limit(max_size: usize) -> usize {
    max_size.clamp(3, MAX_CYCLE_ORDER)
}

fn instance(formula: Formula, index: usize, gen: &mut Generator, max_size: usize, checks: &mut Checks) {
    match formula {
        Formula::Theorem1 => theorem1(gen, max_size, checks),
        Formula::Theorem41 => theorem41(index % 2 == 1, gen, max_size, checks),
        Formula::Sigma => sigma(gen, max_size, checks),
        Formula::Flower => flower_check(gen, max_size, checks),
        Formula::Comparison => comparison(gen, max_size, checks),
        Formula::Unicyclic => unicyclic(gen, max_size, checks),
        Formula::ExtCycles => ext_cycles(gen, max_size, checks),
        Formula::ProperCycles => proper_cycles(gen, max_size, checks),
    }
}

fn theorem1(gen: &mut Generator, max_size: usize, checks: &mut Checks) {
    let spec = gen.graft_spec(max_size, MAX_BRANCHES, branch_limit(max_size), false);
    checks.instance = spec_value(&spec);
    checks.compare("theorem1", oracle(&spec), theorem1_moment(&spec));
}

fn family(spec: &GraftSpec<Rational>) -> BTreeMap<VertexId, Vec<Branch<Rational>>> {
    let mut family: BTreeMap<VertexId, Vec<Branch<Rational>>> = BTreeMap::new();
    for a in &spec.attachments {
        family
            .entry(a.receptor)
            .or_default()
            .push(Branch::new(a.branch.clone(), a.root, a.weights.clone()));
    }
    family
}

/// Even instances use distinct receptors, odd ones always repeat at least one.
fn theorem41(repeated: bool, gen: &mut Generator, max_size: usize, checks: &mut Checks) {
    let mut spec = gen.graft_spec(max_size, MAX_BRANCHES, branch_limit(max_size), !repeated);
    if repeated {
        let x = match spec.attachments.first() {
            Some(a) => a.receptor,
            None => gen.vertex(&spec.host),
        };
        let extra = gen.branch(branch_limit(max_size));
        let copies = if spec.attachments.is_empty() { 2 } else { 1 };
        for _ in 0..copies {
            spec = spec.attach(x, extra.clone());
        }
    }
    checks.instance = spec_value(&spec);
    let fam = family(&spec);
    let value = theorem41_moment(&spec.host, &spec.host_weights, &fam);
    checks.compare("theorem41", oracle(&spec), &value);
    if fam.values().all(|bs| bs.len() == 1) {
        checks.compare("theorem41 vs theorem1", theorem1_moment(&spec), value);
    }
}

fn sigma(gen: &mut Generator, max_size: usize, checks: &mut Checks) {
    let r_max = max_size.min(MAX_CYCLE_ORDER);
    let r = gen.between(1, r_max);
    let host = gen.connected_graph(r, r);
    let k = gen.connected_graph(r, r);
    let alpha: W = gen.weights(&host);
    let beta: W = gen.weights(&k);
    let sigma = gen.permutation(r);
    checks.instance = json!({
        "host": graph_value(&host),
        "host_weights": weight_value(&alpha, &host),
        "branch": graph_value(&k),
        "weights": weight_value(&beta, &k),
        "sigma": sigma,
    });
    let weighted = permutation_graph(&host, &alpha, &k, &beta, &sigma);
    checks.compare(
        "sigma",
        weighted.and_then(|p| moment(&p.graph, &p.gamma)),
        sigma_moment(&host, &alpha, &k, &beta),
    );
    let bare = match permutation_graph(&host, &W::Unit, &k, &W::Unit, &sigma) {
        Ok(p) => p.graph,
        Err(e) => {
            checks.compare("sigma product", Err(e), Ok(Rational::ZERO));
            return;
        }
    };
    let unit = moment(&bare, &W::Unit);
    checks.compare("sigma unit", &unit, sigma_unit_moment(&host, &k));
    let n = Rational::from_integer(bare.order() as i64);
    checks.compare(
        "sigma mean distance",
        unit.and_then(|m| m.try_div(n * n)),
        sigma_mean_distance(&host, &k),
    );
    checks.compare("sigma degree", moment(&bare, &W::Degree), sigma_degree_moment(&host, &k));
}

fn flower_check(gen: &mut Generator, max_size: usize, checks: &mut Checks) {
    let count = gen.between(1, MAX_BRANCHES);
    let center: Rational = gen.weight();
    let branches: Vec<Branch<Rational>> = (0..count).map(|_| gen.branch(branch_limit(max_size))).collect();
    let spec = branches
        .iter()
        .fold(GraftSpec::new(Graph::singleton(), W::Constant(center)), |s, b| s.attach(0, b.clone()));
    checks.instance = spec_value(&spec);
    let product = flower(center, branches.clone());
    checks.compare(
        "flower",
        product.and_then(|p| moment(&p.graph, &p.gamma)),
        flower_moment(center, &branches),
    );
}

fn comparison(gen: &mut Generator, max_size: usize, checks: &mut Checks) {
    let host = gen.connected_graph(1, max_size);
    let alpha: W = gen.weights(&host);
    let x = gen.vertex(&host);
    let receptors: Vec<VertexId> = (0..gen.between(1, MAX_BRANCHES)).map(|_| gen.vertex(&host)).collect();
    let k: Branch<Rational> = gen.branch(branch_limit(max_size));
    let order = k.graph.order();

    // Same order, equal constant weights with the same total.
    let k2 = gen.connected_graph(order, order);
    let root2 = gen.vertex(&k2);

    checks.instance = json!({
        "host": graph_value(&host),
        "host_weights": weight_value(&alpha, &host),
        "x": x,
        "receptors": receptors,
        "branch": graph_value(&k.graph),
        "root": k.root,
        "weights": weight_value(&k.weights, &k.graph),
        "replacement": graph_value(&k2),
        "replacement_root": root2,
    });

    let difference = |branch: &Branch<Rational>| -> Result<Rational> {
        let spread = receptors
            .iter()
            .fold(GraftSpec::new(host.clone(), alpha.clone()), |s, &xi| s.attach(xi, branch.clone()));
        let stacked = receptors
            .iter()
            .fold(GraftSpec::new(host.clone(), alpha.clone()), |s, _| s.attach(x, branch.clone()));
        oracle(&stacked)?.try_sub(oracle(&spread)?)
    };
    let formula = k
        .weights
        .total_weight(&k.graph)
        .and_then(|b| comparison_difference(&host, &alpha, x, &receptors, order, b));
    checks.compare("comparison", difference(&k), &formula);

    let replacement = k.weights.total_weight(&k.graph).and_then(|b| {
        let each = b.try_div(Rational::from_integer(order as i64))?;
        difference(&Branch::new(k2.clone(), root2, W::Constant(each)))
    });
    checks.compare("comparison replacement", replacement, formula);
}

fn random_forest(gen: &mut Generator, r: usize, max_size: usize) -> Forest {
    let mut forest = Forest::new();
    for _ in 0..gen.between(0, MAX_BRANCHES) {
        let tree = gen.tree(1, branch_limit(max_size));
        let root = gen.vertex(&tree);
        let x = gen.below(r) as VertexId;
        forest.entry(x).or_default().push((tree, root));
    }
    forest
}

fn unicyclic(gen: &mut Generator, max_size: usize, checks: &mut Checks) {
    let r = gen.between(3, cycle_limit(max_size));
    let forest = random_forest(gen, r, max_size);
    let spec = unicyclic_spec::<Rational>(r, &forest);
    checks.instance = match &spec {
        Ok(s) => spec_value(s),
        Err(e) => Value::String(e.to_string()),
    };
    let oracle = spec.and_then(|s| degree_oracle(&s));
    checks.compare("unicyclic", oracle, unicyclic_degree_distance(r, &forest));
}

fn cycle_instance(host_r: usize, orders: &[usize], checks: &mut Checks) -> Result<Rational> {
    let spec = extended_cycles_spec::<Rational>(host_r, orders)?;
    checks.instance = json!({ "host_order": host_r, "branch_orders": orders, "spec": spec_value(&spec) });
    degree_oracle(&spec)
}

fn ext_pairs(orders: &[usize]) -> Result<Vec<(usize, usize)>> {
    orders.iter().map(|&r| Ok((r, Graph::extended_cycle(r)?.size()))).collect()
}

fn ext_cycles(gen: &mut Generator, max_size: usize, checks: &mut Checks) {
    let host_r = gen.between(1, max_size.min(MAX_CYCLE_ORDER));
    let orders: Vec<usize> = (0..host_r).map(|_| gen.between(1, branch_limit(max_size))).collect();
    let oracle = cycle_instance(host_r, &orders, checks);
    let formula = ext_pairs(&orders).and_then(|p| extended_cycles_degree_distance(host_r, &p));
    checks.compare("extcycles", oracle, formula);
}

fn proper_cycles(gen: &mut Generator, max_size: usize, checks: &mut Checks) {
    let host_r = gen.between(3, cycle_limit(max_size));
    let orders: Vec<usize> = (0..host_r).map(|_| gen.between(3, cycle_limit(max_size))).collect();
    let oracle = cycle_instance(host_r, &orders, checks);
    let proper = proper_cycles_degree_distance(host_r, &orders);
    checks.compare("propercycles", oracle, &proper);
    let extended = ext_pairs(&orders).and_then(|p| extended_cycles_degree_distance(host_r, &p));
    checks.compare("propercycles vs extcycles", extended, proper);
}
