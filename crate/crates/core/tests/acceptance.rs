//! Acceptance suite. Runs without the libtest harness so that every criterion
//! prints its own PASS/FAIL line; exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use graft_moments::closed_forms::{
    comparison_difference, cycle_theta, extended_cycles_degree_distance, extended_cycles_spec,
    proper_cycles_degree_distance, sigma_degree_moment, sigma_mean_distance, sigma_moment, sigma_unit_moment,
    theta_holds, unicyclic_degree_distance, unicyclic_spec, Forest,
};
use graft_moments::isomoment::{isomoment_family, WeightPair, DEFAULT_SAMPLES};
use graft_moments::products::permutation_graph;
use graft_moments::random::Generator;
use graft_moments::verify::{run, Formula, VerificationReport, VerifyConfig};
use graft_moments::{indices, moment, Branch, GraftSpec, Graph, Rational};
use itertools::Itertools;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, format!("{what}: got {got:?}, want {want:?}"))
}

fn verified(formula: Formula, count: usize, seed: u64) -> Result<VerificationReport, String> {
    let report = run(formula, &VerifyConfig { count, seed, max_size: 12 }).map_err(|e| e.to_string())?;
    match report.mismatches.first() {
        None => Ok(report),
        Some(m) => Err(format!(
            "{formula}: {} mismatches, first [{}] expected {} got {}",
            report.mismatches.len(),
            m.check,
            m.expected,
            m.got
        )),
    }
}

fn fixtures() -> (Graph, Graph) {
    (Graph::diamond(), Graph::path(4).unwrap())
}

fn criterion_1() -> Outcome {
    let (h, k) = fixtures();
    let cases = [(&h, W::Unit, 14), (&h, W::Degree, 34), (&k, W::Unit, 20), (&k, W::Degree, 28)];
    let mut slowest = Duration::ZERO;
    for (g, w, want) in cases {
        let start = Instant::now();
        let got = moment(g, &w).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        eq("moment", got, int(want))?;
        eq("oracle", moment_oracle(g, &w), int(want))?;
        ensure(took < Duration::from_millis(1), format!("took {took:?}"))?;
    }
    Ok(format!("14, 34, 20, 28; slowest {slowest:?}"))
}

fn criterion_2() -> Outcome {
    let (h, k) = fixtures();
    let e = |r: graft_moments::Result<Rational>| r.map_err(|e| e.to_string());
    eq("unit", e(sigma_moment(&h, &W::zero(), &k, &W::Unit))?, int(784))?;
    eq("unit closed form", e(sigma_unit_moment(&h, &k))?, int(784))?;
    eq("degree on host", e(sigma_moment(&h, &W::Degree, &k, &W::Unit))?, int(1120))?;
    eq("degree", e(sigma_moment(&h, &W::Degree, &k, &W::Degree))?, int(1480))?;
    eq("degree closed form", e(sigma_degree_moment(&h, &k))?, int(1480))?;
    eq("mean distance", e(sigma_mean_distance(&h, &k))?, ratio(49, 16))?;
    for sigma in (0..4).permutations(4) {
        let bare = permutation_graph(&h, &W::zero(), &k, &W::Unit, &sigma).map_err(|e| e.to_string())?;
        let unit = e(moment(&bare.graph, &bare.gamma))?;
        let mixed = permutation_graph(&h, &W::Degree, &k, &W::Unit, &sigma).map_err(|e| e.to_string())?;
        let (plain, _) = Plain::from_graph(&mixed.graph);
        eq("oracle unit", unit, int(784))?;
        eq("oracle unit (independent)", plain.moment(&vec![Rational::ONE; 16]), int(784))?;
        eq("oracle degree on host", e(moment(&mixed.graph, &mixed.gamma))?, int(1120))?;
        eq("oracle degree", plain.degree_distance(), int(1480))?;
        eq("oracle mean distance", plain.moment(&vec![Rational::ONE; 16]) / int(256), ratio(49, 16))?;
    }
    Ok("784, 1120, 49/16, 1480 for all 24 permutations".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let report = verified(Formula::Theorem1, 200, 7)?;
    let took = start.elapsed();
    // The same instances once more against the hand-glued oracle.
    for i in 0..200 {
        let spec: GraftSpec<Rational> = Generator::new(7, i).graft_spec(12, 4, 8, false);
        let f = graft_moments::closed_forms::theorem1_moment(&spec).map_err(|e| e.to_string())?;
        eq("independent oracle", f, graft_oracle(&spec))?;
    }
    ensure(took < Duration::from_secs(10), format!("took {took:?}"))?;
    Ok(format!("{} instances, 0 mismatches, {took:?}", report.instances))
}

fn criterion_4() -> Outcome {
    let report = verified(Formula::Theorem41, 100, 4)?;
    let a = Graph::path(3).unwrap();
    let k2 = Graph::path(2).unwrap();
    let c3 = Graph::cycle(3).unwrap();
    let spec = GraftSpec::new(a.clone(), W::Degree)
        .attach(1, Branch::new(k2.clone(), 0, W::Unit))
        .attach(1, Branch::new(c3.clone(), 2, W::Degree))
        .attach(0, Branch::new(k2, 1, W::Constant(ratio(3, 2))));
    let mut family = std::collections::BTreeMap::new();
    for at in &spec.attachments {
        family
            .entry(at.receptor)
            .or_insert_with(Vec::new)
            .push(Branch::new(at.branch.clone(), at.root, at.weights.clone()));
    }
    let v = graft_moments::closed_forms::theorem41_moment(&a, &W::Degree, &family).map_err(|e| e.to_string())?;
    eq("repeated receptor fixture", v, graft_oracle(&spec))?;
    Ok(format!("{} instances (half with repeated receptors), 0 mismatches", report.instances))
}

fn criterion_5() -> Outcome {
    let (h, k) = fixtures();
    let mut pairs: Vec<WeightPair> = ["unit", "degree", "degree+unit", "half+const:2/3"]
        .iter()
        .map(|s| WeightPair::parse(s, None).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let explicit = |g: &Graph, vals: &[i64]| -> W {
        W::Explicit(g.vertices().iter().copied().zip(vals.iter().map(|&v| int(v))).collect())
    };
    pairs.push(WeightPair { label: "explicit".into(), alpha: explicit(&h, &[5, 0, 2, 7]), beta: explicit(&k, &[1, 4, 0, 3]) });
    let report = isomoment_family(&h, &k, &pairs, 0, DEFAULT_SAMPLES).map_err(|e| e.to_string())?;
    eq("permutations", report.permutations, 24)?;
    ensure(report.consistent, "moments differ between classes")?;
    ensure(report.classes.len() >= 2, format!("only {} class", report.classes.len()))?;
    eq("unit", report.expected["unit"].as_str(), "784/1")?;
    eq("degree", report.expected["degree"].as_str(), "1480/1")?;
    eq("mixed", report.expected["degree+unit"].as_str(), "1120/1")?;
    Ok(format!("24 permutations, {} isomorphism classes, 5 weightings equal", report.classes.len()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    for r in 1..=64usize {
        ensure(theta_holds(r).map_err(|e| e.to_string())?, format!("row sums differ from theta at r = {r}"))?;
    }
    let took = start.elapsed();
    for r in 1..=64usize {
        let want = ((r / 2) * (r - r / 2)) as u64;
        eq("closed form", cycle_theta(r as u64), want)?;
        let (plain, _) = Plain::from_graph(&Graph::extended_cycle(r).unwrap());
        let sums: Vec<u64> = plain.floyd().iter().map(|row| row.iter().map(|d| d.unwrap()).sum()).collect();
        ensure(sums.iter().all(|&s| s == want), format!("independent row sum at r = {r}"))?;
    }
    ensure(took < Duration::from_secs(1), format!("took {took:?}"))?;
    Ok(format!("r = 1..=64 in {took:?}"))
}

fn criterion_7() -> Outcome {
    let report = verified(Formula::Unicyclic, 100, 1)?;
    let paw: Forest = [(0, vec![(Graph::path(2).unwrap(), 0)])].into();
    let e = |r: graft_moments::Result<Rational>| r.map_err(|e| e.to_string());
    eq("paw", e(unicyclic_degree_distance(3, &paw))?, int(30))?;
    eq("paw oracle", graft_degree_oracle(&unicyclic_spec(3, &paw).unwrap()), int(30))?;
    let bare = Forest::new();
    eq("C5", e(unicyclic_degree_distance(5, &bare))?, int(60))?;
    eq("C5 = 2·5·θ5", int(2 * 5 * cycle_theta(5) as i64), int(60))?;
    eq("C5 oracle", moment_oracle(&Graph::cycle(5).unwrap(), &W::Degree), int(60))?;
    Ok(format!("{} instances, paw 30, C5 60", report.instances))
}

fn criterion_8() -> Outcome {
    let ext = verified(Formula::ExtCycles, 100, 1)?;
    let proper = verified(Formula::ProperCycles, 100, 1)?;
    let e = |r: graft_moments::Result<Rational>| r.map_err(|e| e.to_string());
    for (host_r, orders, want) in [(3, vec![3, 3, 3], 360), (4, vec![3, 3, 3, 3], 784)] {
        let pairs: Vec<(usize, usize)> = orders.iter().map(|&r| (r, r)).collect();
        eq("extended", e(extended_cycles_degree_distance(host_r, &pairs))?, int(want))?;
        eq("proper", e(proper_cycles_degree_distance(host_r, &orders))?, int(want))?;
        let spec = extended_cycles_spec::<Rational>(host_r, &orders).map_err(|e| e.to_string())?;
        eq("oracle", graft_degree_oracle(&spec), int(want))?;
    }
    Ok(format!(
        "{} + {} instances (proper also against extended), 360 and 784",
        ext.instances, proper.instances
    ))
}

fn criterion_9() -> Outcome {
    let report = verified(Formula::Comparison, 100, 1)?;
    let p3 = Graph::path(3).unwrap();
    let k2 = Graph::path(2).unwrap();
    let d = comparison_difference(&p3, &W::Unit, 1, &[0, 2], 2, int(2)).map_err(|e| e.to_string())?;
    eq("P3/K2", d, int(-14))?;
    let spread = GraftSpec::new(p3.clone(), W::Unit)
        .attach(0, Branch::new(k2.clone(), 0, W::Unit))
        .attach(2, Branch::new(k2.clone(), 0, W::Unit));
    let stacked = GraftSpec::new(p3.clone(), W::Unit)
        .attach(1, Branch::new(k2.clone(), 0, W::Unit))
        .attach(1, Branch::new(k2, 0, W::Unit));
    eq("P3/K2 oracle", graft_oracle(&stacked) - graft_oracle(&spread), int(-14))?;

    // Different four-vertex branches of total weight 4, rooted anywhere.
    let host = Graph::cycle(5).unwrap();
    let alpha = W::Degree;
    let receptors = [0, 2, 2];
    let want = comparison_difference(&host, &alpha, 4, &receptors, 4, int(4)).map_err(|e| e.to_string())?;
    let explicit = |vals: [Rational; 4]| W::Explicit((0..4).zip(vals).collect());
    let branches = [
        (Graph::path(4).unwrap(), W::Unit),
        (Graph::star(3).unwrap(), explicit([ratio(1, 2), ratio(3, 2), int(2), int(0)])),
        (Graph::cycle(4).unwrap(), W::Constant(int(1))),
        (Graph::diamond(), explicit([int(4), int(0), int(0), int(0)])),
        (Graph::complete(4).unwrap(), explicit([int(0), ratio(1, 3), ratio(8, 3), int(1)])),
    ];
    for (k, beta) in branches {
        let total = weight_values(&beta, &k).into_iter().fold(Rational::ZERO, |a, v| a + v);
        eq("branch weight", total, int(4))?;
        for &root in k.vertices() {
            let b = Branch::new(k.clone(), root, beta.clone());
            let spread = receptors.iter().fold(GraftSpec::new(host.clone(), alpha.clone()), |s, &x| s.attach(x, b.clone()));
            let stacked = receptors.iter().fold(GraftSpec::new(host.clone(), alpha.clone()), |s, _| s.attach(4, b.clone()));
            eq("replacement", graft_oracle(&stacked) - graft_oracle(&spread), want)?;
        }
    }
    Ok(format!("{} instances (each with a replacement branch), P3/K2 -14", report.instances))
}

fn criterion_10() -> Outcome {
    let mut gen = Generator::new(10, 0);
    for _ in 0..50 {
        let g = gen.connected_graph(1, 14);
        let (plain, _) = Plain::from_graph(&g);
        let rep = indices::<Rational>(&g).map_err(|e| e.to_string())?;
        let n = int(g.order() as i64);
        let m1 = moment_oracle(&g, &W::Unit);
        let zagreb = plain.degrees().iter().fold(Rational::ZERO, |a, &d| a + int((d * d) as i64));
        eq("W = M1/2", rep.wiener, m1 / int(2))?;
        eq("W definition", rep.wiener, plain.wiener())?;
        eq("D' = M^δ", rep.degree_distance, moment_oracle(&g, &W::Degree))?;
        eq("D' definition", rep.degree_distance, plain.degree_distance())?;
        eq("MTI", rep.mti, zagreb + plain.degree_distance())?;
        eq("mean", rep.mean_distance, m1 / (n * n))?;
    }
    Ok("50 graphs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("fixture moments", criterion_1),
        ("permutation family values", criterion_2),
        ("graft formula, 200 random specs", criterion_3),
        ("vector formula, repeated receptors", criterion_4),
        ("permutation invariance and classes", criterion_5),
        ("cycle row sums", criterion_6),
        ("unicyclic degree distance", criterion_7),
        ("extended and proper cycles", criterion_8),
        ("comparison difference", criterion_9),
        ("index identities", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
