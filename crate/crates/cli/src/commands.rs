//! Per-graph subcommands. Each input graph yields one JSON line.

use std::ops::RangeInclusive;

use anyhow::{anyhow, bail, Context};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use cisgraph::counterexample::{build_counterexample, find_violation, CounterexampleRecipe};
use cisgraph::io::{parse_graph6, to_graph6};
use cisgraph::line::{contains_induced, line_root, Pattern};
use cisgraph::matching::{is_rim_bruteforce, recognize_rim};
use cisgraph::oracle::{find_unsettled, is_cis_bruteforce_capped, CombKind};
use cisgraph::recognition::{check_alpha_omega, erdos_hajnal_stat, recognize_claw_free_cis, Verdict};
use cisgraph::{Error, Graph, NamedGraph};

use crate::{read_graphs, Common, CounterexampleArgs, Output, SCHEMA};

/// Runs `f` over `items` on `jobs` threads, keeping input order.
pub fn par_map<T, R, F>(items: &[T], jobs: usize, f: F) -> anyhow::Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> anyhow::Result<R> + Sync + Send,
{
    if jobs <= 1 {
        return items.iter().enumerate().map(|(i, t)| f(i, t)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    pool.install(|| items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect())
}

fn header(command: &str, index: usize, g: &Graph) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("index".into(), json!(index));
    m.insert("graph".into(), json!(to_graph6(g)));
    m
}

fn merge(mut m: Map<String, Value>, extra: Value) -> Value {
    if let Value::Object(extra) = extra {
        m.extend(extra);
    }
    Value::Object(m)
}

/// Runs a per-graph command. Each result is a JSON line plus its violation count.
fn per_graph<F>(common: &Common, f: F) -> anyhow::Result<Output>
where
    F: Fn(usize, &Graph) -> anyhow::Result<(Value, usize)> + Sync + Send,
{
    let graphs = read_graphs(common)?;
    let results = par_map(&graphs, common.jobs, |i, g| f(i, g).with_context(|| format!("graph {i}")))?;
    let violations = results.iter().map(|(_, v)| v).sum();
    Ok(Output { lines: results.into_iter().map(|(l, _)| l).collect(), violations })
}

pub fn check_cis(common: &Common, combs: Option<usize>) -> anyhow::Result<Output> {
    per_graph(common, |i, g| {
        let outcome = is_cis_bruteforce_capped(g, common.cap)?;
        let mut body = json!({
            "cis": outcome.cis,
            "clique_count": outcome.clique_count,
            "stable_count": outcome.stable_count,
        });
        if let Some(w) = &outcome.witness {
            body["witness"] = serde_json::to_value(w)?;
        }
        let mut violations = 0;
        if let Some(k) = combs {
            let comb = find_unsettled(g, k, CombKind::Comb)?;
            let anticomb = find_unsettled(g, k, CombKind::Anticomb)?;
            // An unsettled comb or anticomb in a CIS graph contradicts the
            // necessary condition.
            if outcome.cis && (comb.is_some() || anticomb.is_some()) {
                violations += 1;
            }
            body["combs"] = json!({ "k_max": k, "unsettled_comb": comb, "unsettled_anticomb": anticomb });
        }
        Ok((merge(header("check-cis", i, g), body), violations))
    })
}

pub fn recognize(common: &Common) -> anyhow::Result<Output> {
    per_graph(common, |i, g| {
        let report = recognize_claw_free_cis(g);
        let mut body = serde_json::to_value(&report)?;
        let mut violations = 0;
        if common.verify {
            body["verification"] = match is_cis_bruteforce_capped(g, common.cap) {
                Ok(outcome) => {
                    let agrees = report.verdict == Verdict::NotClawFree || (report.verdict == Verdict::Cis) == outcome.cis;
                    if !agrees {
                        eprintln!("cisgraph: graph {i}: recognizer says {:?}, oracle says cis={}", report.verdict, outcome.cis);
                        violations += 1;
                    }
                    json!({ "oracle_cis": outcome.cis, "agrees": agrees })
                }
                Err(Error::CapExceeded { .. }) => json!({ "oracle_cis": null, "skipped": "cap_exceeded" }),
                Err(e) => return Err(e.into()),
            };
        }
        Ok((merge(header("recognize", i, g), body), violations))
    })
}

pub fn root(common: &Common) -> anyhow::Result<Output> {
    per_graph(common, |i, g| {
        let cert = line_root(g);
        let mut body = json!({
            "line_graph": cert.is_some(),
            "certificate": cert,
            "claw": contains_induced(g, Pattern::Claw),
        });
        let mut violations = 0;
        if common.verify {
            let ok = cert.as_ref().is_none_or(|c| c.verify(g));
            violations += !ok as usize;
            body["verified"] = json!(ok);
        }
        Ok((merge(header("root", i, g), body), violations))
    })
}

pub fn rim(common: &Common) -> anyhow::Result<Output> {
    per_graph(common, |i, g| {
        let mut components = Vec::new();
        let mut all = true;
        let mut violations = 0;
        for comp in g.components() {
            let vertices = comp.to_vec();
            let sub = g.induced_subgraph(&vertices)?;
            let form = recognize_rim(&sub)?;
            all &= form.is_rim();
            let mut entry = json!({ "vertices": vertices, "form": form });
            if common.verify {
                let brute = is_rim_bruteforce(&sub)?;
                let agrees = brute == form.is_rim() && (!brute || form.verify(&sub));
                violations += !agrees as usize;
                entry["verification"] = json!({ "bruteforce_rim": brute, "agrees": agrees });
            }
            components.push(entry);
        }
        let body = json!({ "rim": all, "components": components });
        Ok((merge(header("rim", i, g), body), violations))
    })
}

pub fn stats(common: &Common) -> anyhow::Result<Output> {
    per_graph(common, |i, g| {
        let ao = check_alpha_omega(g);
        let body = json!({
            "order": ao.order,
            "alpha": ao.alpha,
            "omega": ao.omega,
            "alpha_omega": ao.alpha * ao.omega,
            "bound_holds": ao.bound_holds,
            "eh_exponent": erdos_hajnal_stat(g).ok(),
        });
        Ok((merge(header("stats", i, g), body), 0))
    })
}

pub fn parse_range(s: &str) -> anyhow::Result<RangeInclusive<usize>> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| anyhow!(Error::InvalidParameter(format!("range {s:?} is not of the form a..b"))))?;
    let lo: usize = a.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad range start {a:?}")))?;
    let hi: usize = b.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad range end {b:?}")))?;
    if lo == 0 || lo > hi {
        bail!(Error::InvalidParameter(format!("range {s:?} must satisfy 1 <= a <= b")));
    }
    Ok(lo..=hi)
}

pub fn counterexample(args: &CounterexampleArgs) -> anyhow::Result<Output> {
    let range = match (&args.p_range, args.p) {
        (Some(r), _) => Some(parse_range(r)?),
        (None, Some(p)) => Some(p..=p),
        (None, None) => None,
    };
    let recipe = if let Some(path) = &args.recipe {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let recipe: CounterexampleRecipe = serde_json::from_str(&text).context("parsing recipe")?;
        recipe.validate()?;
        recipe
    } else if let Some(n) = args.random_base {
        CounterexampleRecipe::random(n, range.as_ref().map_or(3, |r| *r.start()), args.seed)?
    } else {
        let base = match (&args.base, &args.base_g6) {
            (Some(name), _) => name.parse::<NamedGraph>()?.build()?,
            (None, Some(g6)) => parse_graph6(g6)?,
            (None, None) => bail!(Error::InvalidParameter(
                "one of --base, --base-g6, --random-base, --recipe is required".into()
            )),
        };
        CounterexampleRecipe::new(base, 3)?
    };
    let range = range.unwrap_or(recipe.p..=recipe.p);
    let mut rows = Vec::new();
    for row in find_violation(&recipe.base, range)? {
        let mut value = serde_json::to_value(&row)?;
        if args.emit_graph {
            let r = CounterexampleRecipe { p: row.p, ..recipe.clone() };
            value["graph"] = json!(to_graph6(&build_counterexample(&r)?));
        }
        rows.push(value);
    }
    let line = json!({
        "schema": SCHEMA,
        "command": "counterexample",
        "base": to_graph6(&recipe.base),
        "seed": recipe.seed,
        "rows": rows,
    });
    Ok(Output { lines: vec![line], violations: 0 })
}
