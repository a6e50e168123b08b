//! Exhaustive, sampled and corpus scans.

use std::collections::BTreeMap;
use std::io::Write;

use anyhow::bail;
use rand::Rng;
use serde_json::{json, Value};

use cisgraph::enumerate::{graph_from_index, labeled_count, DEFAULT_MAX_ORDER};
use cisgraph::io::to_graph6;
use cisgraph::line::{contains_induced, is_domino_capped, Pattern};
use cisgraph::matching::{is_rim_bruteforce, recognize_rim};
use cisgraph::oracle::is_cis_bruteforce_capped;
use cisgraph::random::{gnp, random_claw_free, random_connected, rng};
use cisgraph::recognition::{check_alpha_omega, classify_claw_free_cis, Verdict};
use cisgraph::{Error, Graph};

use crate::commands::par_map;
use crate::{read_graphs, Mode, Output, Property, ScanArgs, SCHEMA};

const CHUNK: u64 = 1 << 15;
const VIOLATIONS_LISTED: usize = 20;

struct Record {
    class: &'static str,
    violation: bool,
}

fn is_claw_free(g: &Graph) -> bool {
    contains_induced(g, Pattern::Claw).is_none()
}

// `None` when the graph is outside the property's domain.
fn evaluate(property: Property, g: &Graph, cap: usize) -> anyhow::Result<Option<Record>> {
    let record = |class, violation| Ok(Some(Record { class, violation }));
    match property {
        Property::Cis => {
            let cis = is_cis_bruteforce_capped(g, cap)?.cis;
            let mut violation = cis != is_cis_bruteforce_capped(&g.complement(), cap)?.cis;
            if is_claw_free(g) {
                violation |= (classify_claw_free_cis(g) == Verdict::Cis) != cis;
            }
            record(if cis { "cis" } else { "not_cis" }, violation)
        }
        Property::Rim => {
            if !g.is_connected() {
                return Ok(None);
            }
            let structural = recognize_rim(g)?.is_rim();
            let brute = is_rim_bruteforce(g)?;
            record(if brute { "rim" } else { "not_rim" }, structural != brute)
        }
        Property::ClawfreeCis => {
            if !is_claw_free(g) {
                return Ok(None);
            }
            let cis = is_cis_bruteforce_capped(g, cap)?.cis;
            record(if cis { "cis" } else { "not_cis" }, (classify_claw_free_cis(g) == Verdict::Cis) != cis)
        }
        Property::Domino => {
            let domino = is_domino_capped(g, cap)?;
            let free = [Pattern::Claw, Pattern::Gem, Pattern::W4].iter().all(|&p| contains_induced(g, p).is_none());
            record(if domino { "domino" } else { "not_domino" }, domino != free)
        }
        Property::Bound => {
            if !is_claw_free(g) || !is_cis_bruteforce_capped(g, cap)?.cis {
                return Ok(None);
            }
            let holds = check_alpha_omega(g).bound_holds;
            record(if holds { "bound_holds" } else { "bound_fails" }, !holds)
        }
    }
}

fn sample(property: Property, n: usize, seed: u64, index: u64) -> Graph {
    let mut r = rng(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    match property {
        Property::Cis => {
            let p = r.gen_range(0.0..1.0);
            gnp(n, p, &mut r)
        }
        Property::Rim | Property::Domino => {
            let p = r.gen_range(0.0..0.8);
            random_connected(n, p, &mut r)
        }
        Property::ClawfreeCis | Property::Bound => random_claw_free(n, &mut r),
    }
}

#[derive(Default)]
struct Tally {
    examined: u64,
    skipped: u64,
    counts: BTreeMap<&'static str, u64>,
    violation_count: u64,
    violations: Vec<String>,
}

fn validate(args: &ScanArgs) -> anyhow::Result<(usize, usize)> {
    let min_n = args.min_n.unwrap_or(args.max_n);
    if args.mode != Mode::Corpus {
        if min_n == 0 || min_n > args.max_n {
            bail!(Error::InvalidParameter(format!("need 1 <= min_n <= max_n, got {min_n}..{}", args.max_n)));
        }
        if args.mode == Mode::Exhaustive && args.max_n > DEFAULT_MAX_ORDER {
            bail!(Error::InvalidParameter(format!(
                "exhaustive scans stop at {DEFAULT_MAX_ORDER} vertices; use --mode sample or --mode corpus"
            )));
        }
        if args.mode == Mode::Sample && args.samples == 0 {
            bail!(Error::InvalidParameter("sample mode needs --samples >= 1".into()));
        }
    }
    Ok((min_n, args.max_n))
}

pub fn scan(args: &ScanArgs, out: &mut dyn Write) -> anyhow::Result<Output> {
    let (min_n, max_n) = validate(args)?;
    let common = &args.common;
    let mut tally = Tally::default();

    let mut process = |graphs: Vec<Graph>, first_index: u64, out: &mut dyn Write| -> anyhow::Result<()> {
        let results = par_map(&graphs, common.jobs, |_, g| {
            if args.connected_only && !g.is_connected() {
                return Ok(None);
            }
            evaluate(args.property, g, common.cap)
        })?;
        for (offset, (g, result)) in graphs.iter().zip(results).enumerate() {
            let Some(rec) = result else {
                tally.skipped += 1;
                continue;
            };
            tally.examined += 1;
            *tally.counts.entry(rec.class).or_default() += 1;
            if rec.violation {
                tally.violation_count += 1;
                if tally.violations.len() < VIOLATIONS_LISTED {
                    tally.violations.push(to_graph6(g));
                }
            }
            if args.stream {
                let line = json!({
                    "schema": SCHEMA,
                    "command": "scan-graph",
                    "index": first_index + offset as u64,
                    "graph": to_graph6(g),
                    "class": rec.class,
                    "violation": rec.violation,
                });
                writeln!(out, "{line}")?;
            }
        }
        Ok(())
    };

    match args.mode {
        Mode::Exhaustive => {
            let mut index = 0;
            for n in min_n..=max_n {
                let total = labeled_count(n);
                let mut start = 0;
                while start < total {
                    let end = (start + CHUNK).min(total);
                    let graphs: Vec<Graph> = (start..end).map(|i| graph_from_index(n, i)).collect();
                    process(graphs, index, out)?;
                    index += end - start;
                    start = end;
                }
            }
        }
        Mode::Sample => {
            let orders = (max_n - min_n + 1) as u64;
            let total = args.samples as u64;
            let mut start = 0;
            while start < total {
                let end = (start + CHUNK).min(total);
                let graphs: Vec<Graph> =
                    (start..end).map(|i| sample(args.property, min_n + (i % orders) as usize, common.seed, i)).collect();
                process(graphs, start, out)?;
                start = end;
            }
        }
        Mode::Corpus => {
            let graphs = read_graphs(common)?;
            process(graphs, 0, out)?;
        }
    }

    let property = match args.property {
        Property::Cis => "cis",
        Property::Rim => "rim",
        Property::ClawfreeCis => "clawfree-cis",
        Property::Domino => "domino",
        Property::Bound => "bound",
    };
    let mode = match args.mode {
        Mode::Exhaustive => "exhaustive",
        Mode::Sample => "sample",
        Mode::Corpus => "corpus",
    };
    let mut config = json!({
        "mode": mode,
        "property": property,
        "connected_only": args.connected_only,
        "seed": common.seed,
        "cap": common.cap,
    });
    if args.mode != Mode::Corpus {
        config["min_n"] = json!(min_n);
        config["max_n"] = json!(max_n);
    }
    if args.mode == Mode::Sample {
        config["samples"] = json!(args.samples);
    }
    let summary: Value = json!({
        "schema": SCHEMA,
        "command": "scan",
        "config": config,
        "examined": tally.examined,
        "skipped": tally.skipped,
        "counts": tally.counts,
        "violation_count": tally.violation_count,
        "violations": tally.violations,
    });
    Ok(Output { lines: vec![summary], violations: tally.violation_count as usize })
}
