//! Statements about every graph on 7..=11 vertices with minimum degree 6.

use serde_json::{json, Value};

use super::report::{Counterexample, LemmaReport, LemmaRun};
use super::timed;
use crate::enumerate::{EnumFilter, MinDegreeEnumeration};
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, VertexSet};
use crate::graph6;
use crate::minors::{contains_subgraph, is_k_connected, rooted_k4_within, SubgraphPattern};

const MIN_DEGREE: usize = 6;

#[derive(Default)]
struct Tally {
    graphs: u64,
    instances: u64,
    counters: [u64; 2],
    counterexamples: Vec<Counterexample>,
}

/// Runs `check` over every graph of each order in `orders`, chunk-parallel.
/// Per-order tallies come back in order.
fn over_class<F>(orders: std::ops::RangeInclusive<usize>, check: F) -> Result<Vec<(usize, Tally)>>
where
    F: Fn(&Graph, &mut Tally) + Sync + Send,
{
    let mut out = Vec::new();
    for n in orders {
        let e = MinDegreeEnumeration::new(EnumFilter::new(n, MIN_DEGREE))?;
        let ids: Vec<usize> = (0..e.chunk_count()).collect();
        let parts = e.map_chunks(&ids, |_, graphs| {
            let mut t = Tally::default();
            for g in &graphs {
                t.graphs += 1;
                check(g, &mut t);
            }
            t
        });
        let mut total = Tally::default();
        for (_, t) in parts {
            total.graphs += t.graphs;
            total.instances += t.instances;
            total.counters[0] += t.counters[0];
            total.counters[1] += t.counters[1];
            total.counterexamples.extend(t.counterexamples);
        }
        out.push((n, total));
    }
    Ok(out)
}

fn check_orders(lo: usize, max_n: usize) -> Result<std::ops::RangeInclusive<usize>> {
    if max_n > 11 {
        return Err(Error::CapExceeded("min-degree-6 classes are capped at 11 vertices".into()));
    }
    Ok(lo..=max_n)
}

fn finish(
    mut report: LemmaReport,
    tallies: Vec<(usize, Tally)>,
    counter_names: [&str; 2],
) -> LemmaRun {
    let mut per_order = serde_json::Map::new();
    for (n, t) in tallies {
        report.instances_checked += t.instances;
        let mut entry = json!({ "graphs": t.graphs, "instances": t.instances });
        for (name, c) in counter_names.iter().zip(t.counters) {
            if !name.is_empty() {
                entry[*name] = Value::from(c);
            }
        }
        per_order.insert(n.to_string(), entry);
        report.counterexamples.extend(t.counterexamples);
    }
    report.detail("per_order", Value::Object(per_order));
    LemmaRun::new(report, Vec::new())
}

/// Not 4-connected implies a K5 subgraph; not 5-connected implies K5^-.
pub fn lemma5(max_n: usize) -> Result<LemmaRun> {
    let orders = check_orders(7, max_n)?;
    timed(|| {
        let mut report = LemmaReport::new("5");
        report.param("orders", json!([orders.start(), orders.end()]));
        report.param("min_degree", MIN_DEGREE);
        let tallies = over_class(orders, |g, t| {
            t.instances += 1;
            if !is_k_connected(g, 4) {
                t.counters[0] += 1;
                if contains_subgraph(g, SubgraphPattern::Clique(5)).is_none() {
                    t.counterexamples.push(Counterexample {
                        graph6: graph6::encode(g),
                        context: "not 4-connected and no K5 subgraph".into(),
                    });
                }
            }
            if !is_k_connected(g, 5) {
                t.counters[1] += 1;
                if contains_subgraph(g, SubgraphPattern::CliqueMinusEdge(5)).is_none() {
                    t.counterexamples.push(Counterexample {
                        graph6: graph6::encode(g),
                        context: "not 5-connected and no K5^- subgraph".into(),
                    });
                }
            }
        })?;
        Ok(finish(report, tallies, ["not_4_connected", "not_5_connected"]))
    })
}

/// K5 subgraph, or for every 5-set T some v in T leaves a K4 minor rooted at
/// T - v in G - v. Instances are (graph, T) pairs of K5-free graphs.
pub fn lemma6(max_n: usize) -> Result<LemmaRun> {
    let orders = check_orders(7, max_n)?;
    timed(|| {
        let mut report = LemmaReport::new("6");
        report.param("orders", json!([orders.start(), orders.end()]));
        report.param("min_degree", MIN_DEGREE);
        let tallies = over_class(orders, |g, t| {
            if contains_subgraph(g, SubgraphPattern::Clique(5)).is_some() {
                return;
            }
            t.counters[0] += 1;
            let all = g.vertices();
            for_each_k_subset(all.bits(), 5, &mut |tm| {
                t.instances += 1;
                let found = Bits(tm).any(|v| {
                    let roots = VertexSet(tm & !bit(v));
                    rooted_k4_within(g, all - VertexSet::singleton(v), roots)
                        .is_some_and(|m| m.validate(g).is_ok())
                });
                if !found {
                    t.counterexamples.push(Counterexample {
                        graph6: graph6::encode(g),
                        context: format!("T = {:?}", VertexSet(tm).to_vec()),
                    });
                }
            });
        })?;
        Ok(finish(report, tallies, ["k5_free_graphs", ""]))
    })
}

/// For distinct v1..v6 with v1v2 missing, some component C of G - {v1..v6}
/// sees both v1, v2 or all of v3..v6. The condition is symmetric in v1, v2
/// and in v3..v6, so instances are (graph, non-edge, 4-set) triples; each
/// covers 48 ordered tuples.
pub fn lemma7(max_n: usize) -> Result<LemmaRun> {
    let orders = check_orders(8, max_n)?;
    timed(|| {
        let mut report = LemmaReport::new("7");
        report.param("orders", json!([orders.start(), orders.end()]));
        report.param("min_degree", MIN_DEGREE);
        let tallies = over_class(orders, |g, t| {
            let all = g.vertices().bits();
            for (a, b) in g.non_edges() {
                let pair = bit(a) | bit(b);
                for_each_k_subset(all & !pair, 4, &mut |four| {
                    t.instances += 1;
                    let rest = VertexSet(all & !pair & !four);
                    let ok = g.components(rest).into_iter().any(|c| {
                        let nc = (g.set_neighborhood(c) - c).bits();
                        nc & pair == pair || nc & four == four
                    });
                    if !ok {
                        t.counterexamples.push(Counterexample {
                            graph6: graph6::encode(g),
                            context: format!("v1v2 = {a}{b}, v3..v6 = {:?}", VertexSet(four).to_vec()),
                        });
                    }
                });
            }
        })?;
        let mut run = finish(report, tallies, ["", ""]);
        let covered = run.report.instances_checked * 48;
        run.report.detail("ordered_tuples_covered", covered);
        Ok(run)
    })
}

pub(crate) fn for_each_k_subset(mask: u64, k: usize, f: &mut impl FnMut(u64)) {
    fn rec(rest: u64, need: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if need == 0 {
            f(acc);
            return;
        }
        if (rest.count_ones() as usize) < need {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        let rest = rest & !bit(v);
        rec(rest, need - 1, acc | bit(v), f);
        rec(rest, need, acc, f);
    }
    rec(mask, k, 0, f);
}
