//! The five graphs without a K7^= ∪ K1 minor, and what adding missing edges
//! to them forces.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::report::{Counterexample, LemmaReport, LemmaRun, Witness};
use super::{check_all, expect_family, timed, Check};
use crate::canon::canonical_form;
use crate::enumerate::{EnumFilter, MinDegreeEnumeration};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexSet};
use crate::graph6;
use crate::minors::{has_family_minor, has_minor, Family};
use crate::named::{NamedGraph, PETERSEN_EDGES};

type Edge = (usize, usize);

/// The exceptional graphs on `n` vertices.
pub fn exceptional_names(n: usize) -> Vec<NamedGraph> {
    NamedGraph::exceptional()
        .into_iter()
        .filter(|g| g.build().map(|g| g.n() == n).unwrap_or(false))
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct Lemma8Options {
    /// JSON Lines file of completed chunks.
    pub checkpoint: Option<PathBuf>,
    /// Skip chunks already recorded in the checkpoint.
    pub resume: bool,
    /// Required for n = 11.
    pub long_run: bool,
    /// Stop with `Error::Interrupted` after this many new chunks.
    pub stop_after: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct ChunkRecord {
    n: usize,
    chunk: usize,
    graphs: u64,
    exceptions: Vec<String>,
}

fn load_checkpoint(path: &PathBuf, n: usize) -> Result<BTreeMap<usize, ChunkRecord>> {
    let mut done = BTreeMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => return Err(Error::Io(e.to_string())),
    };
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| Error::Io(e.to_string()))?;
        // a torn final line from an interrupted write is ignored
        if let Ok(rec) = serde_json::from_str::<ChunkRecord>(&line) {
            if rec.n == n {
                done.insert(rec.chunk, rec);
            }
        }
    }
    Ok(done)
}

/// Graphs on `n` in {9, 10, 11} vertices with minimum degree 6 and no
/// K7^= ∪ K1 minor are exactly the listed exceptional graphs.
pub fn lemma8(n: usize, options: &Lemma8Options) -> Result<LemmaRun> {
    if !(9..=11).contains(&n) {
        return Err(Error::InvalidParameter(format!("lemma 8 covers n in 9..=11, got {n}")));
    }
    if n == 11 && !options.long_run {
        return Err(Error::InvalidParameter("n = 11 needs the long-run flag".into()));
    }
    timed(|| {
        let e = MinDegreeEnumeration::new(EnumFilter::new(n, 6))?;
        let mut done = match (&options.checkpoint, options.resume) {
            (Some(path), true) => load_checkpoint(path, n)?,
            _ => BTreeMap::new(),
        };
        let writer = match &options.checkpoint {
            Some(path) => {
                let mut o = OpenOptions::new();
                o.create(true);
                if options.resume {
                    o.append(true);
                } else {
                    o.write(true).truncate(true);
                }
                Some(Mutex::new(o.open(path).map_err(|err| Error::Io(err.to_string()))?))
            }
            None => None,
        };
        let mut todo: Vec<usize> = (0..e.chunk_count()).filter(|c| !done.contains_key(c)).collect();
        let interrupted = matches!(options.stop_after, Some(k) if k < todo.len());
        if let Some(k) = options.stop_after {
            todo.truncate(k);
        }
        let fresh = e.map_chunks(&todo, |id, graphs| {
            let mut exceptions = Vec::new();
            for g in &graphs {
                if has_family_minor(g, Family::KtEqPlusK1(7)).is_none() {
                    exceptions.push(canonical_form(g).as_str().to_string());
                }
            }
            let rec = ChunkRecord {
                n,
                chunk: id,
                graphs: graphs.len() as u64,
                exceptions,
            };
            if let Some(w) = &writer {
                let mut f = w.lock().expect("checkpoint lock");
                // a failed append only costs recomputation on resume
                let _ = writeln!(f, "{}", serde_json::to_string(&rec).expect("record serializes"));
                let _ = f.flush();
            }
            rec
        });
        for (id, rec) in fresh {
            done.insert(id, rec);
        }
        if interrupted {
            return Err(Error::Interrupted(format!(
                "{} of {} chunks complete",
                done.len(),
                e.chunk_count()
            )));
        }

        let mut report = LemmaReport::new("8");
        report.param("n", n);
        report.param("min_degree", 6);
        report.detail("chunks", e.chunk_count());
        let mut found: BTreeSet<String> = BTreeSet::new();
        for rec in done.values() {
            report.instances_checked += rec.graphs;
            found.extend(rec.exceptions.iter().cloned());
        }
        let expected: BTreeMap<String, String> = exceptional_names(n)
            .into_iter()
            .map(|ng| (canonical_form(&ng.build().expect("named")).as_str().to_string(), ng.to_string()))
            .collect();
        let listed: Vec<_> = found
            .iter()
            .map(|c| json!({ "graph6": c, "name": expected.get(c) }))
            .collect();
        report.detail("exceptional", listed);
        for c in &found {
            if !expected.contains_key(c) {
                let g = graph6::decode(c)?;
                report.counterexample(&g, "unexpected graph without a K7^= u K1 minor");
            }
        }
        for (c, name) in &expected {
            if !found.contains(c) {
                let g = graph6::decode(c)?;
                report.counterexample(&g, format!("{name} missing from the exceptional set"));
            }
        }
        let witnesses = lemma8_claims(&mut report)?;
        Ok(LemmaRun::new(report, witnesses))
    })
}

/// K7^- minors of C5bar+C4bar and C9bar; every missing edge of K333,
/// C6bar+K3bar and the Petersen complement creates a K7^= ∪ K1 minor; none
/// of the five has such a minor itself.
pub fn lemma8_claims(report: &mut LemmaReport) -> Result<Vec<Witness>> {
    let mut witnesses = Vec::new();
    let k7m = NamedGraph::CompleteMinusEdge(7).build()?;
    for ng in [NamedGraph::C5barJoinC4bar, NamedGraph::CycleComplement(9)] {
        let g = ng.build()?;
        match has_minor(&g, &k7m) {
            Some(m) if m.validate(&g, &k7m).is_ok() => {
                witnesses.push(Witness::new(format!("{ng} >= K7-"), &g, &k7m, &m))
            }
            _ => report.counterexample(&g, format!("{ng} has no K7- minor")),
        }
    }
    let mut edge_counts = BTreeMap::new();
    let mut instances = Vec::new();
    for ng in [NamedGraph::K333, NamedGraph::C6barJoinK3bar, NamedGraph::PetersenComplement] {
        let g = ng.build()?;
        let missing: Vec<Edge> = g.non_edges().collect();
        edge_counts.insert(ng.to_string(), missing.len());
        for (u, v) in missing {
            instances.push((g.add_edge(u, v)?, format!("{ng} + {u}{v}")));
        }
    }
    let mut sub = LemmaReport::new("8-claims");
    witnesses.extend(check_all(&mut sub, instances, Family::KtEqPlusK1(7)));
    report.counterexamples.extend(sub.counterexamples);
    report.detail("edge_maximality_missing_edges", json!(edge_counts));
    for ng in NamedGraph::exceptional() {
        let g = ng.build()?;
        if has_family_minor(&g, Family::KtEqPlusK1(7)).is_some() {
            report.counterexample(&g, format!("{ng} has a K7^= u K1 minor"));
        }
    }
    Ok(witnesses)
}

fn triples<T: Copy>(items: &[T]) -> Vec<[T; 3]> {
    let mut out = Vec::new();
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            for k in j + 1..items.len() {
                out.push([items[i], items[j], items[k]]);
            }
        }
    }
    out
}

fn shares_end(a: Edge, b: Edge) -> bool {
    a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
}

/// K333 and C6bar+K3bar plus three missing edges, not pairwise disjoint,
/// have a K8^= minor.
pub fn lemma9() -> Result<LemmaRun> {
    timed(|| {
        let mut report = LemmaReport::new("9");
        let mut instances = Vec::new();
        let mut per_graph = BTreeMap::new();
        for ng in [NamedGraph::K333, NamedGraph::C6barJoinK3bar] {
            let g = ng.build()?;
            let missing: Vec<Edge> = g.non_edges().collect();
            let (mut inside, mut outside) = (0, 0);
            for t in triples(&missing) {
                let qualifies =
                    shares_end(t[0], t[1]) || shares_end(t[0], t[2]) || shares_end(t[1], t[2]);
                if !qualifies {
                    outside += 1;
                    continue;
                }
                inside += 1;
                instances.push((g.with_edges(&t)?, format!("{ng} + {t:?}")));
            }
            per_graph.insert(ng.to_string(), json!({ "qualifying": inside, "out_of_domain": outside }));
        }
        report.detail("per_graph", json!(per_graph));
        let witnesses = check_all(&mut report, instances, Family::KtEq(8));
        Ok(LemmaRun::new(report, witnesses))
    })
}

/// All 5-cycles of the Petersen graph as sorted edge lists.
pub fn petersen_five_cycles() -> Vec<Vec<Edge>> {
    let p = NamedGraph::Petersen.build().expect("petersen");
    let mut seen = BTreeSet::new();
    for a in 0..10 {
        for b in p.neighbors(a) {
            for c in p.neighbors(b) {
                for d in p.neighbors(c) {
                    for e in p.neighbors(d) {
                        let cyc = [a, b, c, d, e];
                        let distinct = VertexSet::from_vertices(cyc).len() == 5;
                        if distinct && p.has_edge(e, a) {
                            let mut edges: Vec<Edge> = (0..5)
                                .map(|i| {
                                    let (x, y) = (cyc[i], cyc[(i + 1) % 5]);
                                    (x.min(y), x.max(y))
                                })
                                .collect();
                            edges.sort_unstable();
                            seen.insert(edges);
                        }
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// No vertex meets all three edges, and either the edges are not all on one
/// 5-cycle of P or they form a path on four vertices.
pub fn qualifies_lemma10(t: &[Edge; 3], cycles: &[Vec<Edge>]) -> bool {
    let norm = |e: Edge| (e.0.min(e.1), e.0.max(e.1));
    let t = t.map(norm);
    let verts: Vec<usize> = t.iter().flat_map(|e| [e.0, e.1]).collect();
    let claw = verts.iter().any(|v| t.iter().all(|e| e.0 == *v || e.1 == *v));
    if claw {
        return false;
    }
    let on_one_cycle = cycles.iter().any(|c| t.iter().all(|e| c.contains(e)));
    let distinct = VertexSet::from_vertices(verts.iter().copied());
    let max_deg = distinct
        .iter()
        .map(|v| verts.iter().filter(|&&w| w == v).count())
        .max()
        .unwrap_or(0);
    let connected = {
        let g = Graph::from_edges(10, &t).expect("petersen vertices");
        g.is_connected_set(distinct)
    };
    let p4 = distinct.len() == 4 && max_deg == 2 && connected;
    !on_one_cycle || p4
}

/// Petersen complement plus qualifying triples, or plus any four missing
/// edges, has a K8^= minor.
pub fn lemma10() -> Result<LemmaRun> {
    timed(|| {
        let mut report = LemmaReport::new("10");
        let pbar = NamedGraph::PetersenComplement.build()?;
        let missing: Vec<Edge> = PETERSEN_EDGES.to_vec();
        debug_assert_eq!(missing.len(), pbar.non_edges().count());
        let cycles = petersen_five_cycles();
        let mut instances = Vec::new();
        let mut outside = 0;
        for t in triples(&missing) {
            if qualifies_lemma10(&t, &cycles) {
                instances.push((pbar.with_edges(&t)?, format!("triple {t:?}")));
            } else {
                outside += 1;
            }
        }
        let qualifying = instances.len();
        for i in 0..missing.len() {
            for j in i + 1..missing.len() {
                for k in j + 1..missing.len() {
                    for l in k + 1..missing.len() {
                        let q = [missing[i], missing[j], missing[k], missing[l]];
                        instances.push((pbar.with_edges(&q)?, format!("four {q:?}")));
                    }
                }
            }
        }
        report.detail("five_cycles", cycles.len());
        report.detail("qualifying_triples", qualifying);
        report.detail("triples_out_of_domain", outside);
        report.detail("four_edge_sets", instances.len() - qualifying);
        let mut witnesses = check_all(&mut report, instances, Family::KtEq(8));
        let failing = |kind: &str| report.counterexamples.iter().filter(|c| c.context.starts_with(kind)).count();
        let (bad3, bad4) = (failing("triple"), failing("four"));
        report.detail("failing_triples", bad3);
        report.detail("failing_four_edge_sets", bad4);
        match labelled_path_model(&pbar) {
            Ok(w) => witnesses.push(w),
            Err(e) => report.counterexample(&pbar, format!("path triple by contraction: {e}")),
        }
        Ok(LemmaRun::new(report, witnesses))
    })
}

/// Adds v0v1, v1v2, v2v3 and contracts v0v6 and v3v7: the eight branch
/// sets form a K8^= model.
fn labelled_path_model(pbar: &Graph) -> std::result::Result<Witness, String> {
    let g = pbar
        .with_edges(&[(0, 1), (1, 2), (2, 3)])
        .map_err(|e| e.to_string())?;
    if !g.has_edge(0, 6) || !g.has_edge(3, 7) {
        return Err("v0v6 and v3v7 must be edges".into());
    }
    let mut sets: Vec<VertexSet> = vec![
        VertexSet::from_vertices([0, 6]),
        VertexSet::from_vertices([3, 7]),
    ];
    sets.extend([1, 2, 4, 5, 8, 9].map(VertexSet::singleton));
    let gaps: Vec<(usize, usize)> = (0..8)
        .flat_map(|i| (i + 1..8).map(move |j| (i, j)))
        .filter(|&(i, j)| g.edges_between(sets[i], sets[j]) == 0)
        .collect();
    if gaps.len() != 2 {
        return Err(format!("{} missing pairs after contraction", gaps.len()));
    }
    let (a, b) = (gaps[0], gaps[1]);
    let shared = shares_end(a, b);
    // order the sets so the gaps sit where the pattern expects them
    let front: Vec<usize> = if shared {
        let x = if a.0 == b.0 || a.0 == b.1 { a.0 } else { a.1 };
        let y = if a.0 == x { a.1 } else { a.0 };
        let z = if b.0 == x { b.1 } else { b.0 };
        vec![x, y, z]
    } else {
        vec![a.0, a.1, b.0, b.1]
    };
    let mut order = front.clone();
    order.extend((0..8).filter(|i| !front.contains(i)));
    let model = crate::minors::MinorModel {
        branch_sets: order.iter().map(|&i| sets[i]).collect(),
    };
    let pattern = Family::KtEq(8).pattern(shared);
    model.validate(&g, &pattern)?;
    Ok(Witness::new("P-bar + v0v1 v1v2 v2v3 / v0v6 / v3v7", &g, &pattern, &model))
}

/// For |A1| >= |A2| >= 7 there are v1 in A1, v2 in A2 such that adding the
/// missing edges at v1 inside A1 and at v2 inside A2 gives a K8^= minor.
pub fn lemma11() -> Result<LemmaRun> {
    timed(|| {
        let mut report = LemmaReport::new("11");
        let pbar = NamedGraph::PetersenComplement.build()?;
        let missing: Vec<Edge> = PETERSEN_EDGES.to_vec();
        let subsets: Vec<u64> = (0u64..1 << 10).filter(|m| m.count_ones() >= 7).collect();
        // missing edges at v inside a, as a bit mask over PETERSEN_EDGES
        let star = |v: usize, a: u64| -> u32 {
            missing
                .iter()
                .enumerate()
                .filter(|(_, &(x, y))| (x == v && a & bit(y) != 0) || (y == v && a & bit(x) != 0))
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        };
        let mut keys: BTreeSet<u32> = BTreeSet::new();
        for &a in &subsets {
            for v in VertexSet(a) {
                keys.insert(star(v, a));
            }
        }
        let stars: Vec<u32> = keys.into_iter().collect();
        let mut unions: BTreeSet<u32> = BTreeSet::new();
        for &s in &stars {
            for &t in &stars {
                unions.insert(s | t);
            }
        }
        let unions: Vec<u32> = unions.into_iter().collect();
        let outcomes: Vec<(u32, Check)> = unions
            .par_iter()
            .map(|&mask| {
                let edges: Vec<Edge> = (0..missing.len())
                    .filter(|i| mask & 1 << i != 0)
                    .map(|i| missing[i])
                    .collect();
                let g = pbar.with_edges(&edges).expect("missing edges");
                (mask, expect_family(&g, Family::KtEq(8), format!("P-bar + {edges:?}")))
            })
            .collect();
        let mut positive: BTreeMap<u32, Witness> = BTreeMap::new();
        for (mask, c) in outcomes {
            if let Check::Found(w) = c {
                positive.insert(mask, w);
            }
        }
        let mut used: HashSet<u32> = HashSet::new();
        for &a1 in &subsets {
            for &a2 in &subsets {
                if a1.count_ones() < a2.count_ones() {
                    continue;
                }
                report.instances_checked += 1;
                let hit = VertexSet(a1).iter().find_map(|v1| {
                    VertexSet(a2).iter().find_map(|v2| {
                        let m = star(v1, a1) | star(v2, a2);
                        positive.contains_key(&m).then_some(m)
                    })
                });
                match hit {
                    Some(m) => {
                        used.insert(m);
                    }
                    None => report.counterexamples.push(Counterexample {
                        graph6: graph6::encode(&pbar),
                        context: format!(
                            "A1 = {:?}, A2 = {:?}",
                            VertexSet(a1).to_vec(),
                            VertexSet(a2).to_vec()
                        ),
                    }),
                }
            }
        }
        report.detail("subsets", subsets.len());
        report.detail("edge_sets_tested", unions.len());
        report.detail("edge_sets_with_minor", positive.len());
        let witnesses: Vec<Witness> = positive
            .into_iter()
            .filter(|(m, _)| used.contains(m))
            .map(|(_, w)| w)
            .collect();
        Ok(LemmaRun::new(report, witnesses))
    })
}
