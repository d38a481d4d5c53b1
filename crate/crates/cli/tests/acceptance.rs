//! One PASS/FAIL line per acceptance criterion, each checked at its time
//! limit. Exits non-zero when any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use minorlab_core::named::{cycle, PETERSEN_EDGES};
use minorlab_core::{
    canonical_form, enumerate_all, enumerate_min_degree, graph6, has_family_minor, has_minor, EnumFilter, Family,
    Graph, MinDegreeEnumeration, NamedGraph, VertexSet,
};
use rayon::prelude::*;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

struct Run {
    code: i32,
    report: Value,
    stdout: String,
}

fn minorlab(args: &[&str], jobs: Option<usize>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_minorlab"));
    cmd.args(args);
    match jobs {
        Some(j) => cmd.env("MINORLAB_JOBS", j.to_string()),
        None => cmd.env_remove("MINORLAB_JOBS"),
    };
    let out = cmd.output().expect("minorlab runs");
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    let report = stdout
        .lines()
        .last()
        .and_then(|l| serde_json::from_str(l).ok())
        .unwrap_or(Value::Null);
    Run {
        code: out.status.code().unwrap_or(-1),
        report,
        stdout,
    }
}

fn verified(run: &Run, what: &str) -> Result<(), String> {
    if run.code == 0 && run.report["verdict"] == "verified" {
        return Ok(());
    }
    let cex = &run.report["counterexamples"];
    let n = cex.as_array().map_or(0, |a| a.len());
    Err(format!("{what}: exit {} with {n} counterexamples, first {}", run.code, cex.get(0).unwrap_or(&Value::Null)))
}

fn exceptional_names(run: &Run) -> BTreeSet<String> {
    run.report["details"]["exceptional"]
        .as_array()
        .map(|a| a.iter().map(|e| e["name"].as_str().unwrap_or("?").to_string()).collect())
        .unwrap_or_default()
}

fn instances(run: &Run) -> u64 {
    run.report["instances_checked"].as_u64().unwrap_or(0)
}

fn names(list: &[&str]) -> BTreeSet<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn lemma8_nine() -> Outcome {
    let run = minorlab(&["lemma8", "--n", "9"], None);
    verified(&run, "lemma8 n=9")?;
    let found = exceptional_names(&run);
    let want = names(&["C5bar+C4bar", "C9bar", "K333", "C6bar+K3bar"]);
    if found != want {
        return Err(format!("exceptional set {found:?}"));
    }
    Ok(format!("{} graphs, exceptions {found:?}", instances(&run)))
}

fn lemma8_ten_eleven() -> Outcome {
    let run = minorlab(&["lemma8", "--n", "10"], None);
    verified(&run, "lemma8 n=10")?;
    if exceptional_names(&run) != names(&["petersen-bar"]) {
        return Err(format!("n=10 exceptional set {:?}", exceptional_names(&run)));
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().to_str().unwrap();
    let cut = minorlab(&["lemma8", "--n", "11", "--long-run", "--out", out, "--stop-after", "60"], None);
    if cut.code != 2 {
        return Err(format!("interrupted n=11 run exited {}", cut.code));
    }
    let resumed = minorlab(&["lemma8", "--n", "11", "--long-run", "--out", out, "--resume"], None);
    verified(&resumed, "lemma8 n=11 resumed")?;
    if !exceptional_names(&resumed).is_empty() {
        return Err(format!("n=11 exceptional set {:?}", exceptional_names(&resumed)));
    }
    Ok(format!(
        "n=10: {} graphs, 1 exception; n=11: {} graphs, 0 exceptions after resume",
        instances(&run),
        instances(&resumed)
    ))
}

fn edge_maximality() -> Outcome {
    let mut checked = 0;
    for name in [NamedGraph::K333, NamedGraph::C6barJoinK3bar, NamedGraph::PetersenComplement] {
        let g = name.build().map_err(|e| e.to_string())?;
        if has_family_minor(&g, Family::KtEqPlusK1(7)).is_some() {
            return Err(format!("{name} itself has the minor"));
        }
        for (u, v) in g.non_edges() {
            let h = g.add_edge(u, v).map_err(|e| e.to_string())?;
            let w = has_family_minor(&h, Family::KtEqPlusK1(7)).ok_or(format!("{name} + {u}{v}: no minor"))?;
            w.validate(&h, Family::KtEqPlusK1(7)).map_err(|e| format!("{name} + {u}{v}: {e}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} missing edges, each forcing K7^= u K1"))
}

fn edge_law() -> Outcome {
    let run = minorlab(&["verify", "--lemma", "4", "--cap", "8"], None);
    verified(&run, "lemma 4")?;
    let max = run.report["details"]["max_random_order"].as_u64().unwrap_or(0);
    if run.report["parameters"]["samples"] != 500 || max > 64 {
        return Err(format!("unexpected parameters {}", run.report["parameters"]));
    }
    Ok(format!("{} cockades, random orders up to {max}", instances(&run)))
}

fn verify_all(ids: &[&str]) -> Outcome {
    let mut parts = Vec::new();
    for id in ids {
        let run = minorlab(&["verify", "--lemma", id], None);
        verified(&run, &format!("lemma {id}"))?;
        parts.push(format!("{id}: {}", instances(&run)));
    }
    Ok(parts.join(", "))
}

fn choose(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn triples<T: Copy>(xs: &[T]) -> Vec<[T; 3]> {
    let mut out = Vec::new();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            for k in j + 1..xs.len() {
                out.push([xs[i], xs[j], xs[k]]);
            }
        }
    }
    out
}

fn span(t: &[(usize, usize)]) -> BTreeSet<usize> {
    t.iter().flat_map(|&(a, b)| [a, b]).collect()
}

/// Domain sizes counted without the verifiers' predicates.
fn independent_domains() -> [u64; 3] {
    let mut nine = 0;
    for name in [NamedGraph::K333, NamedGraph::C6barJoinK3bar] {
        let gaps: Vec<_> = name.build().unwrap().non_edges().collect();
        nine += triples(&gaps).iter().filter(|t| span(&t[..]).len() < 6).count() as u64;
    }
    let p = NamedGraph::Petersen.build().unwrap();
    let pentagons: Vec<VertexSet> = (0u64..1 << 10)
        .map(VertexSet)
        .filter(|s| s.len() == 5 && p.edges_within(*s) == 5)
        .collect();
    let ten = triples(&PETERSEN_EDGES)
        .iter()
        .filter(|t| {
            let s = span(&t[..]);
            let star = s.len() == 4 && s.iter().any(|&v| t.iter().all(|&(a, b)| a == v || b == v));
            let vs = VertexSet::from_vertices(s.iter().copied());
            let together = pentagons.iter().any(|c| vs.is_subset(*c));
            let path = s.len() == 4 && !star && p.is_connected_set(vs);
            !star && (!together || path)
        })
        .count() as u64
        + choose(15, 4);
    let sizes: Vec<u64> = (7..=10).map(|k| choose(10, k)).collect();
    let eleven = (0..4).map(|i| sizes[i] * sizes[..=i].iter().sum::<u64>()).sum();
    [nine, ten, eleven]
}

fn petersen_family() -> Outcome {
    let expected = independent_domains();
    let mut parts = Vec::new();
    let mut failures = Vec::new();
    for (id, want) in ["9", "10", "11"].iter().zip(expected) {
        let run = minorlab(&["verify", "--lemma", id], None);
        if instances(&run) != want {
            failures.push(format!("lemma {id}: {} instances, expected {want}", instances(&run)));
        }
        if let Err(e) = verified(&run, &format!("lemma {id}")) {
            let d = &run.report["details"];
            failures.push(format!(
                "{e} ({} qualifying triples and {} four-edge sets have no K8^= minor)",
                d["failing_triples"], d["failing_four_edge_sets"]
            ));
        }
        parts.push(format!("{id}: {want}"));
    }
    if failures.is_empty() {
        Ok(parts.join(", "))
    } else {
        Err(failures.join("; "))
    }
}

fn minor_oracle() -> Outcome {
    let graphs: Vec<Graph> = (1..=7).flat_map(|n| enumerate_all(n).unwrap()).collect();
    let pats = [
        Graph::complete(4).unwrap(),
        Graph::complete(5).unwrap(),
        NamedGraph::CompleteMinusEdge(5).build().unwrap(),
        Graph::complete(4).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap(),
        cycle(4).unwrap(),
    ];
    let bad: Vec<String> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            pats.iter().filter_map(move |h| {
                let fast = has_minor(g, h);
                let witness_ok = fast.as_ref().is_none_or(|m| m.validate(g, h).is_ok());
                (!witness_ok || fast.is_some() != common::naive_minor(g, h))
                    .then(|| format!("{} / {}", graph6::encode(g), graph6::encode(h)))
            })
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} graphs x {} patterns agree", graphs.len(), pats.len()))
    } else {
        Err(format!("{} disagreements, first {}", bad.len(), bad[0]))
    }
}

fn enumeration() -> Outcome {
    for n in 1..=7 {
        let all = enumerate_all(n).unwrap();
        for d in 0..n {
            let want: BTreeSet<_> = all.iter().filter(|g| g.min_degree() >= d).map(canonical_form).collect();
            let got: Vec<_> = enumerate_min_degree(EnumFilter::new(n, d)).unwrap().iter().map(canonical_form).collect();
            if got.len() != want.len() || got.into_iter().collect::<BTreeSet<_>>() != want {
                return Err(format!("mismatch at n={n}, d={d}"));
            }
        }
    }
    let count = |n| MinDegreeEnumeration::new(EnumFilter::new(n, 6)).unwrap().collect().len() as u64;
    // complements of max degree 2: multisets of paths and cycles on 9 vertices
    let mut ways = [0u64; 10];
    ways[0] = 1;
    for size in (1..=9).chain(3..=9) {
        for total in size..=9 {
            ways[total] += ways[total - size];
        }
    }
    let (eight, nine) = (count(8), count(9));
    if eight != 5 || nine != ways[9] {
        return Err(format!("(8,6) -> {eight}, (9,6) -> {nine}, oracle {}", ways[9]));
    }
    Ok(format!("n<=7 all degrees agree; (8,6) = 5; (9,6) = {nine}"))
}

fn theorem_checks() -> Outcome {
    let mut parts = Vec::new();
    for t in ["5", "6"] {
        let run = minorlab(&["theorem", "--t", t, "--nmax", "8"], None);
        verified(&run, &format!("t={t}"))?;
        parts.push(format!("t={t}: {} graphs", instances(&run)));
    }
    Ok(parts.join(", "))
}

fn without_timing(stdout: &str) -> Vec<String> {
    stdout
        .lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).unwrap_or(Value::Null);
            if let Value::Object(m) = &mut v {
                m.remove("timing");
            }
            v.to_string()
        })
        .collect()
}

fn files_equal(a: &Path, b: &Path) -> bool {
    let list = |p: &Path| {
        let mut v: Vec<_> = std::fs::read_dir(p).unwrap().map(|e| e.unwrap().file_name()).collect();
        v.sort();
        v
    };
    list(a) == list(b)
        && list(a).iter().all(|f| std::fs::read(a.join(f)).ok() == std::fs::read(b.join(f)).ok())
}

fn determinism() -> Outcome {
    let commands: [&[&str]; 4] = [
        &["verify", "--lemma", "9"],
        &["lemma8", "--n", "10"],
        &["theorem", "--t", "6", "--nmax", "7"],
        &["spot2", "--samples", "24", "--seed", "7"],
    ];
    for args in commands {
        let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
        let outs: Vec<Run> = [1, 3]
            .iter()
            .zip(&dirs)
            .map(|(&jobs, d)| {
                let mut a = args.to_vec();
                a.extend(["--out", d.path().to_str().unwrap()]);
                minorlab(&a, Some(jobs))
            })
            .collect();
        if without_timing(&outs[0].stdout) != without_timing(&outs[1].stdout) {
            return Err(format!("{args:?}: reports differ between 1 and 3 workers"));
        }
        if !files_equal(&dirs[0].path().join("witnesses"), &dirs[1].path().join("witnesses")) {
            return Err(format!("{args:?}: witness files differ"));
        }
    }
    let k2 = graph6::encode(&Graph::complete(2).unwrap());
    let k3 = graph6::encode(&Graph::complete(3).unwrap());
    if k2 != "A_" || k3 != "Bw" || graph6::decode("Bw").ok() != Graph::complete(3).ok() {
        return Err(format!("graph6 K2 -> {k2}, K3 -> {k3}"));
    }
    Ok("4 commands identical across 1 and 3 workers; K2 <-> A_, K3 <-> Bw".into())
}

fn main() {
    let minute = Duration::from_secs(60);
    let criteria: Vec<Criterion> = vec![
        ("1 exceptional graphs, n=9", 5 * minute, lemma8_nine),
        ("2 exceptional graphs, n=10 and resumable n=11", 60 * minute, lemma8_ten_eleven),
        ("3 edge-maximality of K333, C6bar+K3bar, petersen-bar", minute, edge_maximality),
        ("4 cockade edge law, 500 random cockades", Duration::from_secs(5), edge_law),
        ("5 cockade non-edges, attachments and splits", 30 * minute, || verify_all(&["1", "2", "3"])),
        ("6 minimum-degree-6 classes", 60 * minute, || verify_all(&["5", "6", "7"])),
        ("7 K333 and petersen-bar augmentations", 10 * minute, petersen_family),
        ("8 minor tester vs partition oracle", 10 * minute, minor_oracle),
        ("9 enumeration cross-checks", 10 * minute, enumeration),
        ("10 K5^= and K6^= dichotomy up to 8 vertices", 30 * minute, theorem_checks),
        ("11 determinism and graph6", 10 * minute, determinism),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > limit => Err(format!("{msg}; took {took:.1?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS  criterion {name} ({took:.1?}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name} ({took:.1?}): {msg}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
