use std::collections::BTreeSet;

use minorlab_core::lemmas::{lemma8, Lemma8Options};
use minorlab_core::named::PETERSEN_EDGES;
use minorlab_core::{check_theorem, verify_lemma, Caps, Error, LemmaRun, NamedGraph, Witness};

type Edge = (usize, usize);

fn choose(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn revalidate_all(run: &LemmaRun) {
    assert_eq!(run.report.witnesses_stored as usize, run.witnesses.len());
    for w in &run.witnesses {
        let text = serde_json::to_string(w).unwrap();
        let back: Witness = serde_json::from_str(&text).unwrap();
        back.revalidate().unwrap_or_else(|e| panic!("{}: {e}", w.context));
    }
}

fn non_edges(g: &minorlab_core::Graph) -> Vec<Edge> {
    g.non_edges().collect()
}

#[test]
fn cockade_law_domains() {
    let caps = Caps::default();
    // non-edges: K8 0, K2,2,2,2,2 5, two K8 on 11 vertices 3 * 3,
    // K8 + K2,2,2,2,2 on 13 vertices 5 + 3 * 5
    let one = verify_lemma(1, &caps).unwrap();
    assert!(one.report.is_verified());
    assert_eq!(one.report.instances_checked, 5 + 9 + 20);
    revalidate_all(&one);

    let at_least_six = |n: u64| (6..=n).map(|k| choose(n, k)).sum::<u64>();
    let two = verify_lemma(2, &caps).unwrap();
    assert!(two.report.is_verified());
    assert_eq!(two.report.instances_checked, at_least_six(8) + at_least_six(10) + at_least_six(11));
    revalidate_all(&two);

    // splits of a degree-d vertex: (a, b, c) neighbours to x, y, both with
    // c >= 5, a + c >= 6, b + c >= 6
    let fact = |k: u64| (1..=k).product::<u64>();
    let splits = |d: u64| -> u64 {
        let mut s = 0;
        for c in 5..=d {
            for a in 0..=d - c {
                let b = d - c - a;
                if a + c >= 6 && b + c >= 6 {
                    s += fact(d) / (fact(a) * fact(b) * fact(c));
                }
            }
        }
        s
    };
    let three = verify_lemma(3, &caps).unwrap();
    assert!(three.report.is_verified());
    let expected = 8 * splits(7) + 10 * splits(8) + (5 * splits(10) + 6 * splits(7));
    assert_eq!(three.report.instances_checked, expected);
    revalidate_all(&three);

    let four = verify_lemma(4, &caps).unwrap();
    assert!(four.report.is_verified());
    let enumerated = four.report.details["enumerated"].as_u64().unwrap();
    assert_eq!(four.report.instances_checked, enumerated + caps.lemma4_samples as u64);
}

#[test]
fn k333_family_triples() {
    // qualifying triples are those whose edges span fewer than six vertices
    let mut expected = 0;
    for name in [NamedGraph::K333, NamedGraph::C6barJoinK3bar] {
        let gaps = non_edges(&name.build().unwrap());
        for i in 0..gaps.len() {
            for j in i + 1..gaps.len() {
                for k in j + 1..gaps.len() {
                    let span: BTreeSet<usize> =
                        [gaps[i], gaps[j], gaps[k]].iter().flat_map(|&(u, v)| [u, v]).collect();
                    expected += (span.len() < 6) as u64;
                }
            }
        }
    }
    let run = verify_lemma(9, &Caps::default()).unwrap();
    assert!(run.report.is_verified());
    assert_eq!(run.report.instances_checked, expected);
    assert_eq!(expected, 57 + 55);
    revalidate_all(&run);
}

/// Edge sets of induced 5-cycles of the Petersen graph, by vertex subsets.
fn petersen_pentagons() -> Vec<BTreeSet<Edge>> {
    let p = NamedGraph::Petersen.build().unwrap();
    let mut out = Vec::new();
    for mask in 0u64..1 << 10 {
        if mask.count_ones() != 5 {
            continue;
        }
        let s = minorlab_core::VertexSet(mask);
        if p.edges_within(s) == 5 && s.iter().all(|v| (p.neighbors(v) & s).len() == 2) {
            out.push(p.edges().filter(|&(u, v)| s.contains(u) && s.contains(v)).collect());
        }
    }
    out
}

#[test]
fn petersen_complement_domain() {
    let pentagons = petersen_pentagons();
    assert_eq!(pentagons.len(), 12);
    let p = NamedGraph::Petersen.build().unwrap();
    let mut qualifying = 0u64;
    let e = PETERSEN_EDGES;
    for i in 0..15 {
        for j in i + 1..15 {
            for k in j + 1..15 {
                let t = [e[i], e[j], e[k]];
                let star = (0..10).any(|v| t.iter().all(|&(a, b)| a == v || b == v));
                if star {
                    continue;
                }
                let span: BTreeSet<usize> = t.iter().flat_map(|&(a, b)| [a, b]).collect();
                let together = pentagons.iter().any(|c| t.iter().all(|x| c.contains(x)));
                let path = span.len() == 4 && p.is_connected_set(minorlab_core::VertexSet::from_vertices(span.iter().copied()));
                qualifying += (!together || path) as u64;
            }
        }
    }
    let run = verify_lemma(10, &Caps::default()).unwrap();
    assert_eq!(run.report.instances_checked, qualifying + choose(15, 4));
    assert_eq!(run.report.details["qualifying_triples"], qualifying);
    revalidate_all(&run);
    // the path triple from the contraction argument is certified directly
    assert!(run.witnesses.iter().any(|w| w.context.starts_with("P-bar + v0v1 v1v2 v2v3")));
}

#[test]
fn petersen_complement_subset_pairs() {
    let sizes: Vec<u64> = (7..=10).map(|k| choose(10, k)).collect();
    let mut expected = 0;
    for (i, a1) in sizes.iter().enumerate() {
        for a2 in &sizes[..=i] {
            expected += a1 * a2;
        }
    }
    let run = verify_lemma(11, &Caps::default()).unwrap();
    assert!(run.report.is_verified());
    assert_eq!(run.report.instances_checked, expected);
    assert_eq!(expected, 23751);
    revalidate_all(&run);
}

#[test]
fn exceptional_set_and_claims() {
    let nine = lemma8(9, &Lemma8Options::default()).unwrap();
    assert!(nine.report.is_verified(), "{:?}", nine.report.counterexamples);
    assert_eq!(nine.report.instances_checked, 70);
    assert_eq!(nine.report.details["exceptional"].as_array().unwrap().len(), 4);
    revalidate_all(&nine);
    let ten = lemma8(10, &Lemma8Options::default()).unwrap();
    assert!(ten.report.is_verified());
    assert_eq!(ten.report.details["exceptional"].as_array().unwrap().len(), 1);
    assert!(matches!(lemma8(11, &Lemma8Options::default()), Err(Error::InvalidParameter(_))));
}

#[test]
fn interrupted_run_resumes_to_the_same_report() {
    let dir = std::env::temp_dir().join(format!("minorlab-resume-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n10.jsonl");
    let partial = Lemma8Options {
        checkpoint: Some(path.clone()),
        stop_after: Some(100),
        ..Default::default()
    };
    assert!(matches!(lemma8(10, &partial), Err(Error::Interrupted(_))));
    let recorded = std::fs::read_to_string(&path).unwrap().lines().count();
    assert_eq!(recorded, 100);
    // a torn trailing record is ignored on resume
    std::fs::OpenOptions::new()
        .append(true)
        .open(&path)
        .and_then(|mut f| std::io::Write::write_all(&mut f, b"{\"n\":10,\"chu"))
        .unwrap();
    let resumed = lemma8(
        10,
        &Lemma8Options {
            checkpoint: Some(path.clone()),
            resume: true,
            ..Default::default()
        },
    )
    .unwrap();
    let fresh = lemma8(10, &Lemma8Options::default()).unwrap();
    assert_eq!(resumed.report.deterministic_json(), fresh.report.deterministic_json());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let a = verify_lemma(9, &Caps::default()).unwrap();
            let b = lemma8(10, &Lemma8Options::default()).unwrap();
            let c = check_theorem(6, 7).unwrap();
            [a, b, c].map(|r| (r.report.deterministic_json(), r.witnesses))
        })
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn theorem_check_rejects_out_of_range() {
    assert!(check_theorem(7, 8).is_err());
    assert!(check_theorem(5, 9).is_err());
    let small = check_theorem(5, 5).unwrap();
    assert!(small.report.is_verified());
    revalidate_all(&small);
}
