//! Desk checks of the extremal dichotomy: above the edge threshold a graph
//! has a K_t^= minor or is a cockade of the matching family.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::report::{Counterexample, LemmaReport, LemmaRun, Witness};
use super::{threshold, timed};
use crate::cockades::{random_cockade, recognize_in_family, CockadeFamily};
use crate::enumerate::{enumerate_all, EnumFilter, MinDegreeEnumeration};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::graph6;
use crate::minors::{has_family_minor, Family};

/// Largest order at which spot-checked cockades are also shown minor-free.
pub const MINOR_FREE_CHECK_N: usize = 13;

enum Outcome {
    Minor(Witness),
    Cockade,
    /// A cockade that nevertheless has the minor, or neither side holds.
    Broken(Counterexample),
}

fn classify(g: &Graph, t: usize, family: &CockadeFamily, check_cockade_free: bool, ctx: String) -> Outcome {
    if let Some(cert) = recognize_in_family(g, family) {
        if let Err(e) = cert.validate(g, family) {
            return Outcome::Broken(Counterexample {
                graph6: graph6::encode(g),
                context: format!("{ctx}: invalid cockade certificate ({e})"),
            });
        }
        if check_cockade_free && has_family_minor(g, Family::KtEq(t)).is_some() {
            return Outcome::Broken(Counterexample {
                graph6: graph6::encode(g),
                context: format!("{ctx}: cockade with a K{t}^= minor"),
            });
        }
        return Outcome::Cockade;
    }
    match has_family_minor(g, Family::KtEq(t)) {
        Some(w) => {
            let pattern = Family::KtEq(t).pattern(w.shared);
            match w.model.validate(g, &pattern) {
                Ok(()) => Outcome::Minor(Witness::new(ctx, g, &pattern, &w.model)),
                Err(e) => Outcome::Broken(Counterexample {
                    graph6: graph6::encode(g),
                    context: format!("{ctx}: invalid witness ({e})"),
                }),
            }
        }
        None => Outcome::Broken(Counterexample {
            graph6: graph6::encode(g),
            context: format!("{ctx}: no K{t}^= minor and not a cockade"),
        }),
    }
}

/// Every graph on t-1..=n_max vertices with at least threshold(t, n) edges
/// has a K_t^= minor or is a (K_{t-1}, t-4)-cockade.
pub fn check_theorem(t: usize, n_max: usize) -> Result<LemmaRun> {
    if !(5..=6).contains(&t) {
        return Err(Error::InvalidParameter(format!("theorem check supports t in 5..=6, got {t}")));
    }
    if n_max > 8 {
        return Err(Error::CapExceeded("theorem check supports n_max <= 8".into()));
    }
    timed(|| {
        let family = CockadeFamily::for_t(t)?;
        let mut report = LemmaReport::new(format!("theorem-t{t}"));
        report.param("t", t);
        report.param("n_max", n_max);
        let mut witnesses = Vec::new();
        let mut per_order = BTreeMap::new();
        for n in t - 1..=n_max {
            let min_e = threshold(t, n)?.max(0) as usize;
            let graphs: Vec<Graph> = if n <= 7 {
                enumerate_all(n)?.into_iter().filter(|g| g.edge_count() >= min_e).collect()
            } else {
                let mut f = EnumFilter::new(n, 0);
                f.min_edges = Some(min_e);
                MinDegreeEnumeration::new(f)?.collect()
            };
            let outcomes: Vec<Outcome> = graphs
                .par_iter()
                .map(|g| classify(g, t, &family, true, format!("n={n} {}", graph6::encode(g))))
                .collect();
            let (mut minors, mut cockades) = (0, 0);
            for o in outcomes {
                report.instances_checked += 1;
                match o {
                    Outcome::Minor(w) => {
                        minors += 1;
                        witnesses.push(w);
                    }
                    Outcome::Cockade => cockades += 1,
                    Outcome::Broken(c) => report.counterexamples.push(c),
                }
            }
            per_order.insert(
                n.to_string(),
                json!({ "threshold": min_e, "graphs": graphs.len(), "minor": minors, "cockade": cockades }),
            );
        }
        report.detail("per_order", json!(per_order));
        Ok(LemmaRun::new(report, witnesses))
    })
}

const SPOT_MAX_N: usize = 16;

fn small_cockade(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let pieces = rng.gen_range(1..=3);
        let seed = rng.gen::<u64>();
        if let Ok((_, g)) = random_cockade(pieces, seed) {
            if g.n() <= max_n {
                return g;
            }
        }
    }
}

/// One sample per kind in rotation: an untouched cockade, a cockade plus a
/// missing edge, a cockade plus a vertex of degree >= 6, and a uniform
/// random graph at or just above 6n - 20 edges; all on at most 16 vertices.
fn draw(rng: &mut ChaCha8Rng, i: usize) -> (Graph, &'static str) {
    match i % 4 {
        0 => (small_cockade(rng, SPOT_MAX_N), "cockade"),
        1 => {
            let g = small_cockade(rng, SPOT_MAX_N);
            let gaps: Vec<(usize, usize)> = g.non_edges().collect();
            match gaps.choose(rng) {
                Some(&(u, v)) => (g.add_edge(u, v).expect("non-edge"), "cockade+edge"),
                None => (g, "cockade"),
            }
        }
        2 => {
            let g = small_cockade(rng, SPOT_MAX_N - 1);
            let n = g.n();
            let d = rng.gen_range(6..=n);
            let mut verts: Vec<usize> = (0..n).collect();
            verts.shuffle(rng);
            let mask = verts[..d].iter().fold(0u64, |m, &v| m | bit(v));
            let mut rows = g.rows().to_vec();
            for v in &verts[..d] {
                rows[*v] |= bit(n);
            }
            rows.push(mask);
            (Graph::from_rows(&rows).expect("valid"), "cockade+vertex")
        }
        _ => {
            let n = rng.gen_range(9..=SPOT_MAX_N);
            let all = n * (n - 1) / 2;
            let e = (threshold(9, n).expect("n >= 8") as usize + rng.gen_range(0..=3)).min(all);
            let mut pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            pairs.shuffle(rng);
            pairs.truncate(e);
            (Graph::from_edges(n, &pairs).expect("valid"), "random")
        }
    }
}

/// Sampling check of the K9^= dichotomy on graphs with at most 16 vertices.
pub fn spot_check_theorem2(samples: usize, seed: u64) -> Result<LemmaRun> {
    timed(|| {
        let family = CockadeFamily::k9eq();
        let mut report = LemmaReport::new("theorem2-spot");
        report.param("samples", samples);
        report.param("seed", seed);
        report.param("max_n", SPOT_MAX_N);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let drawn: Vec<(Graph, &'static str)> = (0..samples).map(|i| draw(&mut rng, i)).collect();
        let outcomes: Vec<Outcome> = drawn
            .par_iter()
            .enumerate()
            .map(|(i, (g, kind))| {
                let free = g.n() <= MINOR_FREE_CHECK_N;
                classify(g, 9, &family, free, format!("sample {i} ({kind}, n={})", g.n()))
            })
            .collect();
        let mut witnesses = Vec::new();
        let mut kinds: BTreeMap<&str, [u64; 2]> = BTreeMap::new();
        for ((_, kind), o) in drawn.iter().zip(outcomes) {
            report.instances_checked += 1;
            let slot = kinds.entry(kind).or_default();
            match o {
                Outcome::Minor(w) => {
                    slot[0] += 1;
                    witnesses.push(w);
                }
                Outcome::Cockade => slot[1] += 1,
                Outcome::Broken(c) => report.counterexamples.push(c),
            }
        }
        let summary: BTreeMap<&str, serde_json::Value> = kinds
            .into_iter()
            .map(|(k, [m, c])| (k, json!({ "minor": m, "cockade": c })))
            .collect();
        report.detail("per_kind", json!(summary));
        report.detail("cockades_checked_minor_free_up_to", MINOR_FREE_CHECK_N);
        Ok(LemmaRun::new(report, witnesses))
    })
}
