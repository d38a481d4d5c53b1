//! Laws of the (K8, K2,2,2,2,2, 5) cockades: non-edges, attached vertices,
//! vertex splits and the edge count.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{LemmaReport, LemmaRun};
use super::{check_all, expect_family, threshold, timed, Check};
use crate::canon::canonical_form;
use crate::cockades::{enumerate_cockades, random_cockade, recognize_cockade, CockadeFamily};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexSet};
use crate::graph6;
use crate::minors::Family;

fn cockades_up_to(max_n: usize) -> Result<Vec<Graph>> {
    enumerate_cockades(&CockadeFamily::k9eq(), max_n)
}

fn orders(cockades: &[Graph]) -> Vec<usize> {
    cockades.iter().map(|g| g.n()).collect()
}

/// Every cockade on at most `max_n` vertices plus any non-edge has a K9^=
/// minor.
pub fn lemma1(max_n: usize) -> Result<LemmaRun> {
    if max_n > 13 {
        return Err(Error::CapExceeded("lemma 1 supports cockades up to 13 vertices".into()));
    }
    timed(|| {
        let cockades = cockades_up_to(max_n)?;
        let mut report = LemmaReport::new("1");
        report.param("max_n", max_n);
        report.detail("cockade_orders", orders(&cockades));
        let mut instances = Vec::new();
        for (i, g) in cockades.iter().enumerate() {
            for (x, y) in g.non_edges() {
                let h = g.add_edge(x, y)?;
                instances.push((h, format!("cockade {} ({}) + {x}{y}", i, graph6::encode(g))));
            }
        }
        let witnesses = check_all(&mut report, instances, Family::KtEq(9));
        Ok(LemmaRun::new(report, witnesses))
    })
}

/// A new vertex joined to at least six vertices of a cockade on at most
/// `max_n` vertices yields a K9^= minor.
pub fn lemma2(max_n: usize) -> Result<LemmaRun> {
    if max_n > 12 {
        return Err(Error::CapExceeded("lemma 2 supports cockades up to 12 vertices".into()));
    }
    timed(|| {
        let cockades = cockades_up_to(max_n)?;
        let mut report = LemmaReport::new("2");
        report.param("max_n", max_n);
        report.param("min_attachments", 6);
        report.detail("cockade_orders", orders(&cockades));
        let mut instances = Vec::new();
        for (i, g) in cockades.iter().enumerate() {
            let n = g.n();
            for mask in 0u64..(1 << n) {
                if mask.count_ones() < 6 {
                    continue;
                }
                let mut rows = g.rows().to_vec();
                for (v, row) in rows.iter_mut().enumerate() {
                    if mask & bit(v) != 0 {
                        *row |= bit(n);
                    }
                }
                rows.push(mask);
                let h = Graph::from_rows(&rows)?;
                instances.push((h, format!("cockade {i} + vertex on {:?}", VertexSet(mask).to_vec())));
            }
        }
        let witnesses = check_all(&mut report, instances, Family::KtEq(9));
        Ok(LemmaRun::new(report, witnesses))
    })
}

/// Splits of `v` in `g`: v keeps its index as x, y is appended; each
/// neighbour goes to x only, y only, or both. Only splits with min degree
/// >= 7 and >= 5 common neighbours of x and y are produced.
fn splits(g: &Graph, v: usize, out: &mut Vec<Graph>) {
    let nbrs: Vec<usize> = g.neighbors(v).to_vec();
    let d = nbrs.len();
    let n = g.n();
    let total = 3usize.pow(d as u32);
    for code in 0..total {
        let (mut xs, mut ys, mut both) = (0u64, 0u64, 0u64);
        let mut c = code;
        for &u in &nbrs {
            match c % 3 {
                0 => xs |= bit(u),
                1 => ys |= bit(u),
                _ => both |= bit(u),
            }
            c /= 3;
        }
        if both.count_ones() < 5 || (xs | both).count_ones() < 6 || (ys | both).count_ones() < 6 {
            continue;
        }
        let mut rows = g.rows().to_vec();
        rows.push(0);
        for &u in &nbrs {
            rows[u] &= !bit(v);
        }
        rows[v] = 0;
        for u in crate::graph::Bits(xs | both) {
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
        for u in crate::graph::Bits(ys | both) {
            rows[u] |= bit(n);
            rows[n] |= bit(u);
        }
        rows[v] |= bit(n);
        rows[n] |= bit(v);
        let h = Graph::from_rows_unchecked(n + 1, &rows);
        if h.min_degree() >= 7 {
            out.push(h);
        }
    }
}

/// Every qualifying vertex split of a cockade on at most `max_n` vertices
/// has a K9^= minor. Isomorphic split graphs are tested once.
pub fn lemma3(max_n: usize) -> Result<LemmaRun> {
    if max_n > 11 {
        return Err(Error::CapExceeded("lemma 3 supports cockades up to 11 vertices".into()));
    }
    timed(|| {
        let cockades = cockades_up_to(max_n)?;
        let mut report = LemmaReport::new("3");
        report.param("max_n", max_n);
        report.param("min_degree", 7);
        report.param("min_common_neighbours", 5);
        report.detail("cockade_orders", orders(&cockades));
        let mut all = Vec::new();
        for (i, g) in cockades.iter().enumerate() {
            for v in 0..g.n() {
                let mut out = Vec::new();
                splits(g, v, &mut out);
                all.extend(out.into_iter().map(|h| (i, v, h)));
            }
        }
        let keys: Vec<_> = all.par_iter().map(|(_, _, h)| canonical_form(h)).collect();
        let mut first: HashMap<_, usize> = HashMap::new();
        let mut unique = Vec::new();
        for (k, key) in keys.iter().enumerate() {
            first.entry(key.clone()).or_insert_with(|| {
                unique.push(k);
                k
            });
        }
        let results: Vec<Check> = unique
            .par_iter()
            .map(|&k| {
                let (i, v, h) = &all[k];
                expect_family(h, Family::KtEq(9), format!("cockade {i} split at {v}"))
            })
            .collect();
        let mut witnesses = Vec::new();
        for r in results {
            match r {
                Check::Found(w) => witnesses.push(w),
                Check::Missing(c) => report.counterexamples.push(c),
            }
        }
        report.instances_checked = all.len() as u64;
        report.detail("isomorphism_classes", unique.len());
        Ok(LemmaRun::new(report, witnesses))
    })
}

/// Edge law on every enumerated cockade up to `max_n` vertices and on
/// `samples` random cockades; each is also recognised.
pub fn lemma4(max_n: usize, samples: usize) -> Result<LemmaRun> {
    timed(|| {
        let mut report = LemmaReport::new("4");
        report.param("max_n", max_n);
        report.param("samples", samples);
        let family = CockadeFamily::k9eq();
        let enumerated = enumerate_cockades(&family, max_n)?;
        let mut graphs: Vec<(Graph, String)> = enumerated
            .into_iter()
            .enumerate()
            .map(|(i, g)| (g, format!("enumerated {i}")))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        report.detail("enumerated", graphs.len());
        let mut max_seen = 0;
        let (mut drawn, mut seed) = (0, 0u64);
        while drawn < samples {
            let pieces = rng.gen_range(1..=13);
            seed += 1;
            match random_cockade(pieces, seed) {
                Ok((_, g)) => {
                    max_seen = max_seen.max(g.n());
                    drawn += 1;
                    graphs.push((g, format!("random seed={seed} pieces={pieces}")));
                }
                Err(Error::TooManyVertices(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        report.detail("max_random_order", max_seen);
        let failures: Vec<Option<String>> = graphs
            .par_iter()
            .map(|(g, ctx)| {
                let law = threshold(9, g.n()).ok()? as usize;
                if g.edge_count() != law {
                    return Some(format!("{ctx}: e={} but 6n-20={law}", g.edge_count()));
                }
                match recognize_cockade(g) {
                    Some(cert) => cert.validate(g, &family).err().map(|e| format!("{ctx}: {e}")),
                    None => Some(format!("{ctx}: not recognised")),
                }
            })
            .collect();
        for ((g, _), f) in graphs.iter().zip(failures) {
            report.instances_checked += 1;
            if let Some(ctx) = f {
                report.counterexample(g, ctx);
            }
        }
        Ok(LemmaRun::new(report, Vec::new()))
    })
}
