//! Isomorph-free generation of graphs with a minimum-degree bound.
//!
//! A graph on `n` vertices has minimum degree at least `d` exactly when its
//! complement has maximum degree at most `n - 1 - d`. Bounded maximum degree
//! is hereditary, so the complements are produced by canonical augmentation
//! one vertex at a time: a child `P + v` is accepted only if `v` is the
//! canonical deletion vertex of the child, which makes every isomorphism class
//! arise from exactly one parent class. Isomorphic siblings are merged by
//! their canonical certificate.
//!
//! The generation tree is cut at a fixed level into chunks (one per subtree
//! root, ordered by certificate). Chunks expand independently, which gives
//! deterministic output for any worker count and a natural checkpoint unit.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_graph_colored, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};
use crate::minors::is_k_connected;

/// Largest `n` accepted by the degree-constrained generator.
pub const MAX_ENUM_N: usize = 16;
/// Largest `n` for exhaustive labelled enumeration.
pub const MAX_ALL_N: usize = 7;

/// Subtrees rooted at the first level with at least this many classes form
/// the chunks.
const MIN_CHUNKS: usize = 192;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumFilter {
    pub n: usize,
    pub min_degree: usize,
    #[serde(default)]
    pub min_connectivity: Option<usize>,
    #[serde(default)]
    pub min_edges: Option<usize>,
    #[serde(default)]
    pub max_edges: Option<usize>,
}

impl EnumFilter {
    pub fn new(n: usize, min_degree: usize) -> Self {
        EnumFilter {
            n,
            min_degree,
            min_connectivity: None,
            min_edges: None,
            max_edges: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Filter("n must be at least 1".into()));
        }
        if self.n > MAX_ENUM_N {
            return Err(Error::Filter(format!("n={} exceeds {MAX_ENUM_N}", self.n)));
        }
        if self.min_degree >= self.n {
            return Err(Error::Filter(format!(
                "min degree {} impossible on {} vertices",
                self.min_degree, self.n
            )));
        }
        if let (Some(lo), Some(hi)) = (self.min_edges, self.max_edges) {
            if lo > hi {
                return Err(Error::Filter(format!("edge range {lo}..={hi} is empty")));
            }
        }
        Ok(())
    }

    /// Maximum degree allowed in the complement.
    pub fn complement_max_degree(&self) -> usize {
        self.n - 1 - self.min_degree
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        if g.n() != self.n || g.min_degree() < self.min_degree {
            return false;
        }
        let e = g.edge_count();
        if self.min_edges.is_some_and(|lo| e < lo) || self.max_edges.is_some_and(|hi| e > hi) {
            return false;
        }
        if let Some(k) = self.min_connectivity {
            if !is_k_connected(g, k) {
                return false;
            }
        }
        true
    }
}

/// Ordering invariant used to pick the canonical deletion vertex: degree,
/// then neighbour-degree sum, then edges among the neighbours.
#[inline]
fn vertex_invariant(g: &Graph, u: usize) -> u32 {
    let row = g.row(u);
    let mut nsum = 0u32;
    let mut tri = 0u32;
    for w in Bits(row) {
        nsum += g.row(w).count_ones();
        tri += (g.row(w) & row).count_ones();
    }
    ((row.count_ones()) << 24) | (nsum.min(0x3fff) << 10) | (tri / 2).min(0x3ff)
}

type Key = Vec<u64>;

/// Colour classes for the canonical test: `first` alone, then the other
/// vertices grouped by invariant in increasing order.
fn colored_key(g: &Graph, inv: &[u32], first: usize) -> Key {
    let n = g.n();
    let mut order: Vec<(u32, usize)> = (0..n).filter(|&u| u != first).map(|u| (inv[u], u)).collect();
    order.sort_unstable();
    let mut cells = Vec::with_capacity(n);
    cells.push(bit(first));
    let mut i = 0;
    while i < order.len() {
        let mut m = 0;
        let v = order[i].0;
        while i < order.len() && order[i].0 == v {
            m |= bit(order[i].1);
            i += 1;
        }
        cells.push(m);
    }
    canonical_graph_colored(g, Some(&cells)).rows().to_vec()
}

/// Children of `parent` under canonical augmentation with `Δ <= max_deg`,
/// each paired with its isomorphism-invariant certificate.
fn children(parent: &Graph, max_deg: usize, out: &mut Vec<(Key, Graph)>) {
    let k = parent.n();
    let open: u64 = (0..k)
        .filter(|&u| parent.degree(u) < max_deg)
        .fold(0, |m, u| m | bit(u));
    let pmax = parent.max_degree();
    let mut seen: HashSet<Key> = HashSet::new();
    let mut rows = [0u64; 64];
    let mut inv = [0u32; 64];
    let start = out.len();
    for size in pmax.min(max_deg)..=max_deg.min(k) {
        for_each_subset(open, size, &mut |s| {
            rows[..k].copy_from_slice(parent.rows());
            for u in Bits(s) {
                rows[u] |= bit(k);
            }
            rows[k] = s;
            let child = Graph::from_rows_unchecked(k + 1, &rows);
            for (u, slot) in inv.iter_mut().enumerate().take(k + 1) {
                *slot = vertex_invariant(&child, u);
            }
            let fv = inv[k];
            if inv[..k].iter().any(|&f| f > fv) {
                return;
            }
            let key = colored_key(&child, &inv[..=k], k);
            for u in 0..k {
                if inv[u] == fv && colored_key(&child, &inv[..=k], u) < key {
                    return;
                }
            }
            if seen.insert(key.clone()) {
                out.push((key, child));
            }
        });
    }
    out[start..].sort_unstable_by(|a, b| a.0.cmp(&b.0));
}

/// Calls `f` on every subset of `mask` with exactly `size` elements.
fn for_each_subset(mask: u64, size: usize, f: &mut impl FnMut(u64)) {
    fn rec(rest: u64, need: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if need == 0 {
            f(acc);
            return;
        }
        if (rest.count_ones() as usize) < need {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        let rest2 = rest & !bit(v);
        rec(rest2, need - 1, acc | bit(v), f);
        rec(rest2, need, acc, f);
    }
    rec(mask, size, 0, f);
}

/// The generation tree for graphs on `n` vertices with maximum degree at most
/// `max_deg`, cut into chunks.
#[derive(Clone, Debug)]
pub struct ChunkPlan {
    n: usize,
    max_deg: usize,
    level: usize,
    roots: Vec<Graph>,
}

impl ChunkPlan {
    pub fn new(n: usize, max_deg: usize) -> Result<Self> {
        if n == 0 || n > MAX_ENUM_N {
            return Err(Error::Filter(format!("n={n} outside 1..={MAX_ENUM_N}")));
        }
        let mut level_graphs = vec![Graph::empty(0)?];
        let mut level = 0;
        while level < n && level_graphs.len() < MIN_CHUNKS {
            let mut next = Vec::new();
            for g in &level_graphs {
                children(g, max_deg, &mut next);
            }
            next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            level_graphs = next.into_iter().map(|(_, g)| g).collect();
            level += 1;
        }
        Ok(ChunkPlan {
            n,
            max_deg,
            level,
            roots: level_graphs,
        })
    }

    pub fn chunk_count(&self) -> usize {
        self.roots.len()
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// All graphs on `n` vertices below root `chunk`, sorted by certificate.
    pub fn expand(&self, chunk: usize) -> Vec<Graph> {
        let mut frontier = vec![self.roots[chunk].clone()];
        for _ in self.level..self.n {
            let mut next = Vec::new();
            for g in &frontier {
                children(g, self.max_deg, &mut next);
            }
            frontier = next.into_iter().map(|(_, g)| g).collect();
        }
        if self.level < self.n {
            // children() sorts per parent; re-sort the whole chunk
            let mut keyed: Vec<(Key, Graph)> = frontier
                .into_iter()
                .map(|g| (sort_key(&g), g))
                .collect();
            keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            keyed.into_iter().map(|(_, g)| g).collect()
        } else {
            frontier
        }
    }
}

fn sort_key(g: &Graph) -> Key {
    crate::canon::canonical_graph(g).rows().to_vec()
}

/// One representative per isomorphism class of graphs on `n` vertices with
/// maximum degree at most `max_deg`.
pub fn enumerate_max_degree(n: usize, max_deg: usize) -> Result<Vec<Graph>> {
    let plan = ChunkPlan::new(n, max_deg)?;
    Ok((0..plan.chunk_count()).flat_map(|c| plan.expand(c)).collect())
}

/// Degree-constrained enumeration driver: chunks of the complement tree,
/// complemented and filtered on expansion.
#[derive(Clone, Debug)]
pub struct MinDegreeEnumeration {
    filter: EnumFilter,
    plan: ChunkPlan,
}

impl MinDegreeEnumeration {
    pub fn new(filter: EnumFilter) -> Result<Self> {
        filter.validate()?;
        let plan = ChunkPlan::new(filter.n, filter.complement_max_degree())?;
        Ok(MinDegreeEnumeration { filter, plan })
    }

    pub fn filter(&self) -> &EnumFilter {
        &self.filter
    }

    pub fn chunk_count(&self) -> usize {
        self.plan.chunk_count()
    }

    pub fn chunk(&self, id: usize) -> Vec<Graph> {
        self.plan
            .expand(id)
            .into_iter()
            .map(|h| h.complement())
            .filter(|g| self.filter.accepts(g))
            .collect()
    }

    /// Lazy single-threaded stream, chunk by chunk.
    pub fn stream(&self) -> impl Iterator<Item = Graph> + '_ {
        (0..self.chunk_count()).flat_map(move |c| self.chunk(c))
    }

    /// Runs `f` over every chunk on the current rayon pool; results come back
    /// in chunk order regardless of scheduling.
    pub fn map_chunks<R, F>(&self, ids: &[usize], f: F) -> Vec<(usize, R)>
    where
        R: Send,
        F: Fn(usize, Vec<Graph>) -> R + Sync + Send,
    {
        let mut out: Vec<(usize, R)> = ids
            .par_iter()
            .map(|&id| (id, f(id, self.chunk(id))))
            .collect();
        out.sort_by_key(|(id, _)| *id);
        out
    }

    pub fn collect(&self) -> Vec<Graph> {
        let ids: Vec<usize> = (0..self.chunk_count()).collect();
        self.map_chunks(&ids, |_, gs| gs)
            .into_iter()
            .flat_map(|(_, gs)| gs)
            .collect()
    }
}

pub fn enumerate_min_degree(filter: EnumFilter) -> Result<Vec<Graph>> {
    Ok(MinDegreeEnumeration::new(filter)?.collect())
}

/// Every isomorphism class on `n <= 7` vertices, by brute force over all
/// labelled graphs; sorted by canonical form. Test oracle only.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ALL_N {
        return Err(Error::CapExceeded(format!("enumerate_all supports n <= {MAX_ALL_N}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let total: u64 = 1 << pairs.len();
    let forms: BTreeSet<CanonicalForm> = (0..total)
        .into_par_iter()
        .map(|mask| {
            let mut rows = [0u64; 8];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
            }
            canonical_form(&Graph::from_rows_unchecked(n, &rows[..n]))
        })
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    Ok(forms.iter().map(|f| f.to_graph()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_size() {
        let mut count = 0;
        for_each_subset(0b10111, 2, &mut |s| {
            assert_eq!(s.count_ones(), 2);
            assert_eq!(s & !0b10111, 0);
            count += 1;
        });
        assert_eq!(count, 6);
    }

    #[test]
    fn small_totals() {
        // graphs on n vertices: 1, 2, 4, 11, 34
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_max_degree(n, n - 1).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn filter_validation() {
        assert!(EnumFilter::new(0, 0).validate().is_err());
        assert!(EnumFilter::new(5, 5).validate().is_err());
        assert!(EnumFilter::new(17, 6).validate().is_err());
        let mut f = EnumFilter::new(6, 2);
        f.min_edges = Some(10);
        f.max_edges = Some(9);
        assert!(f.validate().is_err());
    }

    #[test]
    fn all_n3_n4() {
        assert_eq!(enumerate_all(3).unwrap().len(), 4);
        assert_eq!(enumerate_all(4).unwrap().len(), 11);
        assert!(enumerate_all(8).is_err());
    }
}
