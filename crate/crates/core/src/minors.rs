//! Minor containment with witnesses, rooted K4 minors, fixed subgraphs and
//! vertex connectivity.
//!
//! # Minor search
//!
//! If `g[allowed]` contains `h` as a minor, any model can be grown until its
//! branch sets cover every component that meets them: leftover vertices
//! adjacent to a branch set are absorbed into it, which only adds adjacencies.
//! So it suffices to search over partitions of the kept components into
//! connected blocks, reached from the all-singleton partition by merging two
//! adjacent blocks or dropping a whole component. States are memoised and
//! children are tried in order of most surviving quotient edges.
//!
//! Pruning is admissible: quotient edges never increase; for near-complete
//! targets a block of too small degree must be touched by a later merge, and
//! missing pairs between untouched blocks survive to the end.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, VertexSet};

/// Branch sets of a minor model: `branch_sets[i]` represents vertex `i` of
/// the pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    /// Checks the model against host `g` and pattern `h`.
    pub fn validate(&self, g: &Graph, h: &Graph) -> std::result::Result<(), String> {
        if self.branch_sets.len() != h.n() {
            return Err(format!(
                "{} branch sets for a pattern on {} vertices",
                self.branch_sets.len(),
                h.n()
            ));
        }
        let mut used = VertexSet::EMPTY;
        for (i, &b) in self.branch_sets.iter().enumerate() {
            if b.is_empty() {
                return Err(format!("branch set {i} is empty"));
            }
            if !b.is_subset(g.vertices()) {
                return Err(format!("branch set {i} leaves the host"));
            }
            if !(b & used).is_empty() {
                return Err(format!("branch set {i} overlaps an earlier one"));
            }
            if !g.is_connected_set(b) {
                return Err(format!("branch set {i} is not connected"));
            }
            used |= b;
        }
        for (i, j) in h.edges() {
            let (a, b) = (self.branch_sets[i], self.branch_sets[j]);
            if g.edges_between(a, b) == 0 {
                return Err(format!("pattern edge {i}-{j} has no host edge"));
            }
        }
        Ok(())
    }
}

/// Rooted K4 model: `branch_sets[i]` contains `roots[i]` and no other root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedModel {
    pub branch_sets: [VertexSet; 4],
    pub roots: [usize; 4],
}

impl RootedModel {
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let k4 = Graph::complete(4).expect("K4");
        MinorModel {
            branch_sets: self.branch_sets.to_vec(),
        }
        .validate(g, &k4)?;
        let t = VertexSet::from_vertices(self.roots);
        if t.len() != 4 {
            return Err("roots are not distinct".into());
        }
        for i in 0..4 {
            if self.branch_sets[i] & t != VertexSet::singleton(self.roots[i]) {
                return Err(format!("branch set {i} does not meet the roots in exactly its own root"));
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Targets
// ---------------------------------------------------------------------------

/// Shape of the missing pair when a near-complete target lacks two edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairShape {
    Any,
    Shared,
    Disjoint,
}

trait Target {
    fn order(&self) -> usize;
    /// True if no partition reachable with `remaining` more merges can work.
    fn hopeless(&self, q: &Graph, remaining: usize, connected: bool) -> bool;
    /// Pattern vertex -> quotient vertex, when `q` (on `order()` vertices)
    /// contains the pattern as a spanning subgraph.
    fn embed(&self, q: &Graph) -> Option<Vec<usize>>;
}

/// K_t minus at most `missing` edges (`missing <= 2`).
struct NearComplete {
    t: usize,
    missing: usize,
    shape: PairShape,
}

impl NearComplete {
    fn required_edges(&self) -> usize {
        self.t * (self.t - 1) / 2 - self.missing
    }
}

fn greedy_matching(rows: &[u64]) -> usize {
    let mut matched = 0u64;
    let mut size = 0;
    for (v, &row) in rows.iter().enumerate() {
        if matched & bit(v) != 0 {
            continue;
        }
        let free = row & !matched & !bit(v);
        if free != 0 {
            let w = free.trailing_zeros() as usize;
            matched |= bit(v) | bit(w);
            size += 1;
        }
    }
    size
}

impl Target for NearComplete {
    fn order(&self) -> usize {
        self.t
    }

    fn hopeless(&self, q: &Graph, remaining: usize, connected: bool) -> bool {
        let e = q.edge_count();
        let need = self.required_edges();
        if e < need || (connected && e < need + remaining) {
            return true;
        }
        let min_deg = self.t - 1 - self.missing;
        let low = (0..q.n()).filter(|&v| q.degree(v) < min_deg).count();
        if low > 2 * remaining {
            return true;
        }
        let comp = q.complement();
        greedy_matching(comp.rows()) > 2 * remaining + self.missing
    }

    fn embed(&self, q: &Graph) -> Option<Vec<usize>> {
        let gaps: Vec<(usize, usize)> = q.non_edges().collect();
        if gaps.len() > self.missing {
            return None;
        }
        let t = self.t;
        let mut front: Vec<usize> = Vec::with_capacity(4);
        match gaps.as_slice() {
            [] => {}
            [(a, b)] => front.extend([*a, *b]),
            [(a, b), (c, d)] => {
                let common = [a, b].into_iter().find(|x| *x == c || *x == d);
                match (common, self.shape) {
                    (Some(_), PairShape::Disjoint) | (None, PairShape::Shared) => return None,
                    (Some(&x), _) => {
                        let y = if *a == x { *b } else { *a };
                        let z = if *c == x { *d } else { *c };
                        front.extend([x, y, z]);
                    }
                    (None, _) => front.extend([*a, *b, *c, *d]),
                }
            }
            _ => return None,
        }
        let mut map = front.clone();
        map.extend((0..t).filter(|v| !front.contains(v)));
        Some(map)
    }
}

/// Arbitrary pattern: spanning subgraph test by backtracking at the leaf.
struct General<'h> {
    h: &'h Graph,
    order: Vec<usize>,
    edges: usize,
}

impl<'h> General<'h> {
    fn new(h: &'h Graph) -> Self {
        let mut order: Vec<usize> = (0..h.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
        General {
            h,
            order,
            edges: h.edge_count(),
        }
    }

    fn extend(&self, q: &Graph, depth: usize, map: &mut [usize], used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let need = self.h.degree(v);
        for w in Bits(q.vertices().bits() & !used) {
            if q.degree(w) < need {
                continue;
            }
            let ok = self.order[..depth]
                .iter()
                .all(|&u| !self.h.has_edge(u, v) || q.has_edge(map[u], w));
            if ok {
                map[v] = w;
                if self.extend(q, depth + 1, map, used | bit(w)) {
                    return true;
                }
            }
        }
        false
    }
}

impl Target for General<'_> {
    fn order(&self) -> usize {
        self.h.n()
    }

    fn hopeless(&self, q: &Graph, remaining: usize, connected: bool) -> bool {
        let e = q.edge_count();
        e < self.edges || (connected && e < self.edges + remaining)
    }

    fn embed(&self, q: &Graph) -> Option<Vec<usize>> {
        let mut map = vec![0; self.h.n()];
        self.extend(q, 0, &mut map, 0).then_some(map)
    }
}

// ---------------------------------------------------------------------------
// Reduction search
// ---------------------------------------------------------------------------

struct Reducer<'a, T: Target> {
    g: &'a Graph,
    target: &'a T,
    visited: HashSet<Vec<u64>>,
}

impl<T: Target> Reducer<'_, T> {
    fn quotient(&self, blocks: &[u64]) -> Graph {
        let m = blocks.len();
        let mut nbr = [0u64; 64];
        for (i, &b) in blocks.iter().enumerate() {
            let mut acc = 0u64;
            for v in Bits(b) {
                acc |= self.g.row(v);
            }
            nbr[i] = acc & !b;
        }
        let mut rows = [0u64; 64];
        for i in 0..m {
            for j in i + 1..m {
                if nbr[i] & blocks[j] != 0 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
            }
        }
        Graph::from_rows_unchecked(m, &rows[..m])
    }

    fn search(&mut self, blocks: Vec<u64>) -> Option<Vec<u64>> {
        let h = self.target.order();
        let m = blocks.len();
        let q = self.quotient(&blocks);
        if m == h {
            return self
                .target
                .embed(&q)
                .map(|map| map.into_iter().map(|i| blocks[i]).collect());
        }
        let comps = q.components(q.vertices());
        if self.target.hopeless(&q, m - h, comps.len() == 1) {
            return None;
        }
        if !self.visited.insert(blocks.clone()) {
            return None;
        }
        let e = q.edge_count() as isize;
        // (surviving edges, op index, op)
        let mut ops: Vec<(isize, usize, Op)> = Vec::new();
        for (i, j) in q.edges() {
            let lost = 1 + (q.row(i) & q.row(j)).count_ones() as isize;
            ops.push((e - lost, ops.len(), Op::Merge(i, j)));
        }
        for c in comps.iter().filter(|c| c.len() <= m - h) {
            let lost = q.edges_within(*c) as isize;
            ops.push((e - lost, ops.len(), Op::Drop(*c)));
        }
        ops.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, _, op) in ops {
            let next = match op {
                Op::Merge(i, j) => {
                    let mut nb: Vec<u64> = Vec::with_capacity(m - 1);
                    for (k, &b) in blocks.iter().enumerate() {
                        if k == i {
                            nb.push(b | blocks[j]);
                        } else if k != j {
                            nb.push(b);
                        }
                    }
                    nb.sort_unstable();
                    nb
                }
                Op::Drop(c) => blocks
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| !c.contains(*k))
                    .map(|(_, &b)| b)
                    .collect(),
            };
            if let Some(found) = self.search(next) {
                return Some(found);
            }
        }
        None
    }
}

#[derive(Clone, Copy)]
enum Op {
    Merge(usize, usize),
    Drop(VertexSet),
}

fn find_model<T: Target>(g: &Graph, allowed: VertexSet, target: &T) -> Option<MinorModel> {
    if allowed.len() < target.order() {
        return None;
    }
    if target.order() == 0 {
        return Some(MinorModel {
            branch_sets: Vec::new(),
        });
    }
    let mut r = Reducer {
        g,
        target,
        visited: HashSet::new(),
    };
    let blocks: Vec<u64> = allowed.iter().map(bit).collect();
    r.search(blocks).map(|bs| MinorModel {
        branch_sets: bs.into_iter().map(VertexSet).collect(),
    })
}

/// Detects patterns that are complete graphs minus at most two edges.
fn near_complete_shape(h: &Graph) -> Option<NearComplete> {
    let gaps: Vec<(usize, usize)> = h.non_edges().collect();
    let shape = match gaps.as_slice() {
        [] | [_] => PairShape::Any,
        [(a, b), (c, d)] => {
            if a == c || a == d || b == c || b == d {
                PairShape::Shared
            } else {
                PairShape::Disjoint
            }
        }
        _ => return None,
    };
    Some(NearComplete {
        t: h.n(),
        missing: gaps.len(),
        shape,
    })
}

/// Reorders a near-complete model so that branch set `i` represents pattern
/// vertex `i` of `h`.
fn relabel_near_complete(g: &Graph, h: &Graph, model: MinorModel) -> MinorModel {
    // The embedding puts quotient blocks in the roles of a canonical K_t
    // minus edges; map that onto h's actual missing pairs.
    let t = h.n();
    let sets = &model.branch_sets;
    let gaps: Vec<(usize, usize)> = h.non_edges().collect();
    let mut front: Vec<usize> = Vec::new();
    match gaps.as_slice() {
        [] => {}
        [(a, b)] => front.extend([*a, *b]),
        [(a, b), (c, d)] => {
            if let Some(x) = [*a, *b].into_iter().find(|x| x == c || x == d) {
                let y = if *a == x { *b } else { *a };
                let z = if *c == x { *d } else { *c };
                front.extend([x, y, z]);
            } else {
                front.extend([*a, *b, *c, *d]);
            }
        }
        _ => unreachable!("near-complete pattern"),
    }
    let mut roles = front.clone();
    roles.extend((0..t).filter(|v| !front.contains(v)));
    let mut out = vec![VertexSet::EMPTY; t];
    for (k, &v) in roles.iter().enumerate() {
        out[v] = sets[k];
    }
    let model = MinorModel { branch_sets: out };
    debug_assert!(model.validate(g, h).is_ok());
    model
}

/// A minor model of `h` in `g`, if `g >= h`.
pub fn has_minor(g: &Graph, h: &Graph) -> Option<MinorModel> {
    has_minor_within(g, g.vertices(), h)
}

/// Like [`has_minor`] but only branch sets inside `allowed` are considered.
pub fn has_minor_within(g: &Graph, allowed: VertexSet, h: &Graph) -> Option<MinorModel> {
    if allowed.len() < h.n() {
        return None;
    }
    if h.n() >= 2 {
        if let Some(nc) = near_complete_shape(h) {
            return find_model(g, allowed, &nc).map(|m| relabel_near_complete(g, h, m));
        }
    }
    find_model(g, allowed, &General::new(h))
}

// ---------------------------------------------------------------------------
// K_t^= family
// ---------------------------------------------------------------------------

/// The two graphs K_t^= (optionally with an extra isolated vertex).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// {K_t minus two edges sharing an end, K_t minus two disjoint edges}.
    KtEq(usize),
    /// The same two graphs, each plus an isolated vertex.
    KtEqPlusK1(usize),
}

impl Family {
    pub fn t(self) -> usize {
        match self {
            Family::KtEq(t) | Family::KtEqPlusK1(t) => t,
        }
    }

    /// The pattern graph for a variant; the isolated vertex, if any, is last.
    pub fn pattern(self, shared: bool) -> Graph {
        let base = crate::named::NamedGraph::CompleteMinusTwoEdges {
            t: self.t(),
            shared,
        }
        .build()
        .expect("t >= 4");
        match self {
            Family::KtEq(_) => base,
            Family::KtEqPlusK1(_) => base.disjoint_union(&Graph::empty(1).unwrap()).expect("size"),
        }
    }
}

/// A family witness: which variant was realised and its model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyWitness {
    pub shared: bool,
    pub model: MinorModel,
}

impl FamilyWitness {
    pub fn validate(&self, g: &Graph, family: Family) -> std::result::Result<(), String> {
        self.model.validate(g, &family.pattern(self.shared))
    }
}

/// Near-complete search within `allowed` for K_t minus at most two edges.
/// Returns the variant realised (disjoint unless the two gaps share an end).
fn kteq_within(g: &Graph, allowed: VertexSet, t: usize) -> Option<FamilyWitness> {
    let target = NearComplete {
        t,
        missing: 2,
        shape: PairShape::Any,
    };
    let model = find_model(g, allowed, &target)?;
    // blocks are in embed order: gap endpoints first
    let sets = model.branch_sets;
    let quotient_gap = |a: usize, b: usize| g.edges_between(sets[a], sets[b]) == 0;
    // roles from embed: shared -> [x,y,z,...] gaps xy,xz; disjoint -> [a,b,c,d] gaps ab,cd
    let shared = quotient_gap(0, 1) && quotient_gap(0, 2);
    let h = Family::KtEq(t).pattern(shared);
    let witness = FamilyWitness {
        shared,
        model: MinorModel { branch_sets: sets },
    };
    debug_assert!(witness.model.validate(g, &h).is_ok());
    Some(witness)
}

/// Tests the K_t^= family (or K_t^= plus K1), returning the variant found.
pub fn has_family_minor(g: &Graph, family: Family) -> Option<FamilyWitness> {
    has_family_minor_within(g, g.vertices(), family)
}

pub fn has_family_minor_within(g: &Graph, allowed: VertexSet, family: Family) -> Option<FamilyWitness> {
    let t = family.t();
    match family {
        Family::KtEq(_) => kteq_within(g, allowed, t),
        Family::KtEqPlusK1(_) => {
            if allowed.len() < t + 1 {
                return None;
            }
            // the isolated pattern vertex can always be shrunk to one host vertex
            for x in allowed {
                if let Some(mut w) = kteq_within(g, allowed - VertexSet::singleton(x), t) {
                    w.model.branch_sets.push(VertexSet::singleton(x));
                    return Some(w);
                }
            }
            None
        }
    }
}

// ---------------------------------------------------------------------------
// Rooted K4
// ---------------------------------------------------------------------------

/// K4 minor rooted at the four vertices of `roots`, inside `g`.
pub fn has_rooted_k4(g: &Graph, roots: VertexSet) -> Result<Option<RootedModel>> {
    g.check_set(roots)?;
    if roots.len() != 4 {
        return Err(Error::InvalidParameter(format!(
            "rooted K4 needs exactly 4 roots, got {}",
            roots.len()
        )));
    }
    Ok(rooted_k4_within(g, g.vertices(), roots))
}

/// Rooted K4 search restricted to `allowed` (which must contain the roots).
pub fn rooted_k4_within(g: &Graph, allowed: VertexSet, roots: VertexSet) -> Option<RootedModel> {
    debug_assert!(roots.is_subset(allowed) && roots.len() == 4);
    let r: Vec<usize> = roots.to_vec();
    let sets = [r[0], r[1], r[2], r[3]].map(bit);
    let mut visited = HashSet::new();
    let found = grow_rooted(g, allowed.bits() & !roots.bits(), sets, &mut visited)?;
    Some(RootedModel {
        branch_sets: found.map(VertexSet),
        roots: [r[0], r[1], r[2], r[3]],
    })
}

fn grow_rooted(g: &Graph, free: u64, sets: [u64; 4], visited: &mut HashSet<[u64; 4]>) -> Option<[u64; 4]> {
    let mut nbr = [0u64; 4];
    for i in 0..4 {
        let mut acc = 0;
        for v in Bits(sets[i]) {
            acc |= g.row(v);
        }
        nbr[i] = acc;
    }
    let mut first_gap = None;
    for i in 0..4 {
        for j in i + 1..4 {
            if nbr[i] & sets[j] == 0 {
                // sets[j] must stay reachable from sets[i] through free vertices
                let within = VertexSet(free | sets[i] | sets[j]);
                let start = sets[i].trailing_zeros() as usize;
                let mut reach = g.reach(start, within).bits();
                // the whole of sets[i] is connected, so one seed suffices
                reach |= sets[i];
                if reach & sets[j] == 0 {
                    return None;
                }
                if first_gap.is_none() {
                    first_gap = Some((i, j));
                }
            }
        }
    }
    let Some((i, j)) = first_gap else {
        return Some(sets);
    };
    if !visited.insert(sets) {
        return None;
    }
    for side in [i, j] {
        for w in Bits(nbr[side] & free) {
            let mut next = sets;
            next[side] |= bit(w);
            if let Some(found) = grow_rooted(g, free & !bit(w), next, visited) {
                return Some(found);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Fixed subgraphs
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubgraphPattern {
    /// K_k.
    Clique(usize),
    /// K_k minus one edge.
    CliqueMinusEdge(usize),
}

/// Vertex set spanning a copy of the pattern, if any.
pub fn contains_subgraph(g: &Graph, pattern: SubgraphPattern) -> Option<VertexSet> {
    match pattern {
        SubgraphPattern::Clique(k) => find_clique(g, g.vertices().bits(), k, 0).map(VertexSet),
        SubgraphPattern::CliqueMinusEdge(k) => {
            if k < 2 {
                return find_clique(g, g.vertices().bits(), k, 0).map(VertexSet);
            }
            // a, b (adjacent or not) plus a K_{k-2} in their common neighbourhood
            for a in 0..g.n() {
                for b in a + 1..g.n() {
                    let common = g.row(a) & g.row(b);
                    if let Some(c) = find_clique(g, common, k - 2, 0) {
                        return Some(VertexSet(c | bit(a) | bit(b)));
                    }
                }
            }
            None
        }
    }
}

fn find_clique(g: &Graph, cand: u64, k: usize, acc: u64) -> Option<u64> {
    if k == 0 {
        return Some(acc);
    }
    if (cand.count_ones() as usize) < k {
        return None;
    }
    for v in Bits(cand) {
        // only later candidates, so each clique is tried once
        let rest = cand & g.row(v) & !((bit(v) << 1) - 1);
        if let Some(c) = find_clique(g, rest, k - 1, acc | bit(v)) {
            return Some(c);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Vertex connectivity
// ---------------------------------------------------------------------------

/// Max number of internally vertex-disjoint s-t paths (s, t non-adjacent),
/// stopping early at `cap`. Also returns the residual reach from `s`:
/// (in-copies, out-copies). Edge arcs have unbounded capacity.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> (usize, u64, u64) {
    let n = g.n();
    let mut flow = [0u64; 64]; // flow[u] bit w: one unit on u_out -> w_in
    let mut through = 0u64; // internal vertices carrying a path
    let mut paths = 0;
    loop {
        // split nodes: v is v_in, 64 + v is v_out
        let mut parent = [u8::MAX; 128];
        let mut seen_in = 0u64;
        let mut seen_out = bit(s);
        let mut queue = [0u8; 128];
        let (mut head, mut tail) = (0, 0);
        queue[tail] = (64 + s) as u8;
        tail += 1;
        let mut reached = false;
        while head < tail && !reached {
            let node = queue[head] as usize;
            head += 1;
            if node >= 64 {
                let u = node - 64;
                for w in Bits(g.row(u) & !seen_in) {
                    seen_in |= bit(w);
                    parent[w] = node as u8;
                    if w == t {
                        reached = true;
                        break;
                    }
                    queue[tail] = w as u8;
                    tail += 1;
                }
                // backwards over a used internal arc
                if !reached && through & bit(u) != 0 && seen_in & bit(u) == 0 {
                    seen_in |= bit(u);
                    parent[u] = node as u8;
                    queue[tail] = u as u8;
                    tail += 1;
                }
            } else {
                let v = node;
                if through & bit(v) == 0 && seen_out & bit(v) == 0 {
                    seen_out |= bit(v);
                    parent[64 + v] = node as u8;
                    queue[tail] = (64 + v) as u8;
                    tail += 1;
                }
                // cancel flow u -> v
                for u in 0..n {
                    if flow[u] & bit(v) != 0 && seen_out & bit(u) == 0 {
                        seen_out |= bit(u);
                        parent[64 + u] = node as u8;
                        queue[tail] = (64 + u) as u8;
                        tail += 1;
                    }
                }
            }
        }
        if !reached || paths >= cap {
            return (paths, seen_in, seen_out);
        }
        let mut node = t;
        while node != 64 + s {
            let p = parent[node] as usize;
            if p >= 64 {
                let u = p - 64;
                if node == u {
                    through &= !bit(u);
                } else {
                    flow[u] |= bit(node);
                }
            } else {
                let u = node - 64;
                if u == p {
                    through |= bit(p);
                } else {
                    flow[u] &= !bit(p);
                }
            }
            node = p;
        }
        paths += 1;
    }
}

/// κ(g): n-1 for complete graphs, otherwise the least number of vertices
/// whose removal disconnects g.
pub fn vertex_connectivity(g: &Graph) -> usize {
    connectivity_capped(g, usize::MAX).0
}

/// Whether κ(g) >= k (cheaper than computing κ exactly).
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    g.n() > k && connectivity_capped(g, k).0 >= k
}

/// A minimum vertex separator, or `None` for complete graphs.
pub fn min_separator(g: &Graph) -> Option<VertexSet> {
    connectivity_capped(g, usize::MAX).1
}

/// (min(κ, cap), separator of size κ when κ < cap).
fn connectivity_capped(g: &Graph, cap: usize) -> (usize, Option<VertexSet>) {
    let n = g.n();
    if n <= 1 {
        return (0, None);
    }
    if !g.is_connected() {
        return (0, Some(VertexSet::EMPTY));
    }
    let mut best = (n - 1).min(cap);
    let mut witness = None;
    // some vertex among the first κ+1 lies outside a minimum separator
    let mut i = 0;
    while i < n && i <= best {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let (k, seen_in, seen_out) = local_connectivity(g, i, j, best);
            if k < best {
                best = k;
                witness = Some(VertexSet(seen_in & !seen_out));
            }
        }
        i += 1;
    }
    (best, witness)
}
