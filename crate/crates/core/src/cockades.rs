//! Cockades: graphs built from base pieces by repeatedly identifying
//! k-cliques. The main family uses pieces K8 and K2,2,2,2,2 glued on
//! 5-cliques; the clique families (K_{t-1}, t-4) are also supported.
//!
//! # Recognition
//!
//! Every base piece is (k+1)-connected, so any k-clique separator S of a
//! cockade splits it into cockades: each side G[C ∪ S] is a union of whole
//! pieces glued along k-cliques. Recognition therefore checks the edge law,
//! the base cases, and otherwise splits at the first k-clique separator.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, VecDeque};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, VertexSet, MAX_VERTICES};
use crate::lemmas::threshold;
use crate::named::NamedGraph;

/// Glue size of the main family.
pub const GLUE: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Piece {
    K8,
    K22222,
}

impl Piece {
    pub fn order(self) -> usize {
        match self {
            Piece::K8 => 8,
            Piece::K22222 => 10,
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            Piece::K8 => Graph::complete(8).expect("K8"),
            Piece::K22222 => NamedGraph::CompleteMultipartite(vec![2; 5])
                .build()
                .expect("K2,2,2,2,2"),
        }
    }

    /// Piece-local vertices of a 5-clique selection. For K8 the selection
    /// lists five distinct vertices; for K22222 it lists, part by part, which
    /// of the two part vertices (0 or 1) is taken.
    pub fn clique_vertices(self, selection: &[usize]) -> Result<Vec<usize>> {
        if selection.len() != GLUE {
            return Err(Error::Cockade(format!(
                "clique selection has {} entries, expected {GLUE}",
                selection.len()
            )));
        }
        match self {
            Piece::K8 => {
                let set = VertexSet::from_vertices(selection.iter().copied().filter(|&v| v < 8));
                if set.len() != GLUE || selection.iter().any(|&v| v >= 8) {
                    return Err(Error::Cockade(format!("{selection:?} is not a 5-clique of K8")));
                }
                Ok(selection.to_vec())
            }
            Piece::K22222 => {
                if selection.iter().any(|&c| c > 1) {
                    return Err(Error::Cockade(format!(
                        "{selection:?} is not a transversal of K2,2,2,2,2"
                    )));
                }
                Ok(selection.iter().enumerate().map(|(p, &c)| 2 * p + c).collect())
            }
        }
    }

    fn random_selection(self, rng: &mut ChaCha8Rng) -> Vec<usize> {
        match self {
            Piece::K8 => {
                let mut s = sample(rng, 8, GLUE).into_vec();
                s.sort_unstable();
                s
            }
            Piece::K22222 => (0..GLUE).map(|_| rng.gen_range(0..2)).collect(),
        }
    }
}

/// Attaches piece `i + 1` by identifying `new_clique[j]` of the new piece
/// with `target_clique[j]` of piece `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Glue {
    pub target: usize,
    pub target_clique: Vec<usize>,
    pub new_clique: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CockadeSpec {
    pub pieces: Vec<Piece>,
    pub glue: Vec<Glue>,
}

impl CockadeSpec {
    pub fn single(piece: Piece) -> Self {
        CockadeSpec {
            pieces: vec![piece],
            glue: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        let total: usize = self.pieces.iter().map(|p| p.order()).sum();
        total - GLUE * self.pieces.len().saturating_sub(1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Cockade(e.to_string()))
    }
}

/// Builds the cockade; vertices of piece 0 come first, then the non-glued
/// vertices of each later piece in order.
pub fn build_cockade(spec: &CockadeSpec) -> Result<Graph> {
    Ok(build_with_map(spec)?.0)
}

/// The cockade plus, per piece, the global index of each piece vertex.
pub fn build_with_map(spec: &CockadeSpec) -> Result<(Graph, Vec<Vec<usize>>)> {
    if spec.pieces.is_empty() {
        return Err(Error::Cockade("a cockade needs at least one piece".into()));
    }
    if spec.glue.len() + 1 != spec.pieces.len() {
        return Err(Error::Cockade(format!(
            "{} pieces need {} glue entries, got {}",
            spec.pieces.len(),
            spec.pieces.len() - 1,
            spec.glue.len()
        )));
    }
    let n = spec.order();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut rows = [0u64; MAX_VERTICES];
    let mut maps: Vec<Vec<usize>> = Vec::with_capacity(spec.pieces.len());
    let mut next = 0;
    for (i, &piece) in spec.pieces.iter().enumerate() {
        let mut map = vec![usize::MAX; piece.order()];
        if i > 0 {
            let glue = &spec.glue[i - 1];
            if glue.target >= i {
                return Err(Error::Cockade(format!(
                    "piece {i} glues onto piece {} which does not exist yet",
                    glue.target
                )));
            }
            let target = spec.pieces[glue.target];
            let tv = target.clique_vertices(&glue.target_clique)?;
            let nv = piece.clique_vertices(&glue.new_clique)?;
            for (a, b) in tv.into_iter().zip(nv) {
                map[b] = maps[glue.target][a];
            }
        }
        for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = next;
            next += 1;
        }
        let pg = piece.graph();
        for (u, v) in pg.edges() {
            let (a, b) = (map[u], map[v]);
            rows[a] |= bit(b);
            rows[b] |= bit(a);
        }
        maps.push(map);
    }
    debug_assert_eq!(next, n);
    Ok((Graph::from_rows_unchecked(n, &rows[..n]), maps))
}

/// Reproducible random spec with `pieces` pieces; tags, targets and cliques
/// are uniform over the valid choices.
pub fn random_cockade(pieces: usize, seed: u64) -> Result<(CockadeSpec, Graph)> {
    if pieces == 0 {
        return Err(Error::Cockade("a cockade needs at least one piece".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spec = CockadeSpec {
        pieces: Vec::with_capacity(pieces),
        glue: Vec::with_capacity(pieces - 1),
    };
    for i in 0..pieces {
        let piece = if rng.gen_bool(0.5) { Piece::K8 } else { Piece::K22222 };
        if i > 0 {
            let target = rng.gen_range(0..i);
            let target_clique = spec.pieces[target].random_selection(&mut rng);
            let new_clique = piece.random_selection(&mut rng);
            spec.glue.push(Glue {
                target,
                target_clique,
                new_clique,
            });
        }
        spec.pieces.push(piece);
    }
    let g = build_cockade(&spec)?;
    Ok((spec, g))
}

// ---------------------------------------------------------------------------
// Families and recognition
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Base {
    Complete(usize),
    /// K_{2,...,2} with the given number of parts.
    CocktailParty(usize),
}

impl Base {
    pub fn order(self) -> usize {
        match self {
            Base::Complete(s) => s,
            Base::CocktailParty(p) => 2 * p,
        }
    }

    fn matches(self, g: &Graph, s: VertexSet) -> bool {
        if s.len() != self.order() {
            return false;
        }
        match self {
            Base::Complete(_) => g.is_clique(s),
            // complement inside s is a perfect matching
            Base::CocktailParty(_) => s.iter().all(|v| (s - g.neighbors(v)).len() == 2),
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            Base::Complete(s) => Graph::complete(s).expect("size"),
            Base::CocktailParty(p) => NamedGraph::CompleteMultipartite(vec![2; p])
                .build()
                .expect("size"),
        }
    }
}

/// The cockade family that is extremal for K_t^= minors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CockadeFamily {
    pub t: usize,
    pub bases: Vec<Base>,
    pub k: usize,
}

impl CockadeFamily {
    /// (K8, K2,2,2,2,2, 5).
    pub fn k9eq() -> Self {
        Self::for_t(9).expect("t = 9")
    }

    /// (K_{t-1}, t-4) for 5 <= t <= 8, and the main family for t = 9.
    pub fn for_t(t: usize) -> Result<Self> {
        if !(5..=9).contains(&t) {
            return Err(Error::InvalidParameter(format!("no cockade family for t={t}")));
        }
        let mut bases = vec![Base::Complete(t - 1)];
        if t == 9 {
            bases.push(Base::CocktailParty(5));
        }
        Ok(CockadeFamily { t, bases, k: t - 4 })
    }

    pub fn edge_law(&self, n: usize) -> Option<usize> {
        threshold(self.t, n).ok().and_then(|e| usize::try_from(e).ok())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CockadeCertificate {
    Leaf {
        vertices: VertexSet,
        base: Base,
    },
    Split {
        separator: VertexSet,
        left: Box<CockadeCertificate>,
        right: Box<CockadeCertificate>,
    },
}

impl CockadeCertificate {
    pub fn vertices(&self) -> VertexSet {
        match self {
            CockadeCertificate::Leaf { vertices, .. } => *vertices,
            CockadeCertificate::Split { left, right, .. } => left.vertices() | right.vertices(),
        }
    }

    pub fn leaves(&self) -> Vec<(VertexSet, Base)> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(c) = stack.pop() {
            match c {
                CockadeCertificate::Leaf { vertices, base } => out.push((*vertices, *base)),
                CockadeCertificate::Split { left, right, .. } => {
                    stack.push(right);
                    stack.push(left);
                }
            }
        }
        out
    }

    /// Checks that the tree decomposes exactly `g` for `family`.
    pub fn validate(&self, g: &Graph, family: &CockadeFamily) -> std::result::Result<(), String> {
        if self.vertices() != g.vertices() {
            return Err("certificate does not cover the graph".into());
        }
        self.check(g, family)
    }

    fn check(&self, g: &Graph, family: &CockadeFamily) -> std::result::Result<(), String> {
        match self {
            CockadeCertificate::Leaf { vertices, base } => {
                if !family.bases.contains(base) {
                    return Err(format!("{base:?} is not a base of the family"));
                }
                if !base.matches(g, *vertices) {
                    return Err(format!("leaf {:?} does not induce {base:?}", vertices.to_vec()));
                }
                Ok(())
            }
            CockadeCertificate::Split {
                separator,
                left,
                right,
            } => {
                let (l, r) = (left.vertices(), right.vertices());
                if l & r != *separator {
                    return Err("sides do not overlap exactly in the separator".into());
                }
                if separator.len() != family.k || !g.is_clique(*separator) {
                    return Err(format!("separator {:?} is not a {}-clique", separator.to_vec(), family.k));
                }
                if l == *separator || r == *separator {
                    return Err("a side has no vertex outside the separator".into());
                }
                if g.edges_between(l - *separator, r - *separator) != 0 {
                    return Err("edges cross the separator".into());
                }
                left.check(g, family)?;
                right.check(g, family)
            }
        }
    }
}

/// Certificate for the main (K8, K2,2,2,2,2, 5) family.
pub fn recognize_cockade(g: &Graph) -> Option<CockadeCertificate> {
    recognize_in_family(g, &CockadeFamily::k9eq())
}

pub fn recognize_in_family(g: &Graph, family: &CockadeFamily) -> Option<CockadeCertificate> {
    recognize_set(g, g.vertices(), family)
}

fn recognize_set(g: &Graph, s: VertexSet, family: &CockadeFamily) -> Option<CockadeCertificate> {
    let n = s.len();
    if family.edge_law(n) != Some(g.edges_within(s)) {
        return None;
    }
    for &base in &family.bases {
        if base.matches(g, s) {
            return Some(CockadeCertificate::Leaf { vertices: s, base });
        }
    }
    let sep = find_clique_separator(g, s, family.k)?;
    let comps = g.components(s - sep);
    let left = comps[0] | sep;
    let right = (s - comps[0]) | sep;
    let l = recognize_set(g, left, family)?;
    let r = recognize_set(g, right, family)?;
    Some(CockadeCertificate::Split {
        separator: sep,
        left: Box::new(l),
        right: Box::new(r),
    })
}

/// First k-clique of `g[s]` (in lexicographic vertex order) whose removal
/// disconnects `g[s]`.
fn find_clique_separator(g: &Graph, s: VertexSet, k: usize) -> Option<VertexSet> {
    fn rec(g: &Graph, s: u64, cand: u64, need: usize, acc: u64) -> Option<u64> {
        if need == 0 {
            let rest = VertexSet(s & !acc);
            return (!rest.is_empty() && !g.is_connected_set(rest)).then_some(acc);
        }
        for v in Bits(cand) {
            let later = cand & g.row(v) & !((bit(v) << 1) - 1);
            if (later.count_ones() as usize) + 1 < need {
                continue;
            }
            if let Some(c) = rec(g, s, later, need - 1, acc | bit(v)) {
                return Some(c);
            }
        }
        None
    }
    rec(g, s.bits(), s.bits(), k, 0).map(VertexSet)
}

/// All cockades of the family on at most `max_n` vertices, one per
/// isomorphism class, sorted by (order, canonical form).
pub fn enumerate_cockades(family: &CockadeFamily, max_n: usize) -> Result<Vec<Graph>> {
    if max_n > MAX_VERTICES {
        return Err(Error::TooManyVertices(max_n));
    }
    let mut seen: BTreeMap<(usize, CanonicalForm), Graph> = BTreeMap::new();
    let mut queue: VecDeque<Graph> = VecDeque::new();
    for &base in &family.bases {
        let g = base.graph();
        if g.n() <= max_n {
            let key = (g.n(), canonical_form(&g));
            if let Entry::Vacant(slot) = seen.entry(key) {
                slot.insert(g.clone());
                queue.push_back(g);
            }
        }
    }
    while let Some(g) = queue.pop_front() {
        let cliques = k_cliques(&g, family.k);
        for &base in &family.bases {
            let piece = base.graph();
            let n = g.n() + piece.n() - family.k;
            if n > max_n {
                continue;
            }
            // every base is transitive on its k-cliques, so one is enough
            let pk = k_cliques(&piece, family.k)[0];
            let piece_rest: Vec<usize> = (piece.vertices() - pk).to_vec();
            let pk = pk.to_vec();
            for &c in &cliques {
                let mut map = vec![0usize; piece.n()];
                for (a, b) in pk.iter().zip(c.iter()) {
                    map[*a] = b;
                }
                for (i, &v) in piece_rest.iter().enumerate() {
                    map[v] = g.n() + i;
                }
                let mut rows = g.rows().to_vec();
                rows.resize(n, 0);
                for (u, v) in piece.edges() {
                    rows[map[u]] |= bit(map[v]);
                    rows[map[v]] |= bit(map[u]);
                }
                let h = Graph::from_rows_unchecked(n, &rows);
                let key = (n, canonical_form(&h));
                if let Entry::Vacant(slot) = seen.entry(key) {
                    slot.insert(h.clone());
                    queue.push_back(h);
                }
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// Every k-clique of `g` as a vertex set, in lexicographic order.
pub fn k_cliques(g: &Graph, k: usize) -> Vec<VertexSet> {
    fn rec(g: &Graph, cand: u64, need: usize, acc: u64, out: &mut Vec<VertexSet>) {
        if need == 0 {
            out.push(VertexSet(acc));
            return;
        }
        for v in Bits(cand) {
            let later = cand & g.row(v) & !((bit(v) << 1) - 1);
            rec(g, later, need - 1, acc | bit(v), out);
        }
    }
    let mut out = Vec::new();
    rec(g, g.vertices().bits(), k, 0, &mut out);
    out
}
