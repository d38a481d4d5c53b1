//! Canonical labelling by equitable partition refinement and
//! individualisation-refinement search.
//!
//! Leaves of the search tree are compared by their relabelled adjacency rows;
//! the lexicographically smallest one is canonical. Automorphisms discovered
//! at equal leaves prune sibling branches in the same orbit (restricted to
//! automorphisms fixing the current path pointwise) and trigger a jump back to
//! the node where the current path leaves the best path.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{bit, Bits, Graph, MAX_VERTICES};
use crate::graph6;

/// Ordered partition of the vertex set into cells (bit masks).
#[derive(Clone, Copy)]
struct Cells {
    cells: [u64; MAX_VERTICES],
    len: usize,
}

impl Cells {
    fn is_discrete(&self, n: usize) -> bool {
        self.len == n
    }
}

fn refine(g: &Graph, p: &mut Cells) {
    let mut stack = [0u64; 4 * MAX_VERTICES];
    let mut top = 0;
    for i in (0..p.len).rev() {
        stack[top] = p.cells[i];
        top += 1;
    }
    let n = g.n();
    while top > 0 {
        if p.len == n {
            return;
        }
        top -= 1;
        let w = stack[top];
        let mut i = 0;
        while i < p.len {
            let c = p.cells[i];
            if c & (c - 1) == 0 {
                i += 1;
                continue;
            }
            let mut counts = [0u8; MAX_VERTICES];
            let mut seen = 0u64;
            for x in Bits(c) {
                let k = (g.row(x) & w).count_ones() as u8;
                counts[x] = k;
                seen |= 1u64 << k;
            }
            if seen & (seen - 1) == 0 {
                i += 1;
                continue;
            }
            let groups = seen.count_ones() as usize;
            // shift tail right to make room for the extra groups
            let extra = groups - 1;
            for j in (i + 1..p.len).rev() {
                p.cells[j + extra] = p.cells[j];
            }
            p.len += extra;
            for (slot, k) in (i..).zip(Bits(seen)) {
                let mut m = 0u64;
                for x in Bits(c) {
                    if counts[x] as usize == k {
                        m |= bit(x);
                    }
                }
                p.cells[slot] = m;
                stack[top] = m;
                top += 1;
            }
            i += groups;
        }
    }
}

/// Splits cell `idx` into `{x}` followed by the remainder.
fn individualize(p: &Cells, idx: usize, x: usize) -> Cells {
    let mut q = *p;
    for j in (idx + 1..q.len).rev() {
        q.cells[j + 1] = q.cells[j];
    }
    q.cells[idx] = bit(x);
    q.cells[idx + 1] = p.cells[idx] & !bit(x);
    q.len += 1;
    q
}

fn target_cell(p: &Cells) -> usize {
    let mut best = usize::MAX;
    let mut size = u32::MAX;
    for i in 0..p.len {
        let s = p.cells[i].count_ones();
        if s > 1 && s < size {
            size = s;
            best = i;
        }
    }
    best
}

type Cert = [u64; MAX_VERTICES];

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<(Cert, [u8; MAX_VERTICES], Vec<usize>)>,
    autos: Vec<[u8; MAX_VERTICES]>,
}

impl<'a> Search<'a> {
    fn leaf(&mut self, p: &Cells, path: &[usize]) -> Option<usize> {
        let n = self.n;
        let mut perm = [0u8; MAX_VERTICES];
        for i in 0..n {
            perm[p.cells[i].trailing_zeros() as usize] = i as u8;
        }
        let mut cert = [0u64; MAX_VERTICES];
        for x in 0..n {
            let mut row = 0u64;
            for y in Bits(self.g.row(x)) {
                row |= bit(perm[y] as usize);
            }
            cert[perm[x] as usize] = row;
        }
        match &self.best {
            None => {
                self.best = Some((cert, perm, path.to_vec()));
                None
            }
            Some((bc, bp, bpath)) => match cert[..n].cmp(&bc[..n]) {
                Ordering::Less => {
                    self.best = Some((cert, perm, path.to_vec()));
                    None
                }
                Ordering::Greater => None,
                Ordering::Equal => {
                    let mut inv = [0u8; MAX_VERTICES];
                    for x in 0..n {
                        inv[bp[x] as usize] = x as u8;
                    }
                    let mut gamma = [0u8; MAX_VERTICES];
                    for x in 0..n {
                        gamma[x] = inv[perm[x] as usize];
                    }
                    let common = bpath
                        .iter()
                        .zip(path)
                        .take_while(|(a, b)| a == b)
                        .count();
                    self.autos.push(gamma);
                    Some(common)
                }
            },
        }
    }

    /// Returns `Some(level)` when the caller should unwind to `level`.
    fn dfs(&mut self, mut p: Cells, path: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut p);
        if p.is_discrete(self.n) {
            return self.leaf(&p, path);
        }
        let depth = path.len();
        let idx = target_cell(&p);
        let cell = p.cells[idx];
        let mut tried = 0u64;
        let mut orbit_autos = 0;
        let mut parent = [0u8; MAX_VERTICES];
        for (i, slot) in parent.iter_mut().enumerate().take(self.n) {
            *slot = i as u8;
        }
        for x in Bits(cell) {
            if tried != 0 {
                // fold in automorphisms that fix the path pointwise
                while orbit_autos < self.autos.len() {
                    let gamma = self.autos[orbit_autos];
                    orbit_autos += 1;
                    if path.iter().all(|&v| gamma[v] as usize == v) {
                        for (v, &image) in gamma.iter().enumerate().take(self.n) {
                            union(&mut parent, v, image as usize);
                        }
                    }
                }
                let rx = find(&mut parent, x);
                if Bits(tried).any(|y| find(&mut parent, y) == rx) {
                    continue;
                }
            }
            tried |= bit(x);
            let child = individualize(&p, idx, x);
            path.push(x);
            let r = self.dfs(child, path);
            path.pop();
            if let Some(level) = r {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

fn find(parent: &mut [u8; MAX_VERTICES], mut x: usize) -> usize {
    while parent[x] as usize != x {
        let p = parent[x] as usize;
        parent[x] = parent[p];
        x = p;
    }
    x
}

fn union(parent: &mut [u8; MAX_VERTICES], a: usize, b: usize) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo as u8;
    }
}

/// Canonical relabelling: `perm[v]` is the canonical label of vertex `v`.
/// `colors`, if given, is an ordered partition that labels must respect.
pub(crate) fn canonical_perm(g: &Graph, colors: Option<&[u64]>) -> [u8; MAX_VERTICES] {
    let n = g.n();
    let mut p = Cells {
        cells: [0; MAX_VERTICES],
        len: 0,
    };
    if n == 0 {
        return [0; MAX_VERTICES];
    }
    match colors {
        Some(cs) => {
            for &c in cs.iter().filter(|&&c| c != 0) {
                p.cells[p.len] = c;
                p.len += 1;
            }
        }
        None => {
            p.cells[0] = g.vertices().bits();
            p.len = 1;
        }
    }
    let mut s = Search {
        g,
        n,
        best: None,
        autos: Vec::new(),
    };
    let mut path = Vec::with_capacity(n);
    s.dfs(p, &mut path);
    s.best.expect("search reaches at least one leaf").1
}

pub(crate) fn canonical_graph_colored(g: &Graph, colors: Option<&[u64]>) -> Graph {
    let perm = canonical_perm(g, colors);
    let perm: Vec<usize> = perm[..g.n()].iter().map(|&x| x as usize).collect();
    g.permute_unchecked(&perm)
}

/// Canonical relabelling of `g` as a vertex map old -> new.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonical_perm(g, None)[..g.n()]
        .iter()
        .map(|&x| x as usize)
        .collect()
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_graph_colored(g, None)
}

/// Isomorphism-invariant key: graph6 of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical form holds valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(graph6::encode(&canonical_graph(g)))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_graph(g) == canonical_graph(h)
}
