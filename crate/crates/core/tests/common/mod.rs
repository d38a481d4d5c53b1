//! Slow, obviously-correct oracles shared by the integration tests.
#![allow(dead_code)]

use minorlab_core::{Graph, VertexSet};

/// Calls `f` with every set partition of 0..m as a block label per element
/// (restricted growth strings).
pub fn for_each_partition(m: usize, f: &mut impl FnMut(&[usize], usize)) {
    fn rec(i: usize, m: usize, labels: &mut Vec<usize>, blocks: usize, f: &mut impl FnMut(&[usize], usize)) {
        if i == m {
            f(labels, blocks);
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            rec(i + 1, m, labels, blocks.max(b + 1), f);
            labels.pop();
        }
    }
    rec(0, m, &mut Vec::with_capacity(m), 0, f);
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn connected(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() {
        return false;
    }
    let mut seen = vec![s[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &v in s {
            if !seen.contains(&v) && g.has_edge(u, v) {
                seen.push(v);
            }
        }
        i += 1;
    }
    seen.len() == s.len()
}

/// Partitions V(g) plus a sentinel; the sentinel's block is deleted and the
/// other blocks must be exactly |h| connected branch sets.
pub fn naive_minor(g: &Graph, h: &Graph) -> bool {
    let (n, k) = (g.n(), h.n());
    if k > n {
        return false;
    }
    let perms = permutations(k);
    let h_edges: Vec<(usize, usize)> = h.edges().collect();
    let mut found = false;
    for_each_partition(n + 1, &mut |labels, blocks| {
        if found {
            return;
        }
        let dropped = labels[n];
        if blocks != k + 1 {
            return;
        }
        let mut sets: Vec<Vec<usize>> = vec![Vec::new(); blocks];
        for (v, &b) in labels[..n].iter().enumerate() {
            sets[b].push(v);
        }
        let kept: Vec<Vec<usize>> = (0..blocks).filter(|&b| b != dropped).map(|b| sets[b].clone()).collect();
        if !kept.iter().all(|s| connected(g, s)) {
            return;
        }
        let adj = |a: &[usize], b: &[usize]| a.iter().any(|&x| b.iter().any(|&y| g.has_edge(x, y)));
        for p in &perms {
            if h_edges.iter().all(|&(u, v)| adj(&kept[p[u]], &kept[p[v]])) {
                found = true;
                return;
            }
        }
    });
    found
}

/// Smallest separating set size by subset enumeration; n - 1 for cliques.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.n();
    for size in 0..n.saturating_sub(1) {
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            if rest.len() >= 2 && !connected(g, &rest) {
                return size;
            }
        }
    }
    n.saturating_sub(1)
}

/// Every non-root vertex goes to one of the four root sets or is deleted.
pub fn naive_rooted_k4(g: &Graph, roots: [usize; 4]) -> bool {
    let others: Vec<usize> = (0..g.n()).filter(|v| !roots.contains(v)).collect();
    let total = 5usize.pow(others.len() as u32);
    'outer: for code in 0..total {
        let mut sets: Vec<Vec<usize>> = roots.iter().map(|&r| vec![r]).collect();
        let mut c = code;
        for &v in &others {
            if c % 5 < 4 {
                sets[c % 5].push(v);
            }
            c /= 5;
        }
        for s in &sets {
            if !connected(g, s) {
                continue 'outer;
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if !sets[i].iter().any(|&x| sets[j].iter().any(|&y| g.has_edge(x, y))) {
                    continue 'outer;
                }
            }
        }
        return true;
    }
    false
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 0..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

pub fn set(vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(vs.iter().copied())
}
