//! Deterministic constructions of the named graphs used throughout the lab.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedGraph {
    Complete(usize),
    /// K_t minus the edge v0v1.
    CompleteMinusEdge(usize),
    /// K_t minus {v0v1, v0v2} when `shared`, minus {v0v1, v2v3} otherwise.
    CompleteMinusTwoEdges { t: usize, shared: bool },
    /// Parts are consecutive index blocks in the order given.
    CompleteMultipartite(Vec<usize>),
    CycleComplement(usize),
    /// Outer cycle v0..v4, spokes v_i v_{i+5}, inner cycle v5 v7 v9 v6 v8.
    Petersen,
    PetersenComplement,
    C5barJoinC4bar,
    C6barJoinK3bar,
    K333,
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// The 15 edges of the Petersen graph under the fixed labelling.
pub const PETERSEN_EDGES: [(usize, usize); 15] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (0, 4),
    (0, 5),
    (1, 6),
    (2, 7),
    (3, 8),
    (4, 9),
    (5, 7),
    (7, 9),
    (6, 9),
    (6, 8),
    (5, 8),
];

impl NamedGraph {
    pub fn build(&self) -> Result<Graph> {
        match self {
            NamedGraph::Complete(t) => {
                check_size(*t, 1, "complete graph")?;
                Graph::complete(*t)
            }
            NamedGraph::CompleteMinusEdge(t) => {
                check_size(*t, 2, "K_t^-")?;
                Graph::complete(*t)?.remove_edge(0, 1)
            }
            NamedGraph::CompleteMinusTwoEdges { t, shared } => {
                check_size(*t, if *shared { 3 } else { 4 }, "K_t^=")?;
                let k = Graph::complete(*t)?.remove_edge(0, 1)?;
                if *shared {
                    k.remove_edge(0, 2)
                } else {
                    k.remove_edge(2, 3)
                }
            }
            NamedGraph::CompleteMultipartite(parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(Error::InvalidParameter(
                        "multipartite parts must be nonempty and of size >= 1".into(),
                    ));
                }
                let n: usize = parts.iter().sum();
                let mut g = Graph::complete(check_size(n, 1, "multipartite graph")?)?;
                let mut start = 0;
                for &p in parts {
                    for u in start..start + p {
                        for v in u + 1..start + p {
                            g.clear_edge(u, v);
                        }
                    }
                    start += p;
                }
                Ok(g)
            }
            NamedGraph::CycleComplement(n) => Ok(cycle(*n)?.complement()),
            NamedGraph::Petersen => Graph::from_edges(10, &PETERSEN_EDGES),
            NamedGraph::PetersenComplement => Ok(NamedGraph::Petersen.build()?.complement()),
            NamedGraph::C5barJoinC4bar => cycle(5)?.complement().join(&cycle(4)?.complement()),
            NamedGraph::C6barJoinK3bar => cycle(6)?.complement().join(&Graph::empty(3)?),
            NamedGraph::K333 => NamedGraph::CompleteMultipartite(vec![3, 3, 3]).build(),
        }
    }

    /// The five exceptional graphs of the K7= + K1 search, in listing order.
    pub fn exceptional() -> [NamedGraph; 5] {
        [
            NamedGraph::C5barJoinC4bar,
            NamedGraph::CycleComplement(9),
            NamedGraph::K333,
            NamedGraph::C6barJoinK3bar,
            NamedGraph::PetersenComplement,
        ]
    }
}

fn check_size(n: usize, min: usize, what: &str) -> Result<usize> {
    if n < min {
        return Err(Error::InvalidParameter(format!("{what} needs at least {min} vertices, got {n}")));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok(n)
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Complete(t) => write!(f, "K{t}"),
            NamedGraph::CompleteMinusEdge(t) => write!(f, "K{t}-"),
            NamedGraph::CompleteMinusTwoEdges { t, shared: true } => write!(f, "K{t}=shared"),
            NamedGraph::CompleteMinusTwoEdges { t, shared: false } => write!(f, "K{t}=disjoint"),
            NamedGraph::CompleteMultipartite(p) => {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "K{{{}}}", parts.join(","))
            }
            NamedGraph::CycleComplement(n) => write!(f, "C{n}bar"),
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::PetersenComplement => write!(f, "petersen-bar"),
            NamedGraph::C5barJoinC4bar => write!(f, "C5bar+C4bar"),
            NamedGraph::C6barJoinK3bar => write!(f, "C6bar+K3bar"),
            NamedGraph::K333 => write!(f, "K333"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts the `Display` forms, case-insensitively. Multipartite graphs
    /// may also be written `K2,2,2`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let bad = || Error::InvalidParameter(format!("unknown graph name '{s}'"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match lower.as_str() {
            "petersen" => return Ok(NamedGraph::Petersen),
            "petersen-bar" | "pbar" => return Ok(NamedGraph::PetersenComplement),
            "c5bar+c4bar" => return Ok(NamedGraph::C5barJoinC4bar),
            "c6bar+k3bar" => return Ok(NamedGraph::C6barJoinK3bar),
            "k333" => return Ok(NamedGraph::K333),
            _ => {}
        }
        if let Some(rest) = lower.strip_prefix('c') {
            if let Some(n) = rest.strip_suffix("bar") {
                return Ok(NamedGraph::CycleComplement(num(n)?));
            }
            return Err(bad());
        }
        let rest = lower.strip_prefix('k').ok_or_else(bad)?;
        if let Some(inner) = rest.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            return parts(inner).map(NamedGraph::CompleteMultipartite).ok_or_else(bad);
        }
        if rest.contains(',') {
            return parts(rest).map(NamedGraph::CompleteMultipartite).ok_or_else(bad);
        }
        if let Some(t) = rest.strip_suffix("=shared") {
            return Ok(NamedGraph::CompleteMinusTwoEdges { t: num(t)?, shared: true });
        }
        if let Some(t) = rest.strip_suffix("=disjoint") {
            return Ok(NamedGraph::CompleteMinusTwoEdges { t: num(t)?, shared: false });
        }
        if let Some(t) = rest.strip_suffix('-') {
            return Ok(NamedGraph::CompleteMinusEdge(num(t)?));
        }
        Ok(NamedGraph::Complete(num(rest)?))
    }
}

fn parts(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|p| p.trim().parse().ok()).collect()
}
