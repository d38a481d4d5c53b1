//! graph6 encoding (McKay's format), restricted to n <= 64.
//!
//! Header: one byte `n + 63` for n <= 62, otherwise `126` followed by three
//! 6-bit big-endian groups. Body: the upper triangle in column order
//! x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte, each byte
//! offset by 63, zero padded.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            acc = (acc << 1) | ((row >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    decode_bytes(s.as_bytes())
}

pub fn decode_bytes(bytes: &[u8]) -> Result<Graph> {
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size header".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Graph6("graphs beyond 258047 vertices unsupported".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(Error::Graph6(format!("non-minimal size header for n={n}")));
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::Graph6(format!("n={n} exceeds 64")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!(
            "body has {} bytes, expected {need}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Graph6("trailing bytes after body".into()));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[need - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent reference decoder: builds the bit string explicitly.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| (a << 1) | b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn small_complete_graphs() {
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(encode(&k2), "A_");
        assert_eq!(encode(&k3), "Bw");
        assert_eq!(reference_encode(2, &[(0, 1)]), "A_");
        assert_eq!(reference_encode(3, &[(0, 1), (0, 2), (1, 2)]), "Bw");
        assert_eq!(decode("A_").unwrap(), k2);
        assert_eq!(decode("Bw").unwrap(), k3);
    }

    #[test]
    fn matches_reference_for_known_graph() {
        // same 5-vertex graph as the petgraph fixture: a-c a-e b-d d-e
        let edges = [(0, 2), (0, 4), (1, 3), (3, 4)];
        let g = Graph::from_edges(5, &edges).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(encode(&g), reference_encode(5, &edges));
    }

    #[test]
    fn empty_and_trivial() {
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(decode("?").unwrap().n(), 0);
    }

    #[test]
    fn large_header() {
        let g = Graph::complete(64).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(decode(&s).unwrap(), g);
        let g63 = Graph::empty(63).unwrap();
        assert_eq!(decode(&encode(&g63)).unwrap(), g63);
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("A").is_err()); // missing body
        assert!(decode("A_?").is_err()); // trailing garbage
        assert!(decode("A`").is_err()); // padding bit set
        assert!(decode("A_\n").is_err());
        assert!(decode("~?@A").is_err()); // n = 65
        assert!(decode("~??_").is_err()); // non-minimal header for n = 32
    }
}
