//! Text formats: graph6 and a plain edge list.
//!
//! graph6 packs the upper-triangular adjacency bits column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups offset by 63,
//! prefixed by the vertex count. The edge list is `n m` on the first line and
//! then `m` lines `u v` with `u < v`, sorted ascending.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = (1 << 36) - 1;

fn push_size(out: &mut String, n: usize) {
    let push_groups = |out: &mut String, value: usize, groups: u32| {
        for g in (0..groups).rev() {
            out.push(char::from(((value >> (6 * g)) & 0x3f) as u8 + 63));
        }
    };
    if n <= SHORT_MAX {
        out.push(char::from(n as u8 + 63));
    } else if n <= MEDIUM_MAX {
        out.push('~');
        push_groups(out, n, 3);
    } else {
        out.push('~');
        out.push('~');
        push_groups(out, n, 6);
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= LONG_MAX, "graph6 cannot encode {n} vertices");
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + 63));
    }
    out
}

fn sixes(bytes: &[u8]) -> Result<Vec<u8>> {
    bytes
        .iter()
        .map(|&b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Error::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")))
            }
        })
        .collect()
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let data = sixes(s.as_bytes())?;
    if data.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    let read = |groups: &[u8]| groups.iter().fold(0usize, |acc, &g| (acc << 6) | g as usize);
    let (n, body) = if data[0] != 63 {
        (data[0] as usize, &data[1..])
    } else if data.len() >= 2 && data[1] == 63 {
        if data.len() < 8 {
            return Err(Error::Graph6("truncated 8-byte size prefix".into()));
        }
        (read(&data[2..8]), &data[8..])
    } else {
        if data.len() < 4 {
            return Err(Error::Graph6("truncated 4-byte size prefix".into()));
        }
        (read(&data[1..4]), &data[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    let mut k = 0;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

pub fn encode_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn decode_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let numbers = |line: Option<&str>, what: &str| -> Result<(usize, usize)> {
        let line = line.ok_or_else(|| Error::EdgeList(format!("missing {what} line")))?;
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(Error::EdgeList(format!("{what} line {line:?} needs two integers")));
        }
        let parse = |p: &str| {
            p.parse::<usize>()
                .map_err(|e| Error::EdgeList(format!("{what} line {line:?}: {e}")))
        };
        Ok((parse(parts[0])?, parse(parts[1])?))
    };
    let (n, m) = numbers(lines.next(), "header")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        edges.push(numbers(lines.next(), "edge")?);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::EdgeList(format!("unexpected trailing line {extra:?}")));
    }
    Graph::new(n, &edges)
}

/// Reads either format. A first line made of two integers is taken as an
/// edge list, anything else as graph6.
pub fn decode_any(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let is_edge_list = {
        let parts: Vec<&str> = first.split_whitespace().collect();
        parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok())
    };
    if is_edge_list {
        decode_edge_list(text)
    } else {
        decode_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_known_strings() {
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(encode_graph6(&Graph::new(2, &[(0, 1)]).unwrap()), "A_");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(decode_graph6("DQc").unwrap(), g);
        assert_eq!(decode_graph6(">>graph6<<A_\n").unwrap(), Graph::new(2, &[(0, 1)]).unwrap());
    }

    #[test]
    fn medium_size_prefix() {
        let n = 100;
        let g = Graph::from_fn(n, |u, v| v == u + 1);
        let s = encode_graph6(&g);
        assert!(s.starts_with("~?@c"));
        // 100 = 0b000001_100100 in the last two groups
        assert_eq!(&s.as_bytes()[1..4], &[63, 63 + 1, 63 + 36]);
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("A").is_err());
        assert!(decode_graph6("A_?").is_err());
        assert!(decode_graph6("A`").is_err()); // padding bit set
        assert!(decode_graph6("A\u{7f}").is_err());
        assert!(decode_edge_list("3 1\n0 3\n").is_err());
        assert!(decode_edge_list("3 2\n0 1\n").is_err());
        assert!(decode_edge_list("3 1\n0 1\n1 2\n").is_err());
    }

    #[test]
    fn edge_list_layout() {
        let g = Graph::new(4, &[(2, 3), (1, 0)]).unwrap();
        assert_eq!(encode_edge_list(&g), "4 2\n0 1\n2 3\n");
        assert_eq!(decode_any("4 2\n0 1\n2 3\n").unwrap(), g);
        assert_eq!(decode_any(&encode_graph6(&g)).unwrap(), g);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..=70, seed in any::<u64>()) {
            let mut s = seed | 1;
            let g = Graph::from_fn(n, |_, _| {
                s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                s & 3 == 0
            });
            prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(decode_edge_list(&encode_edge_list(&g)).unwrap(), g);
        }
    }
}
