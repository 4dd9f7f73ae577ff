//! Interchange formats: graph6 (single-byte header, n <= 62) and a plain
//! edge-list format ("n m" header, then one "u v" pair per line, 0-based).
//!
//! graph6 packs the upper triangle column by column -- (0,1), (0,2), (1,2),
//! (0,3), ... -- into 6-bit groups, most significant bit first, each group
//! offset by 63 into the printable range.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_MAX: usize = 62;

pub fn graph6_encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX {
        return Err(Error::InvalidParameter(format!(
            "graph6 supports n <= {GRAPH6_MAX}, got {n}"
        )));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            group = (group << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    Ok(out)
}

pub fn graph6_decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "empty input".into(),
        });
    }
    let header = bytes[0];
    if !(63..=126).contains(&header) {
        return Err(Error::Graph6 {
            offset: 0,
            reason: format!("size byte {header} outside printable range 63..=126"),
        });
    }
    let n = (header - 63) as usize;
    if n > GRAPH6_MAX {
        // 126 introduces the multi-byte size forms, which we do not accept.
        return Err(Error::Graph6 {
            offset: 0,
            reason: "multi-byte size header (n > 62) not supported".into(),
        });
    }
    let bits = n * (n.saturating_sub(1)) / 2;
    let expected = bits.div_ceil(6);
    if bytes.len() != 1 + expected {
        return Err(Error::Graph6 {
            offset: bytes.len().min(1 + expected),
            reason: format!(
                "expected {} data bytes for n = {n}, found {}",
                expected,
                bytes.len() - 1
            ),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit_index = 0;
    for (i, &byte) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&byte) {
            return Err(Error::Graph6 {
                offset: i,
                reason: format!("data byte {byte} outside printable range 63..=126"),
            });
        }
        let group = byte - 63;
        for shift in (0..6).rev() {
            if bit_index >= bits {
                if group >> shift & 1 == 1 {
                    return Err(Error::Graph6 {
                        offset: i,
                        reason: "nonzero padding bits".into(),
                    });
                }
                continue;
            }
            if group >> shift & 1 == 1 {
                let (row, col) = pair_at(bit_index);
                g.add_edge(row, col);
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

/// The `index`-th pair in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
pub(crate) fn pair_at(index: usize) -> (usize, usize) {
    let mut col = 1;
    let mut before = 0;
    while before + col <= index {
        before += col;
        col += 1;
    }
    (index - before, col)
}

pub fn edge_list_encode(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn edge_list_decode(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing \"n m\" header".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::EdgeList(format!("bad header `{header}`")))?;
    let m: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::EdgeList(format!("bad header `{header}`")))?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line `{line}`")))?;
        let v: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line `{line}`")))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeList(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| Error::EdgeList(e.to_string()))?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::testutil::random_graph;

    #[test]
    fn decodes_format_defined_examples() {
        assert_eq!(graph6_decode("A_").unwrap(), Graph::complete(2));
        assert_eq!(graph6_decode("Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn encodes_c5() {
        let c5 = Graph::cycle(5).unwrap();
        // Cross-checked against an independent graph6 codec.
        assert_eq!(graph6_encode(&c5).unwrap(), "Dhc");
        assert_eq!(graph6_decode("Dhc").unwrap(), c5);
    }

    #[test]
    fn round_trip_random_graphs() {
        let mut rng = SplitMix64::new(6);
        for _ in 0..300 {
            let n = rng.next_below(13);
            let g = random_graph(n, rng.next_f64(), &mut rng);
            let text = graph6_encode(&g).unwrap();
            assert_eq!(graph6_decode(&text).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            graph6_decode(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        // Truncated data section for n = 5.
        assert!(graph6_decode("D").is_err());
        // Byte below the printable offset.
        let err = graph6_decode("B:").unwrap_err();
        match err {
            Error::Graph6 { offset, .. } => assert_eq!(offset, 1),
            other => panic!("unexpected error {other:?}"),
        }
        // 126 starts the multi-byte size form.
        assert!(graph6_decode("~??").is_err());
    }

    #[test]
    fn zero_and_one_vertex_graphs() {
        assert_eq!(graph6_encode(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(graph6_decode("?").unwrap().n(), 0);
        assert_eq!(graph6_decode("@").unwrap().n(), 1);
    }

    #[test]
    fn encode_rejects_orders_beyond_single_byte_header() {
        assert!(graph6_encode(&Graph::empty(63)).is_err());
        assert!(graph6_encode(&Graph::empty(62)).is_ok());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::complete(1).join(&Graph::matching(2));
        let text = edge_list_encode(&g);
        assert_eq!(edge_list_decode(&text).unwrap(), g);
        assert!(edge_list_decode("3").is_err());
        assert!(edge_list_decode("2 1\n0 5\n").is_err());
        assert!(edge_list_decode("2 2\n0 1\n").is_err());
    }
}
