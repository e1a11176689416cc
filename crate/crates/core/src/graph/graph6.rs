//! The graph6 interchange format, short form only (`n <= 62`).
//!
//! A header byte `n + 63` is followed by the upper triangle of the adjacency
//! matrix, read column by column as `(0,1), (0,2), (1,2), (0,3), ..`, packed
//! into 6-bit groups (most significant bit first) that are each offset by 63.

use super::Graph;
use crate::error::{Error, Graph6Fault, Result};

pub const MAX_SHORT_FORM: usize = 62;

const OFFSET: u8 = 63;

fn fault(offset: usize, fault: Graph6Fault) -> Error {
    Error::Graph6 { offset, fault }
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let (&header, payload) = text.split_first().ok_or(fault(0, Graph6Fault::Empty))?;
    if !(OFFSET..=126).contains(&header) {
        return Err(fault(0, Graph6Fault::ByteOutOfRange(header)));
    }
    if header == 126 {
        return Err(fault(0, Graph6Fault::LongFormUnsupported));
    }
    let n = usize::from(header - OFFSET);
    if n == 0 {
        return Err(fault(0, Graph6Fault::NoVertices));
    }
    let expected = payload_len(n);
    for (k, &byte) in payload.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(fault(k + 1, Graph6Fault::ByteOutOfRange(byte)));
        }
    }
    if payload.len() < expected {
        return Err(fault(text.len(), Graph6Fault::TooShort { expected, found: payload.len() }));
    }
    if payload.len() > expected {
        return Err(fault(expected + 1, Graph6Fault::TooLong { expected, found: payload.len() }));
    }

    let bit = |k: usize| (payload[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let mut adjacency = vec![false; n * n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                adjacency[u * n + v] = true;
                adjacency[v * n + u] = true;
            }
            k += 1;
        }
    }
    if (k..expected * 6).any(bit) {
        return Err(fault(expected, Graph6Fault::NonZeroPadding));
    }
    Ok(Graph::from_adjacency(n, adjacency))
}

pub fn serialize_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_FORM {
        return Err(Error::UnsupportedSize { n });
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + OFFSET);
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Bit-level reference decoder written independently of `parse_graph6`.
    fn reference_edges(text: &str) -> Vec<(usize, usize)> {
        let bytes = text.as_bytes();
        let n = (bytes[0] - 63) as usize;
        let bits: Vec<u8> = bytes[1..]
            .iter()
            .flat_map(|b| {
                let x = b - 63;
                (0..6).rev().map(move |s| (x >> s) & 1)
            })
            .collect();
        let mut pairs = Vec::new();
        for v in 1..n {
            for u in 0..v {
                pairs.push((u, v));
            }
        }
        pairs.into_iter().zip(bits).filter(|&(_, b)| b == 1).map(|(p, _)| p).collect()
    }

    #[test]
    fn decodes_small_examples() {
        for (text, n, edges) in [
            ("A_", 2, vec![(0, 1)]),
            ("Bw", 3, vec![(0, 1), (0, 2), (1, 2)]),
            ("Bg", 3, vec![(0, 1), (1, 2)]),
            ("@", 1, vec![]),
        ] {
            let g = parse_graph6(text.as_bytes()).unwrap();
            assert_eq!(g.n(), n);
            assert_eq!(g.edges().collect::<Vec<_>>(), edges);
            assert_eq!(reference_edges(text), edges);
            assert_eq!(serialize_graph6(&g).unwrap(), text);
        }
    }

    #[test]
    fn petgraph_reference_string() {
        // Edges a-c, a-e, b-d, d-e on five vertices.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(serialize_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn errors_carry_offsets() {
        let err = |s: &[u8]| match parse_graph6(s) {
            Err(Error::Graph6 { offset, fault }) => (offset, fault),
            other => panic!("expected graph6 error, got {other:?}"),
        };
        assert_eq!(err(b""), (0, Graph6Fault::Empty));
        assert_eq!(err(b" _"), (0, Graph6Fault::ByteOutOfRange(b' ')));
        assert_eq!(err(b"~"), (0, Graph6Fault::LongFormUnsupported));
        assert_eq!(err(b"?"), (0, Graph6Fault::NoVertices));
        assert_eq!(err(b"B"), (1, Graph6Fault::TooShort { expected: 1, found: 0 }));
        assert_eq!(err(b"Bww"), (2, Graph6Fault::TooLong { expected: 1, found: 2 }));
        assert_eq!(err(b"C~\x7f"), (2, Graph6Fault::ByteOutOfRange(0x7f)));
        assert_eq!(err(b"A`"), (1, Graph6Fault::NonZeroPadding));
    }

    #[test]
    fn long_form_sizes_are_refused() {
        let g = Graph::empty(63);
        assert!(matches!(serialize_graph6(&g), Err(Error::UnsupportedSize { n: 63 })));
    }
}
