//! graph6 text encoding for graphs on fewer than 63 vertices.
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! six bits per byte (most significant first), each byte offset by 63.
//! The final byte is zero-padded.

use super::{Graph, GraphError};

const OFFSET: u8 = 63;
const MAX_N: usize = 62;

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(msg.into())
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph6 encoding supports n <= {MAX_N}, got {n}");
    let mut out = vec![n as u8 + OFFSET];
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    let (&head, body) = bytes.split_first().ok_or_else(|| malformed("empty input"))?;
    if !(OFFSET..=OFFSET + MAX_N as u8).contains(&head) {
        return Err(malformed(format!(
            "size byte {head} outside {OFFSET}..={} (only n < 63 is supported)",
            OFFSET + MAX_N as u8
        )));
    }
    let n = (head - OFFSET) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut values = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        if !(OFFSET..=OFFSET + 63).contains(&b) {
            return Err(malformed(format!("byte {} ({b}) out of range", i + 1)));
        }
        values.push(b - OFFSET);
    }
    let bit = |k: usize| (values[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v).expect("u < v < n");
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    Ok(g)
}

/// Parses a newline-delimited graph6 stream, skipping blank lines and the
/// optional `>>graph6<<` header. Errors carry the 1-based line number.
pub fn parse_graph6_stream(text: &str) -> Vec<(usize, Result<Graph, GraphError>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let line = line.trim();
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            (!line.is_empty()).then(|| (i + 1, parse_graph6(line)))
        })
        .collect()
}
