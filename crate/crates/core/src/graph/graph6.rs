use super::Graph;
use crate::error::{Error, Result};

/// Largest order representable by the one-byte graph6 size header.
pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

/// Encodes `g` as a graph6 line (without newline).
///
/// Bits run over the upper triangle column by column,
/// `(0,1), (0,2), (1,2), (0,3), ...`, six to a byte, offset by 63.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::InvalidParameter(format!("graph6 output supports n <= {GRAPH6_MAX_ORDER}, got {n}")));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut byte = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            byte = (byte << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((byte + 63) as char);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((byte << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses one graph6 line. A leading `>>graph6<<` header and a trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match body.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, body),
    };
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(err(skip, "empty input"));
    };
    if !(63..=126).contains(&first) {
        return Err(err(skip, format!("size byte {first} outside 63..=126")));
    }
    if first == 126 {
        return Err(err(skip, format!("orders above {GRAPH6_MAX_ORDER} are not supported")));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() < expected {
        return Err(err(skip + bytes.len(), format!("expected {expected} bytes for n={n}, got {}", bytes.len())));
    }
    if bytes.len() > expected {
        return Err(err(skip + expected, "trailing data after graph"));
    }
    let mut g = Graph::empty(n);
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for (idx, &b) in bytes[1..].iter().enumerate() {
        let offset = skip + 1 + idx;
        if !(63..=126).contains(&b) {
            return Err(err(offset, format!("byte {b} outside 63..=126")));
        }
        let value = b - 63;
        for shift in (0..6).rev() {
            let bit = (value >> shift) & 1 == 1;
            match pairs.next() {
                Some((i, j)) => {
                    if bit {
                        g.add_edge(i, j)?;
                    }
                }
                None if bit => return Err(err(offset, "non-zero padding bit")),
                None => {}
            }
        }
    }
    Ok(g)
}
