//! graph6 encoding (McKay). Six-bit groups are written as bytes `63..=126`.
//!
//! `N(n)` is one byte for `n <= 62`, `126` followed by three bytes for
//! `n <= 258047`, and `126 126` followed by six bytes otherwise. The adjacency
//! bits are the upper triangle read column by column,
//! `x(0,1) x(0,2) x(1,2) x(0,3) ...`, padded with zeros to a multiple of six.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    let groups = |x: usize, count: usize, out: &mut Vec<u8>| {
        for k in (0..count).rev() {
            out.push(((x >> (6 * k)) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        groups(n, 3, out);
    } else {
        out.push(126);
        out.push(126);
        groups(n, 6, out);
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(Error::Parse(format!(
            "graph6 byte {} at offset {pos} is outside 63..=126",
            bytes[pos]
        )));
    }
    let (n, body) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body for n={n} needs {expected} bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| -> bool {
        let byte = body[k / 6] - BIAS;
        byte >> (5 - k % 6) & 1 == 1
    };
    if (bits..expected * 6).any(bit) {
        return Err(Error::Parse("graph6 padding bits are not zero".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let read = |slice: &[u8]| {
        slice
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize)
    };
    if bytes[0] != 126 {
        return Ok(((bytes[0] - BIAS) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::Parse("truncated 8-byte graph6 size".into()));
        }
        return Ok((read(&bytes[2..8]), &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(Error::Parse("truncated 4-byte graph6 size".into()));
    }
    Ok((read(&bytes[1..4]), &bytes[4..]))
}
