//! graph6 encoding: the order word followed by the upper triangle of the
//! adjacency matrix in column-major bit order `x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`, packed into 6-bit groups, each emitted as `group + 63`.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Encodes a graph as printable graph6 bytes.
///
/// Orders up to 62 use the one-byte order word; 63 and 64 use the
/// `126`-prefixed three-byte form.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}

/// Decodes graph6 bytes produced by [`graph6_encode`].
pub fn graph6_decode(bytes: &[u8]) -> Result<Graph> {
    let bad = |msg: &str| Error::Graph6(msg.to_string());
    let (n, payload) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, ..] => return Err(bad("8-byte order words are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated order word"));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                if !(63..=126).contains(&b) {
                    return Err(bad("order byte out of range"));
                }
                n = (n << 6) | (b - 63) as usize;
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => {
            if !(63..=125).contains(b) {
                return Err(bad("order byte out of range"));
            }
            ((b - 63) as usize, rest)
        }
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let expect = nbits.div_ceil(6);
    if payload.len() != expect {
        return Err(bad(&format!(
            "payload has {} bytes, expected {expect}",
            payload.len()
        )));
    }
    let mut edges = Vec::new();
    let mut pos = 0usize;
    for &b in payload {
        if !(63..=126).contains(&b) {
            return Err(bad("payload byte out of range"));
        }
        let group = b - 63;
        for k in 0..6 {
            let bit = (group >> (5 - k)) & 1;
            if pos < nbits {
                if bit == 1 {
                    let (i, j) = unrank_upper(pos);
                    edges.push((i, j));
                }
            } else if bit == 1 {
                return Err(bad("nonzero padding bits"));
            }
            pos += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Maps a column-major upper-triangle bit position back to `(i, j)`, `i < j`.
fn unrank_upper(pos: usize) -> (usize, usize) {
    // column j holds positions [j(j-1)/2, j(j+1)/2)
    let mut j = 1;
    while j * (j + 1) / 2 <= pos {
        j += 1;
    }
    (pos - j * (j - 1) / 2, j)
}
