//! McKay's graph6 format: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};

const HEADER: &str = ">>graph6<<";

fn check_byte(b: u8, offset: usize) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::NonPrintableByte(b, offset))
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or(Error::BadChecksumLength(0))?;
    if first != 126 {
        return Ok((check_byte(first, 0)? as usize, 1));
    }
    let (start, len) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    if bytes.len() < start + len {
        return Err(Error::BadChecksumLength(0));
    }
    let mut n = 0usize;
    for (i, &b) in bytes[start..start + len].iter().enumerate() {
        n = (n << 6) | check_byte(b, start + i)? as usize;
    }
    Ok((n, start + len))
}

/// Decode one graph6 line (trailing newline and a leading `>>graph6<<` header allowed).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, body_start) = decode_size(bytes)?;
    let body = &bytes[body_start..];
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::BadChecksumLength(n));
    }
    let mut values = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        values.push(check_byte(b, body_start + i)?);
    }
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
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
    build_graph(n, &edges).map_err(|e| match e {
        Error::Disconnected { .. } => Error::DisconnectedAfterParse,
        other => other,
    })
}

/// Encode a graph as a graph6 line without a trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
