//! The short form of the graph6 format (`n <= 62`).
//!
//! After a one-byte header `n + 63`, the upper triangle of the adjacency
//! matrix is written column by column, `(0,1), (0,2), (1,2), (0,3), ...`,
//! six bits per byte, most significant bit first, each byte offset by 63.
//! That column order is the crate's pair order, so bit `k` of the string is
//! bit `k` of [`LabeledGraph::bits`].

use edgedeck_core::arith::pair_count;
use edgedeck_core::graph::MAX_VERTICES;
use edgedeck_core::LabeledGraph;
use thiserror::Error;

/// Largest vertex count expressible with a one-byte header.
pub const SHORT_FORM_MAX: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: {byte:#04x} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: multi-byte length headers are not supported")]
    LongHeader { offset: usize },
    #[error("byte 0: {n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("byte {offset}: expected {expected} bytes for {n} vertices, found {found}")]
    Length {
        offset: usize,
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: padding bits are not zero")]
    Padding { offset: usize },
}

/// Encodes `g`; always succeeds since [`LabeledGraph`] is far below
/// [`SHORT_FORM_MAX`] vertices.
pub fn encode(g: &LabeledGraph) -> String {
    let n = g.n();
    let total = pair_count(n);
    let mut out = String::with_capacity(1 + total.div_ceil(6));
    out.push((n as u8 + 63) as char);
    let bits = g.bits();
    for chunk in 0..total.div_ceil(6) {
        let mut six = 0u8;
        for b in 0..6 {
            let k = chunk * 6 + b;
            if k < total && bits >> k & 1 == 1 {
                six |= 1 << (5 - b);
            }
        }
        out.push((six + 63) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<LabeledGraph, Graph6Error> {
    let bytes = text.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    if head == 126 {
        return Err(Graph6Error::LongHeader { offset: 0 });
    }
    let n = (head - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let total = pair_count(n);
    let expected = total.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            offset: 1 + body.len().min(expected),
            n,
            expected,
            found: body.len(),
        });
    }
    let mut bits = 0u64;
    for (chunk, &byte) in body.iter().enumerate() {
        let six = byte - 63;
        for b in 0..6 {
            if six >> (5 - b) & 1 == 1 {
                let k = chunk * 6 + b;
                if k >= total {
                    return Err(Graph6Error::Padding { offset: 1 + chunk });
                }
                bits |= 1 << k;
            }
        }
    }
    Ok(LabeledGraph::from_bits(n, bits).expect("bits lie within the pair range"))
}
