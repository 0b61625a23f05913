//! graph6 records: the printable-ASCII encoding of a simple graph's upper
//! adjacency triangle.
//!
//! A record is the size byte `63 + n` followed by ceil(C(n,2)/6) data bytes.
//! The data bits run through the upper triangle column by column —
//! x(0,1), x(0,2), x(1,2), x(0,3), ... — packed six per byte, high bit
//! first, each byte offset by 63. Only the one-byte size form (n < 63) is
//! supported; that covers everything this toolkit runs on.

use crate::graph::Graph;
use thiserror::Error;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { byte: u8, offset: usize },
    #[error("multi-byte size field at offset {offset}: orders >= 63 are not supported")]
    OrderTooLarge { offset: usize },
    #[error("record truncated: expected {expected} data bytes after the size byte, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage starting at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in final data byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph order {n} exceeds the graph6 single-byte limit of 62")]
    TooLargeToEmit { n: usize },
}

/// Number of data bytes for an order-`n` record.
fn data_len(n: usize) -> usize {
    (n * (n - 1) / 2 + 5) / 6
}

/// Parses one graph6 record. An optional `>>graph6<<` header is stripped,
/// as is a trailing newline.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let size = bytes[0];
    if !(63..=126).contains(&size) {
        return Err(Graph6Error::InvalidByte {
            byte: size,
            offset: 0,
        });
    }
    if size == 126 {
        return Err(Graph6Error::OrderTooLarge { offset: 0 });
    }
    let n = (size - 63) as usize;

    let expected = if n < 2 { 0 } else { data_len(n) };
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            offset: 1 + expected,
        });
    }

    let mut g = Graph::empty(n).expect("n <= 62");
    let nbits = n * n.saturating_sub(1) / 2;
    let mut bit = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte {
                    byte,
                    offset: 1 + bit / 6,
                });
            }
            let val = byte - 63;
            if (val >> (5 - bit % 6)) & 1 == 1 {
                g.add_edge_checked(i, j).expect("in range");
            }
            bit += 1;
            if bit == nbits {
                break 'cols;
            }
        }
    }
    // Remaining pad bits of the final byte must be zero; also validate any
    // byte ranges the loop above never touched (n < 2 has no data).
    if expected > 0 {
        let last = data[expected - 1];
        if !(63..=126).contains(&last) {
            return Err(Graph6Error::InvalidByte {
                byte: last,
                offset: expected,
            });
        }
        let used = nbits - 6 * (expected - 1);
        let pad_mask = (1u8 << (6 - used)) - 1;
        if (last - 63) & pad_mask != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: expected });
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 record (inverse of [`parse_graph6`]).
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::TooLargeToEmit { n });
    }
    let mut out = String::with_capacity(1 + data_len(n.max(1)));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}
