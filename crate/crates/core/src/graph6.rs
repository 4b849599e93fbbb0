//! The graph6 exchange format: `N(n)` header followed by the upper triangle
//! of the adjacency matrix, column by column, six bits per printable byte.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graph6 parse error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} is not a graph6 character (63..=126)")]
    BadByte(u8),
    #[error("input ends early: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after the adjacency bits")]
    Trailing,
    #[error("non-zero padding bits")]
    Padding,
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n) / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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

pub fn read_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let base = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &text.as_bytes()[base..];
    let err = |offset: usize, kind| Graph6Error {
        offset: base + offset,
        kind,
    };
    if bytes.is_empty() {
        return Err(err(0, Graph6ErrorKind::Empty));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, Graph6ErrorKind::BadByte(bytes[pos])));
    }
    let value = |b: u8| (b - 63) as usize;
    let take = |from: usize, count: usize| -> Result<usize, Graph6Error> {
        if bytes.len() < from + count {
            return Err(err(
                bytes.len(),
                Graph6ErrorKind::Truncated {
                    expected: from + count,
                    found: bytes.len(),
                },
            ));
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0, |acc, &b| (acc << 6) | value(b)))
    };
    let (n, mut pos) = if bytes[0] != 126 {
        (value(bytes[0]), 1)
    } else if bytes.get(1) != Some(&126) {
        (take(1, 3)?, 4)
    } else {
        (take(2, 6)?, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() < pos + needed {
        return Err(err(
            bytes.len(),
            Graph6ErrorKind::Truncated {
                expected: pos + needed,
                found: bytes.len(),
            },
        ));
    }
    if bytes.len() > pos + needed {
        return Err(err(pos + needed, Graph6ErrorKind::Trailing));
    }

    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = value(bytes[pos + bit / 6]);
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bits % 6 != 0 {
        pos += needed - 1;
        let pad_mask = (1 << (6 - bits % 6)) - 1;
        if value(bytes[pos]) & pad_mask != 0 {
            return Err(err(pos, Graph6ErrorKind::Padding));
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 only encodes simple graphs"))
}

/// Reads one graph per non-empty line. Errors carry the byte offset within
/// the whole text.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.trim().is_empty() {
            let g = read_graph6(trimmed).map_err(|e| Graph6Error {
                offset: offset + e.offset,
                kind: e.kind,
            })?;
            graphs.push(g);
        }
        offset += line.len();
    }
    Ok(graphs)
}
