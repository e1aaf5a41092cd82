//! graph6 codec for orders up to [`MAX_ORDER`].
//!
//! The order is a single byte `n + 63`. The upper triangle of the adjacency
//! matrix follows, read column by column (`x(0,1), x(0,2), x(1,2), x(0,3),
//! ...`), packed six bits per byte most significant bit first, each group
//! offset by 63. The final group is padded with zero bits.
//!
//! Only the plain single-graph line is accepted: no `>>graph6<<` header,
//! no sparse6 (`:`) or digraph6 (`&`) lines, no multi-byte order header.

use alloc::string::String;
use alloc::vec;

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_ORDER};

const BIAS: u8 = 63;

fn edge_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A trailing `\n` or `\r\n` is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line
        .strip_suffix('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .unwrap_or(line)
        .as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    match head {
        b':' | b'&' => return Err(Graph6Error::UnsupportedVariant { offset: 0 }),
        126 => return Err(Graph6Error::UnsupportedOrder { offset: 0 }),
        b if !(BIAS..=126).contains(&b) => {
            return Err(Graph6Error::InvalidByte { offset: 0, byte: b })
        }
        _ => {}
    }
    let n = (head - BIAS) as usize;
    debug_assert!(n <= MAX_ORDER);

    if let Some(k) = body.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte {
            offset: k + 1,
            byte: body[k],
        });
    }
    let expected = edge_bytes(n);
    if body.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            offset: 1,
            order: n,
            expected,
            found: body.len(),
        });
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let padding = expected * 6 - bit_count;
    if let Some(&last) = body.last() {
        if (last - BIAS) & ((1u8 << padding) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding { offset: body.len() });
        }
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - BIAS;
            if group & (0x20 >> (k % 6)) != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(adj))
}

/// Encodes a graph as a graph6 line without a trailing newline.
///
/// Every [`Graph`] already satisfies the order limit, so this cannot fail.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + edge_bytes(n));
    out.push((n as u8 + BIAS) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.row(i) & (1 << j) != 0 {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((group + BIAS) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + BIAS) as char);
    }
    out
}
