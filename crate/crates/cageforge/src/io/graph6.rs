//! The graph6 format: a printable-ASCII encoding of an undirected graph as
//! a size prefix followed by the upper triangle of the adjacency matrix,
//! read column by column, six bits per byte, each byte offset by 63.
//!
//! Size prefix: n itself for n ≤ 62 (one byte), `~` plus 18 bits for
//! n ≤ 258047, `~~` plus 36 bits beyond that. Writers here always emit the
//! shortest form and no trailing newline; the reader accepts an optional
//! `>>graph6<<` header and one trailing newline.

use thiserror::Error;

use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

const OFFSET: u8 = 63;
const MAX_N: u64 = (1 << 36) - 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("input ends at byte {offset}; more bytes expected")]
    UnexpectedEnd { offset: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 alphabet 0x3f..=0x7e")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("{trailing} unexpected trailing byte(s) starting at offset {offset}")]
    TrailingBytes { offset: usize, trailing: usize },
    #[error("padding bits at offset {offset} are not zero")]
    DirtyPadding { offset: usize },
    #[error("graph on {n} vertices exceeds the graph6 limit of 2^36−1")]
    TooLarge { n: usize },
}

/// Encodes without the optional header.
pub fn to_graph6(graph: &Graph) -> Result<String, Graph6Error> {
    let n = graph.n();
    if n as u64 > MAX_N {
        return Err(Graph6Error::TooLarge { n });
    }
    let mut out = Vec::new();
    size_bytes(n as u64, &mut out);
    let mut bits: u8 = 0;
    let mut filled: u8 = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            bits = (bits << 1) | u8::from(graph.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(bits + OFFSET);
                bits = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((bits << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Encodes with the `>>graph6<<` header prepended.
pub fn to_graph6_with_header(graph: &Graph) -> Result<String, Graph6Error> {
    Ok(format!("{HEADER}{}", to_graph6(graph)?))
}

fn size_bytes(n: u64, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258047 {
        out.push(126);
        push_groups(n, 3, out);
    } else {
        out.push(126);
        out.push(126);
        push_groups(n, 6, out);
    }
}

fn push_groups(n: u64, groups: u32, out: &mut Vec<u8>) {
    for g in (0..groups).rev() {
        out.push(((n >> (6 * g)) & 0x3f) as u8 + OFFSET);
    }
}

/// Decodes a graph6 string; tolerates the optional header and a single
/// trailing newline, rejects everything else with a byte offset.
pub fn from_graph6(input: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = input.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(HEADER.as_bytes()) {
        bytes = rest;
        base = HEADER.len();
    }
    if let Some(rest) = bytes.strip_suffix(b"\r\n").or_else(|| bytes.strip_suffix(b"\n")) {
        bytes = rest;
    }
    let at = |offset: usize| base + offset;

    let mut pos = 0;
    let next = |pos: &mut usize| -> Result<u8, Graph6Error> {
        let &byte = bytes.get(*pos).ok_or(Graph6Error::UnexpectedEnd { offset: at(*pos) })?;
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset: at(*pos), byte });
        }
        *pos += 1;
        Ok(byte - OFFSET)
    };

    let first = next(&mut pos)?;
    let n: u64 = if first < 63 {
        first as u64
    } else {
        // one or two '~' markers select the 18- or 36-bit size form
        let mut groups = 3;
        let mut probe = next(&mut pos)?;
        if probe == 63 {
            groups = 6;
            probe = next(&mut pos)?;
        }
        let mut n = probe as u64;
        for _ in 1..groups {
            n = (n << 6) | next(&mut pos)? as u64;
        }
        n
    };

    // u128: n can be up to 2^36−1, so n² overflows u64
    let bit_count = (n as u128) * (n.saturating_sub(1) as u128) / 2;
    let wanted = bit_count.div_ceil(6);
    if ((bytes.len() - pos) as u128) < wanted {
        return Err(Graph6Error::UnexpectedEnd { offset: at(bytes.len()) });
    }
    let body_bytes = wanted as usize;
    let bit_count = bit_count as u64;
    if bytes.len() > pos + body_bytes {
        return Err(Graph6Error::TrailingBytes {
            offset: at(pos + body_bytes),
            trailing: bytes.len() - (pos + body_bytes),
        });
    }

    let mut edges = Vec::new();
    let mut bit_index = 0u64;
    let mut column = (0u32, 1u32); // (i, j) walking the upper triangle
    for _ in 0..body_bytes {
        let offset = at(pos);
        let group = next(&mut pos)?;
        for shift in (0..6).rev() {
            let bit = (group >> shift) & 1;
            if bit_index < bit_count {
                if bit == 1 {
                    edges.push(column);
                }
                bit_index += 1;
                column.0 += 1;
                if column.0 == column.1 {
                    column = (0, column.1 + 1);
                }
            } else if bit == 1 {
                return Err(Graph6Error::DirtyPadding { offset });
            }
        }
    }
    Ok(Graph::new(n as usize, &edges).expect("decoded indices are below n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n as usize, &edges).unwrap()
    }

    /// Golden values validated against an independent reference encoder.
    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&cycle(5)).unwrap(), "Dhc");
        let mut k4 = Vec::new();
        for a in 0u32..4 {
            for b in a + 1..4 {
                k4.push((a, b));
            }
        }
        assert_eq!(to_graph6(&Graph::new(4, &k4).unwrap()).unwrap(), "C~");
        assert_eq!(to_graph6(&Graph::new(1, &[]).unwrap()).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::new(0, &[]).unwrap()).unwrap(), "?");
        let mut petersen = vec![(0u32, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        petersen.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
        petersen.extend((0..5).map(|i| (i, i + 5)));
        assert_eq!(to_graph6(&Graph::new(10, &petersen).unwrap()).unwrap(), "IheA@GUAo");
        // three-byte size form kicks in at n = 63
        assert!(to_graph6(&cycle(63)).unwrap().starts_with("~??~"));
    }

    #[test]
    fn header_variant() {
        assert_eq!(to_graph6_with_header(&cycle(5)).unwrap(), ">>graph6<<Dhc");
        assert_eq!(from_graph6(">>graph6<<Dhc").unwrap(), cycle(5));
    }

    #[test]
    fn round_trips() {
        for g in [cycle(5), cycle(6), cycle(62), cycle(63), cycle(100), Graph::new(0, &[]).unwrap()] {
            let encoded = to_graph6(&g).unwrap();
            assert_eq!(from_graph6(&encoded).unwrap(), g);
            // deterministic bytes
            assert_eq!(to_graph6(&g).unwrap(), encoded);
        }
    }

    #[test]
    fn tolerates_one_trailing_newline() {
        assert_eq!(from_graph6("Dhc\n").unwrap(), cycle(5));
        assert_eq!(from_graph6("Dhc\r\n").unwrap(), cycle(5));
        // only one newline is forgiven; the second is left over
        assert_eq!(
            from_graph6("Dhc\n\n"),
            Err(Graph6Error::TrailingBytes { offset: 3, trailing: 1 })
        );
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(from_graph6(""), Err(Graph6Error::UnexpectedEnd { offset: 0 }));
        assert_eq!(from_graph6("D"), Err(Graph6Error::UnexpectedEnd { offset: 1 }));
        assert_eq!(from_graph6("D c"), Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' }));
        assert_eq!(from_graph6("Dhcc"), Err(Graph6Error::TrailingBytes { offset: 3, trailing: 1 }));
        // '~' size marker with nothing after it
        assert_eq!(from_graph6("~"), Err(Graph6Error::UnexpectedEnd { offset: 1 }));
        // header offsets count the header bytes
        assert_eq!(from_graph6(">>graph6<<"), Err(Graph6Error::UnexpectedEnd { offset: 10 }));
        // C5 needs 10 bits; flipping a padding bit must be caught
        let dirty = "Dhd"; // last byte 'd' = 'c' + 1 sets the lowest padding bit
        assert_eq!(from_graph6(dirty), Err(Graph6Error::DirtyPadding { offset: 2 }));
    }

    #[test]
    fn big_size_forms_decode() {
        // hand-built: n = 258048 forces the 36-bit form
        let mut bytes = Vec::new();
        super::size_bytes(258048, &mut bytes);
        assert_eq!(bytes[0], 126);
        assert_eq!(bytes[1], 126);
        assert_eq!(bytes.len(), 8);
    }

    #[test]
    fn maximal_declared_size_does_not_overflow() {
        // "~~" plus six '~' groups declares n = 2^36−1; the body length for
        // that n overflows 64-bit bit arithmetic if computed naively
        assert_eq!(
            from_graph6("~~~~~~~~"),
            Err(Graph6Error::UnexpectedEnd { offset: 8 })
        );
        assert_eq!(
            from_graph6("~~~~~~~~~~"),
            Err(Graph6Error::UnexpectedEnd { offset: 10 })
        );
    }
}
