//! The graph6 text format.
//!
//! A graph6 string is `N(n) R(x)`: the order `n` in one byte (`n + 63`) or,
//! for `63 <= n <= 258047`, the byte `~` followed by three 6-bit groups.
//! `R(x)` packs the upper triangle of the adjacency matrix column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into 6-bit groups, big-endian
//! within each group, zero padded, each group offset by 63.

use crate::error::{Error, Result};
use crate::graphs::simple::{SimpleGraph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let trimmed = text.trim_end();
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(err(base, "empty input"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte 0x{b:02x} outside the printable range 63..=126")));
        }
    }

    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else {
        if body.len() >= 2 && body[1] == 126 {
            return Err(Error::capacity("graph6 order", u64::MAX, MAX_ORDER as u64));
        }
        if body.len() < 4 {
            return Err(err(base + body.len(), "truncated order field"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n < 63 {
            return Err(err(base + 1, format!("order {n} must use the one-byte form")));
        }
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(Error::capacity("graph6 order", n, MAX_ORDER as u64));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[pos..];
    if data.len() < need {
        return Err(err(base + body.len(), format!("expected {need} data bytes, found {}", data.len())));
    }
    if data.len() > need {
        return Err(err(base + pos + need, "trailing bytes after adjacency data"));
    }

    let mut g = SimpleGraph::empty(n)?;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[need - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            pos += need - 1;
            return Err(err(base + pos, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6 (no header, no newline).
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_reference_strings() {
        // 'D' = 5 vertices; '?' = 000000, '{' = 111100: bits x(0,4)..x(3,4) set.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);

        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));

        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);

        // The petgraph fixture: edges ac, ae, bd, de.
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_graph6("A ").unwrap_err() {
            // trailing whitespace is trimmed, so this is a missing data byte
            Error::Graph6 { offset, .. } => assert_eq!(offset, 1),
            e => panic!("unexpected {e:?}"),
        }
        match parse_graph6("D?\x7f").unwrap_err() {
            Error::Graph6 { offset, .. } => assert_eq!(offset, 2),
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(parse_graph6("A_?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
    }

    #[test]
    fn large_orders_use_long_form() {
        let g = SimpleGraph::cycle(64).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        // n = 65 is refused
        let too_big = format!("~?@@{}", "?".repeat(65 * 64 / 12));
        assert!(matches!(parse_graph6(&too_big), Err(Error::Capacity { .. })));
    }
}
