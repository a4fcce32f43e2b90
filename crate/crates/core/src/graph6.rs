//! graph6 codec, short form only (`n <= 62`).
//!
//! The header is the single byte `n + 63`. The upper triangle of the
//! adjacency matrix is read column by column (`x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`), packed big-endian into 6-bit groups padded with zeros, and
//! each group is written as `group + 63`.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Largest order representable in the short graph6 form.
pub const MAX_GRAPH6_ORDER: usize = 62;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line (surrounding whitespace is ignored; an optional
/// `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    if head == 126 {
        return Err(Error::Graph6("long-form header (n > 62) is not supported".into()));
    }
    let n = (head - 63) as usize;
    let body = &bytes[1..];
    if body.len() != body_len(n) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for n = {n}, found {}",
            body_len(n),
            body.len()
        )));
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if !total_bits.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        let pad = 6 - total_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_adjacency(adj)
}

/// Encodes `g` for its current labeling (not an isomorphism-canonical form).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::TooManyVertices { n, max: MAX_GRAPH6_ORDER });
    }
    let mut out = String::with_capacity(1 + body_len(n));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent bit-level encoder: builds the column-order bit string,
    /// pads it and maps every 6-bit chunk to a character.
    fn oracle_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| (a << 1) | b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn known_encodings() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(oracle_encode(4, &k4.edges()), "C~");
        assert_eq!(to_graph6(&k4).unwrap(), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);

        assert_eq!(oracle_encode(5, &[]), "D??");
        assert_eq!(to_graph6(&Graph::empty(5).unwrap()).unwrap(), "D??");

        // "A_" carries the single bit x(0,1) = 1, i.e. K2; "A?" is 2K1.
        assert_eq!(oracle_encode(2, &[(0, 1)]), "A_");
        assert_eq!(parse_graph6("A_").unwrap().size(), 1);
        assert_eq!(parse_graph6("A?").unwrap().size(), 0);

        // path a-c, a-e, b-d, d-e from a well-known reference encoding
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(oracle_encode(5, &g.edges()), "DQc");
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_graph6("B").is_err());
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C\x7f").is_err());
        assert!(parse_graph6("~?@??").is_err());
        // n = 2 has one data bit; setting a padding bit is invalid
        assert!(parse_graph6("A@").is_err());
        assert!(to_graph6(&Graph::empty(63).unwrap()).is_err());
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().size(), 6);
    }
}
