//! Graph file formats: graph6 (bit-exact), edge lists, and write-only DOT.
//!
//! graph6 layout for `n <= 62`: one header byte `n + 63`, then the upper
//! triangle of the adjacency matrix read column by column (column `j`, rows
//! `0..j`), packed big-endian into 6-bit groups, each group offset by 63 and
//! zero-padded to a multiple of 6 bits.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use std::fmt::Write as _;

/// Encodes a graph as a single graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc: u32 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u32::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push((acc as u8 + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push((acc as u8 + 63) as char);
    }
    out
}

/// Decodes one graph6 line. Rejects multi-byte headers (`n > 62`), characters
/// outside `63..=126`, truncated or overlong bit sections, and nonzero
/// padding bits, reporting the byte offset of the problem.
pub fn read_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6Parse {
        offset,
        reason: reason.to_string(),
    };
    let &header = bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if header == b'~' {
        return Err(err(0, "multi-byte header: n > 62 is unsupported"));
    }
    if !(63..=125).contains(&header) {
        return Err(err(0, "header byte outside 63..=125"));
    }
    let n = (header - 63) as usize;
    debug_assert!(n <= MAX_VERTICES);

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < 1 + nbytes {
        return Err(err(bytes.len(), "truncated bit section"));
    }
    if bytes.len() > 1 + nbytes {
        return Err(err(1 + nbytes, "trailing bytes after bit section"));
    }

    let mut g = Graph::empty(n)?;
    let mut idx = 0usize; // bit cursor over the upper triangle
    let mut col = 1usize;
    let mut row = 0usize;
    for (pos, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(pos, "data byte outside 63..=126"));
        }
        let group = b - 63;
        for k in (0..6).rev() {
            let bit = (group >> k) & 1;
            if idx < nbits {
                if bit == 1 {
                    g.set_edge(row, col);
                }
                idx += 1;
                row += 1;
                if row == col {
                    row = 0;
                    col += 1;
                }
            } else if bit != 0 {
                return Err(err(pos, "nonzero padding bit"));
            }
        }
    }
    g.validate()?;
    Ok(g)
}

/// Writes an edge list: a `# n=..` header comment, then one `u v` line per
/// edge, 0-based, in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# n={}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads an edge list. Lines starting with `#` are comments; a `# n=K`
/// comment pins the vertex count (otherwise it is `max vertex + 1`).
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_v = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim().replace(' ', "");
            if let Some(v) = comment.strip_prefix("n=") {
                let n: usize = v.parse().map_err(|_| Error::EdgeListParse {
                    line: lineno,
                    reason: format!("bad vertex count in directive: {v:?}"),
                })?;
                declared_n = Some(n);
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::EdgeListParse {
                    line: lineno,
                    reason: "expected exactly two vertex indices".into(),
                })
            }
        };
        let parse = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::EdgeListParse {
                line: lineno,
                reason: format!("bad vertex index {s:?}"),
            })
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(Error::EdgeListParse {
                line: lineno,
                reason: format!("loop at vertex {u}"),
            });
        }
        max_v = max_v.max(u).max(v);
        edges.push((u, v));
    }
    let n = match declared_n {
        Some(n) => {
            if !edges.is_empty() && max_v >= n {
                return Err(Error::EdgeListParse {
                    line: 0,
                    reason: format!("vertex {max_v} exceeds declared n={n}"),
                });
            }
            n
        }
        None if edges.is_empty() => 0,
        None => max_v + 1,
    };
    Graph::from_edges(n, &edges)
}

/// Emits a plain undirected DOT graph. Write-only; never parsed back.
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
