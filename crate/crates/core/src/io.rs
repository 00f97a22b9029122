//! Edge-list and graph6 serialization.
//!
//! Edge-list text: a header line `n m`, then `m` lines `u v` with `u < v`
//! in lexicographic order, LF-terminated. Readers accept either endpoint
//! order and any line order; writers always emit the canonical form.
//!
//! graph6 is the header-free nauty encoding: `N(n)` followed by the upper
//! triangle of the adjacency matrix, column by column, six bits per byte
//! offset by 63.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::UnsupportedHeader(format!("unknown graph format {other:?}"))),
        }
    }
}

pub fn read_graph(bytes: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => read_edge_list(bytes),
        Format::Graph6 => read_graph6(bytes),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> Vec<u8> {
    match format {
        Format::EdgeList => write_edge_list(g).into_bytes(),
        Format::Graph6 => write_graph6(g).into_bytes(),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_edge_list(bytes: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
        Error::parse_line(line, "input is not valid UTF-8")
    })?;
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse_line(1, "missing header line \"n m\""))?;
    let [n, m] = parse_pair(hline, header)?;

    let mut b = GraphBuilder::new(n);
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let [u, v] = parse_pair(lineno, line)?;
        b.add_edge(u, v).map_err(|e| Error::parse_line(lineno, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse_line(
            hline,
            format!("header declares {m} edges but {seen} were given"),
        ));
    }
    Ok(b.build())
}

fn parse_pair(lineno: usize, line: &str) -> Result<[usize; 2]> {
    let mut it = line.split_ascii_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse_line(lineno, "expected two integers"))?;
        tok.parse::<usize>()
            .map_err(|_| Error::parse_line(lineno, format!("invalid integer {tok:?}")))
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err(Error::parse_line(lineno, "trailing tokens"));
    }
    Ok(pair)
}

const G6_MAX: usize = 68_719_476_735;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        assert!(n <= G6_MAX, "graph6 cannot encode {n} vertices");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 encoding with a trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    out.push(b'\n');
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn read_graph6(bytes: &[u8]) -> Result<Graph> {
    if bytes.starts_with(b">>") {
        return Err(Error::UnsupportedHeader(
            "graph6 header lines are not accepted; strip \">>graph6<<\"".into(),
        ));
    }
    let mut body = bytes;
    while let Some((&last, rest)) = body.split_last() {
        if last == b'\n' || last == b'\r' {
            body = rest;
        } else {
            break;
        }
    }
    if let Some(pos) = body.iter().position(|&c| c == b'\n') {
        return Err(Error::parse_byte(pos, "expected a single graph"));
    }
    if body.first() == Some(&b':') || body.first() == Some(&b'&') {
        return Err(Error::UnsupportedHeader("sparse6/digraph6 input".into()));
    }
    for (i, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(Error::parse_byte(i, format!("byte {c:#04x} outside the graph6 range")));
        }
    }
    let val = |i: usize| (body[i] - 63) as usize;
    let (n, start) = match body {
        [] => return Err(Error::parse_byte(0, "empty input")),
        [126, 126, ..] => {
            if body.len() < 8 {
                return Err(Error::parse_byte(body.len(), "truncated size field"));
            }
            ((2..8).fold(0, |acc, i| (acc << 6) | val(i)), 8)
        }
        [126, ..] => {
            if body.len() < 4 {
                return Err(Error::parse_byte(body.len(), "truncated size field"));
            }
            ((1..4).fold(0, |acc, i| (acc << 6) | val(i)), 4)
        }
        _ => (val(0), 1),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = start + nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse_byte(
            body.len().min(expected),
            format!("expected {expected} bytes for {n} vertices, found {}", body.len()),
        ));
    }
    let mut b = GraphBuilder::new(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = val(start + k / 6);
            if byte >> (5 - k % 6) & 1 == 1 {
                b.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        if val(expected - 1) & ((1 << pad) - 1) != 0 {
            return Err(Error::parse_byte(expected - 1, "nonzero padding bits"));
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn edge_list_examples() {
        let g = read_edge_list(b"3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(write_edge_list(&k(3)), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn edge_list_lenient_reading() {
        let g = read_edge_list(b"3 2\r\n2 1\n\n0 1\n").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        let err = read_edge_list(b"3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { location: crate::error::Location::Line(3), .. }), "{err}");
        let err = read_edge_list(b"3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { location: crate::error::Location::Line(1), .. }));
        let err = read_edge_list(b"3 1\n1 1\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
        assert!(read_edge_list(b"").is_err());
    }

    #[test]
    fn graph6_k5() {
        let g = read_graph6(b"D~{").unwrap();
        assert_eq!(g, k(5));
        assert_eq!(write_graph6(&g), "D~{\n");
    }

    #[test]
    fn graph6_known_encodings() {
        // Standard nauty outputs.
        assert_eq!(write_graph6(&Graph::empty(0)), "?\n");
        assert_eq!(write_graph6(&Graph::empty(1)), "@\n");
        assert_eq!(write_graph6(&Graph::from_edges(2, [(0, 1)]).unwrap()), "A_\n");
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&p5), "DhC\n");
    }

    #[test]
    fn graph6_large_size_field() {
        let g = Graph::from_edges(64, [(0, 63), (10, 20)]).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(read_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_headers_and_garbage() {
        assert!(matches!(read_graph6(b">>graph6<<D~{"), Err(Error::UnsupportedHeader(_))));
        assert!(matches!(read_graph6(b"D~"), Err(Error::Parse { .. })));
        assert!(matches!(read_graph6(b"D~ "), Err(Error::Parse { .. })));
        // Padding bits must be zero: '|' = 61 sets the low bit.
        assert!(read_graph6(b"D~|").is_err());
    }
}
