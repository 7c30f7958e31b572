//! Text formats: a line-based edge list, graph6, and a digraph variant.
//!
//! Edge list: first meaningful line is the vertex count `n`, every further
//! line is one edge `u v` with `0 <= u, v < n`. Blank lines are skipped and
//! `#` starts a comment that runs to the end of the line.
//!
//! Digraph text: same layout with arc lines `u > v`.
//!
//! graph6: the standard printable encoding of an undirected graph — the
//! vertex count followed by the upper adjacency triangle in column-major
//! order, packed into 6-bit groups offset by 63. Sizes up to 62 use one
//! leading byte `n + 63`; sizes 63..=258047 use `~` followed by three bytes
//! carrying 18 bits of `n`.

use super::{DirectedGraph, UndirectedGraph};
use std::collections::HashSet;
use std::fmt;

/// Input formats for undirected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

/// Errors from the text parsers. `Syntax` pins the 1-based line (and, for
/// graph6, the byte offset within that line); `FormatViolation` reports a
/// structurally invalid document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax {
        line: usize,
        offset: Option<usize>,
        message: String,
    },
    FormatViolation {
        message: String,
    },
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            offset: None,
            message: message.into(),
        }
    }

    fn at_offset(line: usize, offset: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            offset: Some(offset),
            message: message.into(),
        }
    }

    fn violation(message: impl Into<String>) -> Self {
        ParseError::FormatViolation {
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax {
                line,
                offset: Some(off),
                message,
            } => write!(f, "line {line}, offset {off}: {message}"),
            ParseError::Syntax {
                line,
                offset: None,
                message,
            } => write!(f, "line {line}: {message}"),
            ParseError::FormatViolation { message } => write!(f, "format violation: {message}"),
        }
    }
}

impl std::error::Error for ParseError {}

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let body = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let body = body.trim();
        if body.is_empty() {
            None
        } else {
            Some((idx + 1, body))
        }
    })
}

fn parse_count(line_no: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| ParseError::at(line_no, format!("expected {what}, got `{token}`")))
}

fn check_endpoint(line_no: usize, v: usize, n: usize) -> Result<(), ParseError> {
    if v >= n {
        Err(ParseError::at(
            line_no,
            format!("vertex {v} out of range for n = {n}"),
        ))
    } else {
        Ok(())
    }
}

/// Parses a single undirected graph in the requested format.
///
/// For [`GraphFormat::Graph6`] the text must contain exactly one graph line;
/// use [`parse_graph6`] to read a multi-line stream.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<UndirectedGraph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => {
            let mut lines = meaningful_lines(text);
            let (line_no, body) = lines
                .next()
                .ok_or_else(|| ParseError::violation("empty graph6 document"))?;
            if let Some((extra, _)) = lines.next() {
                return Err(ParseError::at(
                    extra,
                    "expected a single graph6 line, found more than one",
                ));
            }
            parse_graph6_line(body, line_no)
        }
    }
}

/// Parses the edge-list format.
pub fn parse_edge_list(text: &str) -> Result<UndirectedGraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for (line_no, body) in meaningful_lines(text) {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        match n {
            None => {
                if tokens.len() != 1 {
                    return Err(ParseError::at(
                        line_no,
                        "expected the vertex count alone on the first line",
                    ));
                }
                n = Some(parse_count(line_no, tokens[0], "vertex count")?);
            }
            Some(n) => {
                if tokens.len() != 2 {
                    return Err(ParseError::at(line_no, "expected an edge line `u v`"));
                }
                let u = parse_count(line_no, tokens[0], "vertex id")?;
                let v = parse_count(line_no, tokens[1], "vertex id")?;
                check_endpoint(line_no, u, n)?;
                check_endpoint(line_no, v, n)?;
                if u == v {
                    return Err(ParseError::at(line_no, format!("self-loop at vertex {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(ParseError::at(
                        line_no,
                        format!("duplicate edge ({u}, {v})"),
                    ));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| ParseError::violation("missing vertex-count line"))?;
    Ok(UndirectedGraph::new(n, &edges).expect("validated while parsing"))
}

/// Parses the digraph text format (`u > v` arc lines).
pub fn parse_digraph(text: &str) -> Result<DirectedGraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for (line_no, body) in meaningful_lines(text) {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        match n {
            None => {
                if tokens.len() != 1 {
                    return Err(ParseError::at(
                        line_no,
                        "expected the vertex count alone on the first line",
                    ));
                }
                n = Some(parse_count(line_no, tokens[0], "vertex count")?);
            }
            Some(n) => {
                if tokens.len() != 3 || tokens[1] != ">" {
                    return Err(ParseError::at(line_no, "expected an arc line `u > v`"));
                }
                let u = parse_count(line_no, tokens[0], "vertex id")?;
                let v = parse_count(line_no, tokens[2], "vertex id")?;
                check_endpoint(line_no, u, n)?;
                check_endpoint(line_no, v, n)?;
                if u == v {
                    return Err(ParseError::at(line_no, format!("self-loop at vertex {u}")));
                }
                if !seen.insert((u, v)) {
                    return Err(ParseError::at(line_no, format!("duplicate arc {u} > {v}")));
                }
                arcs.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| ParseError::violation("missing vertex-count line"))?;
    Ok(DirectedGraph::new(n, &arcs).expect("validated while parsing"))
}

/// Parses every nonempty line of `text` as one graph6 graph.
pub fn parse_graph6(text: &str) -> Result<Vec<UndirectedGraph>, ParseError> {
    meaningful_lines(text)
        .map(|(line_no, body)| parse_graph6_line(body, line_no))
        .collect()
}

const G6_HEADER: &str = ">>graph6<<";

fn parse_graph6_line(line: &str, line_no: usize) -> Result<UndirectedGraph, ParseError> {
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(ParseError::at_offset(
            line_no,
            pos,
            format!("byte 0x{:02x} outside graph6 range 63..=126", bytes[pos]),
        ));
    }
    if bytes.is_empty() {
        return Err(ParseError::at(line_no, "empty graph6 line"));
    }
    let (n, data_start) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(ParseError::violation(
                "graph6 sizes above 258047 are not supported",
            ));
        }
        if bytes.len() < 4 {
            return Err(ParseError::at(line_no, "truncated graph6 size field"));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        if n < 63 {
            return Err(ParseError::at_offset(
                line_no,
                0,
                "long size field used for a small graph",
            ));
        }
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let pair_count = n * (n.saturating_sub(1)) / 2;
    let want_bytes = pair_count.div_ceil(6);
    let data = &bytes[data_start..];
    if data.len() != want_bytes {
        return Err(ParseError::at(
            line_no,
            format!(
                "graph6 body for n = {n} needs {want_bytes} bytes, found {}",
                data.len()
            ),
        ));
    }
    let bit = |i: usize| -> bool {
        let byte = data[i / 6] - 63;
        byte >> (5 - i % 6) & 1 == 1
    };
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    while i < want_bytes * 6 {
        if bit(i) {
            return Err(ParseError::at_offset(
                line_no,
                data_start + i / 6,
                "nonzero padding bits in graph6 body",
            ));
        }
        i += 1;
    }
    Ok(UndirectedGraph::new(n, &edges).expect("triangle bits give a simple graph"))
}

/// Serializes to the edge-list format.
pub fn to_edge_list(g: &UndirectedGraph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Serializes to the digraph text format.
pub fn to_digraph_text(d: &DirectedGraph) -> String {
    let mut out = format!("{}\n", d.n());
    for &(u, v) in d.arcs() {
        out.push_str(&format!("{u} > {v}\n"));
    }
    out
}

/// Serializes to a single graph6 line (no trailing newline).
pub fn to_graph6(g: &UndirectedGraph) -> String {
    let n = g.n();
    assert!(n <= 258047, "graph6 serialization limited to n <= 258047");
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}
